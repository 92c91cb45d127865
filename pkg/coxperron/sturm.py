# -*- coding: utf-8 -*-
"""
Sturm sequences and real root counting.

A generalized Sturm sequence for a pair ``(f, g)`` is the negated
remainder sequence ``f_0 = f``, ``f_1 = g``,
``f_{k+1} = -rem(f_{k-1}, f_k)``, stopped at the last nonzero element.
Each element is stored as its primitive integer part. Dividing by a
positive content never changes a sign, so the chain counts exactly
like the rational one.

For ``g = f'`` the difference ``w(a) - w(b)`` of sign changes counts the
distinct real roots of ``f`` in ``(a, b)``. For a general ``g`` coprime
to ``f`` it is the Cauchy index of ``g/f`` over the interval.
"""

from collections import namedtuple
from decimal import Decimal, localcontext, ROUND_HALF_EVEN
from fractions import Fraction

from .errors import (CommonRootError, ConstantPolynomialError,
                     EndpointRootError, NotSquarefreeError,
                     ZeroPolynomialError)
from .polyring import (Poly, as_rational, cauchy_bound, derivative, evaluate,
                       primitive, resultant)

PLUS_INFINITY = 1
MINUS_INFINITY = -1


class Interval(namedtuple("Interval", ["lo", "hi"])):
    """
    A closed interval with rational endpoints.
    """
    __slots__ = ()

    def __new__(cls, lo, hi):
        lo, hi = as_rational(lo), as_rational(hi)
        if lo > hi:
            raise ValueError("interval endpoints out of order: {} > {}".format(lo, hi))
        return super(Interval, cls).__new__(cls, lo, hi)

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2

    def __contains__(self, x):
        return self.lo <= x <= self.hi

    def to_decimal(self):
        """
        Render the midpoint with as many decimal places as the width
        supports.
        """
        return decimal_string(self.midpoint, _digits_for(self.width))

    def to_json(self):
        return {"lo": str(self.lo), "hi": str(self.hi)}

    @classmethod
    def from_json(cls, data):
        return cls(Fraction(data["lo"]), Fraction(data["hi"]))


def _digits_for(width):
    digits = 1
    while width and Fraction(1, 10 ** digits) > width:
        digits += 1
    return digits


def decimal_string(x, digits):
    """Round the rational ``x`` to ``digits`` decimal places."""
    x = as_rational(x)
    with localcontext() as ctx:
        ctx.prec = digits + len(str(abs(x.numerator // x.denominator))) + 10
        value = Decimal(x.numerator) / Decimal(x.denominator)
        return str(value.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN))


def _sign(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def _count_changes(signs):
    count = 0
    previous = 0
    for s in signs:
        if s == 0:
            continue
        if previous and s != previous:
            count += 1
        previous = s
    return count


class SturmSequence(object):
    """
    A (generalized) Sturm chain.

    Parameters
    ----------
    chain : sequence of Poly
       The chain elements, first to last. They are stored as primitive
       integer polynomials.

    Normally built with :func:`build_sturm`.
    """

    def __init__(self, chain):
        chain = [c for c in chain]
        if not chain or any(c.is_zero for c in chain):
            raise ZeroPolynomialError("a Sturm chain has nonzero elements only")
        self.chain = tuple(primitive(c)[1] for c in chain)

    def __len__(self):
        return len(self.chain)

    def __iter__(self):
        return iter(self.chain)

    def __getitem__(self, k):
        return self.chain[k]

    def __repr__(self):
        return "SturmSequence({!r})".format(list(self.chain))

    def sign_changes_at(self, x):
        """Sign changes of the chain evaluated at the rational ``x``."""
        return _count_changes(_sign(evaluate(p, x)) for p in self.chain)

    def sign_changes_at_infinity(self, direction=PLUS_INFINITY):
        """
        Sign changes at ``+inf`` (``direction=1``) or ``-inf``
        (``direction=-1``), read off leading coefficients and degree
        parities.
        """
        if direction not in (PLUS_INFINITY, MINUS_INFINITY):
            raise ValueError("direction must be +1 or -1")
        signs = []
        for p in self.chain:
            s = _sign(p.leading)
            if direction == MINUS_INFINITY and p.degree % 2:
                s = -s
            signs.append(s)
        return _count_changes(signs)


def build_sturm(f, g):
    """
    The generalized Sturm sequence of ``(f, g)``.

    Remainders are sympy pseudo-remainders of the primitive parts,
    negated where ``lc**k`` is negative so that the signs match the
    Euclidean remainder sequence.

    Raises
    ------
    ZeroPolynomialError
       If either argument is zero.

    Examples
    --------
    >>> seq = build_sturm(Poly([-1, 0, 1]), Poly([0, 2]))
    >>> len(seq)
    3
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("a Sturm chain needs two nonzero polynomials")
    chain = [primitive(f)[1], primitive(g)[1]]
    while True:
        a, b = chain[-2], chain[-1]
        if a.degree < b.degree:
            r = a
        else:
            r = Poly.from_sympy(a.to_sympy().prem(b.to_sympy()))
            if b.leading < 0 and (a.degree - b.degree + 1) % 2:
                r = -r
        if r.is_zero:
            break
        chain.append(primitive(-r)[1])
    return SturmSequence(chain)


def sign_changes_at(seq, x):
    return seq.sign_changes_at(x)


def sign_changes_at_infinity(seq, direction=PLUS_INFINITY):
    return seq.sign_changes_at_infinity(direction)


def _check_interval(a, b):
    a, b = as_rational(a), as_rational(b)
    if not a < b:
        raise ValueError("need a < b, got [{}, {}]".format(a, b))
    return a, b


def count_real_roots(f, a, b):
    """
    Number of distinct real roots of ``f`` in the open interval ``(a, b)``.

    Raises
    ------
    ZeroPolynomialError
       If ``f`` is zero.
    EndpointRootError
       If ``f(a) == 0`` or ``f(b) == 0``.
    ValueError
       If ``a >= b``.
    """
    if f.is_zero:
        raise ZeroPolynomialError("the zero polynomial vanishes everywhere")
    a, b = _check_interval(a, b)
    if evaluate(f, a) == 0 or evaluate(f, b) == 0:
        raise EndpointRootError("an endpoint of [{}, {}] is a root".format(a, b))
    if f.degree < 1:
        return 0
    seq = build_sturm(f, derivative(f))
    return seq.sign_changes_at(a) - seq.sign_changes_at(b)


def count_all_real_roots(f):
    """Number of distinct real roots of ``f`` on the whole line."""
    if f.is_zero:
        raise ZeroPolynomialError("the zero polynomial vanishes everywhere")
    if f.degree < 1:
        return 0
    seq = build_sturm(f, derivative(f))
    return (seq.sign_changes_at_infinity(MINUS_INFINITY)
            - seq.sign_changes_at_infinity(PLUS_INFINITY))


def generalized_weight(f, g, a, b):
    """
    ``w(a) - w(b)`` for the generalized Sturm sequence of ``(f, g)``.

    This is the signed count of the roots of ``f`` in ``(a, b)`` where
    ``(f, g)`` passes from one sign change to none (``+1``) or from none
    to one (``-1``).

    Raises
    ------
    CommonRootError
       If ``f`` and ``g`` share a root.
    EndpointRootError
       If ``f`` vanishes at an endpoint.
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("a Sturm chain needs two nonzero polynomials")
    a, b = _check_interval(a, b)
    if evaluate(f, a) == 0 or evaluate(f, b) == 0:
        raise EndpointRootError("an endpoint of [{}, {}] is a root".format(a, b))
    if resultant(f, g) == 0:
        raise CommonRootError("f and g share a root")
    seq = build_sturm(f, g)
    return seq.sign_changes_at(a) - seq.sign_changes_at(b)


_SPLIT_FRACTIONS = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3),
                    Fraction(2, 5), Fraction(3, 5), Fraction(3, 7), Fraction(4, 7))


def _split_point(f, interval):
    for frac in _SPLIT_FRACTIONS:
        x = interval.lo + frac * interval.width
        if evaluate(f, x) != 0:
            return x
    k = 8
    while True:
        x = interval.lo + Fraction(1, k) * interval.width
        if evaluate(f, x) != 0:
            return x
        k += 1


def isolate_real_roots(f):
    """
    Disjoint isolating intervals for the real roots of a squarefree ``f``.

    The intervals are open-ended at non-roots, contain exactly one root
    each and are returned in increasing order.

    Raises
    ------
    NotSquarefreeError
       If ``f`` has a repeated root.
    """
    if f.is_zero:
        raise ZeroPolynomialError("the zero polynomial vanishes everywhere")
    if f.degree < 1:
        return []
    fp = derivative(f)
    if resultant(f, fp) == 0:
        raise NotSquarefreeError("f has a repeated root")
    seq = build_sturm(f, fp)
    bound = cauchy_bound(f)
    found = []
    pending = [(Interval(-bound, bound),
                seq.sign_changes_at(-bound) - seq.sign_changes_at(bound))]
    while pending:
        interval, count = pending.pop()
        if count == 0:
            continue
        if count == 1:
            found.append(interval)
            continue
        x = _split_point(f, interval)
        wx = seq.sign_changes_at(x)
        left = Interval(interval.lo, x)
        right = Interval(x, interval.hi)
        pending.append((left, seq.sign_changes_at(interval.lo) - wx))
        pending.append((right, wx - seq.sign_changes_at(interval.hi)))
    return sorted(found)


def refine_root(f, interval, eps):
    """
    Shrink an interval isolating a simple root of ``f`` to width at
    most ``eps`` by bisection.

    Parameters
    ----------
    f : Poly
    interval : Interval
       Must contain exactly one root of ``f``, a simple one.
    eps : Fraction
       Positive target width.
    """
    eps = as_rational(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    lo, hi = interval
    flo, fhi = evaluate(f, lo), evaluate(f, hi)
    if flo == 0:
        return Interval(lo, lo)
    if fhi == 0:
        return Interval(hi, hi)
    if _sign(flo) == _sign(fhi):
        raise ValueError("f does not change sign on [{}, {}]".format(lo, hi))
    while hi - lo > eps:
        mid = (lo + hi) / 2
        fmid = evaluate(f, mid)
        if fmid == 0:
            delta = min(eps, hi - lo) / 4
            return Interval(mid - delta, mid + delta)
        if _sign(fmid) == _sign(flo):
            lo, flo = mid, fmid
        else:
            hi = mid
    return Interval(lo, hi)


def require_nonconstant(f):
    if f.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no roots to count")
    if f.degree < 1:
        raise ConstantPolynomialError("need a polynomial of degree at least one")
