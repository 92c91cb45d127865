# -*- coding: utf-8 -*-
"""
Counting roots inside a disk.

Substituting ``z(t) = r (t - i)/(t + i)`` maps the real line onto the
circle ``|z| = r`` (with ``t = inf`` going to ``z = r``), and

    f(z(t)) (t + i)**d = Phi(t) + i Psi(t),    d = deg f,

with real polynomials ``Phi`` and ``Psi``. The Sturm chain of
``(Phi, Psi)`` tracks how often ``f(z(t))`` winds around the origin,
which gives the number of roots of ``f`` with ``|z| < r`` as

    (w(inf) - w(-inf) + d) / 2.
"""

from collections import namedtuple

from .errors import CoxPerronError, NotSquarefreeError, RootOnCircleError
from .polyring import (ComplexSplitPoly, Poly, as_rational, derivative,
                       evaluate, gcd, resultant)
from .sturm import (MINUS_INFINITY, PLUS_INFINITY, build_sturm,
                    count_all_real_roots, require_nonconstant)


class CircleSplit(namedtuple("CircleSplit", ["radius", "split", "source_degree"])):
    """
    Real and imaginary parts of ``f`` along the circle of a given radius.
    """
    __slots__ = ()

    @property
    def phi(self):
        return self.split.re

    @property
    def psi(self):
        return self.split.im


DiskCount = namedtuple("DiskCount", ["count", "w_plus_infinity",
                                     "w_minus_infinity", "degree"])
DiskCount.__doc__ = """
The number of roots inside a disk together with the sign-change counts
of the (Phi, Psi) chain it was read from.
"""


def _check_radius(r):
    r = as_rational(r)
    if r <= 0:
        raise ValueError("the radius must be positive, got {}".format(r))
    return r


def circle_split(f, r):
    """
    Expand ``sum_k a_k r**k (t - i)**k (t + i)**(d - k)``.

    Parameters
    ----------
    f : Poly
       Polynomial of degree at least one.
    r : Fraction
       Positive radius.

    Returns
    -------
    CircleSplit

    Examples
    --------
    >>> s = circle_split(Poly([0, 1]), 2)
    >>> s.phi, s.psi
    (Poly([0, 2]), Poly([-2]))
    """
    require_nonconstant(f)
    r = _check_radius(r)
    d = f.degree
    minus = ComplexSplitPoly(Poly([0, 1]), Poly([-1]))
    plus = ComplexSplitPoly(Poly([0, 1]), Poly([1]))
    one = ComplexSplitPoly(Poly([1]), Poly())
    minus_powers = [one]
    plus_powers = [one]
    for _ in range(d):
        minus_powers.append(minus_powers[-1] * minus)
        plus_powers.append(plus_powers[-1] * plus)
    total = ComplexSplitPoly()
    for k, a in enumerate(f.coefficients):
        if a == 0:
            continue
        total = total + (minus_powers[k] * plus_powers[d - k]) * (a * r ** k)
    return CircleSplit(r, total, d)


def has_root_on_circle(f, r):
    """
    Whether ``f`` has a root of modulus exactly ``r``.

    The point ``z = r`` is tested directly. Every other point of the
    circle is a real ``t`` at which ``Phi`` and ``Psi`` both vanish, so
    the remaining test is whether ``gcd(Phi, Psi)`` has a real root. A
    nonzero resultant settles that without computing the gcd.
    """
    split = circle_split(f, r)
    if evaluate(f, split.radius) == 0:
        return True
    phi, psi = split.phi, split.psi
    if psi.is_zero:
        common = phi
    elif phi.is_zero:
        common = psi
    elif resultant(phi, psi) != 0:
        return False
    else:
        common = gcd(phi, psi)
    return count_all_real_roots(common) > 0


def kronecker_count(f, r):
    """
    Count the roots of a squarefree ``f`` in the open disk ``|z| < r``.

    Returns
    -------
    DiskCount

    Raises
    ------
    NotSquarefreeError
       If ``f`` has a repeated root.
    RootOnCircleError
       If ``f`` has a root with ``|z| = r``.
    """
    require_nonconstant(f)
    if resultant(f, derivative(f)) == 0:
        raise NotSquarefreeError("f has a repeated root")
    if has_root_on_circle(f, r):
        raise RootOnCircleError("f has a root on the circle of radius {}".format(r))
    split = circle_split(f, r)
    d = split.source_degree
    if split.psi.is_zero:
        # f(z(t)) is real on the whole line and never crosses zero.
        return DiskCount(d // 2, 0, 0, d)
    seq = build_sturm(split.phi, split.psi)
    w_plus = seq.sign_changes_at_infinity(PLUS_INFINITY)
    w_minus = seq.sign_changes_at_infinity(MINUS_INFINITY)
    total = w_plus - w_minus + d
    if total % 2 or not 0 <= total <= 2 * d:
        raise CoxPerronError("inconsistent winding count {} for degree {}".format(total, d))
    return DiskCount(total // 2, w_plus, w_minus, d)


def count_roots_in_disk(f, r):
    """
    Number of roots of ``f`` with ``|z| < r``.

    Examples
    --------
    >>> count_roots_in_disk(Poly([1, 0, 1]), 2)
    2
    """
    return kronecker_count(f, r).count
