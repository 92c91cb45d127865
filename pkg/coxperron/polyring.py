# -*- coding: utf-8 -*-
"""
Exact polynomial arithmetic over the rationals.

:class:`Poly` wraps a univariate :class:`sympy.Poly` over ``QQ`` and
presents it the way the rest of the package reads polynomials: densely,
constant term first, with :class:`fractions.Fraction` coefficients and
no trailing zeros. The zero polynomial has no coefficients and degree
-1.

Division, gcd, pseudo-remainders, contents and resultants all come from
sympy; its resultant runs the subresultant remainder sequence.
"""

from fractions import Fraction
from functools import reduce

import sympy as sp
from sympy import QQ, ZZ

from .errors import ZeroPolynomialError, PolynomialDivisionError

#: The indeterminate every :class:`Poly` is written in.
T = sp.Symbol("t")


def as_rational(value):
    """
    Coerce an integer, fraction or string such as ``"3/4"`` or
    ``"1e-12"`` to a :class:`fractions.Fraction`.
    """
    if isinstance(value, float):
        raise TypeError("floating point values are not exact; pass a string or Fraction")
    if isinstance(value, sp.Rational):
        return Fraction(int(value.p), int(value.q))
    return Fraction(value)


def _to_sympy_number(value):
    return sp.Rational(value.numerator, value.denominator)


class Poly(object):
    """
    An immutable univariate polynomial with rational coefficients.

    Parameters
    ----------
    coefficients : iterable
       The coefficients, constant term first. Anything accepted by
       :func:`as_rational` may be used; trailing zeros are dropped.

    Examples
    --------
    >>> p = Poly([-1, 0, 1])
    >>> p.degree
    2
    >>> p(3)
    Fraction(8, 1)
    """

    __slots__ = ("_rep", "_coeffs")

    def __init__(self, coefficients=()):
        coeffs = [as_rational(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)
        if coeffs:
            self._rep = sp.Poly.from_list([_to_sympy_number(c) for c in reversed(coeffs)],
                                          T, domain=QQ)
        else:
            self._rep = sp.Poly(0, T, domain=QQ)

    @classmethod
    def from_sympy(cls, rep):
        """
        Wrap a univariate :class:`sympy.Poly` in ``t`` over ``ZZ`` or
        ``QQ``.
        """
        if rep.get_domain() != QQ:
            rep = rep.set_domain(QQ)
        poly = cls.__new__(cls)
        coeffs = [as_rational(c) for c in reversed(rep.all_coeffs())]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        poly._coeffs = tuple(coeffs)
        poly._rep = rep
        return poly

    def to_sympy(self):
        """The underlying :class:`sympy.Poly` over ``QQ``."""
        return self._rep

    @classmethod
    def monomial(cls, degree, coefficient=1):
        """Return ``coefficient * t**degree``."""
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls([0] * degree + [coefficient])

    @classmethod
    def from_roots(cls, roots):
        """Return the monic polynomial with the given rational roots."""
        return reduce(lambda acc, r: acc * cls([-as_rational(r), 1]), roots, cls([1]))

    @classmethod
    def from_json(cls, data):
        """
        Build a polynomial from a list of coefficients, constant term
        first, each an integer or a ``"p/q"`` string.
        """
        return cls(data)

    def to_json(self):
        """
        The coefficients as a list of strings in lowest terms, constant
        term first, e.g. ``["-4", "7", "-2"]`` or ``["1/2", "1"]``.
        """
        return [str(c) for c in self._coeffs]

    @property
    def coefficients(self):
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1

    @property
    def leading(self):
        if not self._coeffs:
            return Fraction(0)
        return self._coeffs[-1]

    @property
    def is_zero(self):
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    __nonzero__ = __bool__

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __getitem__(self, k):
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        try:
            return self._coeffs == Poly([other])._coeffs
        except (TypeError, ValueError):
            return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return "Poly([{}])".format(", ".join(str(c) for c in self._coeffs))

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "t" if k == 1 else "t^{}".format(k)
                body = power if mag == 1 else "{}*{}".format(mag, power)
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += " {} {}".format(sign, body)
        return text

    def __call__(self, x):
        return evaluate(self, x)

    def __neg__(self):
        return Poly.from_sympy(-self._rep)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Poly.from_sympy(self._rep + other._rep)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Poly.from_sympy(self._rep - other._rep)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Poly.from_sympy(other._rep - self._rep)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Poly.from_sympy(self._rep * other._rep)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        return Poly.from_sympy(self._rep ** exponent)

    def __divmod__(self, other):
        return div_rem(self, _coerce(other))

    def __floordiv__(self, other):
        return div_rem(self, _coerce(other))[0]

    def __mod__(self, other):
        return div_rem(self, _coerce(other))[1]

    def scale(self, factor):
        """Multiply every coefficient by a rational ``factor``."""
        factor = as_rational(factor)
        return Poly.from_sympy(self._rep.mul_ground(_to_sympy_number(factor)))

    def monic(self):
        """Divide through by the leading coefficient."""
        if self.is_zero:
            raise ZeroPolynomialError("the zero polynomial has no monic associate")
        return Poly.from_sympy(self._rep.monic())

    def reverse(self):
        """Return ``t**degree * p(1/t)``."""
        return Poly(reversed(self._coeffs))

    def derivative(self):
        return derivative(self)

    def primitive(self):
        """
        Split off the content.

        Returns
        -------
        content : Fraction
           Positive rational such that ``content * part == self``.
        part : Poly
           Polynomial with coprime integer coefficients.
        """
        return primitive(self)


def _coerce(value):
    if isinstance(value, Poly):
        return value
    try:
        return Poly([value])
    except (TypeError, ValueError):
        return NotImplemented


def evaluate(p, x):
    """Evaluate ``p`` at the rational point ``x``."""
    x = as_rational(x)
    if p.is_zero:
        return Fraction(0)
    return as_rational(p.to_sympy().eval(_to_sympy_number(x)))


def derivative(p):
    """Formal derivative of ``p``."""
    return Poly.from_sympy(p.to_sympy().diff(T))


def div_rem(f, g):
    """
    Euclidean division.

    Returns
    -------
    q, r : Poly
       Quotient and remainder with ``f == q*g + r`` and
       ``deg r < deg g``.

    Raises
    ------
    PolynomialDivisionError
       If ``g`` is the zero polynomial.
    """
    if g.is_zero:
        raise PolynomialDivisionError("division by the zero polynomial")
    q, r = f.to_sympy().div(g.to_sympy())
    return Poly.from_sympy(q), Poly.from_sympy(r)


def gcd(f, g):
    """
    Monic greatest common divisor.

    ``gcd(0, 0)`` is the zero polynomial; otherwise the result is monic.
    """
    if f.is_zero and g.is_zero:
        return Poly()
    return Poly.from_sympy(f.to_sympy().gcd(g.to_sympy())).monic()


def primitive(p):
    """Split ``p`` into a positive rational content and a primitive integer part."""
    if p.is_zero:
        return Fraction(0), Poly()
    den, integral = p.to_sympy().clear_denoms(convert=True)
    num, part = integral.primitive()
    return as_rational(num) / as_rational(den), Poly.from_sympy(part)


def prem(f, g):
    """
    Pseudo-remainder ``lc(g)**(deg f - deg g + 1) * f mod g``.

    When both arguments have integer coefficients so does the result.
    """
    if g.is_zero:
        raise PolynomialDivisionError("pseudo-division by the zero polynomial")
    if f.degree < g.degree:
        return f
    return Poly.from_sympy(f.to_sympy().prem(g.to_sympy()))


def resultant(f, g):
    """
    Resultant of two nonzero polynomials.

    Zero exactly when ``f`` and ``g`` have a common complex root. The
    value agrees with the Sylvester determinant, including its sign.

    Raises
    ------
    ZeroPolynomialError
       If either argument is the zero polynomial.

    Examples
    --------
    >>> resultant(Poly([1, 0, 1]), Poly([0, 1]))
    Fraction(1, 1)
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("the resultant needs two nonzero polynomials")
    df, dg = f.degree, g.degree
    if df < dg:
        sign = -1 if (df * dg) % 2 else 1
        return sign * resultant(g, f)
    if dg == 0:
        return g.leading ** df
    cf, F = primitive(f)
    cg, G = primitive(g)
    value = F.to_sympy().set_domain(ZZ).resultant(G.to_sympy().set_domain(ZZ))
    return as_rational(value) * cf ** dg * cg ** df


def sign_variations(p):
    """Number of sign changes in the coefficient list, zeros skipped."""
    count = 0
    previous = 0
    for c in p.coefficients:
        if c == 0:
            continue
        s = 1 if c > 0 else -1
        if previous and s != previous:
            count += 1
        previous = s
    return count


def cauchy_bound(p):
    """
    ``1 + max |a_i / a_d|`` over the lower coefficients: every complex
    root of ``p`` has strictly smaller modulus.
    """
    if p.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no root bound")
    lc = abs(p.leading)
    return 1 + max([abs(c) / lc for c in p.coefficients[:-1]] or [Fraction(0)])


def squarefree_part(p):
    """
    The monic product of the distinct irreducible factors of ``p``, that
    is ``p / gcd(p, p')`` up to a constant.
    """
    if p.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no squarefree part")
    if p.degree < 1:
        return p
    return Poly.from_sympy(p.to_sympy().sqf_part()).monic()


class ComplexSplitPoly(object):
    """
    A polynomial with Gaussian-rational coefficients held as
    ``re(t) + i*im(t)`` with both parts real :class:`Poly`.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=None, im=None):
        self.re = re if re is not None else Poly()
        self.im = im if im is not None else Poly()

    @property
    def is_zero(self):
        return self.re.is_zero and self.im.is_zero

    def __eq__(self, other):
        if not isinstance(other, ComplexSplitPoly):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return "ComplexSplitPoly(re={!r}, im={!r})".format(self.re, self.im)

    def __add__(self, other):
        return ComplexSplitPoly(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return ComplexSplitPoly(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return ComplexSplitPoly(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, ComplexSplitPoly):
            return ComplexSplitPoly(self.re * other.re - self.im * other.im,
                                    self.re * other.im + self.im * other.re)
        return ComplexSplitPoly(self.re * other, self.im * other)

    __rmul__ = __mul__

    def conjugate(self):
        return ComplexSplitPoly(self.re, -self.im)
