#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_polyring
----------------------------------

Tests for `coxperron.polyring` module.
"""

import unittest
from fractions import Fraction

import sympy
from sympy import QQ, ZZ

from coxperron.errors import PolynomialDivisionError, ZeroPolynomialError
from coxperron.pnfamily import closed_form_Dn
from coxperron.polyring import (ComplexSplitPoly, Poly, cauchy_bound, derivative,
                                div_rem, gcd, prem, primitive, resultant,
                                T, sign_variations, squarefree_part)

from tests import oracles


class TestArithmetic(unittest.TestCase):

    def test_bracket_product(self):
        self.assertEqual(Poly([1, 1]) * Poly([1, 1, 1]), Poly([1, 2, 2, 1]))

    def test_additive_inverse(self):
        p = Poly([3, Fraction(-1, 2), 7])
        self.assertTrue((p + (-p)).is_zero)
        self.assertEqual((p - p).degree, -1)

    def test_growth_numerator_expansion(self):
        product = Poly([1, 1]) ** 3 * Poly([1, 0, 1]) * Poly([1, -1, 1]) * Poly([1, 1, 1])
        self.assertEqual(product, Poly([1, 3, 5, 7, 8, 8, 7, 5, 3, 1]))
        self.assertEqual(product(1), 48)

    def test_trailing_zeros_are_dropped(self):
        self.assertEqual(Poly([1, 2, 0, 0]).degree, 1)
        self.assertEqual(Poly([0, 0]), Poly())

    def test_scalar_arithmetic(self):
        p = Poly([1, 2])
        self.assertEqual(p * 3, Poly([3, 6]))
        self.assertEqual(3 * p, Poly([3, 6]))
        self.assertEqual(p + 1, Poly([2, 2]))
        self.assertEqual(1 - p, Poly([0, -2]))

    def test_ring_axioms_on_random_triples(self):
        rng = oracles.seeded(11)
        for _ in range(50):
            a, b, c = (oracles.random_integer_poly(rng, max_degree=6, min_degree=0)
                       for _ in range(3))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a * b, b * a)
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual((a * b).degree, a.degree + b.degree)
            x = oracles.random_rational(rng)
            self.assertEqual((a * b)(x), a(x) * b(x))

    def test_string_rendering(self):
        self.assertEqual(str(Poly([-1, 0, 1])), "t^2 - 1")
        self.assertEqual(str(Poly([Fraction(1, 2), -3])), "-3*t + 1/2")
        self.assertEqual(str(Poly()), "0")

    def test_json(self):
        p = Poly([-4, 7, -2])
        self.assertEqual(p.to_json(), ["-4", "7", "-2"])
        self.assertEqual(Poly([Fraction(1, 2), 1]).to_json(), ["1/2", "1"])
        self.assertEqual(Poly.from_json(["-4", "7", "-2"]), p)
        self.assertEqual(Poly.from_json([-4, 7, -2]), p)

    def test_helpers(self):
        self.assertEqual(Poly.from_roots([1, -2]), Poly([-2, 1, 1]))
        self.assertEqual(Poly.monomial(3, 2), Poly([0, 0, 0, 2]))
        self.assertEqual(Poly([2, 4]).monic(), Poly([Fraction(1, 2), 1]))
        self.assertEqual(Poly([1, 2, 3]).reverse(), Poly([3, 2, 1]))
        self.assertEqual(Poly([0, 1]).reverse(), Poly([1]))

    def test_float_coefficients_are_rejected(self):
        with self.assertRaises(TypeError):
            Poly([0.5])


class TestDivision(unittest.TestCase):

    def test_quintic(self):
        q, r = div_rem(Poly([-1, -3, 0, 0, 0, 1]), Poly([-3, 0, 0, 0, 5]))
        self.assertEqual(q, Poly([0, Fraction(1, 5)]))
        self.assertEqual(r, Poly([-1, Fraction(-12, 5)]))

    def test_self_division(self):
        f = Poly([1, 2, 3])
        self.assertEqual(div_rem(f, f), (Poly([1]), Poly()))

    def test_synthetic_division(self):
        q, r = div_rem(Poly([0, 0, 0, 1]), Poly([-2, 1]))
        self.assertEqual(q, Poly([4, 2, 1]))
        self.assertEqual(r, Poly([8]))

    def test_division_by_zero(self):
        with self.assertRaises(PolynomialDivisionError):
            div_rem(Poly([1, 1]), Poly())
        with self.assertRaises(ZeroDivisionError):
            Poly([1, 1]) // Poly()

    def test_remultiplication(self):
        rng = oracles.seeded(12)
        for _ in range(100):
            f = oracles.random_integer_poly(rng, min_degree=0)
            g = oracles.random_integer_poly(rng, max_degree=5, min_degree=0)
            q, r = div_rem(f, g)
            self.assertEqual(q * g + r, f)
            self.assertLess(r.degree, g.degree)

    def test_pseudo_remainder_is_integral(self):
        f = Poly([-1, -3, 0, 0, 0, 1])
        g = Poly([-3, 0, 0, 0, 5])
        r = prem(f, g)
        self.assertTrue(all(c.denominator == 1 for c in r))
        self.assertEqual(r, div_rem(f, g)[1].scale(25))


class TestCalculus(unittest.TestCase):

    def test_quintic_derivative(self):
        self.assertEqual(derivative(Poly([-1, -3, 0, 0, 0, 1])), Poly([-3, 0, 0, 0, 5]))

    def test_constant_derivative(self):
        self.assertTrue(derivative(Poly([5])).is_zero)

    def test_growth_denominator_derivative(self):
        self.assertEqual(derivative(closed_form_Dn(1)),
                         Poly([7, -4, 27, -24, 50, -36, 21, -32, 9]))

    def test_central_differences(self):
        rng = oracles.seeded(13)
        for _ in range(30):
            f = oracles.random_integer_poly(rng)
            x = Fraction(rng.randint(-30, 30), rng.randint(1, 10))
            bound = sum(abs(c) * (abs(x) + 1) ** k for k, c in enumerate(f.coefficients))
            for h in (Fraction(1, 10), Fraction(1, 1000), Fraction(1, 10 ** 6)):
                quotient = (f(x + h) - f(x - h)) / (2 * h)
                self.assertLessEqual(abs(quotient - derivative(f)(x)), bound * h * h)


class TestEvaluation(unittest.TestCase):

    def test_quintic(self):
        self.assertEqual(Poly([-1, -3, 0, 0, 0, 1])(-2), -27)

    def test_constant_term(self):
        self.assertEqual(Poly([Fraction(7, 3), 5, 1])(0), Fraction(7, 3))

    def test_string_argument(self):
        self.assertEqual(Poly([0, 1])("3/4"), Fraction(3, 4))


class TestGcd(unittest.TestCase):

    def test_linear_factor(self):
        self.assertEqual(gcd(Poly([-1, 0, 1]), Poly([-1, 1])), Poly([-1, 1]))

    def test_planted_factor(self):
        f = Poly.from_roots([2, 2, -1])
        g = Poly.from_roots([2, -3])
        self.assertEqual(gcd(f, g), Poly([-2, 1]))

    def test_growth_denominator_is_squarefree(self):
        d = closed_form_Dn(25)
        self.assertEqual(gcd(d, derivative(d)), Poly([1]))
        self.assertEqual(squarefree_part(d), d)

    def test_squarefree_part(self):
        self.assertEqual(squarefree_part(Poly.from_roots([1, 1, 3])), Poly.from_roots([1, 3]))


class TestPrimitive(unittest.TestCase):

    def test_content_is_positive(self):
        content, part = primitive(Poly([Fraction(-3, 2), Fraction(9, 4)]))
        self.assertEqual(content, Fraction(3, 4))
        self.assertEqual(part, Poly([-2, 3]))

    def test_zero(self):
        self.assertEqual(primitive(Poly()), (0, Poly()))


class TestResultant(unittest.TestCase):

    def test_small(self):
        self.assertEqual(resultant(Poly([1, 0, 1]), Poly([0, 1])), 1)
        self.assertEqual(resultant(Poly([-2, 1]), Poly([-3, 1])), -1)

    def test_growth_denominator_fixtures(self):
        d25, d26 = closed_form_Dn(25), closed_form_Dn(26)
        self.assertEqual(resultant(d25, derivative(d25)),
                         -5236764089528548306162419869100800)
        self.assertEqual(resultant(d26, derivative(d26)),
                         18356309345841539117459400503775232)

    def test_common_root(self):
        self.assertEqual(resultant(Poly.from_roots([1, -2]), Poly.from_roots([1, -5])), 0)

    def test_zero_argument(self):
        with self.assertRaises(ZeroPolynomialError):
            resultant(Poly(), Poly([1, 1]))

    def test_constants(self):
        self.assertEqual(resultant(Poly([1, 0, 1]), Poly([3])), 9)
        self.assertEqual(resultant(Poly([3]), Poly([5])), 1)

    def test_swapping(self):
        f, g = Poly([1, 2, 0, 1]), Poly([5, 0, 1])
        self.assertEqual(resultant(g, f), (-1) ** (3 * 2) * resultant(f, g))
        f, g = Poly([1, 2, 0, 1]), Poly([5, 1])
        self.assertEqual(resultant(g, f), -resultant(f, g))

    def test_rational_coefficients(self):
        f, g = Poly([1, 2, 3]), Poly([-1, 0, 0, 4])
        self.assertEqual(resultant(f.scale(Fraction(2, 3)), g),
                         Fraction(2, 3) ** 3 * resultant(f, g))

    def test_matches_sylvester_determinant(self):
        rng = oracles.seeded(14)
        for _ in range(150):
            f = oracles.random_integer_poly(rng, max_degree=6, min_degree=0, bound=20)
            g = oracles.random_integer_poly(rng, max_degree=6, min_degree=0, bound=20)
            self.assertEqual(resultant(f, g), oracles.sylvester_resultant(f, g))

    def test_vanishes_iff_common_factor(self):
        rng = oracles.seeded(15)
        for trial in range(150):
            f = oracles.random_integer_poly(rng, max_degree=5)
            g = oracles.random_integer_poly(rng, max_degree=5)
            if trial % 2:
                factor = Poly([rng.randint(-5, 5), rng.randint(1, 3)])
                f, g = f * factor, g * factor
            self.assertEqual(resultant(f, g) == 0, gcd(f, g).degree >= 1)


class TestSympyBacking(unittest.TestCase):

    def test_backing_polynomial(self):
        p = Poly([-1, 0, Fraction(1, 2)])
        self.assertEqual(p.to_sympy(), sympy.Poly(T ** 2 / 2 - 1, T, domain=QQ))

    def test_integer_domain_is_lifted(self):
        p = Poly.from_sympy(sympy.Poly(2 * T ** 3 - T, T, domain=ZZ))
        self.assertEqual(p, Poly([0, -1, 0, 2]))
        self.assertEqual(p.to_sympy().get_domain(), QQ)
        self.assertIsInstance(p[3], Fraction)

    def test_sympy_rational_coefficients(self):
        p = Poly([sympy.Rational(1, 2), sympy.Integer(1)])
        self.assertEqual(p.to_json(), ["1/2", "1"])

    def test_zero(self):
        self.assertEqual(Poly.from_sympy(sympy.Poly(0, T, domain=QQ)), Poly())
        self.assertEqual(Poly().to_sympy(), sympy.Poly(0, T, domain=QQ))


class TestSignVariations(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(sign_variations(Poly([1, -1, 1])), 2)
        self.assertEqual(sign_variations(Poly([1, 0, -3, -1])), 1)
        self.assertEqual(sign_variations(Poly()), 0)

    def test_descartes_bound_and_parity(self):
        rng = oracles.seeded(16)
        checked = 0
        while checked < 500:
            f = oracles.random_squarefree_poly(rng)
            if f(0) == 0:
                continue
            positive = oracles.numeric_positive_count(f)
            if positive is None:
                continue
            variations = sign_variations(f)
            self.assertLessEqual(positive, variations)
            self.assertEqual((variations - positive) % 2, 0)
            checked += 1


class TestCauchyBound(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(cauchy_bound(Poly([-4, 0, 1])), 5)
        self.assertEqual(cauchy_bound(Poly([-1, -3, 0, 0, 0, 1])), 4)
        self.assertEqual(cauchy_bound(Poly([-8, 0, 2])), 5)

    def test_zero(self):
        with self.assertRaises(ZeroPolynomialError):
            cauchy_bound(Poly())


class TestComplexSplitPoly(unittest.TestCase):

    def test_product_of_conjugates_is_real(self):
        z = ComplexSplitPoly(Poly([0, 1]), Poly([1]))
        product = z * z.conjugate()
        self.assertEqual(product, ComplexSplitPoly(Poly([1, 0, 1]), Poly()))

    def test_addition(self):
        a = ComplexSplitPoly(Poly([1]), Poly([2]))
        self.assertEqual(a + a.conjugate(), ComplexSplitPoly(Poly([2]), Poly()))


if __name__ == '__main__':
    import sys
    sys.exit(unittest.main())
