#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_pnfamily
----------------------------------

Tests for `coxperron.pnfamily` module.
"""

import unittest

from coxperron.coxeter import INFINITY, steinberg_sum
from coxperron.errors import CensusMismatchError, FixtureMismatchError
from coxperron.pnfamily import (PnSystem, appendix_fixture_check, build_pn,
                                census, census_totals, closed_form_counts,
                                closed_form_Dn, closed_form_Pn,
                                fixture_chain_element, family_polynomial,
                                load_fixtures, pn_labels)
from coxperron.polyring import Poly, sign_variations


class TestBuildPn(unittest.TestCase):

    def test_rank_and_labels(self):
        for n in (1, 2, 7):
            system = build_pn(n)
            self.assertEqual(system.n, n)
            self.assertEqual(system.matrix.rank, n + 6)
            self.assertEqual(list(system.matrix.labels), pn_labels(n))

    def test_incidence(self):
        system = build_pn(3)
        index = {label: k for k, label in enumerate(system.matrix.labels)}

        def m(a, b):
            return system.matrix[index[a], index[b]]

        self.assertEqual(m("F1", "C1"), 4)
        self.assertEqual(m("F2", "C3"), 4)
        self.assertEqual(m("C1", "C2"), 2)
        self.assertEqual(m("G2", "C3"), 3)
        self.assertEqual(m("G1", "G2"), 2)
        self.assertEqual(m("G4", "G1"), 2)
        self.assertEqual(m("F1", "G3"), 2)
        self.assertEqual(m("G1", "G3"), INFINITY)
        self.assertEqual(m("F1", "F2"), INFINITY)
        self.assertEqual(m("C1", "C3"), INFINITY)
        self.assertEqual(m("F1", "C2"), INFINITY)

    def test_finite_pairs_are_the_faces(self):
        for n in (1, 2, 9):
            matrix = build_pn(n).matrix
            pairs = sum(1 for i in range(matrix.rank) for j in range(i)
                        if matrix.is_finite_pair(i, j))
            self.assertEqual(pairs, closed_form_counts(n)["faces"])
        self.assertEqual(closed_form_counts(2)["faces"], 23)

    def test_single_pyramid_glues_both_free_facets_to_c1(self):
        system = build_pn(1)
        index = {label: k for k, label in enumerate(system.matrix.labels)}
        self.assertEqual(system.matrix[index["F1"], index["C1"]], 4)
        self.assertEqual(system.matrix[index["F2"], index["C1"]], 4)

    def test_bad_n(self):
        for n in (0, -3, 2.0, True):
            with self.assertRaises(ValueError):
                build_pn(n)


class TestCensus(unittest.TestCase):

    def test_single_pyramid(self):
        record = census(build_pn(1))
        self.assertEqual(record.facets, 7)
        self.assertEqual((record.pairs_a1a1, record.pairs_a2, record.pairs_b2), (12, 4, 2))
        self.assertEqual((record.triples_a1a1a1, record.triples_b3, record.triples_a3), (8, 8, 4))
        self.assertEqual((record.other, record.quadruples), (0, 0))

    def test_face_and_edge_totals(self):
        for n in (2, 10):
            totals = census_totals(census(build_pn(n)))
            expected = closed_form_counts(n)
            self.assertEqual(totals["facets"], expected["facets"])
            self.assertEqual(totals["faces"], expected["faces"])
            self.assertEqual(totals["edges"], expected["edges"])

    def test_mismatch(self):
        tampered = PnSystem(2, build_pn(3).matrix)
        with self.assertRaises(CensusMismatchError):
            census(tampered)


class TestClosedForms(unittest.TestCase):

    def test_denominator_coefficients(self):
        d = closed_form_Dn(26)
        self.assertEqual(d.degree, 9)
        self.assertEqual(d[0], -108)
        self.assertEqual(d[1], 82)
        self.assertEqual(d.leading, 1)

    def test_denominator_values(self):
        self.assertEqual(closed_form_Dn(1)(3), -2192)
        self.assertEqual(closed_form_Dn(1)(4), 33844)

    def test_denominator_does_not_vanish_at_one(self):
        for n in range(1, 61):
            self.assertEqual(closed_form_Dn(n)(1), 4 * n)
        for n in (1, 7):
            self.assertNotEqual(steinberg_sum(build_pn(n).matrix).denominator(1), 0)

    def test_numerator(self):
        p = closed_form_Pn()
        self.assertEqual(p, Poly([1, 3, 5, 7, 8, 8, 7, 5, 3, 1]))
        self.assertEqual(p.reverse(), p)
        self.assertEqual(p(1), 48)

    def test_steinberg_sum_reproduces_closed_forms(self):
        for n in range(1, 31):
            gf = steinberg_sum(build_pn(n).matrix)
            self.assertEqual(gf.denominator, closed_form_Dn(n))
            self.assertEqual(gf.numerator, closed_form_Pn())


class TestFixtures(unittest.TestCase):

    def setUp(self):
        self.data = load_fixtures()

    def test_chain_prefix(self):
        for n in (1, 5, 25, 26, 40):
            report = appendix_fixture_check(n, self.data)
            self.assertEqual(report.ratios[:2], (1, 1))
            self.assertTrue(all(r > 0 for r in report.ratios))

    def test_distribution_around_the_transition(self):
        before = appendix_fixture_check(25, self.data)
        after = appendix_fixture_check(26, self.data)
        self.assertEqual((before.w_zero, before.w_plus_infinity, before.w_minus_infinity), (6, 3, 6))
        self.assertEqual((after.w_zero, after.w_plus_infinity, after.w_minus_infinity), (5, 2, 7))

    def test_chain_element_degrees(self):
        self.assertEqual(fixture_chain_element("d2", 4, self.data).degree, 7)
        self.assertEqual(fixture_chain_element("d3", 4, self.data).degree, 6)

    def test_tampered_fixture(self):
        self.data["chain"]["d2"]["coefficients"][0] = [313, 311, -3]
        with self.assertRaises(FixtureMismatchError):
            appendix_fixture_check(5, self.data)

    def test_sign_controller(self):
        p = family_polynomial("p", self.data)
        self.assertEqual(p(1), 3363872)
        self.assertEqual(p(3), -260324200)
        self.assertEqual(p(9), -39144733360)
        self.assertEqual(p(10), 162088321532)

    def test_sign_controller_difference(self):
        p = family_polynomial("p", self.data)
        difference = family_polynomial("p_difference", self.data)
        for n in (1, 2):
            self.assertEqual(2 * difference(n), p(n + 1) - p(n))

    def test_resultant_polynomial_has_one_sign_change(self):
        self.assertEqual(sign_variations(family_polynomial("resultant", self.data)), 1)

    def test_unknown_polynomial(self):
        with self.assertRaises(KeyError):
            family_polynomial("q", self.data)


if __name__ == '__main__':
    import sys
    sys.exit(unittest.main())
