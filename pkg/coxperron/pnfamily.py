# -*- coding: utf-8 -*-
"""
The P_n family of ideal Coxeter polytopes.

P_n is glued from n copies of an ideal Coxeter 4-pyramid. Its facets
are F1, F2 (the two free pyramid facets), C1..Cn (one per copy) and
G1..G4 (the four prism faces running along the whole stack).
"""

import json
import os
from collections import Counter, namedtuple

from .coxeter import INFINITY, CoxeterMatrix, FiniteType, enumerate_finite_subsets
from .errors import CensusMismatchError, FixtureMismatchError
from .polyring import Poly, derivative
from .sturm import MINUS_INFINITY, PLUS_INFINITY, build_sturm

DATA_FILE = os.path.join(os.path.dirname(__file__), "data", "appendix.json")

PnSystem = namedtuple("PnSystem", ["n", "matrix"])


def pn_labels(n):
    return (["F1", "F2"] + ["C{}".format(j) for j in range(1, n + 1)]
            + ["G{}".format(i) for i in range(1, 5)])


def build_pn(n):
    """
    The Coxeter matrix of P_n.

    Parameters
    ----------
    n : int
       Number of glued pyramids, at least one.

    Returns
    -------
    PnSystem
       ``n`` and a :class:`~coxperron.coxeter.CoxeterMatrix` of rank
       ``n + 6`` with generators labelled F1, F2, C1..Cn, G1..G4.

    Examples
    --------
    >>> build_pn(2).matrix.rank
    8
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError("P_n needs a positive integer n, got {!r}".format(n))
    labels = pn_labels(n)
    index = {label: k for k, label in enumerate(labels)}
    rank = len(labels)
    m = [[INFINITY] * rank for _ in range(rank)]
    for k in range(rank):
        m[k][k] = 1

    def join(a, b, value):
        i, j = index[a], index[b]
        m[i][j] = m[j][i] = value

    for j in range(1, n):
        join("C{}".format(j), "C{}".format(j + 1), 2)
    for i in range(1, 5):
        join("F1", "G{}".format(i), 2)
        join("F2", "G{}".format(i), 2)
        join("G{}".format(i), "G{}".format(i % 4 + 1), 2)
        for j in range(1, n + 1):
            join("G{}".format(i), "C{}".format(j), 3)
    join("F1", "C1", 4)
    join("F2", "C{}".format(n), 4)
    return PnSystem(n, CoxeterMatrix(m, labels=labels))


A1 = FiniteType("A", 1)
A2 = FiniteType("A", 2)
A3 = FiniteType("A", 3)
B2 = FiniteType("B", 2)
B3 = FiniteType("B", 3)

_CENSUS_KEYS = {
    (A1,): "facets",
    (A1, A1): "pairs_a1a1",
    (A2,): "pairs_a2",
    (B2,): "pairs_b2",
    (A1, A1, A1): "triples_a1a1a1",
    (B3,): "triples_b3",
    (A3,): "triples_a3",
}

CensusRecord = namedtuple("CensusRecord", [
    "n", "facets", "pairs_a1a1", "pairs_a2", "pairs_b2",
    "triples_a1a1a1", "triples_b3", "triples_a3", "other", "quadruples"])


def expected_census(n):
    """The counts predicted by the combinatorics of P_n."""
    return CensusRecord(n=n, facets=n + 6, pairs_a1a1=n + 11, pairs_a2=4 * n,
                        pairs_b2=2, triples_a1a1a1=8, triples_b3=8,
                        triples_a3=8 * n - 4, other=0, quadruples=0)


def closed_form_counts(n):
    """Facet, face, edge and ideal-vertex counts of P_n."""
    return {"facets": n + 6, "faces": 5 * n + 13, "edges": 8 * n + 12, "vertices": 4 * n + 5}


def census(system):
    """
    Count the finite generator subsets of a P_n system by type.

    Raises
    ------
    CensusMismatchError
       If the counts differ from :func:`expected_census`.
    """
    counts = Counter()
    for subset, types in enumerate_finite_subsets(system.matrix):
        if not subset:
            continue
        if len(subset) > 3:
            counts["quadruples"] += 1
        else:
            counts[_CENSUS_KEYS.get(types, "other")] += 1
    fields = {key: counts[key] for key in CensusRecord._fields if key != "n"}
    record = CensusRecord(n=system.n, **fields)
    expected = expected_census(system.n)
    if record != expected:
        raise CensusMismatchError("census of P_{} is {}, expected {}".format(system.n, record, expected))
    return record


def census_totals(record):
    return {"facets": record.facets,
            "faces": record.pairs_a1a1 + record.pairs_a2 + record.pairs_b2,
            "edges": record.triples_a1a1a1 + record.triples_b3 + record.triples_a3}


def closed_form_Dn(n):
    """
    The growth denominator of P_n, constant term first.

    Examples
    --------
    >>> str(closed_form_Dn(1))
    't^9 - 4*t^8 + 3*t^7 - 6*t^6 + 10*t^5 - 6*t^4 + 9*t^3 - 2*t^2 + 7*t - 8'
    """
    return Poly([-4 * (n + 1), 3 * n + 4, 3 * n - 5, -(2 * n - 11), 2 * n - 8,
                 2 * n + 8, 2 * n - 8, -(n - 4), -(n + 3), 1])


def closed_form_Pn():
    """``(t+1)^3 (t^2+1) (t^2-t+1) (t^2+t+1)``, independent of n."""
    return Poly([1, 1]) ** 3 * Poly([1, 0, 1]) * Poly([1, -1, 1]) * Poly([1, 1, 1])


def closed_form_phi(n):
    """Real part of the circle split of ``D_n`` at radius 2."""
    return Poly([0, 894 * n + 13752, 0, -(7176 * n + 60048), 0, -(2476 * n - 49792),
                 0, 6456 * n - 6512, 0, -(162 * n + 56)])


def closed_form_psi(n):
    """Imaginary part of the circle split of ``D_n`` at radius 2."""
    return Poly([-(14 * n + 2808), 0, 4136 * n + 36816, 0, -(7188 * n + 67136),
                 0, -(8280 * n - 24880), 0, 2034 * n - 456])


def load_fixtures(path=DATA_FILE):
    with open(path) as f:
        return json.load(f)


def _in_n(coefficients, n):
    return Poly(coefficients)(n)


def fixture_chain_element(name, n, data=None):
    """
    A printed chain element (``"d2"`` or ``"d3"``) evaluated at ``n``.
    """
    data = data or load_fixtures()
    entry = data["chain"][name]
    factor = (_in_n(entry["prefactor"]["numerator"], n)
              / _in_n(entry["prefactor"]["denominator"], n))
    return Poly([_in_n(c, n) for c in entry["coefficients"]]).scale(factor)


def family_polynomial(name, data=None):
    """
    One of the shipped polynomials in the variable n: ``"resultant"``,
    ``"p"`` or ``"p_difference"``.

    ``"p_difference"`` is stored as printed; it equals half of
    ``p(n+1) - p(n)``.
    """
    data = data or load_fixtures()
    try:
        return Poly(data["polynomials"][name])
    except KeyError:
        raise KeyError("unknown polynomial {!r}".format(name))


AppendixReport = namedtuple("AppendixReport", ["n", "ratios", "w_zero",
                                               "w_plus_infinity", "w_minus_infinity"])


def appendix_fixture_check(n, data=None):
    """
    Compare the first four elements of the Sturm chain of
    ``(D_n, D_n')`` with the printed ones.

    Returns
    -------
    AppendixReport
       The positive ratios ``computed / printed`` for d0..d3 and the
       sign-change counts of the chain at 0 and at both infinities.

    Raises
    ------
    FixtureMismatchError
       If an element is not a positive multiple of its printed form.
    """
    data = data or load_fixtures()
    d0 = closed_form_Dn(n)
    d1 = derivative(d0)
    printed = [d0, d1, fixture_chain_element("d2", n, data), fixture_chain_element("d3", n, data)]
    seq = build_sturm(d0, d1)
    if len(seq) < len(printed):
        raise FixtureMismatchError("chain of D_{} has only {} elements".format(n, len(seq)))
    ratios = []
    for k, expected in enumerate(printed):
        computed = seq[k]
        ratio = computed.leading / expected.leading
        if ratio <= 0 or computed != expected.scale(ratio):
            raise FixtureMismatchError("chain element d{} of D_{} is not a positive multiple "
                                       "of the printed one".format(k, n))
        ratios.append(ratio)
    return AppendixReport(n, tuple(ratios), seq.sign_changes_at(0),
                          seq.sign_changes_at_infinity(PLUS_INFINITY),
                          seq.sign_changes_at_infinity(MINUS_INFINITY))
