# -*- coding: utf-8 -*-
"""
Coxeter systems and their growth functions.

A Coxeter system is given by its Coxeter matrix. Finite parabolic
subgroups are recognised from the Coxeter diagram, their growth series
come from Solomon's product over the exponents, and the growth function
of the whole system is assembled from them with Steinberg's
alternating sum.
"""

import json
import logging
import math
from collections import Counter, namedtuple
from functools import reduce

from dataclasses import dataclass

from .errors import (CoxeterMatrixError, NonHyperbolicError, SeriesError,
                     CoxPerronError, ConstantPolynomialError)
from .polyring import Poly, derivative, div_rem, gcd, primitive, squarefree_part
from .sturm import (PLUS_INFINITY, build_sturm, isolate_real_roots,
                    refine_root)

logger = logging.getLogger(__name__)

INFINITY = math.inf


def _parse_entry(value):
    if value in ("inf", "infinity", "∞") or value == INFINITY:
        return INFINITY
    if isinstance(value, bool) or not isinstance(value, int):
        raise CoxeterMatrixError("Coxeter matrix entries are integers or 'inf', got {!r}".format(value))
    return value


class CoxeterMatrix(object):
    """
    The Coxeter matrix of a Coxeter system.

    Parameters
    ----------
    entries : sequence of sequences
       Square symmetric array with ones on the diagonal and entries
       ``m_ij >= 2`` or ``inf`` off the diagonal. ``"inf"`` is accepted
       for the infinite entries.
    labels : sequence of str, optional
       Names for the generators; defaults to ``s1, s2, ...``.

    Raises
    ------
    CoxeterMatrixError
       If the array is not a valid Coxeter matrix.

    Examples
    --------
    >>> m = CoxeterMatrix([[1, 3], [3, 1]])
    >>> m.rank
    2
    """

    def __init__(self, entries, labels=None):
        if not isinstance(entries, (list, tuple)):
            raise CoxeterMatrixError("a Coxeter matrix must be a list of rows, got {!r}".format(entries))
        for i, row in enumerate(entries):
            if not isinstance(row, (list, tuple)):
                raise CoxeterMatrixError("row {} is not a list: {!r}".format(i, row))
        rows = [[_parse_entry(v) for v in row] for row in entries]
        rank = len(rows)
        if rank == 0:
            raise CoxeterMatrixError("a Coxeter matrix has at least one generator")
        for i, row in enumerate(rows):
            if len(row) != rank:
                raise CoxeterMatrixError("row {} has {} entries, expected {}".format(i, len(row), rank))
            if row[i] != 1:
                raise CoxeterMatrixError("diagonal entry ({0}, {0}) must be 1".format(i))
            for j in range(i):
                if row[j] != rows[j][i]:
                    raise CoxeterMatrixError("entries ({0}, {1}) and ({1}, {0}) differ".format(i, j))
                if row[j] < 2:
                    raise CoxeterMatrixError("off-diagonal entry ({}, {}) must be at least 2".format(i, j))
        self.rank = rank
        self.entries = tuple(tuple(row) for row in rows)
        if labels is None:
            labels = ["s{}".format(k + 1) for k in range(rank)]
        if not isinstance(labels, (list, tuple)):
            raise CoxeterMatrixError("labels must be a list of names, got {!r}".format(labels))
        labels = tuple(labels)
        if len(labels) != rank:
            raise CoxeterMatrixError("got {} labels for rank {}".format(len(labels), rank))
        self.labels = labels

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, CoxeterMatrix):
            return NotImplemented
        return self.entries == other.entries and self.labels == other.labels

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.entries, self.labels))

    def __repr__(self):
        return "CoxeterMatrix(rank={}, labels={})".format(self.rank, list(self.labels))

    def is_finite_pair(self, i, j):
        return self.entries[i][j] != INFINITY

    def submatrix(self, indices):
        """The Coxeter matrix of the standard parabolic subgroup on ``indices``."""
        indices = list(indices)
        return CoxeterMatrix([[self.entries[i][j] for j in indices] for i in indices],
                             labels=[self.labels[i] for i in indices])

    def to_dict(self):
        return {"rank": self.rank,
                "labels": list(self.labels),
                "m": [["inf" if v == INFINITY else v for v in row] for row in self.entries]}

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data):
        try:
            entries = data["m"]
        except (KeyError, TypeError):
            raise CoxeterMatrixError("a Coxeter matrix document needs an 'm' array")
        matrix = cls(entries, labels=data.get("labels"))
        if "rank" in data and data["rank"] != matrix.rank:
            raise CoxeterMatrixError("declared rank {} but the matrix has rank {}".format(
                data["rank"], matrix.rank))
        return matrix

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    @classmethod
    def load(cls, path):
        with open(path) as f:
            return cls.from_dict(json.load(f))


_RANK_RULES = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "H": lambda n: n in (3, 4),
    "I": lambda n: n >= 5,
}


@dataclass(frozen=True, order=True)
class FiniteType(object):
    """
    An irreducible finite Coxeter type such as ``A3`` or ``I2(5)``.

    ``n`` is the rank for every family except ``I``, where it is the
    dihedral label ``m``. Use :meth:`dihedral` for rank-two systems so
    that ``I2(3)`` and ``I2(4)`` come out as ``A2`` and ``B2``.
    """
    family: str
    n: int

    def __post_init__(self):
        rule = _RANK_RULES.get(self.family)
        if rule is None or not rule(self.n):
            raise CoxeterMatrixError("no finite Coxeter type {}{}".format(self.family, self.n))

    @classmethod
    def dihedral(cls, m):
        if m == 3:
            return cls("A", 2)
        if m == 4:
            return cls("B", 2)
        return cls("I", m)

    @property
    def rank(self):
        return 2 if self.family == "I" else self.n

    def __str__(self):
        if self.family == "I":
            return "I2({})".format(self.n)
        return "{}{}".format(self.family, self.n)


_EXCEPTIONAL_EXPONENTS = {
    ("E", 6): [1, 4, 5, 7, 8, 11],
    ("E", 7): [1, 5, 7, 9, 11, 13, 17],
    ("E", 8): [1, 7, 11, 13, 17, 19, 23, 29],
    ("F", 4): [1, 5, 7, 11],
    ("H", 3): [1, 5, 9],
    ("H", 4): [1, 11, 19, 29],
}


def exponents(finite_type):
    """
    The exponents of a finite Coxeter type.

    Examples
    --------
    >>> exponents(FiniteType("B", 3))
    [1, 3, 5]
    """
    family, n = finite_type.family, finite_type.n
    if family == "A":
        return list(range(1, n + 1))
    if family == "B":
        return list(range(1, 2 * n, 2))
    if family == "D":
        return sorted(list(range(1, 2 * n - 2, 2)) + [n - 1])
    if family == "I":
        return [1, n - 1]
    return list(_EXCEPTIONAL_EXPONENTS[(family, n)])


def bracket(k):
    """``[k] = 1 + t + ... + t**(k-1)``."""
    return Poly([1] * k)


def solomon_series(types):
    """Growth series of the finite Coxeter group with the given components."""
    return reduce(lambda acc, m: acc * bracket(m + 1),
                  (m for t in types for m in exponents(t)),
                  Poly([1]))


def group_order(types):
    return int(solomon_series(types)(1))


def longest_length(types):
    """Length of the longest element."""
    return sum(m for t in types for m in exponents(t))


def _components(m, nodes):
    nodes = list(nodes)
    seen = set()
    components = []
    for start in nodes:
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in nodes:
                if u not in seen and m.entries[v][u] >= 3:
                    seen.add(u)
                    stack.append(u)
        components.append(sorted(comp))
    return components


def _path_order(nodes, neighbours):
    start = next(v for v in nodes if len(neighbours[v]) == 1)
    order = [start]
    previous = None
    while len(order) < len(nodes):
        v = order[-1]
        nxt = [u for u in neighbours[v] if u != previous]
        previous = v
        order.append(nxt[0])
    return order


def _arm_length(center, first, neighbours):
    length = 1
    previous, v = center, first
    while True:
        nxt = [u for u in neighbours[v] if u != previous]
        if not nxt:
            return length
        previous, v = v, nxt[0]
        length += 1


def _classify_component(m, nodes):
    k = len(nodes)
    if k == 1:
        return FiniteType("A", 1)
    neighbours = {v: [u for u in nodes if u != v and m.entries[v][u] >= 3] for v in nodes}
    edges = [(i, j) for a, i in enumerate(nodes) for j in nodes[a + 1:] if m.entries[i][j] >= 3]
    if len(edges) != k - 1:
        return None
    if k == 2:
        return FiniteType.dihedral(m.entries[nodes[0]][nodes[1]])
    if any(m.entries[i][j] > 5 for i, j in edges):
        return None
    degrees = sorted(len(neighbours[v]) for v in nodes)
    if degrees[-1] > 3:
        return None
    branches = [v for v in nodes if len(neighbours[v]) == 3]
    if len(branches) > 1:
        return None
    if branches:
        if any(m.entries[i][j] != 3 for i, j in edges):
            return None
        center = branches[0]
        arms = sorted(_arm_length(center, u, neighbours) for u in neighbours[center])
        if arms[0] == 1 and arms[1] == 1:
            return FiniteType("D", k)
        if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
            return FiniteType("E", k)
        return None
    order = _path_order(nodes, neighbours)
    labels = [m.entries[order[a]][order[a + 1]] for a in range(k - 1)]
    heavy = [a for a, label in enumerate(labels) if label != 3]
    if not heavy:
        return FiniteType("A", k)
    if len(heavy) > 1:
        return None
    position = heavy[0]
    at_end = position in (0, k - 2)
    if labels[position] == 4:
        if at_end:
            return FiniteType("B", k)
        if k == 4:
            return FiniteType("F", 4)
        return None
    if at_end and k in (3, 4):
        return FiniteType("H", k)
    return None


def _classify(m, nodes):
    for a, i in enumerate(nodes):
        for j in nodes[a + 1:]:
            if m.entries[i][j] == INFINITY:
                return None
    types = []
    for comp in _components(m, nodes):
        t = _classify_component(m, comp)
        if t is None:
            return None
        types.append(t)
    return tuple(sorted(types))


def classify_finite(sub):
    """
    Decompose a Coxeter matrix into finite irreducible types.

    Returns
    -------
    tuple of FiniteType or None
       The sorted components if the group is finite, otherwise ``None``.

    Examples
    --------
    >>> classify_finite(CoxeterMatrix([[1, 3, 2], [3, 1, 4], [2, 4, 1]]))
    (FiniteType(family='B', n=3),)
    """
    return _classify(sub, list(range(sub.rank)))


def enumerate_finite_subsets(m):
    """
    Yield ``(subset, types)`` for every generator subset spanning a
    finite parabolic subgroup, smallest subsets first.

    A subset is only extended by generators beyond its largest member,
    and only when it is itself finite, since finiteness passes to
    subsets.
    """
    yield (), ()
    frontier = [()]
    while frontier:
        level = []
        for subset in frontier:
            start = subset[-1] + 1 if subset else 0
            for j in range(start, m.rank):
                if any(m.entries[i][j] == INFINITY for i in subset):
                    continue
                candidate = subset + (j,)
                types = _classify(m, list(candidate))
                if types is not None:
                    level.append(candidate)
                    yield candidate, types
        frontier = level


def _poly_lcm(a, b):
    return Poly.from_sympy(a.to_sympy().lcm(b.to_sympy())).monic()


@dataclass(frozen=True)
class GrowthFunction(object):
    """
    The growth function in the form ``f(1/t) = numerator / denominator``.

    The pair is in lowest terms, and the denominator is a primitive
    integer polynomial with positive leading coefficient.
    """
    numerator: Poly
    denominator: Poly

    def __post_init__(self):
        if self.denominator.is_zero:
            raise CoxPerronError("growth function with zero denominator")
        if self.denominator.leading < 0:
            raise CoxPerronError("growth denominator must have positive leading coefficient")

    def to_dict(self):
        return {"numerator": self.numerator.to_json(),
                "denominator": self.denominator.to_json()}


def steinberg_sum(m):
    """
    Evaluate ``sum over finite I of (-1)**|I| / f_I(t)`` exactly and
    invert it.

    Parameters
    ----------
    m : CoxeterMatrix

    Returns
    -------
    GrowthFunction
       ``(P, D)`` with ``f(1/t) = P(t)/D(t)``.

    Raises
    ------
    CoxPerronError
       If the alternating sum vanishes identically.
    """
    tally = Counter()
    subsets = 0
    for subset, types in enumerate_finite_subsets(m):
        tally[types] += -1 if len(subset) % 2 else 1
        subsets += 1
    logger.debug("rank %d system: %d finite subsets in %d type classes",
                 m.rank, subsets, len(tally))
    terms = [(coef, solomon_series(types)) for types, coef in sorted(tally.items()) if coef]
    common = reduce(_poly_lcm, (series for _, series in terms), Poly([1]))
    total = Poly()
    for coef, series in terms:
        total = total + div_rem(common, series)[0] * coef
    if total.is_zero:
        raise CoxPerronError("the Steinberg sum vanishes identically")
    shared = gcd(total, common)
    numerator = div_rem(common, shared)[0]
    denominator = div_rem(total, shared)[0]
    content, _ = primitive(denominator)
    factor = 1 / content
    if denominator.leading < 0:
        factor = -factor
    return GrowthFunction(numerator.scale(factor), denominator.scale(factor))


def series_coefficients(gf, length):
    """
    The first ``length + 1`` coefficients of the growth series.

    Raises
    ------
    SeriesError
       If a coefficient is not a nonnegative integer, or the growth
       function does not describe a power series.

    Examples
    --------
    >>> gf = GrowthFunction(Poly([1, 1]), Poly([0, 1]))
    >>> series_coefficients(gf, 3)
    [1, 1, 0, 0]
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    P, D = gf.numerator, gf.denominator
    shift = D.degree - P.degree
    if shift < 0:
        raise SeriesError("numerator degree exceeds denominator degree; not a power series")
    num = P.reverse()
    den = D.reverse()
    head = den[0]
    quotient = []
    for k in range(length + 1 - shift):
        acc = num[k]
        for j in range(1, min(k, den.degree) + 1):
            acc -= den[j] * quotient[k - j]
        quotient.append(acc / head)
    out = [0] * min(shift, length + 1)
    for q in quotient:
        if q.denominator != 1 or q < 0:
            raise SeriesError("series coefficient {} is not a nonnegative integer".format(q))
        out.append(int(q))
    return out


GrowthRate = namedtuple("GrowthRate", ["interval", "decimal", "exceeds_one"])
GrowthRate.__doc__ = """
The largest real root of a growth denominator: an isolating interval,
its decimal rendering and whether the root is larger than one.
"""


def growth_rate(gf, eps):
    """
    The growth rate, the largest real root of the denominator.

    Parameters
    ----------
    gf : GrowthFunction
    eps : Fraction
       Width of the returned interval.

    Returns
    -------
    GrowthRate

    Raises
    ------
    NonHyperbolicError
       If the denominator has no real root.
    """
    D = gf.denominator
    if D.degree < 1:
        raise ConstantPolynomialError("the growth denominator is constant")
    core = squarefree_part(D)
    intervals = isolate_real_roots(core)
    if not intervals:
        raise NonHyperbolicError("the growth denominator has no real root")
    interval = refine_root(core, intervals[-1], eps)
    if core(1) == 0:
        core = div_rem(core, Poly([-1, 1]))[0]
    if core.degree < 1:
        exceeds = False
    else:
        seq = build_sturm(core, derivative(core))
        exceeds = seq.sign_changes_at(1) - seq.sign_changes_at_infinity(PLUS_INFINITY) > 0
    return GrowthRate(interval, interval.to_decimal(), exceeds)
