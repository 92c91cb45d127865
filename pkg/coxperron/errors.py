# -*- coding: utf-8 -*-
"""
Exceptions raised by coxperron.

Every error the package raises deliberately derives from
:class:`CoxPerronError`, so callers (and the command line front end) can
catch the whole family at once. Precondition failures additionally
derive from the builtin exception with the same meaning.
"""


class CoxPerronError(Exception):
    """Base class for all coxperron errors."""


class ZeroPolynomialError(CoxPerronError, ValueError):
    """An operation received the zero polynomial where it needs a nonzero one."""


class PolynomialDivisionError(CoxPerronError, ZeroDivisionError):
    """Division by the zero polynomial."""


class ConstantPolynomialError(CoxPerronError, ValueError):
    """An operation needs a polynomial of degree at least one."""


class EndpointRootError(CoxPerronError, ValueError):
    """An interval endpoint is a root; perturb the endpoint and retry."""


class CommonRootError(CoxPerronError, ValueError):
    """Two polynomials share a root where they must be coprime."""


class NotSquarefreeError(CoxPerronError, ValueError):
    """The polynomial has a repeated root."""


class RootOnCircleError(CoxPerronError, ValueError):
    """The polynomial has a root on the counting circle."""


class CoxeterMatrixError(CoxPerronError, ValueError):
    """A Coxeter matrix violates symmetry, diagonal or label rules."""


class SeriesError(CoxPerronError, ArithmeticError):
    """A growth series produced a coefficient that is not a nonnegative integer."""


class NonHyperbolicError(CoxPerronError, ValueError):
    """The growth denominator has no real root to report as a growth rate."""


class CensusMismatchError(CoxPerronError):
    """The finite-subset census of a polytope family disagrees with its closed forms."""


class ClosedFormMismatchError(CoxPerronError):
    """A computed polynomial disagrees with its printed closed form."""


class FixtureMismatchError(CoxPerronError):
    """A stored fixture is not proportional to the computed counterpart."""
