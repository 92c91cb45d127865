# -*- coding: utf-8 -*-
"""
Perron certificates for the growth rates of the P_n family.

The growth rate of P_n is the largest real root tau of the growth
denominator D_n. It is a Perron number when every other root of D_n is
strictly smaller in modulus. For a squarefree D_n with no root on the
circle ``|z| = 2`` this holds as soon as all but one root lie inside
the circle and the remaining one is real and larger than 2. Every
number in a certificate comes from exact arithmetic.
"""

import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import repeat
from typing import Dict, List, Optional

import pandas as pd

from .coxeter import steinberg_sum
from .diskcount import has_root_on_circle, kronecker_count
from .errors import ClosedFormMismatchError, CoxPerronError
from .pnfamily import build_pn, closed_form_Dn, closed_form_Pn
from .polyring import Poly, as_rational, cauchy_bound, derivative, resultant
from .sturm import (Interval, MINUS_INFINITY, PLUS_INFINITY, build_sturm,
                    refine_root)

logger = logging.getLogger(__name__)

CERTIFICATE_KEYS = ("n", "d_coeffs", "resultant", "positive_roots", "negative_roots",
                    "disk2_count", "roots_beyond_2", "tau", "perron", "elapsed_ms",
                    "failure", "diagnostics")


class StageFailure(CoxPerronError):
    """A certification stage could not establish its claim."""

    def __init__(self, stage, reason):
        super(StageFailure, self).__init__("{}: {}".format(stage, reason))
        self.stage = stage
        self.reason = reason


@dataclass
class PerronCertificate(object):
    """
    The outcome of certifying one member of the P_n family.

    Count fields are ``None`` when the run stopped before the stage that
    produces them; ``failure`` then names that stage.
    """
    n: int
    d_coeffs: List[int]
    resultant_value: Optional[int] = None
    positive_root_count: Optional[int] = None
    negative_root_count: Optional[int] = None
    disk2_count: Optional[int] = None
    roots_beyond_2: Optional[int] = None
    tau_interval: Optional[Interval] = None
    tau_decimal: Optional[str] = None
    perron: bool = False
    elapsed_ms: int = field(default=0, compare=False)
    failure: Optional[str] = None
    diagnostics: Dict[str, int] = field(default_factory=dict)

    @property
    def degree(self):
        return len(self.d_coeffs) - 1

    @property
    def distribution(self):
        """``(positive, negative)`` real root counts."""
        return (self.positive_root_count, self.negative_root_count)

    def to_dict(self):
        tau = None
        if self.tau_interval is not None:
            tau = {"lo": str(self.tau_interval.lo), "hi": str(self.tau_interval.hi),
                   "decimal": self.tau_decimal}
        values = {
            "n": self.n,
            "d_coeffs": list(self.d_coeffs),
            "resultant": None if self.resultant_value is None else str(self.resultant_value),
            "positive_roots": self.positive_root_count,
            "negative_roots": self.negative_root_count,
            "disk2_count": self.disk2_count,
            "roots_beyond_2": self.roots_beyond_2,
            "tau": tau,
            "perron": self.perron,
            "elapsed_ms": self.elapsed_ms,
            "failure": self.failure,
            "diagnostics": dict(sorted(self.diagnostics.items())),
        }
        return {key: values[key] for key in CERTIFICATE_KEYS}

    def to_json(self, indent=None):
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data):
        tau = data.get("tau")
        return cls(n=data["n"],
                   d_coeffs=list(data["d_coeffs"]),
                   resultant_value=None if data.get("resultant") is None else int(data["resultant"]),
                   positive_root_count=data.get("positive_roots"),
                   negative_root_count=data.get("negative_roots"),
                   disk2_count=data.get("disk2_count"),
                   roots_beyond_2=data.get("roots_beyond_2"),
                   tau_interval=None if tau is None else Interval(Fraction(tau["lo"]), Fraction(tau["hi"])),
                   tau_decimal=None if tau is None else tau["decimal"],
                   perron=data["perron"],
                   elapsed_ms=data.get("elapsed_ms", 0),
                   failure=data.get("failure"),
                   diagnostics=dict(data.get("diagnostics") or {}))

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def _default_jobs():
    value = os.environ.get("COXPERRON_JOBS")
    if not value:
        return None
    try:
        jobs = int(value)
    except ValueError:
        raise ValueError("COXPERRON_JOBS must be a positive integer, got {!r}".format(value))
    if jobs < 1:
        raise ValueError("COXPERRON_JOBS must be a positive integer, got {!r}".format(value))
    return jobs


class PerronCertifier(object):
    """
    Runs the certification pipeline for members of the P_n family.

    Parameters
    ----------
    eps : Fraction, optional
       Width of the interval reported for tau.
    jobs : int, optional
       Worker processes used by :meth:`sweep`. Defaults to the
       ``COXPERRON_JOBS`` environment variable, or 1.

    Examples
    --------
    >>> cert = PerronCertifier().certify(1)
    >>> cert.perron
    True
    """

    eps = Fraction(1, 10 ** 12)
    radius = Fraction(2)
    jobs = 1
    sweep_range = (1, 60)

    def __init__(self, eps=None, jobs=None):
        if eps is not None:
            self.eps = as_rational(eps)
            if self.eps <= 0:
                raise ValueError("eps must be positive")
        if jobs is None:
            jobs = _default_jobs()
        if jobs is not None:
            if jobs < 1:
                raise ValueError("jobs must be at least 1")
            self.jobs = jobs

    def growth_denominator(self, n):
        """
        Steinberg's growth function of P_n, checked against the closed
        forms.

        Raises
        ------
        ClosedFormMismatchError
           If the computed numerator or denominator differs from the
           closed form.
        """
        gf = steinberg_sum(build_pn(n).matrix)
        if gf.denominator != closed_form_Dn(n):
            raise ClosedFormMismatchError("Steinberg denominator of P_{} is {}, expected {}".format(
                n, gf.denominator, closed_form_Dn(n)))
        if gf.numerator != closed_form_Pn():
            raise ClosedFormMismatchError("Steinberg numerator of P_{} is {}, expected {}".format(
                n, gf.numerator, closed_form_Pn()))
        return gf.denominator

    def certify(self, n):
        """
        Certify that the growth rate of P_n is a Perron number.

        Stage failures are recorded on the certificate; only a
        disagreement with the closed forms raises.

        Returns
        -------
        PerronCertificate
        """
        start = time.perf_counter()
        logger.debug("P_%d: building growth function", n)
        D = self.growth_denominator(n)
        cert = PerronCertificate(n=n, d_coeffs=[int(c) for c in D.coefficients])
        try:
            self._run_stages(D, cert)
        except StageFailure as exc:
            logger.warning("P_%d: %s", n, exc)
            cert.failure = str(exc)
            cert.perron = False
        cert.elapsed_ms = int(round((time.perf_counter() - start) * 1000))
        return cert

    def _run_stages(self, D, cert):
        n, r = cert.n, self.radius
        Dp = derivative(D)

        logger.debug("P_%d: simplicity", n)
        value = resultant(D, Dp)
        cert.resultant_value = int(value)
        if value == 0:
            raise StageFailure("simplicity", "resultant of D and D' vanishes")

        logger.debug("P_%d: real root distribution", n)
        if D(0) == 0:
            raise StageFailure("real-roots", "0 is a root of D")
        seq = build_sturm(D, Dp)
        w0 = seq.sign_changes_at(0)
        w_plus = seq.sign_changes_at_infinity(PLUS_INFINITY)
        w_minus = seq.sign_changes_at_infinity(MINUS_INFINITY)
        cert.positive_root_count = w0 - w_plus
        cert.negative_root_count = w_minus - w0
        cert.diagnostics.update(w0=w0, w_inf=w_plus, w_minus_inf=w_minus)

        logger.debug("P_%d: roots in the disk of radius %s", n, r)
        if has_root_on_circle(D, r):
            raise StageFailure("disk", "D has a root of modulus {}".format(r))
        disk = kronecker_count(D, r)
        cert.disk2_count = disk.count
        cert.diagnostics.update(disk_w_inf=disk.w_plus_infinity,
                                disk_w_minus_inf=disk.w_minus_infinity)

        logger.debug("P_%d: roots beyond %s", n, r)
        if D(r) == 0:
            raise StageFailure("beyond-radius", "{} is a root of D".format(r))
        bound = cauchy_bound(D) + 1
        w_r = seq.sign_changes_at(r)
        cert.roots_beyond_2 = w_r - seq.sign_changes_at(bound)
        cert.diagnostics.update(w2=w_r)
        if cert.roots_beyond_2 != 1:
            raise StageFailure("beyond-radius", "{} real roots beyond {}".format(cert.roots_beyond_2, r))

        logger.debug("P_%d: refining tau to width %s", n, self.eps)
        cert.tau_interval = refine_root(D, Interval(r, bound), self.eps)
        cert.tau_decimal = cert.tau_interval.to_decimal()

        if cert.disk2_count != D.degree - 1:
            raise StageFailure("perron", "{} of {} roots inside radius {}".format(
                cert.disk2_count, D.degree, r))
        cert.perron = True

    def sweep(self, start=None, stop=None):
        """
        Certify every n in ``start..stop`` inclusive.

        Per-n failures end up on the corresponding certificate; the list
        is ordered by n whatever the number of worker processes.
        """
        default_start, default_stop = self.sweep_range
        start = default_start if start is None else start
        stop = default_stop if stop is None else stop
        if not 1 <= start <= stop:
            raise ValueError("need 1 <= start <= stop, got {}..{}".format(start, stop))
        ns = list(range(start, stop + 1))
        if self.jobs > 1 and len(ns) > 1:
            with ProcessPoolExecutor(max_workers=self.jobs) as executor:
                certs = list(executor.map(_certify_one, ns, repeat(self.eps)))
        else:
            certs = [_certify_one(n, self.eps) for n in ns]
        for cert in certs:
            logger.info("P_%d: perron=%s tau=%s (%d ms)", cert.n, cert.perron,
                        cert.tau_decimal, cert.elapsed_ms)
        return certs


def _certify_one(n, eps):
    try:
        return PerronCertifier(eps=eps, jobs=1).certify(n)
    except ClosedFormMismatchError as exc:
        failure = "closed-form: {}".format(exc)
    except StageFailure as exc:
        failure = str(exc)
    except CoxPerronError as exc:
        failure = "growth-function: {}".format(exc)
    logger.warning("P_%d: %s", n, failure)
    return PerronCertificate(n=n, d_coeffs=[], failure=failure)


def certify_pn(n, eps=None):
    """Certify P_n with the default settings."""
    return PerronCertifier(eps=eps).certify(n)


def sweep(start, stop, eps=None, jobs=None):
    """Certify P_start..P_stop."""
    return PerronCertifier(eps=eps, jobs=jobs).sweep(start, stop)


def summarise(certificates):
    """
    One row per certificate.

    Returns
    -------
    pandas.DataFrame
       Indexed by n, with the root counts, tau and the verdict.
    """
    rows = [{"n": c.n,
             "positive_roots": c.positive_root_count,
             "negative_roots": c.negative_root_count,
             "disk2_count": c.disk2_count,
             "roots_beyond_2": c.roots_beyond_2,
             "tau": c.tau_decimal,
             "perron": c.perron,
             "failure": c.failure} for c in certificates]
    columns = ["n", "positive_roots", "negative_roots", "disk2_count",
               "roots_beyond_2", "tau", "perron", "failure"]
    return pd.DataFrame(rows, columns=columns).set_index("n")


def distribution_transitions(certificates):
    """
    Where the real root distribution changes along a sweep.

    Returns
    -------
    list of tuple
       ``(n, previous, current)`` with the ``(positive, negative)`` counts
       of P_{n-1} and P_n, for each n at which they differ.
    """
    ordered = sorted(certificates, key=lambda c: c.n)
    changes = []
    for before, after in zip(ordered, ordered[1:]):
        if before.distribution != after.distribution:
            changes.append((after.n, before.distribution, after.distribution))
    return changes


def replay(certificate):
    """
    Recompute the count fields of a certificate from its ``d_coeffs``
    alone and return them as a dict keyed like :meth:`PerronCertificate.to_dict`.
    """
    D = Poly(certificate.d_coeffs)
    seq = build_sturm(D, derivative(D))
    w0 = seq.sign_changes_at(0)
    bound = cauchy_bound(D) + 1
    return {"positive_roots": w0 - seq.sign_changes_at_infinity(PLUS_INFINITY),
            "negative_roots": seq.sign_changes_at_infinity(MINUS_INFINITY) - w0,
            "disk2_count": kronecker_count(D, 2).count,
            "roots_beyond_2": seq.sign_changes_at(2) - seq.sign_changes_at(bound),
            "resultant": str(int(resultant(D, derivative(D))))}
