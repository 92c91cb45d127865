# -*- coding: utf-8 -*-
"""
Floating point cross-checks.

Nothing here feeds a certificate; these helpers exist so that exact
results can be compared against an independent numerical computation
of the roots (eigenvalues of the companion matrix).
"""

import numpy as np
from scipy import linalg


def companion_roots(poly):
    """
    All complex roots of ``poly`` as eigenvalues of its companion matrix.

    Parameters
    ----------
    poly : Poly

    Returns
    -------
    numpy.ndarray
       Complex roots, in no particular order. Empty for constants.
    """
    if poly.degree < 1:
        return np.array([], dtype=complex)
    coefficients = np.array([float(c) for c in reversed(poly.coefficients)])
    return linalg.eigvals(linalg.companion(coefficients))


def real_roots(poly, tolerance=1e-9):
    """The roots whose imaginary part is below ``tolerance``, sorted."""
    roots = companion_roots(poly)
    return np.sort(roots[np.abs(roots.imag) < tolerance].real)


def dominant_real_root(poly, tolerance=1e-9):
    """The largest real root, or ``None`` if there is none."""
    roots = real_roots(poly, tolerance)
    if roots.size == 0:
        return None
    return float(roots[-1])


def moduli(poly):
    return np.sort(np.abs(companion_roots(poly)))
