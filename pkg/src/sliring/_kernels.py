"""Levelwise numeric kernels.

Every kernel exists twice: a pure-numpy version (``*_np``) and a numba
``@njit`` version (``*_nb``). The public names bound at import time pick one
of them. Set ``SLIRING_DISABLE_NUMBA=1`` to force the numpy path; it is also
used automatically when numba cannot be imported.

All arrays are float64. ``lowers``/``uppers`` are ``(n, L)`` stacks of
endpoint sequences, one row per fuzzy number, one column per grid level.
"""
import os

import numpy as np

_DISABLED = os.environ.get("SLIRING_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def deco(fn):
            return fn

        return deco


BACKEND = "numba" if HAVE_NUMBA and not _DISABLED else "numpy"


# ---------------------------------------------------------------------------
# numpy reference path
# ---------------------------------------------------------------------------

def combine_cuts_np(coeffs, lowers, uppers):
    """Levelwise ``sum_i coeffs[i] * [lowers[i], uppers[i]]`` in interval arithmetic."""
    c = coeffs[:, None]
    pos = c >= 0.0
    lo_terms = np.where(pos, c * lowers, c * uppers)
    hi_terms = np.where(pos, c * uppers, c * lowers)
    lo = np.zeros(lowers.shape[1])
    hi = np.zeros(lowers.shape[1])
    # row-by-row accumulation keeps the summation order identical to the jit path
    for i in range(lowers.shape[0]):
        lo += lo_terms[i]
        hi += hi_terms[i]
    return lo, hi


def sup_distance_np(lower_a, upper_a, lower_b, upper_b):
    if lower_a.size == 0:
        return 0.0
    return float(max(np.max(np.abs(lower_a - lower_b)), np.max(np.abs(upper_a - upper_b))))


def resample_np(src_levels, lower, upper, query):
    return np.interp(query, src_levels, lower), np.interp(query, src_levels, upper)


def row_extrema_np(values):
    return values.min(axis=1), values.max(axis=1)


def midpoint_matrix_np(lowers, uppers):
    return ((lowers + uppers) * 0.5).T.copy()


# ---------------------------------------------------------------------------
# numba path
# ---------------------------------------------------------------------------

@njit(cache=True)
def combine_cuts_nb(coeffs, lowers, uppers):
    n, m = lowers.shape
    lo = np.zeros(m)
    hi = np.zeros(m)
    for i in range(n):
        c = coeffs[i]
        if c >= 0.0:
            for k in range(m):
                lo[k] += c * lowers[i, k]
                hi[k] += c * uppers[i, k]
        else:
            for k in range(m):
                lo[k] += c * uppers[i, k]
                hi[k] += c * lowers[i, k]
    return lo, hi


@njit(cache=True)
def sup_distance_nb(lower_a, upper_a, lower_b, upper_b):
    best = 0.0
    for k in range(lower_a.shape[0]):
        d = abs(lower_a[k] - lower_b[k])
        if d > best:
            best = d
        d = abs(upper_a[k] - upper_b[k])
        if d > best:
            best = d
    return best


@njit(cache=True)
def resample_nb(src_levels, lower, upper, query):
    # query must be sorted ascending; walks the source grid once
    m = query.shape[0]
    last = src_levels.shape[0] - 1
    lo = np.empty(m)
    hi = np.empty(m)
    j = 0
    for k in range(m):
        a = query[k]
        if a <= src_levels[0]:
            lo[k] = lower[0]
            hi[k] = upper[0]
            continue
        if a >= src_levels[last]:
            lo[k] = lower[last]
            hi[k] = upper[last]
            continue
        while src_levels[j + 1] < a:
            j += 1
        if src_levels[j + 1] == a:
            lo[k] = lower[j + 1]
            hi[k] = upper[j + 1]
            continue
        t = (a - src_levels[j]) / (src_levels[j + 1] - src_levels[j])
        lo[k] = lower[j] + t * (lower[j + 1] - lower[j])
        hi[k] = upper[j] + t * (upper[j + 1] - upper[j])
    return lo, hi


@njit(cache=True)
def row_extrema_nb(values):
    rows, cols = values.shape
    lo = np.empty(rows)
    hi = np.empty(rows)
    for r in range(rows):
        a = values[r, 0]
        b = values[r, 0]
        for c in range(1, cols):
            v = values[r, c]
            if v < a:
                a = v
            if v > b:
                b = v
        lo[r] = a
        hi[r] = b
    return lo, hi


@njit(cache=True)
def midpoint_matrix_nb(lowers, uppers):
    n, m = lowers.shape
    out = np.empty((m, n))
    for i in range(n):
        for k in range(m):
            out[k, i] = 0.5 * (lowers[i, k] + uppers[i, k])
    return out


if BACKEND == "numba":
    combine_cuts = combine_cuts_nb
    sup_distance = sup_distance_nb
    resample = resample_nb
    row_extrema = row_extrema_nb
    midpoint_matrix = midpoint_matrix_nb
else:
    combine_cuts = combine_cuts_np
    sup_distance = sup_distance_np
    resample = resample_np
    row_extrema = row_extrema_np
    midpoint_matrix = midpoint_matrix_np
