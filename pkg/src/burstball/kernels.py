"""Batched per-word statistics over a 2-D array of words (one word per row).

Two implementations with identical results: numba-compiled loops and
vectorised numpy. The active one is chosen at import time; set
``BURSTBALL_PURE_NUMPY=1`` to force numpy (numba is also skipped when it
cannot be imported). Both are importable directly for benchmarking.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("BURSTBALL_PURE_NUMPY", "") not in ("1", "true", "yes")


# ---------------------------------------------------------------- numpy path


def np_run_counts(W: np.ndarray, b: int) -> np.ndarray:
    return 1 + (W[:, :-b] != W[:, b:]).sum(axis=1, dtype=np.int64)


def np_f_weighted(W: np.ndarray, b: int, q: int) -> np.ndarray:
    n = W.shape[1]
    mism = W[:, : n - b] != W[:, b:]
    out = np.zeros(W.shape[0], dtype=np.int64)
    for j in range(1, b):
        m = n - b - j
        if m <= 0:
            break
        fj = (mism[:, :m] & mism[:, j : j + m]).sum(axis=1, dtype=np.int64)
        out += q ** (b - j - 1) * fj
    return out


def np_g_sums(W: np.ndarray, b: int) -> np.ndarray:
    rows, n = W.shape
    m = n - 2 * b
    if m <= 0:
        return np.zeros(rows, dtype=np.int64)
    mism = W[:, : n - b] != W[:, b:]
    prefix = np.zeros((rows, n - b + 1), dtype=np.int64)
    np.cumsum(mism, axis=1, out=prefix[:, 1:])
    per = W[:, :m] == W[:, 2 * b :]
    # First index >= i where the 2b-period breaks (m when it never does).
    idx = np.where(per, m, np.arange(m)[None, :])
    first_break = np.minimum.accumulate(idx[:, ::-1], axis=1)[:, ::-1]
    i = np.arange(m)[None, :]
    lo = i + b
    hi = np.minimum(n - b - 1, first_break - 1 + b)
    ok = (hi >= lo) & mism[:, :m]
    hi_c = np.clip(hi + 1, 0, n - b)
    lo_c = np.broadcast_to(lo, hi.shape)
    counts = np.take_along_axis(prefix, hi_c, axis=1) - np.take_along_axis(prefix, lo_c, axis=1)
    return np.where(ok, counts, 0).sum(axis=1)


def np_max_periodic(W: np.ndarray, p: int) -> np.ndarray:
    rows, n = W.shape
    if n <= p:
        return np.full(rows, n, dtype=np.int64)
    eq = W[:, : n - p] == W[:, p:]
    # Longest run of True per row via reset-at-False cumulative counts.
    k = np.arange(1, n - p + 1)[None, :]
    last_false = np.maximum.accumulate(np.where(eq, 0, k), axis=1)
    return (k - last_false).max(axis=1).astype(np.int64) + p


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:

    @njit(cache=True)
    def nb_run_counts(W, b):
        rows, n = W.shape
        out = np.empty(rows, dtype=np.int64)
        for r in range(rows):
            c = 1
            for k in range(n - b):
                if W[r, k] != W[r, k + b]:
                    c += 1
            out[r] = c
        return out

    @njit(cache=True)
    def nb_f_weighted(W, b, q):
        rows, n = W.shape
        out = np.zeros(rows, dtype=np.int64)
        mism = np.empty(max(n - b, 0), dtype=np.int64)
        for r in range(rows):
            for k in range(n - b):
                mism[k] = W[r, k] != W[r, k + b]
            total = 0
            weight = 1
            for j in range(b - 1, 0, -1):
                fj = 0
                # branch-free so the loop vectorises
                for i in range(n - b - j):
                    fj += mism[i] & mism[i + j]
                total += weight * fj
                weight *= q
            out[r] = total
        return out

    @njit(cache=True)
    def nb_g_sums(W, b):
        rows, n = W.shape
        m = n - 2 * b
        out = np.zeros(rows, dtype=np.int64)
        if m <= 0:
            return out
        prefix = np.zeros(n - b + 1, dtype=np.int64)
        mism = np.zeros(n - b, dtype=np.bool_)
        for r in range(rows):
            for k in range(n - b):
                mism[k] = W[r, k] != W[r, k + b]
                prefix[k + 1] = prefix[k] + (1 if mism[k] else 0)
            total = 0
            reach = m - 1
            for i in range(m - 1, -1, -1):
                if W[r, i] != W[r, i + 2 * b]:
                    reach = i - 1
                    continue
                if mism[i]:
                    hi = min(n - b - 1, reach + b)
                    lo = i + b
                    if hi >= lo:
                        total += prefix[hi + 1] - prefix[lo]
            out[r] = total
        return out

    @njit(cache=True)
    def nb_max_periodic(W, p):
        rows, n = W.shape
        out = np.empty(rows, dtype=np.int64)
        for r in range(rows):
            if n <= p:
                out[r] = n
                continue
            best = 0
            cur = 0
            for k in range(n - p):
                if W[r, k] == W[r, k + p]:
                    cur += 1
                    if cur > best:
                        best = cur
                else:
                    cur = 0
            out[r] = best + p
        return out


if USE_NUMBA:
    _run_counts, _f_weighted, _g_sums, _max_periodic = (
        nb_run_counts,
        nb_f_weighted,
        nb_g_sums,
        nb_max_periodic,
    )
else:
    _run_counts, _f_weighted, _g_sums, _max_periodic = (
        np_run_counts,
        np_f_weighted,
        np_g_sums,
        np_max_periodic,
    )


def _as_words(W) -> np.ndarray:
    W = np.ascontiguousarray(W, dtype=np.int64)
    if W.ndim != 2:
        raise ValueError("expected a 2-D array with one word per row")
    return W


def run_counts(W, b: int) -> np.ndarray:
    return _run_counts(_as_words(W), b)


def f_weighted(W, b: int, q: int) -> np.ndarray:
    """Row-wise sum over j of q^(b-j-1) * f_{b,j}."""
    return _f_weighted(_as_words(W), b, q)


def g_sums(W, b: int) -> np.ndarray:
    """Row-wise sum of the g statistics, linear time per row."""
    return _g_sums(_as_words(W), b)


def max_periodic(W, p: int) -> np.ndarray:
    return _max_periodic(_as_words(W), p)


INT64_SAFE = 2**62


def explicit_sizes(W, q: int, b: int) -> np.ndarray:
    """Unit-radius ball sizes for every row of ``W`` (int64).

    Raises OverflowError when the general upper bound would not fit.
    """
    W = _as_words(W)
    n = W.shape[1]
    if n < b + 1:
        raise ValueError(f"need n >= b+1 (n={n}, b={b})")
    bound = q ** (b - 1) * (n - b + 1) * ((n - b + 1) * (q - 1) + 1)
    if bound >= INT64_SAFE:
        raise OverflowError("ball sizes exceed int64; use the exact per-word path")
    lead = q ** (b - 1) * ((n - b + 1) * (q - 1) - 1)
    return lead * _run_counts(W, b) + 2 * q ** (b - 1) - _f_weighted(W, b, q) - _g_sums(W, b)


def all_words_array(n: int, q: int) -> np.ndarray:
    """Sigma_q^n as a (q^n, n) array in lexicographic row order."""
    idx = np.arange(q**n, dtype=np.int64)
    powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % q


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"
