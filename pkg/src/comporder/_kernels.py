"""Float64 inner loops for the approximate backend.

Each kernel exists twice: a numba ``@njit`` version and a plain numpy
version with identical semantics.  ``COMPORDER_DISABLE_NUMBA=1`` (or numba
being unavailable) selects the numpy versions at import time.
"""

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("COMPORDER_DISABLE_NUMBA", "") not in ("1", "true", "yes")


# -- numpy reference versions -------------------------------------------------


def rotation_values_numpy(a, b, c):
    n = a.shape[0]
    out = np.empty(n)
    if n == 0:
        return out
    x = c
    for t in range(n):
        x = a[t] * x + b[t]
    prod = np.prod(a)
    pc = prod * c
    pm1 = prod - 1.0
    out[0] = x
    for t in range(n - 1):
        out[t + 1] = a[t] * (out[t] - pc) - b[t] * pm1 + pc
    return out


def hull_fold_numpy(a, b, c):
    n = a.shape[0]
    taken = np.zeros(n, dtype=np.bool_)
    x = c
    for t in range(n):
        y = a[t] * x + b[t]
        if y > x:
            x = y
            taken[t] = True
    return x, taken


def exact_k_rows_numpy(a, b, c, hi):
    """Final DP row of every window, shape ``(m, hi + 1)``; -inf = unreachable."""
    m = a.shape[0]
    rows = np.full((m, hi + 1), -np.inf)
    rows[:, 0] = c
    starts = np.arange(m)
    for j in range(m):
        idx = (starts + j) % m
        top = min(j + 1, hi)
        prev = rows[:, 0:top]
        cand = a[idx, None] * prev + b[idx, None]
        cur = rows[:, 1 : top + 1]
        rows[:, 1 : top + 1] = np.where(cand > cur, cand, cur)
    return rows


def exact_k_take_numpy(a, b, c, hi, w):
    """Take-table of a single window, shape ``(m, hi + 1)``."""
    m = a.shape[0]
    row = np.full(hi + 1, -np.inf)
    row[0] = c
    take = np.zeros((m, hi + 1), dtype=np.bool_)
    for j in range(m):
        idx = (w + j) % m
        top = min(j + 1, hi)
        cand = a[idx] * row[0:top] + b[idx]
        cur = row[1 : top + 1]
        better = cand > cur
        row[1 : top + 1] = np.where(better, cand, cur)
        take[j, 1 : top + 1] = better
    return take


# -- numba versions -----------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def rotation_values_numba(a, b, c):
        n = a.shape[0]
        out = np.empty(n)
        if n == 0:
            return out
        x = c
        prod = 1.0
        for t in range(n):
            x = a[t] * x + b[t]
            prod *= a[t]
        pc = prod * c
        pm1 = prod - 1.0
        out[0] = x
        for t in range(n - 1):
            out[t + 1] = a[t] * (out[t] - pc) - b[t] * pm1 + pc
        return out

    @njit(cache=True)
    def hull_fold_numba(a, b, c):
        n = a.shape[0]
        taken = np.zeros(n, dtype=np.bool_)
        x = c
        for t in range(n):
            y = a[t] * x + b[t]
            if y > x:
                x = y
                taken[t] = True
        return x, taken

    @njit(cache=True)
    def exact_k_rows_numba(a, b, c, hi):
        m = a.shape[0]
        rows = np.full((m, hi + 1), -np.inf)
        for w in range(m):
            rows[w, 0] = c
            for j in range(m):
                idx = (w + j) % m
                aj = a[idx]
                bj = b[idx]
                top = min(j + 1, hi)
                for l in range(top, 0, -1):
                    v = aj * rows[w, l - 1] + bj
                    if v > rows[w, l]:
                        rows[w, l] = v
        return rows

    @njit(cache=True)
    def exact_k_take_numba(a, b, c, hi, w):
        m = a.shape[0]
        row = np.full(hi + 1, -np.inf)
        row[0] = c
        take = np.zeros((m, hi + 1), dtype=np.bool_)
        for j in range(m):
            idx = (w + j) % m
            top = min(j + 1, hi)
            for l in range(top, 0, -1):
                v = a[idx] * row[l - 1] + b[idx]
                if v > row[l]:
                    row[l] = v
                    take[j, l] = True
        return take


if USE_NUMBA:
    rotation_values = rotation_values_numba
    hull_fold = hull_fold_numba
    exact_k_rows = exact_k_rows_numba
    exact_k_take = exact_k_take_numba
else:
    rotation_values = rotation_values_numpy
    hull_fold = hull_fold_numpy
    exact_k_rows = exact_k_rows_numpy
    exact_k_take = exact_k_take_numpy
