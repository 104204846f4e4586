"""Approximate float64 versions of the affine solvers.

Same algorithms as :mod:`comporder.solvers`, but on numpy arrays.  Results
are approximate: near-ties in the sort key or in the final comparison may
resolve differently from the exact solvers.  Never used by correctness
tests as ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels


@dataclass(frozen=True)
class FloatSolution:
    permutation: np.ndarray
    prefix_len: int
    value: float
    rotation_index: int | None = None
    approximate: bool = True


def _as_arrays(slopes, intercepts):
    a = np.asarray(slopes, dtype=np.float64)
    b = np.asarray(intercepts, dtype=np.float64)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError("slopes and intercepts must be 1-d arrays of equal length")
    if np.any(a < 0):
        raise ValueError("slopes must be nonnegative")
    return a, b


def lex_order(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Indices sorted by ``(delta, gamma, index)``; identities excluded."""
    keep = np.flatnonzero(~((a == 1.0) & (b == 0.0)))
    a, b = a[keep], b[keep]
    dlt = np.where(a >= 1.0, 1, -1)
    with np.errstate(divide="ignore", invalid="ignore"):
        gam = np.where(a != 1.0, b / (1.0 - a), np.where(b < 0, np.inf, -np.inf))
    return keep[np.lexsort((keep, gam, dlt))]


def _identities(a, b):
    return np.flatnonzero((a == 1.0) & (b == 0.0))


def solve_total_float(slopes, intercepts, c: float) -> FloatSolution:
    a, b = _as_arrays(slopes, intercepts)
    order = lex_order(a, b)
    ids = _identities(a, b)
    if order.size == 0:
        return FloatSolution(ids, a.size, float(c))
    d = _kernels.rotation_values(a[order], b[order], float(c))
    t = int(np.argmax(d))
    perm = np.concatenate([order[t:], order[:t], ids])
    return FloatSolution(perm, a.size, float(d[t]), rotation_index=t)


def solve_partial_float(slopes, intercepts, c: float) -> FloatSolution:
    a, b = _as_arrays(slopes, intercepts)
    order = lex_order(a, b)
    value, taken = _kernels.hull_fold(a[order], b[order], float(c))
    perm = np.concatenate([order[taken], order[~taken], _identities(a, b)])
    return FloatSolution(perm, int(taken.sum()), float(value))


def solve_exact_k_float(slopes, intercepts, c: float, k: int) -> FloatSolution:
    a, b = _as_arrays(slopes, intercepts)
    n = a.size
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    order = lex_order(a, b)
    ids = _identities(a, b)
    m = order.size
    lo, hi = max(0, k - ids.size), min(k, m)
    if m == 0 or hi == 0:
        chosen = np.empty(0, dtype=np.int64)
        value = float(c)
    else:
        sa, sb = a[order], b[order]
        rows = _kernels.exact_k_rows(sa, sb, float(c), hi)
        window = rows[:, lo : hi + 1]
        # first maximum in (window, l) row-major order, matching the exact solver
        flat = int(np.argmax(window))
        w, l = divmod(flat, window.shape[1])
        l += lo
        value = float(rows[w, l])
        take = _kernels.exact_k_take(sa, sb, float(c), hi, w)
        picked = []
        for j in range(m - 1, -1, -1):
            if l == 0:
                break
            if take[j, l]:
                picked.append(order[(w + j) % m])
                l -= 1
        chosen = np.array(picked[::-1], dtype=np.int64)
    prefix = np.concatenate([chosen, ids[: k - chosen.size]]).astype(np.int64)
    rest = np.setdiff1d(np.arange(n), prefix, assume_unique=True)
    return FloatSolution(np.concatenate([prefix, rest]), k, value)
