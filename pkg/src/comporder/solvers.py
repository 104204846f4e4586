"""Polynomial composition-ordering solvers for monotone affine functions.

Conventions used throughout:

* permutations are 0-based tuples; ``perm[0]`` is applied first (innermost);
* ``prefix_len`` functions are applied, the rest of ``perm`` lists the
  unused ones;
* identity functions are dropped before solving and appended at the end of
  the permutation, after the applied prefix.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvalidK, Unsupported
from .functions import AffineFn, ClampedFn, reflect
from .numeric import ONE, Rational, to_rational
from .ordering import lex_sort


class Objective(enum.Enum):
    MAX = "max"
    MIN = "min"


class Mode(enum.Enum):
    TOTAL = "total"
    PARTIAL = "partial"
    EXACT_K = "exact-k"


@dataclass(frozen=True)
class Instance:
    functions: tuple
    start: Rational
    objective: Objective = Objective.MAX
    mode: Mode = Mode.TOTAL
    k: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "functions", tuple(self.functions))
        object.__setattr__(self, "start", to_rational(self.start))
        if self.mode is Mode.EXACT_K:
            if self.k is None or not 0 <= self.k <= len(self.functions):
                raise InvalidK(f"k={self.k} outside 0..{len(self.functions)}")

    @property
    def function_class(self) -> str:
        kinds = {type(f) for f in self.functions}
        if kinds <= {AffineFn}:
            return "affine"
        if kinds == {ClampedFn}:
            return "clamped"
        return "pwl"


@dataclass(frozen=True)
class Solution:
    permutation: tuple
    prefix_len: int
    value: Rational
    rotation_index: int | None = None
    flags: tuple = field(default=())

    @property
    def prefix(self) -> tuple:
        return self.permutation[: self.prefix_len]


def fold(fs: Sequence, order: Sequence[int], c):
    """Apply ``fs[order[0]]`` first, then ``fs[order[1]]``, and so on."""
    x = c
    for i in order:
        x = fs[i](x)
    return x


def _split_identities(fs: Sequence[AffineFn]):
    ids = [i for i, f in enumerate(fs) if f.is_identity]
    return [i for i, f in enumerate(fs) if not f.is_identity], ids


def _lex_order(fs: Sequence[AffineFn], indices: Sequence[int]) -> list[int]:
    sub = [fs[i] for i in indices]
    return [indices[j] for j in lex_sort(sub)]


def _improving_fold(fs: Sequence[AffineFn], order: Sequence[int], c, skip=None):
    """Fold ``max(f, id)`` along ``order``; return value and improving steps."""
    x = c
    improving = []
    for i in order:
        if i == skip:
            continue
        f = fs[i]
        y = f.slope * x + f.intercept
        if y > x:
            improving.append(i)
            x = y
    return x, improving


def _complete(prefix: Sequence[int], n: int) -> tuple:
    used = set(prefix)
    return (*prefix, *(i for i in range(n) if i not in used))


def solve_partial_linear(fs: Sequence[AffineFn], c) -> Solution:
    """Best prefix of some ordering of affine functions, in O(n log n).

    The hulls ``max(f_i, id)`` sorted by ``(delta, gamma)`` form an optimal
    total ordering; the steps where the running value strictly increases
    are the functions actually worth applying.
    """
    c = to_rational(c)
    work, ids = _split_identities(fs)
    order = _lex_order(fs, work)
    value, improving = _improving_fold(fs, order, c)
    applied = set(improving)
    rest = [i for i in order if i not in applied]
    return Solution(tuple(improving + rest + ids), len(improving), value)


def rotation_values(fs_sorted: Sequence[AffineFn], c) -> list:
    """Values of all cyclic shifts of ``fs_sorted``, in O(n).

    Entry ``t`` is the value when ``fs_sorted[t]`` is applied first and the
    sequence wraps around.  Each shift moves the innermost function to the
    outside; with ``P`` the product of all slopes,
    ``d[t+1] = a_t (d[t] - P c) - b_t (P - 1) + P c``.
    """
    c = to_rational(c)
    n = len(fs_sorted)
    if n == 0:
        return []
    d = fold(fs_sorted, range(n), c)
    prod = ONE
    for f in fs_sorted:
        prod *= f.slope
    pc = prod * c
    pm1 = prod - 1
    out = [d]
    for t in range(n - 1):
        f = fs_sorted[t]
        d = f.slope * (d - pc) - f.intercept * pm1 + pc
        out.append(d)
    return out


def solve_total_linear(fs: Sequence[AffineFn], c) -> Solution:
    """Best ordering of all affine functions, in O(n log n).

    Some cyclic shift of the ``(delta, gamma)`` order is optimal; all shifts
    are scored at once by :func:`rotation_values`.  Ties go to the smallest
    shift.
    """
    c = to_rational(c)
    work, ids = _split_identities(fs)
    order = _lex_order(fs, work)
    if not order:
        return Solution(tuple(ids), len(fs), c, rotation_index=None)
    d = rotation_values([fs[i] for i in order], c)
    t = max(range(len(d)), key=lambda j: (d[j], -j))
    perm = order[t:] + order[:t] + ids
    return Solution(tuple(perm), len(fs), d[t], rotation_index=t)


def solve_exact_k(fs: Sequence[AffineFn], c, k: int) -> Solution:
    """Best composition of exactly ``k`` of the affine functions, O(k n^2).

    Functions are relabelled in ``(delta, gamma)`` order.  For every cyclic
    window start ``i`` a DP over the window picks ``l`` functions in window
    order; ``m[j][l] = max(m[j-1][l], f_j(m[j-1][l-1]))``.  Ties prefer
    skipping; across windows the first window wins.
    """
    c = to_rational(c)
    n = len(fs)
    if not 0 <= k <= n:
        raise InvalidK(f"k={k} outside 0..{n}")
    work, ids = _split_identities(fs)
    order = _lex_order(fs, work)
    m = len(order)
    # identities are free filler: any l in [lo, hi] non-identities works
    lo, hi = max(0, k - len(ids)), min(k, m)

    best = None  # (value, window, l, take-table)
    if m == 0 or hi == 0:
        best = (c, 0, 0, None)
    else:
        slopes = [fs[i].slope for i in order]
        inters = [fs[i].intercept for i in order]
        for w in range(m):
            row = [c] + [None] * hi
            take = []
            for j in range(m):
                idx = (w + j) % m
                a, b = slopes[idx], inters[idx]
                tk = bytearray(hi + 1)
                for l in range(min(j + 1, hi), 0, -1):
                    v = a * row[l - 1] + b
                    cur = row[l]
                    if cur is None or v > cur:
                        row[l] = v
                        tk[l] = 1
                take.append(tk)
            for l in range(lo, hi + 1):
                if best is None or row[l] > best[0]:
                    best = (row[l], w, l, take)

    value, w, l, take = best
    chosen = []
    if take is not None:
        for j in range(m - 1, -1, -1):
            if l == 0:
                break
            if take[j][l]:
                chosen.append(order[(w + j) % m])
                l -= 1
        chosen.reverse()
    prefix = chosen + ids[: k - len(chosen)]
    return Solution(_complete(prefix, n), k, value)


def solve_partial_clamped(hs: Sequence[ClampedFn], c) -> Solution:
    """Best prefix ordering for ``h_i = max(a_i x + b_i, c_i)``, in O(n^2).

    Some optimum uses a floor at most once, on the first applied function.
    So it suffices to solve the affine partial problem from ``c`` and, for
    every candidate first function ``j``, from ``c_j`` without ``j``.  The
    ``(delta, gamma)`` order is computed once and shared.  Ties prefer the
    plain instance, then the smallest ``j``.
    """
    c = to_rational(c)
    n = len(hs)
    fs = [h.affine for h in hs]
    work = [i for i in range(n) if not fs[i].is_identity]
    order = _lex_order(fs, work)

    value, improving = _improving_fold(fs, order, c)
    best_prefix = improving
    best_first = None
    for first in range(n):
        v, imp = _improving_fold(fs, order, hs[first].floor, skip=first)
        if v > value:
            value, best_prefix, best_first = v, imp, first

    prefix = best_prefix if best_first is None else [best_first, *best_prefix]
    flags = []
    if best_first is not None and not best_prefix and hs[best_first](c) != hs[best_first].floor:
        flags.append("floor-not-attained")
    if fold(hs, prefix, c) != value:
        flags.append("reevaluation-mismatch")
    return Solution(_complete(prefix, n), len(prefix), value, flags=tuple(flags))


def solve_min(instance: Instance) -> Solution:
    """Minimisation through reflection: ``min f(...)(c) = -max f~(...)(-c)``."""
    if instance.objective is not Objective.MIN:
        raise Unsupported("solve_min needs a MIN instance")
    if instance.function_class != "affine":
        raise Unsupported("minimisation is only solved exactly for affine functions")
    mirrored = Instance(
        tuple(reflect(f) for f in instance.functions),
        -instance.start,
        Objective.MAX,
        instance.mode,
        instance.k,
    )
    sol = _solve_max(mirrored)
    return Solution(sol.permutation, sol.prefix_len, -sol.value, sol.rotation_index, sol.flags)


def _solve_max(instance: Instance) -> Solution:
    cls = instance.function_class
    fs, c = instance.functions, instance.start
    if cls == "affine":
        if instance.mode is Mode.TOTAL:
            return solve_total_linear(fs, c)
        if instance.mode is Mode.PARTIAL:
            return solve_partial_linear(fs, c)
        return solve_exact_k(fs, c, instance.k)
    if cls == "clamped" and instance.mode is Mode.PARTIAL:
        return solve_partial_clamped(fs, c)
    raise Unsupported(f"no polynomial solver for {cls} functions in {instance.mode.value} mode")


def solve(instance: Instance) -> Solution:
    """Dispatch an instance to the matching exact solver."""
    if instance.objective is Objective.MIN:
        return solve_min(instance)
    return _solve_max(instance)

