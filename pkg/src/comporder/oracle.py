"""Exhaustive ground truth over orderings.

Works for any monotone callables (affine, clamped, piecewise linear).
Orderings are visited depth-first in lexicographic order, sharing the value
of each prefix with all its extensions; nothing else is clever about it.
"""

from __future__ import annotations

import os
from typing import Callable, Sequence

from .errors import InvalidK, TooLarge
from .numeric import to_rational
from .solvers import Objective, Solution

DEFAULT_LIMIT = 8
LIMIT_ENV = "COMPORDER_ORACLE_LIMIT"


def oracle_limit() -> int:
    raw = os.environ.get(LIMIT_ENV)
    return int(raw) if raw else DEFAULT_LIMIT


def _check_size(n: int, limit: int | None):
    limit = oracle_limit() if limit is None else limit
    if n > limit:
        raise TooLarge(f"n={n} exceeds oracle limit {limit}")


def _walk(fs: Sequence[Callable], c, max_depth: int, visit: Callable):
    n = len(fs)
    used = [False] * n
    prefix: list[int] = []

    def rec(x):
        visit(prefix, x)
        if len(prefix) == max_depth:
            return
        for i in range(n):
            if not used[i]:
                used[i] = True
                prefix.append(i)
                rec(fs[i](x))
                prefix.pop()
                used[i] = False

    rec(c)


class _Best:
    def __init__(self, sign: int, lengths):
        self.sign = sign
        self.lengths = lengths
        self.score = None
        self.prefix: tuple = ()
        self.value = None

    def __call__(self, prefix, x):
        if len(prefix) not in self.lengths:
            return
        score = (self.sign * x, -len(prefix))
        if self.score is None or score > self.score:
            self.score, self.prefix, self.value = score, tuple(prefix), x


def _run(fs, c, lengths, max_depth, objective) -> Solution:
    c = to_rational(c)
    best = _Best(1 if objective is Objective.MAX else -1, lengths)
    _walk(fs, c, max_depth, best)
    rest = tuple(i for i in range(len(fs)) if i not in set(best.prefix))
    return Solution(best.prefix + rest, len(best.prefix), best.value)


def brute_total(fs: Sequence[Callable], c, objective=Objective.MAX, limit=None) -> Solution:
    """Best of all ``n!`` orderings; ties keep the lexicographically first."""
    n = len(fs)
    _check_size(n, limit)
    return _run(fs, c, {n}, n, objective)


def brute_partial(fs: Sequence[Callable], c, objective=Objective.MAX, limit=None) -> Solution:
    """Best ordered subset of any length; ties keep the shortest, then first."""
    n = len(fs)
    _check_size(n, limit)
    return _run(fs, c, range(n + 1), n, objective)


def brute_exact_k(fs: Sequence[Callable], c, k: int, objective=Objective.MAX, limit=None) -> Solution:
    n = len(fs)
    _check_size(n, limit)
    if not 0 <= k <= n:
        raise InvalidK(f"k={k} outside 0..{n}")
    return _run(fs, c, {k}, k, objective)
