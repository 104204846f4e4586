"""Reduction instances from Partition and ProductPartition.

Each gadget is ``n + 2`` two-piece monotone functions started at 0.  The
first ``n + 1`` already separate yes- from no-instances by a fixed gap; the
last is a steep affine map that blows any yes-value up by the factor
``alpha``, so no constant-factor approximation can exist.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import BadInput, NotEvenSum, TooLarge
from .functions import AffineFn, MonotonePwlFn
from .numeric import ZERO, Rational, normalize, to_rational
from .oracle import brute_partial, oracle_limit


@dataclass(frozen=True)
class PartitionInput:
    weights: tuple
    alpha: Rational = field(default_factory=lambda: to_rational(2))

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(self, "alpha", to_rational(self.alpha))
        if not self.weights or any(w < 1 for w in self.weights):
            raise BadInput("weights must be positive integers")
        if sum(self.weights) % 2:
            raise NotEvenSum(f"weights sum to {sum(self.weights)}, which is odd")
        if self.alpha <= 1:
            raise BadInput("alpha must exceed 1")

    @property
    def half_sum(self) -> int:
        return sum(self.weights) // 2


@dataclass(frozen=True)
class ProductPartitionInput:
    factors: tuple
    alpha: Rational = field(default_factory=lambda: to_rational(2))

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(a) for a in self.factors))
        object.__setattr__(self, "alpha", to_rational(self.alpha))
        if not self.factors or any(a <= 1 for a in self.factors):
            raise BadInput("factors must be integers greater than 1")
        prod = math.prod(self.factors)
        if math.isqrt(prod) ** 2 != prod:
            raise BadInput(f"product {prod} is not a perfect square")
        if self.alpha <= 1:
            raise BadInput("alpha must exceed 1")

    @property
    def root(self) -> int:
        return math.isqrt(math.prod(self.factors))


def partition_gadget(inp: PartitionInput) -> tuple[list[MonotonePwlFn], Rational]:
    """Concave gadget: shifts ``x + w_i``, a two-piece kink, a steep map."""
    half = inp.half_sum
    fs = [MonotonePwlFn.affine(AffineFn(1, w)) for w in inp.weights]
    fs.append(MonotonePwlFn.lower_envelope([AffineFn(2, 0), AffineFn(normalize(1, 2), normalize(3 * half, 2))]))
    fs.append(MonotonePwlFn.affine(steep_partition(inp)))
    return fs, ZERO


def steep_partition(inp: PartitionInput) -> AffineFn:
    """``6 alpha H (x - p) + p`` with fixpoint ``p = 3H - 1/2``, ``H`` the half sum."""
    half = inp.half_sum
    pivot = 3 * half - normalize(1, 2)
    s = 6 * inp.alpha * half
    return AffineFn(s, pivot - s * pivot)


def product_partition_gadget(inp: ProductPartitionInput) -> tuple[list[MonotonePwlFn], Rational]:
    """Convex gadget: kinks at ``R^2`` (``R`` the root of the product) with slopes ``1/a`` and ``a``."""
    root = inp.root
    sq = to_rational(root * root)
    fs = []
    for a in inp.factors:
        lo = AffineFn(normalize(1, a), sq - sq / a)
        hi = AffineFn(a, sq - a * sq)
        fs.append(MonotonePwlFn.upper_envelope([lo, hi]))
    fs.append(MonotonePwlFn.affine(AffineFn(1, 2 * root)))
    fs.append(MonotonePwlFn.affine(steep_product(inp)))
    return fs, ZERO


def product_gap(root: int) -> Rational:
    """Drop below ``2 R^2`` guaranteed for no-instances: ``(R/(R+1))^2``."""
    return normalize(root * root, (root + 1) ** 2)


def steep_product(inp: ProductPartitionInput) -> AffineFn:
    """``4 alpha (R+1)^2 (x - p) + p`` with fixpoint ``p = 2R^2 - (R/(R+1))^2``."""
    root = inp.root
    pivot = 2 * root * root - product_gap(root)
    s = 4 * inp.alpha * (root + 1) ** 2
    return AffineFn(s, pivot - s * pivot)


def _subset_exists(items: Sequence[int], target: int, combine) -> bool:
    for r in range(len(items) + 1):
        for sub in combinations(items, r):
            if combine(sub) == target:
                return True
    return False


@dataclass(frozen=True)
class GapReport:
    has_partition: bool
    oracle_value: Rational
    yes_value: Rational
    no_bound: Rational
    dichotomy_ok: bool


def _gap(fs, yes_value, no_bound, has_partition, limit) -> GapReport:
    core = fs[:-1]
    limit = oracle_limit() if limit is None else limit
    if len(core) > limit:
        raise TooLarge(f"gadget has {len(core)} functions, oracle limit is {limit}")
    value = brute_partial(core, ZERO, limit=limit).value
    ok = (value == yes_value) if has_partition else (value <= no_bound)
    return GapReport(has_partition, value, yes_value, no_bound, ok)


def gap_check_partition(inp: PartitionInput, limit: int | None = None) -> GapReport:
    """Oracle value of the first ``n + 1`` functions: ``3H`` iff a partition exists."""
    half = inp.half_sum
    fs, _ = partition_gadget(inp)
    has = _subset_exists(inp.weights, half, sum)
    return _gap(fs, to_rational(3 * half), 3 * half - normalize(1, 2), has, limit)


def gap_check_product(inp: ProductPartitionInput, limit: int | None = None) -> GapReport:
    """Oracle value of the first ``n + 1`` functions: ``2R^2`` iff a product partition exists."""
    root = inp.root
    fs, _ = product_partition_gadget(inp)
    has = _subset_exists(inp.factors, root, math.prod)
    return _gap(fs, to_rational(2 * root * root), 2 * root * root - product_gap(root), has, limit)
