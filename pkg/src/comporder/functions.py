"""Monotone affine, clamped and piecewise-linear functions.

All three classes are immutable, callable on rationals, and exact.  The
structural transforms live here too: reflection ``x -> -f(-x)`` (turns a
minimisation into a maximisation) and the hull ``x -> max(f(x), x)`` (turns a
partial composition problem into a total one).
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import IdentityFunction, NonMonotone
from .numeric import NEG_INF, ONE, POS_INF, ZERO, ExtReal, Rational, format_rational, to_rational


@dataclass(frozen=True)
class AffineFn:
    """``x -> slope * x + intercept`` with ``slope >= 0``."""

    slope: Rational
    intercept: Rational

    def __post_init__(self):
        object.__setattr__(self, "slope", to_rational(self.slope))
        object.__setattr__(self, "intercept", to_rational(self.intercept))
        if self.slope < 0:
            raise NonMonotone(f"slope {format_rational(self.slope)} < 0")

    def __call__(self, x):
        return self.slope * x + self.intercept

    @property
    def is_identity(self) -> bool:
        return self.slope == 1 and self.intercept == 0

    def __str__(self):
        return f"{format_rational(self.slope)}*x + {format_rational(self.intercept)}"


IDENTITY = AffineFn(ONE, ZERO)


@dataclass(frozen=True)
class ClampedFn:
    """``x -> max(slope * x + intercept, floor)``."""

    slope: Rational
    intercept: Rational
    floor: Rational

    def __post_init__(self):
        for name in ("slope", "intercept", "floor"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if self.slope < 0:
            raise NonMonotone(f"slope {format_rational(self.slope)} < 0")

    def __call__(self, x):
        v = self.slope * x + self.intercept
        return v if v > self.floor else self.floor

    @property
    def affine(self) -> AffineFn:
        return AffineFn(self.slope, self.intercept)

    def to_pwl(self) -> MonotonePwlFn:
        return MonotonePwlFn.upper_envelope([self.affine, AffineFn(ZERO, self.floor)])


@dataclass(frozen=True)
class MonotonePwlFn:
    """Continuous, nondecreasing, piecewise-linear function.

    ``pieces[0]`` applies on ``(-inf, breakpoints[0])``, ``pieces[i]`` on
    ``[breakpoints[i-1], breakpoints[i])`` and ``pieces[-1]`` on the last
    unbounded interval.  Instances are validated and must be canonical (no
    two adjacent pieces equal); use :meth:`from_pieces` to build one from
    possibly redundant pieces.
    """

    breakpoints: tuple
    pieces: tuple

    def __post_init__(self):
        bps = tuple(to_rational(b) for b in self.breakpoints)
        pieces = tuple(p if isinstance(p, AffineFn) else AffineFn(*p) for p in self.pieces)
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "pieces", pieces)
        if len(pieces) != len(bps) + 1:
            raise ValueError("need exactly one more piece than breakpoints")
        for lo, hi in zip(bps, bps[1:]):
            if not lo < hi:
                raise ValueError("breakpoints must be strictly increasing")
        for i, x in enumerate(bps):
            left, right = pieces[i], pieces[i + 1]
            if left(x) != right(x):
                raise ValueError(f"discontinuity at x={format_rational(x)}")
            if left == right:
                raise ValueError(f"redundant breakpoint at x={format_rational(x)}")

    @classmethod
    def from_pieces(cls, breakpoints: Sequence, pieces: Sequence[AffineFn]) -> MonotonePwlFn:
        """Build a canonical function, merging equal neighbours."""
        bps = [to_rational(b) for b in breakpoints]
        out_b: list = []
        out_p: list = [pieces[0]]
        for x, p in zip(bps, pieces[1:]):
            if p == out_p[-1]:
                continue
            out_b.append(x)
            out_p.append(p)
        return cls(tuple(out_b), tuple(out_p))

    @classmethod
    def affine(cls, f: AffineFn) -> MonotonePwlFn:
        return cls((), (f,))

    @classmethod
    def upper_envelope(cls, lines: Iterable[AffineFn]) -> MonotonePwlFn:
        """Pointwise maximum of affine functions (convex result)."""
        raw = [(f.slope, f.intercept) for f in lines]
        bps, pcs = _upper_envelope(raw)
        return cls(tuple(bps), tuple(AffineFn(a, b) for a, b in pcs))

    @classmethod
    def lower_envelope(cls, lines: Iterable[AffineFn]) -> MonotonePwlFn:
        """Pointwise minimum of affine functions (concave result)."""
        raw = [(-f.slope, -f.intercept) for f in lines]
        bps, pcs = _upper_envelope(raw)
        return cls(tuple(bps), tuple(AffineFn(-a, -b) for a, b in pcs))

    def piece_at(self, x) -> AffineFn:
        return self.pieces[bisect_right(self.breakpoints, x)]

    def __call__(self, x):
        return self.piece_at(x)(x)

    @property
    def slopes(self) -> tuple:
        return tuple(p.slope for p in self.pieces)

    def is_convex(self) -> bool:
        s = self.slopes
        return all(a <= b for a, b in zip(s, s[1:]))

    def is_concave(self) -> bool:
        s = self.slopes
        return all(a >= b for a, b in zip(s, s[1:]))


AnyFn = Union[AffineFn, ClampedFn, MonotonePwlFn]


def _upper_envelope(lines):
    """Breakpoints and pieces of ``max`` over ``(slope, intercept)`` pairs.

    Slopes may be negative here; callers negate to get lower envelopes.
    """
    if not lines:
        raise ValueError("envelope of no lines")
    best: dict = {}
    for a, b in lines:
        if a not in best or b > best[a]:
            best[a] = b
    ordered = sorted(best.items())
    hull: list = []
    for a, b in ordered:
        while hull:
            a1, b1 = hull[-1]
            x_new = (b1 - b) / (a - a1)
            if len(hull) >= 2:
                a0, b0 = hull[-2]
                x_old = (b0 - b1) / (a1 - a0)
                if x_new <= x_old:
                    hull.pop()
                    continue
            break
        hull.append((a, b))
    bps = [(b0 - b1) / (a1 - a0) for (a0, b0), (a1, b1) in zip(hull, hull[1:])]
    return bps, hull


def as_pwl(f: AnyFn) -> MonotonePwlFn:
    if isinstance(f, MonotonePwlFn):
        return f
    if isinstance(f, AffineFn):
        return MonotonePwlFn.affine(f)
    if isinstance(f, ClampedFn):
        return f.to_pwl()
    raise TypeError(f"not a monotone function: {f!r}")


def evaluate(f: AnyFn, x) -> Rational:
    return f(to_rational(x))


def compose_affine(g: AffineFn, f: AffineFn) -> AffineFn:
    """``g . f``, i.e. ``x -> g(f(x))``."""
    return AffineFn(g.slope * f.slope, g.slope * f.intercept + g.intercept)


def reflect(f):
    """``x -> -f(-x)``; keeps the function class and monotonicity."""
    if isinstance(f, AffineFn):
        return AffineFn(f.slope, -f.intercept)
    if isinstance(f, ClampedFn):
        # -max(a(-x)+b, c) = min(ax-b, -c) is not clamped; go through PWL
        return reflect(f.to_pwl())
    if isinstance(f, MonotonePwlFn):
        bps = tuple(-b for b in reversed(f.breakpoints))
        pieces = tuple(AffineFn(p.slope, -p.intercept) for p in reversed(f.pieces))
        return MonotonePwlFn(bps, pieces)
    raise TypeError(f"cannot reflect {f!r}")


def gamma(f: AffineFn) -> ExtReal:
    """Fixpoint of ``f``; ``+inf`` / ``-inf`` for translations down / up."""
    if f.slope != 1:
        return ExtReal.finite(f.intercept / (1 - f.slope))
    return POS_INF if f.intercept < 0 else NEG_INF


def delta(f: AffineFn) -> int:
    return 1 if f.slope >= 1 else -1


def hull(f: AnyFn) -> MonotonePwlFn:
    """``x -> max(f(x), x)``.

    For affine input the identity is refused: the solvers strip identities
    before they get here.
    """
    if isinstance(f, AffineFn):
        if f.is_identity:
            raise IdentityFunction("hull of the identity is undefined here")
        return MonotonePwlFn.upper_envelope([f, IDENTITY])
    if isinstance(f, ClampedFn):
        return MonotonePwlFn.upper_envelope([f.affine, AffineFn(ZERO, f.floor), IDENTITY])
    if isinstance(f, MonotonePwlFn):
        return _pwl_max_identity(f)
    raise TypeError(f"cannot take hull of {f!r}")


def _pwl_max_identity(f: MonotonePwlFn) -> MonotonePwlFn:
    bps: list = []
    pcs: list = []
    edges = [None, *f.breakpoints, None]
    for k, p in enumerate(f.pieces):
        lo, hi = edges[k], edges[k + 1]
        if k > 0:
            bps.append(lo)
        if p.slope == 1:
            pcs.append(p if p.intercept >= 0 else IDENTITY)
            continue
        cross = p.intercept / (1 - p.slope)
        below = p if p.slope < 1 else IDENTITY  # winner left of the crossing
        above = IDENTITY if p.slope < 1 else p
        if (lo is None or cross > lo) and (hi is None or cross < hi):
            pcs.append(below)
            bps.append(cross)
            pcs.append(above)
        else:
            mid_left = lo is not None and cross <= lo
            pcs.append(above if mid_left else below)
    return MonotonePwlFn.from_pieces(bps, pcs)
