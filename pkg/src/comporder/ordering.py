"""The precedence relation between functions and the (delta, gamma) sort.

``f`` precedes ``g`` when applying ``f`` first never hurts:
``f(g(x)) <= g(f(x))`` for every ``x``.  For affine functions this reduces to
one rational comparison; for hulls ``max(f(x), x)`` of affine functions the
direction follows from the fixpoints and slope classes alone.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IdentityFunction
from .functions import AffineFn, as_pwl, compose_affine, delta, gamma, hull
from .numeric import ExtReal, Rational


class Verdict(enum.Enum):
    BEFORE = "before"  # f strictly precedes g
    AFTER = "after"  # g strictly precedes f
    EQUIVALENT = "equivalent"  # f and g commute
    INCOMPARABLE = "incomparable"

    def flipped(self) -> Verdict:
        return {Verdict.BEFORE: Verdict.AFTER, Verdict.AFTER: Verdict.BEFORE}.get(self, self)


@dataclass(frozen=True, order=True)
class OrderKey:
    delta: int
    gamma: ExtReal
    index: int


def order_key(f: AffineFn, index: int) -> OrderKey:
    return OrderKey(delta(f), gamma(f), index)


def precedes_affine(f: AffineFn, g: AffineFn) -> Verdict:
    """Exact verdict from ``b_f (1 - a_g)`` versus ``b_g (1 - a_f)``."""
    lhs = f.intercept * (1 - g.slope)
    rhs = g.intercept * (1 - f.slope)
    if lhs < rhs:
        return Verdict.BEFORE
    if lhs == rhs:
        return Verdict.EQUIVALENT
    return Verdict.AFTER


def _hull_direction(f: AffineFn, g: AffineFn) -> Verdict:
    # Four cases for gamma(f) <= gamma(g); BEFORE/AFTER here mean the weak
    # relation, sharpened later by an exact commutation test.
    df, dg = delta(f), delta(g)
    if df == dg:
        return Verdict.BEFORE
    if df == -1:
        return Verdict.EQUIVALENT
    return Verdict.AFTER


def precedes_hull(f: AffineFn, g: AffineFn) -> Verdict:
    """Verdict for ``max(f, id)`` versus ``max(g, id)``.

    Direction comes from the fixpoint/slope-class case analysis.  When that
    gives a weak relation, an exact commutation test decides between strict
    and equivalent.
    """
    if f.is_identity or g.is_identity:
        raise IdentityFunction("precedes_hull needs non-identity functions")
    if gamma(f) <= gamma(g):
        weak = _hull_direction(f, g)
    else:
        weak = _hull_direction(g, f).flipped()
    if weak is Verdict.EQUIVALENT:
        return weak
    if commutes_exactly(hull(f), hull(g)):
        return Verdict.EQUIVALENT
    return weak


def lex_sort(fs: Sequence[AffineFn]) -> list[int]:
    """Indices of ``fs`` sorted by ``(delta, gamma, index)``."""
    for i, f in enumerate(fs):
        if f.is_identity:
            raise IdentityFunction(f"function {i} is the identity")
    return sorted(range(len(fs)), key=lambda i: order_key(fs[i], i))


def pointwise_precedes_check(f, g, samples: Iterable) -> bool:
    """True iff ``f(g(x)) <= g(f(x))`` at every sample."""
    return all(f(g(x)) <= g(f(x)) for x in samples)


def pointwise_verdict(f, g, samples: Sequence) -> Verdict:
    le = pointwise_precedes_check(f, g, samples)
    ge = pointwise_precedes_check(g, f, samples)
    if le and ge:
        return Verdict.EQUIVALENT
    if le:
        return Verdict.BEFORE
    if ge:
        return Verdict.AFTER
    return Verdict.INCOMPARABLE


def composition_test_points(f, g) -> list:
    """Points where ``f . g`` or ``g . f`` can change piece.

    Both compositions are linear between consecutive returned points and
    beyond the extremes, so two functions built from ``f`` and ``g`` agree
    everywhere iff they agree at these points plus one point past each end.
    """
    f, g = as_pwl(f), as_pwl(g)
    pts = set(f.breakpoints) | set(g.breakpoints)
    for outer, inner in ((f, g), (g, f)):
        for bp in outer.breakpoints:
            for p in inner.pieces:
                if p.slope != 0:
                    pts.add((bp - p.intercept) / p.slope)
    pts = sorted(pts)
    if not pts:
        return [Rational(0), Rational(1)]
    return [pts[0] - 1, *pts, pts[-1] + 1]


def commutes_exactly(f, g) -> bool:
    return all(f(g(x)) == g(f(x)) for x in composition_test_points(f, g))


@dataclass(frozen=True)
class GammaComposeReport:
    case: str | None  # 'a'..'g', or None when gamma(f) > gamma(g)
    gamma_f: ExtReal
    gamma_g: ExtReal
    gamma_composed: ExtReal  # fixpoint of g . f (f applied first)
    holds: bool
    composed_identity: bool = False  # g . f fixes every point; any bracket holds


def classify_gamma_compose(f: AffineFn, g: AffineFn) -> GammaComposeReport:
    """Locate the fixpoint of ``g . f`` relative to those of ``f`` and ``g``.

    Cases follow the slope classes of ``f`` (applied first) and ``g`` and
    whether ``slope_f * slope_g >= 1``.  ``holds`` says whether the bracket
    claimed for that case is satisfied; it should always be ``True``.

    If ``g . f`` is the identity, its ``gamma`` is only a convention (``-inf``)
    while every real is a fixpoint, so the bracket is met trivially.
    """
    gf, gg = gamma(f), gamma(g)
    comp = compose_affine(g, f)
    gc = gamma(comp)
    case, holds = _gamma_case(f.slope, g.slope, gf, gg, gc)
    if comp.is_identity:
        return GammaComposeReport(case, gf, gg, gc, True, composed_identity=True)
    return GammaComposeReport(case, gf, gg, gc, holds)


def _gamma_case(af, ag, gf, gg, gc):
    if gf == gg:
        return "a", gc == gf
    if gf > gg:
        return None, True
    prod_ge_1 = af * ag >= 1
    if af >= 1 and ag >= 1:
        case, holds = "b", gf <= gc <= gg
    elif af < 1 and ag < 1:
        case, holds = "c", gf <= gc <= gg
    elif af < 1:
        case, holds = ("d", gc >= gg) if prod_ge_1 else ("e", gc <= gf)
    else:
        case, holds = ("f", gc <= gf) if prod_ge_1 else ("g", gc >= gg)
    return case, holds
