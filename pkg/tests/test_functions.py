import pytest
from helpers import affines, clampeds, pwls, rats
from hypothesis import given
from hypothesis import strategies as st

from comporder.errors import IdentityFunction, NonMonotone
from comporder.functions import (
    IDENTITY,
    AffineFn,
    ClampedFn,
    MonotonePwlFn,
    as_pwl,
    compose_affine,
    delta,
    evaluate,
    gamma,
    hull,
    reflect,
)
from comporder.numeric import NEG_INF, POS_INF, normalize

HALF = normalize(1, 2)
SAMPLES = [normalize(n, 4) for n in range(-60, 61, 3)]


def test_affine_basics():
    f = AffineFn(2, -6)
    assert f(5) == 4
    assert not f.is_identity and AffineFn(1, 0).is_identity
    with pytest.raises(NonMonotone):
        AffineFn(-1, 0)
    with pytest.raises(NonMonotone):
        ClampedFn(-HALF, 0, 0)


@pytest.mark.parametrize("x, want", [(5, 5), (7, 8)])
def test_hull_evaluation(x, want):
    assert evaluate(hull(AffineFn(2, -6)), x) == want


def test_partition_kink_at_breakpoint():
    f = MonotonePwlFn.lower_envelope([AffineFn(2, 0), AffineFn(HALF, 3)])
    assert f.breakpoints == (2,)
    assert evaluate(f, 2) == 4
    assert f.is_concave() and not f.is_convex()


@pytest.mark.parametrize(
    "g, f, want",
    [
        (AffineFn(2, -6), AffineFn(1, 2), AffineFn(2, -2)),
        (AffineFn(1, 0), AffineFn(3, 7), AffineFn(3, 7)),
        (AffineFn(0, 5), AffineFn(3, 1), AffineFn(0, 5)),
    ],
)
def test_compose_affine(g, f, want):
    assert compose_affine(g, f) == want


@given(affines(), affines(), rats())
def test_compose_is_application(g, f, x):
    assert compose_affine(g, f)(x) == g(f(x))


def test_reflect_examples():
    assert reflect(AffineFn(2, -3)) == AffineFn(2, 3)
    assert reflect(AffineFn(1, 2)) == AffineFn(1, -2)


@given(pwls(), rats())
def test_reflect_pwl(f, x):
    r = reflect(f)
    assert reflect(r) == f
    assert r(x) == -f(-x)


@given(clampeds(), rats())
def test_reflect_clamped(h, x):
    assert reflect(h)(x) == -h(-x)


def test_hull_pieces():
    h = hull(AffineFn(2, -6))
    assert h.breakpoints == (6,) and h.pieces == (IDENTITY, AffineFn(2, -6))
    h = hull(AffineFn(HALF, 2))
    assert h.breakpoints == (4,) and h.pieces == (AffineFn(HALF, 2), IDENTITY)
    h = hull(AffineFn(1, 2))
    assert h.breakpoints == () and h.pieces == (AffineFn(1, 2),)
    with pytest.raises(IdentityFunction):
        hull(IDENTITY)


@given(st.one_of(affines(), clampeds(), pwls()))
def test_hull_is_max_with_identity(f):
    if isinstance(f, AffineFn) and f.is_identity:
        return
    h = hull(f)
    for x in SAMPLES:
        assert h(x) == max(f(x), x)


@pytest.mark.parametrize(
    "f, g, d",
    [
        (AffineFn(2, -6), 6, 1),
        (AffineFn(1, 2), NEG_INF, 1),
        (AffineFn(1, -1), POS_INF, 1),
        (AffineFn(HALF, 2), 4, -1),
    ],
)
def test_gamma_delta(f, g, d):
    assert gamma(f) == g
    assert delta(f) == d


@given(affines())
def test_gamma_is_fixpoint(f):
    g = gamma(f)
    if g.is_finite:
        assert f(g.value) == g.value


def test_pwl_validation():
    with pytest.raises(ValueError, match="discontinuity"):
        MonotonePwlFn((0,), (AffineFn(1, 0), AffineFn(1, 1)))
    with pytest.raises(ValueError, match="redundant"):
        MonotonePwlFn((0,), (AffineFn(1, 0), AffineFn(1, 0)))
    with pytest.raises(ValueError, match="increasing"):
        MonotonePwlFn((1, 0), (AffineFn(0, 0), AffineFn(0, 0), AffineFn(0, 0)))
    with pytest.raises(ValueError):
        MonotonePwlFn((), ())
    merged = MonotonePwlFn.from_pieces((0, 1), (AffineFn(1, 0), AffineFn(1, 0), AffineFn(2, -1)))
    assert merged.breakpoints == (1,)


@given(st.lists(affines(), min_size=1, max_size=6), rats())
def test_envelopes(lines, x):
    up = MonotonePwlFn.upper_envelope(lines)
    lo = MonotonePwlFn.lower_envelope(lines)
    assert up(x) == max(f(x) for f in lines)
    assert lo(x) == min(f(x) for f in lines)
    assert up.is_convex() and lo.is_concave()


@given(clampeds(), rats())
def test_clamped_to_pwl(h, x):
    assert as_pwl(h)(x) == h(x) == max(h.slope * x + h.intercept, h.floor)
