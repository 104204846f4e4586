"""Random instance generators shared by the test modules."""

import random

from hypothesis import strategies as st

from comporder import AffineFn, ClampedFn, MonotonePwlFn
from comporder.numeric import normalize

DENOMS = (1, 2, 3, 4)


def rand_rat(rng: random.Random, lo: int, hi: int, denoms=DENOMS):
    d = rng.choice(denoms)
    return normalize(rng.randint(lo * d, hi * d), d)


def rand_affine(rng, slope=(0, 4), inter=(-8, 8)):
    return AffineFn(rand_rat(rng, *slope), rand_rat(rng, *inter))


def rand_affines(rng, n, **kw):
    return [rand_affine(rng, **kw) for _ in range(n)]


def rand_clamped(rng):
    return ClampedFn(rand_rat(rng, 0, 4), rand_rat(rng, -8, 8), rand_rat(rng, -8, 8))


def rats(lo=-8, hi=8):
    return st.builds(normalize, st.integers(lo * 12, hi * 12), st.sampled_from((1, 2, 3, 4, 6, 12)))


def affines(slope_hi=4):
    return st.builds(AffineFn, rats(0, slope_hi), rats())


def clampeds():
    return st.builds(ClampedFn, rats(0, 4), rats(), rats())


@st.composite
def pwls(draw, max_pieces=4):
    """Continuous monotone PWL with arbitrary (non-convex) slope sequence."""
    k = draw(st.integers(0, max_pieces - 1))
    bps = sorted(set(draw(st.lists(rats(), min_size=k, max_size=k))))
    slopes = draw(st.lists(rats(0, 3), min_size=len(bps) + 1, max_size=len(bps) + 1))
    pieces = [AffineFn(slopes[0], draw(rats()))]
    for x, a in zip(bps, slopes[1:]):
        y = pieces[-1](x)
        pieces.append(AffineFn(a, y - a * x))
    return MonotonePwlFn.from_pieces(bps, pieces)
