import random

import pytest
from helpers import affines, rand_affines, rand_clamped, rats
from hypothesis import given, settings
from hypothesis import strategies as st

from comporder.errors import InvalidK, Unsupported
from comporder.functions import AffineFn, ClampedFn, MonotonePwlFn, hull, reflect
from comporder.numeric import normalize
from comporder.oracle import brute_exact_k, brute_partial, brute_total
from comporder.ordering import lex_sort
from comporder.solvers import (
    Instance,
    Mode,
    Objective,
    fold,
    rotation_values,
    solve,
    solve_exact_k,
    solve_min,
    solve_partial_clamped,
    solve_partial_linear,
    solve_total_linear,
)

HALF = normalize(1, 2)
INTRO = [AffineFn(2, -6), AffineFn(HALF, 2), AffineFn(1, 2)]


def test_intro_total():
    sol = solve_total_linear(INTRO, 2)
    assert sol.value == 4 and sol.permutation[-1] == 0
    assert fold(INTRO, sol.permutation, 2) == 4


def test_intro_partial():
    sol = solve_partial_linear(INTRO, 2)
    assert (sol.value, sol.prefix_len, sol.prefix) == (5, 2, (1, 2))


def test_intro_exact_k():
    assert solve_exact_k(INTRO, 2, 2).value == 5
    sol = solve_exact_k(INTRO, 2, 0)
    assert (sol.value, sol.prefix) == (2, ())
    assert solve_exact_k(INTRO, 2, 3).value == solve_total_linear(INTRO, 2).value


def test_rotation_table():
    order = lex_sort(INTRO)
    assert rotation_values([INTRO[i] for i in order], 2) == [4, 3, 3]
    assert rotation_values([AffineFn(3, 1)], 2) == [7]


def test_single_never_applied():
    sol = solve_partial_linear([AffineFn(1, -1)], 0)
    assert (sol.value, sol.prefix_len) == (0, 0)


def test_steep_total_is_sorted_fold():
    fs = [AffineFn(3, -4), AffineFn(2, 5), AffineFn(4, 1), AffineFn(normalize(3, 2), -7)]
    order = lex_sort(fs)
    assert solve_total_linear(fs, 1).value == fold(fs, order, 1)


def test_identities_are_appended():
    fs = [AffineFn(1, 0), AffineFn(2, 1), AffineFn(1, 0)]
    sol = solve_total_linear(fs, 1)
    assert sol.value == 3 and sol.permutation == (1, 0, 2)
    sol = solve_total_linear([AffineFn(1, 0)], 5)
    assert sol.value == 5 and sol.rotation_index is None
    # identities fill exact-k slots for free
    sol = solve_exact_k(fs, 1, 2)
    assert sol.value == 3 and sorted(sol.prefix) in ([0, 1], [1, 2])


@pytest.mark.parametrize("seed", range(60))
def test_rotation_recurrence_direct(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 50)
    fs = rand_affines(rng, n)
    if seed % 3 == 0:
        fs[rng.randrange(n)] = AffineFn(0, rand_affines(rng, 1)[0].intercept)
    c = normalize(rng.randint(-5, 5), 2)
    got = rotation_values(fs, c)
    want = [fold(fs, list(range(t, n)) + list(range(t)), c) for t in range(n)]
    assert got == want


def test_clamped_examples():
    sol = solve_partial_clamped([ClampedFn(1, 1, 5)], 0)
    assert (sol.value, sol.prefix_len) == (5, 1)
    hs = [ClampedFn(HALF, 5, 5), ClampedFn(0, 6, 6)]
    sol = solve_partial_clamped(hs, 0)
    assert sol.value == 8 and sol.prefix == (1, 0)
    assert brute_partial([hull(h) for h in hs], 0).value == 8


def test_min_reflection_example():
    mirrored = [reflect(f) for f in INTRO]
    sol = solve_min(Instance(mirrored, -2, Objective.MIN))
    assert sol.value == -4
    assert sol.permutation == solve_total_linear(INTRO, 2).permutation
    f = AffineFn(3, -2)
    assert solve_min(Instance([f], 4, Objective.MIN)).value == f(4)


def test_dispatch_contracts():
    with pytest.raises(Unsupported):
        solve(Instance([ClampedFn(1, 1, 5)], 0, mode=Mode.TOTAL))
    pwl = MonotonePwlFn.upper_envelope([AffineFn(1, 0), AffineFn(2, 0)])
    with pytest.raises(Unsupported):
        solve(Instance([pwl], 0, mode=Mode.PARTIAL))
    with pytest.raises(Unsupported):
        solve(Instance([ClampedFn(1, 1, 5)], 0, Objective.MIN, Mode.PARTIAL))
    with pytest.raises(InvalidK):
        Instance(INTRO, 0, mode=Mode.EXACT_K, k=4)
    with pytest.raises(InvalidK):
        solve_exact_k(INTRO, 0, -1)
    assert solve(Instance(INTRO, 2, mode=Mode.EXACT_K, k=2)).value == 5


@pytest.mark.parametrize("seed", range(80))
def test_against_oracle(seed):
    rng = random.Random(1000 + seed)
    n = rng.randint(1, 6)
    fs = rand_affines(rng, n)
    c = normalize(rng.randint(-8, 8), rng.choice((1, 2, 3)))
    assert solve_total_linear(fs, c).value == brute_total(fs, c).value
    assert solve_partial_linear(fs, c).value == brute_partial(fs, c).value
    for k in range(n + 1):
        sol = solve_exact_k(fs, c, k)
        assert sol.value == brute_exact_k(fs, c, k).value
        assert fold(fs, sol.prefix, c) == sol.value and sol.prefix_len == k
    for mode in (Mode.TOTAL, Mode.PARTIAL):
        got = solve(Instance(fs, c, Objective.MIN, mode)).value
        oracle = brute_total if mode is Mode.TOTAL else brute_partial
        assert got == oracle(fs, c, Objective.MIN).value


@pytest.mark.parametrize("seed", range(60))
def test_clamped_against_oracle(seed):
    rng = random.Random(5000 + seed)
    hs = [rand_clamped(rng) for _ in range(rng.randint(1, 6))]
    c = normalize(rng.randint(-8, 8), 1)
    sol = solve_partial_clamped(hs, c)
    assert sol.value == brute_partial([hull(h) for h in hs], c).value
    assert sol.value == brute_partial(hs, c).value
    assert "reevaluation-mismatch" not in sol.flags


@settings(max_examples=60, deadline=None)
@given(st.lists(affines(), min_size=1, max_size=5), rats(), st.integers(1, 6).map(lambda k: normalize(k, 2)))
def test_scale_equivariance(fs, c, s):
    # x -> s x conjugation scales intercepts, start and optimum alike
    scaled = [AffineFn(f.slope, s * f.intercept) for f in fs]
    assert solve_total_linear(scaled, s * c).value == s * solve_total_linear(fs, c).value
    assert solve_partial_linear(scaled, s * c).value == s * solve_partial_linear(fs, c).value


@settings(max_examples=60, deadline=None)
@given(st.lists(affines(), min_size=1, max_size=6), rats())
def test_solutions_reevaluate(fs, c):
    for sol in (solve_total_linear(fs, c), solve_partial_linear(fs, c), solve_exact_k(fs, c, len(fs) // 2)):
        assert fold(fs, sol.prefix, c) == sol.value
        assert sorted(sol.permutation) == list(range(len(fs)))


@settings(max_examples=40, deadline=None)
@given(st.lists(affines(), min_size=1, max_size=6), rats())
def test_min_duality(fs, c):
    inst = Instance(fs, c, Objective.MIN)
    sol = solve_min(inst)
    mirrored = solve_total_linear([reflect(f) for f in fs], -c)
    assert sol.value == -mirrored.value
    assert fold(fs, sol.permutation, c) == sol.value
