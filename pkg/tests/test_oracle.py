import random
from itertools import permutations

import pytest
from helpers import rand_affines, rand_clamped

from comporder.errors import InvalidK, TooLarge
from comporder.functions import AffineFn
from comporder.numeric import normalize
from comporder.oracle import brute_exact_k, brute_partial, brute_total
from comporder.solvers import Objective, fold

INTRO = [AffineFn(2, -6), AffineFn(normalize(1, 2), 2), AffineFn(1, 2)]


def naive(fs, c, lengths, best=max):
    vals = [fold(fs, p, c) for k in lengths for p in permutations(range(len(fs)), k)]
    return best(vals)


def test_intro():
    assert brute_total(INTRO, 2).value == 4
    sol = brute_partial(INTRO, 2)
    assert (sol.value, sol.prefix_len) == (5, 2)
    assert brute_exact_k(INTRO, 2, 2).value == 5


def test_trivial_sizes():
    f = AffineFn(3, 1)
    assert brute_total([f], 2).value == 7
    assert brute_total([], 2).value == 2
    assert brute_exact_k(INTRO, 2, 0).value == 2
    assert brute_exact_k(INTRO, 2, 3).value == brute_total(INTRO, 2).value
    sol = brute_partial([AffineFn(1, -1), AffineFn(normalize(1, 2), -3)], 4)
    assert (sol.value, sol.prefix_len) == (4, 0)


def test_limits():
    fs = [AffineFn(2, i) for i in range(4)]
    with pytest.raises(TooLarge):
        brute_total(fs, 0, limit=3)
    with pytest.raises(InvalidK):
        brute_exact_k(fs, 0, 5)


def test_env_limit(monkeypatch):
    monkeypatch.setenv("COMPORDER_ORACLE_LIMIT", "2")
    with pytest.raises(TooLarge):
        brute_partial(INTRO, 0)


@pytest.mark.parametrize("seed", range(40))
def test_against_naive_enumeration(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    fs = rand_affines(rng, n) if seed % 2 else [rand_clamped(rng) for _ in range(n)]
    c = normalize(rng.randint(-8, 8), 1)
    for obj, best in ((Objective.MAX, max), (Objective.MIN, min)):
        assert brute_total(fs, c, obj).value == naive(fs, c, [n], best)
        assert brute_partial(fs, c, obj).value == naive(fs, c, range(n + 1), best)
        k = rng.randint(0, n)
        assert brute_exact_k(fs, c, k, obj).value == naive(fs, c, [k], best)


@pytest.mark.parametrize("seed", range(20))
def test_solution_reevaluates(seed):
    rng = random.Random(100 + seed)
    fs = rand_affines(rng, rng.randint(1, 6))
    for sol in (brute_total(fs, 1), brute_partial(fs, 1), brute_exact_k(fs, 1, len(fs) // 2)):
        assert fold(fs, sol.prefix, 1) == sol.value
        assert sorted(sol.permutation) == list(range(len(fs)))
