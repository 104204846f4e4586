"""Applications: time-dependent single-machine scheduling and the free-order
secretary problem, both expressed as composition-ordering instances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import BadDistribution, NonMonotone, Unsupported
from .functions import AffineFn, ClampedFn, MonotonePwlFn
from .numeric import ONE, ZERO, Rational, to_rational
from .solvers import Instance, Mode, Objective, fold, solve_min, solve_partial_clamped


# -- scheduling ---------------------------------------------------------------


@dataclass(frozen=True)
class Job:
    """Processing time ``rate * t + base`` when started at time ``t``."""

    rate: Rational
    base: Rational

    def __post_init__(self):
        object.__setattr__(self, "rate", to_rational(self.rate))
        object.__setattr__(self, "base", to_rational(self.base))

    @property
    def completion(self) -> AffineFn:
        """Finish time as a function of start time, ``t + p(t)``."""
        if 1 + self.rate < 0:
            raise NonMonotone(f"rate {self.rate} makes completion time decreasing")
        return AffineFn(1 + self.rate, self.base)


@dataclass(frozen=True)
class ScheduledJob:
    job: int
    start: Rational
    finish: Rational


@dataclass(frozen=True)
class Schedule:
    order: tuple
    entries: tuple
    makespan: Rational


def jobs_to_instance(jobs: Sequence[Job], t0=0) -> Instance:
    return Instance(tuple(j.completion for j in jobs), to_rational(t0), Objective.MIN, Mode.TOTAL)


def solve_makespan(jobs: Sequence[Job], t0=0) -> Schedule:
    """Minimum-makespan order for linearly deteriorating / shortening jobs."""
    inst = jobs_to_instance(jobs, t0)
    sol = solve_min(inst)
    t = inst.start
    entries = []
    for i in sol.permutation:
        finish = inst.functions[i](t)
        entries.append(ScheduledJob(i, t, finish))
        t = finish
    return Schedule(sol.permutation, tuple(entries), t)


# -- secretary ----------------------------------------------------------------


@dataclass(frozen=True)
class Applicant:
    """Discrete ability distribution: ``values[j]`` with ``probs[j]``.

    ``values`` must be nonincreasing and nonnegative; ``probs`` must sum to 1.
    """

    values: tuple
    probs: tuple

    def __post_init__(self):
        vals = tuple(to_rational(v) for v in self.values)
        ps = tuple(to_rational(p) for p in self.probs)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "probs", ps)
        if not vals or len(vals) != len(ps):
            raise BadDistribution("values and probs must be nonempty and of equal length")
        if any(p < 0 for p in ps) or sum(ps) != 1:
            raise BadDistribution("probabilities must be nonnegative and sum to 1")
        if any(v < 0 for v in vals) or any(x < y for x, y in zip(vals, vals[1:])):
            raise BadDistribution("values must be nonnegative and nonincreasing")

    @property
    def mean(self) -> Rational:
        return sum((p * v for p, v in zip(self.probs, self.values)), ZERO)


def applicant_to_function(app: Applicant) -> MonotonePwlFn:
    """``x -> E[max(X, x)]`` as a convex piecewise-linear function.

    Line ``l`` of the envelope has the top ``l`` outcomes fixed and the rest
    replaced by ``x``: ``sum_{j<=l} p_j v_j + (sum_{j>l} p_j) x``.
    """
    m = len(app.values)
    lines = []
    for l in range(m + 1):
        fixed = sum((app.probs[j] * app.values[j] for j in range(l)), ZERO)
        rest = sum(app.probs[l:], ZERO)
        lines.append(AffineFn(rest, fixed))
    return MonotonePwlFn.upper_envelope(lines)


def _two_valued(app: Applicant):
    if len(app.values) == 1:
        return app.values[0], ONE, app.values[0], ZERO
    if len(app.values) != 2:
        raise Unsupported(f"applicant has {len(app.values)} values; two-valued solver needs at most 2")
    (hi, lo), (p_hi, p_lo) = app.values, app.probs
    return hi, p_hi, lo, p_lo


def applicant_to_clamped(app: Applicant) -> ClampedFn:
    """``max(p_lo x + p_hi v_hi, E[X])``; its hull equals ``E[max(X, x)]``."""
    hi, p_hi, _lo, p_lo = _two_valued(app)
    return ClampedFn(p_lo, p_hi * hi, app.mean)


def stopping_thresholds(fs_ordered: Sequence) -> list:
    """Continuation values in interview order.

    Entry ``i`` is the expected value of rejecting applicant ``i`` and acting
    optimally afterwards; the last applicant has no threshold.
    """
    out = []
    x = ZERO
    for f in reversed(fs_ordered[1:]):
        x = f(x)
        out.append(x)
    out.reverse()
    return out


@dataclass(frozen=True)
class SecretaryPlan:
    interview_order: tuple  # applicant indices, first interviewed first
    thresholds: tuple  # one per applicant except the last interviewed
    expected_value: Rational
    composition_order: tuple  # innermost first, i.e. the reverse of interview_order


def solve_secretary_two_valued(apps: Sequence[Applicant]) -> SecretaryPlan:
    """Optimal interview order and stopping rule for two-valued applicants."""
    hs = [applicant_to_clamped(a) for a in apps]
    sol = solve_partial_clamped(hs, ZERO)
    comp = tuple(sol.permutation)
    interview = tuple(reversed(comp))
    fs = [applicant_to_function(a) for a in apps]
    value = fold(fs, comp, ZERO)
    thresholds = stopping_thresholds([fs[i] for i in interview])
    return SecretaryPlan(interview, tuple(thresholds), value, comp)


@dataclass(frozen=True)
class SimulationResult:
    mean: Rational  # exact mean of the realised hires
    stderr: float
    trials: int


def simulate_secretary(apps: Sequence[Applicant], ordering: Sequence[int], thresholds: Sequence,
                       trials: int, seed: int) -> SimulationResult:
    """Monte Carlo run of the threshold rule.

    Applicant ``ordering[i]`` is hired iff its value is at least
    ``thresholds[i]``; the last one is hired if nobody else was.  Outcomes
    are sampled as indices so that the threshold test and the mean stay
    exact.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    n = len(ordering)
    rng = np.random.default_rng(seed)
    outcome = np.empty((trials, n), dtype=np.int64)
    accept = []
    for pos, i in enumerate(ordering):
        app = apps[i]
        p = np.array([float(q) for q in app.probs])
        outcome[:, pos] = rng.choice(len(app.probs), size=trials, p=p / p.sum())
        if pos < n - 1:
            accept.append(np.array([v >= thresholds[pos] for v in app.values]))
        else:
            accept.append(np.ones(len(app.values), dtype=bool))
    hired = np.full(trials, n - 1)
    undecided = np.ones(trials, dtype=bool)
    for pos in range(n):
        ok = accept[pos][outcome[:, pos]] & undecided
        hired[ok] = pos
        undecided &= ~ok
    total = ZERO
    sq = 0.0
    for pos, i in enumerate(ordering):
        sel = outcome[hired == pos, pos]
        counts = np.bincount(sel, minlength=len(apps[i].values))
        for j, cnt in enumerate(counts):
            if cnt:
                v = apps[i].values[j]
                total += int(cnt) * v
                sq += int(cnt) * float(v) ** 2
    mean = total / trials
    var = max(sq / trials - float(mean) ** 2, 0.0)
    return SimulationResult(mean, math.sqrt(var / trials), trials)
