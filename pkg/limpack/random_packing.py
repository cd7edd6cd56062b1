"""Randomised k-limited packings: sample-and-repair and neighbourhood resampling.

Every run draws from its own ``numpy`` PCG64 stream seeded through ``SeedSequence``,
so equal inputs and seeds give equal reports, and any two seeds give independent
streams.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from limpack.errors import InputError
from limpack.graph_core import Graph, closed_neighborhood, degree_stats
from limpack.shared import config
from limpack.verify import Packing, verify_k_limited

logger = logging.getLogger(__name__)

SAMPLE_REPAIR = 'sample-repair'
LLL = 'lll'
AUTO = 'auto'
BOUND = 'bound'


def make_rng(seed: int) -> np.random.Generator:
    if seed < 0:
        raise InputError(f"seed must be a nonnegative integer, got {seed}")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def spawn_seeds(base: int, count: int) -> list[int]:
    """``count`` 64-bit seeds for independent runs derived from one base seed."""
    children = np.random.SeedSequence(base).spawn(count)
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in children]


@dataclass(frozen=True)
class LLLParameters:
    epsilon1: float
    epsilon2: float
    p: float
    clamped: bool
    theorem_regime: bool = False

    def size_target(self, n: int) -> float:
        """(1 - ε₂)·n·p; a smaller packing is the bad outcome of the size event."""
        return (1 - self.epsilon2) * n * self.p


def lll_parameters(max_degree: int, k: int, clamp: float | None = None) -> LLLParameters:
    """ε₁ = √(5 / ln ln Δ), ε₂ = 3/√(kΔ) and p = (1 - ε₁)(k+1)/(Δ+1).

    ε₁ is replaced by ``clamp`` when ln ln Δ ≤ 0 or the raw value is at least 1, which
    is every Δ below e⁵ ≈ 1.4·10⁶⁴; p is capped at 1. Either adjustment sets ``clamped``.
    """
    clamp = config.LLL_CLAMP if clamp is None else clamp
    if max_degree < 2:
        raise InputError(f"maximum degree must be at least 2, got {max_degree}")
    if k < 1:
        raise InputError(f"k must be a positive integer, got {k}")
    if not 0 < clamp < 1:
        raise InputError(f"clamp must lie strictly between 0 and 1, got {clamp}")
    log_delta = math.log(max_degree)
    loglog = math.log(log_delta)
    raw = math.sqrt(5 / loglog) if loglog > 0 else None
    clamped = raw is None or raw >= 1
    if clamped:
        logger.debug("epsilon1 clamped to %s for max degree %d", clamp, max_degree)
    epsilon1 = clamp if clamped else raw
    p = (1 - epsilon1) * (k + 1) / (max_degree + 1)
    if p > 1:
        p, clamped = 1.0, True
    regime = raw is not None and raw < 1 and k > log_delta * loglog
    return LLLParameters(epsilon1, 3 / math.sqrt(k * max_degree), p, clamped, regime)


@dataclass(frozen=True)
class RandomRunReport:
    method: str
    seed: int
    p: float
    packing: Packing | None
    rounds: int = 0
    repairs: int = 0
    clamped: bool = False
    success: bool = True
    size_event_ok: bool | None = None
    last_sample: frozenset[int] | None = None

    @property
    def size(self) -> int:
        return len(self.packing) if self.packing is not None else 0

    def to_text(self) -> str:
        lines = []
        if not self.success:
            lines.append('status: failed')
        lines += [f"size: {self.size}",
                  f"rounds: {self.rounds}",
                  f"clamped: {'true' if self.clamped else 'false'}"]
        if self.size_event_ok is not None:
            lines.append(f"size_event: {'true' if self.size_event_ok else 'false'}")
        if self.packing is not None:
            lines.append('witness: ' + ' '.join(str(v) for v in sorted(self.packing.vertices)))
        return '\n'.join(lines) + '\n'


def _sampling_rate(max_degree: int, k: int) -> float:
    """(C(Δ,k)(Δ+1))^{-1/k}, the rate that maximises the expectation argument."""
    return math.exp(-math.log(math.comb(max_degree, k) * (max_degree + 1)) / k)


def resolve_rate(g: Graph, k: int, p: float | str) -> float:
    """Turn ``'auto'``, ``'bound'`` or a number into a sampling probability."""
    max_degree = degree_stats(g).max_degree
    if isinstance(p, str):
        if p not in (AUTO, BOUND):
            raise InputError(f"p must be a probability, '{AUTO}' or '{BOUND}', got {p!r}")
        if k > max_degree:
            return 1.0
        rate = _sampling_rate(max_degree, k)
        return rate if p == AUTO else rate * k / (k + 1)
    if not 0 <= p <= 1:
        raise InputError(f"p must lie in [0, 1], got {p}")
    return float(p)


def sample_and_repair(g: Graph, k: int, p: float | str = AUTO, seed: int | None = None) -> RandomRunReport:
    """Keep each vertex with probability p, then trim overfull closed neighbourhoods.

    Vertices are visited in increasing order and the highest-index members of an
    overfull N[v] ∩ X are dropped, so a single pass leaves a k-limited packing.
    """
    if k < 1:
        raise InputError(f"k must be a positive integer, got {k}")
    seed = config.DEFAULT_SEED if seed is None else seed
    rate = resolve_rate(g, k, p)
    rng = make_rng(seed)
    draws = rng.random(g.vertex_count)
    chosen = {v for v in g.vertices if draws[v] < rate}
    repairs = 0
    for v in g.vertices:
        members = sorted(closed_neighborhood(g, v) & chosen)
        excess = len(members) - k
        if excess > 0:
            chosen.difference_update(members[-excess:])
            repairs += excess
    logger.debug("sample-and-repair seed %d kept %d vertices after %d repairs", seed, len(chosen), repairs)
    return RandomRunReport(SAMPLE_REPAIR, seed, rate, Packing(k, frozenset(chosen)), repairs=repairs)


class ResamplingState:
    """Current sample X with |N[v] ∩ X| for every v and the set of bad events B_v."""

    def __init__(self, g: Graph, k: int, p: float, rng: np.random.Generator):
        self.g, self.k, self.p, self.rng = g, k, p, rng
        draws = rng.random(g.vertex_count)
        self.member = [bool(draws[v] < p) for v in g.vertices]
        self.counts = [sum(self.member[u] for u in closed_neighborhood(g, v)) for v in g.vertices]
        self._bad = {v for v in g.vertices if self.counts[v] > k}

    def members(self) -> frozenset[int]:
        return frozenset(v for v in self.g.vertices if self.member[v])

    def bad_events(self) -> list[int]:
        """Vertices v whose event |N[v] ∩ X| ≥ k + 1 holds, in increasing order."""
        return sorted(self._bad)

    def first_bad(self) -> int | None:
        return min(self._bad) if self._bad else None

    def resample(self, v: int) -> None:
        """Redraw membership of every vertex of N[v] independently at rate p."""
        block = sorted(closed_neighborhood(self.g, v))
        draws = self.rng.random(len(block))
        for w, draw in zip(block, draws):
            new = bool(draw < self.p)
            if new == self.member[w]:
                continue
            self.member[w] = new
            delta = 1 if new else -1
            for x in closed_neighborhood(self.g, w):
                self.counts[x] += delta
                if self.counts[x] > self.k:
                    self._bad.add(x)
                else:
                    self._bad.discard(x)


def lll_resample(g: Graph, k: int, params: LLLParameters | str = AUTO, seed: int | None = None,
                 max_rounds: int | None = None, p: float | None = None) -> RandomRunReport:
    """Sample X at rate p and resample N[v] for the lowest-index bad event until none holds.

    When ``max_rounds`` runs out the report has ``success=False``, no packing and the
    last sample.
    """
    if k < 1:
        raise InputError(f"k must be a positive integer, got {k}")
    seed = config.DEFAULT_SEED if seed is None else seed
    max_rounds = config.LLL_MAX_ROUNDS if max_rounds is None else max_rounds
    if max_rounds < 1:
        raise InputError(f"max_rounds must be a positive integer, got {max_rounds}")
    stats = degree_stats(g)
    if isinstance(params, str):
        if params != AUTO:
            raise InputError(f"params must be LLLParameters or '{AUTO}', got {params!r}")
        if k > stats.max_degree:
            params = LLLParameters(0.0, 3 / math.sqrt(k * max(stats.max_degree, 1)), 1.0, False)
        else:
            params = lll_parameters(max(stats.max_degree, 2), k)
    if p is not None:
        if not 0 <= p <= 1:
            raise InputError(f"p must lie in [0, 1], got {p}")
        params = replace(params, p=float(p))

    state = ResamplingState(g, k, params.p, make_rng(seed))
    rounds = 0
    while (v := state.first_bad()) is not None:
        if rounds == max_rounds:
            logger.warning("resampling seed %d stopped after %d rounds with %d bad events",
                           seed, rounds, len(state.bad_events()))
            return RandomRunReport(LLL, seed, params.p, None, rounds=rounds, clamped=params.clamped,
                                   success=False, last_sample=state.members())
        state.resample(v)
        rounds += 1
    chosen = state.members()
    logger.debug("resampling seed %d finished after %d rounds with %d vertices", seed, rounds, len(chosen))
    return RandomRunReport(LLL, seed, params.p, Packing(k, chosen), rounds=rounds, clamped=params.clamped,
                           size_event_ok=len(chosen) >= params.size_target(g.vertex_count))


def _monte_carlo_row(g: Graph, k: int, method: str, p: float | str, seed: int) -> dict:
    if method == SAMPLE_REPAIR:
        report = sample_and_repair(g, k, p=p, seed=seed)
    elif method == LLL:
        report = lll_resample(g, k, seed=seed, p=None if isinstance(p, str) else p)
    else:
        raise InputError(f"method must be '{SAMPLE_REPAIR}' or '{LLL}', got {method!r}")
    valid = report.packing is not None and verify_k_limited(g, report.packing.vertices, k).valid
    return {'seed': seed, 'size': report.size, 'repairs': report.repairs, 'rounds': report.rounds,
            'success': report.success, 'valid': valid}


def monte_carlo_sizes(g: Graph, k: int, seeds: Sequence[int], method: str = SAMPLE_REPAIR,
                      p: float | str = AUTO, n_jobs: int | None = None) -> pd.DataFrame:
    """One row per seed: seed, size, repairs, rounds, success, valid."""
    n_jobs = config.N_JOBS if n_jobs is None else n_jobs
    rows = Parallel(n_jobs=n_jobs)(delayed(_monte_carlo_row)(g, k, method, p, seed) for seed in seeds)
    return pd.DataFrame(rows, columns=['seed', 'size', 'repairs', 'rounds', 'success', 'valid'])


def summarize_sizes(runs: pd.DataFrame) -> dict[str, float]:
    """Mean, sample standard deviation and standard error of the ``size`` column."""
    sizes = runs['size'].astype(float)
    std = float(sizes.std(ddof=1)) if len(sizes) > 1 else 0.0
    return {'runs': len(sizes), 'mean': float(sizes.mean()), 'std': std,
            'stderr': std / math.sqrt(len(sizes)) if len(sizes) else 0.0}
