"""Exact L_k(G) and γ_{×ℓ}(G) by branch and bound, plus a brute-force oracle.

Both searches branch on vertices in descending-degree order (ties by index), trying
"take the vertex" before "skip it" and replacing the incumbent only on strict
improvement, so the single-process witness is the first optimum in that order.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Sequence

from joblib import Parallel, delayed

from limpack.errors import InfeasibleError, InputError, ResourceLimitError
from limpack.graph_core import Graph, closed_neighborhood, degree_stats
from limpack.shared import config
from limpack.typed import TypedMultigraph

logger = logging.getLogger(__name__)

PACKING = 'packing'
DOMINATION = 'domination'

Constraint = tuple[tuple[int, ...], int]


@dataclass(frozen=True)
class SolveResult:
    optimum: int
    witness: tuple[int, ...]
    nodes_explored: int

    def to_text(self) -> str:
        return (f"optimum: {self.optimum}\n"
                f"witness: {' '.join(str(v) for v in self.witness)}\n"
                f"nodes: {self.nodes_explored}\n")


class _PackingSearch:
    """Maximise |X| subject to |C ∩ X| ≤ capacity(C) for every constraint C."""

    def __init__(self, n: int, constraints: Sequence[Constraint], order: Sequence[int]):
        self.order = list(order)
        self.members: list[list[int]] = [[] for _ in range(n)]
        for index, (vertices, _) in enumerate(constraints):
            for v in vertices:
                self.members[v].append(index)
        self.residual = [capacity for _, capacity in constraints]
        self.chosen: list[int] = []
        self.best: tuple[int, ...] = ()
        self.best_size = -1
        self.nodes = 0

    def _selectable(self, v: int) -> bool:
        return all(self.residual[c] > 0 for c in self.members[v])

    def apply(self, v: int, take: bool) -> bool:
        if not take:
            return True
        if not self._selectable(v):
            return False
        for c in self.members[v]:
            self.residual[c] -= 1
        self.chosen.append(v)
        return True

    def run(self, start: int = 0) -> None:
        self._search(start)

    def _search(self, i: int) -> None:
        self.nodes += 1
        order = self.order
        if i == len(order):
            if len(self.chosen) > self.best_size:
                self.best_size = len(self.chosen)
                self.best = tuple(sorted(self.chosen))
            return
        open_count = sum(1 for v in order[i:] if self._selectable(v))
        if len(self.chosen) + open_count <= self.best_size:
            return
        v = order[i]
        if self._selectable(v):
            members = self.members[v]
            for c in members:
                self.residual[c] -= 1
            self.chosen.append(v)
            self._search(i + 1)
            self.chosen.pop()
            for c in members:
                self.residual[c] += 1
        self._search(i + 1)


class _CoveringSearch:
    """Minimise |D| subject to |C ∩ D| ≥ demand(C) for every constraint C."""

    def __init__(self, n: int, constraints: Sequence[Constraint], order: Sequence[int]):
        self.order = list(order)
        self.members: list[list[int]] = [[] for _ in range(n)]
        for index, (vertices, _) in enumerate(constraints):
            for v in vertices:
                self.members[v].append(index)
        self.demand = [demand for _, demand in constraints]
        self.have = [0] * len(constraints)
        self.open = [len(vertices) for vertices, _ in constraints]
        self.max_cover = max((len(m) for m in self.members), default=1) or 1
        self.chosen: list[int] = []
        self.best: tuple[int, ...] = ()
        self.best_size = n + 1
        self.nodes = 0

    def apply(self, v: int, take: bool) -> bool:
        for c in self.members[v]:
            self.open[c] -= 1
            if take:
                self.have[c] += 1
        if take:
            self.chosen.append(v)
            return True
        return all(self.have[c] + self.open[c] >= self.demand[c] for c in self.members[v])

    def run(self, start: int = 0) -> None:
        self._search(start)

    def _search(self, i: int) -> None:
        self.nodes += 1
        deficits = [max(0, d - h) for d, h in zip(self.demand, self.have)]
        largest = max(deficits, default=0)
        if largest == 0:
            if len(self.chosen) < self.best_size:
                self.best_size = len(self.chosen)
                self.best = tuple(sorted(self.chosen))
            return
        lower = len(self.chosen) + max(largest, math.ceil(sum(deficits) / self.max_cover))
        if lower >= self.best_size or i == len(self.order):
            return
        v = self.order[i]
        members = self.members[v]
        for c in members:
            self.open[c] -= 1
            self.have[c] += 1
        self.chosen.append(v)
        self._search(i + 1)
        self.chosen.pop()
        for c in members:
            self.have[c] -= 1
        if all(self.have[c] + self.open[c] >= self.demand[c] for c in members):
            self._search(i + 1)
        for c in members:
            self.open[c] += 1


_SEARCHES = {PACKING: _PackingSearch, DOMINATION: _CoveringSearch}


def _solve_branch(kind: str, n: int, constraints: Sequence[Constraint], order: Sequence[int],
                  prefix: Sequence[bool]) -> tuple[int, tuple[int, ...], int]:
    search = _SEARCHES[kind](n, constraints, order)
    for v, take in zip(order, prefix):
        if not search.apply(v, take):
            return -1, (), 1
    search.run(len(prefix))
    return search.best_size, search.best, search.nodes


def _prefixes(depth: int) -> list[tuple[bool, ...]]:
    """All take/skip assignments of ``depth`` vertices in take-first search order."""
    return [tuple(not (bits >> (depth - 1 - j)) & 1 for j in range(depth)) for bits in range(2 ** depth)]


def _run(kind: str, n: int, constraints: Sequence[Constraint], order: Sequence[int],
         n_jobs: int) -> SolveResult:
    if n_jobs == 1 or n < 4:
        size, best, nodes = _solve_branch(kind, n, constraints, order, ())
    else:
        depth = min(n, max(1, (n_jobs - 1).bit_length() + 2))
        outcomes = Parallel(n_jobs=n_jobs)(
            delayed(_solve_branch)(kind, n, constraints, order, prefix) for prefix in _prefixes(depth))
        nodes = sum(outcome[2] for outcome in outcomes)
        feasible = [outcome for outcome in outcomes if 0 <= outcome[0] <= n]
        if kind == PACKING:
            size, best, _ = max(feasible, key=lambda outcome: outcome[0])
        else:
            size, best, _ = min(feasible, key=lambda outcome: outcome[0])
    logger.debug("%s search on %d vertices explored %d nodes", kind, n, nodes)
    return SolveResult(size, best, nodes)


def _branching_order(g: Graph) -> list[int]:
    return sorted(g.vertices, key=lambda v: (-g.degree(v), v))


def _check_limit(n: int, limit: int | None) -> None:
    cap = config.EXACT_VERTEX_LIMIT if limit is None else limit
    if n > cap:
        raise ResourceLimitError(
            f"graph has {n} vertices, above the exact-solver limit of {cap}; "
            f"use construct --method sample-repair or --method lll, "
            f"or raise LIMPACK_EXACT_VERTEX_LIMIT")


def _resolve_jobs(n_jobs: int | None) -> int:
    return config.N_JOBS if n_jobs is None else n_jobs


def max_k_limited(g: Graph, k: int, *, limit: int | None = None,
                  n_jobs: int | None = None) -> SolveResult:
    """L_k(g) with a witness packing."""
    if k < 1:
        raise InputError(f"k must be a positive integer, got {k}")
    _check_limit(g.vertex_count, limit)
    constraints = [(tuple(sorted(closed_neighborhood(g, v))), k) for v in g.vertices]
    return _run(PACKING, g.vertex_count, constraints, _branching_order(g), _resolve_jobs(n_jobs))


def min_tuple_dominating(g: Graph, ell: int, *, limit: int | None = None,
                         n_jobs: int | None = None) -> SolveResult:
    """γ_{×ℓ}(g) with a witness dominating set."""
    if ell < 1:
        raise InputError(f"l must be a positive integer, got {ell}")
    min_degree = degree_stats(g).min_degree
    if g.vertex_count and ell > min_degree + 1:
        raise InfeasibleError(
            f"no {ell}-tuple dominating set exists: a vertex of degree {min_degree} "
            f"has only {min_degree + 1} vertices in its closed neighbourhood")
    _check_limit(g.vertex_count, limit)
    constraints = [(tuple(sorted(closed_neighborhood(g, v))), ell) for v in g.vertices]
    return _run(DOMINATION, g.vertex_count, constraints, _branching_order(g), _resolve_jobs(n_jobs))


def max_typed_two_limited(tm: TypedMultigraph, *, limit: int | None = None) -> SolveResult:
    """Largest 2-limited set of a typed multigraph: c-edges hold ≤ 1, each N_d[v] ≤ 2."""
    _check_limit(tm.vertex_count, limit)
    constraints = [((u, v), 1) for u, v in sorted(tm.c_edges)]
    constraints += [(tuple(sorted(tm.closed_d_neighborhood(v))), 2) for v in tm.vertices]
    order = sorted(tm.vertices, key=lambda v: (-tm.degree(v), v))
    return _run(PACKING, tm.vertex_count, constraints, order, 1)


def enumerate_oracle(g: Graph, k: int = 1, mode: str = PACKING, ell: int = 1) -> int:
    """Optimum by scanning every subset; no pruning. Reference for tests only."""
    n = g.vertex_count
    if n > config.ORACLE_VERTEX_LIMIT:
        raise ResourceLimitError(
            f"oracle enumerates 2^n subsets and accepts at most {config.ORACLE_VERTEX_LIMIT} vertices, got {n}")
    masks = [sum(1 << u for u in closed_neighborhood(g, v)) for v in g.vertices]
    if mode == PACKING:
        if k < 1:
            raise InputError(f"k must be a positive integer, got {k}")
        best = 0
        for subset in range(1 << n):
            size = subset.bit_count()
            if size > best and all((subset & mask).bit_count() <= k for mask in masks):
                best = size
        return best
    if mode == DOMINATION:
        if ell < 1:
            raise InputError(f"l must be a positive integer, got {ell}")
        best = None
        for subset in range(1 << n):
            size = subset.bit_count()
            if (best is None or size < best) and all((subset & mask).bit_count() >= ell for mask in masks):
                best = size
        if best is None:
            raise InfeasibleError(f"no {ell}-tuple dominating set exists")
        return best
    raise InputError(f"mode must be '{PACKING}' or '{DOMINATION}', got {mode!r}")
