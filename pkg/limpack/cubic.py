"""2-limited sets of size at least n/3 in typed multigraphs of maximum degree 3.

The construction peels the multigraph one reduction at a time. A reduction removes a
vertex set R, commits a set S ⊆ R to the answer and may join pairs of surviving
vertices by new c-edges; it is only applied after ``_complete_plan`` has checked that
any 2-limited set of the remainder extends by S, that 3|S| ≥ |R| and that the
remainder keeps maximum degree 3 without an all-c K4 component. Rules are tried in a
fixed order and each rule scans its candidates lexicographically, so the result is
deterministic.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from limpack.brooks import brooks_three_coloring
from limpack.errors import PreconditionError, ReductionError
from limpack.exact import max_typed_two_limited
from limpack.graph_core import Graph, components_by
from limpack.shared import config
from limpack.typed import Pair, TypedMultigraph, pair

logger = logging.getLogger(__name__)

BASE_CASE = 'base-case'
BROOKS = 'brooks'
CONFIGURATION_A = 'configuration-A'
DEGREE_ONE = 'degree-1'
DEGREE_TWO = 'degree-2'
TWO_TRIANGLES = 'd-edge-two-triangles'
ONE_TRIANGLE = 'd-edge-one-triangle'
NO_TRIANGLE = 'd-edge-no-triangle'
EXACT_FALLBACK = 'exact-fallback'


@dataclass(frozen=True)
class TraceStep:
    rule: str
    removed: tuple[int, ...]
    chosen: tuple[int, ...]
    added: tuple[Pair, ...] = ()

    def to_line(self) -> str:
        def ids(values):
            return ','.join(str(v) for v in values) or '-'
        added = ','.join(f"{u}-{v}" for u, v in self.added) or '-'
        return f"{self.rule} removed={ids(self.removed)} chosen={ids(self.chosen)} added={added}"


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[TraceStep, ...]

    def removed_vertices(self) -> frozenset[int]:
        return frozenset(v for step in self.steps for v in step.removed)

    def rules(self) -> list[str]:
        return [step.rule for step in self.steps]

    def to_text(self) -> str:
        return ''.join(step.to_line() + '\n' for step in self.steps)


@dataclass(frozen=True)
class ConfigurationA:
    """Five c-edges ca, cd, cb, ad, ab (bd not a c-edge) plus edges du, bu and uv."""

    a: int
    b: int
    c: int
    d: int
    u: int
    v: int

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset((self.a, self.b, self.c, self.d, self.u, self.v))


class _Work:
    """Mutable typed multigraph on the vertices that are still alive, keyed by original index."""

    def __init__(self, c_adj: dict[int, set[int]], d_adj: dict[int, set[int]]):
        self.c = c_adj
        self.d = d_adj

    @classmethod
    def from_typed(cls, tm: TypedMultigraph) -> _Work:
        return cls({v: set(tm.c_neighbors(v)) for v in tm.vertices},
                   {v: set(tm.d_neighbors(v)) for v in tm.vertices})

    @property
    def vertices(self) -> list[int]:
        return sorted(self.c)

    def __len__(self) -> int:
        return len(self.c)

    def neighbors(self, v: int) -> set[int]:
        return self.c[v] | self.d[v]

    def degree(self, v: int) -> int:
        return len(self.c[v]) + len(self.d[v])

    def closed_d(self, v: int) -> set[int]:
        return self.d[v] | {v}

    def d_edges(self) -> list[Pair]:
        return sorted((u, v) for u in self.d for v in self.d[u] if u < v)

    def restrict(self, keep: Iterable[int]) -> _Work:
        keep = set(keep)
        return _Work({v: self.c[v] & keep for v in keep}, {v: self.d[v] & keep for v in keep})

    def without(self, removed: frozenset[int], added: Iterable[Pair]) -> _Work:
        rest = self.restrict(set(self.c) - removed)
        for x, y in added:
            rest.c[x].add(y)
            rest.c[y].add(x)
        return rest

    def components(self) -> list[tuple[int, ...]]:
        return components_by(self.vertices, self.neighbors)

    def c_k4_containing(self, v: int) -> frozenset[int] | None:
        """The all-c K4 component through v, if there is one."""
        block = frozenset(self.c[v] | {v})
        if len(block) != 4:
            return None
        if all(self.c[x] == block - {x} and not self.d[x] for x in block):
            return block
        return None

    def relabel(self) -> tuple[list[int], dict[int, int]]:
        old = self.vertices
        return old, {v: i for i, v in enumerate(old)}

    def underlying(self) -> tuple[Graph, list[int]]:
        old, index = self.relabel()
        edges = ((index[u], index[v]) for u in old for v in self.neighbors(u) if u < v)
        return Graph.from_edges(len(old), edges), old

    def to_typed(self) -> tuple[TypedMultigraph, list[int]]:
        old, index = self.relabel()
        edges = [(index[u], index[v], kind) for kind, adj in (('c', self.c), ('d', self.d))
                 for u in old for v in adj[u] if u < v]
        return TypedMultigraph.from_edges(len(old), edges), old


@dataclass(frozen=True)
class _Plan:
    step: TraceStep
    remainder: _Work | None


class _Attempt(NamedTuple):
    plan: _Plan | None
    # c-K4 components the new c-edges would create, each with the removed vertices
    # (owners) whose requirement produced a new edge inside it
    k4s: tuple[tuple[frozenset[int], dict[int, Pair]], ...] = ()


_REJECTED = _Attempt(None)


def _complete_plan(work: _Work, rule: str, removed: Iterable[int], chosen: Iterable[int]) -> _Attempt:
    """Check a reduction and derive the c-edges it needs.

    For a removed vertex r, let hit be |N_d[r] ∩ S| and T the d-neighbours of r that
    survive. The remainder's 2-limited sets can put any of T into X, so hit + |T| ≤ 2
    must hold, except that hit = 1 with |T| = 2 is repaired by a c-edge on T.
    """
    removed = frozenset(removed)
    chosen = frozenset(chosen)
    if not chosen <= removed or 3 * len(chosen) < len(removed):
        return _REJECTED
    for s in chosen:
        if not work.neighbors(s) <= removed or work.c[s] & chosen:
            return _REJECTED
    owned: dict[int, Pair] = {}
    for r in sorted(removed):
        hit = len(work.closed_d(r) & chosen)
        survivors = sorted(work.d[r] - removed)
        if hit + len(survivors) <= 2:
            continue
        if hit != 1 or len(survivors) != 2:
            return _REJECTED
        x, y = survivors
        if y not in work.c[x]:
            owned[r] = (x, y)
    added = sorted(set(owned.values()))
    remainder = work.without(removed, added)
    if any(remainder.degree(t) > 3 for p in added for t in p):
        return _REJECTED
    k4s = []
    for x, _ in added:
        block = remainder.c_k4_containing(x)
        if block is not None and all(block != found for found, _ in k4s):
            k4s.append((block, {r: p for r, p in owned.items() if set(p) <= block}))
    if k4s:
        return _Attempt(None, tuple(k4s))
    step = TraceStep(rule, tuple(sorted(removed)), tuple(sorted(chosen)), tuple(added))
    return _Attempt(_Plan(step, remainder if len(remainder) else None))


def _whole(work: _Work, rule: str, chosen: Iterable[int]) -> _Plan:
    return _Plan(TraceStep(rule, tuple(work.vertices), tuple(sorted(chosen))), None)


def _configurations(work: _Work) -> Iterator[ConfigurationA]:
    for c in work.vertices:
        around = sorted(work.c[c])
        for a in around:
            for d in around:
                if d == a or d not in work.c[a]:
                    continue
                for b in around:
                    if b in (a, d) or b not in work.c[a] or b in work.c[d]:
                        continue
                    core = {a, b, c, d}
                    for u in sorted((work.neighbors(d) & work.neighbors(b)) - core):
                        for v in sorted(work.neighbors(u) - core - {u}):
                            yield ConfigurationA(a, b, c, d, u, v)


def find_configuration_A(tm: TypedMultigraph) -> ConfigurationA | None:
    """First occurrence in lexicographic order of (c, a, d, b) then (u, v), or None."""
    return next(_configurations(_Work.from_typed(tm)), None)


def _pair_subcase(work: _Work, rule: str, attempt: _Attempt, core: set[int]) -> Iterator[_Plan]:
    """New c-edges owned by x and y close a c-K4 K: take pair(x) ∪ {y} and remove K ∪ {x, y} ∪ core."""
    for block, owned in attempt.k4s:
        for x, y in itertools.permutations(sorted(owned), 2):
            alt = _complete_plan(work, f"{rule}/c-k4", block | set(owned) | core, set(owned[x]) | {y})
            if alt.plan is not None:
                yield alt.plan


def _configuration_a_steps(work: _Work) -> Iterator[_Plan]:
    for conf in _configurations(work):
        attempt = _complete_plan(work, CONFIGURATION_A, conf.vertices, {conf.b, conf.d})
        if attempt.plan is not None:
            yield attempt.plan


def _degree_one_steps(work: _Work) -> Iterator[_Plan]:
    for u in work.vertices:
        around = work.neighbors(u)
        if len(around) == 1:
            attempt = _complete_plan(work, DEGREE_ONE, around | {u}, {u})
            if attempt.plan is not None:
                yield attempt.plan


def _degree_two_steps(work: _Work) -> Iterator[_Plan]:
    for u in work.vertices:
        around = work.neighbors(u)
        if len(around) != 2:
            continue
        attempt = _complete_plan(work, DEGREE_TWO, around | {u}, {u})
        if attempt.plan is not None:
            yield attempt.plan
        else:
            yield from _pair_subcase(work, DEGREE_TWO, attempt, {u})


def _d_edges_by_triangles(work: _Work, triangles: int) -> Iterator[tuple[int, int, list[int]]]:
    for u, v in work.d_edges():
        common = sorted((work.neighbors(u) & work.neighbors(v)) - {u, v})
        if min(len(common), 2) == triangles:
            yield u, v, common


def _two_triangle_steps(work: _Work) -> Iterator[_Plan]:
    for u, v, common in _d_edges_by_triangles(work, 2):
        b, c = common[:2]
        removed = {u, v, b, c} | work.neighbors(b) | work.neighbors(c)
        attempt = _complete_plan(work, TWO_TRIANGLES, removed, {u, v})
        if attempt.plan is not None:
            yield attempt.plan


def _one_triangle_steps(work: _Work) -> Iterator[_Plan]:
    for u, v, (w,) in _d_edges_by_triangles(work, 1):
        removed = {u, v, w} | work.neighbors(u) | work.neighbors(v) | work.neighbors(w)
        attempt = _complete_plan(work, ONE_TRIANGLE, removed, {u, v})
        if attempt.plan is not None:
            yield attempt.plan
        else:
            yield from _pair_subcase(work, ONE_TRIANGLE, attempt, {u, v, w})


def _no_triangle_steps(work: _Work) -> Iterator[_Plan]:
    for u, v, _ in _d_edges_by_triangles(work, 0):
        side_u = work.neighbors(u) - {v}
        side_v = work.neighbors(v) - {u}
        removed = {u, v} | side_u | side_v
        attempt = _complete_plan(work, NO_TRIANGLE, removed, {u, v})
        if attempt.plan is not None:
            yield attempt.plan
            continue
        yield from _pair_subcase(work, NO_TRIANGLE, attempt, {u, v})
        for block, owned in attempt.k4s:
            if len(owned) == 3:
                # two owners on one side; the centre of the other side joins the answer
                for side, centre in ((side_u, v), (side_v, u)):
                    same = sorted(set(owned) & side)
                    if len(same) != 2:
                        continue
                    for x, y in itertools.permutations(same, 2):
                        alt = _complete_plan(work, f"{NO_TRIANGLE}/c-k4-three", block | removed,
                                             set(owned[x]) | {y, centre})
                        if alt.plan is not None:
                            yield alt.plan
            elif len(owned) == 4:
                alt = _complete_plan(work, f"{NO_TRIANGLE}/c-k4-four", work.vertices, side_u | side_v)
                if alt.plan is not None:
                    yield alt.plan


_RULES = (
    _configuration_a_steps,
    _degree_one_steps,
    _degree_two_steps,
    _two_triangle_steps,
    _one_triangle_steps,
    _no_triangle_steps,
)


def _brooks_step(work: _Work) -> _Plan:
    g, old = work.underlying()
    colors = brooks_three_coloring(g)
    classes = [[old[i] for i, c in enumerate(colors) if c == color] for color in range(3)]
    largest = max(range(3), key=lambda color: (len(classes[color]), -color))
    return _whole(work, BROOKS, classes[largest])


def _exact_step(work: _Work) -> _Plan:
    tm, old = work.to_typed()
    result = max_typed_two_limited(tm, limit=config.REDUCTION_FALLBACK_LIMIT)
    return _whole(work, EXACT_FALLBACK, (old[i] for i in result.witness))


def _reduce(work: _Work) -> _Plan:
    """One step on a connected multigraph."""
    vertices = work.vertices
    if len(vertices) <= 3:
        return _whole(work, BASE_CASE, vertices[:1])
    if len(vertices) == 4:
        u, v = next((x, y) for x, y in itertools.combinations(vertices, 2) if y not in work.c[x])
        return _whole(work, BASE_CASE, (u, v))
    if not work.d_edges():
        return _brooks_step(work)
    for rule in _RULES:
        plan = next(rule(work), None)
        if plan is not None:
            return plan
    if len(vertices) <= config.REDUCTION_FALLBACK_LIMIT:
        logger.warning("no reduction applies to a component of %d vertices; solving it exactly",
                       len(vertices))
        return _exact_step(work)
    raise ReductionError(f"no reduction applies to the component containing vertex {vertices[0]}")


def _check_preconditions(tm: TypedMultigraph) -> None:
    for v in tm.vertices:
        if tm.degree(v) > 3:
            raise PreconditionError(f"vertex {v} has degree {tm.degree(v)}; maximum degree must be at most 3")
    for component in tm.all_c_k4_components():
        raise PreconditionError(f"component {list(component)} is a K4 made only of c-edges")


def construct_two_limited(tm: TypedMultigraph) -> tuple[frozenset[int], ReductionTrace]:
    """A 2-limited set X with 3|X| ≥ n, together with the reductions that produced it."""
    _check_preconditions(tm)
    chosen: set[int] = set()
    steps: list[TraceStep] = []
    pending = [_Work.from_typed(tm)] if tm.vertex_count else []
    while pending:
        work = pending.pop()
        components = work.components()
        if len(components) > 1:
            pending.extend(work.restrict(component) for component in reversed(components))
            continue
        plan = _reduce(work)
        logger.debug("%s", plan.step.to_line())
        steps.append(plan.step)
        chosen.update(plan.step.chosen)
        if plan.remainder is not None:
            pending.append(plan.remainder)
    return frozenset(chosen), ReductionTrace(tuple(steps))
