"""Multigraphs whose edges are colour edges (c) or domination edges (d).

A pair may carry one c-edge and one d-edge at the same time; repeated edges of the
same type are dropped on construction since they impose no extra condition.
Both types count towards a vertex's degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from limpack.errors import InputError
from limpack.graph_core import Graph, components_by

C_EDGE = 'c'
D_EDGE = 'd'
EDGE_TYPES = (C_EDGE, D_EDGE)

Pair = tuple[int, int]


def pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class TypedMultigraph:
    vertex_count: int
    c_edges: frozenset[Pair]
    d_edges: frozenset[Pair]
    _c_adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)
    _d_adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        c_rows: list[set[int]] = [set() for _ in range(n)]
        d_rows: list[set[int]] = [set() for _ in range(n)]
        for edges, rows in ((self.c_edges, c_rows), (self.d_edges, d_rows)):
            for u, v in edges:
                if not (0 <= u < n and 0 <= v < n):
                    raise InputError(f"edge ({u}, {v}) has endpoint outside 0..{n - 1}")
                if u >= v:
                    raise InputError(f"edge ({u}, {v}) must be stored as an ordered pair u < v")
                rows[u].add(v)
                rows[v].add(u)
        object.__setattr__(self, '_c_adj', tuple(frozenset(r) for r in c_rows))
        object.__setattr__(self, '_d_adj', tuple(frozenset(r) for r in d_rows))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int, str]]) -> TypedMultigraph:
        c_edges: set[Pair] = set()
        d_edges: set[Pair] = set()
        for u, v, kind in edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if kind == C_EDGE:
                c_edges.add(pair(u, v))
            elif kind == D_EDGE:
                d_edges.add(pair(u, v))
            else:
                raise InputError(f"unknown edge type {kind!r}; expected 'c' or 'd'")
        return cls(vertex_count, frozenset(c_edges), frozenset(d_edges))

    @classmethod
    def from_graph(cls, g: Graph) -> TypedMultigraph:
        """All edges become d-edges, so 2-limited sets coincide with 2-limited packings."""
        return cls(g.vertex_count, frozenset(), frozenset(g.edges()))

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    def edges(self) -> list[tuple[int, int, str]]:
        typed = [(u, v, C_EDGE) for u, v in self.c_edges] + [(u, v, D_EDGE) for u, v in self.d_edges]
        return sorted(typed)

    def c_neighbors(self, v: int) -> frozenset[int]:
        return self._c_adj[self._check(v)]

    def d_neighbors(self, v: int) -> frozenset[int]:
        return self._d_adj[self._check(v)]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.c_neighbors(v) | self.d_neighbors(v)

    def degree(self, v: int) -> int:
        return len(self.c_neighbors(v)) + len(self.d_neighbors(v))

    def max_degree(self) -> int:
        return max((self.degree(v) for v in self.vertices), default=0)

    def closed_d_neighborhood(self, v: int) -> frozenset[int]:
        """N_d[v]: v and its d-neighbours; c-edges do not contribute."""
        return self.d_neighbors(v) | {v}

    def is_c_edge(self, u: int, v: int) -> bool:
        return v in self.c_neighbors(u)

    def is_d_edge(self, u: int, v: int) -> bool:
        return v in self.d_neighbors(u)

    def components(self) -> list[tuple[int, ...]]:
        return components_by(self.vertices, self.neighbors)

    def all_c_k4_components(self) -> list[tuple[int, ...]]:
        """Components that are a K4 built only from c-edges (excluded by the n/3 construction)."""
        found = []
        for component in self.components():
            if len(component) != 4:
                continue
            if all(self.c_neighbors(v) == set(component) - {v} and not self.d_neighbors(v)
                   for v in component):
                found.append(component)
        return found

    def underlying_graph(self) -> Graph:
        """Simple graph on the same vertices joining every pair that carries any edge."""
        return Graph.from_edges(self.vertex_count, self.c_edges | self.d_edges)

    def _check(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.vertex_count:
            raise InputError(
                f"vertex {v} is out of range for a multigraph on {self.vertex_count} vertices")
        return v
