"""Simple undirected graphs on dense 0-based vertex indices.

A ``Graph`` is immutable after construction, so every query here is a pure
function and graphs can be shared freely between threads and worker processes.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, NamedTuple

import networkx as nx

from limpack.errors import InputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adjacency[v]`` is the sorted tuple of neighbours of v."""

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    _neighbor_sets: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InputError(f"vertex count must be nonnegative, got {self.vertex_count}")
        if len(self.adjacency) != self.vertex_count:
            raise InputError(
                f"adjacency has {len(self.adjacency)} rows for {self.vertex_count} vertices")
        sets = []
        for v, row in enumerate(self.adjacency):
            row_set = frozenset(row)
            if len(row_set) != len(row):
                raise InputError(f"vertex {v} lists a neighbour twice")
            if v in row_set:
                raise InputError(f"self-loop at vertex {v}")
            for u in row:
                if not 0 <= u < self.vertex_count:
                    raise InputError(f"neighbour {u} of vertex {v} is out of range")
            sets.append(row_set)
        for v, row in enumerate(self.adjacency):
            for u in row:
                if v not in sets[u]:
                    raise InputError(f"adjacency is not symmetric on the pair ({v}, {u})")
        object.__setattr__(self, '_neighbor_sets', tuple(sets))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            for w in (u, v):
                if not 0 <= w < vertex_count:
                    raise InputError(f"edge ({u}, {v}) has endpoint outside 0..{vertex_count - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(vertex_count, tuple(tuple(sorted(row)) for row in rows))

    @classmethod
    def empty(cls, vertex_count: int = 0) -> Graph:
        return cls(vertex_count, tuple(() for _ in range(vertex_count)))

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def neighbors(self, v: int) -> frozenset[int]:
        check_vertex(self, v)
        return self._neighbor_sets[v]

    def degree(self, v: int) -> int:
        check_vertex(self, v)
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors(u)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.adjacency):
            for v in row:
                if u < v:
                    yield u, v


class DegreeStats(NamedTuple):
    max_degree: int
    min_degree: int
    n: int
    m: int


def check_vertex(g: Graph, v: int) -> None:
    if not isinstance(v, int) or not 0 <= v < g.vertex_count:
        raise InputError(f"vertex {v} is out of range for a graph on {g.vertex_count} vertices")


def check_vertex_set(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    result = frozenset(vertices)
    for v in sorted(result):
        check_vertex(g, v)
    return result


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    """N[v] = {v} ∪ N(v)."""
    return g.neighbors(v) | {v}


def degree_stats(g: Graph) -> DegreeStats:
    if g.vertex_count == 0:
        return DegreeStats(0, 0, 0, 0)
    degrees = [len(row) for row in g.adjacency]
    return DegreeStats(max(degrees), min(degrees), g.vertex_count, g.edge_count)


def is_regular(g: Graph) -> int | None:
    """The common degree r when g is r-regular, else None."""
    stats = degree_stats(g)
    return stats.max_degree if stats.max_degree == stats.min_degree else None


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """g1 followed by g2 with g2's vertices shifted by ``g1.vertex_count``."""
    shift = g1.vertex_count
    shifted = tuple(tuple(u + shift for u in row) for row in g2.adjacency)
    return Graph(g1.vertex_count + g2.vertex_count, g1.adjacency + shifted)


def bfs_distances(source: int, neighbors: Callable[[int], Iterable[int]]) -> dict[int, int]:
    """Hop distance from source to every vertex reachable through ``neighbors``."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in neighbors(v):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def pairwise_distance(g: Graph, u: int, v: int) -> int | None:
    """Shortest-path edge count between u and v; None when v is unreachable from u."""
    check_vertex(g, u)
    check_vertex(g, v)
    return bfs_distances(u, g.adjacency.__getitem__).get(v)


def vertices_within(g: Graph, v: int, radius: int) -> frozenset[int]:
    check_vertex(g, v)
    return frozenset(w for w, d in bfs_distances(v, g.adjacency.__getitem__).items() if d <= radius)


def components_by(vertices: Iterable[int], neighbors: Callable[[int], Iterable[int]]) -> list[tuple[int, ...]]:
    """Components as sorted vertex tuples, ordered by their smallest vertex.

    Shared by plain graphs, typed multigraphs and the reduction work graphs.
    """
    seen: set[int] = set()
    components = []
    for v in sorted(vertices):
        if v in seen:
            continue
        component = bfs_distances(v, neighbors).keys()
        seen.update(component)
        components.append(tuple(sorted(component)))
    return components


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    return components_by(g.vertices, g.adjacency.__getitem__)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``vertices`` plus the new→old index map."""
    old = tuple(sorted(check_vertex_set(g, vertices)))
    new_index = {v: i for i, v in enumerate(old)}
    rows = tuple(
        tuple(sorted(new_index[u] for u in g.adjacency[v] if u in new_index)) for v in old)
    return Graph(len(old), rows), old


def to_networkx(g: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices)
    nxg.add_edges_from(g.edges())
    return nxg


def from_networkx(nxg: nx.Graph) -> Graph:
    """Relabels nodes to 0..n-1 in sorted node order."""
    nodes = sorted(nxg.nodes)
    index = {node: i for i, node in enumerate(nodes)}
    return Graph.from_edges(len(nodes), ((index[u], index[v]) for u, v in nxg.edges))
