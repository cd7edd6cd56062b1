"""Proper 3-colouring of graphs with maximum degree 3 and no K4 component.

Each component is coloured on its own. The construction follows the usual proof of
Brooks' theorem: greedy colouring in reverse breadth-first order from a vertex that
has a spare colour, with special handling of bridges and of 2-connected cubic
components. Every result is checked; a failed check falls back to backtracking on
small components.
"""

from __future__ import annotations

import logging
from collections import deque
from typing import Sequence

import networkx as nx

from limpack.errors import PreconditionError, ReductionError
from limpack.graph_core import Graph, connected_components, degree_stats, induced_subgraph, to_networkx
from limpack.shared import config

logger = logging.getLogger(__name__)

COLORS = (0, 1, 2)


def _bfs_order(g: Graph, root: int, blocked: frozenset[int] = frozenset()) -> list[int]:
    order = [root]
    seen = {root} | blocked
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if u not in seen:
                seen.add(u)
                order.append(u)
                queue.append(u)
    return order


def _greedy(g: Graph, order: Sequence[int], colors: dict[int, int]) -> bool:
    for v in order:
        used = {colors[u] for u in g.adjacency[v] if u in colors}
        free = [c for c in COLORS if c not in used]
        if not free:
            return False
        colors[v] = free[0]
    return True


def _degenerate(g: Graph, vertices: Sequence[int], root: int, colors: dict[int, int]) -> bool:
    """Colour ``vertices`` leaves-first so that every vertex except ``root`` sees an uncoloured parent."""
    order = [v for v in _bfs_order(g, root) if v in vertices]
    return _greedy(g, list(reversed(order)), colors)


def _is_proper(g: Graph, colors: dict[int, int]) -> bool:
    return (len(colors) == g.vertex_count
            and all(colors[u] != colors[v] for u, v in g.edges())
            and all(c in COLORS for c in colors.values()))


def _color_with_bridge(g: Graph, nxg: nx.Graph, colors: dict[int, int]) -> bool:
    u, v = min(tuple(sorted(e)) for e in nx.bridges(nxg))
    split = nxg.copy()
    split.remove_edge(u, v)
    side_u = nx.node_connected_component(split, u)
    side_v = nx.node_connected_component(split, v)
    half_u, _ = induced_subgraph(g, side_u)
    local_u: dict[int, int] = {}
    half_v, _ = induced_subgraph(g, side_v)
    local_v: dict[int, int] = {}
    order_u = sorted(side_u)
    order_v = sorted(side_v)
    if not (_degenerate(half_u, range(half_u.vertex_count), order_u.index(u), local_u)
            and _degenerate(half_v, range(half_v.vertex_count), order_v.index(v), local_v)):
        return False
    colors.update({order_u[i]: c for i, c in local_u.items()})
    shift = 1 if local_u[order_u.index(u)] == local_v[order_v.index(v)] else 0
    colors.update({order_v[i]: (c + shift) % 3 for i, c in local_v.items()})
    return True


def _color_two_connected(g: Graph, nxg: nx.Graph, colors: dict[int, int]) -> bool:
    """Give two non-adjacent neighbours x, y of some v colour 0, with G - {x, y} connected."""
    for v in g.vertices:
        neighbours = g.adjacency[v]
        for i, x in enumerate(neighbours):
            for y in neighbours[i + 1:]:
                if g.has_edge(x, y):
                    continue
                rest = nxg.subgraph(set(g.vertices) - {x, y})
                if not nx.is_connected(rest):
                    continue
                colors.update({x: 0, y: 0})
                order = _bfs_order(g, v, blocked=frozenset({x, y}))
                return _greedy(g, list(reversed(order)), colors)
    return False


def _backtrack(g: Graph) -> dict[int, int] | None:
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    colors: dict[int, int] = {}

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        used = {colors[u] for u in g.adjacency[v] if u in colors}
        for c in COLORS:
            if c not in used:
                colors[v] = c
                if place(i + 1):
                    return True
                del colors[v]
        return False

    return colors if place(0) else None


def _color_component(g: Graph) -> dict[int, int]:
    stats = degree_stats(g)
    colors: dict[int, int] = {}
    nxg = to_networkx(g)
    if stats.n == 1:
        return {0: 0}
    if nx.is_bipartite(nxg):
        depth = nx.single_source_shortest_path_length(nxg, 0)
        return {v: depth[v] % 2 for v in g.vertices}
    if stats.min_degree < 3:
        root = min(g.vertices, key=lambda v: (g.degree(v), v))
        ok = _degenerate(g, g.vertices, root, colors)
    elif nx.has_bridges(nxg):
        ok = _color_with_bridge(g, nxg, colors)
    else:
        ok = _color_two_connected(g, nxg, colors)
    if ok and _is_proper(g, colors):
        return colors
    if g.vertex_count > config.BROOKS_EXHAUSTIVE_LIMIT:
        raise ReductionError(f"3-colouring construction failed on a component of {g.vertex_count} vertices")
    logger.warning("3-colouring construction failed on %d vertices; backtracking", g.vertex_count)
    fallback = _backtrack(g)
    if fallback is None:
        raise ReductionError("component has no proper 3-colouring")
    return fallback


def brooks_three_coloring(g: Graph) -> tuple[int, ...]:
    """Colour of each vertex, in {0, 1, 2}; deterministic for a fixed graph."""
    stats = degree_stats(g)
    if stats.max_degree > 3:
        raise PreconditionError(f"3-colouring needs maximum degree at most 3, got {stats.max_degree}")
    colors = [0] * g.vertex_count
    for component in connected_components(g):
        if len(component) == 4 and all(g.degree(v) == 3 for v in component):
            raise PreconditionError(f"component {list(component)} is K4 and needs 4 colours")
        sub, old = induced_subgraph(g, component)
        for i, c in _color_component(sub).items():
            colors[old[i]] = c
    return tuple(colors)
