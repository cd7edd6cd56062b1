"""Graph families: small extremal witnesses, random instances and projective orthogonality graphs.

Random generators draw from ``numpy.random.default_rng(seed)`` so a fixed seed always
yields the same graph.
"""

from __future__ import annotations

import logging
from collections import defaultdict

import numpy as np

from limpack.errors import InputError, ResourceLimitError
from limpack.fields import projective_points
from limpack.graph_core import Graph, disjoint_union
from limpack.shared import config
from limpack.typed import C_EDGE, D_EDGE, TypedMultigraph, pair

logger = logging.getLogger(__name__)

NAMED_FAMILIES = ('h6', 'petersen', 'k4')


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def gen_complete(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def gen_h6() -> Graph:
    """A 6-cycle with its three length-3 chords; isomorphic to K_{3,3}."""
    cycle = [(i, (i + 1) % 6) for i in range(6)]
    chords = [(i, i + 3) for i in range(3)]
    return Graph.from_edges(6, cycle + chords)


def gen_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def gen_named(family: str) -> Graph:
    builders = {'h6': gen_h6, 'petersen': gen_petersen, 'k4': lambda: gen_complete(4)}
    try:
        return builders[family]()
    except KeyError:
        raise InputError(
            f"unknown graph family {family!r}; expected one of {', '.join(NAMED_FAMILIES)}") from None


def copies(g: Graph, m: int) -> Graph:
    """m vertex-disjoint copies of g."""
    if m < 1:
        raise InputError(f"copies must be a positive integer, got {m}")
    result = g
    for _ in range(m - 1):
        result = disjoint_union(result, g)
    return result


# above this degree a whole attempt is simple too rarely (about exp(-(r²-1)/4))
DISCARD_MAX_DEGREE = 4


def _pairing_attempt(n: int, r: int, rng: np.random.Generator) -> set[tuple[int, int]] | None:
    """One run of the pairing model; None when the attempt must be discarded.

    Up to DISCARD_MAX_DEGREE any loop or repeated pair discards the attempt, which
    samples simple r-regular graphs uniformly. Higher degrees set the offending stubs
    aside and re-pair them, which is slightly non-uniform.
    """
    edges: set[tuple[int, int]] = set()
    stubs = np.repeat(np.arange(n), r)
    while stubs.size:
        stubs = rng.permutation(stubs)
        leftover: dict[int, int] = defaultdict(int)
        for a, b in stubs.reshape(-1, 2).tolist():
            e = pair(a, b)
            if a != b and e not in edges:
                edges.add(e)
            else:
                leftover[a] += 1
                leftover[b] += 1
        if not leftover:
            return edges
        if r <= DISCARD_MAX_DEGREE:
            return None
        nodes = sorted(leftover)
        if not any(pair(u, v) not in edges for i, u in enumerate(nodes) for v in nodes[i + 1:]):
            return None
        stubs = np.repeat(np.array(nodes), [leftover[v] for v in nodes])
    return edges


def gen_random_regular(n: int, r: int, seed: int, max_attempts: int | None = None) -> Graph:
    """Simple r-regular graph on n vertices."""
    if n < 0 or r < 0:
        raise InputError(f"n and r must be nonnegative, got n={n}, r={r}")
    if (n * r) % 2:
        raise InputError(f"n·r must be even for an r-regular graph, got n={n}, r={r}")
    if n and r >= n:
        raise InputError(f"degree r={r} must be below n={n}")
    attempts = config.REGULAR_MAX_ATTEMPTS if max_attempts is None else max_attempts
    rng = np.random.default_rng(seed)
    for attempt in range(attempts):
        edges = _pairing_attempt(n, r, rng)
        if edges is not None:
            logger.debug("random %d-regular graph on %d vertices after %d attempts", r, n, attempt + 1)
            return Graph.from_edges(n, sorted(edges))
    raise ResourceLimitError(f"no simple {r}-regular graph on {n} vertices after {attempts} pairing attempts")


def gen_projective(q: int, k: int) -> Graph:
    """Orthogonality graph of the points of the projective space of GF(q)^{k+2}.

    Two distinct points are adjacent when their inner product is 0; isotropic points
    get no loop, so they have one neighbour fewer than the others.
    """
    if k < 1:
        raise InputError(f"k must be a positive integer, got {k}")
    points = projective_points(k + 2, q)
    edges = [(i, j) for i in range(len(points)) for j in range(i + 1, len(points))
             if points[i].dot(points[j]) == 0]
    return Graph.from_edges(len(points), edges)


def gen_random_typed(n: int, seed: int, c_fraction: float = 0.4, double_fraction: float = 0.15,
                     drop_fraction: float = 0.1) -> TypedMultigraph:
    """Random typed multigraph of maximum degree 3 with no all-c K4 component.

    Three stubs per vertex are paired at random; loops are dropped, a pair that
    already carries an edge receives the other type with probability
    ``double_fraction``, and any all-c K4 component gets its first edge turned
    into a d-edge.
    """
    if n < 0:
        raise InputError(f"n must be nonnegative, got {n}")
    rng = np.random.default_rng(seed)
    stubs = rng.permutation(np.repeat(np.arange(n), 3))
    if stubs.size % 2:
        stubs = stubs[:-1]
    kinds: dict[tuple[int, int], set[str]] = defaultdict(set)
    for a, b in stubs.reshape(-1, 2).tolist():
        if a == b or rng.random() < drop_fraction:
            continue
        e = pair(a, b)
        if not kinds[e]:
            kinds[e].add(C_EDGE if rng.random() < c_fraction else D_EDGE)
        elif len(kinds[e]) == 1 and rng.random() < double_fraction:
            kinds[e].add(D_EDGE if C_EDGE in kinds[e] else C_EDGE)
    edges = [(u, v, kind) for (u, v), types in sorted(kinds.items()) for kind in sorted(types)]
    tm = TypedMultigraph.from_edges(n, edges)
    for component in tm.all_c_k4_components():
        first = min(p for p in tm.c_edges if p[0] in component)
        edges = [(u, v, D_EDGE if (u, v) == first else kind) for u, v, kind in edges]
        tm = TypedMultigraph.from_edges(n, edges)
    return tm
