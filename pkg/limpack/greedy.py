"""Greedy k-limited packing in vertex index order."""

from __future__ import annotations

import logging

from limpack.errors import InputError
from limpack.graph_core import Graph, closed_neighborhood
from limpack.verify import Packing

logger = logging.getLogger(__name__)


def greedy_packing(g: Graph, k: int) -> Packing:
    """Add vertices in increasing index order whenever the set stays k-limited.

    For k = 1 each chosen vertex blocks at most Δ² + 1 vertices, hence n/(Δ² + 1).
    """
    if k < 1:
        raise InputError(f"k must be a positive integer, got {k}")
    load = [0] * g.vertex_count
    chosen = []
    for v in g.vertices:
        block = closed_neighborhood(g, v)
        if all(load[w] < k for w in block):
            chosen.append(v)
            for w in block:
                load[w] += 1
    logger.debug("greedy k=%d chose %d of %d vertices", k, len(chosen), g.vertex_count)
    return Packing(k, frozenset(chosen))
