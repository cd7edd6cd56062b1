"""Certificate checks for limited packings, typed 2-limited sets and tuple domination."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from limpack.errors import InputError, PreconditionError
from limpack.graph_core import Graph, check_vertex_set, closed_neighborhood, is_regular
from limpack.typed import TypedMultigraph


@dataclass(frozen=True)
class Packing:
    """A vertex set X together with its parameter k. Vertex range is checked at verification."""

    k: int
    vertices: frozenset[int]

    def __post_init__(self):
        if self.k < 1:
            raise InputError(f"k must be a positive integer, got {self.k}")

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class Violation:
    """One failed constraint.

    ``kind`` is ``'vertex'`` (closed neighbourhood count against ``limit``) or
    ``'cedge'`` (both endpoints of the c-edge ``(vertex, other)`` chosen).
    """

    kind: str
    vertex: int
    count: int
    limit: int
    other: int | None = None

    def to_line(self) -> str:
        if self.kind == 'cedge':
            return f"violation: cedge {self.vertex} {self.other}"
        return f"violation: vertex {self.vertex} count {self.count} limit {self.limit}"


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    violations: tuple[Violation, ...] = ()

    @classmethod
    def of(cls, violations: Iterable[Violation]) -> VerificationReport:
        ordered = tuple(sorted(violations, key=lambda x: (x.vertex, x.kind != 'cedge', x.other or 0)))
        return cls(not ordered, ordered)

    def to_text(self) -> str:
        lines = [f"valid: {'true' if self.valid else 'false'}"]
        lines.extend(violation.to_line() for violation in self.violations)
        return '\n'.join(lines) + '\n'


def _positive(name: str, value: int) -> None:
    if value < 1:
        raise InputError(f"{name} must be a positive integer, got {value}")


def verify_k_limited(g: Graph, vertices: Iterable[int], k: int) -> VerificationReport:
    """Valid iff every closed neighbourhood holds at most k chosen vertices."""
    _positive('k', k)
    chosen = check_vertex_set(g, vertices)
    violations = []
    for v in g.vertices:
        count = len(closed_neighborhood(g, v) & chosen)
        if count > k:
            violations.append(Violation('vertex', v, count, k))
    return VerificationReport.of(violations)


def verify_typed_two_limited(tm: TypedMultigraph, vertices: Iterable[int]) -> VerificationReport:
    """Valid iff no c-edge has both ends chosen and every N_d[v] holds at most 2 chosen."""
    chosen = frozenset(vertices)
    for v in sorted(chosen):
        if not isinstance(v, int) or not 0 <= v < tm.vertex_count:
            raise InputError(f"vertex {v} is out of range for a multigraph on {tm.vertex_count} vertices")
    violations = [
        Violation('cedge', u, 2, 1, other=v)
        for u, v in sorted(tm.c_edges) if u in chosen and v in chosen
    ]
    for v in tm.vertices:
        count = len(tm.closed_d_neighborhood(v) & chosen)
        if count > 2:
            violations.append(Violation('vertex', v, count, 2))
    return VerificationReport.of(violations)


def verify_tuple_dominating(g: Graph, vertices: Iterable[int], ell: int) -> VerificationReport:
    """Valid iff every closed neighbourhood holds at least ℓ chosen vertices.

    Violations carry the shortfall count against the required minimum ``limit``.
    """
    _positive('l', ell)
    chosen = check_vertex_set(g, vertices)
    violations = []
    for v in g.vertices:
        count = len(closed_neighborhood(g, v) & chosen)
        if count < ell:
            violations.append(Violation('vertex', v, count, ell))
    return VerificationReport.of(violations)


def dual_complement(g: Graph, vertices: Iterable[int], k: int) -> frozenset[int]:
    """V \\ X; on an r-regular graph X is k-limited iff V \\ X is (r+1-k)-tuple dominating."""
    chosen = check_vertex_set(g, vertices)
    r = is_regular(g)
    if r is None:
        raise PreconditionError("dual_complement needs a regular graph")
    if not 1 <= k <= r + 1:
        raise InputError(f"k must lie in 1..{r + 1} for a {r}-regular graph, got {k}")
    return frozenset(g.vertices) - chosen
