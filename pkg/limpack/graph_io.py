"""Edge-list and packing file formats.

Graph files: optional ``#`` comment lines, a header ``n m``, then exactly m lines
``u v`` or ``u v c`` or ``u v d`` with 0-based endpoints. A file in which any edge
line carries a type token, or that has a ``# typed`` comment line, is read as a
TypedMultigraph (untyped lines default to d-edges); otherwise it is a plain Graph.
Typed graphs are written with that marker so edgeless ones keep their type.

Packing files: whitespace-separated vertex indices, ``#`` comments allowed.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from limpack.errors import InputError
from limpack.graph_core import Graph
from limpack.typed import D_EDGE, EDGE_TYPES, TypedMultigraph, pair

TYPED_MARKER = "# typed"


def _content_lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            yield number, line.split()


def _has_typed_marker(text: str) -> bool:
    return any(raw.strip().lower() == TYPED_MARKER for raw in text.splitlines())


def _parse_int(token: str, line: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise InputError(f"{what} must be an integer, got {token!r}", line) from None
    if value < 0:
        raise InputError(f"{what} must be nonnegative, got {value}", line)
    return value


def parse_graph(text: str) -> Graph | TypedMultigraph:
    lines = iter(_content_lines(text))
    try:
        number, header = next(lines)
    except StopIteration:
        raise InputError("missing header line 'n m'") from None
    if len(header) != 2:
        raise InputError(f"header must be 'n m', got {' '.join(header)!r}", number)
    n = _parse_int(header[0], number, 'vertex count')
    m = _parse_int(header[1], number, 'edge count')

    edges: list[tuple[int, int, str]] = []
    typed = _has_typed_marker(text)
    seen: set[tuple[int, int, str]] = set()
    duplicate_line = None
    for number, tokens in lines:
        if len(edges) == m:
            raise InputError(f"more than the declared {m} edge lines", number)
        if len(tokens) not in (2, 3):
            raise InputError(f"edge line must be 'u v' or 'u v c|d', got {' '.join(tokens)!r}", number)
        u = _parse_int(tokens[0], number, 'endpoint')
        v = _parse_int(tokens[1], number, 'endpoint')
        kind = D_EDGE
        if len(tokens) == 3:
            kind = tokens[2].lower()
            if kind not in EDGE_TYPES:
                raise InputError(f"edge type must be 'c' or 'd', got {tokens[2]!r}", number)
            typed = True
        if u >= n or v >= n:
            raise InputError(f"endpoint {max(u, v)} is not below n = {n}", number)
        if u == v:
            raise InputError(f"self-loop at vertex {u}", number)
        key = (*pair(u, v), kind)
        if key in seen and duplicate_line is None:
            duplicate_line = number
        seen.add(key)
        edges.append((u, v, kind))
    if len(edges) != m:
        raise InputError(f"header declares {m} edges but the file lists {len(edges)}")
    # repeated typed edges are harmless and dropped; a plain graph must be simple
    if duplicate_line is not None and not typed:
        raise InputError("duplicate edge", duplicate_line)

    if typed:
        return TypedMultigraph.from_edges(n, edges)
    return Graph.from_edges(n, ((u, v) for u, v, _ in edges))


def serialize_graph(g: Graph | TypedMultigraph) -> str:
    if isinstance(g, TypedMultigraph):
        edges = g.edges()
        body = [f"{u} {v} {kind}" for u, v, kind in edges]
    else:
        edges = list(g.edges())
        body = [f"{u} {v}" for u, v in edges]
    header = f"{g.vertex_count} {len(edges)}"
    lines = [TYPED_MARKER, header, *body] if isinstance(g, TypedMultigraph) else [header, *body]
    return "\n".join(lines) + "\n"


def parse_packing(text: str) -> frozenset[int]:
    vertices = set()
    for number, tokens in _content_lines(text):
        for token in tokens:
            vertices.add(_parse_int(token, number, 'vertex index'))
    return frozenset(vertices)


def serialize_packing(vertices: Iterable[int]) -> str:
    return ' '.join(str(v) for v in sorted(vertices)) + '\n'


def _read_text(path: Path, what: str) -> str:
    try:
        return path.read_text(encoding='utf-8')
    except OSError as exc:
        raise InputError(f"cannot read {what} file {path}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise InputError(f"{what} file {path} is not UTF-8 text: byte {exc.start}") from exc


def write_text(path: str | Path, text: str, what: str) -> None:
    path = Path(path)
    try:
        path.write_text(text, encoding='utf-8')
    except OSError as exc:
        raise InputError(f"cannot write {what} file {path}: {exc.strerror}") from exc


def read_graph(path: str | Path) -> Graph | TypedMultigraph:
    path = Path(path)
    text = _read_text(path, 'graph')
    try:
        return parse_graph(text)
    except InputError as exc:
        raise InputError(f"{path}: {exc.message}", exc.line) from exc


def read_packing(path: str | Path) -> frozenset[int]:
    path = Path(path)
    text = _read_text(path, 'packing')
    try:
        return parse_packing(text)
    except InputError as exc:
        raise InputError(f"{path}: {exc.message}", exc.line) from exc


def write_graph(path: str | Path, g: Graph | TypedMultigraph) -> None:
    write_text(path, serialize_graph(g), 'graph')
