"""
File repositories for the edge-list graph format and the X3C format.

Edge-list format: the first non-comment line is ``n m``, followed by ``m``
lines ``u v`` and optional weight lines ``w u VALUE`` (``VALUE`` is a
non-negative integer or ``inf``). Lines starting with ``#`` are comments.
"""

import hashlib
from collections.abc import Iterator, Sequence
from pathlib import Path

from structlog import get_logger

from ...application.exceptions import ParseError
from ...domain.exceptions import InvalidGraphError, InvalidInstanceError
from ...domain.repositories import GraphDocument, GraphRepository, X3cRepository
from ...domain.value_objects.graph import Graph
from ...domain.value_objects.weights import Weight, WeightMap, parse_weight
from ...domain.value_objects.x3c import X3cInstance

logger = get_logger(__name__)


def digest_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def read_text_file(location: str) -> str:
    """UTF-8 text of ``location``; unreadable or undecodable files are parse errors at line 0."""
    try:
        return Path(location).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(location, 0, f"cannot read file: {e.strerror or e}") from e
    except UnicodeDecodeError as e:
        raise ParseError(location, 0, f"not UTF-8 text: byte {e.object[e.start]:#04x} at offset {e.start}") from e


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line.split()


def _is_decimal(token: str) -> bool:
    return token.isascii() and token.isdigit()


def _int_token(source: str, number: int, token: str, what: str) -> int:
    if not _is_decimal(token):
        raise ParseError(source, number, f"{what} must be a non-negative integer, got {token!r}")
    return int(token)


def _parse_weight_line(
    source: str, number: int, tokens: list[str], n: int, weights: dict[int, Weight]
) -> None:
    if len(tokens) != 2:
        raise ParseError(source, number, "weight line must be 'w <vertex> <value>'")
    vertex = _int_token(source, number, tokens[0], "vertex id")
    if vertex >= n:
        raise ParseError(source, number, f"vertex {vertex} is out of range for {n} vertices")
    if vertex in weights:
        raise ParseError(source, number, f"weight of vertex {vertex} given twice")
    try:
        weights[vertex] = parse_weight(tokens[1])
    except ValueError as e:
        raise ParseError(source, number, str(e)) from e


def parse_edge_list(text: str, source: str = "<text>") -> GraphDocument:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    weights: dict[int, Weight] = {}
    last_line = 0

    for number, tokens in _content_lines(text):
        last_line = number
        if header is None:
            if len(tokens) != 2:
                raise ParseError(source, number, "header must be 'n m'")
            header = (
                _int_token(source, number, tokens[0], "vertex count"),
                _int_token(source, number, tokens[1], "edge count"),
            )
            continue
        n, m = header
        if tokens[0] == "w":
            _parse_weight_line(source, number, tokens[1:], n, weights)
            continue
        if len(tokens) != 2:
            raise ParseError(source, number, "edge line must be 'u v'")
        u = _int_token(source, number, tokens[0], "vertex id")
        v = _int_token(source, number, tokens[1], "vertex id")
        if u >= n or v >= n:
            raise ParseError(source, number, f"edge {u}-{v} is out of range for {n} vertices")
        if u == v:
            raise ParseError(source, number, f"self-loop at vertex {u}")
        if len(edges) == m:
            raise ParseError(source, number, f"more than the declared {m} edges")
        edges.append((u, v))

    if header is None:
        raise ParseError(source, max(last_line, 1), "missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise ParseError(source, last_line, f"declared {m} edges, found {len(edges)}")

    comments = tuple(
        line.strip()[1:].strip() for line in text.splitlines() if line.strip().startswith("#")
    )
    try:
        graph = Graph.from_edge_list(n, edges, _labels_from_comments(comments, n))
        weight_map = WeightMap.from_mapping(n, weights)
    except InvalidGraphError as e:
        raise ParseError(source, last_line, e.message) from e
    return GraphDocument(
        graph=graph,
        weights=weight_map,
        digest=digest_text(text),
        explicit_weights=weights,
        comments=comments,
    )


def _labels_from_comments(comments: Sequence[str], n: int) -> list[str] | None:
    labels: dict[int, str] = {}
    for comment in comments:
        parts = comment.split()
        if len(parts) == 3 and parts[0] == "label" and _is_decimal(parts[1]) and int(parts[1]) < n:
            labels[int(parts[1])] = parts[2]
    if not labels:
        return None
    return [labels.get(v, str(v)) for v in range(n)]


def parse_weights(text: str, n: int, source: str = "<weights>") -> dict[int, Weight]:
    """Sidecar weights: lines ``w u VALUE`` or ``u VALUE``."""
    weights: dict[int, Weight] = {}
    for number, tokens in _content_lines(text):
        if tokens[0] == "w":
            tokens = tokens[1:]
        _parse_weight_line(source, number, tokens, n, weights)
    return weights


def format_edge_list(
    graph: Graph, weights: WeightMap | None = None, comments: Sequence[str] = ()
) -> str:
    lines = [f"# {comment}" for comment in comments]
    if graph.labels is not None:
        lines.extend(f"# label {v} {graph.label(v)}" for v in graph.vertices())
    edges = graph.edges()
    lines.append(f"{graph.n} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    if weights is not None:
        lines.extend(f"w {v} {w}" for v, w in enumerate(weights) if w != 1)
    return "\n".join(lines) + "\n"


def parse_x3c(text: str, source: str = "<x3c>") -> X3cInstance:
    header: tuple[int, int] | None = None
    triples: list[list[int]] = []
    last_line = 0
    for number, tokens in _content_lines(text):
        last_line = number
        if header is None:
            if len(tokens) != 2:
                raise ParseError(source, number, "header must be 'n m'")
            header = (
                _int_token(source, number, tokens[0], "universe size"),
                _int_token(source, number, tokens[1], "triple count"),
            )
            continue
        if len(tokens) != 3:
            raise ParseError(source, number, "triple line must hold three integers")
        triples.append([_int_token(source, number, t, "element") for t in tokens])

    if header is None:
        raise ParseError(source, max(last_line, 1), "missing 'n m' header")
    n, m = header
    if len(triples) != m:
        raise ParseError(source, last_line, f"declared {m} triples, found {len(triples)}")
    try:
        return X3cInstance(n, triples)
    except InvalidInstanceError as e:
        raise ParseError(source, last_line, e.message) from e


def format_x3c(instance: X3cInstance) -> str:
    lines = [f"{instance.n} {instance.m}"]
    lines.extend(" ".join(str(x) for x in sorted(triple)) for triple in instance.triples)
    return "\n".join(lines) + "\n"


class EdgeListGraphRepository(GraphRepository):
    """Edge-list files on the local filesystem."""

    def load(self, location: str) -> GraphDocument:
        text = self._read(location)
        document = parse_edge_list(text, location)
        logger.debug("graph_loaded", path=location, n=document.graph.n, m=document.graph.edge_count)
        return document

    def load_weights(self, location: str, n: int) -> dict[int, Weight]:
        return parse_weights(self._read(location), n, location)

    def save(
        self,
        location: str,
        graph: Graph,
        weights: WeightMap | None = None,
        comments: Sequence[str] = (),
    ) -> None:
        Path(location).write_text(format_edge_list(graph, weights, comments), encoding="utf-8")
        logger.debug("graph_saved", path=location, n=graph.n)

    def dumps(
        self,
        graph: Graph,
        weights: WeightMap | None = None,
        comments: Sequence[str] = (),
    ) -> str:
        return format_edge_list(graph, weights, comments)

    @staticmethod
    def _read(location: str) -> str:
        return read_text_file(location)


class X3cFileRepository(X3cRepository):
    """X3C files: ``n m`` then ``m`` lines of three element ids."""

    def load(self, location: str) -> X3cInstance:
        return parse_x3c(read_text_file(location), location)

    def save(self, location: str, instance: X3cInstance) -> None:
        Path(location).write_text(format_x3c(instance), encoding="utf-8")

    def dumps(self, instance: X3cInstance) -> str:
        return format_x3c(instance)
