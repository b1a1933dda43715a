"""
Induced subgraph detection by backtracking.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ..exceptions import InputTooLargeError
from ..value_objects.graph import Graph

DEFAULT_MAX_PATTERN_VERTICES = 12


@dataclass(frozen=True)
class Embedding:
    """Injective map from pattern vertex ``i`` to host vertex ``mapping[i]``."""

    mapping: tuple[int, ...]

    def image(self) -> frozenset[int]:
        return frozenset(self.mapping)


@dataclass(frozen=True)
class FreenessReport:
    """Outcome of checking a family of patterns; truthy iff the host is free of all."""

    free: bool
    pattern_index: int | None = None
    embedding: Embedding | None = None

    def __bool__(self) -> bool:
        return self.free


def is_valid_embedding(host: Graph, pattern: Graph, mapping: Sequence[int]) -> bool:
    """True iff ``mapping`` is injective and preserves adjacency and non-adjacency."""
    if len(mapping) != pattern.n or len(set(mapping)) != len(mapping):
        return False
    if any(not 0 <= g < host.n for g in mapping):
        return False
    return all(
        pattern.has_edge(a, b) == host.has_edge(mapping[a], mapping[b])
        for a in pattern.vertices()
        for b in pattern.vertices()
        if a < b
    )


def _search_order(pattern: Graph) -> list[int]:
    """Highest degree first, then the vertex with most placed neighbours."""
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < pattern.n:
        best = max(
            (v for v in pattern.vertices() if v not in placed),
            key=lambda v: (len(pattern.neighbors(v) & placed), pattern.degree(v), -v),
        )
        order.append(best)
        placed.add(best)
    return order


def find_induced(
    host: Graph,
    pattern: Graph,
    max_pattern_vertices: int = DEFAULT_MAX_PATTERN_VERTICES,
) -> Embedding | None:
    """Some induced copy of ``pattern`` in ``host``, or ``None``."""
    if pattern.n > max_pattern_vertices:
        raise InputTooLargeError("pattern", pattern.n, max_pattern_vertices)
    if pattern.n > host.n or pattern.edge_count > host.edge_count:
        return None

    order = _search_order(pattern)
    assignment: dict[int, int] = {}
    used: set[int] = set()

    def candidates(h: int) -> list[int]:
        anchors = [assignment[p] for p in pattern.neighbors(h) if p in assignment]
        if anchors:
            pool = set(host.neighbors(anchors[0]))
            for g in anchors[1:]:
                pool &= host.neighbors(g)
        else:
            pool = set(host.vertices())
        result = []
        for g in sorted(pool - used):
            if host.degree(g) < pattern.degree(h):
                continue
            if all(
                host.has_edge(g, assignment[p]) == pattern.has_edge(h, p) for p in assignment
            ):
                result.append(g)
        return result

    def extend(depth: int) -> bool:
        if depth == len(order):
            return True
        h = order[depth]
        for g in candidates(h):
            assignment[h] = g
            used.add(g)
            if extend(depth + 1):
                return True
            del assignment[h]
            used.discard(g)
        return False

    if not extend(0):
        return None
    return Embedding(tuple(assignment[h] for h in pattern.vertices()))


def contains_induced(host: Graph, pattern: Graph, max_pattern_vertices: int = DEFAULT_MAX_PATTERN_VERTICES) -> bool:
    return find_induced(host, pattern, max_pattern_vertices) is not None


def is_free_of_all(
    host: Graph,
    patterns: Sequence[Graph],
    max_pattern_vertices: int = DEFAULT_MAX_PATTERN_VERTICES,
) -> FreenessReport:
    """Check every pattern in order and report the first one that occurs."""
    for index, pattern in enumerate(patterns):
        embedding = find_induced(host, pattern, max_pattern_vertices)
        if embedding is not None:
            return FreenessReport(free=False, pattern_index=index, embedding=embedding)
    return FreenessReport(free=True)
