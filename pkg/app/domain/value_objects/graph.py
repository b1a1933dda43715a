"""
Simple undirected graphs over the vertex ids 0..n-1.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from ..exceptions import InvalidGraphError
from . import ValueObject


class Graph(ValueObject):
    """Immutable simple undirected graph.

    Vertices are the integers ``0..n-1``. The adjacency of every vertex is a
    frozenset; callers that need a deterministic order use
    :meth:`sorted_neighbors`. Labels are cosmetic and never affect equality of
    the structure beyond being stored.
    """

    def __init__(
        self,
        n: int,
        adjacency: Sequence[Iterable[int]],
        labels: Sequence[str] | None = None,
    ):
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise InvalidGraphError(f"Vertex count must be a non-negative integer, got {n!r}")
        if len(adjacency) != n:
            raise InvalidGraphError(f"Adjacency has {len(adjacency)} rows for {n} vertices")

        rows = tuple(frozenset(neighbors) for neighbors in adjacency)
        for v, neighbors in enumerate(rows):
            for u in neighbors:
                if not isinstance(u, int) or not 0 <= u < n:
                    raise InvalidGraphError(f"Vertex {v} has out-of-range neighbour {u!r}")
                if u == v:
                    raise InvalidGraphError(f"Self-loop at vertex {v}")
                if v not in rows[u]:
                    raise InvalidGraphError(f"Adjacency is not symmetric on edge {v}-{u}")

        if labels is not None and len(labels) != n:
            raise InvalidGraphError(f"Got {len(labels)} labels for {n} vertices")

        self._n = n
        self._adjacency = rows
        self._labels = tuple(labels) if labels is not None else None

    @classmethod
    def from_edge_list(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> Graph:
        """Build a graph from an edge list; duplicate edges collapse."""
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise InvalidGraphError(f"Vertex count must be a non-negative integer, got {n!r}")
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError(f"Edge {u}-{v} is out of range for {n} vertices")
            if u == v:
                raise InvalidGraphError(f"Self-loop at vertex {u}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, rows, labels)

    @classmethod
    def empty(cls, n: int = 0) -> Graph:
        return cls(n, [()] * n)

    @property
    def n(self) -> int:
        return self._n

    @property
    def labels(self) -> tuple[str, ...] | None:
        return self._labels

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self._adjacency) // 2

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adjacency[v]

    def sorted_neighbors(self, v: int) -> list[int]:
        return sorted(self._adjacency[v])

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self._adjacency[v] | {v}

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self._n) for v in sorted(self._adjacency[u]) if u < v]

    def label(self, v: int) -> str:
        if self._labels is None:
            return str(v)
        return self._labels[v]

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph on ``vertices`` with ids remapped to ``0..k-1``.

        Returns the subgraph and the map from new ids to old ids (ascending).
        """
        kept = tuple(sorted(set(vertices)))
        for v in kept:
            if not 0 <= v < self._n:
                raise InvalidGraphError(f"Vertex {v} is not in the graph")
        new_id = {old: new for new, old in enumerate(kept)}
        rows = [
            [new_id[u] for u in self._adjacency[old] if u in new_id] for old in kept
        ]
        labels = [self.label(old) for old in kept] if self._labels is not None else None
        return Graph(len(kept), rows, labels), kept

    def with_labels(self, labels: Sequence[str] | None) -> Graph:
        return Graph(self._n, self._adjacency, labels)


@dataclass(frozen=True)
class LevelStructure:
    """Breadth-first distance levels of a graph from one root.

    ``levels[i]`` holds the vertices at distance ``i``; ``level_of[v]`` is
    ``-1`` for vertices outside the root's component.
    """

    root: int
    levels: tuple[frozenset[int], ...]
    level_of: tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def reached(self) -> frozenset[int]:
        return frozenset(v for v, level in enumerate(self.level_of) if level >= 0)

    def level(self, i: int) -> frozenset[int]:
        if 0 <= i < len(self.levels):
            return self.levels[i]
        return frozenset()
