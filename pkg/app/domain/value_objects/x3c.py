"""
Exact cover by 3-sets instances and their graph reduction.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum

from ..exceptions import InvalidInstanceError
from . import ValueObject
from .graph import Graph


class X3cInstance(ValueObject):
    """Universe ``0..n-1`` (``n`` divisible by 3) and a list of 3-element triples."""

    def __init__(self, n: int, triples: Iterable[Iterable[int]]) -> None:
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise InvalidInstanceError(f"Universe size must be a non-negative integer, got {n!r}")
        if n % 3 != 0:
            raise InvalidInstanceError(f"Universe size {n} is not divisible by 3")

        frozen: list[frozenset[int]] = []
        for index, triple in enumerate(triples):
            members = list(triple)
            block = frozenset(members)
            if len(members) != 3 or len(block) != 3:
                raise InvalidInstanceError(f"Triple {index} must have three distinct elements, got {members}")
            if any(not 0 <= x < n for x in block):
                raise InvalidInstanceError(f"Triple {index} has an element outside 0..{n - 1}")
            frozen.append(block)

        self._n = n
        self._triples = tuple(frozen)

    @property
    def n(self) -> int:
        return self._n

    @property
    def triples(self) -> tuple[frozenset[int], ...]:
        return self._triples

    @property
    def m(self) -> int:
        return len(self._triples)

    def is_covering(self) -> bool:
        """Every element occurs in at least one triple."""
        covered: set[int] = set()
        for triple in self._triples:
            covered |= triple
        return len(covered) == self._n

    def is_exact_cover(self, indices: Sequence[int]) -> bool:
        seen: set[int] = set()
        for j in indices:
            triple = self._triples[j]
            if seen & triple:
                return False
            seen |= triple
        return len(seen) == self._n


class VertexRole(str, Enum):
    """Role of a vertex in the reduction graph."""

    ELEMENT = "v"
    TRIPLE = "x"
    PENDANT = "y"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ReductionOutput:
    """Graph built from an X3C instance.

    Element ``i`` is vertex ``i``; triple ``j`` owns the vertices
    ``x_vertex(j)`` and ``y_vertex(j)``.
    """

    instance: X3cInstance
    graph: Graph
    roles: tuple[VertexRole, ...]
    triple_of: tuple[int | None, ...]

    def x_vertex(self, j: int) -> int:
        return self.instance.n + 2 * j

    def y_vertex(self, j: int) -> int:
        return self.instance.n + 2 * j + 1

    def eds_from_cover(self, cover: Iterable[int]) -> frozenset[int]:
        """The e.d.s. matching an exact cover: x_j for chosen triples, y_j otherwise."""
        chosen = set(cover)
        return frozenset(
            self.x_vertex(j) if j in chosen else self.y_vertex(j)
            for j in range(self.instance.m)
        )

    def cover_from_eds(self, vertices: Iterable[int]) -> tuple[int, ...]:
        indices = []
        for v in vertices:
            j = self.triple_of[v]
            if self.roles[v] is VertexRole.TRIPLE and j is not None:
                indices.append(j)
        return tuple(sorted(indices))
