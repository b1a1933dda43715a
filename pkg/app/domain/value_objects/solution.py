"""
Engine names, run statuses and solutions.
"""

from __future__ import annotations

from collections.abc import Iterable
from enum import Enum

from . import ValueObject


class Engine(str, Enum):
    """Weighted efficient domination engines."""

    BRUTE = "brute"
    SQUARE = "square"
    S123 = "s123"

    def __str__(self) -> str:
        return self.value


class SolveStatus(str, Enum):
    """Outcome of one engine run."""

    SOLVED = "solved"
    NO_EDS = "no-eds"
    INAPPLICABLE = "inapplicable"
    ERROR = "error"

    def __str__(self) -> str:
        return self.value

    @property
    def is_decisive(self) -> bool:
        return self in (SolveStatus.SOLVED, SolveStatus.NO_EDS)


class EdsSolution(ValueObject):
    """An efficient dominating set together with its finite weight."""

    def __init__(self, vertices: Iterable[int], weight: int, engine: Engine) -> None:
        if isinstance(weight, bool) or not isinstance(weight, int) or weight < 0:
            raise ValueError(f"Solution weight must be a finite non-negative integer, got {weight!r}")
        self._vertices = frozenset(vertices)
        self._weight = weight
        self._engine = Engine(engine)

    @property
    def vertices(self) -> frozenset[int]:
        return self._vertices

    @property
    def weight(self) -> int:
        return self._weight

    @property
    def engine(self) -> Engine:
        return self._engine

    def sorted_vertices(self) -> list[int]:
        return sorted(self._vertices)

    def __len__(self) -> int:
        return len(self._vertices)
