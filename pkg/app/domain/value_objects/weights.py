"""
Vertex weights with a dedicated infinity sentinel.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from typing import Any, Union

from ..exceptions import InvalidGraphError
from . import ValueObject


class _Infinity:
    """Forbidden-vertex weight. Compares above every integer and refuses arithmetic."""

    _instance: _Infinity | None = None

    def __new__(cls) -> _Infinity:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __str__(self) -> str:
        return "inf"

    def __eq__(self, other: Any) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("wed-infinity")

    def __lt__(self, other: Any) -> bool:
        return False

    def __le__(self, other: Any) -> bool:
        return other is self

    def __gt__(self, other: Any) -> bool:
        return other is not self

    def __ge__(self, other: Any) -> bool:
        return True

    def __add__(self, other: Any) -> Any:
        raise AssertionError("an infinite weight cannot take part in a sum")

    __radd__ = __add__


INFINITY = _Infinity()

Weight = Union[int, _Infinity]


def is_finite(weight: Weight) -> bool:
    return weight is not INFINITY


def parse_weight(text: str) -> Weight:
    """Parse ``inf`` or a non-negative integer literal."""
    token = text.strip()
    if token == "inf":
        return INFINITY
    if not (token.isascii() and token.isdigit()):
        raise ValueError(f"Weight must be a non-negative integer or 'inf', got {text!r}")
    return int(token)


class WeightMap(ValueObject):
    """Total map from vertex ids to non-negative integers or :data:`INFINITY`."""

    def __init__(self, weights: Iterable[Weight]):
        values = tuple(weights)
        for v, w in enumerate(values):
            if w is INFINITY:
                continue
            if isinstance(w, bool) or not isinstance(w, int) or w < 0:
                raise InvalidGraphError(f"Weight of vertex {v} must be a non-negative integer or INFINITY, got {w!r}")
        self._weights = values

    @classmethod
    def uniform(cls, n: int, value: Weight = 1) -> WeightMap:
        return cls([value] * n)

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[int, Weight], default: Weight = 1) -> WeightMap:
        for v in mapping:
            if not 0 <= v < n:
                raise InvalidGraphError(f"Weight given for vertex {v} outside 0..{n - 1}")
        return cls(mapping.get(v, default) for v in range(n))

    def __len__(self) -> int:
        return len(self._weights)

    def __getitem__(self, v: int) -> Weight:
        return self._weights[v]

    def __iter__(self) -> Iterator[Weight]:
        return iter(self._weights)

    def is_finite(self, v: int) -> bool:
        return self._weights[v] is not INFINITY

    def finite_vertices(self) -> list[int]:
        return [v for v, w in enumerate(self._weights) if w is not INFINITY]

    def infinite_vertices(self) -> list[int]:
        return [v for v, w in enumerate(self._weights) if w is INFINITY]

    def finite_total(self) -> int:
        return sum(w for w in self._weights if isinstance(w, int))

    def total(self, vertices: Iterable[int]) -> int:
        """Sum of finite weights; every listed vertex must be finite."""
        result = 0
        for v in vertices:
            w = self._weights[v]
            assert isinstance(w, int), f"vertex {v} has infinite weight"
            result += w
        return result

    def with_infinite(self, vertices: Iterable[int]) -> WeightMap:
        blocked = set(vertices)
        return WeightMap(INFINITY if v in blocked else w for v, w in enumerate(self._weights))

    def restrict(self, kept: Sequence[int]) -> WeightMap:
        """Weights of an induced subgraph given its new-to-old id map."""
        return WeightMap(self._weights[old] for old in kept)

    def is_uniform(self, value: int = 1) -> bool:
        return all(w == value for w in self._weights)
