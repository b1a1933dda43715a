"""
In-memory implementations of repositories for testing.
"""

from collections.abc import Sequence

from ...application.exceptions import ParseError
from ...domain.repositories import GraphDocument, GraphRepository, X3cRepository
from ...domain.value_objects.graph import Graph
from ...domain.value_objects.weights import Weight, WeightMap
from ...domain.value_objects.x3c import X3cInstance
from .edge_list_repository import (
    format_edge_list,
    format_x3c,
    parse_edge_list,
    parse_weights,
    parse_x3c,
)


class InMemoryGraphRepository(GraphRepository):
    """Edge-list documents kept as text under string keys."""

    def __init__(self, files: dict[str, str] | None = None):
        self._files: dict[str, str] = dict(files or {})

    def put(self, location: str, text: str) -> None:
        self._files[location] = text

    def text(self, location: str) -> str:
        return self._files[location]

    def _read(self, location: str) -> str:
        if location not in self._files:
            raise ParseError(location, 0, "cannot read file: not found")
        return self._files[location]

    def load(self, location: str) -> GraphDocument:
        return parse_edge_list(self._read(location), location)

    def load_weights(self, location: str, n: int) -> dict[int, Weight]:
        return parse_weights(self._read(location), n, location)

    def save(
        self,
        location: str,
        graph: Graph,
        weights: WeightMap | None = None,
        comments: Sequence[str] = (),
    ) -> None:
        self._files[location] = format_edge_list(graph, weights, comments)

    def dumps(
        self,
        graph: Graph,
        weights: WeightMap | None = None,
        comments: Sequence[str] = (),
    ) -> str:
        return format_edge_list(graph, weights, comments)


class InMemoryX3cRepository(X3cRepository):
    def __init__(self, files: dict[str, str] | None = None):
        self._files: dict[str, str] = dict(files or {})

    def load(self, location: str) -> X3cInstance:
        if location not in self._files:
            raise ParseError(location, 0, "cannot read file: not found")
        return parse_x3c(self._files[location], location)

    def save(self, location: str, instance: X3cInstance) -> None:
        self._files[location] = format_x3c(instance)

    def dumps(self, instance: X3cInstance) -> str:
        return format_x3c(instance)
