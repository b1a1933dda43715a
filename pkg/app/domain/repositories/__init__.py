"""Repository interfaces for graphs and X3C instances."""

from abc import ABC, abstractmethod
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from ..value_objects.graph import Graph
from ..value_objects.weights import Weight, WeightMap
from ..value_objects.x3c import X3cInstance


@dataclass(frozen=True)
class GraphDocument:
    """A graph as read from storage, with its weights and a content digest."""

    graph: Graph
    weights: WeightMap
    digest: str
    explicit_weights: Mapping[int, Weight] = field(default_factory=dict)
    comments: tuple[str, ...] = ()


class GraphRepository(ABC):
    """Repository interface for weighted graphs in the edge-list format."""

    @abstractmethod
    def load(self, location: str) -> GraphDocument:
        """Read a graph with its weight lines."""
        pass

    @abstractmethod
    def load_weights(self, location: str, n: int) -> dict[int, Weight]:
        """Read a sidecar weights file for a graph with ``n`` vertices."""
        pass

    @abstractmethod
    def save(
        self,
        location: str,
        graph: Graph,
        weights: WeightMap | None = None,
        comments: Sequence[str] = (),
    ) -> None:
        """Write a graph, optionally with weights and comment lines."""
        pass

    @abstractmethod
    def dumps(
        self,
        graph: Graph,
        weights: WeightMap | None = None,
        comments: Sequence[str] = (),
    ) -> str:
        """Render a graph in the storage format."""
        pass


class X3cRepository(ABC):
    """Repository interface for X3C instances."""

    @abstractmethod
    def load(self, location: str) -> X3cInstance:
        pass

    @abstractmethod
    def save(self, location: str, instance: X3cInstance) -> None:
        pass

    @abstractmethod
    def dumps(self, instance: X3cInstance) -> str:
        pass
