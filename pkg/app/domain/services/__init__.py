"""
Domain services: the engine interface and the registry that orders engines.
"""

from abc import ABC, abstractmethod
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

from ..value_objects.graph import Graph
from ..value_objects.solution import EdsSolution, Engine, SolveStatus
from ..value_objects.weights import WeightMap


@dataclass(frozen=True)
class EngineOutcome:
    """Result of running one engine on one instance."""

    engine: Engine
    status: SolveStatus
    solution: EdsSolution | None = None
    message: str | None = None
    details: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def solved(cls, engine: Engine, solution: EdsSolution, **details: Any) -> "EngineOutcome":
        return cls(engine, SolveStatus.SOLVED, solution, details=details)

    @classmethod
    def no_eds(cls, engine: Engine, **details: Any) -> "EngineOutcome":
        return cls(engine, SolveStatus.NO_EDS, details=details)

    @classmethod
    def inapplicable(cls, engine: Engine, message: str, **details: Any) -> "EngineOutcome":
        return cls(engine, SolveStatus.INAPPLICABLE, message=message, details=details)

    @classmethod
    def error(cls, engine: Engine, message: str, **details: Any) -> "EngineOutcome":
        return cls(engine, SolveStatus.ERROR, message=message, details=details)


class WedEngineInterface(ABC):
    """Interface for weighted efficient domination engines."""

    @property
    @abstractmethod
    def name(self) -> Engine:
        """Engine identifier."""
        pass

    @abstractmethod
    def solve(self, graph: Graph, weights: WeightMap) -> EngineOutcome:
        """Run the engine; never raises for domain errors."""
        pass

    def can_handle(self, graph: Graph) -> bool:
        """Whether the engine should be attempted at all (size guards)."""
        return True

    def is_complete_for(self, graph: Graph) -> bool:
        """Whether a "no-eds" answer on this graph is trustworthy."""
        return True


class EngineRegistry:
    """Keeps engines by name and hands them out in a requested order."""

    def __init__(self) -> None:
        self._engines: dict[Engine, WedEngineInterface] = {}

    def register(self, engine: WedEngineInterface) -> None:
        self._engines[engine.name] = engine

    def get(self, name: Engine | str) -> WedEngineInterface:
        key = Engine(name)
        if key not in self._engines:
            raise KeyError(f"Engine {key} is not registered")
        return self._engines[key]

    def names(self) -> list[Engine]:
        return list(self._engines)

    def ordered(self, names: Sequence[Engine | str]) -> list[WedEngineInterface]:
        """Registered engines in the given order; unknown names are skipped."""
        result: list[WedEngineInterface] = []
        for name in names:
            key = Engine(name)
            engine = self._engines.get(key)
            if engine is not None and engine not in result:
                result.append(engine)
        return result
