"""
Exhaustive search engine adapter.
"""

from structlog import get_logger

from ...domain.exceptions import WedError
from ...domain.services import EngineOutcome, WedEngineInterface
from ...domain.services.eds import DEFAULT_BRUTE_MAX_VERTICES, brute_force_wed
from ...domain.value_objects.graph import Graph
from ...domain.value_objects.solution import Engine
from ...domain.value_objects.weights import WeightMap

logger = get_logger(__name__)


class BruteForceEngineAdapter(WedEngineInterface):
    """Exact exponential oracle, guarded by a vertex limit."""

    def __init__(self, max_vertices: int = DEFAULT_BRUTE_MAX_VERTICES) -> None:
        self._max_vertices = max_vertices

    @property
    def name(self) -> Engine:
        return Engine.BRUTE

    def can_handle(self, graph: Graph) -> bool:
        return graph.n <= self._max_vertices

    def solve(self, graph: Graph, weights: WeightMap) -> EngineOutcome:
        try:
            solution = brute_force_wed(graph, weights, self._max_vertices)
        except WedError as e:
            logger.warning("engine_error", engine=self.name.value, n=graph.n, error=e.message)
            return EngineOutcome.error(self.name, e.message)
        if solution is None:
            return EngineOutcome.no_eds(self.name)
        return EngineOutcome.solved(self.name, solution)
