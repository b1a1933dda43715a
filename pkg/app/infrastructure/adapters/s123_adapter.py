"""
Component-tree engine adapter for S_{1,2,3}-free chordal graphs.
"""

from structlog import get_logger

from ...domain.exceptions import NotChordalError, WedError
from ...domain.services import EngineOutcome, WedEngineInterface
from ...domain.services.catalog import spider
from ...domain.services.s123_wed import s123_wed
from ...domain.services.subgraph import contains_induced
from ...domain.value_objects.graph import Graph
from ...domain.value_objects.solution import Engine
from ...domain.value_objects.weights import WeightMap

logger = get_logger(__name__)


class S123EngineAdapter(WedEngineInterface):
    """Sound on chordal graphs; a "no-eds" answer is trusted only without an induced S_{1,2,3}."""

    def __init__(self) -> None:
        self._pattern = spider(1, 2, 3)

    @property
    def name(self) -> Engine:
        return Engine.S123

    def is_complete_for(self, graph: Graph) -> bool:
        return not contains_induced(graph, self._pattern)

    def solve(self, graph: Graph, weights: WeightMap) -> EngineOutcome:
        try:
            solution = s123_wed(graph, weights)
        except NotChordalError as e:
            return EngineOutcome.error(self.name, e.message, hole=list(e.hole or ()))
        except WedError as e:
            logger.error("engine_error", engine=self.name.value, n=graph.n, error=e.message)
            return EngineOutcome.error(self.name, e.message)
        if solution is None:
            return EngineOutcome.no_eds(self.name)
        return EngineOutcome.solved(self.name, solution)
