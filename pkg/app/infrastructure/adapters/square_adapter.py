"""
Square/MWIS engine adapter.
"""

from structlog import get_logger

from ...domain.exceptions import NotChordalError, SquareNotChordalError, WedError
from ...domain.services import EngineOutcome, WedEngineInterface
from ...domain.services.square_wed import wed_via_square
from ...domain.value_objects.graph import Graph
from ...domain.value_objects.solution import Engine
from ...domain.value_objects.weights import WeightMap

logger = get_logger(__name__)


class SquareEngineAdapter(WedEngineInterface):
    """MWIS on the square; exact whenever the restricted square is chordal."""

    @property
    def name(self) -> Engine:
        return Engine.SQUARE

    def solve(self, graph: Graph, weights: WeightMap) -> EngineOutcome:
        try:
            solution = wed_via_square(graph, weights)
        except SquareNotChordalError as e:
            logger.info("engine_inapplicable", engine=self.name.value, n=graph.n, hole=e.hole)
            return EngineOutcome.inapplicable(
                self.name, e.message, square_chordal=False, hole=list(e.hole or ())
            )
        except NotChordalError as e:
            return EngineOutcome.error(self.name, e.message, hole=list(e.hole or ()))
        except WedError as e:
            logger.error("engine_error", engine=self.name.value, n=graph.n, error=e.message)
            return EngineOutcome.error(self.name, e.message)
        if solution is None:
            return EngineOutcome.no_eds(self.name, square_chordal=True)
        return EngineOutcome.solved(self.name, solution, square_chordal=True)
