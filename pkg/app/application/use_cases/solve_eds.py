"""
Weighted efficient domination use case.
"""

import time
from collections.abc import Mapping

from structlog import get_logger

from ...domain.repositories import GraphRepository
from ...domain.services import EngineOutcome, EngineRegistry, WedEngineInterface
from ...domain.value_objects.graph import Graph
from ...domain.value_objects.solution import Engine, SolveStatus
from ...domain.value_objects.weights import WeightMap
from ..dto import RunReport, SolveEdsRequest
from ..exceptions import ValidationError
from .instances import load_instance

logger = get_logger(__name__)


class SolveEdsUseCase:
    """Use case for solving WED with one engine or the ``auto`` chain."""

    def __init__(
        self,
        graph_repository: GraphRepository,
        engines: Mapping[str, WedEngineInterface],
        auto_order: tuple[Engine, ...] = (Engine.SQUARE, Engine.S123, Engine.BRUTE),
    ) -> None:
        self._graph_repository = graph_repository
        self._registry = EngineRegistry()
        for engine in engines.values():
            self._registry.register(engine)
        self._auto_order = auto_order

    def execute(self, request: SolveEdsRequest) -> RunReport:
        instance = load_instance(
            self._graph_repository, request.graph_path, request.weights_path, request.unweighted
        )
        graph, weights = instance.document.graph, instance.weights

        started = time.perf_counter()
        if request.engine == "auto":
            outcome, attempts = self.solve_auto(graph, weights)
        else:
            try:
                engine = self._registry.get(request.engine)
            except (KeyError, ValueError) as e:
                raise ValidationError(f"Engine {request.engine} is not available") from e
            outcome, attempts = self._run(engine, graph, weights), [request.engine]
        elapsed_ms = (time.perf_counter() - started) * 1000.0

        logger.info(
            "eds_finished",
            engine=outcome.engine.value,
            n=graph.n,
            status=outcome.status.value,
            weight=outcome.solution.weight if outcome.solution else None,
            timing_ms=round(elapsed_ms, 3),
        )
        details = dict(outcome.details)
        if request.engine == "auto":
            details["attempts"] = attempts
        return RunReport(
            command="eds",
            status=outcome.status,
            input_digest=instance.document.digest,
            engine=outcome.engine,
            weight=outcome.solution.weight if outcome.solution else None,
            vertices=outcome.solution.sorted_vertices() if outcome.solution else None,
            timing_ms=elapsed_ms,
            message=outcome.message,
            details=details,
        )

    def solve_auto(self, graph: Graph, weights: WeightMap) -> tuple[EngineOutcome, list[str]]:
        """Try engines in order; inapplicable or inconclusive answers fall through."""
        attempts: list[str] = []
        last: EngineOutcome | None = None
        for engine in self._registry.ordered(self._auto_order):
            if not engine.can_handle(graph):
                logger.info("auto_skip", engine=engine.name.value, n=graph.n)
                continue
            attempts.append(engine.name.value)
            outcome = self._run(engine, graph, weights)
            if outcome.status is SolveStatus.SOLVED:
                return outcome, attempts
            if outcome.status is SolveStatus.NO_EDS and engine.is_complete_for(graph):
                return outcome, attempts
            logger.info(
                "auto_fallback",
                engine=engine.name.value,
                status=outcome.status.value,
                message=outcome.message,
            )
            if last is None or outcome.status is not SolveStatus.NO_EDS:
                last = outcome
        if last is None:
            return (
                EngineOutcome.inapplicable(Engine.BRUTE, "no engine could handle the instance"),
                attempts,
            )
        if last.status is SolveStatus.NO_EDS:
            return (
                EngineOutcome.inapplicable(last.engine, "no engine could decide the instance"),
                attempts,
            )
        return last, attempts

    @staticmethod
    def _run(engine: WedEngineInterface, graph: Graph, weights: WeightMap) -> EngineOutcome:
        logger.debug("engine_start", engine=engine.name.value, n=graph.n)
        return engine.solve(graph, weights)
