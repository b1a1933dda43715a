"""
Graph class checks and MWIS use cases.
"""

import time
from typing import Any

from structlog import get_logger

from ...domain.exceptions import NotChordalError
from ...domain.repositories import GraphRepository
from ...domain.services.catalog import FREE_PRESETS, NamedGraph, resolve_family
from ...domain.services.chordal import is_chordal, is_split, mwis_chordal
from ...domain.services.eds import DEFAULT_BRUTE_MAX_VERTICES
from ...domain.services.square_wed import square_report
from ...domain.services.subgraph import DEFAULT_MAX_PATTERN_VERTICES, is_free_of_all
from ...domain.value_objects.graph import Graph
from ...domain.value_objects.solution import Engine, SolveStatus
from ..dto import CheckGraphRequest, RunReport, SolveMwisRequest
from ..exceptions import ValidationError
from .instances import load_instance

logger = get_logger(__name__)


class CheckGraphUseCase:
    """Use case for chordality, freeness and square-chordality checks."""

    def __init__(
        self,
        graph_repository: GraphRepository,
        pattern_max_vertices: int = DEFAULT_MAX_PATTERN_VERTICES,
    ) -> None:
        self._graph_repository = graph_repository
        self._pattern_max_vertices = pattern_max_vertices

    def execute(self, request: CheckGraphRequest) -> RunReport:
        if not (request.chordal or request.free or request.square_chordal or request.split or request.classes):
            raise ValidationError("Nothing to check: pass --chordal, --free, --square-chordal, --split or --classes")

        instance = load_instance(self._graph_repository, request.graph_path)
        graph = instance.document.graph
        started = time.perf_counter()
        details: dict[str, Any] = {}
        verdicts: list[bool] = []

        if request.chordal:
            report = is_chordal(graph)
            details["chordal"] = report.chordal
            if report.hole is not None:
                details["hole"] = list(report.hole)
            verdicts.append(report.chordal)

        if request.free:
            family = resolve_family(request.free)
            free, witness = self._free_of(graph, family)
            details["free"] = free
            if witness is not None:
                details["witness"] = witness
            verdicts.append(free)

        if request.square_chordal:
            squared = square_report(graph, instance.weights)
            details["square_chordal"] = squared.chordal
            if squared.hole is not None:
                details["square_hole"] = list(squared.hole)
            verdicts.append(squared.chordal)

        if request.split:
            split = is_split(graph)
            details["split"] = split
            verdicts.append(split)

        if request.classes:
            details["classes"] = self.class_report(graph)

        elapsed_ms = (time.perf_counter() - started) * 1000.0
        logger.info("check_finished", n=graph.n, timing_ms=round(elapsed_ms, 3), **{
            key: value for key, value in details.items() if isinstance(value, bool)
        })
        return RunReport(
            command="check",
            status=SolveStatus.SOLVED,
            input_digest=instance.document.digest,
            timing_ms=elapsed_ms,
            verdict=all(verdicts),
            details=details,
        )

    def _free_of(self, graph: Graph, family: list[NamedGraph]) -> tuple[bool, dict[str, Any] | None]:
        report = is_free_of_all(graph, [entry.graph for entry in family], self._pattern_max_vertices)
        if report.free or report.pattern_index is None or report.embedding is None:
            return True, None
        # map[i] is the host vertex playing pattern vertex i
        return False, {
            "h": family[report.pattern_index].name,
            "map": list(report.embedding.mapping),
        }

    def class_report(self, graph: Graph) -> dict[str, Any]:
        """Membership in the classes the engines care about, plus the engines that are exact on it."""
        chordal = bool(is_chordal(graph))
        report: dict[str, Any] = {"chordal": chordal, "split": chordal and is_split(graph)}
        for preset in ("net", "extended_gem", "s123", "proposition1"):
            family = resolve_family(FREE_PRESETS[preset])
            report[f"{preset}_free"], _ = self._free_of(graph, family)

        exact = [Engine.BRUTE.value] if graph.n <= DEFAULT_BRUTE_MAX_VERTICES else []
        if chordal and (report["net_free"] or report["extended_gem_free"]):
            exact.append(Engine.SQUARE.value)
        if chordal and report["s123_free"]:
            exact.append(Engine.S123.value)
        report["exact_engines"] = sorted(exact)
        return report


class SolveMwisUseCase:
    """Use case for maximum weight independent set on chordal graphs."""

    def __init__(self, graph_repository: GraphRepository) -> None:
        self._graph_repository = graph_repository

    def execute(self, request: SolveMwisRequest) -> RunReport:
        instance = load_instance(self._graph_repository, request.graph_path, request.weights_path)
        graph, weights = instance.document.graph, instance.weights
        if weights.infinite_vertices():
            raise ValidationError("MWIS needs finite weights; found 'inf' weight lines")

        started = time.perf_counter()
        try:
            chosen, total = mwis_chordal(graph, [w for w in weights if isinstance(w, int)])
        except NotChordalError as e:
            return RunReport(
                command="mwis",
                status=SolveStatus.ERROR,
                input_digest=instance.document.digest,
                message=e.message,
                details={"hole": list(e.hole or ())},
            )
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        logger.info("mwis_finished", n=graph.n, weight=total, timing_ms=round(elapsed_ms, 3))
        return RunReport(
            command="mwis",
            status=SolveStatus.SOLVED,
            input_digest=instance.document.digest,
            weight=total,
            vertices=sorted(chosen),
            timing_ms=elapsed_ms,
        )
