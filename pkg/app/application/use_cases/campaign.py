"""
Oracle campaign use case: generate seeded instances, run engines, compare.
"""

import csv
import io
import random
from collections.abc import Callable, Mapping
from concurrent.futures import ProcessPoolExecutor

from structlog import get_logger

from ...domain.exceptions import InputTooLargeError
from ...domain.services import EngineOutcome, WedEngineInterface
from ...domain.services.catalog import resolve_family
from ...domain.services.eds import DEFAULT_X3C_MAX_TRIPLES, x3c_solve
from ...domain.services.generators import (
    random_chordal,
    random_h_free_chordal,
    random_interval_graph,
    random_weights,
    random_x3c_instance,
    x3c_to_graph,
)
from ...domain.services.square_wed import square_report
from ...domain.value_objects.graph import Graph
from ...domain.value_objects.solution import SolveStatus
from ...domain.value_objects.weights import WeightMap
from ..dto import CampaignResult, CampaignRow, CampaignSpec

logger = get_logger(__name__)

EngineFactory = Callable[[], Mapping[str, WedEngineInterface]]


def _instance(
    spec: CampaignSpec, index: int, hfree_max_tries: int, x3c_max_triples: int
) -> tuple[Graph | None, str, bool | None]:
    """Graph for one campaign slot, a note, and the X3C cover verdict when relevant."""
    seed = f"{spec.seed}:{index}"
    rng = random.Random(seed)
    if spec.generator == "x3c":
        instance = random_x3c_instance(spec.n, spec.triples, f"{seed}:x3c", spec.covering)
        graph = x3c_to_graph(instance).graph
        try:
            cover = x3c_solve(instance, x3c_max_triples)
        except InputTooLargeError:
            return graph, "cover=unknown", None
        note = f"cover={'yes' if cover is not None else 'no'}"
        return graph, note, cover is not None if instance.is_covering() else None

    n = rng.randint(spec.n_min, spec.n)
    bias = spec.edge_bias if spec.edge_bias is not None else rng.random()
    if spec.generator == "interval":
        return random_interval_graph(n, spec.density, f"{seed}:graph"), "", None
    if spec.generator == "chordal":
        return random_chordal(n, bias, f"{seed}:graph"), "", None

    patterns = [entry.graph for entry in resolve_family(spec.forbid)]
    graph = random_h_free_chordal(
        n, patterns, f"{seed}:graph", spec.max_tries or hfree_max_tries, spec.edge_bias
    )
    return graph, "" if graph is not None else "generator exhausted", None


def evaluate_instance(
    spec: CampaignSpec,
    index: int,
    engines: Mapping[str, WedEngineInterface],
    hfree_max_tries: int = 2000,
    x3c_max_triples: int = DEFAULT_X3C_MAX_TRIPLES,
) -> CampaignRow:
    graph, note, has_cover = _instance(spec, index, hfree_max_tries, x3c_max_triples)
    if graph is None:
        return CampaignRow(index=index, n=0, m=0, results={}, agree=True, note=note)

    if spec.unit_weights or spec.generator == "x3c":
        weights = WeightMap.uniform(graph.n)
    else:
        weights = random_weights(graph.n, f"{spec.seed}:{index}:weights", 1, spec.max_weight)

    outcomes: dict[str, EngineOutcome] = {}
    for name in (engine.value for engine in spec.engines):
        engine = engines.get(name)
        if engine is None or not engine.can_handle(graph):
            continue
        outcomes[name] = engine.solve(graph, weights)

    results = {
        name: (outcome.status.value, outcome.solution.weight if outcome.solution else None)
        for name, outcome in outcomes.items()
    }
    agree = all(outcome.status is not SolveStatus.ERROR for outcome in outcomes.values())
    if spec.require_applicable:
        agree = agree and all(o.status is not SolveStatus.INAPPLICABLE for o in outcomes.values())
    decisive = {
        (o.status, o.solution.weight if o.solution else None)
        for o in outcomes.values()
        if o.status.is_decisive
    }
    if spec.compare and len(decisive) > 1:
        agree = False
    if has_cover is not None and decisive:
        exists = {status is SolveStatus.SOLVED for status, _ in decisive}
        if exists != {has_cover}:
            agree = False

    invariant_ok = True
    if spec.check_square_chordal and any(o.status is SolveStatus.SOLVED for o in outcomes.values()):
        invariant_ok = square_report(graph).chordal
        if not invariant_ok:
            note = (note + " square not chordal").strip()

    row = CampaignRow(
        index=index,
        n=graph.n,
        m=graph.edge_count,
        results=results,
        agree=agree,
        invariant_ok=invariant_ok,
        note=note,
    )
    if not agree or not invariant_ok:
        logger.warning("campaign_mismatch", index=index, n=graph.n, results=results, note=note)
    return row


def _evaluate_in_worker(
    factory: EngineFactory, spec: CampaignSpec, index: int, hfree_max_tries: int, x3c_max_triples: int
) -> CampaignRow:
    return evaluate_instance(spec, index, factory(), hfree_max_tries, x3c_max_triples)


class RunCampaignUseCase:
    """Use case for running a seeded oracle campaign."""

    def __init__(
        self,
        engines: Mapping[str, WedEngineInterface],
        engine_factory: EngineFactory | None = None,
        workers: int = 1,
        hfree_max_tries: int = 2000,
        x3c_max_triples: int = DEFAULT_X3C_MAX_TRIPLES,
    ) -> None:
        self._engines = engines
        self._engine_factory = engine_factory
        self._workers = workers
        self._hfree_max_tries = hfree_max_tries
        self._x3c_max_triples = x3c_max_triples

    def execute(self, spec: CampaignSpec) -> CampaignResult:
        logger.info(
            "campaign_started",
            generator=spec.generator,
            count=spec.count,
            engines=[e.value for e in spec.engines],
            workers=self._workers,
        )
        indices = range(spec.count)
        if self._workers > 1 and self._engine_factory is not None:
            with ProcessPoolExecutor(max_workers=self._workers) as pool:
                rows = list(
                    pool.map(
                        _evaluate_in_worker,
                        [self._engine_factory] * spec.count,
                        [spec] * spec.count,
                        indices,
                        [self._hfree_max_tries] * spec.count,
                        [self._x3c_max_triples] * spec.count,
                    )
                )
        else:
            rows = [
                evaluate_instance(spec, i, self._engines, self._hfree_max_tries, self._x3c_max_triples)
                for i in indices
            ]

        result = CampaignResult(rows=rows, engines=[e.value for e in spec.engines])
        logger.info("campaign_finished", rows=len(rows), mismatches=len(result.mismatches))
        return result


def render_csv(result: CampaignResult) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(result.header())
    for row in result.rows:
        writer.writerow(row.as_csv_fields(result.engines))
    return buffer.getvalue()
