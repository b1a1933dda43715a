"""
Instance generation use cases.
"""

from structlog import get_logger

from ...domain.repositories import GraphRepository, X3cRepository
from ...domain.services.catalog import lookup, resolve_family
from ...domain.services.generators import (
    random_chordal,
    random_h_free_chordal,
    random_interval_graph,
    random_weights,
    random_x3c_instance,
    x3c_to_graph,
)
from ...domain.value_objects.graph import Graph
from ...domain.value_objects.weights import WeightMap
from ..dto import GeneratedGraph

logger = get_logger(__name__)


class GenerateInstanceUseCase:
    """Produces edge-list (or X3C) text for the generator commands."""

    def __init__(
        self,
        graph_repository: GraphRepository,
        x3c_repository: X3cRepository,
        hfree_max_tries: int = 2000,
    ) -> None:
        self._graph_repository = graph_repository
        self._x3c_repository = x3c_repository
        self._hfree_max_tries = hfree_max_tries

    def from_x3c(self, x3c_path: str) -> GeneratedGraph:
        instance = self._x3c_repository.load(x3c_path)
        reduction = x3c_to_graph(instance)
        comments = [f"x3c reduction n={instance.n} m={instance.m}"]
        for v, role in enumerate(reduction.roles):
            triple = reduction.triple_of[v]
            comments.append(f"role {v} {role.value}" + ("" if triple is None else f" {triple}"))
        graph = reduction.graph
        return GeneratedGraph(text=self._graph_repository.dumps(graph, None, comments), n=graph.n, m=graph.edge_count)

    def random_x3c(self, n: int, m: int, seed: int, covering: bool = False) -> GeneratedGraph:
        instance = random_x3c_instance(n, m, seed, covering)
        return GeneratedGraph(text=self._x3c_repository.dumps(instance), n=instance.n, m=instance.m, seed=seed)

    def interval(self, n: int, density: float, seed: int, max_weight: int | None = None) -> GeneratedGraph:
        graph = random_interval_graph(n, density, seed)
        return self._emit(graph, f"interval n={n} density={density} seed={seed}", seed, max_weight)

    def chordal(self, n: int, edge_bias: float, seed: int, max_weight: int | None = None) -> GeneratedGraph:
        graph = random_chordal(n, edge_bias, seed)
        return self._emit(graph, f"chordal n={n} edge_bias={edge_bias} seed={seed}", seed, max_weight)

    def hfree(
        self,
        n: int,
        forbid: list[str],
        seed: int,
        max_tries: int | None = None,
        max_weight: int | None = None,
    ) -> GeneratedGraph:
        family = resolve_family(forbid)
        tries = max_tries or self._hfree_max_tries
        graph = random_h_free_chordal(n, [entry.graph for entry in family], seed, tries)
        if graph is None:
            logger.warning("hfree_exhausted", n=n, forbid=forbid, tries=tries)
            return GeneratedGraph(text="", n=n, m=0, seed=seed, exhausted=True)
        names = ",".join(entry.name for entry in family)
        return self._emit(graph, f"hfree n={n} forbid={names} seed={seed}", seed, max_weight)

    def catalog(self, name: str) -> GeneratedGraph:
        entry = lookup(name)
        comments = [f"catalog {entry.name} ({entry.source.value})"]
        return GeneratedGraph(
            text=self._graph_repository.dumps(entry.graph, None, comments), n=entry.graph.n, m=entry.graph.edge_count
        )

    def _emit(self, graph: Graph, header: str, seed: int, max_weight: int | None) -> GeneratedGraph:
        weights: WeightMap | None = None
        if max_weight is not None:
            weights = random_weights(graph.n, f"{seed}:weights", 1, max_weight)
        return GeneratedGraph(
            text=self._graph_repository.dumps(graph, weights, [header]), n=graph.n, m=graph.edge_count, seed=seed
        )
