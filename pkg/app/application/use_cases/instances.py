"""
Loading graphs together with the weights a command should use.
"""

from dataclasses import dataclass

from ...domain.repositories import GraphDocument, GraphRepository
from ...domain.value_objects.weights import WeightMap


@dataclass(frozen=True)
class LoadedInstance:
    document: GraphDocument
    weights: WeightMap


def load_instance(
    repository: GraphRepository,
    graph_path: str,
    weights_path: str | None = None,
    unweighted: bool = False,
) -> LoadedInstance:
    """Read a graph; sidecar weights override ``w`` lines vertex by vertex."""
    document = repository.load(graph_path)
    n = document.graph.n
    if unweighted:
        return LoadedInstance(document, WeightMap.uniform(n))
    if weights_path is None:
        return LoadedInstance(document, document.weights)
    merged = dict(document.explicit_weights)
    merged.update(repository.load_weights(weights_path, n))
    return LoadedInstance(document, WeightMap.from_mapping(n, merged))
