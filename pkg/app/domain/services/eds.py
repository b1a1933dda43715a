"""
Efficient domination basics: the e.d.s. predicate, the exact brute-force
solver and an exact cover solver for X3C instances.
"""

from __future__ import annotations

from collections.abc import Iterable

from ..exceptions import InputTooLargeError, InvalidGraphError, VerificationError
from ..value_objects.graph import Graph
from ..value_objects.solution import EdsSolution, Engine
from ..value_objects.weights import WeightMap
from ..value_objects.x3c import X3cInstance

DEFAULT_BRUTE_MAX_VERTICES = 24
DEFAULT_X3C_MAX_TRIPLES = 20


def is_eds(graph: Graph, vertices: Iterable[int]) -> bool:
    """Every vertex is dominated exactly once by ``vertices``."""
    chosen = set(vertices)
    for v in chosen:
        if not 0 <= v < graph.n:
            raise InvalidGraphError(f"Vertex {v} is not in the graph")
    hits = [0] * graph.n
    for d in chosen:
        for u in graph.closed_neighborhood(d):
            hits[u] += 1
    return all(count == 1 for count in hits)


def verified_solution(
    graph: Graph, weights: WeightMap, vertices: Iterable[int], engine: Engine
) -> EdsSolution:
    """Wrap ``vertices`` as a solution after re-checking it against ``graph``."""
    chosen = frozenset(vertices)
    if not is_eds(graph, chosen):
        raise VerificationError(f"{engine} produced {sorted(chosen)}, which is not an e.d.s.")
    if any(not weights.is_finite(v) for v in chosen):
        raise VerificationError(f"{engine} produced a set containing an infinite-weight vertex")
    return EdsSolution(chosen, weights.total(chosen), engine)


def brute_force_wed(
    graph: Graph,
    weights: WeightMap,
    max_vertices: int = DEFAULT_BRUTE_MAX_VERTICES,
) -> EdsSolution | None:
    """Minimum weight e.d.s. by exhaustive branching.

    Branches on the lowest undominated vertex ``u``: some finite-weight vertex
    of ``N[u]`` whose closed neighbourhood is still undominated must be chosen.
    """
    if graph.n > max_vertices:
        raise InputTooLargeError("graph", graph.n, max_vertices)
    if len(weights) != graph.n:
        raise InvalidGraphError(f"Got {len(weights)} weights for {graph.n} vertices")

    closed = [sorted(graph.closed_neighborhood(v)) for v in graph.vertices()]
    dominated = [False] * graph.n
    chosen: list[int] = []
    best: list[int] | None = None
    best_weight = 0

    def search(start: int, weight: int) -> None:
        nonlocal best, best_weight
        if best is not None and weight >= best_weight:
            return
        u = start
        while u < graph.n and dominated[u]:
            u += 1
        if u == graph.n:
            best, best_weight = list(chosen), weight
            return
        for c in closed[u]:
            w = weights[c]
            if not isinstance(w, int):
                continue
            if any(dominated[x] for x in closed[c]):
                continue
            for x in closed[c]:
                dominated[x] = True
            chosen.append(c)
            search(u + 1, weight + w)
            chosen.pop()
            for x in closed[c]:
                dominated[x] = False

    search(0, 0)
    if best is None:
        return None
    return EdsSolution(best, best_weight, Engine.BRUTE)


def x3c_solve(
    instance: X3cInstance, max_triples: int = DEFAULT_X3C_MAX_TRIPLES
) -> tuple[int, ...] | None:
    """Indices of an exact cover, or ``None``. Branches on the lowest uncovered element."""
    if instance.m > max_triples:
        raise InputTooLargeError("triple list", instance.m, max_triples)

    containing: list[list[int]] = [[] for _ in range(instance.n)]
    for j, triple in enumerate(instance.triples):
        for x in triple:
            containing[x].append(j)

    covered = [False] * instance.n
    picked: list[int] = []

    def search(start: int) -> bool:
        x = start
        while x < instance.n and covered[x]:
            x += 1
        if x == instance.n:
            return True
        for j in containing[x]:
            triple = instance.triples[j]
            if any(covered[y] for y in triple):
                continue
            for y in triple:
                covered[y] = True
            picked.append(j)
            if search(x + 1):
                return True
            picked.pop()
            for y in triple:
                covered[y] = False
        return False

    if not search(0):
        return None
    return tuple(sorted(picked))
