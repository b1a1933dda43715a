"""
Instance generators: the X3C reduction and seeded random graph families.
"""

from __future__ import annotations

import random
from collections.abc import Sequence

from ..value_objects.graph import Graph
from ..value_objects.weights import WeightMap
from ..value_objects.x3c import ReductionOutput, VertexRole, X3cInstance
from .subgraph import DEFAULT_MAX_PATTERN_VERTICES, is_free_of_all

try:
    import structlog

    logger = structlog.get_logger(__name__)
except ImportError:  # pragma: no cover
    import logging

    logger = logging.getLogger(__name__)  # type: ignore[assignment]


def x3c_to_graph(instance: X3cInstance) -> ReductionOutput:
    """Reduction graph of an X3C instance.

    Element vertices form a clique, triple vertex ``x_j`` is adjacent to the
    elements of triple ``j`` and to a private pendant ``y_j``. For covering
    instances, exact covers and e.d.s. of the graph correspond one to one.
    """
    n = instance.n
    edges: list[tuple[int, int]] = [(a, b) for a in range(n) for b in range(a + 1, n)]
    roles: list[VertexRole] = [VertexRole.ELEMENT] * n
    triple_of: list[int | None] = [None] * n
    labels = [f"v{i}" for i in range(n)]
    for j, triple in enumerate(instance.triples):
        x = n + 2 * j
        y = x + 1
        edges.extend((element, x) for element in sorted(triple))
        edges.append((x, y))
        roles.extend([VertexRole.TRIPLE, VertexRole.PENDANT])
        triple_of.extend([j, j])
        labels.extend([f"x{j}", f"y{j}"])
    graph = Graph.from_edge_list(n + 2 * instance.m, edges, labels)
    return ReductionOutput(instance=instance, graph=graph, roles=tuple(roles), triple_of=tuple(triple_of))


def random_x3c_instance(n: int, m: int, seed: int | str, covering: bool = False) -> X3cInstance:
    """``m`` random triples over ``0..n-1``; with ``covering`` every element is used."""
    rng = random.Random(seed)
    triples: list[list[int]] = []
    if covering and n:
        uncovered = set(range(n))
        while uncovered:
            anchor = min(uncovered)
            others = rng.sample([x for x in range(n) if x != anchor], 2)
            triples.append(sorted([anchor, *others]))
            uncovered -= {anchor, *others}
    while len(triples) < m and n >= 3:
        triples.append(sorted(rng.sample(range(n), 3)))
    rng.shuffle(triples)
    return X3cInstance(n, triples)


def random_intervals(n: int, density: float, seed: int | str) -> list[tuple[int, int]]:
    rng = random.Random(seed)
    span = max(1, 4 * n)
    longest = max(0, round(min(max(density, 0.0), 1.0) * span))
    intervals = []
    for _ in range(n):
        start = rng.randint(0, span)
        intervals.append((start, start + rng.randint(0, longest)))
    return intervals


def random_interval_graph(n: int, density: float, seed: int | str) -> Graph:
    """Intersection graph of random integer intervals; ``density`` scales their length."""
    intervals = random_intervals(n, density, seed)
    edges = [
        (a, b)
        for a in range(n)
        for b in range(a + 1, n)
        if intervals[a][0] <= intervals[b][1] and intervals[b][0] <= intervals[a][1]
    ]
    return Graph.from_edge_list(n, edges)


def random_chordal(n: int, edge_bias: float, seed: int | str) -> Graph:
    """Grow a connected chordal graph by adding simplicial vertices.

    Each new vertex picks an anchor, extends it greedily to a clique among the
    anchor's neighbours and joins the anchor plus every clique member with
    probability ``edge_bias``. Vertex ids are shuffled at the end.
    """
    rng = random.Random(seed)
    adjacency: list[set[int]] = []
    for k in range(n):
        adjacency.append(set())
        if k == 0:
            continue
        anchor = rng.randrange(k)
        pool = sorted(adjacency[anchor])
        rng.shuffle(pool)
        clique = [anchor]
        for u in pool:
            if all(u in adjacency[c] for c in clique):
                clique.append(u)
        chosen = [anchor] + [u for u in clique[1:] if rng.random() < edge_bias]
        for u in chosen:
            adjacency[k].add(u)
            adjacency[u].add(k)

    relabel = list(range(n))
    rng.shuffle(relabel)
    edges = [(relabel[u], relabel[v]) for u in range(n) for v in adjacency[u] if u < v]
    return Graph.from_edge_list(n, edges)


def random_h_free_chordal(
    n: int,
    patterns: Sequence[Graph],
    seed: int | str,
    max_tries: int = 2000,
    edge_bias: float | None = None,
    max_pattern_vertices: int = DEFAULT_MAX_PATTERN_VERTICES,
) -> Graph | None:
    """Rejection-sample a chordal graph free of every pattern; ``None`` when tries run out."""
    rng = random.Random(seed)
    for attempt in range(max_tries):
        bias = rng.random() if edge_bias is None else edge_bias
        graph = random_chordal(n, bias, rng.getrandbits(32))
        if is_free_of_all(graph, patterns, max_pattern_vertices):
            logger.debug("hfree_sample_accepted", n=n, attempt=attempt)
            return graph
    logger.info("hfree_sample_exhausted", n=n, tries=max_tries)
    return None


def random_weights(n: int, seed: int | str, low: int = 1, high: int = 9) -> WeightMap:
    rng = random.Random(seed)
    return WeightMap(rng.randint(low, high) for _ in range(n))
