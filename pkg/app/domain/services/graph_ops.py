"""
Traversal helpers: components, distance levels, complement.
"""

from collections import deque
from collections.abc import Iterable

from ..value_objects.graph import Graph, LevelStructure


def components(graph: Graph, subset: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Connected components of the subgraph induced by ``subset``.

    Components are ordered by their smallest vertex.
    """
    allowed = set(graph.vertices()) if subset is None else set(subset)
    seen: set[int] = set()
    result: list[frozenset[int]] = []
    for start in sorted(allowed):
        if start in seen:
            continue
        seen.add(start)
        component = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in graph.neighbors(v):
                if u in allowed and u not in seen:
                    seen.add(u)
                    component.add(u)
                    queue.append(u)
        result.append(frozenset(component))
    return result


def distances_from(graph: Graph, root: int) -> dict[int, int]:
    """Distances from ``root`` to every vertex of its component."""
    distance = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in graph.sorted_neighbors(v):
            if u not in distance:
                distance[u] = distance[v] + 1
                queue.append(u)
    return distance


def bfs_levels(graph: Graph, root: int) -> LevelStructure:
    distance = distances_from(graph, root)
    depth = max(distance.values())
    buckets: list[set[int]] = [set() for _ in range(depth + 1)]
    for v, d in distance.items():
        buckets[d].add(v)
    level_of = tuple(distance.get(v, -1) for v in graph.vertices())
    return LevelStructure(
        root=root,
        levels=tuple(frozenset(bucket) for bucket in buckets),
        level_of=level_of,
    )


def complement(graph: Graph) -> Graph:
    rows = [
        [u for u in graph.vertices() if u != v and not graph.has_edge(v, u)]
        for v in graph.vertices()
    ]
    return Graph(graph.n, rows, graph.labels)


def is_clique(graph: Graph, vertices: Iterable[int]) -> bool:
    members = sorted(set(vertices))
    return all(
        graph.has_edge(u, v) for i, u in enumerate(members) for v in members[i + 1 :]
    )


def non_adjacent_pair(graph: Graph, vertices: Iterable[int]) -> tuple[int, int] | None:
    """Lowest pair of distinct non-adjacent vertices among ``vertices``."""
    members = sorted(set(vertices))
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            if not graph.has_edge(u, v):
                return u, v
    return None


def is_independent(graph: Graph, vertices: Iterable[int]) -> bool:
    members = set(vertices)
    return all(not (graph.neighbors(v) & members) for v in members)


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    """Disjoint union; the vertices of each part are shifted after the previous parts."""
    edges: list[tuple[int, int]] = []
    offset = 0
    for part in graphs:
        edges.extend((u + offset, v + offset) for u, v in part.edges())
        offset += part.n
    return Graph.from_edge_list(offset, edges)
