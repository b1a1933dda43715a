"""
Chordality: LexBFS elimination orders, PEO checks, hole certificates,
and maximum weight independent set on chordal graphs.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass, field

from ..exceptions import InvalidOrderError, NotChordalError
from ..value_objects.graph import Graph
from .graph_ops import complement

ExactWeight = int


@dataclass(frozen=True)
class EliminationOrder:
    """A vertex order; for chordal graphs produced by :func:`lex_bfs` it is a PEO."""

    order: tuple[int, ...]
    position: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        position = [-1] * len(self.order)
        for index, v in enumerate(self.order):
            if not 0 <= v < len(self.order) or position[v] != -1:
                raise InvalidOrderError(f"Order {list(self.order)} is not a permutation")
            position[v] = index
        object.__setattr__(self, "position", tuple(position))

    def __len__(self) -> int:
        return len(self.order)

    def later_neighbors(self, graph: Graph, v: int) -> list[int]:
        """Neighbours of ``v`` placed after it, earliest first."""
        return sorted(
            (u for u in graph.neighbors(v) if self.position[u] > self.position[v]),
            key=self.position.__getitem__,
        )


@dataclass(frozen=True)
class ChordalityReport:
    """Result of a chordality test; truthy iff the graph is chordal."""

    chordal: bool
    order: EliminationOrder
    hole: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.chordal


def lex_bfs(graph: Graph) -> EliminationOrder:
    """Lexicographic BFS by partition refinement, returned reversed.

    Ties inside the leading cell go to the lowest vertex id, so the result is
    deterministic.
    """
    partition: list[set[int]] = [set(graph.vertices())] if graph.n else []
    visit: list[int] = []
    while partition:
        head = partition[0]
        v = min(head)
        head.discard(v)
        visit.append(v)
        neighbors = graph.neighbors(v)
        refined: list[set[int]] = []
        for cell in partition:
            if not cell:
                continue
            inside = cell & neighbors
            if inside and len(inside) < len(cell):
                refined.append(inside)
                refined.append(cell - inside)
            else:
                refined.append(cell)
        partition = refined
    return EliminationOrder(tuple(reversed(visit)))


def _as_order(graph: Graph, order: EliminationOrder | Sequence[int]) -> EliminationOrder:
    result = order if isinstance(order, EliminationOrder) else EliminationOrder(tuple(order))
    if len(result) != graph.n:
        raise InvalidOrderError(f"Order has {len(result)} vertices, graph has {graph.n}")
    return result


def peo_violation(
    graph: Graph, order: EliminationOrder | Sequence[int]
) -> tuple[int, int, int] | None:
    """First ``(v, a, b)`` with ``a, b`` non-adjacent later neighbours of ``v``.

    Uses the parent test: every later neighbour of ``v`` other than the
    earliest one ``p`` must be adjacent to ``p``.
    """
    peo = _as_order(graph, order)
    for v in peo.order:
        later = peo.later_neighbors(graph, v)
        if len(later) < 2:
            continue
        parent = later[0]
        for u in later[1:]:
            if not graph.has_edge(parent, u):
                return v, parent, u
    return None


def is_peo(graph: Graph, order: EliminationOrder | Sequence[int]) -> bool:
    return peo_violation(graph, order) is None


def _hole_through(graph: Graph, v: int, a: int, b: int) -> tuple[int, ...] | None:
    """Chordless cycle ``v, a, ..., b`` via a shortest a-b path avoiding N[v] - {a, b}."""
    blocked = graph.closed_neighborhood(v) - {a, b}
    parent: dict[int, int | None] = {a: None}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            break
        for y in graph.sorted_neighbors(x):
            if y not in blocked and y not in parent:
                parent[y] = x
                queue.append(y)
    if b not in parent:
        return None
    path: list[int] = []
    node: int | None = b
    while node is not None:
        path.append(node)
        node = parent[node]
    path.reverse()
    return (v, *path)


def find_hole(graph: Graph, order: EliminationOrder | Sequence[int] | None = None) -> tuple[int, ...] | None:
    """A chordless cycle of length >= 4, or ``None`` when the graph is chordal."""
    peo = lex_bfs(graph) if order is None else _as_order(graph, order)
    violation = peo_violation(graph, peo)
    if violation is None:
        return None
    hole = _hole_through(graph, *violation)
    if hole is not None:
        return hole
    for v in graph.vertices():
        neighbors = graph.sorted_neighbors(v)
        for i, a in enumerate(neighbors):
            for b in neighbors[i + 1 :]:
                if graph.has_edge(a, b):
                    continue
                hole = _hole_through(graph, v, a, b)
                if hole is not None:
                    return hole
    raise AssertionError("order is not perfect but no hole was found")


def is_chordal(graph: Graph) -> ChordalityReport:
    order = lex_bfs(graph)
    if is_peo(graph, order):
        return ChordalityReport(chordal=True, order=order)
    return ChordalityReport(chordal=False, order=order, hole=find_hole(graph, order))


def require_chordal(graph: Graph) -> EliminationOrder:
    """PEO of a chordal graph; raises :class:`NotChordalError` with a hole otherwise."""
    report = is_chordal(graph)
    if not report:
        raise NotChordalError(hole=report.hole)
    return report.order


def is_split(graph: Graph) -> bool:
    """Split graphs are exactly those where the graph and its complement are chordal."""
    return bool(is_chordal(graph)) and bool(is_chordal(complement(graph)))


def mwis_chordal(
    graph: Graph,
    weights: Sequence[ExactWeight],
    order: EliminationOrder | None = None,
) -> tuple[frozenset[int], ExactWeight]:
    """Maximum weight independent set of a chordal graph.

    Forward pass over the PEO keeps residual weights: every vertex with a
    positive residual is stacked and its residual is subtracted from its later
    neighbours. The backward pass takes stacked vertices greedily while they
    stay independent. Vertices with non-positive weight never enter the set.
    """
    if len(weights) != graph.n:
        raise ValueError(f"Got {len(weights)} weights for {graph.n} vertices")
    peo = require_chordal(graph) if order is None else order
    if order is not None and not is_peo(graph, peo):
        raise NotChordalError(hole=find_hole(graph), message="order is not a perfect elimination order")

    residual = list(weights)
    stacked: list[int] = []
    for v in peo.order:
        r = residual[v]
        if r <= 0:
            continue
        stacked.append(v)
        for u in graph.neighbors(v):
            if peo.position[u] > peo.position[v]:
                residual[u] -= r

    selected: set[int] = set()
    for v in reversed(stacked):
        if not graph.neighbors(v) & selected:
            selected.add(v)
    return frozenset(selected), sum(weights[v] for v in selected)
