"""
Weighted efficient domination through the square of a chordal graph.

An e.d.s. of G is an independent set of G^2 covering exactly n vertices.
Giving vertex v the weight ``M * |N[v]| - w(v)`` with ``M`` above every
finite total makes a maximum weight independent set in the square an
e.d.s. of minimum weight whenever one exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..exceptions import SquareNotChordalError, VerificationError
from ..value_objects.graph import Graph
from ..value_objects.solution import EdsSolution, Engine
from ..value_objects.weights import WeightMap
from .chordal import ChordalityReport, is_chordal, mwis_chordal, require_chordal
from .eds import verified_solution


def square(graph: Graph) -> Graph:
    """G^2: distinct vertices adjacent iff their distance is at most two."""
    rows: list[set[int]] = []
    for v in graph.vertices():
        reach = set(graph.neighbors(v))
        for u in graph.neighbors(v):
            reach |= graph.neighbors(u)
        reach.discard(v)
        rows.append(reach)
    return Graph(graph.n, rows, graph.labels)


@dataclass(frozen=True)
class BigMWeights:
    big_m: int
    combined: tuple[int | None, ...]
    threshold: int


def big_m_weights(graph: Graph, weights: WeightMap) -> BigMWeights:
    """Square weights; ``None`` marks forbidden vertices."""
    finite_total = weights.finite_total()
    big_m = 1 + finite_total
    combined = tuple(
        big_m * len(graph.closed_neighborhood(v)) - w if isinstance(w, int) else None
        for v, w in enumerate(weights)
    )
    return BigMWeights(big_m=big_m, combined=combined, threshold=big_m * graph.n - finite_total)


@dataclass(frozen=True)
class SquareReport:
    """Chordality of the square restricted to the finite-weight vertices."""

    chordal: bool
    candidates: tuple[int, ...]
    hole: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.chordal


def _restricted_square(graph: Graph, weights: WeightMap) -> tuple[Graph, tuple[int, ...], ChordalityReport]:
    sub, kept = square(graph).induced_subgraph(weights.finite_vertices())
    return sub, kept, is_chordal(sub)


def square_report(graph: Graph, weights: WeightMap | None = None) -> SquareReport:
    if weights is None:
        weights = WeightMap.uniform(graph.n)
    _, kept, report = _restricted_square(graph, weights)
    hole = tuple(kept[x] for x in report.hole) if report.hole is not None else None
    return SquareReport(chordal=report.chordal, candidates=kept, hole=hole)


def wed_via_square(graph: Graph, weights: WeightMap) -> EdsSolution | None:
    """Exact WED whenever the restricted square is chordal.

    Raises :class:`NotChordalError` for non-chordal inputs and
    :class:`SquareNotChordalError` when the square restricted to finite-weight
    vertices has a hole.
    """
    require_chordal(graph)
    sub, kept, report = _restricted_square(graph, weights)
    if not report:
        hole = tuple(kept[x] for x in report.hole) if report.hole is not None else None
        raise SquareNotChordalError(hole=hole)

    plan = big_m_weights(graph, weights)
    sub_weights = [plan.combined[old] or 0 for old in kept]
    selected, value = mwis_chordal(sub, sub_weights, order=report.order)
    if value < plan.threshold:
        return None

    chosen = frozenset(kept[x] for x in selected)
    solution = verified_solution(graph, weights, chosen, Engine.SQUARE)
    if value != plan.big_m * graph.n - solution.weight:
        raise VerificationError(f"square optimum {value} does not match the weight of {sorted(chosen)}")
    return solution
