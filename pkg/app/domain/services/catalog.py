"""
Named small graphs used as forbidden induced subgraphs.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from ..exceptions import UnknownGraphNameError
from ..value_objects.graph import Graph
from .graph_ops import complement, disjoint_union


class GraphSource(str, Enum):
    """Whether a structure is stated outright or reconstructed from a proof."""

    TEXT_DEFINED = "text-defined"
    DERIVED_FROM_PROOF = "derived-from-proof"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: Graph
    source: GraphSource = GraphSource.TEXT_DEFINED


def path(k: int) -> Graph:
    return Graph.from_edge_list(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise UnknownGraphNameError(f"C{k}")
    return Graph.from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def clique(k: int) -> Graph:
    return Graph.from_edge_list(k, combinations(range(k), 2))


def star(k: int) -> Graph:
    """K_{1,k}: vertex 0 is the centre."""
    return Graph.from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)])


def spider(i: int, j: int, k: int) -> Graph:
    """Three paths of ``i``, ``j`` and ``k`` edges glued at vertex 0."""
    edges: list[tuple[int, int]] = []
    next_id = 1
    for length in (i, j, k):
        previous = 0
        for _ in range(length):
            edges.append((previous, next_id))
            previous = next_id
            next_id += 1
    return Graph.from_edge_list(next_id, edges)


def _gem() -> Graph:
    return Graph.from_edge_list(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])


def _p_graph() -> Graph:
    return Graph.from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])


def _extended_gem() -> Graph:
    # triangle a b c; p on a-b, q on b-c; pendant path a-r-s; pendant t on c
    return Graph.from_edge_list(
        8,
        [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (6, 5), (7, 2)],
        labels=["a", "b", "c", "p", "q", "r", "s", "t"],
    )


_FIXED: dict[str, tuple[Callable[[], Graph], GraphSource]] = {
    "claw": (lambda: spider(1, 1, 1), GraphSource.TEXT_DEFINED),
    "chair": (lambda: spider(1, 1, 2), GraphSource.TEXT_DEFINED),
    "paw": (lambda: Graph.from_edge_list(4, [(0, 1), (1, 2), (0, 2), (0, 3)]), GraphSource.TEXT_DEFINED),
    "diamond": (
        lambda: Graph.from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        GraphSource.TEXT_DEFINED,
    ),
    "bull": (
        lambda: Graph.from_edge_list(5, [(0, 1), (1, 2), (2, 3), (4, 1), (4, 2)]),
        GraphSource.TEXT_DEFINED,
    ),
    "net": (
        lambda: Graph.from_edge_list(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]),
        GraphSource.TEXT_DEFINED,
    ),
    "gem": (_gem, GraphSource.TEXT_DEFINED),
    "co_gem": (lambda: complement(_gem()), GraphSource.TEXT_DEFINED),
    "co_chair": (lambda: complement(spider(1, 1, 2)), GraphSource.TEXT_DEFINED),
    "P": (_p_graph, GraphSource.TEXT_DEFINED),
    "co_P": (lambda: complement(_p_graph()), GraphSource.TEXT_DEFINED),
    "butterfly": (
        lambda: Graph.from_edge_list(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]),
        GraphSource.TEXT_DEFINED,
    ),
    "dart": (
        lambda: Graph.from_edge_list(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4)]),
        GraphSource.TEXT_DEFINED,
    ),
    "extended_gem": (_extended_gem, GraphSource.DERIVED_FROM_PROOF),
    "H1": (lambda: star(4), GraphSource.DERIVED_FROM_PROOF),
    "H2": (
        lambda: Graph.from_edge_list(5, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)]),
        GraphSource.DERIVED_FROM_PROOF,
    ),
    "H3": (
        lambda: Graph.from_edge_list(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (4, 0), (4, 1)]),
        GraphSource.DERIVED_FROM_PROOF,
    ),
    "H4": (
        lambda: Graph.from_edge_list(5, [*combinations(range(4), 2), (4, 0), (4, 1), (4, 2)]),
        GraphSource.DERIVED_FROM_PROOF,
    ),
}

_PATTERNS: list[tuple[re.Pattern[str], Callable[..., Graph]]] = [
    (re.compile(r"P([1-9]\d*)", re.ASCII), path),
    (re.compile(r"C([1-9]\d*)", re.ASCII), cycle),
    (re.compile(r"K([1-9]\d*)", re.ASCII), clique),
    (re.compile(r"K1_([1-9]\d*)", re.ASCII), star),
    (re.compile(r"S_(\d+)_(\d+)_(\d+)", re.ASCII), spider),
]

_MULTIPLE = re.compile(r"([1-9]\d*)?(.+)", re.ASCII)

FREE_PRESETS: dict[str, tuple[str, ...]] = {
    "proposition1": ("2P3", "K3+P3", "2K3", "butterfly"),
    "s123": ("S_1_2_3",),
    "extended_gem": ("extended_gem",),
    "net": ("net",),
}


def _single(name: str) -> Graph:
    if name in _FIXED:
        return _FIXED[name][0]()
    for pattern, builder in _PATTERNS:
        match = pattern.fullmatch(name)
        if match:
            return builder(*(int(group) for group in match.groups()))
    raise UnknownGraphNameError(name)


def named(name: str) -> Graph:
    """Resolve a catalog name.

    Besides the fixed names, ``P<k>``, ``C<k>``, ``K<k>``, ``K1_<k>`` and
    ``S_<i>_<j>_<k>`` are accepted, as are disjoint unions such as ``2P3`` or
    ``K3+P2``.
    """
    return lookup(name).graph


def lookup(name: str) -> NamedGraph:
    key = name.strip()
    if not key:
        raise UnknownGraphNameError(name)
    if key in _FIXED:
        builder, source = _FIXED[key]
        return NamedGraph(key, builder(), source)

    parts: list[Graph] = []
    source = GraphSource.TEXT_DEFINED
    for term in key.split("+"):
        match = _MULTIPLE.fullmatch(term.strip())
        if match is None:
            raise UnknownGraphNameError(name)
        count, base = match.groups()
        try:
            part = _single(base)
        except UnknownGraphNameError:
            raise UnknownGraphNameError(name) from None
        if base in _FIXED:
            if _FIXED[base][1] is GraphSource.DERIVED_FROM_PROOF:
                source = GraphSource.DERIVED_FROM_PROOF
        parts.extend([part] * int(count or 1))
    graph = parts[0] if len(parts) == 1 else disjoint_union(parts)
    return NamedGraph(key, graph, source)


def catalog_names() -> list[str]:
    return sorted(_FIXED)


def resolve_family(names: Iterable[str]) -> list[NamedGraph]:
    """Expand preset names and resolve every member, keeping first occurrences."""
    resolved: list[NamedGraph] = []
    seen: set[str] = set()
    for raw in names:
        for name in FREE_PRESETS.get(raw.strip(), (raw.strip(),)):
            if name not in seen:
                seen.add(name)
                resolved.append(lookup(name))
    return resolved


def four_vertex_graphs() -> dict[str, Graph]:
    """The eleven graphs on four vertices, up to isomorphism."""
    names = ["4K1", "P2+2P1", "2P2", "P3+P1", "K3+P1", "P4", "K1_3", "C4", "paw", "diamond", "K4"]
    return {name: named(name) for name in names}
