"""
Weighted efficient domination on S_{1,2,3}-free chordal graphs.

For a root ``v`` that is maximal in the closed-neighbourhood poset, the
distance levels from ``v`` split into components that form a tree (each
component at level ``i >= 1`` touches exactly one component at level
``i - 1``). Every e.d.s. containing ``v`` picks at most one vertex per
component, and a picked vertex dominates its whole component. A bottom-up
pass over that tree prices every admissible choice. The outer loop reduces
non-maximal vertices away until every remaining root is maximal.

The pass is sound on every chordal graph: anything it returns is checked
against the input. Completeness relies on the structure above, which holds
for S_{1,2,3}-free chordal graphs.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import Enum

from ..exceptions import NotMaximalError, StructureViolationError, VerificationError
from ..value_objects.graph import Graph, LevelStructure
from ..value_objects.solution import EdsSolution, Engine
from ..value_objects.weights import WeightMap
from .chordal import require_chordal
from .eds import is_eds, verified_solution
from .graph_ops import bfs_levels, components, non_adjacent_pair

try:
    import structlog

    logger = structlog.get_logger(__name__)
except ImportError:  # pragma: no cover
    import logging

    logger = logging.getLogger(__name__)  # type: ignore[assignment]


@dataclass(frozen=True)
class NeighborhoodPoset:
    """``u`` lies below ``v`` iff ``N[u]`` is a proper subset of ``N[v]``."""

    lower: tuple[frozenset[int], ...]
    upper: tuple[frozenset[int], ...]

    def is_maximal(self, v: int) -> bool:
        return not self.upper[v]

    def maximal_elements(self) -> list[int]:
        return [v for v in range(len(self.upper)) if not self.upper[v]]

    def precedes(self, u: int, v: int) -> bool:
        return u == v or u in self.lower[v]


def neighborhood_poset(graph: Graph) -> NeighborhoodPoset:
    lower: list[set[int]] = [set() for _ in graph.vertices()]
    upper: list[set[int]] = [set() for _ in graph.vertices()]
    closed = [graph.closed_neighborhood(v) for v in graph.vertices()]
    for u in graph.vertices():
        # N[u] inside N[v] forces v into N(u)
        for v in graph.neighbors(u):
            if closed[u] < closed[v]:
                lower[v].add(u)
                upper[u].add(v)
    return NeighborhoodPoset(
        lower=tuple(frozenset(s) for s in lower),
        upper=tuple(frozenset(s) for s in upper),
    )


@dataclass(frozen=True)
class TreeNode:
    index: int
    level: int
    vertices: frozenset[int]
    parent: int | None
    children: tuple[int, ...]


@dataclass(frozen=True)
class ComponentTree:
    """Components of the distance levels of ``root`` linked to their unique lower contact."""

    graph: Graph
    levels: LevelStructure
    nodes: tuple[TreeNode, ...]
    node_of: tuple[int, ...]

    @property
    def root(self) -> int:
        return self.levels.root

    @property
    def depth(self) -> int:
        return self.levels.depth

    def nodes_at(self, level: int) -> list[TreeNode]:
        return [node for node in self.nodes if node.level == level]

    def subtree_vertices(self, index: int) -> frozenset[int]:
        collected: set[int] = set()
        stack = [index]
        while stack:
            node = self.nodes[stack.pop()]
            collected |= node.vertices
            stack.extend(node.children)
        return frozenset(collected)

    def vertices(self) -> frozenset[int]:
        return self.levels.reached()


def component_tree(graph: Graph, root: int) -> ComponentTree:
    """Build the tree of level components; raises :class:`StructureViolationError`.

    Besides the unique-contact rule, every vertex at level ``i >= 2`` must see
    a clique at level ``i - 1``.
    """
    levels = bfs_levels(graph, root)
    node_of = [-1] * graph.n
    built: list[tuple[int, frozenset[int], int | None]] = []

    for i, level in enumerate(levels.levels):
        for part in components(graph, level):
            index = len(built)
            parent: int | None = None
            if i > 0:
                contacts = sorted(
                    {node_of[u] for x in part for u in graph.neighbors(x) if levels.level_of[u] == i - 1}
                )
                if len(contacts) != 1:
                    witness = tuple(sorted(part))
                    raise StructureViolationError(
                        f"component {list(witness)} at level {i} touches {len(contacts)} components at level {i - 1}",
                        witness=witness,
                    )
                parent = contacts[0]
            if i >= 2:
                for x in sorted(part):
                    below = [u for u in graph.neighbors(x) if levels.level_of[u] == i - 1]
                    pair = non_adjacent_pair(graph, below)
                    if pair is not None:
                        raise StructureViolationError(
                            f"vertex {x} at level {i} has non-adjacent neighbours {pair[0]} and {pair[1]} below",
                            witness=(x, *pair),
                        )
            for x in part:
                node_of[x] = index
            built.append((i, part, parent))

    children: list[list[int]] = [[] for _ in built]
    for index, (_, _, parent) in enumerate(built):
        if parent is not None:
            children[parent].append(index)

    nodes = tuple(
        TreeNode(index=index, level=i, vertices=part, parent=parent, children=tuple(children[index]))
        for index, (i, part, parent) in enumerate(built)
    )
    return ComponentTree(graph=graph, levels=levels, nodes=nodes, node_of=tuple(node_of))


class CandidateCase(str, Enum):
    """Shape of the two levels below a candidate's component."""

    CLOSED = "i"  # everything below is dominated by the candidate, nothing further down
    UNDOMINATED_ONLY = "ii"  # some vertices one level down need help, nothing else
    FREE_ONLY = "iii"  # one level down is dominated, components two levels down are free
    MIXED = "iv"

    def __str__(self) -> str:
        return self.value


Choice = tuple[int, "int | None"]


@dataclass(frozen=True)
class CoverPlan:
    """How a component without a chosen vertex gets ``need`` dominated from below.

    Each choice names a child component and the vertex chosen there, or
    ``None`` when that child also stays empty and is covered from below.
    """

    node: int
    need: frozenset[int]
    weight: int
    choices: tuple[Choice, ...]


@dataclass(frozen=True)
class Candidate:
    """Cheapest completion of the subtree of ``node`` when ``vertex`` is chosen in it."""

    vertex: int
    node: int
    weight: int
    plans: tuple[CoverPlan, ...]
    case: CandidateCase
    undominated: frozenset[int]
    dominated: frozenset[int]
    covering_components: tuple[int, ...]
    free_components: tuple[int, ...]


@dataclass
class CandidateTable:
    tree: ComponentTree
    candidates: dict[int, tuple[Candidate, ...]] = field(default_factory=dict)
    covered: dict[int, CoverPlan | None] = field(default_factory=dict)
    rejected: dict[int, dict[int, str]] = field(default_factory=dict)

    def candidate(self, node: int, vertex: int) -> Candidate | None:
        for entry in self.candidates.get(node, ()):
            if entry.vertex == vertex:
                return entry
        return None

    def best(self, node: int) -> Candidate | None:
        entries = self.candidates.get(node, ())
        return entries[0] if entries else None

    def __iter__(self) -> Iterator[Candidate]:
        for node in sorted(self.candidates):
            yield from self.candidates[node]


class _CandidateBuilder:
    def __init__(self, tree: ComponentTree, weights: WeightMap) -> None:
        self._tree = tree
        self._graph = tree.graph
        self._weights = weights
        self._memo: dict[tuple[int, frozenset[int]], CoverPlan | None] = {}
        self.table = CandidateTable(tree=tree)

    def build(self) -> CandidateTable:
        for level in range(self._tree.depth, -1, -1):
            for node in self._tree.nodes_at(level):
                self.table.covered[node.index] = (
                    self._cover(node, node.vertices) if node.level > 0 else None
                )
                self.table.candidates[node.index] = self._candidates_for(node)
        return self.table

    def _candidates_for(self, node: TreeNode) -> tuple[Candidate, ...]:
        graph = self._graph
        rejected = self.table.rejected.setdefault(node.index, {})
        pool = [self._tree.root] if node.level == 0 else sorted(node.vertices)
        found: list[Candidate] = []
        for d in pool:
            w = self._weights[d]
            if not isinstance(w, int):
                rejected[d] = "infinite weight"
                continue
            if not node.vertices <= graph.closed_neighborhood(d):
                rejected[d] = "does not dominate its component"
                continue
            plans: list[CoverPlan] = []
            for child_index in node.children:
                child = self._tree.nodes[child_index]
                plan = self._cover(child, child.vertices - graph.neighbors(d))
                if plan is None:
                    rejected[d] = f"component {child_index} below cannot be completed"
                    break
                plans.append(plan)
            else:
                found.append(self._candidate(node, d, w + sum(p.weight for p in plans), plans))
        found.sort(key=lambda c: (c.weight, c.vertex))
        return tuple(found)

    def _candidate(self, node: TreeNode, d: int, weight: int, plans: list[CoverPlan]) -> Candidate:
        below = [self._tree.nodes[c] for c in node.children]
        below_vertices = frozenset().union(*(c.vertices for c in below)) if below else frozenset()
        dominated = below_vertices & self._graph.neighbors(d)
        undominated = below_vertices - dominated

        covering: list[int] = []
        free: list[int] = []
        for child in below:
            for grandchild_index in child.children:
                grandchild = self._tree.nodes[grandchild_index]
                touches = any(self._graph.neighbors(x) & undominated for x in grandchild.vertices)
                (covering if touches else free).append(grandchild_index)

        if undominated:
            case = CandidateCase.MIXED if free else CandidateCase.UNDOMINATED_ONLY
        else:
            case = CandidateCase.FREE_ONLY if free else CandidateCase.CLOSED

        return Candidate(
            vertex=d,
            node=node.index,
            weight=weight,
            plans=tuple(plans),
            case=case,
            undominated=undominated,
            dominated=dominated,
            covering_components=tuple(sorted(covering)),
            free_components=tuple(sorted(free)),
        )

    def _cover(self, node: TreeNode, need: frozenset[int]) -> CoverPlan | None:
        key = (node.index, need)
        if key not in self._memo:
            self._memo[key] = self._solve_cover(node, need)
        return self._memo[key]

    def _solve_cover(self, node: TreeNode, need: frozenset[int]) -> CoverPlan | None:
        """Choose, per child, either one vertex or nothing so that the chosen
        vertices dominate ``need`` exactly once and nothing else of ``node``."""
        base_weight = 0
        fixed: list[Choice] = []
        open_children: list[tuple[int, list[tuple[frozenset[int], int, int | None]]]] = []

        for child_index in node.children:
            options: dict[frozenset[int], tuple[int, int | None]] = {}
            below = self.table.covered.get(child_index)
            if below is not None:
                options[frozenset()] = (below.weight, None)
            for entry in self.table.candidates.get(child_index, ()):
                contribution = self._graph.neighbors(entry.vertex) & node.vertices
                if not contribution <= need:
                    continue
                current = options.get(contribution)
                if current is None or entry.weight < current[0]:
                    options[contribution] = (entry.weight, entry.vertex)
            if not options:
                return None
            if list(options) == [frozenset()]:
                weight, vertex = options[frozenset()]
                base_weight += weight
                fixed.append((child_index, vertex))
                continue
            ranked = sorted(
                ((contribution, weight, vertex) for contribution, (weight, vertex) in options.items()),
                key=lambda item: (item[1], -1 if item[2] is None else item[2]),
            )
            open_children.append((child_index, ranked))

        states: dict[frozenset[int], tuple[int, tuple[Choice, ...]]] = {frozenset(): (0, ())}
        for child_index, ranked in open_children:
            advanced: dict[frozenset[int], tuple[int, tuple[Choice, ...]]] = {}
            for covered, (weight, picks) in states.items():
                for contribution, extra, vertex in ranked:
                    if covered & contribution:
                        continue
                    union = covered | contribution
                    total = weight + extra
                    if union not in advanced or total < advanced[union][0]:
                        advanced[union] = (total, (*picks, (child_index, vertex)))
            states = advanced
            if not states:
                return None

        final = states.get(need)
        if final is None:
            return None
        return CoverPlan(
            node=node.index,
            need=need,
            weight=base_weight + final[0],
            choices=tuple(sorted([*fixed, *final[1]])),
        )


def compute_candidates(tree: ComponentTree, weights: WeightMap) -> CandidateTable:
    """Price every admissible chosen vertex of every component, bottom-up."""
    return _CandidateBuilder(tree, weights).build()


def _reconstruct(table: CandidateTable, start: Candidate) -> tuple[frozenset[int], list[Candidate]]:
    selected: list[Candidate] = []
    pending_candidates = [start]
    pending_plans: list[CoverPlan] = []
    while pending_candidates or pending_plans:
        if pending_plans:
            plan = pending_plans.pop()
            for child, vertex in plan.choices:
                if vertex is None:
                    below = table.covered[child]
                    assert below is not None
                    pending_plans.append(below)
                else:
                    entry = table.candidate(child, vertex)
                    assert entry is not None
                    pending_candidates.append(entry)
            continue
        entry = pending_candidates.pop()
        selected.append(entry)
        pending_plans.extend(entry.plans)
    return frozenset(entry.vertex for entry in selected), selected


def check_levels(graph: Graph, tree: ComponentTree, chosen: frozenset[int], selected: list[Candidate]) -> None:
    """Check that every selected vertex settles the level below its component exactly once.

    Vertices it touches there have no other chosen neighbour, the rest are
    dominated exactly once from a covering component, and chosen vertices of
    free components reach nothing on that level.
    """
    for entry in selected:
        below = entry.dominated | entry.undominated
        for x in sorted(entry.dominated):
            if chosen & graph.closed_neighborhood(x) != {entry.vertex}:
                raise VerificationError(
                    f"vertex {x} below {entry.vertex} ({entry.case.name}) is dominated more than once"
                )
        for u in sorted(entry.undominated):
            dominators = chosen & graph.neighbors(u)
            if len(dominators) != 1:
                raise VerificationError(
                    f"vertex {u} below {entry.vertex} ({entry.case.name}) has dominators {sorted(dominators)}"
                )
            (d,) = dominators
            if tree.node_of[d] not in entry.covering_components:
                raise VerificationError(
                    f"vertex {u} below {entry.vertex} is dominated from component {tree.node_of[d]},"
                    f" expected one of {list(entry.covering_components)}"
                )
        for index in entry.free_components:
            for d in sorted(chosen & tree.nodes[index].vertices):
                if graph.neighbors(d) & below:
                    raise VerificationError(f"vertex {d} of free component {index} reaches the level above it")
        logger.debug("level_checked", vertex=entry.vertex, case=entry.case.name, node=entry.node)


def _check_root_separation(graph: Graph, tree: ComponentTree) -> None:
    first = tree.levels.level(1)
    second = tree.levels.level(2)
    for u in sorted(first):
        if graph.neighbors(u) & second:
            assert first - graph.closed_neighborhood(u), (
                f"level-1 vertex {u} reaches level 2 but is adjacent to all of level 1"
            )


def v_maximal_wed(
    graph: Graph,
    weights: WeightMap,
    v: int,
    poset: NeighborhoodPoset | None = None,
) -> EdsSolution | None:
    """Minimum weight e.d.s. of the component of ``v`` that contains ``v``.

    ``v`` must be maximal in the neighbourhood poset. Returns ``None`` when no
    such e.d.s. exists or when ``v`` itself is forbidden.
    """
    if poset is None:
        poset = neighborhood_poset(graph)
    if not poset.is_maximal(v):
        raise NotMaximalError(v, min(poset.upper[v]))
    if not weights.is_finite(v):
        return None

    tree = component_tree(graph, v)
    _check_root_separation(graph, tree)
    table = compute_candidates(tree, weights)
    start = table.candidate(0, v)
    if start is None:
        return None

    chosen, selected = _reconstruct(table, start)
    check_levels(graph, tree, chosen, selected)
    sub, kept = graph.induced_subgraph(tree.vertices())
    local = {old: new for new, old in enumerate(kept)}
    if not is_eds(sub, [local[x] for x in chosen]):
        raise VerificationError(f"reconstruction from root {v} is not an e.d.s.: {sorted(chosen)}")
    total = weights.total(chosen)
    if total != start.weight:
        raise VerificationError(f"reconstruction from root {v} weighs {total}, table says {start.weight}")
    return EdsSolution(chosen, total, Engine.S123)


def _better(candidate: tuple[int, list[int]], best: tuple[int, list[int]] | None) -> bool:
    return best is None or candidate < best


def _solve_connected(graph: Graph, weights: WeightMap) -> frozenset[int] | None:
    """Cheapest e.d.s. of a connected working graph, or ``None``."""
    poset = neighborhood_poset(graph)
    best: tuple[int, list[int]] | None = None

    for v in poset.maximal_elements():
        if weights.is_finite(v):
            try:
                found = v_maximal_wed(graph, weights, v, poset)
            except StructureViolationError as error:
                logger.debug("root_skipped", root=v, reason=error.message)
                found = None
            if found is not None and _better((found.weight, found.sorted_vertices()), best):
                best = (found.weight, found.sorted_vertices())

        if not poset.lower[v]:
            continue

        # v can only be dominated by a vertex below it; each such x rules
        # out the neighbours of v it does not reach
        blocked: set[int] = set()
        for x in poset.lower[v]:
            blocked |= graph.neighbors(v) - graph.closed_neighborhood(x)
        reduced = weights.with_infinite(blocked)
        rest, kept = graph.induced_subgraph(u for u in graph.vertices() if u != v)
        rest_weights = reduced.restrict(kept)
        logger.debug("reduce_vertex", vertex=v, blocked=sorted(blocked), remaining=rest.n)

        combined: list[int] | None = []
        for part in components(rest):
            piece, piece_kept = rest.induced_subgraph(part)
            solved = _solve_connected(piece, rest_weights.restrict(piece_kept))
            if solved is None:
                combined = None
                break
            combined.extend(kept[piece_kept[x]] for x in solved)

        if combined is not None and is_eds(graph, combined):
            weight = weights.total(combined)
            if _better((weight, sorted(combined)), best):
                best = (weight, sorted(combined))
        break

    if best is None:
        return None
    return frozenset(best[1])


def s123_wed(graph: Graph, weights: WeightMap) -> EdsSolution | None:
    """Minimum weight e.d.s. of a chordal graph, exact when it is S_{1,2,3}-free.

    Raises :class:`NotChordalError` for non-chordal inputs. On other chordal
    graphs the result is always a genuine e.d.s. but ``None`` may be returned
    even though one exists.
    """
    require_chordal(graph)
    chosen: set[int] = set()
    for part in components(graph):
        piece, kept = graph.induced_subgraph(part)
        solved = _solve_connected(piece, weights.restrict(kept))
        if solved is None:
            logger.debug("component_without_eds", component=list(kept))
            return None
        chosen.update(kept[x] for x in solved)
    return verified_solution(graph, weights, chosen, Engine.S123)
