"""
Tests for the e.d.s. predicate, the brute-force engine and the exact cover solver.
"""

import random

import pytest


class TestIsEds:
    def test_path_and_cycle(self):
        """Test the predicate on P4 and C4."""
        from app.domain.services.catalog import cycle, path
        from app.domain.services.eds import is_eds

        assert is_eds(path(4), {0, 3})
        assert not is_eds(path(4), {1, 3})
        assert not is_eds(path(4), {1})
        assert not any(is_eds(cycle(4), s) for s in [{0}, {0, 1}, {0, 2}])

    def test_empty_graph(self):
        """Test that the empty set dominates the empty graph."""
        from app.domain.services.eds import is_eds
        from app.domain.value_objects.graph import Graph

        assert is_eds(Graph.empty(), set())
        assert not is_eds(Graph.empty(1), set())

    def test_unknown_vertex(self):
        """Test that vertices outside the graph are rejected."""
        from app.domain.exceptions import InvalidGraphError
        from app.domain.services.catalog import path
        from app.domain.services.eds import is_eds

        with pytest.raises(InvalidGraphError):
            is_eds(path(2), {5})

    def test_verified_solution(self):
        """Test that wrapping re-checks the set."""
        from app.domain.exceptions import VerificationError
        from app.domain.services.catalog import path
        from app.domain.services.eds import verified_solution
        from app.domain.value_objects.solution import Engine
        from app.domain.value_objects.weights import INFINITY, WeightMap

        solution = verified_solution(path(3), WeightMap([1, 4, 1]), {1}, Engine.SQUARE)
        assert solution.weight == 4
        assert solution.engine is Engine.SQUARE

        with pytest.raises(VerificationError):
            verified_solution(path(3), WeightMap.uniform(3), {0, 2}, Engine.S123)
        with pytest.raises(VerificationError):
            verified_solution(path(3), WeightMap([1, INFINITY, 1]), {1}, Engine.S123)


class TestBruteForce:
    """Test the exhaustive engine."""

    def test_unique_solution_of_p4(self):
        """Test P4 with unit weights."""
        from app.domain.services.catalog import path
        from app.domain.services.eds import brute_force_wed
        from app.domain.value_objects.weights import WeightMap

        solution = brute_force_wed(path(4), WeightMap.uniform(4))
        assert solution.sorted_vertices() == [0, 3]
        assert solution.weight == 2

    def test_cycle_has_none(self):
        """Test that C4 has no e.d.s."""
        from app.domain.services.catalog import cycle
        from app.domain.services.eds import brute_force_wed
        from app.domain.value_objects.weights import WeightMap

        assert brute_force_wed(cycle(4), WeightMap.uniform(4)) is None

    def test_weighted_cases(self):
        """Test weighted triangle and 2K2."""
        from app.domain.services.catalog import clique, named
        from app.domain.services.eds import brute_force_wed
        from app.domain.value_objects.weights import WeightMap

        triangle = brute_force_wed(clique(3), WeightMap([4, 1, 9]))
        assert (triangle.sorted_vertices(), triangle.weight) == ([1], 1)

        pairs = brute_force_wed(named("2P2"), WeightMap([1, 2, 3, 4]))
        assert (pairs.sorted_vertices(), pairs.weight) == ([0, 2], 4)

    def test_infinite_weights(self):
        """Test that forbidden vertices are never chosen."""
        from app.domain.services.catalog import path
        from app.domain.services.eds import brute_force_wed
        from app.domain.value_objects.weights import INFINITY, WeightMap

        solution = brute_force_wed(path(5), WeightMap([INFINITY, 1, 1, 1, 1]))
        assert solution.sorted_vertices() == [1, 4]
        assert brute_force_wed(path(3), WeightMap([1, INFINITY, 1])) is None

    def test_zero_weights_allowed(self):
        """Test that zero weights are finite."""
        from app.domain.services.catalog import star
        from app.domain.services.eds import brute_force_wed
        from app.domain.value_objects.weights import WeightMap

        solution = brute_force_wed(star(3), WeightMap([0, 0, 0, 0]))
        assert solution.weight == 0
        assert solution.sorted_vertices() == [0]

    def test_empty_graph(self):
        """Test the empty graph."""
        from app.domain.services.eds import brute_force_wed
        from app.domain.value_objects.graph import Graph
        from app.domain.value_objects.weights import WeightMap

        solution = brute_force_wed(Graph.empty(), WeightMap([]))
        assert len(solution) == 0
        assert solution.weight == 0

    def test_size_guard(self):
        """Test the vertex limit."""
        from app.domain.exceptions import InputTooLargeError
        from app.domain.services.eds import brute_force_wed
        from app.domain.value_objects.graph import Graph
        from app.domain.value_objects.weights import WeightMap

        with pytest.raises(InputTooLargeError):
            brute_force_wed(Graph.empty(25), WeightMap.uniform(25))
        with pytest.raises(InputTooLargeError):
            brute_force_wed(Graph.empty(5), WeightMap.uniform(5), max_vertices=4)

    def test_weight_count_mismatch(self):
        """Test that weights must match the graph."""
        from app.domain.exceptions import InvalidGraphError
        from app.domain.services.catalog import path
        from app.domain.services.eds import brute_force_wed
        from app.domain.value_objects.weights import WeightMap

        with pytest.raises(InvalidGraphError):
            brute_force_wed(path(3), WeightMap.uniform(2))

    def test_matches_subset_enumeration(self, enumerate_eds):
        """Test optimal weight against plain subset enumeration on random graphs."""
        from itertools import combinations

        from app.domain.services.eds import brute_force_wed, is_eds
        from app.domain.value_objects.graph import Graph
        from app.domain.value_objects.weights import INFINITY, WeightMap

        rng = random.Random(21)
        for _ in range(120):
            n = rng.randint(1, 9)
            graph = Graph.from_edge_list(
                n, [e for e in combinations(range(n), 2) if rng.random() < rng.choice([0.2, 0.4])]
            )
            weights = WeightMap(INFINITY if rng.random() < 0.1 else rng.randint(0, 6) for _ in range(n))
            found = brute_force_wed(graph, weights)
            expected = enumerate_eds(graph, weights)
            if expected is None:
                assert found is None
            else:
                assert found is not None
                assert found.weight == expected[1]
                assert is_eds(graph, found.vertices)


class TestX3cSolve:
    """Test the exact cover solver and its agreement with the reduction."""

    @pytest.mark.parametrize(
        "n,triples,expected",
        [
            (3, [[0, 1, 2]], (0,)),
            (6, [[0, 1, 2], [2, 3, 4]], None),
            (6, [[0, 1, 2], [3, 4, 5]], (0, 1)),
            (6, [[0, 1, 2], [2, 3, 4], [2, 4, 5]], None),
            (0, [], ()),
        ],
    )
    def test_small_instances(self, n, triples, expected):
        """Test exact cover on hand-made instances."""
        from app.domain.services.eds import x3c_solve
        from app.domain.value_objects.x3c import X3cInstance

        assert x3c_solve(X3cInstance(n, triples)) == expected

    def test_triple_guard(self):
        """Test the triple limit."""
        from app.domain.exceptions import InputTooLargeError
        from app.domain.services.eds import x3c_solve
        from app.domain.value_objects.x3c import X3cInstance

        with pytest.raises(InputTooLargeError):
            x3c_solve(X3cInstance(3, [[0, 1, 2]] * 21))
        assert x3c_solve(X3cInstance(3, [[0, 1, 2]] * 21), max_triples=21) == (0,)

    def test_non_covering_instance_has_eds_without_cover(self):
        """Test that an uncovered element lets the reduction graph have an e.d.s. anyway."""
        from app.domain.services.eds import brute_force_wed, x3c_solve
        from app.domain.services.generators import x3c_to_graph
        from app.domain.value_objects.weights import WeightMap
        from app.domain.value_objects.x3c import X3cInstance

        instance = X3cInstance(6, [[0, 1, 2], [2, 3, 4]])
        graph = x3c_to_graph(instance).graph
        solution = brute_force_wed(graph, WeightMap.uniform(graph.n))
        assert x3c_solve(instance) is None
        assert solution.sorted_vertices() == [5, 7, 9]
        assert solution.weight == 3

    def test_reduction_equivalence_on_covering_instances(self):
        """Test that covering instances have an exact cover iff the reduction graph has an e.d.s."""
        from app.domain.services.eds import brute_force_wed, is_eds, x3c_solve
        from app.domain.services.generators import random_x3c_instance, x3c_to_graph
        from app.domain.value_objects.weights import WeightMap

        for seed in range(40):
            instance = random_x3c_instance(6, 2 + seed % 4, seed, covering=True)
            reduction = x3c_to_graph(instance)
            graph = reduction.graph
            cover = x3c_solve(instance)
            solution = brute_force_wed(graph, WeightMap.uniform(graph.n))
            assert (cover is None) == (solution is None)
            if cover is not None:
                assert is_eds(graph, reduction.eds_from_cover(cover))
                assert instance.is_exact_cover(reduction.cover_from_eds(solution.vertices))
