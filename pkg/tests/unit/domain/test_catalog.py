"""
Tests for the named graph catalog.
"""

import pytest


def _degrees(graph):
    return tuple(sorted((graph.degree(v) for v in graph.vertices()), reverse=True))


class TestFamilies:
    """Test the parametrised families."""

    def test_path_cycle_clique_star(self):
        """Test vertex and edge counts of the basic families."""
        from app.domain.services.catalog import clique, cycle, path, star

        assert (path(5).n, path(5).edge_count) == (5, 4)
        assert (cycle(5).n, cycle(5).edge_count) == (5, 5)
        assert clique(4).edge_count == 6
        assert star(3).degree(0) == 3
        assert path(1).edge_count == 0

    def test_short_cycle_rejected(self):
        """Test that cycles need at least three vertices."""
        from app.domain.exceptions import UnknownGraphNameError
        from app.domain.services.catalog import cycle

        with pytest.raises(UnknownGraphNameError):
            cycle(2)

    def test_spider_shape(self):
        """Test the degree sequence of S_{1,2,3}."""
        from app.domain.services.catalog import spider

        graph = spider(1, 2, 3)
        assert graph.n == 7
        assert _degrees(graph) == (3, 2, 2, 2, 1, 1, 1)

    def test_spider_with_empty_legs_is_a_path(self):
        """Test that S_{0,0,3} is exactly P4."""
        from app.domain.services.catalog import path, spider

        assert spider(0, 0, 3) == path(4)


class TestLookup:
    """Test name resolution."""

    @pytest.mark.parametrize(
        "name,n,m",
        [
            ("claw", 4, 3),
            ("chair", 5, 4),
            ("net", 6, 6),
            ("butterfly", 5, 6),
            ("bull", 5, 5),
            ("gem", 5, 7),
            ("H4", 5, 9),
            ("P6", 6, 5),
            ("C7", 7, 7),
            ("K1_4", 5, 4),
            ("S_1_2_3", 7, 6),
            ("2P3", 6, 4),
            ("K3+P2", 5, 4),
            ("4K1", 4, 0),
        ],
    )
    def test_sizes(self, name, n, m):
        """Test vertex and edge counts of catalog entries."""
        from app.domain.services.catalog import lookup

        graph = lookup(name).graph
        assert (graph.n, graph.edge_count) == (n, m)

    def test_union_components(self):
        """Test that unions are laid out part after part."""
        from app.domain.services.catalog import named
        from app.domain.services.graph_ops import components

        parts = components(named("2P3"))
        assert parts == [frozenset({0, 1, 2}), frozenset({3, 4, 5})]

    def test_unknown_names(self):
        """Test that unknown names raise an error that is also a KeyError."""
        from app.domain.exceptions import UnknownGraphNameError
        from app.domain.services.catalog import lookup

        for name in ["Q7", "", "P0", "C2", "2Q", "P3+"]:
            with pytest.raises(UnknownGraphNameError):
                lookup(name)
        with pytest.raises(KeyError):
            lookup("nonsense")

    def test_unknown_name_message(self):
        """Test the message carries the requested name."""
        from app.domain.exceptions import UnknownGraphNameError
        from app.domain.services.catalog import lookup

        with pytest.raises(UnknownGraphNameError) as exc_info:
            lookup("dodecahedron")
        assert str(exc_info.value) == "Unknown catalog graph: dodecahedron"
        assert exc_info.value.name == "dodecahedron"

    def test_sources(self):
        """Test that reconstructed structures are flagged."""
        from app.domain.services.catalog import GraphSource, lookup

        assert lookup("extended_gem").source is GraphSource.DERIVED_FROM_PROOF
        assert lookup("H1+P2").source is GraphSource.DERIVED_FROM_PROOF
        assert lookup("net").source is GraphSource.TEXT_DEFINED
        assert lookup("K3+P2").source is GraphSource.TEXT_DEFINED

    def test_catalog_names_sorted(self):
        """Test the listing of fixed names."""
        from app.domain.services.catalog import catalog_names

        names = catalog_names()
        assert names == sorted(names)
        assert {"net", "extended_gem", "H1", "H4", "co_P"} <= set(names)

    def test_every_fixed_name_resolves(self):
        """Test that every listed name builds a graph."""
        from app.domain.services.catalog import catalog_names, lookup

        for name in catalog_names():
            assert lookup(name).graph.n > 0


class TestResolveFamily:
    def test_preset_expansion(self):
        """Test preset expansion with duplicates dropped."""
        from app.domain.services.catalog import resolve_family

        family = resolve_family(["proposition1", "2P3", "net"])
        assert [entry.name for entry in family] == ["2P3", "K3+P3", "2K3", "butterfly", "net"]

    def test_unknown_member(self):
        """Test that a bad member fails the whole family."""
        from app.domain.exceptions import UnknownGraphNameError
        from app.domain.services.catalog import resolve_family

        with pytest.raises(UnknownGraphNameError):
            resolve_family(["net", "bogus"])


class TestExtendedGem:
    """Test the reconstructed extended gem against its known induced subgraphs."""

    def test_shape(self):
        """Test size, labels and chordality."""
        from app.domain.services.catalog import named
        from app.domain.services.chordal import is_chordal

        graph = named("extended_gem")
        assert graph.n == 8
        assert graph.edge_count == 10
        assert graph.labels == ("a", "b", "c", "p", "q", "r", "s", "t")
        assert is_chordal(graph)

    @pytest.mark.parametrize(
        "pattern,vertices",
        [
            ("S_1_2_2", {0, 3, 5, 6, 2, 7}),
            ("gem", {1, 3, 0, 2, 4}),
            ("chair", {0, 3, 2, 5, 6}),
            ("co_P", {0, 1, 2, 5, 6}),
            ("K3+P2", {1, 2, 4, 5, 6}),
        ],
    )
    def test_contains_named_subgraphs(self, pattern, vertices):
        """Test that the listed vertex sets induce the named graphs."""
        from app.domain.services.catalog import named
        from app.domain.services.subgraph import find_induced

        sub, _ = named("extended_gem").induced_subgraph(vertices)
        assert find_induced(sub, named(pattern)) is not None


class TestFourVertexGraphs:
    def test_eleven_distinct_graphs(self):
        """Test that the eleven four-vertex graphs are pairwise distinguishable."""
        from app.domain.services.catalog import four_vertex_graphs

        graphs = four_vertex_graphs()
        assert len(graphs) == 11
        assert all(graph.n == 4 for graph in graphs.values())
        signatures = {(graph.edge_count, _degrees(graph)) for graph in graphs.values()}
        assert len(signatures) == 11

    def test_pairwise_non_isomorphic(self, to_networkx):
        """Test non-isomorphism with networkx as the oracle."""
        import networkx as nx

        from app.domain.services.catalog import four_vertex_graphs

        graphs = [to_networkx(graph) for graph in four_vertex_graphs().values()]
        for i, first in enumerate(graphs):
            for second in graphs[i + 1 :]:
                assert not nx.is_isomorphic(first, second)
