import math

import networkx as nx
import pytest

from core.graph import (
    Disconnected,
    NotAnEdge,
    SelfLoop,
    UNREACHABLE,
    VertexOutOfRange,
    all_pairs_distances,
    are_isomorphic,
    build_graph,
    complete_bipartite_graph,
    complete_graph,
    components,
    cycle_graph,
    degree_profile,
    diameter_and_radius,
    disjoint_union,
    disk,
    edge_disk,
    girth,
    is_c4_free,
    is_connected,
    wheel_graph,
)


class TestBuildGraph:
    def test_duplicate_edges_collapse(self):
        g = build_graph([(0, 1), (1, 0), (1, 2)], 3)
        assert g.m == 2
        assert g.adjacency == ((1,), (0, 2), (1,))

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoop):
            build_graph([(0, 0)], 2)

    def test_vertex_out_of_range(self):
        with pytest.raises(VertexOutOfRange):
            build_graph([(0, 5)], 3)

    def test_edges_sorted(self):
        g = build_graph([(2, 0), (1, 0)], 3)
        assert g.edges == ((0, 1), (0, 2))

    def test_without_missing_edge(self):
        with pytest.raises(NotAnEdge):
            cycle_graph(4).without_edges([(0, 2)])

    def test_networkx_bridge(self, petersen):
        assert nx.is_isomorphic(petersen.to_networkx(), nx.petersen_graph())


class TestDistances:
    def test_cycle_distances(self):
        dm = all_pairs_distances(cycle_graph(7))
        assert dm(0, 3) == 3
        assert dm(0, 4) == 3
        assert dm.max_finite == 3

    def test_disconnected_marks_unreachable(self):
        g, _ = disjoint_union([cycle_graph(3), cycle_graph(3)])
        dm = all_pairs_distances(g)
        assert dm(0, 4) == UNREACHABLE
        assert not dm.is_connected
        assert not is_connected(g)
        assert components(g) == [[0, 1, 2], [3, 4, 5]]
        with pytest.raises(Disconnected):
            diameter_and_radius(g)

    def test_diameter_radius(self, petersen, wheel):
        assert diameter_and_radius(petersen) == (2, 2)
        assert diameter_and_radius(wheel) == (2, 1)

    def test_disks(self, petersen):
        assert disk(petersen, 0, 0) == frozenset({0})
        assert len(disk(petersen, 0, 1)) == 4
        assert len(disk(petersen, 0, 2)) == 10

    def test_edge_disk(self, k33):
        assert len(edge_disk(k33, (0, 3), 1)) == 6
        with pytest.raises(NotAnEdge):
            edge_disk(k33, (0, 1), 1)


class TestGirth:
    @pytest.mark.parametrize("n", [3, 4, 5, 8, 11])
    def test_cycles(self, n):
        assert girth(cycle_graph(n)) == n

    def test_forest(self):
        assert girth(build_graph([(0, 1), (1, 2), (1, 3)], 4)) == math.inf

    def test_named(self, petersen, k33, wheel):
        assert girth(petersen) == 5
        assert girth(k33) == 4
        assert girth(wheel) == 3
        assert girth(complete_graph(5)) == 3

    def test_heawood(self):
        from core.graph import Graph
        assert girth(Graph.from_networkx(nx.heawood_graph())) == 6

    def test_matches_networkx_on_atlas(self):
        from conftest import oracle_girth
        from core.graph import Graph
        for h in nx.graph_atlas_g()[1:]:
            g = Graph.from_networkx(h)
            assert girth(g) == oracle_girth(g)


class TestProfiles:
    def test_degree_profile(self, wheel):
        profile = degree_profile(wheel)
        assert profile.min_degree == 3
        assert profile.max_degree == 5
        assert not profile.is_regular
        assert profile.degree_histogram == {3: 5, 5: 1}

    def test_c4_free(self, petersen, k33):
        assert is_c4_free(petersen)
        assert not is_c4_free(k33)
        assert not is_c4_free(cycle_graph(4))
        assert is_c4_free(cycle_graph(5))

    def test_isomorphism(self, petersen):
        relabelled = petersen.relabel([9, 3, 1, 0, 2, 8, 7, 4, 5, 6])
        assert are_isomorphic(petersen, relabelled)
        assert not are_isomorphic(petersen, complete_bipartite_graph(5, 5))
        assert not are_isomorphic(wheel_graph(5), complete_graph(6))
