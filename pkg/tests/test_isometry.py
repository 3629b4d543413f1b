import networkx as nx
import pytest

from conftest import oracle_equator, oracle_girth, oracle_is_isometric
from core.graph import (
    Graph,
    all_pairs_distances,
    build_graph,
    complete_graph,
    cycle_graph,
    girth,
    is_connected,
)
from core.isometry import (
    CapBelowGirth,
    IsometricCycle,
    NotACycle,
    cycle_metric,
    equator,
    find_girth_cycle,
    find_isometric_cycle,
    is_isometric_cycle,
    iter_isometric_cycles,
)
from core.search import generate_graphs


class TestCertification:
    def test_cycle_metric(self):
        assert cycle_metric(5).tolist()[0] == [0, 1, 2, 2, 1]

    def test_girth_cycle_is_isometric(self, petersen):
        dm = all_pairs_distances(petersen)
        assert is_isometric_cycle(petersen, dm, [0, 1, 2, 3, 4])

    def test_long_cycle_with_shortcut(self, wheel):
        # rim plus hub: 0,1,2,5 is a 4-cycle but d(1,5) = 1
        dm = all_pairs_distances(wheel)
        assert not is_isometric_cycle(wheel, dm, [0, 1, 2, 5])
        assert is_isometric_cycle(wheel, dm, [0, 1, 2, 3, 4])

    def test_not_a_cycle(self, petersen):
        dm = all_pairs_distances(petersen)
        with pytest.raises(NotACycle):
            is_isometric_cycle(petersen, dm, [0, 1])
        with pytest.raises(NotACycle):
            is_isometric_cycle(petersen, dm, [0, 1, 0, 1])
        with pytest.raises(NotACycle):
            is_isometric_cycle(petersen, dm, [0, 1, 2, 3, 5])

    def test_canonical_rotation(self):
        c = IsometricCycle((3, 4, 0, 1, 2)).canonical()
        assert c.vertices == (0, 1, 2, 3, 4)
        assert IsometricCycle((0, 4, 3, 2, 1)).canonical().vertices == (0, 1, 2, 3, 4)


class TestEnumeration:
    def test_petersen_pentagons(self, petersen):
        assert len(list(iter_isometric_cycles(petersen, 5))) == 12
        assert len(list(iter_isometric_cycles(petersen, 5, through=0))) == 6
        assert list(iter_isometric_cycles(petersen, 6)) == []

    def test_limit(self, petersen):
        assert len(list(iter_isometric_cycles(petersen, 5, limit=3))) == 3

    def test_cycles_are_canonical_and_distinct(self, k33):
        cycles = list(iter_isometric_cycles(k33, 4))
        assert len(cycles) == 9
        assert all(c.canonical() == c for c in cycles)
        assert len(set(cycles)) == len(cycles)

    def test_girth_cycle(self, petersen):
        assert find_girth_cycle(petersen).vertices == (0, 1, 2, 3, 4)
        assert find_girth_cycle(build_graph([(0, 1), (1, 2)], 3)) is None

    def test_find_none(self, petersen):
        assert find_isometric_cycle(petersen, 7) is None


class TestEquator:
    @pytest.mark.parametrize("n", [3, 4, 7, 10])
    def test_cycle(self, n):
        assert equator(cycle_graph(n)).q == n

    def test_named(self, petersen, wheel, k33):
        assert equator(petersen).q == 5
        assert equator(wheel).q == 5
        assert equator(k33).q == 4
        assert equator(complete_graph(5)).q == 3

    def test_bipartite_cubes(self):
        assert equator(Graph.from_networkx(nx.hypercube_graph(3))).q == 6
        assert equator(Graph.from_networkx(nx.heawood_graph())).q == 6

    def test_forest(self):
        result = equator(build_graph([(0, 1), (1, 2), (1, 3)], 4))
        assert result.q == 0
        assert result.witness is None

    def test_witness_certified(self, petersen):
        result = equator(petersen)
        dm = all_pairs_distances(petersen)
        assert result.witness.length == result.q
        assert is_isometric_cycle(petersen, dm, result.witness)
        assert oracle_is_isometric(petersen.to_networkx(), list(result.witness))
        assert not result.search_capped

    def test_cap(self, wheel):
        capped = equator(wheel, cap=4)
        assert capped.q == 3
        assert capped.search_capped
        assert not equator(wheel, cap=50).search_capped

    def test_cap_below_girth(self, petersen):
        with pytest.raises(CapBelowGirth):
            equator(petersen, cap=4)
        assert equator(petersen, cap=5).q == 5

    def test_parallel_matches_serial(self, petersen, wheel):
        for g in (petersen, wheel):
            assert equator(g, threads=2) == equator(g, threads=1)

    def test_disconnected_takes_longest_component(self):
        from core.graph import disjoint_union
        g, _ = disjoint_union([cycle_graph(4), cycle_graph(6)])
        assert equator(g).q == 6

    def test_matches_oracle_on_atlas(self):
        for h in nx.graph_atlas_g()[1:]:
            g = Graph.from_networkx(h)
            if not is_connected(g):
                continue
            assert equator(g).q == oracle_equator(g), h.edges()

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(1, 9))
    def test_matches_oracle_on_every_connected_graph(self, n):
        for g in generate_graphs(n):
            assert girth(g) == oracle_girth(g), g.edges
            assert equator(g).q == oracle_equator(g), g.edges
