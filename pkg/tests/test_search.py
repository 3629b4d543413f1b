import json

import pytest

from core.graph import are_isomorphic, complete_bipartite_graph, complete_graph, wheel_graph
from core.graph_io import to_graph6
from core.search import (
    SearchError,
    SearchSpec,
    SpecTooLarge,
    _check_lower_bound,
    generate_graphs,
    min_order_search,
)


class TestGeneration:
    def test_connected_counts(self):
        assert [len(generate_graphs(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]

    @pytest.mark.slow
    def test_connected_count_order_eight(self):
        assert len(generate_graphs(8)) == 11117

    def test_triangle_free_counts(self):
        assert [len(generate_graphs(n, girth_min=4)) for n in range(1, 7)] == [1, 1, 1, 3, 6, 19]

    def test_classes_are_distinct(self):
        graphs = generate_graphs(6, delta_min=2)
        for i, a in enumerate(graphs):
            for b in graphs[i + 1:]:
                assert not are_isomorphic(a, b)
        assert all(min(g.degrees) >= 2 for g in graphs)

    def test_cubic_on_six(self):
        graphs = generate_graphs(6, delta_min=3, girth_min=4)
        assert len(graphs) == 1
        assert are_isomorphic(graphs[0], complete_bipartite_graph(3, 3))

    def test_counter(self):
        counter = [0]
        generate_graphs(5, counter=counter)
        assert counter[0] > 21

    def test_empty(self):
        assert generate_graphs(0) == []


class TestSpec:
    def test_lower_bound(self):
        assert SearchSpec(3, 3, 5, 7).lower_bound() == 5
        assert SearchSpec(3, 5, 5, 9).lower_bound() == 10
        assert SearchSpec(0, 3, 4, 6).lower_bound() == 4

    def test_too_large(self):
        with pytest.raises(SpecTooLarge):
            SearchSpec(3, 5, 20, 20).validate()
        with pytest.raises(SpecTooLarge):
            min_order_search(SearchSpec(3, 5, 20, 20))

    def test_inconsistent(self):
        with pytest.raises(SearchError):
            SearchSpec(3, 5, 4, 10).validate()
        with pytest.raises(SearchError):
            SearchSpec(3, 2, 4, 10).validate()

    def test_lower_bound_guard(self):
        _check_lower_bound(SearchSpec(3, 3, 5, 7), 6)
        with pytest.raises(SearchError):
            _check_lower_bound(SearchSpec(3, 3, 12, 12), 10)


class TestMinOrder:
    def test_wheel_is_smallest(self):
        result = min_order_search(SearchSpec(delta_min=3, g=3, q=5, n_max=7))
        assert result.min_order == 6
        assert not result.exhausted
        assert any(are_isomorphic(w, wheel_graph(5)) for w in result.witnesses)
        assert result.orders_searched == [5, 6]
        assert result.nodes > 0

    def test_triangle(self):
        result = min_order_search(SearchSpec(delta_min=2, g=3, q=3, n_max=4))
        assert result.min_order == 3
        assert [to_graph6(w) for w in result.witnesses] == [to_graph6(complete_graph(3))]

    def test_k33(self):
        result = min_order_search(SearchSpec(delta_min=3, g=4, q=4, n_max=6))
        assert result.min_order == 6
        assert len(result.witnesses) == 1
        assert are_isomorphic(result.witnesses[0], complete_bipartite_graph(3, 3))

    def test_exhausted_below_moore_bound(self):
        result = min_order_search(SearchSpec(delta_min=3, g=5, q=5, n_max=9))
        assert result.exhausted
        assert result.min_order is None
        assert result.witnesses == []
        assert result.orders_searched == []

    def test_exhausted_after_search(self):
        # K2,3 is the only candidate at order 5 and its equator is 4
        result = min_order_search(SearchSpec(delta_min=2, g=4, q=5, n_max=5))
        assert result.exhausted
        assert result.orders_searched == [5]

    def test_witnesses_pairwise_non_isomorphic(self):
        result = min_order_search(SearchSpec(delta_min=2, g=3, q=5, n_max=6))
        ws = result.witnesses
        assert result.min_order == 6
        assert len(ws) >= 2
        assert all(not are_isomorphic(a, b) for i, a in enumerate(ws) for b in ws[i + 1:])

    def test_parallel_matches_serial(self):
        spec = SearchSpec(delta_min=3, g=3, q=5, n_max=7)
        serial = min_order_search(spec, threads=1)
        parallel = min_order_search(spec, threads=2)
        assert [to_graph6(w) for w in serial.witnesses] == [to_graph6(w) for w in parallel.witnesses]

    def test_to_dict(self):
        data = min_order_search(SearchSpec(delta_min=3, g=4, q=4, n_max=6)).to_dict()
        assert data["min_order"] == 6
        assert data["spec"]["g"] == 4
        assert isinstance(data["witnesses"][0], str)


class TestCheckpoint:
    def test_written_and_reused(self, tmp_path):
        path = tmp_path / "search.json"
        spec = SearchSpec(delta_min=3, g=3, q=5, n_max=7)
        first = min_order_search(spec, checkpoint=path)
        state = json.loads(path.read_text())
        assert state["spec"] == spec.to_dict()
        assert state["completed"] == [5]

        again = min_order_search(spec, checkpoint=path)
        assert again.min_order == first.min_order
        assert again.orders_searched == [6]
        assert [to_graph6(w) for w in again.witnesses] == [to_graph6(w) for w in first.witnesses]

    def test_resume_from_frontier(self, tmp_path):
        spec = SearchSpec(delta_min=3, g=3, q=5, n_max=7)
        levels = {}
        generate_graphs(6, delta_min=3, on_level=lambda order, level: levels.__setitem__(order, level))
        path = tmp_path / "search.json"
        path.write_text(json.dumps({
            "spec": spec.to_dict(),
            "completed": [5],
            "nodes": 0,
            "target": 6,
            "frontier_order": 5,
            "frontier": [to_graph6(g) for g in levels[5]],
        }))
        result = min_order_search(spec, checkpoint=path)
        assert result.min_order == 6
        assert any(are_isomorphic(w, wheel_graph(5)) for w in result.witnesses)

    def test_foreign_checkpoint_ignored(self, tmp_path):
        path = tmp_path / "search.json"
        path.write_text(json.dumps({"spec": {"g": 9}, "completed": [5, 6, 7]}))
        result = min_order_search(SearchSpec(delta_min=3, g=3, q=5, n_max=7), checkpoint=path)
        assert result.min_order == 6
