import pytest

from core.graph import are_isomorphic, cycle_graph
from core.graph_io import (
    ParseError,
    format_edge_list,
    from_graph6,
    parse_edge_list,
    parse_graph6,
    read_graph,
    read_graph_with_metadata,
    read_graphs,
    to_graph6,
    write_edge_list,
    write_graph6,
)


class TestEdgeList:
    def test_parse(self):
        g, meta = parse_edge_list("3 3\n0 1\n1 2\n2 0\n")
        assert g.n == 3 and g.m == 3
        assert meta == {}

    def test_metadata_header(self):
        text = "# family: splice\n# parameters: {j: 4}\n3 2\n0 1\n1 2\n"
        g, meta = parse_edge_list(text)
        assert meta == {"family": "splice", "parameters": {"j": 4}}
        assert g.m == 2

    def test_malformed_token_reports_line(self):
        with pytest.raises(ParseError) as info:
            parse_edge_list("4 2\n0 1\n3 x\n")
        assert info.value.line == 3
        assert "line 3" in str(info.value)

    def test_edge_count_mismatch(self):
        with pytest.raises(ParseError):
            parse_edge_list("3 3\n0 1\n")

    def test_endpoint_out_of_range(self):
        with pytest.raises(ParseError) as info:
            parse_edge_list("2 1\n0 2\n")
        assert info.value.line == 2

    def test_self_loop(self):
        with pytest.raises(ParseError):
            parse_edge_list("2 1\n1 1\n")

    def test_format_keeps_metadata(self, petersen):
        text = format_edge_list(petersen, {"family": "catalog"})
        assert text.startswith("# family: catalog\n")
        g, meta = parse_edge_list(text)
        assert g == petersen
        assert meta["family"] == "catalog"

    def test_header_is_one_key_per_line(self, petersen):
        text = format_edge_list(petersen, {"family": "splice", "parameters": {"delta": 3, "j": 4}})
        header = [line for line in text.splitlines() if line.startswith("#")]
        assert header == ["# family: splice", "# parameters:", "#   delta: 3", "#   j: 4"]
        assert parse_edge_list(text)[1]["parameters"] == {"delta": 3, "j": 4}


class TestGraph6:
    def test_keeps_labelling(self, petersen):
        assert from_graph6(to_graph6(petersen)) == petersen

    def test_decode(self, petersen):
        assert are_isomorphic(from_graph6("IheA@GUAo"), petersen)

    def test_header_prefix(self):
        assert from_graph6(">>graph6<<Bw").n == 3

    def test_bad_string(self):
        with pytest.raises(ParseError):
            from_graph6("I!!")

    def test_multi_line(self):
        graphs = parse_graph6("# comment\nBw\nCl\n")
        assert [g.n for g in graphs] == [3, 4]


class TestFiles:
    def test_edge_list_file(self, tmp_path, petersen):
        path = write_edge_list(petersen, tmp_path / "p.txt", {"family": "catalog"})
        g, meta = read_graph_with_metadata(path)
        assert g == petersen
        assert meta["family"] == "catalog"

    def test_graph6_file_by_suffix(self, tmp_path):
        path = write_graph6([cycle_graph(5), cycle_graph(6)], tmp_path / "c.g6")
        assert read_graph(path) == cycle_graph(5)
        assert [g.n for g in read_graphs(path)] == [5, 6]

    def test_graph6_detected_by_content(self, tmp_path, petersen):
        path = tmp_path / "petersen.dat"
        path.write_text(to_graph6(petersen) + "\n")
        assert read_graph(path) == petersen

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            read_graph(tmp_path / "nope.txt")
