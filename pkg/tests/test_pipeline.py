import json
from pathlib import Path

import networkx as nx
import pytest

from core.constructions import ConstructionSpec
from core.finite_geometry import brown_graph
from core.graph import Graph
from core.graph_io import read_graph, write_edge_list, write_graph6
from integrations.standalone.main import EXIT_ERROR, EXIT_FAILED, EXIT_OK, main
from integrations.standalone.pipeline import run_construct, run_verify


@pytest.fixture
def files(tmp_path, petersen, wheel, f3_5_20):
    paths = {
        "petersen": write_graph6(petersen, tmp_path / "petersen.g6"),
        "wheel": write_edge_list(wheel, tmp_path / "wheel.txt"),
        "chain": write_edge_list(f3_5_20, tmp_path / "f3_5_20.txt", {"family": "splice"}),
        "brown": write_edge_list(brown_graph(3), tmp_path / "brown3.txt"),
        "heawood": write_edge_list(Graph.from_networkx(nx.heawood_graph()), tmp_path / "heawood.txt"),
    }
    return {name: str(path) for name, path in paths.items()}


def _json(capsys):
    return json.loads(capsys.readouterr().out)


class TestAnalyze:
    def test_json(self, files, capsys):
        assert main(["--json", "analyze", files["petersen"]]) == EXIT_OK
        report = _json(capsys)["report"]
        assert (report["n"], report["g"], report["d"], report["r"], report["q"]) == (10, 5, 2, 2, 5)
        assert report["equatorial"] is False

    def test_rendered(self, files):
        assert main(["analyze", files["chain"], "--partition"]) == EXIT_OK

    def test_cap_below_girth(self, files, capsys):
        assert main(["--json", "analyze", files["petersen"], "--cap", "4"]) == EXIT_ERROR
        assert "CapBelowGirth" in _json(capsys)["error"]

    def test_cap_shorter_than_any_cycle_is_a_usage_error(self, files):
        with pytest.raises(SystemExit) as info:
            main(["analyze", files["petersen"], "--cap", "2"])
        assert info.value.code == 2

    def test_missing_file(self, tmp_path, capsys):
        assert main(["--json", "analyze", str(tmp_path / "nope.txt")]) == EXIT_ERROR
        assert "FileNotFoundError" in _json(capsys)["error"]


class TestConstruct:
    def test_brown(self, tmp_path, capsys):
        code = main(["--json", "construct", "brown", "--t", "4", "--output-dir", str(tmp_path), "--verify"])
        assert code == EXIT_OK
        result = _json(capsys)
        assert result["expected"]["n"] == 21
        assert result["actual"]["n"] == 21
        g = read_graph(result["files"]["edges"])
        assert g.n == 21
        assert read_graph(result["files"]["graph6"]).edges == g.edges

    def test_splice_verified(self, tmp_path):
        result = run_construct(ConstructionSpec(family="splice", delta=3, g=5, j=3), output_dir=tmp_path, verify=True)
        assert result["success"], result["error"]
        assert result["actual"] == {"n": 30, "delta": 3, "g": 5, "q": 15}
        header = Path(result["files"]["edges"]).read_text().splitlines()[0]
        assert header.startswith("#")

    def test_layered(self, tmp_path):
        code = main(["construct", "layered", "--girth", "3", "--sizes", "1,3,1", "--q", "12",
                     "--output-dir", str(tmp_path), "--verify"])
        assert code == EXIT_OK

    def test_invalid_j(self, tmp_path, capsys):
        assert main(["--json", "construct", "gadget11", "--j", "2", "--output-dir", str(tmp_path)]) == EXIT_ERROR
        assert "InvalidJ" in _json(capsys)["error"]

    def test_missing_parameter(self, tmp_path):
        assert main(["construct", "splice", "--delta", "3", "--output-dir", str(tmp_path)]) == EXIT_ERROR

    def test_quotient_of_non_equatorial_input(self, tmp_path, petersen):
        base = write_edge_list(petersen, tmp_path / "p.txt")
        result = run_construct(ConstructionSpec(family="quotient"), output_dir=tmp_path, input_path=str(base))
        assert not result["success"]
        assert "NotEquatorial" in result["error"]


class TestVerify:
    def test_unknown_theorem(self, files, capsys):
        assert main(["--json", "verify", "pythagoras", files["wheel"]]) == EXIT_ERROR
        assert "UnknownTheorem" in _json(capsys)["error"]

    def test_lower_bound_outside_regime(self, files, capsys):
        assert main(["--json", "verify", "lower-bound", files["wheel"]]) == EXIT_OK
        entry = _json(capsys)["results"][0]
        assert entry["passed"] is True
        assert entry["applies"] is False
        assert entry["bound"]["lower_bound_numerator"] == 20

    def test_lower_bound_tight(self, files):
        result = run_verify("lower-bound", [files["chain"]])
        assert result["passed"]
        assert result["results"][0]["bound"]["tight"]

    @pytest.mark.parametrize("theorem", ["structure", "uniqueness", "retraction", "k-degree", "characterize"])
    def test_chain_theorems(self, files, theorem):
        result = run_verify(theorem, [files["chain"]])
        assert result["success"], result["error"]
        assert result["passed"]

    def test_brown_properties(self, files):
        assert main(["verify", "brown-properties", files["brown"]]) == EXIT_OK
        assert main(["verify", "brown-properties", files["petersen"]]) == EXIT_FAILED

    def test_several_files(self, files):
        result = run_verify("k-degree", [files["petersen"], files["chain"]])
        assert [entry["path"] for entry in result["results"]] == [files["petersen"], files["chain"]]

    def test_characterize_out_of_range(self, files, capsys):
        assert main(["--json", "verify", "characterize", files["heawood"]]) == EXIT_ERROR
        assert "OutOfCharacterizedRange" in _json(capsys)["error"]

    def test_structure_on_non_equatorial(self, files):
        # q = 5 <= 6k+3: the partition is undefined
        assert main(["verify", "structure", files["petersen"]]) == EXIT_ERROR


class TestSearch:
    def test_wheel(self, tmp_path, capsys):
        code = main(["--json", "search", "--delta", "3", "--girth", "3", "--equator", "5", "--max-n", "7",
                     "--output-dir", str(tmp_path)])
        assert code == EXIT_OK
        result = _json(capsys)
        assert result["result"]["min_order"] == 6
        witnesses = Path(result["files"]["witnesses"]).read_text().split()
        assert witnesses == result["result"]["witnesses"]

    def test_exhausted(self, capsys):
        assert main(["--json", "search", "--delta", "3", "--girth", "5", "--equator", "5", "--max-n", "9"]) == EXIT_OK
        result = _json(capsys)
        assert result["result"]["exhausted"] is True
        assert result["files"] == {}

    def test_too_large(self, capsys):
        assert main(["--json", "search", "--delta", "3", "--girth", "5", "--equator", "20", "--max-n", "20"]) == EXIT_ERROR
        assert "SpecTooLarge" in _json(capsys)["error"]


class TestMisc:
    def test_report(self, capsys):
        assert main(["--json", "report"]) == EXIT_OK
        result = _json(capsys)
        assert [row["cage"] for row in result["girth5"]][:4] == [10, 19, 30, 40]
        assert result["catalog"]

    def test_report_rendered(self):
        assert main(["report"]) == EXIT_OK

    def test_no_command(self):
        assert main([]) == EXIT_ERROR

    def test_show_config(self):
        assert main(["--show-config"]) == EXIT_OK
