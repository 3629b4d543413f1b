from core.analysis import analyze_graph
from core.graph import build_graph, cycle_graph, disjoint_union


def test_petersen(petersen):
    data = analyze_graph(petersen).to_dict()
    assert {k: data[k] for k in ("n", "m", "g", "d", "r", "q", "equatorial")} == {
        "n": 10, "m": 15, "g": 5, "d": 2, "r": 2, "q": 5, "equatorial": False,
    }
    assert data["is_regular"] and data["delta"] == 3
    assert data["bound"]["tight"] and not data["bound"]["regime_ok"]
    assert data["partition_sizes"] is None


def test_equatorial_chain(f3_5_20):
    report = analyze_graph(f3_5_20, with_partition=True)
    assert report.equatorial
    assert report.q == 20 and report.girth == 5
    assert len(report.partition_sizes) == 20
    assert sum(report.partition_sizes) == 40
    assert sorted(v for part in report.parts for v in part) == list(range(40))
    assert not report.notes


def test_wheel_witness(wheel):
    report = analyze_graph(wheel)
    assert report.q == 5
    assert len(report.witness) == 5
    assert not report.equatorial


def test_disconnected():
    g, _ = disjoint_union([cycle_graph(4), cycle_graph(6)])
    report = analyze_graph(g)
    assert not report.connected
    assert report.diameter is None and report.radius is None
    assert report.q == 6
    assert not report.equatorial
    assert any("disconnected" in note for note in report.notes)


def test_forest():
    report = analyze_graph(build_graph([(0, 1), (1, 2), (1, 3)], 4))
    assert report.girth is None
    assert report.q == 0 and report.witness is None
    assert report.bound is None
    assert any("forest" in note for note in report.notes)
    assert report.to_dict()["g"] is None


def test_cap_is_reported(wheel):
    report = analyze_graph(wheel, cap=4)
    assert report.search_capped
    assert report.q == 3
