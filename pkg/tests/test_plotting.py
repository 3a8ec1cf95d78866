from srdf.graph import cycle, join_cycles, path, wheel
from srdf.labeling import Labeling
from srdf.plotting import draw_labeling, layout, plot_bench, plot_check_summary


def test_layout_hub_at_origin_for_wheels():
    pos = layout(wheel(8))
    assert pos[0] == (0.0, 0.0)
    assert len(pos) == 9


def test_layout_two_rings_for_joins():
    pos = layout(join_cycles(3, 6), split=3)
    inner = {round(x * x + y * y, 6) for v, (x, y) in pos.items() if v < 3}
    outer = {round(x * x + y * y, 6) for v, (x, y) in pos.items() if v >= 3}
    assert inner == {0.25} and outer == {1.0}


def test_draw_invalid_labeling_still_renders(tmp_path):
    out = draw_labeling(cycle(4), Labeling([-1, -1, -1, -1]), str(tmp_path / "bad.png"), title="C4")
    assert (tmp_path / "bad.png").stat().st_size > 1000
    assert out.endswith("bad.png")


def test_summary_plots(tmp_path):
    plot_bench([
        {"order": 5, "nodes": 10, "seconds": 0.01, "method": "exhaustive", "status": "ok"},
        {"order": 13, "nodes": 900, "seconds": 0.2, "method": "branch-and-bound", "status": "ok"},
        {"order": 26, "nodes": 9, "seconds": 1.0, "method": "branch-and-bound", "status": "budget"},
    ], str(tmp_path / "bench.png"))
    plot_check_summary([
        {"claim": "a", "status": "confirmed"}, {"claim": "b", "status": "skipped-scale"},
    ], str(tmp_path / "checks.png"))
    assert (tmp_path / "bench.png").exists() and (tmp_path / "checks.png").exists()


def test_large_graph_drawing(tmp_path):
    draw_labeling(path(70), Labeling.constant(70), str(tmp_path / "p.png"))
    assert (tmp_path / "p.png").exists()
