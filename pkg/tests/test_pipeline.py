import numpy as np
import pytest

from abcdgen import AntiCommunityError, generate, run_generate
from abcdgen.pipeline import STAGES

from conftest import small_config


@pytest.mark.parametrize("model", ["cm", "cl"])
def test_benchmark_run(model):
    g = generate(small_config(model=model))
    assert g.edges.is_simple()
    assert abs(g.report.realized_mu - 0.2) < 0.03
    assert g.assignment.sizes.sum() == 10_000
    if model == "cm":
        assert np.array_equal(g.edges.degrees(), g.degrees)
        assert g.report.degree_deviation_vertices == 0


def test_report_fields():
    report = generate(small_config()).report
    assert set(report.timings) == set(STAGES) - {"write"}
    assert report.edges == report.cluster_edges + report.background_edges
    assert report.total_degree == 2 * report.edges
    assert report.min_degree == 5
    assert report.mu0 >= report.mu1
    assert 0 < report.xi_min <= report.xi_max <= 1


def test_average_degree_resolves_minimum():
    g = generate(small_config(min_degree=None, avg_degree=12, max_degree=100))
    assert g.report.min_degree >= 1
    assert abs(g.degrees.mean() - 12) < 1.0


def test_anti_community_stops_before_edges():
    cfg = small_config(n=200, min_degree=2, max_degree=10, min_community=95, max_community=105, mu=0.95)
    with pytest.raises(AntiCommunityError) as err:
        generate(cfg)
    assert err.value.stage == "mixing"


def test_input_sequences(tmp_path):
    (tmp_path / "d.txt").write_text("6\n" * 20 + "4\n" * 40)
    (tmp_path / "s.txt").write_text("30\n30\n")
    cfg = small_config(
        n=None, gamma=None, min_degree=None, max_degree=None, beta=None, min_community=None,
        max_community=None, mu=None, xi=0.0,
        in_degrees=str(tmp_path / "d.txt"), in_sizes=str(tmp_path / "s.txt"),
    )
    g = generate(cfg)
    assert np.array_equal(g.edges.degrees(), g.degrees)
    assert g.degrees.tolist() == [6] * 20 + [4] * 40
    assert g.report.mixing_mode == "xi_global"


def test_writes_requested_files(tmp_path):
    out = {name: str(tmp_path / name) for name in ("out_edges", "out_communities", "out_degrees", "out_sizes")}
    report = run_generate(small_config(skip_write=False, **out))
    assert "write" in report.timings
    lines = (tmp_path / "out_edges").read_text().splitlines()
    assert len(lines) == report.edges
    assert len((tmp_path / "out_communities").read_text().splitlines()) == 10_000
    assert sum(int(x) for x in (tmp_path / "out_sizes").read_text().split()) == 10_000
