import pytest

from weakparity.bench import run_scaling
from weakparity.linear import EDGE_WORK_FACTOR


def test_report_shape_and_determinism():
    report = run_scaling("ladder", [256, 512, 1024], ["linear", "naive"], repeats=3)
    assert len(report.samples) == 3 * 2 * 3
    assert len(report.rows) == 3 * 2
    for cell in range(0, len(report.samples), 3):
        works = {tuple(s.work.as_dict().items()) for s in report.samples[cell:cell + 3]}
        assert len(works) == 1
    assert set(report.growth_ratios) == {"linear", "naive"}
    assert len(report.growth_ratios["linear"]) == 2


def test_linear_rows_within_budget():
    report = run_scaling("random", [500, 1000, 2000], ["linear"], repeats=1, seed=3)
    for row in report.rows:
        assert row.work.edge_relaxations <= EDGE_WORK_FACTOR * row.m
        assert row.work.counter_inits <= row.n
        assert row.work.target_scan_steps == row.n


def test_ladder_ratios():
    report = run_scaling("ladder", [1024, 2048, 4096], ["linear", "naive"], repeats=1)
    for r in report.work_ratios("linear", lambda w: w.edge_relaxations):
        assert 1.8 <= r <= 2.2
    for r in report.work_ratios("naive", lambda w: w.target_scan_steps + w.rescan_steps):
        assert r >= 3.5


@pytest.mark.parametrize("sizes", [[100, 300], [200, 100]])
def test_sizes_must_double(sizes):
    with pytest.raises(ValueError):
        run_scaling("ladder", sizes, ["linear"], repeats=1)
