from fractions import Fraction

import pytest

from data import DATASET, NAIVE_SEARCH
from survey import deterministic_view, naive_point_search, render_table, sweep
from validation import dump_report

SMALL = {"precision": 12}


@pytest.mark.parametrize("n, height, point", [
    (0, 3, (3, 5)),
    (1, 1, (-1, 2)),
])
def test_naive_search_finds_first_point(n, height, point):
    record = naive_point_search(n, height)
    assert (record.x, record.y) == tuple(Fraction(c) for c in point)
    assert record.source == NAIVE_SEARCH


def test_naive_search_gives_up():
    # y^2 = x^3 + 12 has no point with x in {-1, 0, 1}
    assert naive_point_search(2, 1) is None


def test_naive_search_needs_positive_height():
    with pytest.raises(ValueError):
        naive_point_search(0, 0)


def test_sweep_with_dataset(dataset_path):
    report = sweep(0, 0, dataset_path=dataset_path, **SMALL)
    (row,) = report["outcomes"]
    assert row["source"] == DATASET
    assert row["outcome"] in ("Good", "NotGood")
    assert row["stable"]
    assert sum(report["counts"].values()) == 1
    if row["outcome"] == "Good":
        assert row["restricted_level"] == 6
        assert report["good_fraction"] == 1.0


def test_sweep_without_generator():
    report = sweep(2, 2, height=1, **SMALL)
    assert report["outcomes"][0]["outcome"] == "NoGenerator"
    assert report["good_fraction"] is None
    assert report["skipped_count"] == 1


def test_sweep_is_deterministic():
    first = sweep(-1, 1, height=5, **SMALL)
    second = sweep(-1, 1, height=5, **SMALL)
    assert dump_report(deterministic_view(first)) == dump_report(deterministic_view(second))
    assert [row["n"] for row in first["outcomes"]] == [-1, 0, 1]


def test_parallel_sweep_equals_serial():
    serial = sweep(-1, 1, height=5, jobs=1, **SMALL)
    parallel = sweep(-1, 1, height=5, jobs=2, **SMALL)
    assert deterministic_view(parallel) == deterministic_view(serial)


def test_render_table():
    table = render_table(sweep(0, 0, height=3, **SMALL))
    assert "outcome" in table
    assert "Good" in table


def test_sweep_rejects_empty_range():
    with pytest.raises(ValueError):
        sweep(1, 0)
