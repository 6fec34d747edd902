import json
from fractions import Fraction

import pytest

from data import (
    NAIVE_SEARCH,
    calculate_good_fraction,
    count_outcomes,
    format_percentage,
    ingest_generators,
    lambda_distribution,
    summarize_report,
    validate_record,
)
from errors import BadDataset, NotOnCurve


def _write(tmp_path, lines):
    path = tmp_path / "generators.jsonl"
    path.write_text("\n".join(lines) + "\n")
    return path


def test_ingest_accepts_valid_records(dataset_path):
    records, errors = ingest_generators(dataset_path)
    assert errors == []
    assert [(r.n, r.x, r.y) for r in records] == [(0, Fraction(3), Fraction(5)), (1, Fraction(-1), Fraction(2))]
    assert records[1].verdict == "Good"


def test_ingest_collects_per_record_errors(tmp_path):
    path = _write(tmp_path, [
        json.dumps({"n": 0, "x": "0", "y": "0"}),
        "",
        json.dumps({"n": 1, "x": "-1", "y": "2"}),
        json.dumps({"n": 2, "x": "1/2"}),
        json.dumps({"n": 1, "x": "-1", "y": "-2"}),
    ])
    records, errors = ingest_generators(path)
    assert [r.n for r in records] == [1]
    assert [(e["line"], e["error"]) for e in errors] == [(1, "NotOnCurve"), (4, "InputError")]


def test_ingest_rejects_malformed_json(tmp_path):
    path = _write(tmp_path, ['{"n": 0, "x": "3", "y": "5"}', "{not json"])
    with pytest.raises(BadDataset):
        ingest_generators(path)


def test_validate_record():
    record = validate_record(0, Fraction(3), Fraction(5), NAIVE_SEARCH)
    assert record.to_dict() == {"n": 0, "x": "3", "y": "5", "source": NAIVE_SEARCH}
    with pytest.raises(NotOnCurve):
        validate_record(0, Fraction(1), Fraction(1))


def _row(n, outcome, **values):
    row = {"n": n, "outcome": outcome, "x_valuation": None, "lambda": None, "precision_used": None, "stable": None}
    row.update(values)
    return row


def test_summarize_report():
    rows = [
        _row(0, "Good", x_valuation=-2, **{"lambda": 3}, precision_used=12, stable=True),
        _row(1, "Good", x_valuation=-2, **{"lambda": 1}, precision_used=24, stable=True),
        _row(2, "NotGood", x_valuation=-4, **{"lambda": 3}, precision_used=12, stable=True),
        _row(3, "NoGenerator"),
    ]
    summary = summarize_report({"outcomes": rows, "precision": 12})
    assert summary["counts"] == {"Good": 2, "NotGood": 1, "NoGenerator": 1, "SkippedBadReduction": 0}
    assert summary["good_fraction"] == pytest.approx(2 / 3)
    assert summary["skipped"] == 1
    assert summary["valuations"] == {-4: 1, -2: 2}
    assert summary["lambdas"] == {1: 1, 3: 2}
    assert summary["escalations"] == 1
    assert summary["unstable"] == 0


def test_good_fraction_without_certificates():
    assert calculate_good_fraction(count_outcomes([_row(0, "NoGenerator")])) is None


def test_format_percentage():
    assert format_percentage(0.8668) == "86.68%"
    assert format_percentage(None) == "N/A"


def test_lambda_distribution_counts_certified_rows_only():
    rows = [
        _row(0, "Good", **{"lambda": 5}),
        _row(1, "NotGood", **{"lambda": 2}),
        _row(2, "Good", **{"lambda": 5}),
        _row(3, "SkippedBadReduction"),
        _row(4, "NoGenerator"),
    ]
    assert lambda_distribution(rows) == {2: 1, 5: 2}
    assert list(lambda_distribution(rows)) == [2, 5]
    assert lambda_distribution([_row(0, "NoGenerator")]) == {}
