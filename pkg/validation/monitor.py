r"""
Sweep report monitor
Compares a sweep report against the published reference and, when given,
against the verdicts recorded in a generator dataset

Usage:
    python -m validation.monitor --report sweep.json
    python -m validation.monitor --report sweep.json --dataset generators.jsonl
"""
import argparse
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Any, Dict, List, Optional

# Add parent to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from config import SWEEP_REFERENCE
from data.calculations import format_percentage, summarize_report
from data.dataset import GeneratorRecord, ingest_generators
from validation.schema import Discrepancy, load_report
from validation.sources import REFERENCE_SOURCES, VALIDATION_RULES


def covers_reference_range(report: Dict[str, Any]) -> bool:
    n_lo, n_hi = report["range"]
    ref_lo, ref_hi = SWEEP_REFERENCE["range"]
    return n_lo <= ref_lo and n_hi >= ref_hi


def compare_report(
    report: Dict[str, Any], records: Optional[List[GeneratorRecord]] = None
) -> Dict[str, Any]:
    """
    Itemise where a report disagrees with the reference.
    The published fraction is only compared when the report covers its range;
    the sanity band applies to any report with enough certified curves.
    """
    summary = summarize_report(report)
    fraction = summary["good_fraction"]
    discrepancies: List[Discrepancy] = []

    full_range = covers_reference_range(report)
    if full_range and fraction is not None:
        expected = SWEEP_REFERENCE["good_fraction"]
        if abs(fraction - expected) > VALIDATION_RULES["good_fraction"]["tolerance"]:
            discrepancies.append(Discrepancy(None, "good_fraction", expected, round(fraction, 6)))
        if summary["skipped"] != SWEEP_REFERENCE["skipped"]:
            discrepancies.append(Discrepancy(None, "skipped", SWEEP_REFERENCE["skipped"], summary["skipped"]))

    band = VALIDATION_RULES["sanity_band"]
    certified = summary["counts"]["Good"] + summary["counts"]["NotGood"]
    in_band = None
    if certified >= band["min_certified"]:
        in_band = band["low"] <= fraction <= band["high"]
        if not in_band:
            discrepancies.append(Discrepancy(
                None, "good_fraction", f"[{band['low']}, {band['high']}]", round(fraction, 6), "outside sanity band"
            ))

    expected_level = report["prime"] - 1
    for row in report["outcomes"]:
        if row["outcome"] == "Good" and row["restricted_level"] != expected_level:
            discrepancies.append(Discrepancy(row["n"], "restricted_level", expected_level, row["restricted_level"]))
        if row["outcome"] in ("Good", "NotGood") and not row["stable"]:
            discrepancies.append(Discrepancy(row["n"], "stable", True, False, "verdict changed at doubled precision"))

    if records:
        outcomes = {row["n"]: row for row in report["outcomes"]}
        for record in records:
            row = outcomes.get(record.n)
            if record.verdict is None or row is None:
                continue
            if row["outcome"] != record.verdict:
                discrepancies.append(Discrepancy(record.n, "verdict", record.verdict, row["outcome"]))

    return {
        "summary": summary,
        "covers_reference_range": full_range,
        "reference": {key: source["value"] for key, source in REFERENCE_SOURCES.items()},
        "sanity_band": in_band,
        "discrepancies": [asdict(item) for item in discrepancies],
    }


def run_monitor(report_path: str, dataset_path: Optional[str] = None) -> int:
    """Print the comparison; returns the number of discrepancies"""
    report = load_report(report_path)
    records = None
    if dataset_path:
        records, errors = ingest_generators(dataset_path)
        if errors:
            print(f"Dataset: {len(errors)} rejected lines")
    result = compare_report(report, records)
    summary = result["summary"]

    print(f"Sweep Report Monitor - {report_path}")
    print("=" * 60)
    print(f"\nRange: n in [{report['range'][0]}, {report['range'][1]}] at p = {report['prime']}")
    for outcome, count in summary["counts"].items():
        print(f"  {outcome}: {count}")
    print(f"  Good fraction: {format_percentage(summary['good_fraction'])}")
    if result["covers_reference_range"]:
        print(f"  Reference: {format_percentage(SWEEP_REFERENCE['good_fraction'])}, "
              f"{SWEEP_REFERENCE['skipped']} skipped")

    if result["discrepancies"]:
        print(f"\nDiscrepancies ({len(result['discrepancies'])}):")
        for item in result["discrepancies"]:
            where = f"n = {item['n']}" if item["n"] is not None else "report"
            print(f"  - {where}: {item['field']} expected {item['expected']}, got {item['actual']}")
    else:
        print("\nNo discrepancies")
    return len(result["discrepancies"])


def main():
    parser = argparse.ArgumentParser(description="Sweep Report Monitor")
    parser.add_argument("--report", required=True, help="Sweep report JSON")
    parser.add_argument("--dataset", help="Generator dataset with recorded verdicts")
    args = parser.parse_args()
    return 1 if run_monitor(args.report, args.dataset) else 0


if __name__ == "__main__":
    raise SystemExit(main())
