"""
Summary statistics over sweep reports
Outcome counts, good fraction, valuation and lambda distributions
"""
from collections import Counter
from typing import Any, Dict, Iterable, List, Optional

from config import OUTCOMES
from utils.helpers import safe_divide


def count_outcomes(rows: Iterable[Dict[str, Any]]) -> Dict[str, int]:
    """Number of rows per outcome, every outcome present"""
    counts = Counter(row["outcome"] for row in rows)
    return {outcome: counts.get(outcome, 0) for outcome in OUTCOMES}


def calculate_good_fraction(counts: Dict[str, int]) -> Optional[float]:
    """Good / (Good + NotGood); None when nothing was certified"""
    certified = counts.get("Good", 0) + counts.get("NotGood", 0)
    if certified == 0:
        return None
    return safe_divide(counts.get("Good", 0), certified)


def calculate_skipped(counts: Dict[str, int]) -> int:
    return counts.get("NoGenerator", 0) + counts.get("SkippedBadReduction", 0)


def _certified(rows: Iterable[Dict[str, Any]]) -> List[Dict[str, Any]]:
    return [row for row in rows if row["outcome"] in ("Good", "NotGood")]


def valuation_histogram(rows: Iterable[Dict[str, Any]]) -> Dict[int, int]:
    """How often each x-valuation of P - lambda P0 occurs"""
    return dict(sorted(Counter(row["x_valuation"] for row in _certified(rows)).items()))


def lambda_distribution(rows: Iterable[Dict[str, Any]]) -> Dict[int, int]:
    return dict(sorted(Counter(row["lambda"] for row in _certified(rows)).items()))


def count_escalations(rows: Iterable[Dict[str, Any]], precision: int) -> int:
    """Certificates that needed more than the starting precision"""
    return sum(1 for row in _certified(rows) if row["precision_used"] > precision)


def summarize_report(report: Dict[str, Any]) -> Dict[str, Any]:
    rows = report["outcomes"]
    counts = count_outcomes(rows)
    certified = _certified(rows)
    return {
        "counts": counts,
        "good_fraction": calculate_good_fraction(counts),
        "skipped": calculate_skipped(counts),
        "valuations": valuation_histogram(rows),
        "lambdas": lambda_distribution(rows),
        "escalations": count_escalations(rows, report["precision"]),
        "unstable": sum(1 for row in certified if not row["stable"]),
    }


def format_percentage(value: Optional[float], decimals: int = 2) -> str:
    """Format percentage values"""
    if value is None:
        return "N/A"
    return f"{value * 100:.{decimals}f}%"
