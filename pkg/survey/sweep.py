"""
Certification sweep over the family E_n for a range of n
Generators come from a dataset when one is given, otherwise from a naive
search; each n is certified independently and the results are merged in
ascending n.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import pandas as pd

from config import (
    DEFAULT_HEIGHT,
    DEFAULT_JOBS,
    DEFAULT_PRECISION,
    DEFAULT_PRIME,
    FAMILY_STEP,
    GENERATOR_SEED,
)
from errors import ConsistencyFailure, GoodPointsError
from certifier.good import certify_good, family_coefficient, restrict_level_to_L
from data.calculations import calculate_good_fraction, calculate_skipped, count_outcomes
from data.dataset import GeneratorRecord, ingest_generators, records_by_n
from survey.search import naive_point_search
from utils.helpers import format_rational

logger = logging.getLogger(__name__)

GENERATOR_DEPENDENCE = (
    "verdicts are per generator: a different generator of E_n(Q) modulo torsion "
    "may change an individual verdict"
)

ROW_FIELDS = (
    "n", "a", "outcome", "source", "x", "y", "lambda", "x_valuation", "level",
    "restricted_level", "precision_used", "stable", "error",
)

Task = Tuple[int, Optional[Dict[str, Any]], int, int, int, int]


def _row(n: int, outcome: str, **values) -> Dict[str, Any]:
    row = dict.fromkeys(ROW_FIELDS)
    row.update(n=n, a=family_coefficient(n), outcome=outcome, **values)
    return row


def survey_one(task: Task) -> Dict[str, Any]:
    """Outcome row for one n; never raises for per-curve failures"""
    n, given, height, p, precision, seed = task
    a = family_coefficient(n)
    if p == FAMILY_STEP and a % FAMILY_STEP != 5:
        raise ConsistencyFailure(f"a = {a} is not 5 mod 7")

    if given is not None:
        record = GeneratorRecord(n, given["x"], given["y"], given["source"])
    else:
        record = naive_point_search(n, height)
    if record is None:
        return _row(n, "NoGenerator")

    point = dict(source=record.source, x=format_rational(record.x), y=format_rational(record.y))
    try:
        cert = certify_good(n, record.x, record.y, p, precision, seed)
        restricted = restrict_level_to_L(cert) if cert.is_good else None
    except GoodPointsError as exc:
        logger.warning("n = %d skipped: %s: %s", n, type(exc).__name__, exc)
        return _row(n, "SkippedBadReduction", error=f"{type(exc).__name__}: {exc}", **point)
    return _row(
        n,
        cert.verdict,
        restricted_level=restricted,
        precision_used=cert.precision_used,
        stable=cert.stability,
        level=cert.level,
        x_valuation=cert.x_valuation,
        **{"lambda": cert.lambda_},
        **point,
    )


def sweep(
    n_lo: int,
    n_hi: int,
    dataset_path: Optional[Union[str, Path]] = None,
    height: int = DEFAULT_HEIGHT,
    p: int = DEFAULT_PRIME,
    precision: int = DEFAULT_PRECISION,
    jobs: int = DEFAULT_JOBS,
    seed: int = GENERATOR_SEED,
) -> Dict[str, Any]:
    """Certify every n in [n_lo, n_hi] and aggregate the outcomes"""
    if n_lo > n_hi:
        raise ValueError(f"empty range [{n_lo}, {n_hi}]")
    started = time.perf_counter()

    known: Dict[int, GeneratorRecord] = {}
    dataset_errors: List[Dict[str, Any]] = []
    if dataset_path:
        records, dataset_errors = ingest_generators(dataset_path)
        known = records_by_n(records)

    tasks: List[Task] = []
    for n in range(n_lo, n_hi + 1):
        record = known.get(n)
        given = None if record is None else {"x": record.x, "y": record.y, "source": record.source}
        tasks.append((n, given, height, p, precision, seed))

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(survey_one, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        rows = [survey_one(task) for task in tasks]

    counts = count_outcomes(rows)
    report = {
        "range": [n_lo, n_hi],
        "prime": p,
        "precision": precision,
        "height": height,
        "seed": seed,
        "dataset": str(dataset_path) if dataset_path else None,
        "dataset_errors": dataset_errors,
        "outcomes": rows,
        "counts": counts,
        "good_fraction": calculate_good_fraction(counts),
        "skipped_count": calculate_skipped(counts),
        "generator_dependence": GENERATOR_DEPENDENCE,
        "wall_clock_seconds": round(time.perf_counter() - started, 3),
    }
    logger.info(
        "swept n in [%d, %d]: %s, good fraction %s",
        n_lo, n_hi, counts, report["good_fraction"],
    )
    return report


def deterministic_view(report: Dict[str, Any]) -> Dict[str, Any]:
    """The report without its wall-clock field"""
    return {key: value for key, value in report.items() if key != "wall_clock_seconds"}


def report_table(report: Dict[str, Any]) -> pd.DataFrame:
    columns = ["n", "a", "outcome", "x", "y", "lambda", "x_valuation", "restricted_level", "stable"]
    return pd.DataFrame(report["outcomes"], columns=list(ROW_FIELDS))[columns]


def render_table(report: Dict[str, Any]) -> str:
    table = report_table(report).astype(object).where(lambda df: df.notna(), "")
    return table.to_string(index=False)
