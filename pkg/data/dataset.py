"""
Mordell-Weil generator datasets
JSON lines of {"n": int, "x": "num/den", "y": "num/den"} with an optional
"verdict" recorded by an external run.
"""
import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from curves.weierstrass import Curve, CurvePoint, is_torsion, on_curve
from errors import BadDataset, GoodPointsError, InputError, NotOnCurve, TorsionPoint
from certifier.good import family_coefficient
from utils.helpers import format_rational, parse_rational

logger = logging.getLogger(__name__)

DATASET = "dataset"
NAIVE_SEARCH = "naive-search"


@dataclass(frozen=True)
class GeneratorRecord:
    """A non-torsion point on E_n : y^2 = x^3 - 2 + 7n and where it came from"""
    n: int
    x: Fraction
    y: Fraction
    source: str = DATASET
    verdict: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        data = {"n": self.n, "x": format_rational(self.x), "y": format_rational(self.y), "source": self.source}
        if self.verdict is not None:
            data["verdict"] = self.verdict
        return data


def validate_record(
    n: int, x: Fraction, y: Fraction, source: str = DATASET, verdict: Optional[str] = None
) -> GeneratorRecord:
    a = family_coefficient(n)
    curve = Curve(0, a)
    P = CurvePoint(x, y)
    if not on_curve(curve, P):
        raise NotOnCurve(f"({format_rational(x)}, {format_rational(y)}) is not on y^2 = x^3 + {a}")
    if is_torsion(curve, P):
        raise TorsionPoint(f"({format_rational(x)}, {format_rational(y)}) is torsion on y^2 = x^3 + {a}")
    return GeneratorRecord(n, x, y, source, verdict)


def parse_record(data: Dict[str, Any]) -> GeneratorRecord:
    if not isinstance(data, dict):
        raise InputError(f"expected an object, got {type(data).__name__}")
    try:
        n = data["n"]
        x = parse_rational(data["x"])
        y = parse_rational(data["y"])
    except KeyError as exc:
        raise InputError(f"missing field {exc}") from exc
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from exc
    if not isinstance(n, int) or isinstance(n, bool):
        raise InputError(f"n must be an integer, got {n!r}")
    return validate_record(n, x, y, DATASET, data.get("verdict"))


def ingest_generators(path: Union[str, Path]) -> Tuple[List[GeneratorRecord], List[Dict[str, Any]]]:
    """
    Read a generator dataset.
    Returns the valid records and an error report with one entry per rejected
    line; a line that is not JSON at all raises BadDataset.
    """
    records: List[GeneratorRecord] = []
    errors: List[Dict[str, Any]] = []
    seen = set()
    text = Path(path).read_text()
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            data = json.loads(line)
        except json.JSONDecodeError as exc:
            raise BadDataset(f"{path}:{number}: malformed JSON ({exc.msg})") from exc
        try:
            record = parse_record(data)
        except GoodPointsError as exc:
            errors.append({
                "line": number,
                "n": data.get("n") if isinstance(data, dict) else None,
                "error": type(exc).__name__,
                "message": str(exc),
            })
            continue
        if record.n in seen:
            logger.warning("%s:%d: duplicate generator for n = %d ignored", path, number, record.n)
            continue
        seen.add(record.n)
        records.append(record)
    logger.info("ingested %d generators from %s (%d rejected)", len(records), path, len(errors))
    return records, errors


def records_by_n(records: List[GeneratorRecord]) -> Dict[int, GeneratorRecord]:
    return {record.n: record for record in records}
