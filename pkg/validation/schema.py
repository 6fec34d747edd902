"""
Report files and the discrepancies found in them
"""
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Union

from errors import BadDataset


@dataclass
class Discrepancy:
    """One disagreement between a report and a reference"""
    n: Optional[int]              # None for report-wide checks
    field: str
    expected: Any
    actual: Any
    note: Optional[str] = None


def load_report(path: Union[str, Path]) -> Dict[str, Any]:
    """Load a sweep report written by the CLI"""
    try:
        report = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise BadDataset(f"{path}: malformed report ({exc.msg})") from exc
    for key in ("range", "outcomes", "counts"):
        if key not in report:
            raise BadDataset(f"{path}: report has no {key!r}")
    return report


def dump_report(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def save_report(report: Dict[str, Any], path: Union[str, Path]):
    Path(path).write_text(dump_report(report) + "\n")
