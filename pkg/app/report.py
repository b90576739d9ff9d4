"""
Reports: ordered collections of check records with text, JSON and CSV output.
"""

import json
from collections import Counter
from pathlib import Path
from typing import Iterable, List, Optional
import pandas as pd
from app.check_record import CheckRecord, FAIL, PASS
from app.exceptions import FalsificationError, FileOperationError
from app.monadal_config import config

REPORT_COLUMNS = ['check_id', 'location', 'status', 'mismatch']


def location_of(*parts) -> str:
    """Render a location such as a simple tuple as a stable string."""
    if len(parts) == 1 and isinstance(parts[0], str):
        return parts[0]
    if len(parts) == 1 and isinstance(parts[0], tuple):
        parts = parts[0]
    return "(" + ",".join(str(p) for p in parts) + ")"


class Report:
    """Collects check records in the order they were produced."""

    def __init__(self, pipeline_id: str = "checks"):
        self.pipeline_id = pipeline_id
        self._records: List[CheckRecord] = []
        self.operations: Counter = Counter()

    # building

    def add(self, record: CheckRecord) -> CheckRecord:
        self._records.append(record)
        return record

    def expect(self, check_id: str, location, condition: bool, detail: str = "") -> CheckRecord:
        """Record a boolean condition."""
        status = PASS if condition else FAIL
        return self.add(CheckRecord(check_id, location_of(location), status,
                                    "" if condition else detail))

    def compare(self, check_id: str, location, lhs, rhs) -> CheckRecord:
        """Record whether two morphisms are exactly equal."""
        mismatch = lhs.first_mismatch(rhs)
        status = PASS if mismatch is None else FAIL
        return self.add(CheckRecord(check_id, location_of(location), status, mismatch))

    def extend(self, other: 'Report') -> 'Report':
        """Append the records and operation counts of another report."""
        self._records.extend(other.records)
        self.operations.update(other.operations)
        return self

    def note(self, operation: str):
        """Count one execution of a named operation."""
        self.operations[operation] += 1

    # inspection

    @property
    def records(self) -> List[CheckRecord]:
        return list(self._records)

    @property
    def failures(self) -> List[CheckRecord]:
        return [r for r in self._records if r.status == FAIL]

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def failed_checks(self) -> List[str]:
        return sorted({r.check_id for r in self.failures})

    def summary_line(self) -> str:
        total = len(self._records)
        failed = len(self.failures)
        verdict = PASS if failed == 0 else FAIL
        return f"{verdict}: {total - failed}/{total} checks passed"

    def raise_if_failed(self, message: str):
        """Abort with a FalsificationError carrying this report."""
        if not self.passed:
            first = self.failures[0]
            raise FalsificationError(f"{message}: {first}", self)

    def __len__(self) -> int:
        return len(self._records)

    def __bool__(self) -> bool:
        return True

    def __iter__(self):
        return iter(self._records)

    # rendering

    def to_dict(self) -> dict:
        return {
            'pipeline': self.pipeline_id,
            'records': [r.to_dict() for r in self._records],
            'summary': {
                'total': len(self._records),
                'failed': len(self.failures),
                'status': PASS if self.passed else FAIL,
            },
            'operations': dict(sorted(self.operations.items())),
        }

    def to_text(self) -> str:
        lines = [f"pipeline {self.pipeline_id}"]
        lines.extend(str(r) for r in self._records)
        if self.operations:
            covered = ", ".join(f"{k}={v}" for k, v in sorted(self.operations.items()))
            lines.append(f"operations: {covered}")
        lines.append(self.summary_line())
        return "\n".join(lines) + "\n"

    def to_dataframe(self) -> pd.DataFrame:
        """Records as a pandas DataFrame, one row per check."""
        return pd.DataFrame([r.to_dict() for r in self._records], columns=REPORT_COLUMNS)

    def save_csv(self, filepath: Path):
        """Save the records to a CSV file using pandas."""
        try:
            self.to_dataframe().to_csv(filepath, index=False, encoding=config.default_encoding)
        except Exception as e:
            raise FileOperationError(f"Failed to save report: {e}")

    @classmethod
    def load_csv(cls, filepath: Path, pipeline_id: Optional[str] = None) -> 'Report':
        """Load records written by :meth:`save_csv`."""
        filepath = Path(filepath)
        if not filepath.exists():
            raise FileOperationError(f"Report file not found: {filepath}")
        report = cls(pipeline_id or filepath.stem)
        try:
            df = pd.read_csv(filepath, encoding=config.default_encoding, dtype=str,
                             keep_default_na=False)
        except pd.errors.EmptyDataError:
            return report
        except Exception as e:
            raise FileOperationError(f"Failed to load report: {e}")
        for _, row in df.iterrows():
            report.add(CheckRecord.from_dict(row.to_dict()))
        return report

    @classmethod
    def from_dict(cls, data: dict) -> 'Report':
        report = cls(data.get('pipeline', 'checks'))
        for item in data.get('records', []):
            report.add(CheckRecord.from_dict(item))
        report.operations.update(data.get('operations', {}))
        return report


def merge_reports(pipeline_id: str, reports: Iterable[Report]) -> Report:
    merged = Report(pipeline_id)
    for r in reports:
        merged.extend(r)
    return merged


def emit_report(report: Report, fmt: str = "text") -> bytes:
    """
    Render a report deterministically.

    Args:
        report: The report to render
        fmt: ``text``, ``json`` or ``csv``
    """
    if fmt == "text":
        text = report.to_text()
    elif fmt == "json":
        text = json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        text = report.to_dataframe().to_csv(index=False, lineterminator="\n")
    else:
        raise ValueError(f"Unknown report format: {fmt}")
    return text.encode(config.default_encoding)
