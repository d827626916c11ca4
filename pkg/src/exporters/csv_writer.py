"""
CSV output with fixed column orders.
"""

import csv
from typing import IO, Iterable, List, Mapping, Sequence

from src.verify.schemas import VerificationReport

TABLE_COLUMNS = ["instance", "order", "size", "chi", "j", "j_star", "j_feasible", "j_star_feasible"]
BONDING_COLUMNS = ["k", "r_minus", "r_plus", "semantics", "witness_edges", "step_removed", "cumulative"]
REPORT_COLUMNS = ["claim_id", "instance", "quantity", "predicted", "computed", "verdict", "report_only", "note"]


def write_rows(stream: IO[str], columns: Sequence[str], rows: Iterable[Mapping]) -> int:
    """
    Write a header and the rows in column order.

    Missing keys and None values are written empty.

    Raises:
        ValueError: a row carries a key outside the columns
    """
    writer = csv.DictWriter(stream, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    count = 0
    for row in rows:
        unknown = sorted(set(row) - set(columns))
        if unknown:
            raise ValueError(f"unexpected CSV columns: {', '.join(unknown)}")
        writer.writerow({column: "" if row.get(column) is None else row[column] for column in columns})
        count += 1
    return count


def report_rows(report: VerificationReport, timings: bool = False) -> List[dict]:
    exclude = None if timings else {"runtime"}
    return [record.model_dump(exclude=exclude) for record in report.claims]


def write_report(stream: IO[str], report: VerificationReport, timings: bool = False) -> int:
    columns = REPORT_COLUMNS + (["runtime"] if timings else [])
    return write_rows(stream, columns, report_rows(report, timings))
