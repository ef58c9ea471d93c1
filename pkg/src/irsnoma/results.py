"""CSV serialization of sweep results.

One row per (sweep point, model, user), sorted by (d_near_m, model, user).
Statistics are aggregated in linear units and converted to dBm/dB here, at
the emission boundary. Numeric fields carry 6 significant digits, which is
what makes the format byte-reproducible and round-trippable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ValidationError
from .sim import SweepRecord

CSV_COLUMNS = (
    "d_near_m",
    "d_far_m",
    "model",
    "user",
    "gt_db",
    "gr_db",
    "rx_power_dbm_mean",
    "rx_power_dbm_std",
    "sinr_db_mean",
    "sinr_db_std",
    "n_trials",
    "master_seed",
)


@dataclass(frozen=True)
class CsvRow:
    """One emitted result line, in reporting units."""

    d_near_m: float
    d_far_m: float
    model: str
    user: str
    gt_db: float
    gr_db: float
    rx_power_dbm_mean: float
    rx_power_dbm_std: float
    sinr_db_mean: float
    sinr_db_std: float
    n_trials: int
    master_seed: int

    def sort_key(self) -> tuple:
        return (self.d_near_m, self.model, self.user)


def _to_db(linear: float) -> float:
    # A zero statistic (e.g. std of a single trial) maps to -inf dB.
    return 10.0 * math.log10(linear) if linear > 0.0 else -math.inf


def _to_dbm(watts: float) -> float:
    return _to_db(watts) + 30.0 if watts > 0.0 else -math.inf


def format_number(value: float) -> str:
    """Canonical 6-significant-digit rendering of one numeric field."""
    return f"{value:.6g}"


def records_to_rows(records: Iterable[SweepRecord]) -> list[CsvRow]:
    """Flatten sweep records to sorted CSV rows."""
    rows = []
    for record in records:
        for entry in record.entries:
            rows.append(
                CsvRow(
                    d_near_m=record.d_near_m,
                    d_far_m=record.d_far_m,
                    model=entry.model,
                    user=entry.user,
                    gt_db=entry.gt_db,
                    gr_db=entry.gr_db,
                    rx_power_dbm_mean=_to_dbm(entry.rx_power_w.mean),
                    rx_power_dbm_std=_to_dbm(entry.rx_power_w.std),
                    sinr_db_mean=_to_db(entry.sinr.mean),
                    sinr_db_std=_to_db(entry.sinr.std),
                    n_trials=record.n_trials,
                    master_seed=record.master_seed,
                )
            )
    rows.sort(key=CsvRow.sort_key)
    return rows


def rows_to_csv(rows: Sequence[CsvRow]) -> str:
    """Render rows to the canonical CSV text."""
    lines = [",".join(CSV_COLUMNS)]
    for row in rows:
        lines.append(
            ",".join(
                (
                    format_number(row.d_near_m),
                    format_number(row.d_far_m),
                    row.model,
                    row.user,
                    format_number(row.gt_db),
                    format_number(row.gr_db),
                    format_number(row.rx_power_dbm_mean),
                    format_number(row.rx_power_dbm_std),
                    format_number(row.sinr_db_mean),
                    format_number(row.sinr_db_std),
                    str(row.n_trials),
                    str(row.master_seed),
                )
            )
        )
    return "\n".join(lines) + "\n"


def render_csv(records: Iterable[SweepRecord]) -> str:
    """Serialize sweep records straight to CSV text."""
    return rows_to_csv(records_to_rows(records))


def write_csv(path: str, records: Iterable[SweepRecord]) -> None:
    """Write the CSV with fixed newlines so output bytes are reproducible."""
    text = render_csv(records)
    with open(path, "wb") as handle:
        handle.write(text.encode("ascii"))


def csv_to_rows(text: str) -> list[CsvRow]:
    """Parse CSV text produced by :func:`rows_to_csv`.

    Raises :class:`ValidationError` on a malformed header, malformed line,
    or an empty body.
    """
    lines = text.splitlines()
    if not lines or tuple(lines[0].split(",")) != CSV_COLUMNS:
        raise ValidationError(
            f"results csv: expected header {','.join(CSV_COLUMNS)!r}, "
            f"got {(lines[0] if lines else '')!r}"
        )
    body = [line for line in lines[1:] if line]
    if not body:
        raise ValidationError("results csv: no data rows")
    rows = []
    for index, line in enumerate(body, start=2):
        fields = line.split(",")
        if len(fields) != len(CSV_COLUMNS):
            raise ValidationError(
                f"results csv: line {index} has {len(fields)} fields, expected {len(CSV_COLUMNS)}"
            )
        try:
            rows.append(
                CsvRow(
                    d_near_m=float(fields[0]),
                    d_far_m=float(fields[1]),
                    model=fields[2],
                    user=fields[3],
                    gt_db=float(fields[4]),
                    gr_db=float(fields[5]),
                    rx_power_dbm_mean=float(fields[6]),
                    rx_power_dbm_std=float(fields[7]),
                    sinr_db_mean=float(fields[8]),
                    sinr_db_std=float(fields[9]),
                    n_trials=int(fields[10]),
                    master_seed=int(fields[11]),
                )
            )
        except ValueError as exc:
            raise ValidationError(f"results csv: line {index} is malformed ({exc})") from exc
    return rows


def read_csv(path: str) -> list[CsvRow]:
    """Read and parse a results CSV file."""
    with open(path, "r", encoding="ascii") as handle:
        return csv_to_rows(handle.read())
