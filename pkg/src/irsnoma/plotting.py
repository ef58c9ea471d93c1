"""Static SVG charts plus plain-text data sidecars.

Outputs are deterministic: the SVG hash salt is pinned and no timestamps
are embedded, so identical inputs give identical bytes. Rendering uses the
Agg backend and needs no display server.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .errors import ValidationError
from .results import CsvRow, format_number

METRICS = ("rx_power", "sinr")

_METRIC_COLUMN = {"rx_power": "rx_power_dbm_mean", "sinr": "sinr_db_mean"}
_METRIC_LABEL = {"rx_power": "mean received power [dBm]", "sinr": "mean SINR [dB]"}

_STYLE = {
    "conventional": {"color": "#1f77b4", "marker": "o", "linestyle": "-"},
    "conventional_enhanced": {"color": "#2ca02c", "marker": "^", "linestyle": "-."},
    "modified": {"color": "#d62728", "marker": "s", "linestyle": "--"},
}


def series_by_model(rows: list[CsvRow], metric: str, user: str) -> dict[str, list[tuple[float, float]]]:
    """Group (d_near, value) pairs per model for one metric and user."""
    if metric not in METRICS:
        raise ValidationError(f"metric must be one of {METRICS}, got {metric!r}")
    if user not in ("u1", "u2"):
        raise ValidationError(f"user must be 'u1' or 'u2', got {user!r}")
    column = _METRIC_COLUMN[metric]
    series: dict[str, list[tuple[float, float]]] = {}
    for row in rows:
        if row.user != user:
            continue
        series.setdefault(row.model, []).append((row.d_near_m, getattr(row, column)))
    if not series:
        raise ValidationError(f"results csv: no data rows for user {user!r}")
    for points in series.values():
        points.sort()
    return series


def write_sidecar(path: str, series: dict[str, list[tuple[float, float]]], metric: str) -> None:
    """Plain-text columns (d_near then one column per model) for external plotters."""
    models = sorted(series)
    distances = sorted({d for points in series.values() for d, _ in points})
    lookup = {model: dict(points) for model, points in series.items()}
    lines = ["# d_near_m " + " ".join(f"{model}_{_METRIC_COLUMN[metric]}" for model in models)]
    for d in distances:
        cells = [format_number(d)]
        for model in models:
            value = lookup[model].get(d)
            cells.append(format_number(value) if value is not None else "nan")
        lines.append(" ".join(cells))
    with open(path, "wb") as handle:
        handle.write(("\n".join(lines) + "\n").encode("ascii"))


def plot_metric(rows: list[CsvRow], out_path: str, metric: str, user: str) -> str:
    """Render one line chart (one line per model) and its data sidecar.

    Returns the sidecar path, which is the output path with a ``.dat``
    suffix.
    """
    series = series_by_model(rows, metric, user)
    plt.rcParams["svg.hashsalt"] = "irsnoma"
    fig, ax = plt.subplots(figsize=(6.4, 4.4))
    for model in sorted(series):
        xs, ys = zip(*series[model])
        style = _STYLE.get(model, {})
        ax.plot(xs, ys, label=model, markersize=5, **style)
    ax.set_xlabel("near-user distance from surface [m]")
    ax.set_ylabel(_METRIC_LABEL[metric])
    ax.set_title(f"{_METRIC_LABEL[metric]} at {user}")
    ax.grid(True, linestyle=":", linewidth=0.8, alpha=0.6)
    ax.legend()
    fig.tight_layout()
    fig.savefig(out_path, format="svg", metadata={"Date": None})
    plt.close(fig)

    sidecar = _sidecar_path(out_path)
    write_sidecar(sidecar, series, metric)
    return sidecar


def _sidecar_path(out_path: str) -> str:
    stem, dot, suffix = out_path.rpartition(".")
    return (stem if dot else out_path) + ".dat"
