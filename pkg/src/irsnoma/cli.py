"""Command-line front end: sweeps, model comparison, plots, and single-point
inspection.

Exit codes: 0 success, 1 configuration/validation error, 2 I/O error,
3 numeric domain error.
"""

from __future__ import annotations

import json
import sys

import click

from .config import load_config, render_config
from .errors import DomainError, ValidationError
from .plotting import plot_metric
from .results import read_csv, records_to_rows, rows_to_csv, write_csv
from .sim import (
    ALL_MODELS,
    Scenario,
    compare_models,
    point_record,
    run_sweep,
    with_overrides,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2
EXIT_DOMAIN = 3


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_scenario(config_path: str | None) -> Scenario:
    if config_path is None:
        return Scenario()
    return load_config(config_path)


def _guarded(action) -> None:
    try:
        action()
    except ValidationError as exc:
        _fail(EXIT_VALIDATION, str(exc))
    except DomainError as exc:
        _fail(EXIT_DOMAIN, str(exc))
    except OSError as exc:
        _fail(EXIT_IO, str(exc))


@click.group()
def main() -> None:
    """Link-level simulator for a surface-assisted two-user downlink."""


@main.command()
@click.option("--config", "config_path", type=str, default=None, help="Scenario config file (JSON).")
@click.option("--out", "out_path", type=str, default=None, help="Output CSV path.")
@click.option("--seed", type=int, default=None, help="Override the master seed.")
@click.option("--trials", type=int, default=None, help="Override the trial count.")
@click.option("--show-config", is_flag=True, help="Print the resolved config and exit.")
def sweep(config_path, out_path, seed, trials, show_config) -> None:
    """Sweep the two baseline models and write a results CSV."""

    def action() -> None:
        scn = with_overrides(_load_scenario(config_path), seed=seed, trials=trials)
        if show_config:
            click.echo(render_config(scn), nl=False)
            return
        if out_path is None:
            raise ValidationError("missing --out: an output CSV path is required")
        write_csv(out_path, run_sweep(scn))

    _guarded(action)


@main.command()
@click.option("--config", "config_path", type=str, default=None, help="Scenario config file (JSON).")
@click.option("--out", "out_path", type=str, default=None, help="Output CSV path.")
@click.option("--seed", type=int, default=None, help="Override the master seed.")
@click.option("--trials", type=int, default=None, help="Override the trial count.")
@click.option("--show-config", is_flag=True, help="Print the resolved config and exit.")
def compare(config_path, out_path, seed, trials, show_config) -> None:
    """Sweep all three model variants (including the gain-enhanced one)."""

    def action() -> None:
        scn = with_overrides(_load_scenario(config_path), seed=seed, trials=trials)
        if show_config:
            click.echo(render_config(scn), nl=False)
            return
        if out_path is None:
            raise ValidationError("missing --out: an output CSV path is required")
        write_csv(out_path, compare_models(scn))

    _guarded(action)


@main.command()
@click.argument("in_csv", type=str)
@click.option("--out", "out_path", type=str, required=True, help="Output SVG path.")
@click.option("--metric", type=click.Choice(["rx_power", "sinr"]), default="rx_power",
              help="Which metric column to plot.")
@click.option("--user", type=click.Choice(["u1", "u2"]), default="u1", help="Which user to plot.")
def plot(in_csv, out_path, metric, user) -> None:
    """Render a results CSV as an SVG line chart plus a .dat sidecar."""

    def action() -> None:
        rows = read_csv(in_csv)
        plot_metric(rows, out_path, metric, user)

    _guarded(action)


@main.command()
@click.argument("d_near", type=float)
@click.option("--config", "config_path", type=str, default=None, help="Scenario config file (JSON).")
@click.option("--show-config", is_flag=True, help="Print the resolved config and exit.")
def point(d_near, config_path, show_config) -> None:
    """Print one structured record (all models, users, metrics) at D_NEAR."""

    def action() -> None:
        scn = _load_scenario(config_path)
        if show_config:
            click.echo(render_config(scn), nl=False)
            return
        if d_near <= 0:
            raise ValidationError(f"d_near must be positive, got {d_near!r}")
        record = point_record(scn, d_near, ALL_MODELS)
        rows = records_to_rows([record])
        document = {
            "d_near_m": record.d_near_m,
            "d_far_m": record.d_far_m,
            "n_trials": record.n_trials,
            "master_seed": record.master_seed,
            "path_loss_db": record.path_loss_db,
            "csv": rows_to_csv(rows).splitlines(),
        }
        click.echo(json.dumps(document, indent=2))

    _guarded(action)


if __name__ == "__main__":
    main()
