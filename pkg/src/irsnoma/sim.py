"""Seeded Monte-Carlo engine and the three-way path-loss model comparison.

Every random draw flows from named Philox substreams derived from the
scenario's master seed, so results are a pure function of the scenario and
independent of how the work is scheduled across workers.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import partial

import numpy as np

from .channel import (
    FadingModel,
    coherent_phases,
    random_phases_batch,
    sample_fading_batch,
)
from .errors import InfeasibleGeometryError, ValidationError
from .geometry import SiteLayout, distance, layout_at
from .noma import SINR_MODES, USERS, PowerSplit, validate_split
from .pathloss import (
    GAIN_MODES,
    AntennaGains,
    IncidenceAngles,
    IrsPanel,
    conventional_link_db,
    irs_pathloss_linear,
)
from .units import db_to_linear, dbm_to_watts

MODEL_CONVENTIONAL = "conventional"
MODEL_ENHANCED = "conventional_enhanced"
MODEL_MODIFIED = "modified"

# Alphabetical, which is also the CSV sort order.
ALL_MODELS = (MODEL_CONVENTIONAL, MODEL_ENHANCED, MODEL_MODIFIED)
BASELINE_MODELS = (MODEL_CONVENTIONAL, MODEL_MODIFIED)

PHASE_POLICIES = ("coherent_far", "coherent_near", "random")

# Draw-kind tags inside the per-point substream key.
_TAG_G0 = 0
_TAG_G1 = 1
_TAG_G2 = 2
_TAG_PHASES = 3

_MAX_SEED = 2**64


@dataclass(frozen=True)
class SweepSpec:
    """Linearly spaced near-user distances, far user at twice each."""

    d_near_start: float = 10.0
    d_near_stop: float = 100.0
    points: int = 10

    def __post_init__(self) -> None:
        if not (self.d_near_start > 0.0):
            raise ValidationError(f"sweep: d_near_start must be positive, got {self.d_near_start!r}")
        if self.d_near_stop < self.d_near_start:
            raise ValidationError(
                f"sweep: d_near_stop={self.d_near_stop!r} must be >= d_near_start="
                f"{self.d_near_start!r}"
            )
        if self.points < 1:
            raise ValidationError(f"sweep: points must be >= 1, got {self.points!r}")


def _default_split() -> PowerSplit:
    return validate_split(0.2, 0.8)


@dataclass(frozen=True)
class Scenario:
    """Full experiment configuration.

    Defaults reproduce the reference measurement setup: 90 GHz carrier, 6 W
    transmit power, -94 dBm noise, a 64x64-element panel with 3.8 mm
    elements and reflection coefficient 0.9, 45-degree incidence, antenna
    gains of 5 dB for the surface-specific model and 10 dB (20 dB enhanced)
    for the conventional one.
    """

    carrier: float = 90e9          # Hz
    tx_power: float = 6.0          # W
    noise_dbm: float = -94.0
    split: PowerSplit = field(default_factory=_default_split)
    panel: IrsPanel = field(default_factory=IrsPanel)
    k_elements: int = 64
    angles: IncidenceAngles = field(default_factory=IncidenceAngles)
    layout: SiteLayout = field(default_factory=SiteLayout)
    gains_modified: AntennaGains = AntennaGains(5.0, 5.0)
    gains_conventional: AntennaGains = AntennaGains(10.0, 10.0)
    gains_enhanced: AntennaGains = AntennaGains(20.0, 20.0)
    sweep: SweepSpec = field(default_factory=SweepSpec)
    trials: int = 10_000
    master_seed: int = 42
    phase_policy: str = "coherent_far"
    sinr_mode: str = "as_printed"
    conventional_gain_mode: str = "per_link"

    def __post_init__(self) -> None:
        if not (self.carrier > 0.0 and math.isfinite(self.carrier)):
            raise ValidationError(f"carrier: must be positive, got {self.carrier!r}")
        if not (self.tx_power >= 0.0 and math.isfinite(self.tx_power)):
            raise ValidationError(f"tx_power: must be >= 0, got {self.tx_power!r}")
        if not math.isfinite(self.noise_dbm):
            raise ValidationError(f"noise_dbm: must be finite, got {self.noise_dbm!r}")
        if self.k_elements < 1:
            raise ValidationError(f"k_elements: must be >= 1, got {self.k_elements!r}")
        if self.trials < 1:
            raise ValidationError(f"trials: must be >= 1, got {self.trials!r}")
        if not (0 <= self.master_seed < _MAX_SEED):
            raise ValidationError(
                f"master_seed: must be a 64-bit unsigned integer, got {self.master_seed!r}"
            )
        if self.phase_policy not in PHASE_POLICIES:
            raise ValidationError(
                f"phase_policy: must be one of {PHASE_POLICIES}, got {self.phase_policy!r}"
            )
        if self.sinr_mode not in SINR_MODES:
            raise ValidationError(f"sinr_mode: must be one of {SINR_MODES}, got {self.sinr_mode!r}")
        if self.conventional_gain_mode not in GAIN_MODES:
            raise ValidationError(
                f"conventional_gain_mode: must be one of {GAIN_MODES}, "
                f"got {self.conventional_gain_mode!r}"
            )


@dataclass(frozen=True)
class ModelMetrics:
    """One trial's outputs for a single path-loss model."""

    rx_power_u1_w: float
    rx_power_u2_w: float
    snr_u1: float
    sinr_u2: float


@dataclass(frozen=True)
class TrialMetrics:
    """One trial's outputs for all three model variants on a shared draw."""

    conventional: ModelMetrics
    conventional_enhanced: ModelMetrics
    modified: ModelMetrics

    def for_model(self, model: str) -> ModelMetrics:
        return getattr(self, model)


@dataclass(frozen=True)
class MetricStats:
    """Arithmetic mean and population standard deviation in linear units."""

    mean: float
    std: float


@dataclass(frozen=True)
class ModelUserStats:
    """Aggregated statistics for one (model, user) pair at one sweep point."""

    model: str
    user: str
    gt_db: float
    gr_db: float
    rx_power_w: MetricStats
    sinr: MetricStats  # u1: post-cancellation SNR; u2: SINR


@dataclass(frozen=True)
class SweepRecord:
    """Per-sweep-point aggregate over all trials.

    ``entries`` is ordered by (model, user); ``path_loss_db`` carries the
    per-model diagnostic end-to-end losses in dB for each user.
    """

    d_near_m: float
    d_far_m: float
    n_trials: int
    master_seed: int
    entries: tuple[ModelUserStats, ...]
    path_loss_db: dict[str, dict[str, float]]


def sweep_distances(scn: Scenario) -> np.ndarray:
    """The near-user distance grid of the scenario's sweep."""
    return np.linspace(scn.sweep.d_near_start, scn.sweep.d_near_stop, scn.sweep.points)


def substream(master_seed: int, point_index: int, tag: int) -> np.random.Generator:
    """Philox stream for one (sweep point, draw kind) pair.

    Within each stream, trial ``t`` owns the ``t``-th fixed-size block of
    values, so any trial can be replayed in isolation and a longer run's
    first trials match a shorter run's exactly.
    """
    if not (0 <= point_index < 2**48):
        raise ValidationError(f"point_index out of range: {point_index!r}")
    key = ((master_seed & (_MAX_SEED - 1)) << 64) | (point_index << 8) | (tag & 0xFF)
    return np.random.Generator(np.random.Philox(key=key))


def scenario_gains(scn: Scenario, model: str) -> AntennaGains:
    """Antenna gains a given model variant uses."""
    if model == MODEL_CONVENTIONAL:
        return scn.gains_conventional
    if model == MODEL_ENHANCED:
        return scn.gains_enhanced
    if model == MODEL_MODIFIED:
        return scn.gains_modified
    raise ValidationError(f"unknown model {model!r}")


def model_losses(scn: Scenario, d_near: float) -> dict[str, tuple[float, float]]:
    """Linear end-to-end losses (near user, far user) for every model."""
    layout = layout_at(scn.layout, d_near)
    d1 = distance(layout.bs, layout.irs)
    d2_near = distance(layout.irs, layout.u1)
    d2_far = distance(layout.irs, layout.u2)
    losses: dict[str, tuple[float, float]] = {}
    for model in ALL_MODELS:
        gains = scenario_gains(scn, model)
        if model == MODEL_MODIFIED:
            l_near = irs_pathloss_linear(d1, d2_near, scn.panel, scn.angles, gains, scn.carrier)
            l_far = irs_pathloss_linear(d1, d2_far, scn.panel, scn.angles, gains, scn.carrier)
        else:
            mode = scn.conventional_gain_mode
            l_near = db_to_linear(conventional_link_db(d1, d2_near, gains, mode))
            l_far = db_to_linear(conventional_link_db(d1, d2_far, gains, mode))
        losses[model] = (l_near, l_far)
    return losses


def _draw_cascaded(
    scn: Scenario,
    point_index: int,
    trials: int,
    fading_sampler=sample_fading_batch,
) -> tuple[np.ndarray, np.ndarray]:
    """Cascaded gains (h1, h2) for trials 0..trials-1 at one sweep point.

    One reflection configuration is applied per trial and shared by both
    users; which user it is matched to is the scenario's phase policy.
    ``fading_sampler`` is a test seam with the signature of
    :func:`sample_fading_batch`.
    """
    k = scn.k_elements
    seed = scn.master_seed
    g0 = fading_sampler(substream(seed, point_index, _TAG_G0), trials, k, FadingModel.RAYLEIGH_UNIT)
    g1 = fading_sampler(substream(seed, point_index, _TAG_G1), trials, k, FadingModel.RAYLEIGH_UNIT)
    g2 = fading_sampler(substream(seed, point_index, _TAG_G2), trials, k, FadingModel.RAYLEIGH_UNIT)
    if scn.phase_policy == "random":
        thetas = random_phases_batch(substream(seed, point_index, _TAG_PHASES), trials, k)
    elif scn.phase_policy == "coherent_far":
        thetas = coherent_phases(g2, g0)
    else:
        thetas = coherent_phases(g1, g0)
    reflect = np.exp(1j * thetas)
    h1 = np.sum(g1 * reflect * g0, axis=-1)
    h2 = np.sum(g2 * reflect * g0, axis=-1)
    return h1, h2


def _model_metric_arrays(
    scn: Scenario,
    losses: dict[str, tuple[float, float]],
    h1: np.ndarray,
    h2: np.ndarray,
) -> dict[str, tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]]:
    """Per-trial (rx1, rx2, snr1, sinr2) arrays for every model."""
    p1 = np.abs(h1) ** 2
    p2 = np.abs(h2) ** 2
    rho = scn.tx_power
    noise_w = dbm_to_watts(scn.noise_dbm)
    a1_sq = scn.split.a1 * scn.split.a1
    a2_sq = scn.split.a2 * scn.split.a2
    out = {}
    for model, (l1, l2) in losses.items():
        rx1 = rho * p1 / l1
        rx2 = rho * p2 / l2
        snr1 = rho * a1_sq * p1 / (l1 * noise_w)
        signal = rho * a2_sq * p2 / l2
        if scn.sinr_mode == "as_printed":
            interference = rho * a1_sq * p1 / l1
        else:
            interference = rho * a1_sq * p2 / l2
        sinr2 = signal / (interference + noise_w)
        out[model] = (rx1, rx2, snr1, sinr2)
    return out


def run_trial(
    scn: Scenario,
    point_index: int,
    trial_index: int,
    fading_sampler=sample_fading_batch,
) -> TrialMetrics:
    """Evaluate all three model variants on one trial's shared fading draw.

    Deterministic for fixed (scenario, point_index, trial_index); replays
    exactly the draw blocks the full sweep would use for this trial.
    """
    if not (0 <= point_index < scn.sweep.points):
        raise ValidationError(
            f"point_index {point_index!r} outside sweep of {scn.sweep.points} points"
        )
    if not (0 <= trial_index < scn.trials):
        raise ValidationError(f"trial_index {trial_index!r} outside {scn.trials} trials")
    d_near = float(sweep_distances(scn)[point_index])
    losses = model_losses(scn, d_near)
    h1, h2 = _draw_cascaded(scn, point_index, trial_index + 1, fading_sampler)
    arrays = _model_metric_arrays(scn, losses, h1[-1:], h2[-1:])
    per_model = {
        model: ModelMetrics(
            rx_power_u1_w=float(rx1[0]),
            rx_power_u2_w=float(rx2[0]),
            snr_u1=float(snr1[0]),
            sinr_u2=float(sinr2[0]),
        )
        for model, (rx1, rx2, snr1, sinr2) in arrays.items()
    }
    return TrialMetrics(
        conventional=per_model[MODEL_CONVENTIONAL],
        conventional_enhanced=per_model[MODEL_ENHANCED],
        modified=per_model[MODEL_MODIFIED],
    )


def _stats(values: np.ndarray) -> MetricStats:
    return MetricStats(mean=float(np.mean(values)), std=float(np.std(values)))


def run_point(
    scn: Scenario,
    point_index: int,
    models: tuple[str, ...] = BASELINE_MODELS,
    d_near: float | None = None,
) -> SweepRecord:
    """Aggregate all trials at one sweep point (or an explicit distance)."""
    if d_near is None:
        d_near = float(sweep_distances(scn)[point_index])
    try:
        losses = model_losses(scn, d_near)
    except InfeasibleGeometryError as exc:
        raise InfeasibleGeometryError(
            f"sweep point {point_index} (d_near={d_near:.6g} m): {exc}"
        ) from exc
    h1, h2 = _draw_cascaded(scn, point_index, scn.trials)
    arrays = _model_metric_arrays(scn, losses, h1, h2)
    entries = []
    for model in models:
        gains = scenario_gains(scn, model)
        rx1, rx2, snr1, sinr2 = arrays[model]
        entries.append(
            ModelUserStats(
                model=model, user="u1", gt_db=gains.gt_db, gr_db=gains.gr_db,
                rx_power_w=_stats(rx1), sinr=_stats(snr1),
            )
        )
        entries.append(
            ModelUserStats(
                model=model, user="u2", gt_db=gains.gt_db, gr_db=gains.gr_db,
                rx_power_w=_stats(rx2), sinr=_stats(sinr2),
            )
        )
    layout = layout_at(scn.layout, d_near)
    return SweepRecord(
        d_near_m=d_near,
        d_far_m=distance(layout.irs, layout.u2),
        n_trials=scn.trials,
        master_seed=scn.master_seed,
        entries=tuple(entries),
        path_loss_db={
            model: {
                "u1": 10.0 * math.log10(losses[model][0]),
                "u2": 10.0 * math.log10(losses[model][1]),
            }
            for model in models
        },
    )


def _run(scn: Scenario, models: tuple[str, ...], n_workers: int) -> list[SweepRecord]:
    points = range(scn.sweep.points)
    if n_workers <= 1:
        return [run_point(scn, i, models) for i in points]
    # Points are independent; the ordered map keeps the reduction identical
    # to the serial run no matter how many workers execute it.
    with ProcessPoolExecutor(max_workers=n_workers) as pool:
        return list(pool.map(partial(_point_task, scn, models), points))


def _point_task(scn: Scenario, models: tuple[str, ...], point_index: int) -> SweepRecord:
    return run_point(scn, point_index, models)


def run_sweep(scn: Scenario, n_workers: int = 1) -> list[SweepRecord]:
    """Sweep the two baseline models (conventional and surface-specific)."""
    return _run(scn, BASELINE_MODELS, n_workers)


def compare_models(scn: Scenario, n_workers: int = 1) -> list[SweepRecord]:
    """Sweep all three variants, including the gain-enhanced conventional one.

    All variants are evaluated on identical fading draws, so gain changes
    show up as pure linear factors.
    """
    return _run(scn, ALL_MODELS, n_workers)


def point_record(scn: Scenario, d_near: float, models: tuple[str, ...] = ALL_MODELS) -> SweepRecord:
    """Single-distance inspection record, using the point-0 substreams."""
    return run_point(scn, 0, models, d_near=d_near)


def with_overrides(scn: Scenario, seed: int | None = None, trials: int | None = None) -> Scenario:
    """Copy a scenario with the seed and/or trial count replaced."""
    changes = {}
    if seed is not None:
        changes["master_seed"] = seed
    if trials is not None:
        changes["trials"] = trials
    return replace(scn, **changes) if changes else scn
