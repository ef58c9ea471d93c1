"""Link-level simulator for a two-user downlink served through a passive
reflecting surface, comparing a conventional log-distance path-loss model
against a surface-specific frequency-distance model."""

from .channel import (
    FadingModel,
    cascaded_gain,
    coherent_phases,
    random_phases,
    sample_fading,
)
from .errors import (
    DimensionError,
    DomainError,
    InfeasibleGeometryError,
    SimulatorError,
    ValidationError,
)
from .geometry import Layout, Position, SiteLayout, distance, layout_at, place_users
from .noma import (
    LinkState,
    PowerSplit,
    received_power_w,
    sinr_far,
    snr_near,
    validate_split,
)
from .pathloss import (
    AntennaGains,
    IncidenceAngles,
    IrsPanel,
    conventional_link_db,
    conventional_segment_db,
    irs_pathloss_linear,
    scattering_gain,
)
from .sim import (
    ALL_MODELS,
    BASELINE_MODELS,
    Scenario,
    SweepRecord,
    SweepSpec,
    TrialMetrics,
    compare_models,
    point_record,
    run_sweep,
    run_trial,
)
from .units import (
    SPEED_OF_LIGHT_M_S,
    db_to_linear,
    dbm_to_watts,
    linear_to_db,
    watts_to_dbm,
    wavelength_m,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_MODELS",
    "AntennaGains",
    "BASELINE_MODELS",
    "DimensionError",
    "DomainError",
    "FadingModel",
    "IncidenceAngles",
    "InfeasibleGeometryError",
    "IrsPanel",
    "Layout",
    "LinkState",
    "Position",
    "PowerSplit",
    "SPEED_OF_LIGHT_M_S",
    "Scenario",
    "SimulatorError",
    "SiteLayout",
    "SweepRecord",
    "SweepSpec",
    "TrialMetrics",
    "ValidationError",
    "cascaded_gain",
    "coherent_phases",
    "compare_models",
    "conventional_link_db",
    "conventional_segment_db",
    "db_to_linear",
    "dbm_to_watts",
    "distance",
    "irs_pathloss_linear",
    "layout_at",
    "linear_to_db",
    "place_users",
    "point_record",
    "random_phases",
    "received_power_w",
    "run_sweep",
    "run_trial",
    "sample_fading",
    "scattering_gain",
    "sinr_far",
    "snr_near",
    "validate_split",
    "watts_to_dbm",
    "wavelength_m",
]
