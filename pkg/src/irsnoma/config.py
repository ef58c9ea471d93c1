"""Scenario configuration files.

The on-disk format is a single JSON document whose keys mirror
:class:`irsnoma.sim.Scenario` field for field. Missing keys fall back to
the defaults; unknown keys are rejected with the offending key named.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import SimulatorError, ValidationError
from .geometry import Position, SiteLayout
from .noma import validate_split
from .pathloss import AntennaGains, IncidenceAngles, IrsPanel
from .sim import Scenario, SweepSpec

_SCENARIO_KEYS = (
    "carrier",
    "tx_power",
    "noise_dbm",
    "split",
    "panel",
    "k_elements",
    "angles",
    "layout",
    "gains_modified",
    "gains_conventional",
    "gains_enhanced",
    "sweep",
    "trials",
    "master_seed",
    "phase_policy",
    "sinr_mode",
    "conventional_gain_mode",
)


def _reject_unknown(data: dict, allowed: tuple[str, ...], context: str) -> None:
    unknown = [k for k in data if k not in allowed]
    if unknown:
        raise ValidationError(
            f"{context}: unknown key(s) {unknown}; allowed keys are {list(allowed)}"
        )


def _number(data: dict, key: str, default: float, context: str) -> float:
    value = data.get(key, default)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{context}.{key}: expected a number, got {value!r}")
    return float(value)


def _integer(data: dict, key: str, default: int, context: str) -> int:
    value = data.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{context}.{key}: expected an integer, got {value!r}")
    return value


def _string(data: dict, key: str, default: str, context: str) -> str:
    value = data.get(key, default)
    if not isinstance(value, str):
        raise ValidationError(f"{context}.{key}: expected a string, got {value!r}")
    return value


def _mapping(data: dict, key: str, context: str) -> dict:
    value = data.get(key, {})
    if not isinstance(value, dict):
        raise ValidationError(f"{context}.{key}: expected an object, got {value!r}")
    return value


def _position(data: dict, key: str, default: Position, context: str) -> Position:
    value = data.get(key)
    if value is None:
        return default
    if not (isinstance(value, list) and len(value) == 3):
        raise ValidationError(f"{context}.{key}: expected [x, y, z], got {value!r}")
    coords = []
    for axis, item in zip("xyz", value):
        if isinstance(item, bool) or not isinstance(item, (int, float)):
            raise ValidationError(f"{context}.{key}.{axis}: expected a number, got {item!r}")
        coords.append(float(item))
    return Position(*coords)


def scenario_from_mapping(data: dict[str, Any]) -> Scenario:
    """Build a validated :class:`Scenario` from a parsed config document."""
    if not isinstance(data, dict):
        raise ValidationError(f"config: expected a JSON object at top level, got {type(data).__name__}")
    _reject_unknown(data, _SCENARIO_KEYS, "config")
    defaults = Scenario()
    try:
        split_data = _mapping(data, "split", "config")
        _reject_unknown(split_data, ("a1_sq", "a2_sq"), "split")
        split = validate_split(
            _number(split_data, "a1_sq", defaults.split.a1_sq, "split"),
            _number(split_data, "a2_sq", defaults.split.a2_sq, "split"),
        )

        panel_data = _mapping(data, "panel", "config")
        _reject_unknown(panel_data, ("m_elems", "n_elems", "dx", "dy", "reflection_a"), "panel")
        panel = IrsPanel(
            m_elems=_integer(panel_data, "m_elems", defaults.panel.m_elems, "panel"),
            n_elems=_integer(panel_data, "n_elems", defaults.panel.n_elems, "panel"),
            dx=_number(panel_data, "dx", defaults.panel.dx, "panel"),
            dy=_number(panel_data, "dy", defaults.panel.dy, "panel"),
            reflection_a=_number(panel_data, "reflection_a", defaults.panel.reflection_a, "panel"),
        )

        angles_data = _mapping(data, "angles", "config")
        _reject_unknown(angles_data, ("theta_t_deg", "theta_r_deg"), "angles")
        angles = IncidenceAngles(
            theta_t_deg=_number(angles_data, "theta_t_deg", defaults.angles.theta_t_deg, "angles"),
            theta_r_deg=_number(angles_data, "theta_r_deg", defaults.angles.theta_r_deg, "angles"),
        )

        layout_data = _mapping(data, "layout", "config")
        _reject_unknown(layout_data, ("bs", "irs", "bearing_deg", "user_height", "cell_side"), "layout")
        layout = SiteLayout(
            bs=_position(layout_data, "bs", defaults.layout.bs, "layout"),
            irs=_position(layout_data, "irs", defaults.layout.irs, "layout"),
            bearing_deg=_number(layout_data, "bearing_deg", defaults.layout.bearing_deg, "layout"),
            user_height=_number(layout_data, "user_height", defaults.layout.user_height, "layout"),
            cell_side=_number(layout_data, "cell_side", defaults.layout.cell_side, "layout"),
        )

        gains = {}
        for key in ("gains_modified", "gains_conventional", "gains_enhanced"):
            gains_data = _mapping(data, key, "config")
            _reject_unknown(gains_data, ("gt_db", "gr_db"), key)
            default_gains = getattr(defaults, key)
            gains[key] = AntennaGains(
                gt_db=_number(gains_data, "gt_db", default_gains.gt_db, key),
                gr_db=_number(gains_data, "gr_db", default_gains.gr_db, key),
            )

        sweep_data = _mapping(data, "sweep", "config")
        _reject_unknown(sweep_data, ("d_near_start", "d_near_stop", "points"), "sweep")
        sweep = SweepSpec(
            d_near_start=_number(sweep_data, "d_near_start", defaults.sweep.d_near_start, "sweep"),
            d_near_stop=_number(sweep_data, "d_near_stop", defaults.sweep.d_near_stop, "sweep"),
            points=_integer(sweep_data, "points", defaults.sweep.points, "sweep"),
        )

        return Scenario(
            carrier=_number(data, "carrier", defaults.carrier, "config"),
            tx_power=_number(data, "tx_power", defaults.tx_power, "config"),
            noise_dbm=_number(data, "noise_dbm", defaults.noise_dbm, "config"),
            split=split,
            panel=panel,
            k_elements=_integer(data, "k_elements", defaults.k_elements, "config"),
            angles=angles,
            layout=layout,
            gains_modified=gains["gains_modified"],
            gains_conventional=gains["gains_conventional"],
            gains_enhanced=gains["gains_enhanced"],
            sweep=sweep,
            trials=_integer(data, "trials", defaults.trials, "config"),
            master_seed=_integer(data, "master_seed", defaults.master_seed, "config"),
            phase_policy=_string(data, "phase_policy", defaults.phase_policy, "config"),
            sinr_mode=_string(data, "sinr_mode", defaults.sinr_mode, "config"),
            conventional_gain_mode=_string(
                data, "conventional_gain_mode", defaults.conventional_gain_mode, "config"
            ),
        )
    except ValidationError:
        raise
    except SimulatorError as exc:
        raise ValidationError(str(exc)) from exc


def scenario_to_mapping(scn: Scenario) -> dict[str, Any]:
    """Serialize a scenario to the config document structure."""
    return {
        "carrier": scn.carrier,
        "tx_power": scn.tx_power,
        "noise_dbm": scn.noise_dbm,
        "split": {"a1_sq": scn.split.a1_sq, "a2_sq": scn.split.a2_sq},
        "panel": {
            "m_elems": scn.panel.m_elems,
            "n_elems": scn.panel.n_elems,
            "dx": scn.panel.dx,
            "dy": scn.panel.dy,
            "reflection_a": scn.panel.reflection_a,
        },
        "k_elements": scn.k_elements,
        "angles": {
            "theta_t_deg": scn.angles.theta_t_deg,
            "theta_r_deg": scn.angles.theta_r_deg,
        },
        "layout": {
            "bs": [scn.layout.bs.x, scn.layout.bs.y, scn.layout.bs.z],
            "irs": [scn.layout.irs.x, scn.layout.irs.y, scn.layout.irs.z],
            "bearing_deg": scn.layout.bearing_deg,
            "user_height": scn.layout.user_height,
            "cell_side": scn.layout.cell_side,
        },
        "gains_modified": {"gt_db": scn.gains_modified.gt_db, "gr_db": scn.gains_modified.gr_db},
        "gains_conventional": {
            "gt_db": scn.gains_conventional.gt_db,
            "gr_db": scn.gains_conventional.gr_db,
        },
        "gains_enhanced": {"gt_db": scn.gains_enhanced.gt_db, "gr_db": scn.gains_enhanced.gr_db},
        "sweep": {
            "d_near_start": scn.sweep.d_near_start,
            "d_near_stop": scn.sweep.d_near_stop,
            "points": scn.sweep.points,
        },
        "trials": scn.trials,
        "master_seed": scn.master_seed,
        "phase_policy": scn.phase_policy,
        "sinr_mode": scn.sinr_mode,
        "conventional_gain_mode": scn.conventional_gain_mode,
    }


def render_config(scn: Scenario) -> str:
    """Canonical JSON rendering of a scenario, for audit output."""
    return json.dumps(scenario_to_mapping(scn), indent=2) + "\n"


def load_config(path: str) -> Scenario:
    """Read and validate a scenario config file.

    An empty document (or one containing just ``{}``) yields the default
    scenario. I/O failures propagate as :class:`OSError`.
    """
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    if not text.strip():
        return Scenario()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"config: not valid JSON ({exc})") from exc
    return scenario_from_mapping(data)
