"""Decibel, dBm, and wavelength conversions.

All internal computation is done in linear units (watts, power ratios);
dB and dBm appear only at configuration and reporting boundaries.
"""

from __future__ import annotations

import math

from .errors import DomainError, ValidationError

SPEED_OF_LIGHT_M_S = 299_792_458.0


def db_to_linear(value_db: float) -> float:
    """Convert a dB figure to a linear power ratio."""
    if not math.isfinite(value_db):
        raise ValidationError(f"dB value must be finite, got {value_db!r}")
    return 10.0 ** (value_db / 10.0)


def linear_to_db(ratio: float) -> float:
    """Convert a linear power ratio to dB."""
    if not math.isfinite(ratio) or ratio <= 0.0:
        raise DomainError(f"ratio must be positive and finite, got {ratio!r}")
    return 10.0 * math.log10(ratio)


def dbm_to_watts(value_dbm: float) -> float:
    """Convert a dBm power level to watts."""
    if not math.isfinite(value_dbm):
        raise ValidationError(f"dBm value must be finite, got {value_dbm!r}")
    return 10.0 ** ((value_dbm - 30.0) / 10.0)


def watts_to_dbm(watts: float) -> float:
    """Convert a power in watts to dBm."""
    if not math.isfinite(watts) or watts <= 0.0:
        raise DomainError(f"power must be positive and finite, got {watts!r}")
    return 10.0 * math.log10(watts) + 30.0


def wavelength_m(carrier_hz: float) -> float:
    """Carrier wavelength in metres."""
    if not math.isfinite(carrier_hz) or carrier_hz <= 0.0:
        raise DomainError(f"carrier frequency must be positive, got {carrier_hz!r}")
    return SPEED_OF_LIGHT_M_S / carrier_hz
