"""Large-scale attenuation models.

Two models are provided: the classic log-distance law applied per hop, and a
far-field frequency-distance product model specific to links relayed by a
passive reflecting surface, where the loss grows with the square of the
product of the two hop distances and shrinks with the element count and
aperture of the surface.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import DomainError, ValidationError
from .units import db_to_linear, wavelength_m

LOG_DISTANCE_INTERCEPT_DB = 35.1
LOG_DISTANCE_SLOPE_DB = 36.7

# Both models assume far-field propagation; below this separation the
# numbers are still produced but flagged.
FAR_FIELD_MIN_DISTANCE_M = 1.0

GAIN_MODES = ("per_link", "per_segment")


@dataclass(frozen=True)
class IrsPanel:
    """Reflecting panel: element grid counts and per-element geometry.

    ``m_elems`` and ``n_elems`` are the transmit-side and receive-side
    element counts of the surface; ``dx`` and ``dy`` are the length and
    width of a single element in metres; ``reflection_a`` is the amplitude
    reflection coefficient in (0, 1].
    """

    m_elems: int = 64
    n_elems: int = 64
    dx: float = 0.0038
    dy: float = 0.0038
    reflection_a: float = 0.9

    def __post_init__(self) -> None:
        if self.m_elems < 1 or self.n_elems < 1:
            raise ValidationError(
                f"panel: element counts must be >= 1, got m_elems={self.m_elems!r}, "
                f"n_elems={self.n_elems!r}"
            )
        if not (self.dx > 0.0 and self.dy > 0.0):
            raise ValidationError(f"panel: dx and dy must be positive, got {self.dx!r}, {self.dy!r}")
        if not (0.0 < self.reflection_a <= 1.0):
            raise ValidationError(
                f"panel: reflection_a must lie in (0, 1], got {self.reflection_a!r}"
            )


@dataclass(frozen=True)
class IncidenceAngles:
    """Transmit-side and receive-side incidence angles, degrees from broadside."""

    theta_t_deg: float = 45.0
    theta_r_deg: float = 45.0

    def __post_init__(self) -> None:
        for name, value in (("theta_t_deg", self.theta_t_deg), ("theta_r_deg", self.theta_r_deg)):
            if not (-90.0 < value < 90.0):
                raise ValidationError(
                    f"angles: {name} must lie strictly inside (-90, 90) degrees, got {value!r}"
                )


@dataclass(frozen=True)
class AntennaGains:
    """Transmitter and receiver antenna gains in dB."""

    gt_db: float
    gr_db: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.gt_db) and math.isfinite(self.gr_db)):
            raise ValidationError(
                f"gains: gt_db and gr_db must be finite, got {self.gt_db!r}, {self.gr_db!r}"
            )


def _check_distance(d: float, name: str) -> None:
    if not math.isfinite(d) or d <= 0.0:
        raise DomainError(f"{name} must be positive, got {d!r}")
    if d < FAR_FIELD_MIN_DISTANCE_M:
        warnings.warn(
            f"{name}={d!r} m is below the {FAR_FIELD_MIN_DISTANCE_M} m far-field "
            "reference distance; the loss models are unreliable this close",
            stacklevel=3,
        )


def conventional_segment_db(d: float) -> float:
    """Log-distance loss of a single hop in dB, antenna gains excluded.

    Evaluates ``35.1 + 36.7 * log10(d)`` for a separation ``d`` in metres.
    """
    _check_distance(d, "distance")
    return LOG_DISTANCE_INTERCEPT_DB + LOG_DISTANCE_SLOPE_DB * math.log10(d)


def conventional_link_db(
    d1: float,
    d2: float,
    gains: AntennaGains,
    mode: str = "per_link",
) -> float:
    """End-to-end two-hop log-distance loss in dB.

    Parameters
    ----------
    d1, d2
        Feed-to-surface and surface-to-user separations in metres.
    gains
        Transmitter and receiver antenna gains.
    mode
        ``per_link`` subtracts the two antenna gains once for the whole
        end-to-end link (default); ``per_segment`` subtracts them on each
        hop, which double-counts the same two antennas and is kept only so
        that reading of the segment formula can be reproduced.
    """
    base = conventional_segment_db(d1) + conventional_segment_db(d2)
    if mode == "per_link":
        return base - gains.gt_db - gains.gr_db
    if mode == "per_segment":
        return base - 2.0 * (gains.gt_db + gains.gr_db)
    raise ValidationError(f"conventional_gain_mode must be one of {GAIN_MODES}, got {mode!r}")


def scattering_gain(panel: IrsPanel, lam: float) -> float:
    """Aperture factor ``4*pi*dx*dy / lam**2`` of one reflecting element."""
    if not (lam > 0.0) or not math.isfinite(lam):
        raise DomainError(f"wavelength must be positive, got {lam!r}")
    return 4.0 * math.pi * panel.dx * panel.dy / lam**2


def irs_pathloss_linear(
    d1: float,
    d2: float,
    panel: IrsPanel,
    angles: IncidenceAngles,
    gains: AntennaGains,
    carrier_hz: float,
) -> float:
    """Surface-specific far-field path loss as a linear power ratio.

    Evaluates::

                        64 * pi^3 * (d1 * d2)^2
        -----------------------------------------------------------
        M^2 N^2 lam^2 A^2 G Gt Gr dx dy cos(theta_t) cos(theta_r)

    with ``G`` the per-element scattering gain ``4*pi*dx*dy/lam**2`` and the
    antenna gains converted from dB. The quotient is reported as-is; it is
    not clamped to values above one at extreme parameters.

    Parameters
    ----------
    d1, d2
        Feed-to-surface and surface-to-user separations in metres.
    panel
        Element counts, element dimensions, and reflection coefficient.
    angles
        Incidence angles at the surface; cosines must be positive.
    gains
        Transmitter and receiver antenna gains in dB.
    carrier_hz
        Carrier frequency in Hz, used to derive the wavelength.
    """
    _check_distance(d1, "d1")
    _check_distance(d2, "d2")
    lam = wavelength_m(carrier_hz)
    cos_t = math.cos(math.radians(angles.theta_t_deg))
    cos_r = math.cos(math.radians(angles.theta_r_deg))
    if cos_t <= 0.0 or cos_r <= 0.0:
        raise DomainError(
            f"incidence angle cosines must be positive, got cos(theta_t)={cos_t!r}, "
            f"cos(theta_r)={cos_r!r}"
        )
    gain = scattering_gain(panel, lam)
    gt = db_to_linear(gains.gt_db)
    gr = db_to_linear(gains.gr_db)
    numerator = 64.0 * math.pi**3 * (d1 * d2) ** 2
    denominator = (
        float(panel.m_elems) ** 2
        * float(panel.n_elems) ** 2
        * lam**2
        * panel.reflection_a**2
        * gain
        * gt
        * gr
        * panel.dx
        * panel.dy
        * cos_t
        * cos_r
    )
    return numerator / denominator
