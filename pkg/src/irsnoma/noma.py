"""Power-domain superposition arithmetic: received power, far-user SINR,
and near-user SNR after interference cancellation."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, ValidationError

SPLIT_SUM_TOL = 1e-9

SINR_MODES = ("as_printed", "own_channel")
USERS = ("u1", "u2")


@dataclass(frozen=True)
class PowerSplit:
    """Amplitude coefficients of the near user (a1) and far user (a2).

    ``a1_sq`` and ``a2_sq`` keep the squared coefficients exactly as
    configured so configuration round-trips losslessly; ``a1`` and ``a2``
    are the normalized amplitudes actually used in the link equations.
    """

    a1: float
    a2: float
    a1_sq: float
    a2_sq: float


def validate_split(a1_sq: float, a2_sq: float) -> PowerSplit:
    """Build a :class:`PowerSplit` from squared coefficients.

    The far user must take the strictly larger share and the squares must
    sum to one within ``1e-9``; amplitudes are normalized so that
    ``a1**2 + a2**2 == 1`` to machine precision.
    """
    for name, value in (("a1_sq", a1_sq), ("a2_sq", a2_sq)):
        if not (isinstance(value, (int, float)) and 0.0 < value < 1.0):
            raise DomainError(f"power_split: {name} must lie in (0, 1), got {value!r}")
    total = a1_sq + a2_sq
    if abs(total - 1.0) > SPLIT_SUM_TOL:
        raise ValidationError(
            f"power_split: squared coefficients must sum to 1 within {SPLIT_SUM_TOL}, "
            f"got {a1_sq!r} + {a2_sq!r} = {total!r}"
        )
    if a2_sq <= a1_sq:
        raise ValidationError(
            f"power_split: the far user's share a2_sq={a2_sq!r} must exceed the near "
            f"user's a1_sq={a1_sq!r}"
        )
    return PowerSplit(
        a1=math.sqrt(a1_sq / total),
        a2=math.sqrt(a2_sq / total),
        a1_sq=a1_sq,
        a2_sq=a2_sq,
    )


@dataclass(frozen=True)
class LinkState:
    """One trial's link state for both users.

    ``h1``/``h2`` are the cascaded complex gains, ``l1``/``l2`` the linear
    end-to-end path losses, ``rho_w`` the transmit power, and ``noise_w``
    the noise power, all in linear units.
    """

    h1: complex
    h2: complex
    l1: float
    l2: float
    rho_w: float
    noise_w: float

    def __post_init__(self) -> None:
        if not (self.l1 > 0.0 and self.l2 > 0.0):
            raise DomainError(f"path losses must be positive, got {self.l1!r}, {self.l2!r}")
        if self.rho_w < 0.0:
            raise DomainError(f"transmit power must be >= 0, got {self.rho_w!r}")
        if not (self.noise_w > 0.0):
            raise DomainError(f"noise power must be positive, got {self.noise_w!r}")


def received_power_w(link: LinkState, user: str) -> float:
    """Total superimposed-signal power arriving at one user, in watts."""
    if user == "u1":
        return link.rho_w * abs(link.h1) ** 2 / link.l1
    if user == "u2":
        return link.rho_w * abs(link.h2) ** 2 / link.l2
    raise ValidationError(f"user must be one of {USERS}, got {user!r}")


def sinr_far(link: LinkState, split: PowerSplit, mode: str = "as_printed") -> float:
    """Far-user SINR: its own message against the near user's as interference.

    ``as_printed`` evaluates the interference term with the near user's
    channel and path loss, the form this mode is named for; ``own_channel``
    uses the far user's own channel and loss, the physically conventional
    reading.
    """
    signal = link.rho_w * split.a2**2 * abs(link.h2) ** 2 / link.l2
    if mode == "as_printed":
        interference = link.rho_w * split.a1**2 * abs(link.h1) ** 2 / link.l1
    elif mode == "own_channel":
        interference = link.rho_w * split.a1**2 * abs(link.h2) ** 2 / link.l2
    else:
        raise ValidationError(f"sinr_mode must be one of {SINR_MODES}, got {mode!r}")
    return signal / (interference + link.noise_w)


def snr_near(link: LinkState, split: PowerSplit) -> float:
    """Near-user SNR once the far user's message has been cancelled."""
    return link.rho_w * split.a1**2 * abs(link.h1) ** 2 / (link.l1 * link.noise_w)
