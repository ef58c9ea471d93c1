"""3D placement of base station, reflecting surface, and the two users.

The far user always sits at twice the near user's 3D separation from the
surface, on the same horizontal bearing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InfeasibleGeometryError, ValidationError


@dataclass(frozen=True)
class Position:
    """A point in metres."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        for name in ("x", "y", "z"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ValidationError(f"coordinate {name} must be finite, got {value!r}")


@dataclass(frozen=True)
class SiteLayout:
    """Fixed site geometry: node positions plus the user drop parameters."""

    bs: Position = Position(0.0, 0.0, 10.0)
    irs: Position = Position(50.0, 0.0, 10.0)
    bearing_deg: float = 0.0
    user_height: float = 1.5
    cell_side: float = 200.0

    def __post_init__(self) -> None:
        if self.bs == self.irs:
            raise ValidationError("layout: bs and irs positions must differ")
        if not math.isfinite(self.bearing_deg):
            raise ValidationError(f"layout: bearing_deg must be finite, got {self.bearing_deg!r}")
        if not math.isfinite(self.user_height):
            raise ValidationError(f"layout: user_height must be finite, got {self.user_height!r}")
        if not (self.cell_side > 0.0):
            raise ValidationError(f"layout: cell_side must be positive, got {self.cell_side!r}")


@dataclass(frozen=True)
class Layout:
    """A realized drop: site nodes plus the near/far user pair."""

    bs: Position
    irs: Position
    u1: Position
    u2: Position
    cell_side: float


def distance(p: Position, q: Position) -> float:
    """Euclidean distance between two points."""
    return math.sqrt((p.x - q.x) ** 2 + (p.y - q.y) ** 2 + (p.z - q.z) ** 2)


def place_users(
    irs: Position,
    bearing_deg: float,
    d_near: float,
    user_height: float,
) -> tuple[Position, Position]:
    """Drop the user pair on a horizontal ray leaving the surface.

    Both users stand at ``user_height`` on the ray that leaves the surface's
    ground projection at ``bearing_deg``. Horizontal offsets are solved so
    that the full 3D separations from the surface are exactly ``d_near`` and
    ``2 * d_near``; when the users share the surface's height this reduces to
    horizontal offsets of ``d_near`` and ``2 * d_near``.
    """
    if not (d_near > 0.0) or not math.isfinite(d_near):
        raise DomainError(f"d_near must be positive, got {d_near!r}")
    dz = irs.z - user_height
    if d_near < abs(dz):
        raise InfeasibleGeometryError(
            f"d_near={d_near!r} m is smaller than the {abs(dz)!r} m height "
            "offset between surface and users; no placement exists"
        )
    r_near = math.sqrt(d_near**2 - dz**2)
    r_far = math.sqrt((2.0 * d_near) ** 2 - dz**2)
    bearing = math.radians(bearing_deg)
    ux, uy = math.cos(bearing), math.sin(bearing)
    u1 = Position(irs.x + r_near * ux, irs.y + r_near * uy, user_height)
    u2 = Position(irs.x + r_far * ux, irs.y + r_far * uy, user_height)
    return u1, u2


def layout_at(site: SiteLayout, d_near: float) -> Layout:
    """Realize the site layout for one near-user distance."""
    u1, u2 = place_users(site.irs, site.bearing_deg, d_near, site.user_height)
    return Layout(bs=site.bs, irs=site.irs, u1=u1, u2=u2, cell_side=site.cell_side)
