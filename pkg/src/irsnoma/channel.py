"""Small-scale fading and the cascaded two-hop gain through the surface.

Fading is normalized to unit average power; all large-scale attenuation
lives in :mod:`irsnoma.pathloss`.
"""

from __future__ import annotations

import enum

import numpy as np

from .errors import DimensionError, DomainError

TWO_PI = 2.0 * np.pi
_SQRT2 = np.sqrt(2.0)


class FadingModel(enum.Enum):
    """Supported small-scale fading distributions."""

    # i.i.d. circularly-symmetric complex Gaussian entries with E|g|^2 = 1
    RAYLEIGH_UNIT = "rayleigh_unit"


def sample_fading(
    stream: np.random.Generator,
    k: int,
    model: FadingModel = FadingModel.RAYLEIGH_UNIT,
) -> np.ndarray:
    """Draw one fading vector of ``k`` complex coefficients.

    The draw consumes exactly ``2 * k`` standard normals from ``stream``, so
    repeated calls on one stream produce the same sequence as a single
    batched draw (see :func:`sample_fading_batch`).
    """
    if k < 1:
        raise DomainError(f"fading vector length must be >= 1, got {k!r}")
    if model is not FadingModel.RAYLEIGH_UNIT:
        raise DomainError(f"unsupported fading model: {model!r}")
    raw = stream.standard_normal(2 * k)
    return (raw[:k] + 1j * raw[k:]) / _SQRT2


def sample_fading_batch(
    stream: np.random.Generator,
    trials: int,
    k: int,
    model: FadingModel = FadingModel.RAYLEIGH_UNIT,
) -> np.ndarray:
    """Draw ``trials`` fading vectors at once, shape ``(trials, k)``.

    Row ``t`` equals the ``t``-th sequential :func:`sample_fading` call on a
    stream with the same initial state, which is what makes single-trial
    replay and batch execution interchangeable.
    """
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials!r}")
    if k < 1:
        raise DomainError(f"fading vector length must be >= 1, got {k!r}")
    if model is not FadingModel.RAYLEIGH_UNIT:
        raise DomainError(f"unsupported fading model: {model!r}")
    raw = stream.standard_normal((trials, 2 * k))
    return (raw[:, :k] + 1j * raw[:, k:]) / _SQRT2


def cascaded_gain(g_user: np.ndarray, phases: np.ndarray, g_bs: np.ndarray) -> complex:
    """Scalar end-to-end gain ``sum_k g_user[k] * exp(j*theta_k) * g_bs[k]``.

    Equivalent to the triple product of the user-side row vector, the
    diagonal reflection matrix ``diag(exp(j*thetas))``, and the feed-side
    column vector.
    """
    g_user = np.asarray(g_user)
    g_bs = np.asarray(g_bs)
    phases = np.asarray(phases, dtype=float)
    if not (g_user.shape == phases.shape == g_bs.shape):
        raise DimensionError(
            f"length mismatch: g_user {g_user.shape}, phases {phases.shape}, g_bs {g_bs.shape}"
        )
    return complex(np.sum(g_user * np.exp(1j * phases) * g_bs))


def coherent_phases(g_user: np.ndarray, g_bs: np.ndarray) -> np.ndarray:
    """Per-element phases aligning every cascaded term to the real axis.

    With this configuration the cascaded gain becomes
    ``sum_k |g_user[k]| * |g_bs[k]|``, the largest magnitude any phase
    configuration can reach for the given fading. Accepts stacked inputs of
    matching shape and operates elementwise.
    """
    g_user = np.asarray(g_user)
    g_bs = np.asarray(g_bs)
    if g_user.shape != g_bs.shape:
        raise DimensionError(f"length mismatch: g_user {g_user.shape}, g_bs {g_bs.shape}")
    return (-np.angle(g_user * g_bs)) % TWO_PI


def random_phases(stream: np.random.Generator, k: int) -> np.ndarray:
    """Draw ``k`` i.i.d. phases uniform on [0, 2*pi)."""
    if k < 1:
        raise DomainError(f"phase count must be >= 1, got {k!r}")
    return stream.uniform(0.0, TWO_PI, k)


def random_phases_batch(stream: np.random.Generator, trials: int, k: int) -> np.ndarray:
    """Draw ``trials`` phase configurations at once, shape ``(trials, k)``.

    Row ``t`` equals the ``t``-th sequential :func:`random_phases` call on a
    stream with the same initial state.
    """
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials!r}")
    if k < 1:
        raise DomainError(f"phase count must be >= 1, got {k!r}")
    return stream.uniform(0.0, TWO_PI, (trials, k))
