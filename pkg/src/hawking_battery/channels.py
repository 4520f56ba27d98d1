"""Local qubit noise: phase flip, bit flip and depolarizing channels."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .bloch import BlochTwoQubit
from .linalg import I2, SIGMA_1, SIGMA_2, SIGMA_3, dagger, validate_density_matrix


class ChannelKind(str, enum.Enum):
    PF = "pf"
    BF = "bf"
    DEP = "dep"


class Target(str, enum.Enum):
    A = "A"
    B = "B"
    BOTH = "both"


@dataclass(frozen=True)
class ChannelSpec:
    kind: ChannelKind
    k: float

    def __post_init__(self):
        object.__setattr__(self, "kind", ChannelKind(self.kind))
        if not 0.0 <= self.k <= 1.0:
            raise ValueError(f"decay probability k must lie in [0, 1], got {self.k}")


def kraus_operators(spec: ChannelSpec) -> list[np.ndarray]:
    k = spec.k
    e0 = np.sqrt(1 - k) * I2
    if spec.kind is ChannelKind.PF:
        return [e0, np.sqrt(k) * SIGMA_3]
    if spec.kind is ChannelKind.BF:
        return [e0, np.sqrt(k) * SIGMA_1]
    w = np.sqrt(k / 3)
    return [e0, w * SIGMA_1, w * SIGMA_2, w * SIGMA_3]


def apply_channel(
    rho: np.ndarray,
    spec: ChannelSpec,
    targets: Target | str = Target.BOTH,
    validate: bool = True,
) -> np.ndarray:
    """Kraus sum on one or both qubits of a two-qubit state.

    ``rho`` may be a stack ``(..., 4, 4)``. For ``both`` the channel is first
    applied to qubit B then to qubit A; the two local maps commute.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape[-2:] != (4, 4):
        raise ValueError(f"expected two-qubit states, got shape {rho.shape}")
    if validate:
        validate_density_matrix(rho)
    targets = Target(targets)
    ops = kraus_operators(spec)
    if targets in (Target.B, Target.BOTH):
        rho = _kraus_sum(rho, [np.kron(I2, e) for e in ops])
    if targets in (Target.A, Target.BOTH):
        rho = _kraus_sum(rho, [np.kron(e, I2) for e in ops])
    return rho


def _kraus_sum(rho: np.ndarray, ops: list[np.ndarray]) -> np.ndarray:
    return sum(e @ rho @ dagger(e) for e in ops)


def bloch_factors(spec: ChannelSpec) -> tuple[float, float, float]:
    """Single-qubit scalings of (sigma_1, sigma_2, sigma_3) under the channel."""
    return channel_factors(spec.kind, spec.k)


def channel_factors(kind, k):
    """Same as :func:`bloch_factors` but broadcasting over an array of ``k``."""
    kind = ChannelKind(kind)
    if kind is ChannelKind.PF:
        return (1 - 2 * k, 1 - 2 * k, 1.0)
    if kind is ChannelKind.BF:
        return (1.0, 1 - 2 * k, 1 - 2 * k)
    g = 1 - 4 * k / 3
    return (g, g, g)


def bloch_action(spec: ChannelSpec, coeffs: BlochTwoQubit) -> BlochTwoQubit:
    """Apply the channel on both qubits directly to Bloch coefficients."""
    return scale_bloch(bloch_factors(spec), coeffs)


def scale_bloch(factors, coeffs: BlochTwoQubit) -> BlochTwoQubit:
    """Scale coefficients by per-qubit factors; two-body terms take the product."""
    fx, fy, fz = factors
    return BlochTwoQubit(
        a3=fz * coeffs.a3,
        b3=fz * coeffs.b3,
        c1=fx * fx * coeffs.c1,
        c2=fy * fy * coeffs.c2,
        c3=fz * fz * coeffs.c3,
    )
