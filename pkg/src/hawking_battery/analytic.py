"""Closed-form spectra and capacities of the region-pair states.

All sixteen (region x noise) eigenvalue quadruples share three formula
families once each region is reduced to three numbers::

    alpha = local-z weight of qubit A   (sin^2 eta_a in region I, cos^2 eta_a in II)
    beta  = local-z weight of qubit B   (same rule with eta_b)
    gamma = coherence weight            (cos^2 in region I, sin^2 in II, A times B)

Functions broadcast over numpy arrays in ``p``, ``eta_a``, ``eta_b`` and ``k``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bloch import BlochTwoQubit
from .relativistic import DEFAULT_ETA_B, DEFAULT_P, Region

ZZ_ENERGIES = (-1.0, -1.0, 1.0, 1.0)


class Noise(str, enum.Enum):
    NONE = "none"
    PF = "pf"
    BF = "bf"
    DEP = "dep"


def region_weights(region: Region, eta_a, eta_b):
    """(alpha, beta, gamma) for a region pair."""
    region = Region(region)
    s2a, c2a = np.sin(eta_a) ** 2, np.cos(eta_a) ** 2
    s2b, c2b = np.sin(eta_b) ** 2, np.cos(eta_b) ** 2
    a_outside = region in (Region.A1B1, Region.A1B2)
    b_outside = region in (Region.A1B1, Region.A2B1)
    alpha = s2a if a_outside else c2a
    beta = s2b if b_outside else c2b
    gamma = (c2a if a_outside else s2a) * (c2b if b_outside else s2b)
    return alpha, beta, gamma


@dataclass(frozen=True)
class AnalyticEigenSet:
    lam0: np.ndarray
    lam1: np.ndarray
    lam2: np.ndarray
    lam3: np.ndarray

    @property
    def labeled(self) -> np.ndarray:
        return np.stack(np.broadcast_arrays(self.lam0, self.lam1, self.lam2, self.lam3), axis=-1)

    @property
    def sorted(self) -> np.ndarray:
        return np.sort(self.labeled, axis=-1, kind="stable")

    @property
    def ordering_holds(self) -> np.ndarray:
        lab = self.labeled
        return np.all(np.diff(lab, axis=-1) >= 0, axis=-1)

    @property
    def pairing_holds(self) -> np.ndarray:
        """Whether lam2, lam3 are the two largest, so the labelled capacity is right."""
        lab = self.labeled
        return np.minimum(lab[..., 2], lab[..., 3]) >= np.maximum(lab[..., 0], lab[..., 1])


def analytic_eigenvalues(region, noise, p, eta_a, eta_b=DEFAULT_ETA_B, k=0.0) -> AnalyticEigenSet:
    """Labelled eigenvalue formulas for a region pair under optional noise.

    ``k`` is ignored when ``noise`` is ``none``.
    """
    noise = Noise(noise)
    alpha, beta, gamma = region_weights(region, eta_a, eta_b)
    p = np.asarray(p, dtype=float)
    k = np.asarray(k, dtype=float)

    if noise in (Noise.NONE, Noise.PF):
        w = 1.0 if noise is Noise.NONE else (1 - 2 * k) ** 4
        root = np.sqrt((alpha - beta) ** 2 + 4 * w * p**2 * gamma)
        lam0 = (1 - alpha - beta + alpha * beta - p * gamma) / 4
        lam1 = (1 - alpha * beta + p * gamma - root) / 4
        lam2 = (1 + alpha + beta + alpha * beta - p * gamma) / 4
        lam3 = (1 - alpha * beta + p * gamma + root) / 4
    elif noise is Noise.BF:
        f2 = (1 - 2 * k) ** 2
        d = f2 * (alpha * beta - p * gamma)
        root_plus = np.sqrt(f2 * (alpha + beta) ** 2 + (1 - f2) ** 2 * p**2 * gamma)
        root_minus = np.sqrt(f2 * (alpha - beta) ** 2 + (1 + f2) ** 2 * p**2 * gamma)
        lam0 = (1 + d - root_plus) / 4
        lam1 = (1 - d - root_minus) / 4
        lam2 = (1 + d + root_plus) / 4
        lam3 = (1 - d + root_minus) / 4
    else:
        g = 1 - 4 * k / 3
        d = g**2 * (alpha * beta - p * gamma)
        root = np.sqrt((alpha - beta) ** 2 + 4 * g**2 * p**2 * gamma)
        lam0 = (1 - g * alpha - g * beta + d) / 4
        lam1 = (1 - d - g * root) / 4
        lam2 = (1 + g * alpha + g * beta + d) / 4
        lam3 = (1 - d + g * root) / 4
    return AnalyticEigenSet(lam0, lam1, lam2, lam3)


def capacity_from_sorted(spectrum: np.ndarray) -> np.ndarray:
    s = np.asarray(spectrum)
    return 2 * (s[..., 3] + s[..., 2] - s[..., 1] - s[..., 0])


def analytic_capacity(region, noise, p, eta_a, eta_b=DEFAULT_ETA_B, k=0.0) -> np.ndarray:
    eig = analytic_eigenvalues(region, noise, p, eta_a, eta_b, k)
    return capacity_from_sorted(eig.sorted)


# --- closed forms in eta = eta_a --------------------------------------------------------

@dataclass(frozen=True)
class ClosedForm:
    """Capacity written as ``X + c0 + sqrt((X - c0)^2 + coeff * Y)`` style formulas.

    ``X`` and ``Y`` are ``sin^2 eta`` / ``cos^2 eta`` (qubit A outside) or
    swapped (qubit A inside). ``printed`` is the radical coefficient as it
    appears in the published table at p = 0.3, eta_b = pi/6 (``None`` for the
    noiseless family, whose coefficient is printed symbolically in ``p``).
    """

    region: Region
    noise: Noise
    label: str
    printed: Fraction | None


def _label(region: Region, noise: Noise) -> str:
    tag = "" if noise is Noise.NONE else f"_{noise.value}"
    return f"C{tag}({region.label})"


# radical coefficients as typeset for p = 0.3, eta_b = pi/6
_PRINTED = {
    (Noise.PF, Region.A1B1): Fraction(27, 100),
    (Noise.PF, Region.A1B2): Fraction(9, 100),
    (Noise.PF, Region.A2B1): Fraction(27, 100),
    (Noise.PF, Region.A2B2): Fraction(9, 100),
    (Noise.BF, Region.A1B1): Fraction(27, 400),
    (Noise.BF, Region.A1B2): Fraction(9, 400),
    (Noise.BF, Region.A2B1): Fraction(27, 400),
    (Noise.BF, Region.A2B2): Fraction(9, 400),
    (Noise.DEP, Region.A1B1): Fraction(27, 100),
    (Noise.DEP, Region.A1B2): Fraction(9, 100),
    (Noise.DEP, Region.A2B1): Fraction(27, 100),
    (Noise.DEP, Region.A2B2): Fraction(27, 100),
}

CLOSED_FORMS = tuple(
    ClosedForm(r, n, _label(r, n), _PRINTED.get((n, r)))
    for n in Noise
    for r in Region
)


def closed_form_offset(region, eta_b=DEFAULT_ETA_B) -> float:
    """The constant ``c0``: B's local-z weight."""
    _, beta, _ = region_weights(region, 0.0, eta_b)
    return float(beta)


def derived_radical_coefficient(region, noise, p=DEFAULT_P, eta_b=DEFAULT_ETA_B) -> float:
    """Radical coefficient implied by the eigenvalue formulas.

    For ``none``, ``pf`` and ``dep`` it is ``4 p^2 w_B``; for ``bf`` it is
    ``p^2 w_B``, where ``w_B`` is qubit B's coherence weight (cos^2 eta_b
    outside, sin^2 eta_b inside).
    """
    region, noise = Region(region), Noise(noise)
    b_outside = region in (Region.A1B1, Region.A2B1)
    w_b = math.cos(eta_b) ** 2 if b_outside else math.sin(eta_b) ** 2
    scale = 1.0 if noise is Noise.BF else 4.0
    return scale * p**2 * w_b


def closed_form_capacity(region, noise, eta, k=0.0, p=DEFAULT_P, eta_b=DEFAULT_ETA_B,
                         coefficient=None) -> np.ndarray:
    """Evaluate the closed-form capacity family at ``eta_a = eta``.

    Args:
        coefficient: radical coefficient to use; defaults to
            :func:`derived_radical_coefficient`. Pass a printed value to
            test a typeset formula.
    """
    region, noise = Region(region), Noise(noise)
    if coefficient is None:
        coefficient = derived_radical_coefficient(region, noise, p, eta_b)
    coefficient = float(coefficient)
    eta = np.asarray(eta, dtype=float)
    k = np.asarray(k, dtype=float)
    a_outside = region in (Region.A1B1, Region.A1B2)
    x = np.sin(eta) ** 2 if a_outside else np.cos(eta) ** 2
    y = np.cos(eta) ** 2 if a_outside else np.sin(eta) ** 2
    c0 = closed_form_offset(region, eta_b)

    if noise is Noise.NONE:
        return x + c0 + np.sqrt((x - c0) ** 2 + coefficient * y)
    if noise is Noise.PF:
        return x + c0 + np.sqrt((x - c0) ** 2 + coefficient * (1 - 2 * k) ** 4 * y)
    if noise is Noise.BF:
        f2 = (1 - 2 * k) ** 2
        return (np.sqrt(f2 * (x + c0) ** 2 + coefficient * (1 - f2) ** 2 * y)
                + np.sqrt(f2 * (x - c0) ** 2 + coefficient * (1 + f2) ** 2 * y))
    g = 1 - 4 * k / 3
    return np.abs(g) * (x + c0 + np.sqrt((x - c0) ** 2 + coefficient * g**2 * y))


# --- Bloch forms as typeset -----------------------------------------------------------

# (power of the channel's z-factor on local terms, multiplier on p inside c3)
# where the published Bloch form departs from the channel action on the noiseless state
_PRINTED_BLOCH_QUIRKS = {
    (Noise.BF, Region.A1B2): (1, 2.0),
    (Noise.DEP, Region.A1B2): (1, 2.0),
    (Noise.DEP, Region.A2B2): (2, 1.0),
}


def printed_bloch_coefficients(region, noise, p, eta_a, eta_b=DEFAULT_ETA_B, k=0.0) -> BlochTwoQubit:
    """Bloch coefficients exactly as typeset, typos included."""
    region, noise = Region(region), Noise(noise)
    alpha, beta, gamma = region_weights(region, eta_a, eta_b)
    a_outside = region in (Region.A1B1, Region.A1B2)
    b_outside = region in (Region.A1B1, Region.A2B1)
    same = a_outside == b_outside
    coherence = p * np.sqrt(gamma)
    z_power, p_mult = _PRINTED_BLOCH_QUIRKS.get((noise, region), (1, 1.0))

    if noise is Noise.NONE:
        fx = fy = fz = 1.0
    elif noise is Noise.PF:
        fx, fy, fz = 1 - 2 * k, 1 - 2 * k, 1.0
    elif noise is Noise.BF:
        fx, fy, fz = 1.0, 1 - 2 * k, 1 - 2 * k
    else:
        fx = fy = fz = 1 - 4 * k / 3
    c3_base = (alpha * beta - p_mult * p * gamma) if same else (p_mult * p * gamma - alpha * beta)
    return BlochTwoQubit(
        a3=fz**z_power * (-alpha if a_outside else alpha),
        b3=fz**z_power * (-beta if b_outside else beta),
        c1=fx**2 * coherence,
        c2=fy**2 * (coherence if same else -coherence),
        c3=fz**2 * c3_base,
    )
