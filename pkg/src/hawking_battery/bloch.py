"""Two-qubit X-state Bloch coefficients.

The states here only carry local-z terms and diagonal correlations::

    rho = 1/4 (I + a3 Z(x)I + b3 I(x)Z + c1 X(x)X + c2 Y(x)Y + c3 Z(x)Z)
"""

from __future__ import annotations

from dataclasses import astuple, dataclass

import numpy as np

from .linalg import I2, SIGMA_1, SIGMA_2, SIGMA_3

_ZI = np.kron(SIGMA_3, I2)
_IZ = np.kron(I2, SIGMA_3)
_XX = np.kron(SIGMA_1, SIGMA_1)
_YY = np.kron(SIGMA_2, SIGMA_2)
_ZZ = np.kron(SIGMA_3, SIGMA_3)


@dataclass(frozen=True)
class BlochTwoQubit:
    a3: float
    b3: float
    c1: float
    c2: float
    c3: float

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return astuple(self)

    def to_matrix(self) -> np.ndarray:
        """Rebuild the 4x4 operator in the |00>,|01>,|10>,|11> basis."""
        a3, b3, c1, c2, c3 = (np.asarray(v, dtype=float) for v in astuple(self))
        out = np.zeros(np.broadcast(a3, b3, c1, c2, c3).shape + (4, 4), dtype=complex)
        out[..., 0, 0] = 1 + a3 + b3 + c3
        out[..., 1, 1] = 1 + a3 - b3 - c3
        out[..., 2, 2] = 1 - a3 + b3 - c3
        out[..., 3, 3] = 1 - a3 - b3 + c3
        out[..., 0, 3] = out[..., 3, 0] = c1 - c2
        out[..., 1, 2] = out[..., 2, 1] = c1 + c2
        return out / 4

    @classmethod
    def from_matrix(cls, rho: np.ndarray) -> "BlochTwoQubit":
        """Read coefficients off a state via ``tr(rho P)``; other Pauli terms are dropped."""
        rho = np.asarray(rho)

        def expval(op: np.ndarray) -> np.ndarray:
            return np.real(np.einsum("...ij,ji->...", rho, op))

        return cls(expval(_ZI), expval(_IZ), expval(_XX), expval(_YY), expval(_ZZ))

    def max_abs_diff(self, other: "BlochTwoQubit") -> float:
        return float(max(np.max(np.abs(np.asarray(x) - np.asarray(y)))
                         for x, y in zip(astuple(self), astuple(other))))
