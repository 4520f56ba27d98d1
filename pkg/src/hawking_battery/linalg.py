"""Dense complex linear algebra for small qubit registers.

Matrices are plain ``numpy`` complex arrays. Every routine that acts on a
single ``(n, n)`` matrix also accepts a stack ``(..., n, n)`` and works on the
last two axes, which is how the grid sweeps stay fast.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

HERMITIAN_TOL = 1e-12
POSITIVITY_TOL = 1e-10
JACOBI_REL_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100
_TINY = np.finfo(float).tiny

I2 = np.eye(2, dtype=complex)
SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (I2, SIGMA_1, SIGMA_2, SIGMA_3)


class DimensionError(ValueError):
    pass


class SymmetryError(ValueError):
    """Matrix handed to the Hermitian eigensolver is not Hermitian."""


class ConvergenceError(RuntimeError):
    pass


class DensityMatrixError(ValueError):
    pass


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; ``a`` is the slower (first) subsystem."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim == 2 and b.ndim == 2:
        return np.kron(a, b)
    # stacked operands: broadcast leading axes
    out = a[..., :, None, :, None] * b[..., None, :, None, :]
    n = a.shape[-2] * b.shape[-2]
    m = a.shape[-1] * b.shape[-1]
    return out.reshape(out.shape[:-4] + (n, m))


def dagger(a: np.ndarray) -> np.ndarray:
    return np.conj(np.swapaxes(np.asarray(a), -1, -2))


def partial_trace(rho: np.ndarray, keep: Sequence[int], dims: Sequence[int]) -> np.ndarray:
    """Trace out every subsystem not listed in ``keep``.

    Args:
        rho: ``(..., D, D)`` operator with ``D = prod(dims)``.
        keep: subsystem indices to retain, in the order they should appear
            in the result (reordering is allowed).
        dims: local dimension of each subsystem.

    Returns:
        The reduced operator over ``keep``.
    """
    rho = np.asarray(rho)
    dims = [int(d) for d in dims]
    keep = [int(k) for k in keep]
    total = int(np.prod(dims))
    if rho.shape[-1] != total or rho.shape[-2] != total:
        raise DimensionError(f"operator of shape {rho.shape[-2:]} does not match dims {dims}")
    if len(set(keep)) != len(keep) or any(k < 0 or k >= len(dims) for k in keep):
        raise DimensionError(f"invalid keep indices {keep} for {len(dims)} subsystems")

    n = len(dims)
    batch = rho.shape[:-2]
    t = rho.reshape(batch + tuple(dims) + tuple(dims))
    letters = "abcdefghijklmnopqrstuvwxyz"
    row = list(letters[:n])
    col = list(letters[n : 2 * n])
    for i in range(n):
        if i not in keep:
            col[i] = row[i]
    out = "".join(row[k] for k in keep) + "".join(col[k] for k in keep)
    reduced = np.einsum("..." + "".join(row) + "".join(col) + "->..." + out, t)
    d = int(np.prod([dims[k] for k in keep])) if keep else 1
    return reduced.reshape(batch + (d, d))


def hermiticity_error(a: np.ndarray) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a - dagger(a)))) if a.size else 0.0


def hermitian_eigenvalues(
    a: np.ndarray,
    tol: float = HERMITIAN_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.

    Each rotation first removes the phase of the pivot ``a[p, q]`` with a
    diagonal unitary, then annihilates it with a real Givens rotation. Pivots
    are visited in row-major order ``(0,1), (0,2), ..., (n-2,n-1)`` every
    sweep. Iteration stops once the off-diagonal Frobenius norm drops below
    ``1e-14`` times the Frobenius norm of the input.

    Args:
        a: ``(n, n)`` or stacked ``(..., n, n)`` Hermitian matrices.
        tol: maximum tolerated ``|a_ij - conj(a_ji)|``.
        max_sweeps: sweep budget before giving up.

    Returns:
        Real eigenvalues sorted ascending along the last axis. Ties keep the
        order in which they leave the diagonal.

    Raises:
        SymmetryError: input is not Hermitian within ``tol``.
        ConvergenceError: the sweep budget ran out.
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim < 2 or a.shape[-1] != a.shape[-2]:
        raise DimensionError(f"expected square matrices, got shape {a.shape}")
    err = hermiticity_error(a)
    if err > tol:
        raise SymmetryError(f"matrix is not Hermitian: max |a - a^H| = {err:.3e} > {tol:.1e}")

    batch_shape = a.shape[:-2]
    n = a.shape[-1]
    work = 0.5 * (a + dagger(a))
    work = work.reshape((-1, n, n)).copy()
    if n == 1:
        return work.real.reshape(batch_shape + (1,))

    scale = np.sqrt(np.sum(np.abs(work) ** 2, axis=(-2, -1)))
    threshold = JACOBI_REL_TOL * scale
    off_mask = ~np.eye(n, dtype=bool)

    def off_norm(m: np.ndarray) -> np.ndarray:
        return np.sqrt(np.sum(np.abs(m[:, off_mask]) ** 2, axis=-1))

    pivots = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]
    for _ in range(max_sweeps):
        if np.all(off_norm(work) <= threshold):
            break
        for p, q in pivots:
            _rotate(work, p, q)
    else:
        if not np.all(off_norm(work) <= threshold):
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")

    vals = np.real(np.diagonal(work, axis1=-2, axis2=-1))
    vals = np.sort(vals, axis=-1, kind="stable")
    return vals.reshape(batch_shape + (n,))


def _rotate(work: np.ndarray, p: int, q: int) -> None:
    """Zero ``work[:, p, q]`` in place on a stack of Hermitian matrices."""
    apq = work[:, p, q]
    mag = np.abs(apq)
    # subnormal pivots count as zero; normalising them overflows
    live = mag >= _TINY
    if not np.any(live):
        return
    safe = np.where(live, mag, 1.0)
    phase = np.where(live, apq / safe, 1.0)
    zeta = (work[:, q, q].real - work[:, p, p].real) / (2.0 * safe)
    t = np.where(zeta >= 0, 1.0, -1.0) / (np.abs(zeta) + np.hypot(1.0, zeta))
    t = np.where(live, t, 0.0)
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c

    # U = (phase on q) then Givens:
    # col_p = c e_p - s e^{-i phi} e_q ; col_q = s e_p + c e^{-i phi} e_q
    conj_phase = np.conj(phase)
    colp = work[:, :, p].copy()
    colq = work[:, :, q]
    work[:, :, p] = c[:, None] * colp - (s * conj_phase)[:, None] * colq
    work[:, :, q] = s[:, None] * colp + (c * conj_phase)[:, None] * colq
    rowp = work[:, p, :].copy()
    rowq = work[:, q, :]
    work[:, p, :] = c[:, None] * rowp - (s * phase)[:, None] * rowq
    work[:, q, :] = s[:, None] * rowp + (c * phase)[:, None] * rowq
    work[:, p, q] = 0.0
    work[:, q, p] = 0.0
    work[:, p, p] = work[:, p, p].real
    work[:, q, q] = work[:, q, q].real


def validate_density_matrix(
    rho: np.ndarray,
    herm_tol: float = HERMITIAN_TOL,
    pos_tol: float = POSITIVITY_TOL,
) -> None:
    """Raise ``DensityMatrixError`` unless ``rho`` is a valid state."""
    rho = np.asarray(rho)
    if rho.ndim < 2 or rho.shape[-1] != rho.shape[-2]:
        raise DensityMatrixError(f"expected square matrices, got shape {rho.shape}")
    err = hermiticity_error(rho)
    if err > herm_tol:
        raise DensityMatrixError(f"not Hermitian (error {err:.3e})")
    tr = np.trace(rho, axis1=-2, axis2=-1)
    if np.max(np.abs(tr - 1.0)) > pos_tol:
        raise DensityMatrixError(f"trace deviates from 1 by {np.max(np.abs(tr - 1.0)):.3e}")
    lo = np.min(hermitian_eigenvalues(rho, tol=herm_tol))
    if lo < -pos_tol:
        raise DensityMatrixError(f"negative eigenvalue {lo:.3e}")


def clamp_for_report(values: np.ndarray, slack: float = POSITIVITY_TOL) -> np.ndarray:
    """Zero out tiny negative eigenvalues. Display only, never for arithmetic."""
    values = np.array(values, dtype=float)
    values[(values < 0) & (values >= -slack)] = 0.0
    return values
