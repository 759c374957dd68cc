"""Symmetric eigensolver and the small matrix helpers built on it.

The eigensolver is a cyclic Jacobi rotation method. It is only ever fed
small symmetric matrices (symmetric parts of Jacobians, Gram matrices,
graph Laplacians), where it is accurate to a few ulps.
"""

from __future__ import annotations

import logging
import math

import numpy as np
import numpy.typing as npt

from ..errors import InvalidInput, NotPositiveDefinite

logger = logging.getLogger(__name__)

type Mat = npt.NDArray[np.float64]
type Vec = npt.NDArray[np.float64]

# Fixed tolerances
SYMMETRY_TOL = 1e-10
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
SPD_MIN_EIGENVALUE = 1e-12


def as_matrix(a: npt.ArrayLike, name: str = "A") -> Mat:
    """Convert input to a finite 2-D float array.

    Raises:
        InvalidInput: If the input is not a non-empty finite matrix.
    """
    try:
        arr = np.array(a, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise InvalidInput(f"{name} is not a numeric matrix: {e}") from e
    if arr.ndim != 2 or arr.size == 0:
        raise InvalidInput(f"{name} must be a non-empty 2-D matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInput(f"{name} has non-finite entries")
    return arr


def as_vector(x: npt.ArrayLike, name: str = "x") -> Vec:
    """Convert input to a finite 1-D float array."""
    try:
        arr = np.array(x, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise InvalidInput(f"{name} is not a numeric vector: {e}") from e
    if arr.ndim != 1 or arr.size == 0:
        raise InvalidInput(f"{name} must be a non-empty 1-D vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInput(f"{name} has non-finite entries")
    return arr


def _require_square(a: Mat, name: str) -> int:
    rows, cols = a.shape
    if rows != cols:
        raise InvalidInput(f"{name} must be square, got {rows}x{cols}")
    return rows


def sym_eig(s: npt.ArrayLike) -> tuple[Vec, Mat]:
    """Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.

    Args:
        s: Symmetric matrix (asymmetry up to 1e-10 relative is symmetrized away).

    Returns:
        Eigenvalues in ascending order and the matching orthonormal
        eigenvectors as columns.

    Raises:
        InvalidInput: If the matrix is not square or not symmetric.
    """
    a = as_matrix(s, "S")
    n = _require_square(a, "S")

    scale = max(1.0, float(np.max(np.abs(a))))
    asymmetry = float(np.max(np.abs(a - a.T)))
    if asymmetry > SYMMETRY_TOL * scale:
        raise InvalidInput(f"S is not symmetric (max |S - S^T| = {asymmetry:.3e})")

    a = 0.5 * (a + a.T)
    v = np.eye(n)
    frob = float(np.linalg.norm(a))
    if frob == 0.0:
        return np.zeros(n), v

    threshold = JACOBI_TOL * frob
    for sweep in range(JACOBI_MAX_SWEEPS):
        off = math.sqrt(max(float(np.sum(a * a) - np.sum(np.diag(a) ** 2)), 0.0))
        if off <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                sn = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - sn * col_q
                a[:, q] = sn * col_p + c * col_q

                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - sn * row_q
                a[q, :] = sn * row_p + c * row_q

                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - sn * vec_q
                v[:, q] = sn * vec_p + c * vec_q
    else:
        logger.warning(
            "Jacobi did not reach tolerance after %d sweeps (n=%d)", JACOBI_MAX_SWEEPS, n
        )

    eigenvalues = np.diag(a).copy()
    order = np.argsort(eigenvalues, kind="stable")
    return eigenvalues[order], v[:, order]


def lambda_max_sym(s: npt.ArrayLike) -> float:
    """Largest eigenvalue of a symmetric matrix."""
    eigenvalues, _ = sym_eig(s)
    return float(eigenvalues[-1])


def _spd_eig(p: npt.ArrayLike) -> tuple[Vec, Mat]:
    eigenvalues, vectors = sym_eig(p)
    if eigenvalues[0] <= SPD_MIN_EIGENVALUE:
        raise NotPositiveDefinite(float(eigenvalues[0]))
    return eigenvalues, vectors


def spd_inv_sqrt(p: npt.ArrayLike) -> Mat:
    """Symmetric inverse square root R of an SPD matrix, so that R P R = I.

    Raises:
        NotPositiveDefinite: If the smallest eigenvalue is <= 1e-12.
    """
    eigenvalues, vectors = _spd_eig(p)
    r = (vectors / np.sqrt(eigenvalues)) @ vectors.T
    return 0.5 * (r + r.T)


def spd_sqrt(p: npt.ArrayLike) -> Mat:
    """Symmetric square root of an SPD matrix."""
    eigenvalues, vectors = _spd_eig(p)
    r = (vectors * np.sqrt(eigenvalues)) @ vectors.T
    return 0.5 * (r + r.T)


def eig_2x2(a: npt.ArrayLike) -> tuple[complex, complex]:
    """Both eigenvalues of a 2x2 matrix from the characteristic quadratic.

    The root with the larger real part (or positive imaginary part) comes first.
    """
    m = as_matrix(a)
    if m.shape != (2, 2):
        raise InvalidInput(f"eig_2x2 expects a 2x2 matrix, got {m.shape}")
    half_trace = 0.5 * (m[0, 0] + m[1, 1])
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    d = np.emath.sqrt(half_trace * half_trace - det)
    return complex(half_trace + d), complex(half_trace - d)


def max_singular(a: npt.ArrayLike) -> float:
    """Spectral norm sqrt(lambda_max(A^T A))."""
    m = as_matrix(a)
    return math.sqrt(max(lambda_max_sym(m.T @ m), 0.0))


def kron(a: npt.ArrayLike, b: npt.ArrayLike) -> Mat:
    """Kronecker product."""
    return np.kron(as_matrix(a, "A"), as_matrix(b, "B"))
