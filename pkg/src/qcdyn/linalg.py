"""Dense complex linear algebra for the 2x2 and 4x4 matrices used everywhere else.

Matrices are plain numpy arrays of dtype complex128.  Equality of matrices is
always tolerance based (Frobenius norm); use :func:`frobenius_distance`.
The Hermitian eigensolver is a cyclic Jacobi iteration, which is
unconditionally stable at this size and keeps the core free of external
linear-algebra dependencies.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, NotHermitianError
from .tolerances import TOLERANCES

_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_MAX_SWEEPS = 60


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return m.conj().T


def frobenius_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Frobenius norm of a - b."""
    return float(np.linalg.norm(np.asarray(a) - np.asarray(b)))


def is_hermitian(m: np.ndarray, tol: float = TOLERANCES.hermiticity) -> bool:
    """True when max |m - m^dag| <= tol."""
    m = np.asarray(m)
    return float(np.max(np.abs(m - dagger(m)))) <= tol


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two 2x2 matrices.

    Entry law (1-based): out[2(i-1)+k, 2(j-1)+l] = a[i,j] * b[k,l].
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise DomainError("kron expects two 2x2 matrices")
    return np.einsum("ij,kl->ikjl", a, b).reshape(4, 4)


def conjugate_sandwich(u: np.ndarray, rho: np.ndarray) -> np.ndarray:
    """u @ rho @ u^dag.

    For unitary u and Hermitian unit-trace rho the result is Hermitian with
    unit trace up to round-off.
    """
    u = np.asarray(u, dtype=complex)
    rho = np.asarray(rho, dtype=complex)
    return u @ rho @ dagger(u)


@dataclass
class EigenResult4:
    """Eigenvalues of a 4x4 Hermitian matrix, sorted descending.

    ``residual`` is the max-norm of A v - nu v over all pairs, populated only
    when eigenvectors were requested.  ``vectors`` holds the eigenvectors as
    columns, ordered like ``values``.
    """

    values: np.ndarray
    residual: float | None = None
    vectors: np.ndarray | None = None


def herm_eig4(m: np.ndarray, vectors: bool = False) -> EigenResult4:
    """Eigen-decompose a 4x4 Hermitian matrix by cyclic Jacobi rotations.

    The input must be Hermitian within the configured tolerance; a
    :class:`NotHermitianError` is raised otherwise.  Rotations continue until
    every off-diagonal magnitude drops below ``TOLERANCES.eigen_offdiag``.
    Eigenvalues are real and returned in descending order; they are never
    clamped here, so tiny negative round-off survives for the caller to
    interpret.
    """
    a = np.asarray(m, dtype=complex)
    if a.shape != (4, 4):
        raise DomainError("herm_eig4 expects a 4x4 matrix")
    if not is_hermitian(a, TOLERANCES.hermiticity):
        raise NotHermitianError(
            f"matrix is not Hermitian within {TOLERANCES.hermiticity}"
        )
    a0 = 0.5 * (a + dagger(a))  # kill round-off asymmetry once, up front
    work = a0.copy()
    basis = np.eye(4, dtype=complex)

    for _ in range(_MAX_SWEEPS):
        off = _max_offdiag(work)
        if off < TOLERANCES.eigen_offdiag:
            break
        for p, q in _PAIRS:
            apq = work[p, q]
            mag = abs(apq)
            if mag < 0.1 * TOLERANCES.eigen_offdiag:
                continue
            # Complex Givens rotation that zeroes work[p, q].
            u = (work[q, q].real - work[p, p].real) / (2.0 * mag)
            t = (1.0 if u >= 0 else -1.0) / (abs(u) + math.hypot(u, 1.0))
            c = 1.0 / math.sqrt(1.0 + t * t)
            s = t * c
            phase = apq / mag
            rot = np.eye(4, dtype=complex)
            rot[p, p] = c
            rot[q, q] = c
            rot[p, q] = s * phase
            rot[q, p] = -s * np.conj(phase)
            work = dagger(rot) @ work @ rot
            basis = basis @ rot
    else:
        raise ConvergenceError("cyclic Jacobi did not converge in 60 sweeps")

    values = np.real(np.diag(work))
    order = np.argsort(-values, kind="stable")
    values = np.ascontiguousarray(values[order])

    residual = None
    eigvecs = None
    if vectors:
        eigvecs = np.ascontiguousarray(basis[:, order])
        res = a0 @ eigvecs - eigvecs * values[np.newaxis, :]
        residual = float(np.max(np.abs(res)))
    return EigenResult4(values=values, residual=residual, vectors=eigvecs)


def _max_offdiag(a: np.ndarray) -> float:
    mask = ~np.eye(4, dtype=bool)
    return float(np.max(np.abs(a[mask])))
