"""Two non-interacting qubits in classical fluctuating fields.

Each qubit n sees the Hamiltonian  H_n = eps_n * I + lam * delta_n * sigma_x
(hbar = 1), where delta_n is the stochastic field value.  Under static
disorder delta_n is constant in time for a given realization, so the
propagator exp(-i H t) has the exact closed form used below; no numerical
integration of the Hamiltonian is ever needed.  The pair state starts in a
Werner-class mixture of the Bell state (|00> + |11>)/sqrt(2) with white noise.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PhysicalityError
from .linalg import conjugate_sandwich, dagger, herm_eig4, kron
from .tolerances import TOLERANCES

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)
IDENTITY_4 = np.eye(4, dtype=complex)


@dataclass(frozen=True)
class SystemParams:
    """Qubit energies, field coupling strength, and initial purity.

    The energies provably cancel out of every density matrix (they only
    contribute a global phase to the propagator); they are kept in the API
    for faithfulness to the Hamiltonian and a property test enforces the
    cancellation.
    """

    eps_a: float = 1.0
    eps_b: float = 1.0
    lam: float = 0.5
    r: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.r <= 1.0:
            raise DomainError(f"r must lie in [0, 1], got {self.r}")
        if self.lam < 0.0:
            raise DomainError(f"lam must be >= 0, got {self.lam}")


@dataclass(frozen=True)
class Realization:
    """One sample of the stochastic field values seen by the two qubits."""

    delta_a: float
    delta_b: float

    def __post_init__(self):
        if not (math.isfinite(self.delta_a) and math.isfinite(self.delta_b)):
            raise DomainError("field values must be finite")


def single_qubit_propagator(eps: float, lam: float, delta: float, t: float) -> np.ndarray:
    """Exact propagator exp(-i (eps I + lam delta sigma_x) t) for one qubit.

    Requires t >= 0.  Always unitary:
    exp(-i eps t) * (cos(lam delta t) I - i sin(lam delta t) sigma_x).
    """
    k = lam * delta * t
    return np.exp(-1j * eps * t) * (
        np.cos(k) * IDENTITY_2 - 1j * np.sin(k) * PAULI_X
    )


def pair_propagator(params: SystemParams, realization: Realization, t: float) -> np.ndarray:
    """Two-qubit propagator: Kronecker product of the single-qubit factors."""
    ua = single_qubit_propagator(params.eps_a, params.lam, realization.delta_a, t)
    ub = single_qubit_propagator(params.eps_b, params.lam, realization.delta_b, t)
    return kron(ua, ub)


def initial_state(r: float) -> np.ndarray:
    """Werner-class initial state r |psi+><psi+| + (1 - r) I/4.

    Assembled from the explicit entries (1 + r)/4 on the Bell-supported
    diagonal, r/2 on the corners, and (1 - r)/4 in the middle block, which
    keeps r = 1 and r = 0 exact in floating point.  Raises DomainError
    unless 0 <= r <= 1.
    """
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"r must lie in [0, 1], got {r}")
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = rho[3, 3] = (1.0 + r) / 4.0
    rho[0, 3] = rho[3, 0] = r / 2.0
    rho[1, 1] = rho[2, 2] = (1.0 - r) / 4.0
    return rho


def evolve_realization(params: SystemParams, realization: Realization, t: float) -> np.ndarray:
    """Density matrix U rho_0 U^dag for one fixed disorder realization.

    Independent of eps_a and eps_b (global phases cancel in the sandwich).
    """
    u = pair_propagator(params, realization, t)
    rho = conjugate_sandwich(u, initial_state(params.r))
    return validate_density_matrix(rho)


def validate_density_matrix(rho: np.ndarray) -> np.ndarray:
    """Check Hermiticity, unit trace, and positivity; return rho unchanged.

    Eigenvalues above ``TOLERANCES.eigenvalue_floor`` count as round-off;
    anything lower raises PhysicalityError.
    """
    rho = np.asarray(rho, dtype=complex)
    herm_defect = float(np.max(np.abs(rho - dagger(rho))))
    if herm_defect > TOLERANCES.hermiticity:
        raise PhysicalityError(f"Hermiticity defect {herm_defect:.3e}")
    trace_defect = abs(float(np.real(np.trace(rho))) - 1.0)
    if trace_defect > TOLERANCES.trace:
        raise PhysicalityError(f"trace defect {trace_defect:.3e}")
    smallest = float(herm_eig4(rho).values[-1])
    if smallest < TOLERANCES.eigenvalue_floor:
        raise PhysicalityError(f"negative eigenvalue {smallest:.3e}")
    return rho
