"""Correlation measures of a two-qubit density matrix.

Decoherence is the von Neumann entropy in natural log units (0 for a pure
state, ln 4 for the maximally mixed state), purity is Tr[rho^2] (1 down to
1/4), and concurrence is the Wootters entanglement monotone (1 for a Bell
state, 0 for separable states).  Round-off excursions are clipped back to
the mathematically attainable ranges.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import PhysicalityError
from .linalg import dagger, herm_eig4, kron
from .model import PAULI_Y
from .tolerances import TOLERANCES

LN4 = math.log(4.0)

_SPIN_FLIP = kron(PAULI_Y, PAULI_Y)  # real matrix: antidiag(-1, 1, 1, -1)


@dataclass(frozen=True)
class MeasureTriple:
    decoherence: float
    purity: float
    concurrence: float


def _clean_eigenvalues(values: np.ndarray) -> np.ndarray:
    """Clamp eigenvalues of a physical state into [0, 1] and restore unit sum.

    Values in [eigenvalue_floor, 0) are round-off and become 0; anything
    below the floor means the state is genuinely broken and raises.  The
    eigenvalues of a unit-trace matrix sum to 1, so the clamped spectrum is
    renormalized to that constraint; this keeps exactly pure states exactly
    pure instead of off by an ulp.
    """
    floor = TOLERANCES.eigenvalue_floor
    cleaned = np.empty_like(values)
    for i, v in enumerate(values):
        if v < floor:
            raise PhysicalityError(f"eigenvalue {v:.3e} below the round-off floor")
        cleaned[i] = min(max(v, 0.0), 1.0)
    total = float(cleaned.sum())
    if total <= 0.0:
        raise PhysicalityError("spectrum sums to zero")
    return cleaned / total


def von_neumann_entropy(rho: np.ndarray) -> float:
    """-sum nu ln nu over the eigenvalues, with 0 ln 0 := 0.  Result in [0, ln 4]."""
    values = _clean_eigenvalues(herm_eig4(rho).values)
    acc = 0.0
    for v in values:
        if v > 0.0:
            acc -= v * math.log(v)
    return max(0.0, min(acc, LN4))


def purity(rho: np.ndarray) -> float:
    """Tr[rho^2], clipped into the attainable range [1/4, 1]."""
    p = float(np.real(np.trace(rho @ rho)))
    return min(1.0, max(0.25, p))


def concurrence(rho: np.ndarray) -> float:
    """Wootters concurrence max(0, l1 - l2 - l3 - l4).

    The l_i are the descending square roots of the eigenvalues of
    rho @ rho_tilde with rho_tilde = (sy x sy) conj(rho) (sy x sy).
    """
    eig = herm_eig4(rho, vectors=True)
    return _concurrence_from_eig(rho, eig.values, eig.vectors)


def measure_triple(rho: np.ndarray) -> MeasureTriple:
    """All three measures, sharing one eigendecomposition of rho."""
    eig = herm_eig4(rho, vectors=True)
    values = _clean_eigenvalues(eig.values)
    entropy = 0.0
    for v in values:
        if v > 0.0:
            entropy -= v * math.log(v)
    entropy = max(0.0, min(entropy, LN4))
    return MeasureTriple(
        decoherence=entropy,
        purity=purity(rho),
        concurrence=_concurrence_from_eig(rho, eig.values, eig.vectors),
    )


def _concurrence_from_eig(rho: np.ndarray, values: np.ndarray, vectors: np.ndarray) -> float:
    # rho @ rho_tilde is not Hermitian, but it shares its nonzero spectrum
    # with sqrt(rho) @ rho_tilde @ sqrt(rho), which is; that keeps the whole
    # computation inside the Hermitian eigensolver.
    cleaned = _clean_eigenvalues(values)
    sqrt_rho = (vectors * np.sqrt(cleaned)) @ dagger(vectors)
    rho_tilde = _SPIN_FLIP @ rho.conj() @ _SPIN_FLIP
    mu = herm_eig4(sqrt_rho @ rho_tilde @ sqrt_rho).values
    mu = np.clip(mu, 0.0, 1.0)  # spectral norms of rho, rho_tilde are <= 1
    roots = np.sqrt(mu)
    c = float(roots[0] - roots[1] - roots[2] - roots[3])
    # Square roots of round-off eigenvalues put the method's noise floor
    # near 1e-9; endpoint deviations inside 1e-14 are spurious precision.
    if c >= 1.0 - 1e-14:
        return 1.0
    if c <= 1e-14:
        return 0.0
    return c
