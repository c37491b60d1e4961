"""Numerical tolerances, centralized so the library and the tests agree."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    #: max |m - m^dag| accepted before a matrix is rejected as non-Hermitian
    hermiticity: float = 1e-10
    #: Frobenius norm of u u^dag - I for matrices claimed unitary
    unitarity: float = 1e-12
    #: |trace - 1| accepted for density matrices
    trace: float = 1e-10
    #: Jacobi sweeps stop once every off-diagonal magnitude is below this
    eigen_offdiag: float = 1e-13
    #: max-norm residual |A v - nu v| guaranteed by the eigensolver
    eigen_residual: float = 1e-9
    #: eigenvalues above this floor count as round-off, below it as broken states
    eigenvalue_floor: float = -1e-9
    #: closed forms switch to their series limit below this value of t*delta_m*lambda
    series_switch: float = 1e-6
    #: bracket width at which the sudden-death/birth bisection stops
    bisection: float = 1e-6


TOLERANCES = Tolerances()
