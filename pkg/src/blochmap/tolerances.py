"""Numerical tolerances used across the package, collected in one record."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """Single tuning point for every numerical threshold in the package."""

    equality: float = 1e-12        # generic floating-point equality
    hermiticity: float = 1e-10     # max |A - A^dagger| accepted as Hermitian
    eigen_residual: float = 1e-10  # eigenvalue solver residual requirement
    psd: float = 1e-10             # spectra above -psd count as positive semidefinite
    boundary_clamp: float = 1e-12  # values within this band of zero are clamped to zero
    map_norm: float = 1e-9         # allowed excess of the image norm over the unit ball
    duality: float = 1e-10         # trace-pairing orthonormality of damping bases
    state_norm: float = 1e-12      # allowed excess of a Bloch vector norm over 1


TOL = Tolerances()
