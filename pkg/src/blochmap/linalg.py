"""Fixed-size complex matrix arithmetic for two-level systems.

Everything in the package works with 2x2 operators and 4x4 two-qubit /
superoperator matrices, so there is no need for general n x n machinery.
Matrices are plain complex numpy arrays; this module supplies the Pauli
basis, Kronecker products, and a guarded Hermitian eigenvalue solver.
"""

import numpy as np

from .errors import InputError
from .tolerances import TOL

_PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
)


def pauli(alpha: int) -> np.ndarray:
    """Return sigma_alpha for alpha in {0, 1, 2, 3}, with sigma_0 = I."""
    if alpha not in (0, 1, 2, 3):
        raise InputError(f"Pauli index must be 0, 1, 2 or 3, got {alpha!r}")
    return _PAULI[alpha].copy()


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return a.conj().T


def is_hermitian(a: np.ndarray, tol: float = TOL.hermiticity) -> bool:
    return bool(np.max(np.abs(a - a.conj().T)) < tol)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two 2x2 matrices."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise InputError("kron expects two 2x2 matrices")
    return np.kron(a, b)


def hermitian_eigenvalues4(m: np.ndarray) -> np.ndarray:
    """Eigenvalues of a Hermitian 4x4 matrix, ascending.

    Raises :class:`InputError` when the input is not Hermitian within the
    package hermiticity tolerance; downstream positivity verdicts are only
    meaningful for Hermitian operators.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise InputError(f"expected a 4x4 matrix, got shape {m.shape}")
    defect = float(np.max(np.abs(m - m.conj().T)))
    if defect >= TOL.hermiticity:
        raise InputError(f"matrix is not Hermitian (max deviation {defect:.3e})")
    return np.linalg.eigvalsh(m)


def pauli_coefficients(a: np.ndarray) -> np.ndarray:
    """Expansion coefficients c_alpha with a = sum_alpha c_alpha sigma_alpha.

    c_alpha = Tr(sigma_alpha a) / 2; complex in general, real for Hermitian a.
    """
    a = np.asarray(a, dtype=complex)
    return np.array([0.5 * np.trace(p @ a) for p in _PAULI])


def from_pauli_coefficients(c) -> np.ndarray:
    """Assemble sum_alpha c_alpha sigma_alpha from a length-4 coefficient vector."""
    c = np.asarray(c, dtype=complex)
    out = np.zeros((2, 2), dtype=complex)
    for coeff, p in zip(c, _PAULI):
        out += coeff * p
    return out
