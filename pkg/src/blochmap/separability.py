"""Partial-transpose separability analysis of a noisy Bell pair.

One qubit of the Bell state (|00> + |11>) / sqrt(2) is sent through a
channel; negativity of the partial transpose of the output then witnesses
surviving entanglement (necessary and sufficient at 2x2).  For the dephasing
family diag(L, L, 1) the partial-transpose spectrum is (1/2, 1/2, -L/2, L/2),
so the pair is separable exactly where the channel scalar vanishes.
"""

import numpy as np

from .bloch import AffineBlochMap, apply_superoperator
from .errors import InputError
from .linalg import hermitian_eigenvalues4, kron, pauli
from .nonmarkov import RtsParams, rts_lambda
from .tolerances import TOL


def bell_state() -> np.ndarray:
    """Projector onto (|00> + |11>) / sqrt(2)."""
    psi = np.zeros(4, dtype=complex)
    psi[0] = psi[3] = 1.0 / np.sqrt(2.0)
    return np.outer(psi, psi.conj())


def validate_two_qubit_state(rho) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise InputError("two-qubit state must be 4x4")
    if abs(np.trace(rho).real - 1.0) > 10 * TOL.equality or abs(np.trace(rho).imag) > TOL.equality:
        raise InputError("two-qubit state must have unit trace")
    if np.min(hermitian_eigenvalues4(rho)) < -TOL.psd:
        raise InputError("two-qubit state must be positive semidefinite")
    return rho


def one_sided_channel(m: AffineBlochMap, state) -> np.ndarray:
    """Apply (identity x channel) to a two-qubit state via the product basis.

    Expands the state in sigma_alpha (x) sigma_beta, transforms the B-side
    coefficients by the channel's superoperator, and reassembles; works for
    maps with translations and (deliberately) for non-completely-positive
    maps, whose unphysical output this module is used to exhibit.
    """
    state = np.asarray(state, dtype=complex)
    if state.shape != (4, 4):
        raise InputError("two-qubit state must be 4x4")
    out = np.zeros((4, 4), dtype=complex)
    for alpha in range(4):
        pa = pauli(alpha)
        for beta in range(4):
            pb = pauli(beta)
            coeff = 0.25 * np.trace(kron(pa, pb) @ state)
            out += coeff * np.kron(pa, apply_superoperator(m, pb))
    return out


def partial_transpose_b(state) -> np.ndarray:
    """Transpose the second qubit in the computational basis; an involution."""
    state = np.asarray(state, dtype=complex)
    if state.shape != (4, 4):
        raise InputError("two-qubit state must be 4x4")
    blocks = state.reshape(2, 2, 2, 2)  # indices (a, b, a', b')
    return blocks.transpose(0, 3, 2, 1).reshape(4, 4)


def peres_eigenvalues(m: AffineBlochMap) -> np.ndarray:
    """Partial-transpose spectrum of the one-sided-noisy Bell pair, ascending.

    For the dephasing family diag(L, L, 1) with no translation the closed
    form (1/2, 1/2, -L/2, L/2) is returned; other maps fall back to the
    numeric spectrum.
    """
    in_family = (
        m.is_unital
        and abs(m.lam[0] - m.lam[1]) <= TOL.equality
        and abs(m.lam[2] - 1.0) <= TOL.equality
    )
    if in_family:
        lam = m.lam[0]
        return np.sort(np.array([0.5, 0.5, -0.5 * lam, 0.5 * lam]))
    return hermitian_eigenvalues4(partial_transpose_b(one_sided_channel(m, bell_state())))


def peres_eigenvalues_numeric(m: AffineBlochMap) -> np.ndarray:
    """Numeric partial-transpose spectrum (cross-check for the closed form)."""
    return hermitian_eigenvalues4(partial_transpose_b(one_sided_channel(m, bell_state())))


def separability_times(p: RtsParams, t_max: float) -> list[float]:
    """Zeros of the telegraph channel scalar in (0, t_max].

    These are the instants where the noisy Bell pair becomes separable.  The
    scalar is scanned on a grid of step tau / 50 for sign changes, each
    bracketed root then bisected to 1e-10 relative accuracy.  Monotone
    regimes (a tau <= 1/4) yield no finite zeros, matching the exponential
    white-noise channel which is separable only asymptotically.
    """
    if t_max <= 0.0:
        raise InputError("t_max must be positive")
    step = p.correlation_time / 50.0
    n = int(np.ceil(t_max / step))
    times = np.linspace(0.0, t_max, n + 1)
    values = rts_lambda(p, times)
    roots: list[float] = []
    for k in range(n):
        f0, f1 = values[k], values[k + 1]
        if f0 == 0.0:
            if times[k] > 0.0:
                roots.append(float(times[k]))
            continue
        if f0 * f1 < 0.0:
            lo, hi = float(times[k]), float(times[k + 1])
            flo = f0
            while hi - lo > 1e-10 * hi:
                mid = 0.5 * (lo + hi)
                fm = rts_lambda(p, mid)
                if fm == 0.0:
                    lo = hi = mid
                    break
                if flo * fm < 0.0:
                    hi = mid
                else:
                    lo, flo = mid, fm
            roots.append(0.5 * (lo + hi))
    if values[-1] == 0.0 and times[-1] > 0.0:
        roots.append(float(times[-1]))
    return roots
