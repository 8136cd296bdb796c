"""Markovian dynamics: Bloch ODEs, rate presets, generators, damping basis.

The Bloch vector obeys

    du/dt = -u / T_u - Delta v
    dv/dt = -v / T_v + Delta u + Omega w
    dw/dt = -(w - w_eq) / T_w - Omega v

with Rabi frequency Omega, detuning Delta and three phenomenological decay
rates.  The same dissipative dynamics, when it has a proper generator
L rho = -i[H, rho] + (1/2) sum c_ij ([F_i, rho F_j] + [F_i rho, F_j]) over the
normalized traceless basis F_i = sigma_i / sqrt(2), can be diagonalized in a
damping basis of left/right eigenoperator pairs, giving the channel in
closed form.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .bloch import from_density, to_density
from .errors import DefectiveGeneratorError, InputError, NotCompletelyPositiveError
from .linalg import pauli
from .tolerances import TOL
from .trace import ChannelTrace

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class BlochParams:
    """Parameters of the Bloch equations; rates in units of inverse time."""

    rates: np.ndarray  # (1/T_u, 1/T_v, 1/T_w)
    rabi: float = 0.0
    detuning: float = 0.0
    w_eq: float = 0.0

    def __post_init__(self):
        rates = np.asarray(self.rates, dtype=float)
        if rates.shape != (3,):
            raise InputError("rates must be a triple (1/T_u, 1/T_v, 1/T_w)")
        if np.any(rates < 0.0):
            raise InputError("decay rates must be nonnegative")
        if abs(self.w_eq) > 1.0 + TOL.state_norm:
            raise InputError("equilibrium inversion must satisfy |w_eq| <= 1")
        object.__setattr__(self, "rates", rates)


def bloch_rhs(p: BlochParams, b) -> np.ndarray:
    """Right-hand side of the three coupled Bloch equations."""
    u, v, w = np.asarray(b, dtype=float)
    ru, rv, rw = p.rates
    return np.array(
        [
            -ru * u - p.detuning * v,
            -rv * v + p.detuning * u + p.rabi * w,
            -rw * (w - p.w_eq) - p.rabi * v,
        ]
    )


def integrate_bloch(p: BlochParams, b0, t_end: float, dt: float) -> ChannelTrace:
    """Classical fixed-step 4th-order integration of the Bloch equations.

    The number of steps is rounded so the grid lands exactly on t_end; the
    effective step never differs from the requested dt by more than half a
    step.
    """
    if dt <= 0.0:
        raise InputError("dt must be positive")
    if t_end < 0.0:
        raise InputError("t_end must be nonnegative")
    b = np.asarray(b0, dtype=float).copy()
    if t_end == 0.0:
        return ChannelTrace(np.zeros(1), ("u", "v", "w"), b.reshape(1, 3))
    n = max(1, int(round(t_end / dt)))
    h = t_end / n
    out = np.empty((n + 1, 3))
    out[0] = b
    for k in range(n):
        k1 = bloch_rhs(p, b)
        k2 = bloch_rhs(p, b + 0.5 * h * k1)
        k3 = bloch_rhs(p, b + 0.5 * h * k2)
        k4 = bloch_rhs(p, b + h * k3)
        b = b + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        out[k + 1] = b
    times = np.arange(n + 1) * h
    return ChannelTrace(times, ("u", "v", "w"), out)


@dataclass(frozen=True)
class RatePreset:
    """Decay rates and equilibrium inversion produced by a physical preset."""

    rates: np.ndarray
    w_eq: float
    completely_positive: bool | None = None

    def to_bloch_params(self, rabi: float = 0.0, detuning: float = 0.0) -> BlochParams:
        return BlochParams(rates=self.rates, rabi=rabi, detuning=detuning, w_eq=self.w_eq)


def preset_rates(kind: str, **params) -> RatePreset:
    """Map physical noise parameters onto Bloch decay rates.

    kind="standard": T1, T2 > 0 give rates (1/T2, 1/T2, 1/T1); optional w_eq.
    kind="squeezed_vacuum": Einstein coefficient A >= 0, photon number N >= 0
        and squeezing M (complex; only |M| enters) give unequal quadrature
        rates A(N + 1/2 +/- |M|), inversion rate 2A(N + 1/2) and
        w_eq = -1/(2N+1); the result is completely positive iff
        N + 1/2 >= |M|.
    kind="triple_gaussian": independent white noises of strengths
        Gamma_a,b,c >= 0 on the three spin axes give rates
        (Gamma_b+Gamma_c, Gamma_a+Gamma_c, Gamma_a+Gamma_b), which satisfy
        the lifetime inequalities for every nonnegative choice.
    """
    from .cp import lifetime_inequalities

    if kind == "standard":
        t1 = params.pop("T1")
        t2 = params.pop("T2")
        w_eq = params.pop("w_eq", 0.0)
        if params:
            raise InputError(f"unexpected parameters {sorted(params)}")
        if t1 <= 0.0 or t2 <= 0.0:
            raise InputError("lifetimes must be positive")
        rates = np.array([1.0 / t2, 1.0 / t2, 1.0 / t1])
        return RatePreset(rates, w_eq, lifetime_inequalities(rates))

    if kind == "squeezed_vacuum":
        a = params.pop("A")
        n = params.pop("N")
        m = params.pop("M")
        if params:
            raise InputError(f"unexpected parameters {sorted(params)}")
        if a < 0.0 or n < 0.0:
            raise InputError("A and N must be nonnegative")
        m_abs = abs(m)
        rates = np.array(
            [a * (n + 0.5 + m_abs), a * (n + 0.5 - m_abs), 2.0 * a * (n + 0.5)]
        )
        cp = m_abs <= n + 0.5 + TOL.boundary_clamp
        return RatePreset(rates, w_eq=-1.0 / (2.0 * n + 1.0), completely_positive=cp)

    if kind == "triple_gaussian":
        g = np.asarray(params.pop("gammas"), dtype=float)
        if params:
            raise InputError(f"unexpected parameters {sorted(params)}")
        if g.shape != (3,) or np.any(g < 0.0):
            raise InputError("gammas must be three nonnegative noise strengths")
        rates = np.array([g[1] + g[2], g[0] + g[2], g[0] + g[1]])
        return RatePreset(rates, w_eq=0.0, completely_positive=lifetime_inequalities(rates))

    raise InputError(f"unknown preset kind {kind!r}")


@dataclass(frozen=True)
class LindbladGenerator:
    """Hamiltonian part plus dissipator coefficients over F_i = sigma_i / sqrt(2)."""

    hamiltonian: np.ndarray = field(default_factory=lambda: np.zeros((2, 2), dtype=complex))
    coefficients: np.ndarray = field(default_factory=lambda: np.zeros((3, 3), dtype=complex))

    def __post_init__(self):
        h = np.asarray(self.hamiltonian, dtype=complex)
        c = np.asarray(self.coefficients, dtype=complex)
        if h.shape != (2, 2) or c.shape != (3, 3):
            raise InputError("hamiltonian must be 2x2 and coefficients 3x3")
        if np.max(np.abs(h - h.conj().T)) > TOL.hermiticity:
            raise InputError("hamiltonian must be Hermitian")
        if abs(np.trace(h)) > TOL.hermiticity:
            raise InputError("hamiltonian must be traceless")
        if np.max(np.abs(c - c.conj().T)) > TOL.hermiticity:
            raise InputError("coefficient matrix must be Hermitian")
        if np.min(np.linalg.eigvalsh(c)) < -TOL.psd:
            raise InputError("coefficient matrix must be positive semidefinite")
        object.__setattr__(self, "hamiltonian", h)
        object.__setattr__(self, "coefficients", c)

    @classmethod
    def dephasing(cls, d: float, rabi: float = 0.0, detuning: float = 0.0):
        """Phase randomization of strength d: dissipator -d [sigma_3, [sigma_3, .]]."""
        if d < 0.0:
            raise InputError("dephasing strength must be nonnegative")
        c = np.zeros((3, 3), dtype=complex)
        c[2, 2] = 4.0 * d
        return cls(hamiltonian=_bloch_hamiltonian(rabi, detuning), coefficients=c)

    @classmethod
    def gaussian_white(cls, gammas, rabi: float = 0.0, detuning: float = 0.0):
        """Independent white noise of strength Gamma_k along each spin axis."""
        g = np.asarray(gammas, dtype=float)
        if g.shape != (3,) or np.any(g < 0.0):
            raise InputError("gammas must be three nonnegative noise strengths")
        return cls(
            hamiltonian=_bloch_hamiltonian(rabi, detuning),
            coefficients=np.diag(g).astype(complex),
        )

    @classmethod
    def from_rates(cls, rates, rabi: float = 0.0, detuning: float = 0.0):
        """Unital generator reproducing given decay rates, when one exists.

        Inverts the triple-Gaussian correspondence; rates violating the
        lifetime inequalities have no positive-semidefinite coefficient
        matrix and raise :class:`NotCompletelyPositiveError`.
        """
        r = np.asarray(rates, dtype=float)
        if r.shape != (3,) or np.any(r < 0.0):
            raise InputError("rates must be three nonnegative decay rates")
        g = 0.5 * np.array(
            [-r[0] + r[1] + r[2], r[0] - r[1] + r[2], r[0] + r[1] - r[2]]
        )
        if np.any(g < -TOL.boundary_clamp):
            raise NotCompletelyPositiveError(
                "rates violate the lifetime inequalities; no valid generator exists"
            )
        return cls.gaussian_white(np.clip(g, 0.0, None), rabi=rabi, detuning=detuning)


def _bloch_hamiltonian(rabi: float, detuning: float) -> np.ndarray:
    """Hamiltonian -(Omega/2) sigma_1 + (Delta/2) sigma_3 driving the unitary part."""
    return -0.5 * rabi * pauli(1) + 0.5 * detuning * pauli(3)


def lindblad_apply(g: LindbladGenerator, rho: np.ndarray) -> np.ndarray:
    """Action of the full generator on a 2x2 operator."""
    rho = np.asarray(rho, dtype=complex)
    out = -1.0j * (g.hamiltonian @ rho - rho @ g.hamiltonian)
    fs = [pauli(i + 1) / _SQRT2 for i in range(3)]
    for i in range(3):
        for j in range(3):
            c = g.coefficients[i, j]
            if c == 0.0:
                continue
            fi, fj = fs[i], fs[j]
            anti = fj @ fi @ rho + rho @ fj @ fi
            out += c * (fi @ rho @ fj - 0.5 * anti)
    return out


def generator_matrix(g: LindbladGenerator) -> np.ndarray:
    """Real 4x4 matrix of the generator on Pauli coefficient vectors."""
    m = np.empty((4, 4))
    for beta in range(4):
        image = lindblad_apply(g, pauli(beta))
        for alpha in range(4):
            coeff = 0.5 * np.trace(pauli(alpha) @ image)
            m[alpha, beta] = coeff.real
    return m


@dataclass(frozen=True)
class DampingBasis:
    """Eigenvalues with dual left/right eigenoperator pairs of a generator.

    Right operators satisfy L(R_i) = eigenvalue_i R_i; the left operators are
    trace-dual, Tr(L_i R_j) = delta_ij.  Eigenvalues are real for purely
    dissipative generators and stored complex when a Hamiltonian part makes
    them so.
    """

    eigenvalues: np.ndarray
    right_ops: tuple[np.ndarray, ...]
    left_ops: tuple[np.ndarray, ...]


def damping_basis(g: LindbladGenerator) -> DampingBasis:
    """Diagonalize the generator over the 4-dimensional operator space.

    Diagonal generator matrices (every channel built from axis-aligned noise)
    keep the Pauli-aligned eigenoperators sigma_alpha / sqrt(2), fixing the
    basis inside degenerate eigenspaces.  Non-diagonalizable generators are
    rejected.
    """
    m = generator_matrix(g)
    off = m - np.diag(np.diag(m))
    if np.max(np.abs(off)) <= TOL.equality:
        eigs = np.diag(m).astype(float).copy()
        ops = tuple(pauli(a) / _SQRT2 for a in range(4))
        return DampingBasis(eigenvalues=eigs, right_ops=ops, left_ops=ops)

    eigs, vecs = np.linalg.eig(m)
    # A tiny residual in V diag(w) V^-1 - M certifies diagonalizability; a
    # defective matrix makes the eigenvector matrix numerically singular.
    cond = np.linalg.cond(vecs)
    if not np.isfinite(cond) or cond > 1e8:
        raise DefectiveGeneratorError(
            f"generator has a non-diagonalizable (Jordan) block; eigenvector "
            f"condition number {cond:.3e}"
        )
    inv = np.linalg.inv(vecs)
    if np.max(np.abs(eigs.imag)) <= TOL.duality:
        eigs = eigs.real
    right = tuple(
        sum(vecs[beta, i] * pauli(beta) for beta in range(4)) / _SQRT2 for i in range(4)
    )
    left = tuple(
        sum(inv[i, beta] * pauli(beta) for beta in range(4)) / _SQRT2 for i in range(4)
    )
    return DampingBasis(eigenvalues=eigs, right_ops=right, left_ops=left)


def evolve_by_damping_basis(basis: DampingBasis, rho0: np.ndarray, t: float) -> np.ndarray:
    """State at time t: sum_i e^(eigenvalue_i t) Tr(L_i rho0) R_i."""
    if t < 0.0:
        raise InputError("time must be nonnegative")
    rho0 = np.asarray(rho0, dtype=complex)
    out = np.zeros((2, 2), dtype=complex)
    for lam, left, right in zip(basis.eigenvalues, basis.left_ops, basis.right_ops):
        out += np.exp(lam * t) * np.trace(left @ rho0) * right
    return out


def _basis_map(basis: DampingBasis, t: float, a: np.ndarray) -> np.ndarray:
    out = np.zeros((2, 2), dtype=complex)
    for lam, left, right in zip(basis.eigenvalues, basis.left_ops, basis.right_ops):
        out += np.exp(lam * t) * np.trace(left @ a) * right
    return out


def semigroup_check(channel, t: float, s: float, tol: float = TOL.duality) -> bool:
    """Check the composition law: evolving by s then t equals evolving by t+s.

    ``channel`` is either a :class:`DampingBasis` (checked on the four Pauli
    basis operators, together with continuity at t -> 0) or a callable
    time -> AffineBlochMap (checked at the superoperator-matrix level, the
    non-Markovianity witness for memory-kernel channels).
    """
    if t < 0.0 or s < 0.0:
        raise InputError("times must be nonnegative")
    if callable(channel):
        from .bloch import superoperator_matrix

        mt = superoperator_matrix(channel(t))
        ms = superoperator_matrix(channel(s))
        mts = superoperator_matrix(channel(t + s))
        return bool(np.max(np.abs(mt @ ms - mts)) <= tol)

    basis = channel
    for alpha in range(4):
        p = pauli(alpha)
        composed = _basis_map(basis, t, _basis_map(basis, s, p))
        direct = _basis_map(basis, t + s, p)
        if np.max(np.abs(composed - direct)) > tol:
            return False
        eps = 1e-8
        drift = np.max(np.abs(_basis_map(basis, eps, p) - p))
        scale = max(1.0, float(np.max(np.abs(basis.eigenvalues))))
        if drift > 100.0 * eps * scale:
            return False
    return True


def evolve_state(p: BlochParams, b0, t_end: float, dt: float, method: str = "ode") -> ChannelTrace:
    """Evolve a Bloch vector by direct integration or by the damping basis.

    The damping-basis route requires a unital channel (w_eq = 0); it builds
    the generator from the rates and Rabi/detuning parameters and evaluates
    the closed-form solution on the same grid the integrator would use.
    """
    if method == "ode":
        return integrate_bloch(p, b0, t_end, dt)
    if method != "damping-basis":
        raise InputError(f"unknown method {method!r}")
    if p.w_eq != 0.0:
        raise InputError("damping-basis evolution requires w_eq = 0 (unital channel)")
    basis = damping_basis(
        LindbladGenerator.from_rates(p.rates, rabi=p.rabi, detuning=p.detuning)
    )
    if dt <= 0.0:
        raise InputError("dt must be positive")
    if t_end < 0.0:
        raise InputError("t_end must be nonnegative")
    n = 0 if t_end == 0.0 else max(1, int(round(t_end / dt)))
    times = np.zeros(1) if n == 0 else np.arange(n + 1) * (t_end / n)
    rho0 = to_density(b0)
    out = np.empty((times.size, 3))
    for k, t in enumerate(times):
        rho = evolve_by_damping_basis(basis, rho0, float(t))
        out[k] = from_density(0.5 * (rho + rho.conj().T))
    return ChannelTrace(times, ("u", "v", "w"), out)
