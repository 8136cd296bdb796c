"""Bloch-vector states and affine Bloch maps.

A qubit state is a real 3-vector b = (u, v, w) inside the unit ball, dual to
the density operator rho = (I + b . sigma) / 2.  A channel acts on b as the
affine map b -> diag(lam) b + translation, equivalently as a real 4x4 matrix
on the Pauli coefficient vector (1, u, v, w).
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InputError, UnphysicalStateError
from .linalg import pauli
from .tolerances import TOL


def as_bloch_vector(b) -> np.ndarray:
    """Validate and return b as a float array of shape (3,)."""
    b = np.asarray(b, dtype=float)
    if b.shape != (3,):
        raise InputError(f"Bloch vector must have 3 components, got shape {b.shape}")
    norm = float(np.linalg.norm(b))
    if norm > 1.0 + TOL.state_norm:
        raise UnphysicalStateError(f"Bloch vector norm {norm} exceeds 1")
    return b


def to_density(b) -> np.ndarray:
    """Density operator (I + b . sigma) / 2 of a Bloch vector."""
    u, v, w = as_bloch_vector(b)
    return 0.5 * np.array(
        [[1.0 + w, u - 1.0j * v], [u + 1.0j * v, 1.0 - w]], dtype=complex
    )


def from_density(rho) -> np.ndarray:
    """Bloch vector of a density operator; inverse of :func:`to_density`."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise InputError("density operator must be 2x2")
    if abs(np.trace(rho) - 1.0) > TOL.equality * 10:
        raise UnphysicalStateError(f"trace {np.trace(rho)} is not 1")
    if np.max(np.abs(rho - rho.conj().T)) > TOL.hermiticity:
        raise UnphysicalStateError("density operator is not Hermitian")
    u = 2.0 * rho[1, 0].real
    v = 2.0 * rho[1, 0].imag
    w = (rho[0, 0] - rho[1, 1]).real
    return np.array([u, v, w])


def bloch_matrix(b) -> np.ndarray:
    """The traceless matrix b . sigma; its determinant is -(u^2 + v^2 + w^2)."""
    u, v, w = np.asarray(b, dtype=float)
    return np.array([[w, u - 1.0j * v], [u + 1.0j * v, -w]], dtype=complex)


@dataclass(frozen=True)
class AffineBlochMap:
    """b -> diag(lam) b + translation."""

    lam: np.ndarray
    translation: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        lam = np.asarray(self.lam, dtype=float)
        t = np.asarray(self.translation, dtype=float)
        if lam.shape != (3,) or t.shape != (3,):
            raise InputError("lam and translation must each have 3 components")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "translation", t)

    @classmethod
    def identity(cls) -> "AffineBlochMap":
        return cls(np.ones(3))

    @classmethod
    def unital(cls, lam) -> "AffineBlochMap":
        return cls(np.asarray(lam, dtype=float))

    @property
    def is_unital(self) -> bool:
        return bool(np.max(np.abs(self.translation)) <= TOL.boundary_clamp)


def apply_map(m: AffineBlochMap, b) -> np.ndarray:
    """Image of a Bloch vector: componentwise lam_i * b_i + t_i."""
    b = np.asarray(b, dtype=float)
    return m.lam * b + m.translation


def superoperator_matrix(m: AffineBlochMap) -> np.ndarray:
    """Real 4x4 matrix acting on the Pauli coefficient vector (1, u, v, w).

    First row (1, 0, 0, 0) encodes trace preservation; the translation sits
    in the remaining first column and diag(lam) in the lower-right block.
    """
    t = np.zeros((4, 4))
    t[0, 0] = 1.0
    t[1:, 0] = m.translation
    t[1:, 1:] = np.diag(m.lam)
    return t


def apply_superoperator(m: AffineBlochMap, a: np.ndarray) -> np.ndarray:
    """Extend the Bloch map linearly to an arbitrary 2x2 matrix.

    The Pauli coefficient vector (c0, c) maps to (c0, lam * c + c0 * t), which
    reproduces the affine action on states and scales the translation by the
    trace for traceless inputs.
    """
    from .linalg import from_pauli_coefficients, pauli_coefficients

    c = pauli_coefficients(a)
    out = np.empty(4, dtype=complex)
    out[0] = c[0]
    out[1:] = m.lam * c[1:] + c[0] * m.translation
    return from_pauli_coefficients(out)


@dataclass(frozen=True)
class Ellipsoid:
    """Image of the unit sphere under an affine Bloch map."""

    center: np.ndarray
    semi_axes: np.ndarray
    flattened_axes: tuple[bool, bool, bool]


def image_ellipsoid(m: AffineBlochMap) -> Ellipsoid:
    """Ellipsoid ((x - t) / lam)^2 summed over components = 1.

    Axes with lam_i = 0 collapse to zero thickness and are flagged rather
    than treated as errors.
    """
    semi = np.abs(m.lam)
    flattened = tuple(bool(s <= TOL.boundary_clamp) for s in semi)
    return Ellipsoid(center=m.translation.copy(), semi_axes=semi, flattened_axes=flattened)


@dataclass(frozen=True)
class PositivityResult:
    """Verdict of the unit-ball contraction test, with a witness when it fails."""

    is_positive: bool
    max_image_norm: float
    witness: np.ndarray | None = None

    def __bool__(self) -> bool:
        return self.is_positive


def _max_image_norm(lam: np.ndarray, t: np.ndarray) -> tuple[float, np.ndarray]:
    """Maximize |diag(lam) b + t| over the unit sphere |b| = 1.

    Stationarity gives b_i = lam_i t_i / (mu - lam_i^2) with a scalar
    multiplier mu >= max(lam_i^2); the norm constraint becomes a strictly
    decreasing secular equation in mu, solved by bisection.  When every t_i
    on a maximal |lam_i| axis vanishes the multiplier can sit exactly at
    max(lam_i^2) with the leftover norm placed on that axis (the degenerate
    branch of the trust-region subproblem).
    """
    l2 = lam * lam
    top = float(np.max(l2))
    coef = lam * t  # b_i is proportional to lam_i t_i

    active = np.abs(coef) > 0.0
    if not np.any(active):
        # Image norm does not depend on b through the coupled terms; put the
        # unit vector on a maximal-contraction axis.
        b = np.zeros(3)
        b[int(np.argmax(l2))] = 1.0
        return float(np.linalg.norm(lam * b + t)), b

    def solution(mu: float) -> np.ndarray:
        b = np.zeros(3)
        np.divide(coef, mu - l2, out=b, where=active)
        return b

    def residual(mu: float) -> float:
        b = solution(mu)
        return float(b @ b) - 1.0

    hard_case = not np.any(active & (l2 == top))
    if hard_case and residual(top) < 0.0:
        # Multiplier pinned at top; distribute the leftover norm on a free
        # maximal axis (its sign does not affect the image norm).
        b = solution(top)
        slack = 1.0 - float(b @ b)
        j = int(np.argmax(np.where(active, -np.inf, l2)))
        b[j] = math.sqrt(max(slack, 0.0))
        return float(np.linalg.norm(lam * b + t)), b

    # Standard branch: residual decreases from +inf (or >= 0) at mu -> top+
    # down to -1 as mu -> inf, and sum b_i^2 <= 1 at mu = top + |coef|.
    lo = top
    hi = top + float(np.linalg.norm(coef)) + 1e-30
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if residual(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    b = solution(hi)
    nrm = float(np.linalg.norm(b))
    if nrm > 0.0:
        b = b / nrm
    return float(np.linalg.norm(lam * b + t)), b


def is_positive_map(m: AffineBlochMap) -> PositivityResult:
    """Whether every unit Bloch vector maps into the closed unit ball.

    For unital maps this reduces to max |lam_i| <= 1; with a translation the
    maximal image norm over the sphere is computed explicitly and the
    maximizing input is reported as a witness on failure.
    """
    if m.is_unital:
        worst = int(np.argmax(np.abs(m.lam)))
        max_norm = float(np.abs(m.lam[worst]))
        witness = np.zeros(3)
        witness[worst] = 1.0
    else:
        max_norm, witness = _max_image_norm(m.lam, m.translation)
    ok = max_norm <= 1.0 + TOL.map_norm
    return PositivityResult(
        is_positive=ok,
        max_image_norm=max_norm,
        witness=None if ok else witness,
    )
