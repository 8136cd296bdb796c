"""Complete positivity of Bloch maps, three ways, plus Kraus constructions.

For a unital map diag(lam) the four sign patterns of
lam_1 +/- lam_2 +/- lam_3 (even number of minus signs) must stay below 1;
these linear conditions carve a tetrahedron with vertices (1,1,1),
(1,-1,-1), (-1,1,-1), (-1,-1,1) out of the positivity cube [-1,1]^3.  The
same numbers reappear as the eigenvalues of the two-qubit operator obtained
by sending half of a maximally entangled pair through the channel, and as
the weights of the canonical four-operator Kraus set, so the three tests
cross-validate each other.
"""

from dataclasses import dataclass

import numpy as np

from .bloch import AffineBlochMap, apply_superoperator, is_positive_map
from .errors import InputError, NotCompletelyPositiveError
from .linalg import dagger, hermitian_eigenvalues4, kron, pauli
from .tolerances import TOL

# Sign patterns of the four inequalities s . lam <= 1, in reporting order.
_INEQUALITY_SIGNS = np.array(
    [
        [1.0, 1.0, -1.0],
        [1.0, -1.0, 1.0],
        [-1.0, 1.0, 1.0],
        [-1.0, -1.0, -1.0],
    ]
)

INEQUALITY_LABELS = (
    "L1 + L2 - L3 <= 1",
    "L1 - L2 + L3 <= 1",
    "-L1 + L2 + L3 <= 1",
    "-L1 - L2 - L3 <= 1",
)

# Kraus radicand k maps to inequality index 3 - k: the identity-weight
# radicand 1 + L1 + L2 + L3 vanishes exactly when -L1 - L2 - L3 hits 1.
_RADICAND_TO_INEQUALITY = (4, 3, 2, 1)


def _as_lambda_triple(lam) -> np.ndarray:
    if isinstance(lam, AffineBlochMap):
        if not lam.is_unital:
            raise InputError("damping-eigenvalue inequalities apply to unital maps only")
        return lam.lam
    lam = np.asarray(lam, dtype=float)
    if lam.shape != (3,):
        raise InputError("expected a triple of damping eigenvalues")
    return lam


def bloch_inequality_lhs(lam) -> np.ndarray:
    """Left-hand sides of the four inequalities, for a triple or an array of them.

    Accepts shape (3,) or (..., 3) and returns shape (4,) or (..., 4).
    """
    lam = np.asarray(lam, dtype=float)
    return lam @ _INEQUALITY_SIGNS.T


def kraus_weights(lam) -> np.ndarray:
    """Weights (1 - lhs_k) / 4 in Kraus order (identity, sigma_1..3).

    These are also the eigenvalues of the channel's maximally-entangled-state
    image, so nonnegativity of all four is the complete-positivity criterion.
    """
    lhs = bloch_inequality_lhs(lam)
    return (1.0 - lhs[..., ::-1]) / 4.0


@dataclass(frozen=True)
class CpVerdict:
    """Outcome of a positivity / complete-positivity decision."""

    is_positive: bool
    is_completely_positive: bool
    choi_min_eigenvalue: float
    violated_inequality: int | None = None


def bloch_inequalities(lam) -> CpVerdict:
    """Decide complete positivity of a unital map from its damping triple.

    The reported minimal eigenvalue is the smallest Kraus weight, which for
    unital diagonal maps coincides with the minimal eigenvalue computed by
    :func:`choi_test`.
    """
    lam = _as_lambda_triple(lam)
    lhs = bloch_inequality_lhs(lam)
    violated = None
    for k, value in enumerate(lhs):
        if value > 1.0 + 4.0 * TOL.psd:
            violated = k + 1
            break
    weights = kraus_weights(lam)
    min_eig = float(np.min(weights))
    return CpVerdict(
        is_positive=bool(np.max(np.abs(lam)) <= 1.0 + TOL.map_norm),
        is_completely_positive=violated is None,
        choi_min_eigenvalue=min_eig,
        violated_inequality=violated,
    )


def lifetime_inequalities(rates) -> bool:
    """Triangle conditions on decay rates (1/T_u, 1/T_v, 1/T_w).

    Each rate may not exceed the sum of the other two; for purely exponential
    damping eigenvalues e^(-t/T_i) this is equivalent to the map being
    completely positive at every time.
    """
    r = np.asarray(rates, dtype=float)
    if r.shape != (3,):
        raise InputError("expected three decay rates")
    if np.any(r < 0.0):
        raise InputError("decay rates must be nonnegative")
    total = float(np.sum(r))
    return bool(np.all(2.0 * r <= total + TOL.boundary_clamp))


def violated_lifetime_inequality(rates) -> str | None:
    """Human-readable label of the first violated triangle condition, if any."""
    r = np.asarray(rates, dtype=float)
    names = ("1/T_u <= 1/T_v + 1/T_w", "1/T_v <= 1/T_w + 1/T_u", "1/T_w <= 1/T_u + 1/T_v")
    total = float(np.sum(r))
    for k in range(3):
        if 2.0 * r[k] > total + TOL.boundary_clamp:
            return names[k]
    return None


def choi_matrix(m: AffineBlochMap) -> np.ndarray:
    """Image of the Bell projector under (identity x channel), trace 1.

    Built from the channel's action on the Pauli basis:
    (1/4) sum_alpha sigma_alpha (x) Phi(sigma_alpha^T).
    """
    out = np.zeros((4, 4), dtype=complex)
    for alpha in range(4):
        p = pauli(alpha)
        out += kron(p, apply_superoperator(m, p.T))
    return 0.25 * out


def choi_test(m: AffineBlochMap) -> CpVerdict:
    """Spectral complete-positivity test; works for nonunital maps too."""
    eigs = hermitian_eigenvalues4(choi_matrix(m))
    min_eig = float(eigs[0])
    violated = None
    if m.is_unital:
        lhs = bloch_inequality_lhs(m.lam)
        for k, value in enumerate(lhs):
            if value > 1.0 + 4.0 * TOL.psd:
                violated = k + 1
                break
    return CpVerdict(
        is_positive=bool(is_positive_map(m)),
        is_completely_positive=min_eig >= -TOL.psd,
        choi_min_eigenvalue=min_eig,
        violated_inequality=violated,
    )


@dataclass(frozen=True)
class KrausSet:
    """Operators K_i with Phi(rho) = sum_i K_i rho K_i^dagger."""

    operators: tuple[np.ndarray, ...]

    def completeness_defect(self) -> float:
        acc = np.zeros((2, 2), dtype=complex)
        for k in self.operators:
            acc += dagger(k) @ k
        return float(np.max(np.abs(acc - np.eye(2))))


def unital_kraus(lam) -> KrausSet:
    """Canonical Kraus set of a completely positive unital diagonal map.

    The operators are sqrt(w_alpha) sigma_alpha with the four weights from
    :func:`kraus_weights`; zero-weight operators are dropped.  Raises
    :class:`NotCompletelyPositiveError` (carrying the violated inequality
    index) when any weight is negative beyond the clamp band.
    """
    lam = _as_lambda_triple(lam)
    weights = kraus_weights(lam)
    ops = []
    for alpha, w in enumerate(weights):
        if w < -TOL.boundary_clamp / 4.0:
            raise NotCompletelyPositiveError(
                f"map is not completely positive: weight {w:.6g} of sigma_{alpha} negative",
                violated_inequality=_RADICAND_TO_INEQUALITY[alpha],
            )
        w = max(w, 0.0)
        if w > 0.0:
            ops.append(np.sqrt(w) * pauli(alpha))
    return KrausSet(operators=tuple(ops))


@dataclass(frozen=True)
class KrausCheck:
    ok: bool
    failure: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_kraus(k: KrausSet, m: AffineBlochMap, tol: float = TOL.duality) -> KrausCheck:
    """Check completeness and that the operator sum reproduces the map.

    Both checks run on the four Pauli basis elements; returns a falsy result
    carrying a description of the first failed check instead of raising.
    """
    defect = k.completeness_defect()
    if defect > tol:
        return KrausCheck(False, f"completeness defect {defect:.3e}")
    for alpha in range(4):
        p = pauli(alpha)
        acc = np.zeros((2, 2), dtype=complex)
        for op in k.operators:
            acc += op @ p @ dagger(op)
        expected = apply_superoperator(m, p)
        diff = float(np.max(np.abs(acc - expected)))
        if diff > tol:
            return KrausCheck(False, f"action mismatch {diff:.3e} on sigma_{alpha}")
    return KrausCheck(True)


def kraus_from_choi(m: AffineBlochMap) -> KrausSet:
    """Kraus operators of any completely positive map, from the Choi spectrum.

    Eigenvectors with positive weight reshape into operators; used for
    nonunital maps where the canonical unital set does not apply.
    """
    c = choi_matrix(m)
    eigs, vecs = np.linalg.eigh(c)
    if eigs[0] < -TOL.psd:
        raise NotCompletelyPositiveError(
            f"map is not completely positive: minimal eigenvalue {eigs[0]:.6g}"
        )
    ops = []
    for q, vec in zip(eigs, vecs.T):
        if q > TOL.boundary_clamp:
            ops.append(np.sqrt(2.0 * q) * vec.reshape(2, 2).T)
    return KrausSet(operators=tuple(ops))


@dataclass(frozen=True)
class TetrahedronSample:
    """Grid classification of the damping-eigenvalue cube [-1, 1]^3."""

    lambdas: np.ndarray  # (N, 3)
    is_positive: np.ndarray  # (N,) bool
    is_completely_positive: np.ndarray  # (N,) bool

    @property
    def cp_fraction(self) -> float:
        return float(np.mean(self.is_completely_positive))


def tetrahedron_sample(n: int) -> TetrahedronSample:
    """Classify an n^3 grid of unital maps as positive / completely positive.

    The completely positive points fill the tetrahedron inscribed in the
    cube; its volume is 1/3 of the cube's, which the grid fraction approaches
    as n grows.
    """
    if n < 2:
        raise InputError("grid resolution must be at least 2")
    axis = np.linspace(-1.0, 1.0, n)
    g1, g2, g3 = np.meshgrid(axis, axis, axis, indexing="ij")
    lams = np.column_stack([g1.ravel(), g2.ravel(), g3.ravel()])
    lhs = bloch_inequality_lhs(lams)
    is_cp = np.all(lhs <= 1.0 + TOL.boundary_clamp, axis=1)
    is_pm = np.max(np.abs(lams), axis=1) <= 1.0 + TOL.boundary_clamp
    return TetrahedronSample(lambdas=lams, is_positive=is_pm, is_completely_positive=is_cp)
