"""Dephasing channel driven by exponentially correlated two-state noise.

A telegraph signal z(t) = a (-1)^(n(t)) with Poisson flip statistics (mean
flip count t / 2 tau) modulates the qubit phase.  Averaging over realizations
gives a channel diag(c(t), c(t), 1) whose scalar obeys the memory-kernel
equation

    dc/dt = -4 a^2 int_0^t e^(-(t - s) / tau) c(s) ds,

equivalent to the damped-oscillator equation c'' + c'/tau + 4 a^2 c = 0 with
c(0) = 1 and c'(0) = 0 (the integral forces the zero initial slope).  The
fluctuation parameter a*tau separates monotone damping from damped
oscillations; in the white-noise limit tau -> 0 at fixed gamma = 4 a^2 tau
the scalar becomes the plain exponential e^(-gamma t).
"""

import math
from dataclasses import dataclass

import numpy as np

from .bloch import AffineBlochMap
from .cp import KrausSet, unital_kraus
from .errors import InputError
from .tolerances import TOL
from .trace import ChannelTrace

REGIME_DAMPED = "damped"
REGIME_CRITICAL = "critical"
REGIME_OSCILLATORY = "oscillatory"

_CRITICAL_BAND = 1e-12


@dataclass(frozen=True)
class RtsParams:
    """Telegraph-noise parameters: jump amplitude and correlation time."""

    amplitude: float  # a, units 1/time
    correlation_time: float  # tau, units time

    def __post_init__(self):
        if self.amplitude <= 0.0:
            raise InputError("amplitude must be positive")
        if self.correlation_time <= 0.0:
            raise InputError("correlation time must be positive")

    @property
    def fluctuation(self) -> float:
        return self.amplitude * self.correlation_time


def regime(p: RtsParams) -> str:
    """Classify the solution character by the fluctuation parameter a*tau."""
    x = p.fluctuation
    if x < 0.25 - _CRITICAL_BAND:
        return REGIME_DAMPED
    if x <= 0.25 + _CRITICAL_BAND:
        return REGIME_CRITICAL
    return REGIME_OSCILLATORY


def rts_lambda(p: RtsParams, t):
    """The channel scalar c(t); accepts a scalar time or an array.

    In dimensionless time nu = t / 2 tau, with mu = sqrt((4 a tau)^2 - 1):

      oscillatory (a tau > 1/4):  e^(-nu) (cos(mu nu) + sin(mu nu) / mu)
      critical    (a tau = 1/4):  e^(-nu) (1 + nu), the removable-singularity
                                  limit of both neighboring branches
      damped      (a tau < 1/4):  the hyperbolic counterpart, evaluated as a
                                  sum of two decaying exponentials so large
                                  times cannot overflow.
    """
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr < 0.0):
        raise InputError("time must be nonnegative")
    nu = t_arr / (2.0 * p.correlation_time)
    x = 4.0 * p.fluctuation
    reg = regime(p)
    if reg == REGIME_OSCILLATORY:
        mu = math.sqrt(x * x - 1.0)
        out = np.exp(-nu) * (np.cos(mu * nu) + np.sin(mu * nu) / mu)
    elif reg == REGIME_CRITICAL:
        out = np.exp(-nu) * (1.0 + nu)
    else:
        mu = math.sqrt(1.0 - x * x)
        out = 0.5 * (
            (1.0 + 1.0 / mu) * np.exp(-nu * (1.0 - mu))
            + (1.0 - 1.0 / mu) * np.exp(-nu * (1.0 + mu))
        )
    if np.isscalar(t) or t_arr.ndim == 0:
        return float(out)
    return out


@dataclass(frozen=True)
class RtsSolution:
    """Closed-form channel scalar with its regime and oscillation frequency.

    ``frequency`` is the magnitude of sqrt(4 a^2 - 1 / 4 tau^2);
    ``frequency_is_imaginary`` tags the damped regime where that square root
    is imaginary.
    """

    params: RtsParams
    regime: str
    frequency: float
    frequency_is_imaginary: bool

    def __call__(self, t):
        return rts_lambda(self.params, t)


def rts_solution(p: RtsParams) -> RtsSolution:
    disc = 4.0 * p.amplitude**2 - 1.0 / (4.0 * p.correlation_time**2)
    return RtsSolution(
        params=p,
        regime=regime(p),
        frequency=math.sqrt(abs(disc)),
        frequency_is_imaginary=disc < 0.0,
    )


def rts_solve_ode(p: RtsParams, t_end: float, dt: float) -> ChannelTrace:
    """Integrate c'' + c'/tau + 4 a^2 c = 0 with c(0) = 1, c'(0) = 0.

    Fixed-step 4th-order integration of the first-order system (c, c');
    agrees with :func:`rts_lambda` to the integrator's order and serves as an
    independent route to the closed form.
    """
    if dt <= 0.0:
        raise InputError("dt must be positive")
    if t_end < 0.0:
        raise InputError("t_end must be nonnegative")
    inv_tau = 1.0 / p.correlation_time
    four_a2 = 4.0 * p.amplitude**2

    c, cdot = 1.0, 0.0
    if t_end == 0.0:
        return ChannelTrace(np.zeros(1), ("lambda", "dlambda_dt"), np.array([[c, cdot]]))
    n = max(1, int(round(t_end / dt)))
    h = t_end / n
    out = np.empty((n + 1, 2))
    out[0] = (c, cdot)
    for k in range(n):
        # k_i = derivative of (c, cdot) at the staged points
        d1c, d1d = cdot, -inv_tau * cdot - four_a2 * c
        c2, cd2 = c + 0.5 * h * d1c, cdot + 0.5 * h * d1d
        d2c, d2d = cd2, -inv_tau * cd2 - four_a2 * c2
        c3, cd3 = c + 0.5 * h * d2c, cdot + 0.5 * h * d2d
        d3c, d3d = cd3, -inv_tau * cd3 - four_a2 * c3
        c4, cd4 = c + h * d3c, cdot + h * d3d
        d4c, d4d = cd4, -inv_tau * cd4 - four_a2 * c4
        c = c + (h / 6.0) * (d1c + 2.0 * d2c + 2.0 * d3c + d4c)
        cdot = cdot + (h / 6.0) * (d1d + 2.0 * d2d + 2.0 * d3d + d4d)
        out[k + 1] = (c, cdot)
    times = np.arange(n + 1) * h
    return ChannelTrace(times, ("lambda", "dlambda_dt"), out)


def white_noise_rate(p: RtsParams) -> float:
    """Effective decay rate gamma = 4 a^2 tau of the memoryless limit."""
    return 4.0 * p.amplitude**2 * p.correlation_time


def amplitude_for_rate(gamma: float, tau: float) -> float:
    """Telegraph amplitude reproducing decay rate gamma at correlation time tau."""
    if gamma <= 0.0 or tau <= 0.0:
        raise InputError("gamma and tau must be positive")
    return math.sqrt(gamma / (4.0 * tau))


def white_noise_limit(gamma: float, t):
    """Channel scalar e^(-gamma t) of the memoryless (tau -> 0) channel."""
    if gamma <= 0.0:
        raise InputError("gamma must be positive")
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr < 0.0):
        raise InputError("time must be nonnegative")
    out = np.exp(-gamma * t_arr)
    if np.isscalar(t) or t_arr.ndim == 0:
        return float(out)
    return out


def rts_map(p: RtsParams, t: float) -> tuple[AffineBlochMap, KrausSet]:
    """Channel diag(c(t), c(t), 1) with its two-operator Kraus form.

    The Kraus pair has weights (1 +/- c(t)) / 2, nonnegative because
    |c(t)| <= 1 for every parameter choice, so the channel is completely
    positive at all times even where c(t) is negative.
    """
    lam = rts_lambda(p, t)
    m = AffineBlochMap.unital(np.array([lam, lam, 1.0]))
    return m, unital_kraus(m.lam)
