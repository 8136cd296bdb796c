"""Monte Carlo trajectory engine validating the analytic channels.

Each noise realization drives the qubit with a stochastic Hamiltonian
(telegraph z-noise or independent Gaussian white noise on all three axes),
so a single trajectory is a sequence of exact Bloch-sphere rotations and the
ensemble mean contracts toward the analytic channel.  Trajectories are
seeded counter-style (seed XOR hash(index)), making ensembles deterministic
and order-independent to parallelize.
"""

import math
from dataclasses import dataclass
from typing import Iterator, Union

import numpy as np

from ._kernels import BACKEND_NAME, backend
from ._kernels._pure import Stream, trajectory_seed
from .errors import InputError
from .trace import ChannelTrace


@dataclass(frozen=True)
class TelegraphNoise:
    """Two-state noise z(t) = +/- amplitude with Poisson flips (mean t / 2 tau)."""

    amplitude: float
    correlation_time: float
    seed: int = 0

    def __post_init__(self):
        if self.amplitude < 0.0:
            raise InputError("amplitude must be nonnegative")
        if self.correlation_time <= 0.0:
            raise InputError("correlation time must be positive")


@dataclass(frozen=True)
class GaussianWhiteNoise:
    """Independent white noises of strengths (Gamma_a, Gamma_b, Gamma_c)."""

    gammas: np.ndarray
    seed: int = 0

    def __post_init__(self):
        g = np.asarray(self.gammas, dtype=float)
        if g.shape != (3,) or np.any(g < 0.0):
            raise InputError("gammas must be three nonnegative noise strengths")
        object.__setattr__(self, "gammas", g)


NoiseSpec = Union[TelegraphNoise, GaussianWhiteNoise]


@dataclass(frozen=True)
class EnsembleResult:
    """Mean Bloch vector over trajectories with per-component standard errors."""

    times: np.ndarray
    mean: np.ndarray  # (n, 3)
    stderr: np.ndarray  # (n, 3)
    n_traj: int


def _grid(t_end: float, dt: float) -> tuple[int, float]:
    if dt <= 0.0:
        raise InputError("dt must be positive")
    if t_end < 0.0:
        raise InputError("t_end must be nonnegative")
    if t_end == 0.0:
        return 0, dt
    n = max(1, int(round(t_end / dt)))
    return n, t_end / n


def simulate_trajectory(spec: NoiseSpec, b0, t_end: float, dt: float,
                        index: int = 0) -> ChannelTrace:
    """One noise realization on a regular grid; rotations preserve the norm."""
    b0 = np.asarray(b0, dtype=float)
    n, h = _grid(t_end, dt)
    if isinstance(spec, TelegraphNoise):
        values = backend.telegraph_trajectory(
            spec.amplitude, spec.correlation_time, b0[0], b0[1], b0[2],
            h, n, spec.seed & (2**64 - 1), index,
        )
    elif isinstance(spec, GaussianWhiteNoise):
        ga, gb, gc = spec.gammas
        values = backend.gaussian_trajectory(
            ga, gb, gc, b0[0], b0[1], b0[2], h, n, spec.seed & (2**64 - 1), index,
        )
    else:
        raise InputError(f"unknown noise spec {type(spec).__name__}")
    return ChannelTrace(np.arange(n + 1) * h, ("u", "v", "w"), values)


def ensemble_average(spec: NoiseSpec, b0, t_end: float, dt: float,
                     n_traj: int) -> EnsembleResult:
    """Mean over independently seeded trajectories; deterministic per seed."""
    if n_traj < 100:
        raise InputError("ensemble averages need at least 100 trajectories")
    b0 = np.asarray(b0, dtype=float)
    n, h = _grid(t_end, dt)
    seed = spec.seed & (2**64 - 1)
    if isinstance(spec, TelegraphNoise):
        total, total_sq = backend.telegraph_ensemble(
            spec.amplitude, spec.correlation_time, b0[0], b0[1], b0[2],
            h, n, n_traj, seed,
        )
    elif isinstance(spec, GaussianWhiteNoise):
        ga, gb, gc = spec.gammas
        total, total_sq = backend.gaussian_ensemble(
            ga, gb, gc, b0[0], b0[1], b0[2], h, n, n_traj, seed,
        )
    else:
        raise InputError(f"unknown noise spec {type(spec).__name__}")
    mean = total / n_traj
    # Unbiased sample variance of the mean from the accumulated moments.
    var = (total_sq - n_traj * mean * mean) / (n_traj - 1)
    stderr = np.sqrt(np.clip(var, 0.0, None) / n_traj)
    return EnsembleResult(
        times=np.arange(n + 1) * h, mean=mean, stderr=stderr, n_traj=n_traj
    )


def analytic_mean(spec: NoiseSpec, b0, times) -> np.ndarray:
    """Closed-form ensemble mean the Monte Carlo engine is validated against."""
    b0 = np.asarray(b0, dtype=float)
    times = np.asarray(times, dtype=float)
    out = np.empty((times.size, 3))
    if isinstance(spec, TelegraphNoise):
        from .nonmarkov import RtsParams, rts_lambda

        lam = rts_lambda(
            RtsParams(spec.amplitude, spec.correlation_time), times
        )
        out[:, 0] = lam * b0[0]
        out[:, 1] = lam * b0[1]
        out[:, 2] = b0[2]
    elif isinstance(spec, GaussianWhiteNoise):
        ga, gb, gc = spec.gammas
        out[:, 0] = np.exp(-(gb + gc) * times) * b0[0]
        out[:, 1] = np.exp(-(ga + gc) * times) * b0[1]
        out[:, 2] = np.exp(-(ga + gb) * times) * b0[2]
    else:
        raise InputError(f"unknown noise spec {type(spec).__name__}")
    return out


def telegraph_sampler(a: float, tau: float, seed: int) -> Iterator[tuple[float, float]]:
    """Stream of (event time, signal value after the event) for one realization.

    The first item is (0.0, initial value); subsequent items are the flip
    times with the new value.  Uses the same random stream as trajectory
    index 0 of the kernels, so the yielded events reproduce the simulated
    paths exactly.
    """
    if a <= 0.0 or tau <= 0.0:
        raise InputError("amplitude and correlation time must be positive")
    rng = Stream(trajectory_seed(seed & (2**64 - 1), 0))
    two_tau = 2.0 * tau
    z = a if rng.uniform() < 0.5 else -a
    yield (0.0, z)
    t = rng.exponential(two_tau)
    while True:
        z = -z
        yield (t, z)
        t += rng.exponential(two_tau)


def telegraph_signal_at(a: float, tau: float, seed: int, times) -> np.ndarray:
    """Sample one telegraph realization at ascending times (for statistics)."""
    times = np.asarray(times, dtype=float)
    if np.any(np.diff(times) < 0.0):
        raise InputError("times must be ascending")
    out = np.empty(times.size)
    events = telegraph_sampler(a, tau, seed)
    _, z = next(events)
    t_next, z_next = next(events)
    for k, t in enumerate(times):
        while t_next <= t:
            z = z_next
            t_next, z_next = next(events)
        out[k] = z
    return out


__all__ = [
    "BACKEND_NAME",
    "EnsembleResult",
    "GaussianWhiteNoise",
    "NoiseSpec",
    "TelegraphNoise",
    "analytic_mean",
    "ensemble_average",
    "simulate_trajectory",
    "telegraph_sampler",
    "telegraph_signal_at",
]
