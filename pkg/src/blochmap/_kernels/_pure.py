"""Pure-Python trajectory kernels.

Reference semantics for the compiled module in ``_speed.pyx``: both backends
draw from the same splitmix64 streams and apply floating-point operations in
the same order, so their outputs are bit-identical.  Any change here must be
mirrored there.
"""

import math

import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_INV53 = 1.0 / 9007199254740992.0  # 2^-53
_TWO_PI = 6.283185307179586


def _mix(x: int) -> int:
    x &= _MASK
    x ^= x >> 30
    x = (x * _MIX1) & _MASK
    x ^= x >> 27
    x = (x * _MIX2) & _MASK
    return x ^ (x >> 31)


def trajectory_seed(seed: int, index: int) -> int:
    """Deterministic per-trajectory stream state: seed XOR hash(index)."""
    return (seed ^ _mix(((index + 1) * _GOLDEN) & _MASK)) & _MASK


class Stream:
    """splitmix64 with uniform, exponential and cached Box-Muller normals."""

    __slots__ = ("state", "_spare", "_has_spare")

    def __init__(self, state: int):
        self.state = state & _MASK
        self._spare = 0.0
        self._has_spare = False

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK
        z = self.state
        z ^= z >> 30
        z = (z * _MIX1) & _MASK
        z ^= z >> 27
        z = (z * _MIX2) & _MASK
        return z ^ (z >> 31)

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * _INV53

    def exponential(self, mean: float) -> float:
        return -mean * math.log(1.0 - self.uniform())

    def normal(self) -> float:
        if self._has_spare:
            self._has_spare = False
            return self._spare
        u1 = 1.0 - self.uniform()
        u2 = self.uniform()
        r = math.sqrt(-2.0 * math.log(u1))
        t = _TWO_PI * u2
        self._spare = r * math.sin(t)
        self._has_spare = True
        return r * math.cos(t)


def telegraph_trajectory(a, tau, u0, v0, w0, dt, n_steps, seed, index):
    """One telegraph-noise realization sampled on the regular grid k * dt.

    Flip times are drawn event-driven (exponential waits, mean 2 tau) and the
    accumulated rotation angle 2 int z dt is evaluated exactly at each grid
    time, so the only error is statistical.
    """
    out = np.empty((n_steps + 1, 3))
    rng = Stream(trajectory_seed(seed, index))
    two_tau = 2.0 * tau
    z = a if rng.uniform() < 0.5 else -a
    theta = 0.0
    t_prev = 0.0
    next_flip = rng.exponential(two_tau)
    for k in range(n_steps + 1):
        tk = k * dt
        while next_flip < tk:
            theta += 2.0 * z * (next_flip - t_prev)
            t_prev = next_flip
            z = -z
            next_flip += rng.exponential(two_tau)
        theta += 2.0 * z * (tk - t_prev)
        t_prev = tk
        c = math.cos(theta)
        s = math.sin(theta)
        out[k, 0] = u0 * c - v0 * s
        out[k, 1] = u0 * s + v0 * c
        out[k, 2] = w0
    return out


def telegraph_ensemble(a, tau, u0, v0, w0, dt, n_steps, n_traj, seed):
    """Sum and sum-of-squares of telegraph trajectories, fixed traversal order."""
    n = n_steps + 1
    su = [0.0] * n
    sv = [0.0] * n
    sw = [0.0] * n
    qu = [0.0] * n
    qv = [0.0] * n
    qw = [0.0] * n
    two_tau = 2.0 * tau
    cos = math.cos
    sin = math.sin
    log = math.log
    for i in range(n_traj):
        rng = Stream(trajectory_seed(seed, i))
        z = a if rng.uniform() < 0.5 else -a
        theta = 0.0
        t_prev = 0.0
        next_flip = -two_tau * log(1.0 - rng.uniform())
        for k in range(n):
            tk = k * dt
            while next_flip < tk:
                theta += 2.0 * z * (next_flip - t_prev)
                t_prev = next_flip
                z = -z
                next_flip += -two_tau * log(1.0 - rng.uniform())
            theta += 2.0 * z * (tk - t_prev)
            t_prev = tk
            c = cos(theta)
            s = sin(theta)
            u = u0 * c - v0 * s
            v = u0 * s + v0 * c
            su[k] += u
            sv[k] += v
            sw[k] += w0
            qu[k] += u * u
            qv[k] += v * v
            qw[k] += w0 * w0
    total = np.column_stack([su, sv, sw])
    total_sq = np.column_stack([qu, qv, qw])
    return total, total_sq


def _rotate(u, v, w, px, py, pz):
    """Rotation of (u, v, w) by the angle vector (px, py, pz), Rodrigues form."""
    theta = math.sqrt(px * px + py * py + pz * pz)
    if theta == 0.0:
        return u, v, w
    inv = 1.0 / theta
    kx = px * inv
    ky = py * inv
    kz = pz * inv
    ct = math.cos(theta)
    st = math.sin(theta)
    omc = 1.0 - ct
    dot = kx * u + ky * v + kz * w
    cx = ky * w - kz * v
    cy = kz * u - kx * w
    cz = kx * v - ky * u
    return (
        u * ct + cx * st + kx * dot * omc,
        v * ct + cy * st + ky * dot * omc,
        w * ct + cz * st + kz * dot * omc,
    )


def gaussian_trajectory(ga, gb, gc, u0, v0, w0, dt, n_steps, seed, index):
    """One Gaussian-white-noise realization: exact rotation each step.

    Per-axis rotation angles are 2 W_k with W_k ~ N(0, Gamma_k dt / 2), the
    integrated noise amplitude over one step; the step applies the exact
    rotation generated by the sampled angles, preserving the trajectory norm.
    """
    out = np.empty((n_steps + 1, 3))
    rng = Stream(trajectory_seed(seed, index))
    sda = math.sqrt(0.5 * ga * dt)
    sdb = math.sqrt(0.5 * gb * dt)
    sdc = math.sqrt(0.5 * gc * dt)
    u, v, w = u0, v0, w0
    out[0] = (u, v, w)
    for k in range(1, n_steps + 1):
        px = 2.0 * (sda * rng.normal())
        py = 2.0 * (sdb * rng.normal())
        pz = 2.0 * (sdc * rng.normal())
        u, v, w = _rotate(u, v, w, px, py, pz)
        out[k, 0] = u
        out[k, 1] = v
        out[k, 2] = w
    return out


def gaussian_ensemble(ga, gb, gc, u0, v0, w0, dt, n_steps, n_traj, seed):
    """Sum and sum-of-squares of Gaussian-noise trajectories."""
    n = n_steps + 1
    su = [0.0] * n
    sv = [0.0] * n
    sw = [0.0] * n
    qu = [0.0] * n
    qv = [0.0] * n
    qw = [0.0] * n
    sda = math.sqrt(0.5 * ga * dt)
    sdb = math.sqrt(0.5 * gb * dt)
    sdc = math.sqrt(0.5 * gc * dt)
    for i in range(n_traj):
        rng = Stream(trajectory_seed(seed, i))
        u, v, w = u0, v0, w0
        su[0] += u
        sv[0] += v
        sw[0] += w
        qu[0] += u * u
        qv[0] += v * v
        qw[0] += w * w
        for k in range(1, n):
            px = 2.0 * (sda * rng.normal())
            py = 2.0 * (sdb * rng.normal())
            pz = 2.0 * (sdc * rng.normal())
            u, v, w = _rotate(u, v, w, px, py, pz)
            su[k] += u
            sv[k] += v
            sw[k] += w
            qu[k] += u * u
            qv[k] += v * v
            qw[k] += w * w
    total = np.column_stack([su, sv, sw])
    total_sq = np.column_stack([qu, qv, qw])
    return total, total_sq
