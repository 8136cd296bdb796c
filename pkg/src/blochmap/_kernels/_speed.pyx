# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled trajectory kernels.

Mirrors ``_pure`` statement by statement: same splitmix64 streams, same
evaluation order, same libm calls, so outputs are bit-identical to the
pure-Python backend (the extension is compiled with -ffp-contract=off to
keep it that way).
"""

from libc.math cimport cos, log, sin, sqrt

import numpy as np

ctypedef unsigned long long u64

cdef u64 GOLDEN = <u64> 0x9E3779B97F4A7C15
cdef u64 MIX1 = <u64> 0xBF58476D1CE4E5B9
cdef u64 MIX2 = <u64> 0x94D049BB133111EB
cdef double INV53 = 1.0 / 9007199254740992.0
cdef double TWO_PI = 6.283185307179586


cdef inline u64 _mix(u64 x) noexcept nogil:
    x ^= x >> 30
    x = x * MIX1
    x ^= x >> 27
    x = x * MIX2
    return x ^ (x >> 31)


cdef struct Rng:
    u64 state
    double spare
    bint has_spare


cdef inline void _init_rng(Rng* r, u64 seed, u64 index) noexcept nogil:
    r.state = seed ^ _mix((index + 1) * GOLDEN)
    r.spare = 0.0
    r.has_spare = False


cdef inline u64 _next_u64(Rng* r) noexcept nogil:
    r.state = r.state + GOLDEN
    cdef u64 z = r.state
    z ^= z >> 30
    z = z * MIX1
    z ^= z >> 27
    z = z * MIX2
    return z ^ (z >> 31)


cdef inline double _uniform(Rng* r) noexcept nogil:
    return <double> (_next_u64(r) >> 11) * INV53


cdef inline double _exponential(Rng* r, double mean) noexcept nogil:
    return -mean * log(1.0 - _uniform(r))


cdef inline double _normal(Rng* r) noexcept nogil:
    cdef double u1, u2, rad, t
    if r.has_spare:
        r.has_spare = False
        return r.spare
    u1 = 1.0 - _uniform(r)
    u2 = _uniform(r)
    rad = sqrt(-2.0 * log(u1))
    t = TWO_PI * u2
    r.spare = rad * sin(t)
    r.has_spare = True
    return rad * cos(t)


def trajectory_seed(seed, index):
    """Deterministic per-trajectory stream state: seed XOR hash(index)."""
    cdef u64 s = <u64> seed
    cdef u64 i = <u64> index
    return s ^ _mix((i + 1) * GOLDEN)


def telegraph_trajectory(double a, double tau, double u0, double v0, double w0,
                         double dt, long n_steps, seed, long index):
    """One telegraph-noise realization sampled on the regular grid k * dt."""
    out_arr = np.empty((n_steps + 1, 3))
    cdef double[:, ::1] out = out_arr
    cdef Rng rng
    _init_rng(&rng, <u64> seed, <u64> index)
    cdef double two_tau = 2.0 * tau
    cdef double z = a if _uniform(&rng) < 0.5 else -a
    cdef double theta = 0.0
    cdef double t_prev = 0.0
    cdef double next_flip = _exponential(&rng, two_tau)
    cdef double tk, c, s
    cdef long k
    for k in range(n_steps + 1):
        tk = k * dt
        while next_flip < tk:
            theta += 2.0 * z * (next_flip - t_prev)
            t_prev = next_flip
            z = -z
            next_flip += _exponential(&rng, two_tau)
        theta += 2.0 * z * (tk - t_prev)
        t_prev = tk
        c = cos(theta)
        s = sin(theta)
        out[k, 0] = u0 * c - v0 * s
        out[k, 1] = u0 * s + v0 * c
        out[k, 2] = w0
    return out_arr


def telegraph_ensemble(double a, double tau, double u0, double v0, double w0,
                       double dt, long n_steps, long n_traj, seed):
    """Sum and sum-of-squares of telegraph trajectories, fixed traversal order."""
    cdef long n = n_steps + 1
    total_arr = np.zeros((n, 3))
    total_sq_arr = np.zeros((n, 3))
    cdef double[:, ::1] total = total_arr
    cdef double[:, ::1] total_sq = total_sq_arr
    cdef u64 base = <u64> seed
    cdef double two_tau = 2.0 * tau
    cdef Rng rng
    cdef double z, theta, t_prev, next_flip, tk, c, s, u, v
    cdef long i, k
    for i in range(n_traj):
        _init_rng(&rng, base, <u64> i)
        z = a if _uniform(&rng) < 0.5 else -a
        theta = 0.0
        t_prev = 0.0
        next_flip = -two_tau * log(1.0 - _uniform(&rng))
        for k in range(n):
            tk = k * dt
            while next_flip < tk:
                theta += 2.0 * z * (next_flip - t_prev)
                t_prev = next_flip
                z = -z
                next_flip += -two_tau * log(1.0 - _uniform(&rng))
            theta += 2.0 * z * (tk - t_prev)
            t_prev = tk
            c = cos(theta)
            s = sin(theta)
            u = u0 * c - v0 * s
            v = u0 * s + v0 * c
            total[k, 0] += u
            total[k, 1] += v
            total[k, 2] += w0
            total_sq[k, 0] += u * u
            total_sq[k, 1] += v * v
            total_sq[k, 2] += w0 * w0
    return total_arr, total_sq_arr


cdef inline void _rotate(double* u, double* v, double* w,
                         double px, double py, double pz) noexcept nogil:
    cdef double theta = sqrt(px * px + py * py + pz * pz)
    if theta == 0.0:
        return
    cdef double inv = 1.0 / theta
    cdef double kx = px * inv
    cdef double ky = py * inv
    cdef double kz = pz * inv
    cdef double ct = cos(theta)
    cdef double st = sin(theta)
    cdef double omc = 1.0 - ct
    cdef double dot = kx * u[0] + ky * v[0] + kz * w[0]
    cdef double cx = ky * w[0] - kz * v[0]
    cdef double cy = kz * u[0] - kx * w[0]
    cdef double cz = kx * v[0] - ky * u[0]
    cdef double nu = u[0] * ct + cx * st + kx * dot * omc
    cdef double nv = v[0] * ct + cy * st + ky * dot * omc
    cdef double nw = w[0] * ct + cz * st + kz * dot * omc
    u[0] = nu
    v[0] = nv
    w[0] = nw


def gaussian_trajectory(double ga, double gb, double gc,
                        double u0, double v0, double w0,
                        double dt, long n_steps, seed, long index):
    """One Gaussian-white-noise realization: exact rotation each step."""
    out_arr = np.empty((n_steps + 1, 3))
    cdef double[:, ::1] out = out_arr
    cdef Rng rng
    _init_rng(&rng, <u64> seed, <u64> index)
    cdef double sda = sqrt(0.5 * ga * dt)
    cdef double sdb = sqrt(0.5 * gb * dt)
    cdef double sdc = sqrt(0.5 * gc * dt)
    cdef double u = u0
    cdef double v = v0
    cdef double w = w0
    cdef double px, py, pz
    cdef long k
    out[0, 0] = u
    out[0, 1] = v
    out[0, 2] = w
    for k in range(1, n_steps + 1):
        px = 2.0 * (sda * _normal(&rng))
        py = 2.0 * (sdb * _normal(&rng))
        pz = 2.0 * (sdc * _normal(&rng))
        _rotate(&u, &v, &w, px, py, pz)
        out[k, 0] = u
        out[k, 1] = v
        out[k, 2] = w
    return out_arr


def gaussian_ensemble(double ga, double gb, double gc,
                      double u0, double v0, double w0,
                      double dt, long n_steps, long n_traj, seed):
    """Sum and sum-of-squares of Gaussian-noise trajectories."""
    cdef long n = n_steps + 1
    total_arr = np.zeros((n, 3))
    total_sq_arr = np.zeros((n, 3))
    cdef double[:, ::1] total = total_arr
    cdef double[:, ::1] total_sq = total_sq_arr
    cdef u64 base = <u64> seed
    cdef double sda = sqrt(0.5 * ga * dt)
    cdef double sdb = sqrt(0.5 * gb * dt)
    cdef double sdc = sqrt(0.5 * gc * dt)
    cdef Rng rng
    cdef double u, v, w, px, py, pz
    cdef long i, k
    for i in range(n_traj):
        _init_rng(&rng, base, <u64> i)
        u = u0
        v = v0
        w = w0
        total[0, 0] += u
        total[0, 1] += v
        total[0, 2] += w
        total_sq[0, 0] += u * u
        total_sq[0, 1] += v * v
        total_sq[0, 2] += w * w
        for k in range(1, n):
            px = 2.0 * (sda * _normal(&rng))
            py = 2.0 * (sdb * _normal(&rng))
            pz = 2.0 * (sdc * _normal(&rng))
            _rotate(&u, &v, &w, px, py, pz)
            total[k, 0] += u
            total[k, 1] += v
            total[k, 2] += w
            total_sq[k, 0] += u * u
            total_sq[k, 1] += v * v
            total_sq[k, 2] += w * w
    return total_arr, total_sq_arr
