"""Seeded trajectory generators for the two benchmark systems.

Random numbers come from ``numpy.random.default_rng(seed)`` (PCG64), drawn in
a fixed order so a seed always gives the same trajectory:

* oscillatory: ``v1, v2, v3, v4``, each ``standard_normal(n)``;
* Kuramoto: ``omega = uniform(lo, hi, n)`` then ``theta0 = uniform(0, 2*pi, n)``.
"""

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "OscillatoryConfig",
    "KuramotoConfig",
    "oscillatory_trajectory",
    "kuramoto_trajectory",
    "kuramoto_phases",
    "rk4_integrate",
]


def _n_samples(duration, fs):
    m = int(round(duration * fs))
    if m < 1:
        raise ValueError("duration * fs must be at least 1 sample interval")
    return m


@dataclass
class OscillatoryConfig:
    """Sum of scaled sinusoids at two frequencies.

    With ``form="independent"`` (default) the trajectory is
    ``v1 sin(2 pi f1 t) + v2 cos(2 pi f2 t) + v3 sin(2 pi f2 t) + v4 cos(2 pi f1 t)``,
    which contains both quadratures of each frequency and has rank 4.
    ``form="printed"`` reuses ``sin(2 pi f1 t)`` and ``cos(2 pi f2 t)`` for the
    last two terms, which collapses the trajectory to rank 2.
    """

    n: int = 100
    f1: float = 3.0
    f2: float = 7.0
    fs: float = 120.0
    duration: float = 10.0
    seed: int = 0
    form: str = "independent"

    def __post_init__(self):
        nyq = self.fs / 2.0
        if not (0 < self.f1 < nyq and 0 < self.f2 < nyq):
            raise ValueError(f"f1 and f2 must lie in (0, {nyq}) Hz")
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.form not in ("independent", "printed"):
            raise ValueError(f"unknown form {self.form!r}")


def oscillatory_trajectory(cfg):
    """``n x (m+1)`` samples at ``t_j = j / fs``, ``j = 0..m``, ``m = duration * fs``."""
    m = _n_samples(cfg.duration, cfg.fs)
    rng = np.random.default_rng(cfg.seed)
    v1, v2, v3, v4 = (rng.standard_normal(cfg.n) for _ in range(4))
    t = np.arange(m + 1) / cfg.fs
    w1 = 2 * np.pi * cfg.f1 * t
    w2 = 2 * np.pi * cfg.f2 * t
    if cfg.form == "independent":
        terms = (np.sin(w1), np.cos(w2), np.sin(w2), np.cos(w1))
    else:
        terms = (np.sin(w1), np.cos(w2), np.sin(w1), np.cos(w2))
    return (
        np.outer(v1, terms[0])
        + np.outer(v2, terms[1])
        + np.outer(v3, terms[2])
        + np.outer(v4, terms[3])
    )


def _full_adjacency(n):
    return np.ones((n, n)) - np.eye(n)


@dataclass
class KuramotoConfig:
    """Damped Kuramoto network ``(1 + gamma) dtheta_i/dt = omega_i + K sum_j A_ij sin(theta_j - theta_i)``.

    `adjacency` defaults to the fully connected graph. The coupling sum is
    not normalized by `n`. Frequencies are in rad/s.
    """

    n: int = 100
    coupling: float = 1.0
    damping: float = 0.9
    omega_range: tuple = (2.5, 3.0)
    fs: float = 120.0
    duration: float = 10.0
    seed: int = 0
    adjacency: np.ndarray = field(default=None, repr=False)
    substeps: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if not 0.0 <= self.damping <= 1.0:
            raise ValueError("damping must lie in [0, 1]")
        lo, hi = self.omega_range
        if lo > hi:
            raise ValueError("omega_range must satisfy lo <= hi")
        if self.substeps < 1:
            raise ValueError("substeps must be positive")
        if self.adjacency is None:
            self.adjacency = _full_adjacency(self.n)
        A = np.asarray(self.adjacency, dtype=float)
        if A.shape != (self.n, self.n):
            raise ValueError(f"adjacency must be {self.n}x{self.n}")
        if not np.isin(A, (0.0, 1.0)).all():
            raise ValueError("adjacency must be binary")
        if not np.array_equal(A, A.T) or np.any(np.diag(A)):
            raise ValueError("adjacency must be symmetric with zero diagonal")
        self.adjacency = A


def rk4_integrate(f, y0, h, steps, substeps=1):
    """Classical fourth-order Runge-Kutta; returns the ``steps + 1`` states at multiples of `h`.

    Each output interval is covered by `substeps` equal internal steps.
    """
    y = np.array(y0, dtype=float)
    out = np.empty((steps + 1,) + y.shape)
    out[0] = y
    dt = h / substeps
    for s in range(steps):
        for _ in range(substeps):
            k1 = f(y)
            k2 = f(y + 0.5 * dt * k1)
            k3 = f(y + 0.5 * dt * k2)
            k4 = f(y + dt * k3)
            y = y + (dt / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
        out[s + 1] = y
    return out


def kuramoto_phases(cfg, omega=None, theta0=None):
    """Phases ``theta_i(t_j)`` as an ``n x (m+1)`` matrix.

    `omega` and `theta0` override the seeded draws when given.
    """
    m = _n_samples(cfg.duration, cfg.fs)
    rng = np.random.default_rng(cfg.seed)
    lo, hi = cfg.omega_range
    drawn_omega = rng.uniform(lo, hi, cfg.n)
    drawn_theta0 = rng.uniform(0.0, 2 * np.pi, cfg.n)
    omega = drawn_omega if omega is None else np.asarray(omega, dtype=float)
    theta0 = drawn_theta0 if theta0 is None else np.asarray(theta0, dtype=float)
    A = cfg.adjacency
    K = cfg.coupling
    scale = 1.0 / (1.0 + cfg.damping)

    def rhs(theta):
        s = np.sin(theta)
        c = np.cos(theta)
        # sum_j A_ij sin(theta_j - theta_i) = cos_i (A sin)_i - sin_i (A cos)_i
        return scale * (omega + K * (c * (A @ s) - s * (A @ c)))

    return rk4_integrate(rhs, theta0, 1.0 / cfg.fs, m, cfg.substeps).T


def kuramoto_trajectory(cfg, omega=None, theta0=None):
    """Observable ``sin(theta_i(t_j))`` of the damped Kuramoto network."""
    return np.sin(kuramoto_phases(cfg, omega, theta0))
