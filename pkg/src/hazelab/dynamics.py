"""Linearized training-dynamics simulator.

Models learning as the residual ODE r' = -eta(tau) * Theta0 * r with a
constant positive-semidefinite tangent matrix Theta0.  A warm start from a
model-based estimate shrinks the initial residual, which is the provable
sense in which the augmented learner outpaces a cold-start one.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError, UnstableStepError

SYMMETRY_TOL = 1e-12
EIGENVALUE_TOL = -1e-10


@dataclass
class DynamicsConfig:
    """Tangent matrix, learning-rate schedule, and integration grid."""

    theta0: np.ndarray
    eta: float
    horizon: float
    step: float
    schedule: str = "constant"
    eta_min: float = 0.0
    samples: int = 51

    @property
    def dimension(self):
        return self.theta0.shape[0]


@dataclass
class TrajectoryRecord:
    """Residual norms sampled along one integration run."""

    times: np.ndarray
    residual_norms: np.ndarray
    initial_residual: float

    def __post_init__(self):
        if len(self.times) != len(self.residual_norms):
            raise InvalidInputError("times and residual_norms lengths differ")


def _check_config(cfg):
    theta = np.asarray(cfg.theta0, dtype=np.float64)
    if theta.ndim != 2 or theta.shape[0] != theta.shape[1]:
        raise InvalidInputError(f"theta0 must be square, got shape {theta.shape}")
    if np.max(np.abs(theta - theta.T)) > SYMMETRY_TOL:
        raise InvalidInputError("theta0 must be symmetric")
    if np.min(np.linalg.eigvalsh(theta)) < EIGENVALUE_TOL:
        raise InvalidInputError("theta0 must be positive semidefinite")
    if cfg.eta <= 0:
        raise InvalidInputError(f"eta must be > 0, got {cfg.eta}")
    if cfg.step <= 0:
        raise InvalidInputError(f"step must be > 0, got {cfg.step}")
    if cfg.horizon <= 0:
        raise InvalidInputError(f"horizon must be > 0, got {cfg.horizon}")
    if cfg.schedule not in ("constant", "cosine"):
        raise InvalidInputError(f"unknown schedule {cfg.schedule!r}")
    if cfg.samples < 2:
        raise InvalidInputError("need at least two samples")
    return theta


def learning_rate(cfg, tau):
    """Schedule value at time tau (cosine anneals from eta to eta_min)."""
    if cfg.schedule == "constant":
        return cfg.eta
    return cfg.eta_min + 0.5 * (cfg.eta - cfg.eta_min) * (
        1.0 + np.cos(np.pi * tau / cfg.horizon)
    )


def closed_form_residual(cfg, r0, tau):
    """exp(-eta * Theta0 * tau) applied to r0, via symmetric eigendecomposition.

    Only valid for the constant schedule.
    """
    theta = _check_config(cfg)
    if cfg.schedule != "constant":
        raise InvalidInputError("closed form requires the constant schedule")
    r0 = np.asarray(r0, dtype=np.float64).reshape(-1)
    if r0.shape[0] != theta.shape[0]:
        raise InvalidInputError("r0 dimension does not match theta0")
    lam, q = np.linalg.eigh(theta)
    return q @ (np.exp(-cfg.eta * lam * tau) * (q.T @ r0))


def euler_trajectory(cfg, i0, target):
    """Explicit Euler integration of the residual ODE.

    Refuses step sizes that would amplify some eigenmode instead of damping
    it.  Residual norms are recorded at ``cfg.samples`` uniform times.
    """
    theta = _check_config(cfg)
    i0 = np.asarray(i0, dtype=np.float64).reshape(-1)
    target = np.asarray(target, dtype=np.float64).reshape(-1)
    if i0.shape != target.shape or i0.shape[0] != theta.shape[0]:
        raise InvalidInputError("state dimensions do not match theta0")

    lam = np.linalg.eigvalsh(theta)
    # max over the schedule is eta at tau = 0
    spectral = np.max(np.abs(1.0 - cfg.eta * cfg.step * lam))
    if spectral > 1.0:
        raise UnstableStepError(
            f"step {cfg.step} with eta {cfg.eta} amplifies the residual "
            f"(||I - eta*step*Theta0|| = {spectral:.6g} > 1)"
        )

    n_steps = max(1, int(round(cfg.horizon / cfg.step)))
    sample_idx = np.unique(np.round(np.linspace(0, n_steps, cfg.samples)).astype(int))
    sample_set = set(int(k) for k in sample_idx)

    r = i0 - target
    norms = []
    times = []
    for k in range(n_steps + 1):
        tau = k * cfg.step
        if k in sample_set:
            times.append(tau)
            norms.append(float(np.linalg.norm(r)))
        if k < n_steps:
            r = r - cfg.step * learning_rate(cfg, tau) * (theta @ r)

    return TrajectoryRecord(
        times=np.array(times),
        residual_norms=np.array(norms),
        initial_residual=float(np.linalg.norm(i0 - target)),
    )


def compare_augmented_vs_datadriven(cfg, i_model, target):
    """Warm start (state i_model) versus cold start (state 0), same dynamics."""
    augmented = euler_trajectory(cfg, i_model, target)
    datadriven = euler_trajectory(cfg, np.zeros_like(np.asarray(target)), target)
    return augmented, datadriven


def theta_identity(n):
    return np.eye(n)


def theta_random_psd(n, seed, scale=1.0):
    """G^T G / n for a seeded standard-normal G; eigenvalues are O(1)."""
    g = np.random.default_rng(seed).standard_normal((n, n))
    return scale * (g.T @ g) / n


def theta_diagonal(values):
    values = np.asarray(values, dtype=np.float64)
    if np.any(values < 0):
        raise InvalidInputError("diagonal spectrum must be non-negative")
    return np.diag(values)


def write_trajectories_csv(path, augmented, datadriven):
    """Two-trajectory table: tau, residual_norm_augmented, residual_norm_datadriven."""
    if not np.array_equal(augmented.times, datadriven.times):
        raise InvalidInputError("trajectories were sampled at different times")
    lines = ["tau,residual_norm_augmented,residual_norm_datadriven"]
    for t, ra, rd in zip(augmented.times, augmented.residual_norms,
                         datadriven.residual_norms):
        lines.append(f"{t:.12g},{ra:.12g},{rd:.12g}")
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write("\n".join(lines) + "\n")
