"""Time-domain form of the adiabatically reduced atomic equations.

After the cavity modes are slaved to the atom, the five atomic expectation
values (three lowering operators, two populations) obey a closed linear
system driven by the effective rate epsilon.  This module integrates that
system and solves it algebraically, giving two independent checks on the
closed-form steady state in params.py.

The equations couple sigma_a to the conjugate of sigma_b, so the real
formulation adjoins conjugates: state vector
(Re sa, Im sa, Re sb, Im sb, Re sc, Im sc, eta_a, eta_b), dimension 8.
eta_c is eliminated by the population sum rule.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .params import AtomicSteadyState, SystemParams

__all__ = [
    "BlochState",
    "Trajectory",
    "ConvergenceError",
    "bloch_rhs",
    "integrate_to_steady",
    "steady_state_by_linear_solve",
    "trajectory_csv",
]

CSV_HEADER = ("time,sigma_a_re,sigma_a_im,sigma_b_re,sigma_b_im,"
              "sigma_c_re,sigma_c_im,eta_a,eta_b")


@dataclass(frozen=True)
class BlochState:
    """Atomic expectation values at one instant.

    The default instance is the physical preparation: atom in the bottom
    level, so all five dynamical components vanish and eta_c = 1.
    """

    sigma_a: complex = 0j
    sigma_b: complex = 0j
    sigma_c: complex = 0j
    eta_a: float = 0.0
    eta_b: float = 0.0
    time: float = 0.0


@dataclass(frozen=True)
class Trajectory:
    samples: tuple[tuple[float, BlochState], ...]
    step: float
    converged: bool
    residual: float  # max-norm of the right-hand side at the last sample


class ConvergenceError(RuntimeError):
    """Raised when the time horizon is reached before the residual drops."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


def bloch_rhs(state: BlochState, params: SystemParams) -> BlochState:
    """Time derivatives of the five atomic expectation values.

    The returned object reuses the state container; its time field is set
    to zero and carries no meaning.  eta_c enters through the sum rule.
    """
    G = params.gamma_c + params.gamma
    eps = params.epsilon
    eta_c = 1.0 - state.eta_a - state.eta_b
    return BlochState(
        sigma_a=-1.5 * G * state.sigma_a + eps * np.conj(state.sigma_b),
        sigma_b=-0.5 * G * state.sigma_b - eps * np.conj(state.sigma_a),
        sigma_c=-G * state.sigma_c + eps * (eta_c - state.eta_a),
        eta_a=-2.0 * G * state.eta_a + 2.0 * eps * state.sigma_c.real,
        eta_b=-G * state.eta_b + G * state.eta_a,
        time=0.0,
    )


def _to_vec(s: BlochState) -> np.ndarray:
    return np.array([s.sigma_a.real, s.sigma_a.imag,
                     s.sigma_b.real, s.sigma_b.imag,
                     s.sigma_c.real, s.sigma_c.imag,
                     s.eta_a, s.eta_b])


def _from_vec(x: np.ndarray, t: float) -> BlochState:
    return BlochState(sigma_a=complex(x[0], x[1]),
                      sigma_b=complex(x[2], x[3]),
                      sigma_c=complex(x[4], x[5]),
                      eta_a=float(x[6]), eta_b=float(x[7]), time=t)


def _real_system(params: SystemParams) -> tuple[np.ndarray, np.ndarray]:
    """Affine form x' = M x + v of bloch_rhs, built column by column.

    Evaluating the rhs on unit states keeps the matrix consistent with
    bloch_rhs by construction rather than by transcription.
    """
    if not params.gamma_c + params.gamma > 0:
        raise ValueError("gamma_c + gamma must be positive, got "
                         f"{params.gamma_c + params.gamma}")
    v = _to_vec(bloch_rhs(BlochState(), params))
    M = np.empty((8, 8))
    for i in range(8):
        e = np.zeros(8)
        e[i] = 1.0
        M[:, i] = _to_vec(bloch_rhs(_from_vec(e, 0.0), params)) - v
    return M, v


def steady_state_by_linear_solve(params: SystemParams) -> AtomicSteadyState:
    """Steady state from zeroing the rhs, independent of the closed forms."""
    M, v = _real_system(params)
    x = np.linalg.solve(M, -v)
    return AtomicSteadyState(sigma_a=float(x[0]), sigma_b=float(x[2]),
                             sigma_c=float(x[4]),
                             eta_a=float(x[6]), eta_b=float(x[7]),
                             eta_c=float(1.0 - x[6] - x[7]))


def integrate_to_steady(params: SystemParams,
                        initial: BlochState | None = None,
                        tolerance: float = 1e-10) -> Trajectory:
    """Classical fourth-order integration until the rhs max-norm is small.

    Fixed step 0.05/max(gamma_c+gamma, epsilon); hard horizon at elapsed
    time 1e3/(gamma_c+gamma), reported as ConvergenceError rather than a
    silently truncated trajectory.
    """
    if not tolerance > 0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")
    if initial is None:
        initial = BlochState()
    M, v = _real_system(params)
    G = params.gamma_c + params.gamma
    h = 0.05 / max(G, params.epsilon)
    # On a linear system the classical Runge-Kutta step collapses to a
    # degree-4 polynomial map x + h*P*(M x + v); precomputing P makes the
    # loop two small matvecs per step and changes nothing numerically.
    P = np.eye(8) + (h / 2.0) * (
        M @ (np.eye(8) + (h / 3.0) * (M @ (np.eye(8) + (h / 4.0) * M))))
    nsteps = int(np.ceil(1e3 / G / h))
    stride = max(1, int(round(10.0 * max(G, params.epsilon) / G)))

    x = _to_vec(initial)
    t0 = initial.time
    samples = [(t0, initial)]
    converged = False
    residual = np.inf
    for n in range(nsteps + 1):
        t = t0 + n * h
        r = M @ x + v
        residual = float(np.max(np.abs(r)))
        if n > 0 and n % stride == 0:
            samples.append((t, _from_vec(x, t)))
        if residual <= tolerance:
            if n > 0 and n % stride != 0:
                samples.append((t, _from_vec(x, t)))
            converged = True
            break
        x = x + h * (P @ r)
    if not converged:
        raise ConvergenceError(
            "steady state not reached within horizon "
            f"{1e3 / G:.6g}: residual {residual:.3e} > {tolerance:.3e}",
            residual)
    return Trajectory(samples=tuple(samples), step=h,
                      converged=converged, residual=residual)


def trajectory_csv(trajectory: Trajectory) -> str:
    """Render a trajectory as comma-separated values, full precision."""
    lines = [CSV_HEADER]
    for t, s in trajectory.samples:
        lines.append(",".join(repr(float(f)) for f in (
            t, s.sigma_a.real, s.sigma_a.imag, s.sigma_b.real,
            s.sigma_b.imag, s.sigma_c.real, s.sigma_c.imag,
            s.eta_a, s.eta_b)))
    return "\n".join(lines) + "\n"
