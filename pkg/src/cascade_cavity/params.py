"""Rate parameters and the closed-form atomic steady state.

The physical inputs are four rates: the atom-field coupling g, the cavity
damping kappa, the coherent drive amplitude eta, and the spontaneous
emission rate gamma.  Two derived rates appear everywhere downstream: the
stimulated emission decay constant gamma_c = 4 g^2 / kappa and the
effective drive epsilon = 2 g eta / kappa.  All rates share one arbitrary
inverse-time unit; nothing here carries physical dimensions.

Two constructors normalize to the same SystemParams: derive_params takes
the physical rates, params_from_plot_set takes the (gamma_c, kappa, gamma,
epsilon) set that sweep curves are keyed to and inverts it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "SystemParams",
    "AtomicSteadyState",
    "derive_params",
    "params_from_plot_set",
    "atomic_steady_state",
]


@dataclass(frozen=True)
class SystemParams:
    """Validated rate set; construct via derive_params or params_from_plot_set."""

    g: float        # atom-field coupling rate
    kappa: float    # cavity damping rate
    eta: float      # drive amplitude
    gamma: float    # spontaneous emission rate
    gamma_c: float  # stimulated emission decay constant, 4 g^2 / kappa
    epsilon: float  # effective drive, 2 g eta / kappa


@dataclass(frozen=True)
class AtomicSteadyState:
    """Steady-state expectation values of the atomic operators.

    sigma_a, sigma_b, sigma_c are the lowering-operator expectations (real
    at steady state; the first two vanish identically), eta_a, eta_b, eta_c
    the level populations ordered top to bottom.
    """

    sigma_a: float
    sigma_b: float
    sigma_c: float
    eta_a: float
    eta_b: float
    eta_c: float


def derive_params(g: float, kappa: float, eta: float, gamma: float) -> SystemParams:
    """Build SystemParams from the physical rates.

    Parameters
    ----------
    g, kappa, eta, gamma : float
        Coupling, cavity damping, drive amplitude, spontaneous emission.
        kappa and g must be positive; eta and gamma nonnegative.
    """
    if not kappa > 0:
        raise ValueError(f"kappa must be positive, got {kappa}")
    if not g > 0:
        raise ValueError(f"g must be positive, got {g}")
    if eta < 0:
        raise ValueError(f"eta must be nonnegative, got {eta}")
    if gamma < 0:
        raise ValueError(f"gamma must be nonnegative, got {gamma}")
    return SystemParams(
        g=g,
        kappa=kappa,
        eta=eta,
        gamma=gamma,
        gamma_c=4.0 * g * g / kappa,
        epsilon=2.0 * g * eta / kappa,
    )


def params_from_plot_set(gamma_c: float, kappa: float, gamma: float,
                         epsilon: float) -> SystemParams:
    """Invert (gamma_c, kappa, gamma, epsilon) to physical rates.

    g = sqrt(gamma_c kappa)/2 and eta = epsilon kappa/(2 g); the result
    round-trips through derive_params to the given gamma_c and epsilon
    within 1e-12.
    """
    if not gamma_c > 0:
        raise ValueError(f"gamma_c must be positive, got {gamma_c}")
    if not kappa > 0:
        raise ValueError(f"kappa must be positive, got {kappa}")
    if epsilon < 0:
        raise ValueError(f"epsilon must be nonnegative, got {epsilon}")
    g = math.sqrt(gamma_c * kappa) / 2.0
    eta = epsilon * kappa / (2.0 * g)
    return derive_params(g, kappa, eta, gamma)


def atomic_steady_state(params: SystemParams) -> AtomicSteadyState:
    """Closed-form steady state of the reduced atomic equations.

    With G = gamma_c + gamma and D = G^2 + 3 epsilon^2:
    sigma_c = epsilon G / D, eta_a = eta_b = epsilon^2 / D,
    eta_c = (epsilon^2 + G^2) / D, and sigma_a = sigma_b = 0.
    """
    G = params.gamma_c + params.gamma
    eps = params.epsilon
    D = G * G + 3.0 * eps * eps
    eta_a = eps * eps / D
    return AtomicSteadyState(
        sigma_a=0.0,
        sigma_b=0.0,
        sigma_c=eps * G / D,
        eta_a=eta_a,
        eta_b=eta_a,
        eta_c=(eps * eps + G * G) / D,
    )
