"""Steady-state photon statistics and quadrature squeezing of the driven mode.

All quantities are closed forms in (gamma_c, kappa, gamma, epsilon).  The
variance convention is the normally-ordered one used throughout this
package: vacuum noise enters only through the effective atomic decay, so
the vacuum quadrature variance is gamma_c/kappa rather than unity.
Squeezing fractions are reported in [0, 1] relative to that vacuum level;
any percentage formatting is presentation-only.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .params import SystemParams, atomic_steady_state

__all__ = [
    "PhotonReport",
    "QuadratureReport",
    "FieldMoments",
    "mean_photon_number",
    "quadrature_report",
    "field_moments",
    "variances_from_moments",
]


@dataclass(frozen=True)
class PhotonReport:
    """Mean photon number and its three physical contributions.

    n_bar = drive_term - absorbed_term + emitted_term: the coherent drive
    feeds the mode, the atom absorbs from it, stimulated emission into the
    mode returns part of that.
    """

    n_bar: float
    drive_term: float     # 4 eta^2 / kappa^2
    absorbed_term: float  # (8 eta g / kappa^2) <sigma_c>
    emitted_term: float   # (gamma_c / kappa) <eta_a>


@dataclass(frozen=True)
class QuadratureReport:
    var_plus: float      # (delta b_+)^2
    var_minus: float     # (delta b_-)^2
    vacuum_level: float  # gamma_c / kappa
    f_lower: float       # uncertainty lower bound f_a
    f_product: float     # actual uncertainty product f_b = delta b_+ delta b_-
    s_plus: float        # 1 - var_plus / vacuum_level
    s_minus: float       # 1 - var_minus / vacuum_level


class FieldMoments(NamedTuple):
    mean_b: float
    mean_b_squared: float
    n_bar: float


def _check_gamma_c(params: SystemParams) -> None:
    if not params.gamma_c > 0:
        raise ValueError("gamma_c must be positive for the closed-form "
                         f"photon statistics, got {params.gamma_c}")


def mean_photon_number(params: SystemParams) -> PhotonReport:
    """Mean photon number of the driven mode at steady state.

    n_bar = 4 eps^2/(kappa gamma_c) - (eps^2/kappa)(3 gamma_c + 4 gamma)/D
    with D = (gamma_c + gamma)^2 + 3 eps^2.
    """
    _check_gamma_c(params)
    gc, ka, ga, eps = params.gamma_c, params.kappa, params.gamma, params.epsilon
    G = gc + ga
    D = G * G + 3.0 * eps * eps
    n_bar = 4.0 * eps * eps / (ka * gc) - (eps * eps / ka) * (3.0 * gc + 4.0 * ga) / D
    ss = atomic_steady_state(params)
    return PhotonReport(
        n_bar=n_bar,
        drive_term=4.0 * params.eta ** 2 / ka ** 2,
        absorbed_term=(8.0 * params.eta * params.g / ka ** 2) * ss.sigma_c,
        emitted_term=(gc / ka) * ss.eta_a,
    )


def quadrature_report(params: SystemParams) -> QuadratureReport:
    """Quadrature variances, uncertainty bounds, and squeezing fractions."""
    _check_gamma_c(params)
    gc, ka, ga, eps = params.gamma_c, params.kappa, params.gamma, params.epsilon
    G = gc + ga
    G2 = G * G
    e2 = eps * eps
    D = G2 + 3.0 * e2
    vacuum = gc / ka
    # ratios to the vacuum level; the squeezing fractions are 1 minus these
    ratio_plus = (6.0 * e2 * e2 + G2 * (G2 + e2)) / (D * D)
    ratio_minus = (2.0 * e2 + G2) / D
    f_product = vacuum * math.sqrt(
        (6.0 * e2 * e2 + G2 * (G2 + e2)) * (G2 + 2.0 * e2) / D ** 3)
    return QuadratureReport(
        var_plus=vacuum * ratio_plus,
        var_minus=vacuum * ratio_minus,
        vacuum_level=vacuum,
        f_lower=vacuum * G2 / D,
        f_product=f_product,
        s_plus=1.0 - ratio_plus,
        s_minus=1.0 - ratio_minus,
    )


def field_moments(params: SystemParams) -> FieldMoments:
    """Steady-state <b>, <b^2>, and <b† b>; all real at steady state."""
    _check_gamma_c(params)
    gc, ka, eps = params.gamma_c, params.kappa, params.epsilon
    ss = atomic_steady_state(params)
    mean_b = 2.0 * params.eta / ka - (2.0 * params.g / ka) * ss.sigma_c
    mean_b_squared = 4.0 * eps * eps / (ka * gc) - (4.0 * eps / ka) * ss.sigma_c
    return FieldMoments(mean_b, mean_b_squared, mean_photon_number(params).n_bar)


def variances_from_moments(params: SystemParams) -> tuple[float, float]:
    """Recombine the raw field moments into the quadrature variances.

    Independent evaluation path used to cross-check quadrature_report: the
    variances are assembled from <b>, <b^2>, <b† b>, and <b b†>, where the
    last is <b^2>'s expression plus (gamma_c/kappa) eta_c under this
    package's normal-ordering convention.  Returns (var_plus, var_minus).
    """
    _check_gamma_c(params)
    gc, ka = params.gamma_c, params.kappa
    ss = atomic_steady_state(params)
    mean_b, b_sq, n_bar = field_moments(params)
    b_bdag = b_sq + (gc / ka) * ss.eta_c
    var_plus = 2.0 * b_sq + n_bar + b_bdag - 4.0 * mean_b * mean_b
    var_minus = -2.0 * b_sq + n_bar + b_bdag
    return var_plus, var_minus
