"""Squeezing statistics of the superposed spontaneous-emission mode.

The two undriven cavity modes collect the atom's spontaneous emission on
the upper and lower transitions.  Their equal-weight superposition (with a
quarter-wave relative phase) has identical variances in both quadratures,
each below the doubled vacuum level, so the squeezing fraction is shared.
Closed forms in (gamma_c, kappa, gamma, epsilon) throughout.
"""
from __future__ import annotations

from dataclasses import dataclass

from .params import SystemParams
from .single_mode import _check_gamma_c, mean_photon_number

__all__ = ["SuperposedReport", "superposed_report", "superposed_uncertainty"]


@dataclass(frozen=True)
class SuperposedReport:
    n_s: float           # mean photon number, twice the driven mode's
    var_plus: float      # the two quadrature variances coincide here,
    var_minus: float     # kept as separate fields for report symmetry
    vacuum_level: float  # 2 gamma_c / kappa
    f_lower: float       # uncertainty lower bound f_c
    f_product: float     # actual product f_d; equals var_plus = var_minus
    s_sup_plus: float
    s_sup_minus: float


def _shared_squeezing(params: SystemParams) -> float:
    """Common squeezing fraction (3 eps^4 + 3 eps^2 G^2) / D^2."""
    G = params.gamma_c + params.gamma
    e2 = params.epsilon ** 2
    D = G * G + 3.0 * e2
    return (3.0 * e2 * e2 + 3.0 * e2 * G * G) / (D * D)


def superposed_report(params: SystemParams) -> SuperposedReport:
    _check_gamma_c(params)
    gc, ka, ga = params.gamma_c, params.kappa, params.gamma
    G = gc + ga
    D = G * G + 3.0 * params.epsilon ** 2
    vacuum = 2.0 * gc / ka
    s = _shared_squeezing(params)
    var = vacuum * (1.0 - s)
    return SuperposedReport(
        n_s=2.0 * mean_photon_number(params).n_bar,
        var_plus=var,
        var_minus=var,
        vacuum_level=vacuum,
        f_lower=(gc / ka) * 2.0 * G * G / D,
        f_product=var,
        s_sup_plus=s,
        s_sup_minus=s,
    )


def superposed_uncertainty(params: SystemParams) -> tuple[float, float]:
    """(f_lower, f_product) for the superposed mode.

    With equal quadrature variances the product is just the common
    variance, and it stays above the lower bound for every drive.
    """
    rep = superposed_report(params)
    return rep.f_lower, rep.f_product
