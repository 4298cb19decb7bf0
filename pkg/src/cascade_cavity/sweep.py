"""Drive-strength sweeps and scalar maximization of squeezing curves.

Every plotted quantity is a closed form in epsilon at fixed
(gamma_c, kappa, gamma), so curve reproduction is a uniform grid
evaluation and optimum location is a golden-section search on a smooth
unimodal objective.  Tables render to comma-separated values with full
float precision, which makes the output byte-stable run to run.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .params import SystemParams, params_from_plot_set
from .single_mode import mean_photon_number, quadrature_report
from .superposed import superposed_report

__all__ = [
    "QUANTITIES",
    "FIGURES",
    "SweepSpec",
    "SweepTable",
    "OptimumResult",
    "sweep",
    "figure_table",
    "maximize",
]

QUANTITIES: dict[str, Callable[[SystemParams], float]] = {
    "n_bar": lambda p: mean_photon_number(p).n_bar,
    "var_plus": lambda p: quadrature_report(p).var_plus,
    "var_minus": lambda p: quadrature_report(p).var_minus,
    "vacuum": lambda p: quadrature_report(p).vacuum_level,
    "f_a": lambda p: quadrature_report(p).f_lower,
    "f_b": lambda p: quadrature_report(p).f_product,
    "f_c": lambda p: superposed_report(p).f_lower,
    "f_d": lambda p: superposed_report(p).f_product,
    "s_plus": lambda p: quadrature_report(p).s_plus,
    "s_minus": lambda p: quadrature_report(p).s_minus,
    "s_sup": lambda p: superposed_report(p).s_sup_plus,
    "n_s": lambda p: superposed_report(p).n_s,
}


@dataclass(frozen=True)
class SweepSpec:
    """Grid description; base.epsilon and base.eta are ignored, the drive
    is rebuilt per grid point."""

    base: SystemParams
    eps_min: float = 0.0
    eps_max: float = 2.0
    points: int = 401
    quantities: tuple[str, ...] = ("n_bar",)


@dataclass(frozen=True)
class SweepTable:
    columns: tuple[str, ...]  # first column is always "epsilon"
    data: np.ndarray          # shape (points, len(columns))

    def csv(self) -> str:
        lines = [",".join(self.columns)]
        for row in self.data:
            lines.append(",".join(repr(float(x)) for x in row))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class OptimumResult:
    eps_star: float
    value_star: float
    bracket: float     # final search interval width
    evaluations: int
    boundary: str | None = None  # "lo"/"hi" when the max sits on an edge


def _check_quantities(names) -> None:
    for q in names:
        if q not in QUANTITIES:
            raise ValueError(f"unknown quantity {q!r}; valid selectors: "
                             + ", ".join(sorted(QUANTITIES)))


def _at_eps(base: SystemParams, eps: float) -> SystemParams:
    return params_from_plot_set(gamma_c=base.gamma_c, kappa=base.kappa,
                                gamma=base.gamma, epsilon=eps)


def sweep(spec: SweepSpec) -> SweepTable:
    """Evaluate the selected quantities on a uniform epsilon grid."""
    if not spec.eps_min >= 0:
        raise ValueError(f"eps_min must be >= 0, got {spec.eps_min}")
    if not spec.eps_max > spec.eps_min:
        raise ValueError("eps_max must exceed eps_min, got "
                         f"[{spec.eps_min}, {spec.eps_max}]")
    if spec.points < 2:
        raise ValueError(f"points must be >= 2, got {spec.points}")
    _check_quantities(spec.quantities)
    grid = np.linspace(spec.eps_min, spec.eps_max, spec.points)
    data = np.empty((spec.points, 1 + len(spec.quantities)))
    data[:, 0] = grid
    for i, eps in enumerate(grid):
        p = _at_eps(spec.base, float(eps))
        for j, q in enumerate(spec.quantities):
            data[i, 1 + j] = QUANTITIES[q](p)
    return SweepTable(columns=("epsilon", *spec.quantities), data=data)


# Published curve sets: every figure uses gamma_c=0.5, kappa=0.8 and a
# 401-point grid; gamma and the epsilon range vary per figure.
FIGURES: dict[str, dict] = {
    "fig2": {"quantities": ("n_bar",), "gammas": (0.0, 0.3), "eps_max": 2.0},
    "fig3": {"quantities": ("var_minus", "var_plus", "vacuum"),
             "gammas": (0.3,), "eps_max": 2.0},
    "fig4": {"quantities": ("f_a", "f_b"), "gammas": (0.3,), "eps_max": 2.0},
    "fig5": {"quantities": ("s_plus",), "gammas": (0.0, 0.3), "eps_max": 2.0},
    "fig6": {"quantities": ("s_minus",), "gammas": (0.0, 0.3),
             "eps_max": 20.0},
    "fig7": {"quantities": ("f_c", "f_d"), "gammas": (0.3,), "eps_max": 2.0},
}


def figure_table(figure_id: str, gamma_c: float = 0.5, kappa: float = 0.8,
                 points: int = 401) -> SweepTable:
    """Curve data for one published figure.

    With more than one gamma in the figure, each quantity column carries a
    _gamma{value} suffix; single-gamma figures use bare quantity names.
    """
    try:
        fig = FIGURES[figure_id]
    except KeyError:
        raise ValueError(f"unknown figure id {figure_id!r}; valid ids: "
                         + ", ".join(sorted(FIGURES))) from None
    gammas = fig["gammas"]
    tables = []
    for gamma in gammas:
        base = params_from_plot_set(gamma_c=gamma_c, kappa=kappa,
                                    gamma=gamma, epsilon=0.0)
        tables.append(sweep(SweepSpec(base=base, eps_min=0.0,
                                      eps_max=fig["eps_max"], points=points,
                                      quantities=fig["quantities"])))
    if len(gammas) == 1:
        return tables[0]
    columns = ["epsilon"]
    blocks = [tables[0].data[:, :1]]
    for j, q in enumerate(fig["quantities"]):
        for gamma, tab in zip(gammas, tables):
            columns.append(f"{q}_gamma{gamma:g}")
            blocks.append(tab.data[:, j + 1:j + 2])
    return SweepTable(columns=tuple(columns), data=np.hstack(blocks))


_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0


def maximize(base: SystemParams, quantity: str,
             bracket: tuple[float, float] = (0.0, 3.0),
             tol: float = 1e-8) -> OptimumResult:
    """Golden-section maximization of one quantity over epsilon.

    The search assumes a unimodal objective on the bracket.  When the
    largest value sits on a bracket edge (monotone objective) the result
    flags that edge instead of reporting a fake interior optimum.
    """
    _check_quantities([quantity])
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    lo, hi = bracket
    if not (0 <= lo < hi):
        raise ValueError(f"bracket must satisfy 0 <= lo < hi, got {bracket}")
    f = lambda eps: QUANTITIES[quantity](_at_eps(base, eps))

    y_lo, y_hi = f(lo), f(hi)
    a, b = lo, hi
    h = b - a
    c, d = b - _INVPHI * h, a + _INVPHI * h
    yc, yd = f(c), f(d)
    evaluations = 4
    while h > tol:
        if yc > yd:
            b, d, yd = d, c, yc
            h = b - a
            c = b - _INVPHI * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            h = b - a
            d = a + _INVPHI * h
            yd = f(d)
        evaluations += 1
    eps_star, value_star = (c, yc) if yc > yd else (d, yd)
    boundary = None
    if y_lo >= value_star:
        eps_star, value_star, boundary = lo, y_lo, "lo"
    if y_hi >= value_star:
        eps_star, value_star, boundary = hi, y_hi, "hi"
    return OptimumResult(eps_star=float(eps_star),
                         value_star=float(value_star),
                         bracket=float(h), evaluations=evaluations,
                         boundary=boundary)
