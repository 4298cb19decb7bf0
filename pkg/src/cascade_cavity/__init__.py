"""Driven three-level cascade atom in a damped cavity.

Closed-form steady state and squeezing statistics for the driven mode and
the superposed emission mode, time-domain and linear-algebra checks of the
reduced atomic equations, drive-strength sweeps with published-figure
reproduction, and a truncated-Fock-space master-equation oracle
(cascade_cavity.fock; imported on demand, it compiles its kernels).
"""
from .params import (AtomicSteadyState, SystemParams, atomic_steady_state,
                     derive_params, params_from_plot_set)
from .bloch import (BlochState, ConvergenceError, Trajectory, bloch_rhs,
                    integrate_to_steady, steady_state_by_linear_solve,
                    trajectory_csv)
from .single_mode import (FieldMoments, PhotonReport, QuadratureReport,
                          field_moments, mean_photon_number,
                          quadrature_report, variances_from_moments)
from .superposed import (SuperposedReport, superposed_report,
                         superposed_uncertainty)
from .sweep import (FIGURES, QUANTITIES, OptimumResult, SweepSpec,
                    SweepTable, figure_table, maximize)

__version__ = "0.1.0"

__all__ = [
    "AtomicSteadyState", "SystemParams", "atomic_steady_state",
    "derive_params", "params_from_plot_set",
    "BlochState", "ConvergenceError", "Trajectory", "bloch_rhs",
    "integrate_to_steady", "steady_state_by_linear_solve", "trajectory_csv",
    "FieldMoments", "PhotonReport", "QuadratureReport", "field_moments",
    "mean_photon_number", "quadrature_report", "variances_from_moments",
    "SuperposedReport", "superposed_report", "superposed_uncertainty",
    "FIGURES", "QUANTITIES", "OptimumResult", "SweepSpec", "SweepTable",
    "figure_table", "maximize",
]
