"""Shared fixtures.

The brute-force master-equation run used by the acceptance gate takes
about a minute on one core; it is computed once per session and shared
between the oracle tests and the acceptance tests.
"""
import time
from types import SimpleNamespace

import numpy as np
import pytest

from cascade_cavity.params import params_from_plot_set


@pytest.fixture(scope="session")
def param_grid():
    """100 reproducible parameter sets covering the plotting regime."""
    rng = np.random.default_rng(1729)
    return [
        params_from_plot_set(gamma_c=float(rng.uniform(0.2, 2.0)),
                             kappa=float(rng.uniform(0.5, 5.0)),
                             gamma=float(rng.uniform(0.0, 1.0)),
                             epsilon=float(rng.uniform(0.0, 2.5)))
        for _ in range(100)
    ]


@pytest.fixture(scope="session")
def plot_params():
    return params_from_plot_set(gamma_c=0.5, kappa=0.8, gamma=0.3,
                                epsilon=0.6)


@pytest.fixture(scope="session")
def good_cavity_run():
    """Full-model comparison deep in the adiabatic regime (kappa/g = 20)."""
    from cascade_cavity import fock

    params = params_from_plot_set(gamma_c=0.01, kappa=1.0, gamma=0.0,
                                  epsilon=0.01)
    t0 = time.perf_counter()
    report = fock.compare_with_analytic(params)
    wall = time.perf_counter() - t0
    return SimpleNamespace(params=params, report=report, wall=wall)
