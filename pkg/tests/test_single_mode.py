import numpy as np
import pytest

from cascade_cavity.params import SystemParams, params_from_plot_set
from cascade_cavity.single_mode import (field_moments, mean_photon_number,
                                        quadrature_report,
                                        variances_from_moments)


def test_photon_number_frozen_point(plot_params):
    ph = mean_photon_number(plot_params)
    assert np.isclose(ph.n_bar, 2.8936046511627907, rtol=1e-13, atol=0.0)
    assert np.isclose(ph.drive_term, 3.6, rtol=1e-12, atol=0.0)
    assert np.isclose(ph.absorbed_term, 0.8372093023255814,
                      rtol=1e-12, atol=0.0)
    assert np.isclose(ph.emitted_term, 0.13081395348837209,
                      rtol=1e-12, atol=0.0)


def test_photon_number_decomposition(param_grid):
    # absorbed photons are the only loss channel in the balance
    for p in param_grid:
        ph = mean_photon_number(p)
        assert abs(ph.n_bar - (ph.drive_term - ph.absorbed_term
                               + ph.emitted_term)) <= 1e-12
        assert ph.n_bar >= 0.0
        assert ph.drive_term >= 0.0
        assert ph.absorbed_term >= 0.0
        assert ph.emitted_term >= 0.0


def test_photon_number_exact_rational():
    # gamma = 0, eps = 0.5, gamma_c = 0.5, kappa = 0.8: n_bar = 2.03125
    p = params_from_plot_set(gamma_c=0.5, kappa=0.8, gamma=0.0, epsilon=0.5)
    assert np.isclose(mean_photon_number(p).n_bar, 2.03125,
                      rtol=1e-13, atol=0.0)


def test_no_drive_no_photons():
    p = params_from_plot_set(gamma_c=0.5, kappa=0.8, gamma=0.3, epsilon=0.0)
    ph = mean_photon_number(p)
    assert ph.n_bar == 0.0
    assert ph.drive_term == 0.0
    assert ph.absorbed_term == 0.0
    assert ph.emitted_term == 0.0


def test_spontaneous_emission_crossover_in_photon_number():
    # gamma suppresses the absorbing coherence, so weak drives leave more
    # photons in the cavity; the ordering flips only past the crossover at
    # eps^2 = gamma_c (2 gamma_c + 3 gamma) / 12.
    eps_cross = np.sqrt(0.5 * (2 * 0.5 + 3 * 0.3) / 12.0)

    def n_bar(gamma, eps):
        return mean_photon_number(params_from_plot_set(0.5, 0.8, gamma, eps)).n_bar

    for eps in (0.05, 0.1, 0.2):
        assert n_bar(0.3, eps) > n_bar(0.0, eps)
    for eps in (0.4, 0.6, 1.0, 2.0):
        assert n_bar(0.3, eps) < n_bar(0.0, eps)
    assert np.isclose(n_bar(0.3, eps_cross), n_bar(0.0, eps_cross),
                      rtol=1e-12, atol=0.0)
    assert np.isclose(n_bar(0.3, eps_cross), 19.0 / 39.0, rtol=1e-12, atol=0.0)


def test_quadrature_frozen_point(plot_params):
    qr = quadrature_report(plot_params)
    assert np.isclose(qr.var_plus, 0.2994862087614927, rtol=1e-12, atol=0.0)
    assert np.isclose(qr.var_minus, 0.4941860465116279, rtol=1e-12, atol=0.0)
    assert qr.vacuum_level == 0.625
    assert np.isclose(qr.f_lower, 0.23255813953488372, rtol=1e-12, atol=0.0)
    assert np.isclose(qr.f_product, 0.3847101577715334, rtol=1e-12, atol=0.0)
    assert np.isclose(qr.s_plus, 0.5208220659816117, rtol=1e-12, atol=0.0)
    assert np.isclose(qr.s_minus, 0.20930232558139535, rtol=1e-12, atol=0.0)


def test_quadratures_at_zero_drive_sit_on_vacuum():
    qr = quadrature_report(
        params_from_plot_set(gamma_c=0.5, kappa=0.8, gamma=0.3, epsilon=0.0))
    assert abs(qr.var_plus - 0.625) <= 1e-15
    assert abs(qr.var_minus - 0.625) <= 1e-15
    assert qr.s_plus == 0.0
    assert qr.s_minus == 0.0


def test_squeezing_definitions_consistent(param_grid):
    for p in param_grid:
        qr = quadrature_report(p)
        assert abs(qr.s_plus - (1.0 - qr.var_plus / qr.vacuum_level)) <= 1e-12
        assert abs(qr.s_minus
                   - (1.0 - qr.var_minus / qr.vacuum_level)) <= 1e-12
        assert abs(qr.f_product ** 2
                   - qr.var_plus * qr.var_minus) <= 1e-12
        if p.epsilon > 0:
            assert qr.s_plus > 0.0
            assert qr.s_minus > 0.0


def test_uncertainty_relation_holds_on_dense_grid():
    for eps in np.linspace(0.0, 20.0, 2001):
        qr = quadrature_report(params_from_plot_set(0.5, 0.8, 0.3,
                                                    float(eps)))
        assert qr.f_product >= qr.f_lower - 1e-12
        if eps >= 0.1:
            assert qr.f_product > qr.f_lower


def test_minus_squeezing_equals_top_population(param_grid):
    # s_minus reduces to eps^2/D, the same expression as eta_a
    from cascade_cavity.params import atomic_steady_state
    for p in param_grid:
        assert abs(quadrature_report(p).s_minus
                   - atomic_steady_state(p).eta_a) <= 1e-12


@pytest.mark.parametrize("c", [0.5, 2.0, 10.0])
def test_squeezing_scale_covariance(c):
    base = quadrature_report(params_from_plot_set(0.5, 0.8, 0.3, 0.6))
    scaled = quadrature_report(
        params_from_plot_set(c * 0.5, 0.8, c * 0.3, c * 0.6))
    assert abs(scaled.s_plus - base.s_plus) <= 1e-12
    assert abs(scaled.s_minus - base.s_minus) <= 1e-12


@pytest.mark.parametrize("gamma", [0.0, 0.3])
def test_squeezing_asymptotes(gamma):
    qr = quadrature_report(params_from_plot_set(0.5, 0.8, gamma, 1e6))
    assert abs(qr.s_plus - 1.0 / 3.0) <= 1e-9
    assert abs(qr.s_minus - 1.0 / 3.0) <= 1e-9


def test_minus_squeezing_grows_monotonically():
    values = [quadrature_report(params_from_plot_set(0.5, 0.8, 0.3,
                                                     float(e))).s_minus
              for e in np.linspace(0.0, 20.0, 201)]
    assert all(a < b for a, b in zip(values, values[1:]))
    assert values[-1] < 1.0 / 3.0


def test_plus_squeezing_curves_cross():
    # without spontaneous emission the curve peaks earlier, so it leads
    # at weak drive and trails past the crossing near eps = 0.48
    def gap(eps):
        s0 = quadrature_report(params_from_plot_set(0.5, 0.8, 0.0,
                                                    eps)).s_plus
        s3 = quadrature_report(params_from_plot_set(0.5, 0.8, 0.3,
                                                    eps)).s_plus
        return s0 - s3

    for eps in (0.2, 0.4, 0.46):
        assert gap(eps) > 0.0
    for eps in (0.5, 0.6, 1.0):
        assert gap(eps) < 0.0


def test_variances_recombined_from_moments(param_grid):
    for p in param_grid:
        qr = quadrature_report(p)
        var_plus, var_minus = variances_from_moments(p)
        assert abs(var_plus - qr.var_plus) <= 1e-12
        assert abs(var_minus - qr.var_minus) <= 1e-12


def test_field_moments_frozen_point(plot_params):
    fm = field_moments(plot_params)
    assert np.isclose(fm.mean_b, 1.6767425732985825, rtol=1e-12, atol=0.0)
    assert np.isclose(fm.mean_b_squared, 2.7627906976744186,
                      rtol=1e-12, atol=0.0)
    assert np.isclose(fm.n_bar, 2.8936046511627907, rtol=1e-13, atol=0.0)
    # <b>^2 - <b^2> equals (gamma_c/kappa) sigma_c^2
    assert np.isclose(fm.mean_b ** 2 - fm.mean_b_squared,
                      0.048674959437533802, rtol=1e-11, atol=0.0)


def test_closed_forms_require_cavity_coupling():
    bad = SystemParams(g=0.0, kappa=1.0, eta=0.1, gamma=0.0,
                       gamma_c=0.0, epsilon=0.0)
    with pytest.raises(ValueError, match="gamma_c must be positive"):
        mean_photon_number(bad)
    with pytest.raises(ValueError, match="gamma_c must be positive"):
        quadrature_report(bad)
