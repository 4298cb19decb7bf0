import numpy as np
import pytest

from cascade_cavity.bloch import (CSV_HEADER, BlochState, ConvergenceError,
                                  bloch_rhs, integrate_to_steady,
                                  steady_state_by_linear_solve,
                                  trajectory_csv)
from cascade_cavity.params import atomic_steady_state, params_from_plot_set


def _state_from_steady(ss):
    return BlochState(sigma_c=complex(ss.sigma_c),
                      eta_a=ss.eta_a, eta_b=ss.eta_b)


def _rhs_norm(state, params):
    d = bloch_rhs(state, params)
    return max(abs(d.sigma_a), abs(d.sigma_b), abs(d.sigma_c),
               abs(d.eta_a), abs(d.eta_b))


def test_rhs_from_rest(plot_params):
    # atom at rest in the bottom level: only the coherence is driven
    d = bloch_rhs(BlochState(), plot_params)
    assert d.sigma_a == 0j
    assert d.sigma_b == 0j
    assert d.sigma_c == 0.6 + 0j
    assert d.eta_a == 0.0
    assert d.eta_b == 0.0


def test_rhs_conjugate_coupling(plot_params):
    # G = 0.8, eps = 0.6; sigma_a feeds on conj(sigma_b) and vice versa
    d = bloch_rhs(BlochState(sigma_a=1.0 + 0j, sigma_b=2j), plot_params)
    assert d.sigma_a == pytest.approx(-1.2 - 1.2j, abs=1e-15)
    assert d.sigma_b == pytest.approx(-0.6 - 0.8j, abs=1e-15)


def test_rhs_population_exchange(plot_params):
    d = bloch_rhs(BlochState(eta_a=0.5), plot_params)
    assert d.eta_a == pytest.approx(-0.8, abs=1e-15)
    assert d.eta_b == pytest.approx(0.4, abs=1e-15)
    # eta_c = 0.5 via the sum rule, so the coherence drive halves
    assert d.sigma_c == pytest.approx(0.0, abs=1e-15)


def test_closed_form_is_fixed_point(param_grid):
    for p in param_grid:
        ss = atomic_steady_state(p)
        assert _rhs_norm(_state_from_steady(ss), p) <= 1e-12


def test_linear_solve_matches_closed_form(param_grid):
    for p in param_grid:
        a = atomic_steady_state(p)
        b = steady_state_by_linear_solve(p)
        assert abs(b.sigma_a) <= 1e-13
        assert abs(b.sigma_b) <= 1e-13
        assert abs(b.sigma_c - a.sigma_c) <= 1e-12
        assert abs(b.eta_a - a.eta_a) <= 1e-12
        assert abs(b.eta_b - a.eta_b) <= 1e-12
        assert abs(b.eta_c - a.eta_c) <= 1e-12


def test_linear_solve_rejects_undamped():
    p = params_from_plot_set(0.5, 0.8, 0.3, 0.6)
    bad = p.__class__(g=p.g, kappa=p.kappa, eta=p.eta, gamma=-p.gamma_c,
                      gamma_c=p.gamma_c, epsilon=p.epsilon)
    with pytest.raises(ValueError, match="gamma_c \\+ gamma"):
        steady_state_by_linear_solve(bad)


def test_integration_reaches_closed_form(plot_params):
    ss = atomic_steady_state(plot_params)
    traj = integrate_to_steady(plot_params)
    assert traj.converged
    assert traj.residual <= 1e-10
    final = traj.samples[-1][1]
    assert np.isclose(final.eta_a, 0.20930232558139535, rtol=0.0, atol=1e-8)
    assert abs(final.sigma_c - ss.sigma_c) <= 1e-9
    assert abs(final.eta_b - ss.eta_b) <= 1e-9
    assert abs(final.sigma_a) <= 1e-9
    assert abs(final.sigma_b) <= 1e-9


def test_integration_step_and_sampling(plot_params):
    traj = integrate_to_steady(plot_params)
    assert traj.step == pytest.approx(0.05 / 0.8, rel=1e-15)
    times = [t for t, _ in traj.samples]
    assert times[0] == 0.0
    assert all(a < b for a, b in zip(times, times[1:]))
    # samples carry their own timestamps
    assert all(t == s.time for t, s in traj.samples)


def test_trajectory_stays_physical(plot_params):
    traj = integrate_to_steady(plot_params)
    for _, s in traj.samples:
        eta_c = 1.0 - s.eta_a - s.eta_b
        for pop in (s.eta_a, s.eta_b, eta_c):
            assert -1e-9 <= pop <= 1.0 + 1e-9
        # real initial data keeps the whole trajectory real
        assert abs(s.sigma_a.imag) <= 1e-10
        assert abs(s.sigma_b.imag) <= 1e-10
        assert abs(s.sigma_c.imag) <= 1e-10


def test_integration_from_steady_state_is_immediate(plot_params):
    ss = atomic_steady_state(plot_params)
    traj = integrate_to_steady(plot_params,
                               initial=_state_from_steady(ss))
    assert traj.converged
    assert len(traj.samples) == 1


def test_undriven_atom_decays_to_bottom_level():
    p = params_from_plot_set(gamma_c=0.5, kappa=0.8, gamma=0.3, epsilon=0.0)
    start = BlochState(sigma_c=0.2 + 0.1j, eta_a=0.3, eta_b=0.4)
    final = integrate_to_steady(p, initial=start).samples[-1][1]
    assert abs(final.sigma_c) <= 1e-9
    assert abs(final.eta_a) <= 1e-9
    assert abs(final.eta_b) <= 1e-9


def test_unreachable_tolerance_raises(plot_params):
    with pytest.raises(ConvergenceError, match="not reached within horizon"):
        integrate_to_steady(plot_params, tolerance=1e-30)
    try:
        integrate_to_steady(plot_params, tolerance=1e-30)
    except ConvergenceError as e:
        assert e.residual > 0.0


def test_bad_tolerance_rejected(plot_params):
    with pytest.raises(ValueError, match="tolerance must be positive"):
        integrate_to_steady(plot_params, tolerance=0.0)


def test_trajectory_csv_layout(plot_params):
    traj = integrate_to_steady(plot_params)
    text = trajectory_csv(traj)
    lines = text.splitlines()
    assert lines[0] == CSV_HEADER
    assert lines[0] == ("time,sigma_a_re,sigma_a_im,sigma_b_re,sigma_b_im,"
                        "sigma_c_re,sigma_c_im,eta_a,eta_b")
    assert len(lines) == 1 + len(traj.samples)
    assert text.endswith("\n")
    row = [float(x) for x in lines[-1].split(",")]
    assert len(row) == 9
    t, s = traj.samples[-1]
    assert row[0] == t and row[7] == s.eta_a  # repr round-trips exactly
