"""Smoke tests for the python bindings."""

import cmath
import math

import pytest

rcarlab = pytest.importorskip("_rcarlab")


def test_omega_and_cf_levy():
    law = rcarlab.StableLaw.gaussian(1.0)
    assert rcarlab.omega(1.0, law) == pytest.approx(0.5 + 0j)
    assert rcarlab.cf_levy(2.0, 1.0, law) == pytest.approx(math.exp(-2.0) + 0j)


def test_sampling_and_hill():
    law = rcarlab.StableLaw.two_sided_pareto(1.5, 1.0, 1.0)
    draws = rcarlab.sample_innovation(law, 200_000, seed=5)
    hill = rcarlab.hill_index(draws, 2_000)
    assert 1.3 < hill < 1.7


def test_kappa_and_cov():
    assert rcarlab.kappa_alpha(rcarlab.MixingLaw.pure_power(2.0), 1.0) == pytest.approx(2.0)
    closed = rcarlab.cov_lambda2(1.0, 2.0, 1.5, 1.0, 1.0)
    numeric = rcarlab.cov_lambda2_quadrature(1.0, 2.0, 1.5, 1.0, 1.0)
    assert numeric == pytest.approx(closed, rel=1e-5)


def test_limit_cfs_and_classify():
    law = rcarlab.StableLaw.exact_stable(1.5, 0.5, 0.5)
    thetas = rcarlab.theta_grid(-2.0, 2.0, 5)
    values = rcarlab.cf_v(thetas, 0.5, 1.0, law)
    assert values[2] == pytest.approx(1.0 + 0j)
    assert all(abs(v) <= 1.0 + 1e-12 for v in values)

    report = rcarlab.classify(1.5, 0.5, 1e4, 10)
    assert report.case == "I_mu_inf_beta_lt1"
    assert report.limit_law.stability == "(alpha*beta)-stable"
    cf = report.limit_law.cf(1.0, 1.0, law)
    assert abs(cf - rcarlab.cf_v([1.0], 0.5, 0.5, law)[0]) < 1e-12


def test_panel_aggregate_deterministic():
    spec = rcarlab.PanelSpec()
    spec.innovation = rcarlab.StableLaw.gaussian(1.0)
    spec.mixing = rcarlab.MixingLaw.pure_power(2.0)
    spec.N = 8
    spec.n = 32
    spec.taus = [0.5, 1.0]
    spec.seed = 17
    a = rcarlab.aggregate_replicates(spec, 4)
    b = rcarlab.aggregate_replicates(spec, 4, workers=2)
    assert a == b
    assert len(a) == 4 and len(a[0]) == 2


def test_simulate_z():
    spec = rcarlab.PoissonSimSpec()
    spec.alpha = 1.5
    spec.beta = 0.5
    spec.psi1 = 1.0
    spec.driver = rcarlab.StableLaw.exact_stable(1.5, 0.5, 0.5)
    spec.tau_grid = [0.5, 1.0]
    spec.x_min, spec.x_max = rcarlab.default_truncation(1.5, 0.5, 1.0, 1.0, 0.05)
    spec.seed = 23
    paths = rcarlab.simulate_z_replicates(spec, 3)
    assert len(paths) == 3
    assert all(len(p) == 2 and all(math.isfinite(v) for v in p) for p in paths)


def test_gil_pelaez_inversion():
    law = rcarlab.StableLaw.gaussian(1.0)
    p = rcarlab.invert_cf_cdf(lambda t: rcarlab.cf_levy(t, 1.0, law), 1.959964)
    assert p == pytest.approx(0.975, abs=1e-5)
