"""Noisy transfer chain: closed-form lambda_min, distance and noise
thresholds, and the step-by-step simulation they must reproduce."""

import math

import numpy as np
import pytest

from twoqubit.bloch import partial_transpose
from twoqubit.chain import (
    ChainParams,
    chain_lambda_min,
    chain_report,
    critical_noise,
    depolarize,
    evolve_chain,
    max_transfer_distance,
    swap_gate,
)
from twoqubit.linalg import eig_hermitian_oracle, kron
from twoqubit.sampling import bell_state, pure_density


def initial_pair(q):
    """Pure state cos(t)|00> + sin(t)|11> with |ad - bc| = q."""
    t = math.asin(2.0 * q) / 2.0
    return pure_density(np.array([math.cos(t), 0.0, 0.0, math.sin(t)]))


def test_swap_gate_action():
    s = swap_gate()
    assert np.array_equal(s @ s, np.eye(4))
    rng = np.random.default_rng(61)
    a = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    b = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    assert np.max(np.abs(s @ np.kron(a, b) - np.kron(b, a))) <= 1e-15


def test_depolarize_basics():
    rho = pure_density(bell_state())
    assert np.max(np.abs(depolarize(rho, 0.0) - rho)) == 0.0
    assert np.max(np.abs(depolarize(rho, 1.0) - np.eye(4) / 4.0)) == 0.0
    mixed = np.eye(4, dtype=complex) / 4.0
    assert np.max(np.abs(depolarize(mixed, 0.3) - mixed)) <= 1e-16
    out = depolarize(rho, 0.2)
    assert abs(np.trace(out).real - 1.0) <= 1e-15
    with pytest.raises(ValueError):
        depolarize(rho, 1.5)


def test_evolve_matches_closed_form():
    rho0 = initial_pair(0.5)
    for eps, n in ((0.1, 7), (0.3, 20), (0.05, 0)):
        evolved = evolve_chain(rho0, eps, n)
        fade = (1.0 - eps) ** n
        want = fade * rho0 + (1.0 - fade) * np.eye(4) / 4.0
        assert np.max(np.abs(evolved - want)) <= 1e-13
    with pytest.raises(ValueError):
        evolve_chain(rho0, 0.1, -1)


def test_lambda_min_formula_vs_simulation():
    for q in (0.1, 0.5):
        rho = initial_pair(q)
        for n in range(0, 31):
            want = eig_hermitian_oracle(partial_transpose(rho))[-1]
            got = chain_lambda_min(q, 0.15, n)
            assert abs(got - want) <= 1e-12, f"q={q} n={n}"
            rho = depolarize(rho, 0.15)


def test_lambda_min_endpoints():
    assert abs(chain_lambda_min(0.5, 0.3, 0) + 0.5) <= 1e-15
    assert abs(chain_lambda_min(0.1, 0.3, 0) + 0.1) <= 1e-15
    # noise only ever raises the floor
    values = [chain_lambda_min(0.5, 0.1, n) for n in range(40)]
    assert all(a < b for a, b in zip(values, values[1:]))


def test_max_transfer_distance_boundaries():
    assert max_transfer_distance(0.0, 0.1) == 0
    assert max_transfer_distance(0.5, 0.0) is math.inf
    assert max_transfer_distance(0.5, 1.0) == 0
    with pytest.raises(ValueError):
        max_transfer_distance(0.7, 0.1)
    with pytest.raises(ValueError):
        max_transfer_distance(0.5, -0.1)


def test_max_transfer_distance_is_the_boundary_integer():
    """The returned n must still be entangled while n + 1 is not."""
    for q in (0.05, 0.25, 0.5):
        for eps in (0.02, 0.1, 0.37, 0.9):
            n = max_transfer_distance(q, eps)
            assert chain_lambda_min(q, eps, n) < 0.0
            assert chain_lambda_min(q, eps, n + 1) >= 0.0


def test_critical_noise_closed_form():
    # lambda_min at the threshold is zero up to n-fold rounding in the
    # power; a relative nudge of 1e-6 in epsilon clears the separability
    # band on either side even at n = 50 where the derivative is shallow.
    for q in (0.1, 0.3, 0.5):
        for n in (1, 2, 5, 10, 50):
            eps = critical_noise(q, n)
            assert abs(chain_lambda_min(q, eps, n)) <= 1e-13
            assert max_transfer_distance(q, eps * (1.0 - 1e-6)) >= n
            assert max_transfer_distance(q, eps * (1.0 + 1e-6)) < n


def test_critical_noise_validation():
    with pytest.raises(ValueError):
        critical_noise(0.0, 5)
    with pytest.raises(ValueError):
        critical_noise(0.5, 0)


def test_chain_params_validation():
    ChainParams(epsilon=0.1, n=3, q=0.5)
    with pytest.raises(ValueError):
        ChainParams(epsilon=1.2, n=3, q=0.5)
    with pytest.raises(ValueError):
        ChainParams(epsilon=0.1, n=-1, q=0.5)
    with pytest.raises(ValueError):
        ChainParams(epsilon=0.1, n=3, q=0.6)


def test_chain_report_default_rows():
    report = chain_report(0.5, 0.1)
    assert report.n_max == 10
    # rows run one past the distance so the sign change is visible
    assert len(report.lambda_min_per_step) == 12
    assert report.lambda_min_per_step[10] < 0.0 <= report.lambda_min_per_step[11]
    assert report.epsilon_critical is not None
    assert abs(report.epsilon_critical - critical_noise(0.5, 10)) <= 1e-15


def test_chain_report_explicit_n():
    report = chain_report(0.5, 0.1, n=4)
    assert len(report.lambda_min_per_step) == 5
    assert abs(report.epsilon_critical - critical_noise(0.5, 4)) <= 1e-15


def test_chain_report_zero_distance_has_no_threshold():
    report = chain_report(0.5, 0.9)
    assert report.n_max == 0
    assert report.epsilon_critical is None


def test_chain_report_unbounded_needs_n():
    with pytest.raises(ValueError):
        chain_report(0.5, 0.0)
    report = chain_report(0.5, 0.0, n=3)
    assert report.n_max is math.inf
    assert all(abs(x + 0.5) <= 1e-15 for x in report.lambda_min_per_step)
