"""Jacobi evaluation, wavefunction construction, normalization, ODE residual."""

import dataclasses
import math

import numpy as np
import pytest
from scipy.integrate import simpson
from scipy.special import binom

from mrey import (
    DomainError,
    PhysicalConstants,
    PotentialParams,
    ResolutionError,
    build_wave,
    count_nodes,
    default_node_grid,
    energy,
    spectral_coefficients,
)
from mrey.wavefunction import JacobiParams, jacobi_eval, normalize, ode_residual, overlap_matrix

CONSTS = PhysicalConstants(1.0, 1.0, 1.0)
UNIT_YUKAWA = PotentialParams(0.0, 0.0, 1.0, 0.5)
DEEP_YUKAWA = PotentialParams(0.0, 0.0, 5.0, 0.5)


def _jacobi_by_summation(n, a, b, x):
    # explicit finite sum, exact for polynomials; deliberately different
    # from the recurrence used by the library
    half_minus = (x - 1.0) / 2.0
    half_plus = (x + 1.0) / 2.0
    return sum(
        binom(n + a, n - k) * binom(n + b, k) * half_minus**k * half_plus ** (n - k)
        for k in range(n + 1)
    )


def test_jacobi_low_degrees():
    assert jacobi_eval(JacobiParams(0, 2.3, -0.4), 0.77) == 1.0
    assert jacobi_eval(JacobiParams(1, 2.0, 1.0), 0.5) == pytest.approx(1.75, rel=1e-15)
    # (a, b) = (0, 0) reduces to Legendre, P1(x) = x
    assert jacobi_eval(JacobiParams(1, 0.0, 0.0), 0.3) == pytest.approx(0.3, rel=1e-15)


def test_jacobi_endpoint_identity():
    for n in range(6):
        for a, b in ((0.0, 0.0), (1.5, -0.2), (3.0, 1.0)):
            value = jacobi_eval(JacobiParams(n, a, b), 1.0)
            assert value == pytest.approx(binom(n + a, n), rel=1e-13)


def test_jacobi_matches_explicit_summation():
    rng = np.random.default_rng(41)
    for _ in range(40):
        n = int(rng.integers(0, 11))
        a = rng.uniform(-0.9, 5.0)
        b = rng.uniform(-0.9, 5.0)
        for x in rng.uniform(-1.0, 1.0, size=5):
            fast = jacobi_eval(JacobiParams(n, a, b), x)
            slow = _jacobi_by_summation(n, a, b, x)
            assert fast == pytest.approx(slow, rel=1e-12, abs=1e-12)


def test_jacobi_params_validation():
    with pytest.raises(DomainError):
        JacobiParams(0, -1.0, 0.0)
    with pytest.raises(DomainError):
        JacobiParams(0, 0.0, -1.5)
    with pytest.raises(DomainError):
        JacobiParams(-1, 0.0, 0.0)


def test_build_wave_anchor_exponents():
    level = energy(UNIT_YUKAWA, CONSTS, 0, 0)
    wave = build_wave(UNIT_YUKAWA, CONSTS, level)
    assert wave.beta_exp == pytest.approx(1.5, rel=1e-12)
    assert wave.zeta_exp == pytest.approx(1.0, rel=1e-12)
    assert wave.jacobi.n == 0
    assert wave.jacobi.a == pytest.approx(3.0, rel=1e-12)
    assert wave.jacobi.b == pytest.approx(1.0, rel=1e-12)


def test_build_wave_rejects_non_bound_levels():
    marginal = energy(UNIT_YUKAWA, CONSTS, 1, 0)
    with pytest.raises(DomainError):
        build_wave(UNIT_YUKAWA, CONSTS, marginal)
    invalid = energy(PotentialParams(0.0, 0.0, 0.0, 0.5), CONSTS, 0, 0)
    with pytest.raises(DomainError):
        build_wave(PotentialParams(0.0, 0.0, 0.0, 0.5), CONSTS, invalid)


def test_exponent_tracks_delta():
    # the (1 - e^{-alpha r}) exponent must equal delta from the level algebra
    for l in range(2):  # l = 2 of this well is unbound
        coeffs = spectral_coefficients(DEEP_YUKAWA, CONSTS, l)
        level = energy(DEEP_YUKAWA, CONSTS, 0, l)
        wave = build_wave(DEEP_YUKAWA, CONSTS, level)
        assert abs(wave.zeta_exp - coeffs.delta) <= 1e-12


def test_normalization_self_consistent():
    level = energy(UNIT_YUKAWA, CONSTS, 0, 0)
    wave = build_wave(UNIT_YUKAWA, CONSTS, level)
    r = np.linspace(wave.r_tail * 1.5 / 200000, wave.r_tail * 1.5, 200001)
    total = simpson(wave.psi(r) ** 2, x=r)
    assert total == pytest.approx(1.0, abs=1e-8)


def test_normalize_scaling_and_idempotence():
    level = energy(UNIT_YUKAWA, CONSTS, 0, 0)
    wave = build_wave(UNIT_YUKAWA, CONSTS, level)
    doubled = dataclasses.replace(wave, amplitude=2.0 * wave.amplitude)
    assert normalize(doubled) == pytest.approx(wave.norm / 2.0, rel=1e-10)
    folded = wave.normalized()
    assert normalize(folded) == pytest.approx(1.0, abs=1e-10)


def test_wave_vanishes_at_boundaries():
    level = energy(DEEP_YUKAWA, CONSTS, 1, 0)
    wave = build_wave(DEEP_YUKAWA, CONSTS, level)
    alpha = DEEP_YUKAWA.alpha
    interior_peak = np.max(np.abs(wave.psi(np.linspace(0.1, 20.0, 400))))
    # near r = 0 psi shrinks like (alpha r)^zeta with zeta = 1 here, so the
    # drop at r = 2e-6 is linear in r, not abrupt
    assert abs(wave.psi(1e-6 / alpha)) < 1e-4 * interior_peak
    assert abs(wave.psi(100.0 / alpha)) < 1e-12 * interior_peak


def test_node_counts_match_quantum_number():
    for n in range(4):
        level = energy(DEEP_YUKAWA, CONSTS, n, 0)
        assert level.valid_bound_state
        wave = build_wave(DEEP_YUKAWA, CONSTS, level)
        assert count_nodes(wave, default_node_grid(wave)) == n


def test_node_grid_validation():
    level = energy(DEEP_YUKAWA, CONSTS, 2, 0)
    wave = build_wave(DEEP_YUKAWA, CONSTS, level)
    with pytest.raises(ResolutionError):
        count_nodes(wave, np.linspace(0.1, 20.0, 200))  # far below density floor
    with pytest.raises(DomainError):
        count_nodes(wave, np.array([0.0, 1.0, 2.0]))  # grid must stay positive
    with pytest.raises(DomainError):
        count_nodes(wave, np.array([2.0, 1.0]))  # not increasing


def test_ode_residual_small_for_true_solution():
    level = energy(UNIT_YUKAWA, CONSTS, 0, 0)
    wave = build_wave(UNIT_YUKAWA, CONSTS, level)
    assert ode_residual(wave) < 1e-6


def test_ode_residual_negative_control():
    level = energy(UNIT_YUKAWA, CONSTS, 0, 0)
    wave = build_wave(UNIT_YUKAWA, CONSTS, level)
    spoiled = dataclasses.replace(wave, beta_exp=wave.beta_exp + 0.1)
    assert ode_residual(spoiled) > 1e-2


def test_ode_residual_against_unscreened_equation():
    # the construction solves the screened stand-in exactly; against the
    # true 1/r and 1/r^2 terms the residual is the approximation error and
    # must NOT be small
    level = energy(UNIT_YUKAWA, CONSTS, 0, 0)
    wave = build_wave(UNIT_YUKAWA, CONSTS, level)
    assert ode_residual(wave, screened=False) > 1e-3
    with pytest.raises(DomainError):
        ode_residual(wave, num_points=50)


def test_overlap_matrix_diagnostic():
    waves = [
        build_wave(DEEP_YUKAWA, CONSTS, energy(DEEP_YUKAWA, CONSTS, n, 0))
        for n in range(3)
    ]
    overlap = overlap_matrix(waves)
    np.testing.assert_allclose(np.diag(overlap), 1.0, atol=1e-8)
    assert np.allclose(overlap, overlap.T)
    # distinct levels carry different weights, so exact orthogonality is not
    # expected; just record that the mixing stays modest
    off = overlap[~np.eye(3, dtype=bool)]
    assert np.all(np.abs(off) < 0.5)
