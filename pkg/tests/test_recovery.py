"""Coupling recovery from tabulated levels.

The energy formula sees (a1, a2, a3) only through x1 + x2 and x2 - x3, so a
clean round trip recovers those combinations (and the energies), not the raw
triple.  Rows above the coupling-independent bound E <= Q1(l) must defeat
any fit and be called out as such.
"""

import math

import numpy as np
import pytest

from mrey import (
    DomainError,
    PhysicalConstants,
    PotentialParams,
    energy,
    fit_couplings,
)
from mrey.recovery import TableRow, channel_bound

CONSTS = PhysicalConstants(1.0, 1.0, 1.0)

# l = 0 column of the positive-entry fixture that motivated the bound check
FIXTURE = (0.109375, 0.046875, -0.078125, -0.265625, -0.515625, -0.828125)


def test_row_validation():
    TableRow(0, 0, -1.0)
    with pytest.raises(DomainError):
        TableRow(-1, 0, -1.0)
    with pytest.raises(DomainError):
        TableRow(0, 0, math.nan)


def test_channel_bound_values():
    assert channel_bound(0, 0.5, CONSTS) == 0.0
    assert channel_bound(1, 0.5, CONSTS) == pytest.approx(0.25, rel=1e-15)
    assert channel_bound(2, 1.0, CONSTS) == pytest.approx(3.0, rel=1e-15)


def test_round_trip_recovers_energies_and_invariants():
    truth = PotentialParams(0.005, 0.002, 1.2, 0.4)
    rows = [
        TableRow(n, l, energy(truth, CONSTS, n, l).energy)
        for n in range(4)
        for l in range(3)
    ]
    report = fit_couplings(rows, alpha=0.4, consts=CONSTS)
    assert report.converged and report.feasible
    assert report.rms < 1e-8
    assert report.max_abs_residual < 1e-7
    assert report.verdict.startswith("feasible")
    # the identifiable combinations match the generating couplings
    h2a2 = 0.4**2
    x1 = 2.0 * truth.a1 / h2a2
    x2 = 2.0 * truth.a2 / h2a2
    x3 = 2.0 * truth.a3 / 0.4
    assert report.x1_plus_x2 == pytest.approx(x1 + x2, abs=1e-6)
    assert report.x2_minus_x3 == pytest.approx(x2 - x3, abs=1e-6)
    # and the fitted couplings themselves reproduce every level
    refit = [
        energy(report.params, CONSTS, row.n, row.l).energy for row in rows
    ]
    np.testing.assert_allclose(refit, [row.energy for row in rows], atol=1e-7)


def test_positive_entries_are_infeasible():
    rows = [TableRow(n, 0, e) for n, e in enumerate(FIXTURE)]
    report = fit_couplings(rows, alpha=0.5, consts=CONSTS)
    assert not report.feasible
    assert report.verdict.startswith("infeasible")
    # rows 0 and 1 sit above the l = 0 bound E <= 0
    assert set(report.infeasible_rows) == {0, 1}
    assert report.rms >= 0.01


def test_fixture_has_flat_second_differences():
    # the pattern that survives in the fixture: constant curvature -0.0625,
    # exactly the -2 Q2 signature of a Q3 = 0 column at alpha = 0.5
    second = np.diff(FIXTURE, n=2)
    np.testing.assert_allclose(second, -0.0625, rtol=0.0, atol=1e-15)


def test_fit_input_validation():
    with pytest.raises(DomainError):
        fit_couplings([], alpha=0.5, consts=CONSTS)
    with pytest.raises(DomainError):
        fit_couplings([TableRow(0, 0, -0.1)], alpha=0.0, consts=CONSTS)
    # plain (n, l, E) triples are accepted and coerced
    report = fit_couplings([(0, 0, -0.28125), (1, 0, -0.02)], alpha=0.5, consts=CONSTS)
    assert report.converged
