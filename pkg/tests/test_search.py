"""Extremization of the norm functional by conjugation ascent."""

import numpy as np
import pytest

from twistorz.acs import ACS, ank_reference_acs, blocks, hopf_acs
from twistorz.nijenhuis import closed_form_norm, max_norm
from twistorz.search import maximize, minimize


def test_maximize_from_the_maximum():
    report = maximize(seed=0, restarts=1, initial=ank_reference_acs())
    assert report.converged
    assert report.best_value == pytest.approx(max_norm(), rel=1e-12)


def test_minimize_from_the_minimum():
    report = minimize(seed=0, restarts=1, initial=hopf_acs())
    assert report.converged
    assert report.best_value < 1e-10


def test_maximize_random_restarts():
    report = maximize(seed=1, restarts=5, max_iters=400)
    ratio = report.best_value / max_norm()
    assert 1.0 - 1e-4 <= ratio <= 1.0 + 1e-9
    b = blocks(report.best_acs)
    assert float(np.linalg.norm(b.A)) < 1e-3
    assert float(np.linalg.norm(b.C)) < 1e-3


def test_minimize_random_restarts():
    report = minimize(seed=2, restarts=5, max_iters=400)
    assert report.best_value < 1e-6
    b = blocks(report.best_acs)
    assert abs(float(np.linalg.norm(b.c)) - 1.0) < 1e-3


def test_trajectory_monotone_valid_and_law_abiding():
    values = []

    def audit(matrix, value):
        acs = ACS.validate(matrix)  # every iterate is a member of Z
        assert closed_form_norm(blocks(acs)) == pytest.approx(value, abs=1e-9)
        values.append(value)

    maximize(seed=3, restarts=1, max_iters=150, on_iterate=audit)
    assert len(values) > 2
    assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))


def test_minimize_trajectory_monotone():
    values = []
    minimize(seed=4, restarts=1, max_iters=150, on_iterate=lambda m, v: values.append(v))
    assert all(b <= a + 1e-12 for a, b in zip(values, values[1:]))


def test_deterministic_per_seed():
    a = maximize(seed=9, restarts=2, max_iters=100)
    b = maximize(seed=9, restarts=2, max_iters=100)
    assert a.best_value == b.best_value
    assert np.array_equal(a.best_acs.matrix, b.best_acs.matrix)
    assert a.iterations == b.iterations


def test_unconverged_report():
    report = maximize(seed=5, restarts=1, max_iters=2)
    assert not report.converged
    assert report.iterations == 2


def test_restarts_must_be_positive():
    with pytest.raises(ValueError):
        maximize(seed=0, restarts=0)
