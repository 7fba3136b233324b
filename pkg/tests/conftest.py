"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately avoid the library's vectorized code paths:
the bracket is a literal structure-constant table lookup and the
Nijenhuis tensor is expanded term by term, so every comparison against
them is a genuine dual-route check.
"""

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")

EYE6 = np.eye(6)

#: nonzero structure constants as (i, j, k, value): [e_i, e_j] = value * e_k
BRACKET_TABLE = (
    (0, 1, 2, 1.0),
    (0, 2, 1, -1.0),
    (1, 2, 0, 1.0),
    (3, 4, 5, 1.0),
    (3, 5, 4, -1.0),
    (4, 5, 3, 1.0),
)


def oracle_bracket(x, y):
    """Bracket via the literal table, independent of the library's cross products."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    out = np.zeros(6)
    for i, j, k, v in BRACKET_TABLE:
        out[k] += v * (x[i] * y[j] - x[j] * y[i])
    return out


def oracle_nijenhuis(matrix):
    """N[k, i, j] expanded directly from the defining formula."""
    j_mat = np.asarray(matrix, dtype=float)
    out = np.zeros((6, 6, 6))
    for i in range(6):
        for jj in range(6):
            term = (
                oracle_bracket(j_mat @ EYE6[:, i], j_mat @ EYE6[:, jj])
                - oracle_bracket(EYE6[:, i], EYE6[:, jj])
                - j_mat @ oracle_bracket(EYE6[:, i], j_mat @ EYE6[:, jj])
                - j_mat @ oracle_bracket(j_mat @ EYE6[:, i], EYE6[:, jj])
            )
            out[:, i, jj] = term
    return out


def oracle_nijenhuis_norm_sq(matrix):
    n = oracle_nijenhuis(matrix)
    return float(np.sum(n * n))


def unit3(rng):
    v = rng.standard_normal(3)
    return v / np.linalg.norm(v)


def random_rotation3(rng):
    q, r = np.linalg.qr(rng.standard_normal((3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, [0, 1]] = q[:, [1, 0]]
    return q


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
