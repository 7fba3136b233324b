"""The Lie algebra su(2) + su(2) as R^3 x R^3 with cross-product brackets.

Basis e_1..e_3 spans the first factor, e_4..e_6 the second (0-based
indices 0..5 in code).  The working metric makes this basis orthonormal;
it is half the Killing-Cartan form, which only rescales norms and changes
no orthogonality, integrability or membership statement.
"""

from __future__ import annotations

import numpy as np

DIM = 6


def _structure_constants() -> np.ndarray:
    c = np.zeros((DIM, DIM, DIM))
    # [e1,e2]=e3, [e1,e3]=-e2, [e2,e3]=e1 on each factor, factors commute
    for base in (0, 3):
        for (i, j, k, s) in ((0, 1, 2, 1.0), (0, 2, 1, -1.0), (1, 2, 0, 1.0)):
            c[base + k, base + i, base + j] = s
            c[base + k, base + j, base + i] = -s
    c.setflags(write=False)
    return c


#: c[k, i, j] with [e_i, e_j] = sum_k c[k, i, j] e_k
STRUCTURE_CONSTANTS: np.ndarray = _structure_constants()


def basis_vector(i: int) -> np.ndarray:
    e = np.zeros(DIM)
    e[i] = 1.0
    return e


def bracket(x, y) -> np.ndarray:
    """Lie bracket: componentwise cross product on each su(2) factor."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    out = np.empty(DIM)
    out[0:3] = np.cross(x[0:3], y[0:3])
    out[3:6] = np.cross(x[3:6], y[3:6])
    return out


def metric(x, y) -> float:
    """Inner product with e_1..e_6 orthonormal."""
    return float(np.dot(np.asarray(x, dtype=float), np.asarray(y, dtype=float)))


def nabla(x, y) -> np.ndarray:
    """Levi-Civita connection of the bi-invariant metric: half the bracket."""
    return 0.5 * bracket(x, y)


def jacobi_residual() -> float:
    """Max-abs Jacobi residual over all basis triples."""
    worst = 0.0
    eye = np.eye(DIM)
    for i in range(DIM):
        for j in range(DIM):
            for k in range(DIM):
                r = (
                    bracket(bracket(eye[i], eye[j]), eye[k])
                    + bracket(bracket(eye[j], eye[k]), eye[i])
                    + bracket(bracket(eye[k], eye[i]), eye[j])
                )
                worst = max(worst, float(np.max(np.abs(r))))
    return worst
