"""Covariant derivative of the fundamental form and the ANK membership test.

With left-invariant data the directional term drops out and

    (nabla_X w)(Y, Z) = -1/2 w([X, Y], Z) - 1/2 w(Y, [X, Z]).

A structure is nearly Kaehler when (nabla_X w)(X, Y) = 0 for all X, Y;
the defect below is the norm of the basis symmetrization of that
expression, which vanishes exactly on nearly Kaehler structures because
the condition is quadratic in X.

ANK structures (blocks A = C = 0, equivalently the maximizers of the
Nijenhuis norm) satisfy the identity on basis directions but not for
mixed vectors; they are not nearly Kaehler.
"""

from __future__ import annotations

import numpy as np

from .acs import ACS, acs_from_form, blocks, fundamental_form
from .algebra import STRUCTURE_CONSTANTS, bracket
from .exceptions import NotInZError, WrongOrientationError
from .exterior import TwoForm, basis_covector, wedge

DEFAULT_TOL = 1e-9


def nabla_omega(acs: ACS, x, y, z) -> float:
    """(nabla_X w)(Y, Z) for the fundamental form of the structure."""
    om = acs.matrix.T  # coefficient matrix of the fundamental form
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    z = np.asarray(z, dtype=float)
    return float(-0.5 * (bracket(x, y) @ om @ z) - 0.5 * (y @ om @ bracket(x, z)))


def _nabla_tensor(acs: ACS) -> np.ndarray:
    """D[i, j, k] = (nabla_{e_i} w)(e_j, e_k), assembled in one shot."""
    om = acs.matrix.T
    # w([e_i, e_j], e_k) = c[m, i, j] om[m, k];  w(e_j, [e_i, e_k]) = om[j, m] c[m, i, k]
    first = np.einsum("mij,mk->ijk", STRUCTURE_CONSTANTS, om)
    second = np.einsum("jm,mik->ijk", om, STRUCTURE_CONSTANTS)
    return -0.5 * (first + second)


def nk_defect(acs: ACS) -> float:
    """Norm of S(e_i, e_j; e_k) = (nabla_{e_i} w)(e_j, e_k) + (nabla_{e_j} w)(e_i, e_k).

    Zero exactly when the structure is nearly Kaehler.
    """
    d = _nabla_tensor(acs)
    s = d + d.transpose(1, 0, 2)
    return float(np.sqrt(np.sum(s * s)))


def is_ank(acs: ACS, tol: float = DEFAULT_TOL) -> bool:
    """Blocks A and C vanish: the structure swaps the two su(2) factors."""
    b = blocks(acs)
    return float(np.linalg.norm(b.A)) < tol and float(np.linalg.norm(b.C)) < tol


def ank_form(f1, f2, f3, tol: float = DEFAULT_TOL) -> ACS:
    """Structure with fundamental form e^4 ^ f1 + e^5 ^ f2 + e^6 ^ f3.

    The fi must be an orthonormal triple inside span(e^1, e^2, e^3); the
    resulting structure has blocks A = C = 0.  Orientation restricts the
    triple to frames with determinant +1; frames with determinant -1 are
    rejected rather than silently sign-flipped.
    """
    fs = [np.asarray(f, dtype=float) for f in (f1, f2, f3)]
    frame = np.vstack(fs)
    if np.max(np.abs(frame[:, 3:6])) > tol:
        raise NotInZError("covectors must lie in span(e^1, e^2, e^3)")
    gram = frame[:, 0:3] @ frame[:, 0:3].T
    if np.max(np.abs(gram - np.eye(3))) > tol:
        raise NotInZError("covector triple is not orthonormal")
    if np.linalg.det(frame[:, 0:3]) < 0:
        raise WrongOrientationError(
            "covector frame has determinant -1; the assembled form leaves Z"
        )
    w = TwoForm.zero()
    for i, f in enumerate(fs):
        w = w + wedge(basis_covector(3 + i), f)
    return acs_from_form(w, tol=tol)
