"""Nijenhuis tensor, its norm functional on Z, and integrability tests.

The squared norm sums (N^k_ij)^2 over all ordered index pairs.  The
closed-form law states that on Z the norm depends only on the lower
diagonal block:  |N|^2 = kappa (1 - c1^2 - c2^2 - c3^2),  with the
calibration constant kappa fixed once as |N|^2 of the factor-swapping
reference structure.  Under the conventions of this package the measured
value is kappa = 48 exactly (see the verification report for the
comparison against the literature normalization).
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import kernels
from .acs import ACS, Blocks, ank_reference_acs, blocks, hopf_acs
from .exceptions import DomainError, NotRotationError

DEFAULT_TOL = 1e-9


def nijenhuis(acs: ACS) -> np.ndarray:
    """Components N[k, i, j] of the Nijenhuis tensor on the basis."""
    return kernels.nijenhuis_components(acs.matrix)


def nijenhuis_norm_sq(acs: ACS) -> float:
    return kernels.nijenhuis_norm_sq(acs.matrix)


def nijenhuis_norm(acs: ACS) -> float:
    return float(np.sqrt(kernels.nijenhuis_norm_sq(acs.matrix)))


@lru_cache(maxsize=1)
def calibration_constant() -> float:
    """kappa = |N|^2 at the factor-swapping reference structure."""
    return nijenhuis_norm_sq(ank_reference_acs())


def max_norm() -> float:
    """sqrt(kappa): the global maximum of the norm functional on Z."""
    return float(np.sqrt(calibration_constant()))


def closed_form_norm(b: Blocks, kappa: float | None = None) -> float:
    """sqrt(kappa) * sqrt(1 - |c|^2) from the block decomposition."""
    if kappa is None:
        kappa = calibration_constant()
    c = b.c
    rest = 1.0 - float(c @ c)
    if rest < -1e-9:
        raise DomainError(f"1 - |c|^2 = {rest:.3e} < 0: not blocks of a valid structure")
    return float(np.sqrt(kappa * max(rest, 0.0)))


def cofactor_checks(b: Blocks) -> np.ndarray:
    """Residuals of the cofactor identity chain for the B block.

    Returns three values: (i) max-abs of B^T B - 1 - C^2, (ii) the trace
    identity |B^a|^2 = (det B)^2 tr((B^T B)^-1) (NaN when det B = 0, where
    the identity is undefined), (iii) |B^a|^2 against the second symmetric
    function of the eigenvalues of 1 + C^2.  B^a is the cofactor matrix.
    """
    bt_b = b.B.T @ b.B
    target = np.eye(3) + b.C @ b.C
    r1 = float(np.max(np.abs(bt_b - target)))

    cof = _cofactor_matrix(b.B)
    cof_sq = float(np.sum(cof * cof))
    det = float(np.linalg.det(b.B))
    if abs(det) > 1e-12:
        r2 = abs(cof_sq - det * det * float(np.trace(np.linalg.inv(bt_b))))
    else:
        r2 = float("nan")

    lam = np.linalg.eigvalsh(target)
    sym2 = float(lam[0] * lam[1] + lam[1] * lam[2] + lam[0] * lam[2])
    r3 = abs(cof_sq - sym2)
    return np.array([r1, r2, r3])


def _cofactor_matrix(m: np.ndarray) -> np.ndarray:
    out = np.empty((3, 3))
    for i in range(3):
        for j in range(3):
            minor = np.delete(np.delete(m, i, axis=0), j, axis=1)
            out[i, j] = (-1.0) ** (i + j) * (minor[0, 0] * minor[1, 1] - minor[0, 1] * minor[1, 0])
    return out


def is_integrable(acs: ACS, tol: float = DEFAULT_TOL) -> bool:
    """Vanishing Nijenhuis tensor within tolerance."""
    return nijenhuis_norm(acs) < tol


def integrable_acs(o1, o2) -> ACS:
    """Conjugate of the integrable reference by block rotations diag(O1, O2).

    Every integrable member of Z arises this way, so the family doubles as
    a sampler for the zero set of the norm functional.
    """
    q = _block_rotation(o1, o2)
    return hopf_acs().conjugate(q)


def _block_rotation(o1, o2) -> np.ndarray:
    q = np.zeros((6, 6))
    for off, o in ((0, o1), (3, o2)):
        o = np.asarray(o, dtype=float)
        if o.shape != (3, 3):
            raise NotRotationError("blocks must be 3x3")
        if np.max(np.abs(o.T @ o - np.eye(3))) > DEFAULT_TOL:
            raise NotRotationError("block is not orthogonal")
        if np.linalg.det(o) < 0:
            raise NotRotationError("block has determinant -1")
        q[off : off + 3, off : off + 3] = o
    return q


def norm_law_residual(acs: ACS, kappa: float | None = None) -> float:
    """|  |N|^2 / kappa - (1 - |c|^2)  | for one structure."""
    if kappa is None:
        kappa = calibration_constant()
    b = blocks(acs)
    return abs(nijenhuis_norm_sq(acs) / kappa - (1.0 - float(b.c @ b.c)))
