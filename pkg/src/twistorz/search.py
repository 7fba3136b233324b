"""Numerical extremization of the Nijenhuis norm over Z.

The space is swept by conjugation, J = Q J_ref Q^T with Q in SO(6);
steepest ascent/descent moves Q by exponentials of skew matrices.  The
gradient comes from central finite differences along the 15 coordinate
rotations, so the search never touches the closed-form norm law and its
outcome is an independent confirmation of it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from . import kernels
from .acs import ACS, _vertex_matrix, haar_rotation

FD_STEP = 1e-6
INITIAL_STEP = 0.1
MIN_STEP = 1e-10
GRAD_TOL = 1e-8

#: indices of the 15 coordinate-plane rotations of SO(6)
_PLANES: tuple[tuple[int, int], ...] = tuple(
    (p, q) for p in range(6) for q in range(p + 1, 6)
)


@dataclass
class SearchReport:
    best_value: float
    best_acs: ACS
    iterations: int
    restarts: int
    converged: bool


def _givens(p: int, q: int, h: float) -> np.ndarray:
    r = np.eye(6)
    c, s = np.cos(h), np.sin(h)
    r[p, p] = c
    r[q, q] = c
    r[p, q] = s
    r[q, p] = -s
    return r


def _objective(q: np.ndarray, j_ref: np.ndarray) -> float:
    return float(np.sqrt(kernels.conjugated_norm_sq(q, j_ref)))


def _ascend(q: np.ndarray, j_ref: np.ndarray, sign: float, max_iters: int,
            on_iterate=None):
    """Steepest ascent of sign * norm; returns (Q, value, iters, converged)."""
    f = sign * _objective(q, j_ref)
    step = INITIAL_STEP
    if on_iterate is not None:
        on_iterate(q @ j_ref @ q.T, sign * f)
    for it in range(1, max_iters + 1):
        grad = np.empty(len(_PLANES))
        for k, (p, r) in enumerate(_PLANES):
            f_plus = sign * _objective(q @ _givens(p, r, +FD_STEP), j_ref)
            f_minus = sign * _objective(q @ _givens(p, r, -FD_STEP), j_ref)
            grad[k] = (f_plus - f_minus) / (2.0 * FD_STEP)
        grad_norm = float(np.linalg.norm(grad))
        if grad_norm < GRAD_TOL:
            return q, f, it, True
        direction = np.zeros((6, 6))
        for k, (p, r) in enumerate(_PLANES):
            direction[p, r] = grad[k] / grad_norm
            direction[r, p] = -grad[k] / grad_norm
        moved = False
        while step >= MIN_STEP:
            q_new = q @ expm(step * direction)
            f_new = sign * _objective(q_new, j_ref)
            if f_new > f:
                q, f = q_new, f_new
                step *= 2.0
                moved = True
                if on_iterate is not None:
                    on_iterate(q @ j_ref @ q.T, sign * f)
                break
            step *= 0.5
        if not moved:
            return q, f, it, True  # step collapsed below MIN_STEP
    return q, f, max_iters, False


def _run(seed: int, restarts: int, max_iters: int, sign: float,
         initial: ACS | None, on_iterate=None) -> SearchReport:
    if restarts < 1:
        raise ValueError("need at least one restart")
    best_f = -np.inf
    best_q = np.eye(6)
    best_ref = _vertex_matrix(0)
    total_iters = 0
    any_converged = False
    for rs in range(restarts):
        if rs == 0 and initial is not None:
            q = np.eye(6)
            j_ref = initial.matrix
        else:
            rng = np.random.default_rng([seed, rs])
            q = haar_rotation(6, rng)
            j_ref = _vertex_matrix(0)
        q, f, iters, converged = _ascend(q, j_ref, sign, max_iters, on_iterate)
        total_iters += iters
        any_converged = any_converged or converged
        if f > best_f:
            best_f, best_q, best_ref = f, q, j_ref
    best = ACS(best_q @ best_ref @ best_q.T)
    return SearchReport(
        best_value=float(np.sqrt(kernels.nijenhuis_norm_sq(best.matrix))),
        best_acs=best,
        iterations=total_iters,
        restarts=restarts,
        converged=any_converged,
    )


def maximize(seed: int, restarts: int = 20, max_iters: int = 500,
             initial: ACS | None = None, on_iterate=None) -> SearchReport:
    """Best maximizer over restarts; restart 0 may be pinned to ``initial``.

    ``on_iterate(matrix, value)`` is called at every accepted step, which
    lets callers audit the trajectory (membership, monotonicity, the
    closed-form law) without re-running the search.
    """
    return _run(seed, restarts, max_iters, sign=+1.0, initial=initial,
                on_iterate=on_iterate)


def minimize(seed: int, restarts: int = 20, max_iters: int = 500,
             initial: ACS | None = None, on_iterate=None) -> SearchReport:
    """Best minimizer over restarts (the floor of the functional is zero)."""
    return _run(seed, restarts, max_iters, sign=-1.0, initial=initial,
                on_iterate=on_iterate)
