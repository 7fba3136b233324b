"""Two-way correspondence between Z and complex projective 3-space.

The bridge is the identification of the bivector space of C^4 with the
complexified dual algebra.  With (v^0..v^3) a unitary basis of C^4 and
bivectors ordered [01, 02, 03, 23, 31, 12]:

    2 v0^v1 = e1 + i e2      2 v2^v3 = e1 - i e2
    2 v0^v2 = e3 + i e4      2 v3^v1 = e3 - i e4
    2 v0^v3 = e5 + i e6      2 v1^v2 = e5 - i e6

A point [u] corresponds to the 3-space V_u = {u ^ v} of bivectors; its
image W under the identification is the +i eigenspace of the covector
action of the matching structure (the covector action is the transpose
of the stored vector action).  Given J instead, W is spanned by the
vectors  alpha - i J^T alpha,  and [u] is recovered as the unique
direction annihilated by wedging against the bivectors of W.

Convention pinning: with the basis above and the phase normalization
below, the integrable reference structure maps to [1, 0, 0, -1] and the
factor-swapping reference to [1, 1, -1, 1]; the four vertex structures
map to the unit coordinate points.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .acs import ACS
from .exceptions import DegenerateSubspaceError, KernelRankError

#: ordered bivector index pairs
BIVECTOR_PAIRS: tuple[tuple[int, int], ...] = ((0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2))


@dataclass(frozen=True)
class CP3Point:
    """Homogeneous complex 4-tuple; equality is projective."""

    coords: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coords, dtype=complex).copy()
        if c.shape != (4,) or not np.all(np.isfinite(c)):
            raise ValueError("expected 4 finite complex coordinates")
        if np.max(np.abs(c)) == 0.0:
            raise ValueError("homogeneous coordinates cannot all vanish")
        c.setflags(write=False)
        object.__setattr__(self, "coords", c)

    def normalized(self) -> "CP3Point":
        """Unit norm, largest-modulus coordinate real positive (ties: lowest index)."""
        c = self.coords / np.linalg.norm(self.coords)
        mags = np.abs(c)
        k = int(np.argmax(mags > np.max(mags) - 1e-12))
        return CP3Point(c * (abs(c[k]) / c[k]))

    def projective_residual(self, other: "CP3Point") -> float:
        """1 - |<p, q>| / (|p| |q|); zero exactly on projective equality."""
        p = self.coords
        q = other.coords
        return float(1.0 - abs(np.vdot(p, q)) / (np.linalg.norm(p) * np.linalg.norm(q)))

    def projective_distance(self, other: "CP3Point") -> float:
        """Sine of the Fubini-Study angle."""
        r = self.projective_residual(other)
        return float(np.sqrt(max(0.0, 1.0 - (1.0 - r) ** 2)))

    def isclose(self, other: "CP3Point", tol: float = 1e-9) -> bool:
        return self.projective_residual(other) <= tol


def wedge4(u, v) -> np.ndarray:
    """Bivector coefficients of u ^ v over BIVECTOR_PAIRS."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    return np.array([u[a] * v[b] - u[b] * v[a] for a, b in BIVECTOR_PAIRS])


def identify(bivector) -> np.ndarray:
    """Complex covector matching a bivector under the identification table."""
    b01, b02, b03, b23, b31, b12 = np.asarray(bivector, dtype=complex)
    return 0.5 * np.array(
        [
            b01 + b23,
            1j * (b01 - b23),
            b02 + b31,
            1j * (b02 - b31),
            b03 + b12,
            1j * (b03 - b12),
        ]
    )


def identify_inverse(w) -> np.ndarray:
    """Bivector coefficients matching a complex covector."""
    w1, w2, w3, w4, w5, w6 = np.asarray(w, dtype=complex)
    return np.array(
        [
            w1 - 1j * w2,
            w3 - 1j * w4,
            w5 - 1j * w6,
            w1 + 1j * w2,
            w3 + 1j * w4,
            w5 + 1j * w6,
        ]
    )


def cp3_to_acs(point: CP3Point | np.ndarray) -> ACS:
    """Structure whose covector-action +i eigenspace is the image of V_u."""
    if not isinstance(point, CP3Point):
        point = CP3Point(np.asarray(point, dtype=complex))
    u = point.coords / np.linalg.norm(point.coords)
    # u ^ v^a for the three a away from the dominant coordinate span V_u
    a_star = int(np.argmax(np.abs(u)))
    basis4 = np.eye(4, dtype=complex)
    ws = [identify(wedge4(u, basis4[a])) for a in range(4) if a != a_star]

    # solve I* alpha_k = -beta_k, I* beta_k = alpha_k on the real 6-space
    m = np.empty((6, 6))
    t = np.empty((6, 6))
    for k, w in enumerate(ws):
        m[:, 2 * k] = w.real
        m[:, 2 * k + 1] = w.imag
        t[:, 2 * k] = -w.imag
        t[:, 2 * k + 1] = w.real
    if abs(np.linalg.det(m)) < 1e-12:
        raise DegenerateSubspaceError("real and imaginary parts do not span the dual space")
    i_star = t @ np.linalg.inv(m)
    return ACS.validate(i_star.T)


def acs_to_cp3(acs: ACS) -> CP3Point:
    """Inverse of :func:`cp3_to_acs`; output is phase-normalized."""
    i_star = acs.matrix.T
    eye = np.eye(6)
    # +i eigenspace of the covector action, spanned by alpha - i I* alpha
    spanning = [eye[:, k] - 1j * (i_star @ eye[:, k]) for k in range(6)]
    basis: list[np.ndarray] = []
    for w in spanning:
        for b in basis:
            w = w - np.vdot(b, w) * b
        nrm = np.linalg.norm(w)
        if nrm > 1e-8:
            basis.append(w / nrm)
        if len(basis) == 3:
            break
    if len(basis) != 3:
        raise DegenerateSubspaceError("eigenspace did not have complex dimension 3")

    rows = []
    for w in basis:
        b01, b02, b03, b23, b31, b12 = identify_inverse(w)
        # components of u ^ beta over v^{012}, v^{013}, v^{023}, v^{123}
        rows.append([b12, -b02, b01, 0.0])
        rows.append([-b31, -b03, 0.0, b01])
        rows.append([b23, 0.0, -b03, b02])
        rows.append([0.0, b23, b31, b12])
    kernel_map = np.array(rows, dtype=complex)
    _, sing, vh = np.linalg.svd(kernel_map)
    if sing[2] < 1e-6 or sing[3] > 1e-8 * max(1.0, sing[0]):
        raise KernelRankError(
            f"wedge annihilator is not one-dimensional (singular values {sing})"
        )
    u = np.conj(vh[-1])
    return CP3Point(u).normalized()


def tetra_coords(point: CP3Point) -> np.ndarray:
    """Barycentric tetrahedron coordinates |u_a|^2 / sum |u_b|^2."""
    mags = np.abs(point.coords) ** 2
    return mags / mags.sum()
