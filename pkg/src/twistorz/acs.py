"""The twistor space Z of orthogonal, orientation-compatible almost
complex structures on su(2) + su(2).

Convention: an :class:`ACS` stores the VECTOR action J (column i is
J e_i).  The induced action on covectors is the transpose, which equals
-J for members of Z.  The fundamental form w(X, Y) = g(JX, Y) then has
coefficient matrix J^T, so structures and forms convert by transposition.

The orientation of Z is defined by the reference structure ``vertex_acs(0)``
(vector action e1 -> e2, e3 -> e4, e5 -> e6); for it the adapted-frame
determinant sign is -1, and validation requires every member to match.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import (
    DegenerateFrameError,
    NotComplexError,
    NotInZError,
    NotOrthogonalError,
    WrongOrientationError,
)
from .exterior import TwoForm

DIM = 6
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class ACS:
    """Validated almost complex structure; construct via :meth:`validate`.

    The plain constructor trusts its input (used on hot paths where the
    matrix is a conjugate of a validated one); everything user-facing goes
    through :meth:`validate`.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float).copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def validate(cls, matrix, tol: float = DEFAULT_TOL) -> "ACS":
        """Check J^2 = -1, orthogonality and orientation; raise otherwise."""
        m = np.asarray(matrix, dtype=float)
        if m.shape != (DIM, DIM) or not np.all(np.isfinite(m)):
            raise NotComplexError("expected a finite 6x6 matrix")
        r_complex = float(np.max(np.abs(m @ m + np.eye(DIM))))
        if r_complex > tol:
            raise NotComplexError("J^2 != -identity", r_complex)
        r_orth = float(np.max(np.abs(m.T @ m - np.eye(DIM))))
        if r_orth > tol:
            raise NotOrthogonalError("J^T J != identity", r_orth)
        if orientation_sign(m) != REFERENCE_ORIENTATION:
            raise WrongOrientationError(
                "J induces the opposite orientation from the reference structure"
            )
        # project onto exact antisymmetry (members of Z satisfy J^T = -J);
        # this makes the block decomposition reassemble bit-for-bit
        return cls(0.5 * (m - m.T))

    def apply(self, x) -> np.ndarray:
        return self.matrix @ np.asarray(x, dtype=float)

    def conjugate(self, q) -> "ACS":
        """Q J Q^T for Q in SO(6); stays in Z, no re-validation."""
        q = np.asarray(q, dtype=float)
        return ACS(q @ self.matrix @ q.T)

    def residuals(self) -> dict[str, float]:
        m = self.matrix
        return {
            "complex": float(np.max(np.abs(m @ m + np.eye(DIM)))),
            "orthogonal": float(np.max(np.abs(m.T @ m - np.eye(DIM)))),
        }


def orientation_sign(matrix, tol: float = 1e-6) -> int:
    """Sign of det[X1 X2 X3 JX1 JX2 JX3] for an adapted frame.

    Well defined for any J with J^2 = -1: two adapted frames differ by a
    complex-linear change of basis, whose real determinant is positive.
    """
    m = np.asarray(matrix, dtype=float)
    cols: list[np.ndarray] = []
    eye = np.eye(DIM)
    for k in range(DIM):
        if len(cols) == DIM:
            break
        cand = eye[:, k]
        trial = np.column_stack(cols + [cand, m @ cand])
        # accept candidate if the partial frame stays well-conditioned
        if np.linalg.matrix_rank(trial, tol=tol) == trial.shape[1]:
            cols.append(cand)
            cols.append(m @ cand)
    if len(cols) != DIM:
        raise DegenerateFrameError("no adapted frame found")
    x_part = cols[0::2]
    jx_part = cols[1::2]
    det = float(np.linalg.det(np.column_stack(x_part + jx_part)))
    if abs(det) < 1e-12:
        raise DegenerateFrameError("adapted frame is numerically singular")
    return 1 if det > 0 else -1


def _vertex_matrix(k: int) -> np.ndarray:
    signs = {
        0: (1.0, 1.0, 1.0),
        1: (1.0, -1.0, -1.0),
        2: (-1.0, 1.0, -1.0),
        3: (-1.0, -1.0, 1.0),
    }[k]
    m = np.zeros((DIM, DIM))
    for (i, j), s in zip(((0, 1), (2, 3), (4, 5)), signs):
        m[j, i] = s
        m[i, j] = -s
    return m


#: orientation sign of the reference structure (measured: -1)
REFERENCE_ORIENTATION: int = orientation_sign(_vertex_matrix(0))


def vertex_acs(k: int) -> ACS:
    """The four tetrahedron-vertex structures (vector actions e1 -> +-e2,
    e3 -> +-e4, e5 -> +-e6 with signs +++ / +-- / -+- / --+)."""
    if k not in (0, 1, 2, 3):
        raise ValueError("vertex index must be 0..3")
    return ACS(_vertex_matrix(k))


def hopf_acs() -> ACS:
    """Integrable reference structure: e1 -> e4, e2 -> e3, e5 -> e6."""
    m = np.zeros((DIM, DIM))
    for i, j in ((0, 3), (1, 2), (4, 5)):
        m[j, i] = 1.0
        m[i, j] = -1.0
    return ACS(m)


def ank_reference_acs() -> ACS:
    """Factor-swapping structure with blocks A = C = 0, B = identity.

    Vector action e_i -> -e_{i+3}, e_{i+3} -> e_i; its covector action is
    the block matrix (0 -E; E 0).
    """
    e3 = np.eye(3)
    z3 = np.zeros((3, 3))
    return ACS(np.block([[z3, e3], [-e3, z3]]))


def fundamental_form(acs: ACS) -> TwoForm:
    """w(X, Y) = g(JX, Y); coefficient matrix is J^T."""
    return TwoForm.from_matrix(acs.matrix.T)


def acs_from_form(w: TwoForm, tol: float = DEFAULT_TOL) -> ACS:
    """Inverse of :func:`fundamental_form`; raises NotInZError when the
    induced endomorphism fails validation."""
    try:
        return ACS.validate(w.matrix().T, tol=tol)
    except NotInZError:
        raise
    except Exception as exc:  # pragma: no cover - defensive
        raise NotInZError(f"form does not induce a twistor-space member: {exc}")


@dataclass(frozen=True)
class Blocks:
    """3x3 blocks of the vector action, J = (A B; -B^T C).

    A and C are antisymmetric with entry layout
    ``[[0, a1, a2], [-a1, 0, a3], [-a2, -a3, 0]]``; B is b1..b9 row-major.
    """

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray

    @property
    def a(self) -> np.ndarray:
        return np.array([self.A[0, 1], self.A[0, 2], self.A[1, 2]])

    @property
    def c(self) -> np.ndarray:
        return np.array([self.C[0, 1], self.C[0, 2], self.C[1, 2]])

    def reassemble(self) -> np.ndarray:
        return np.block([[self.A, self.B], [-self.B.T, self.C]])


def blocks(acs: ACS) -> Blocks:
    m = acs.matrix
    return Blocks(A=m[0:3, 0:3].copy(), B=m[0:3, 3:6].copy(), C=m[3:6, 3:6].copy())


def constraint_residuals(b: Blocks) -> np.ndarray:
    """The 16 scalar conditions necessary for J^2 = -1.

    Six norm equations (rows of B paired with a-entries, columns of B
    paired with c-entries), the nine entries of AB + BC = 0, and the
    derived identity |a|^2 = |c|^2.  Returned as absolute residuals.
    """
    a1, a2, a3 = b.a
    c1, c2, c3 = b.c
    r = b.B  # rows r[0], r[1], r[2]
    col = b.B.T

    norms = [
        a1 * a1 + a2 * a2 + r[0] @ r[0] - 1.0,
        a1 * a1 + a3 * a3 + r[1] @ r[1] - 1.0,
        a2 * a2 + a3 * a3 + r[2] @ r[2] - 1.0,
        c1 * c1 + c2 * c2 + col[0] @ col[0] - 1.0,
        c1 * c1 + c3 * c3 + col[1] @ col[1] - 1.0,
        c2 * c2 + c3 * c3 + col[2] @ col[2] - 1.0,
    ]
    ortho = (b.A @ b.B + b.B @ b.C).flatten()
    transfer = [a1 * a1 + a2 * a2 + a3 * a3 - (c1 * c1 + c2 * c2 + c3 * c3)]
    return np.abs(np.concatenate([norms, ortho, transfer]))


def haar_rotation(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-uniform element of SO(dim) via QR with sign correction."""
    a = rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(a)
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def random_acs(seed) -> ACS:
    """Q J_ref Q^T with Q Haar-uniform in SO(6); deterministic per seed."""
    rng = np.random.default_rng(seed)
    q = haar_rotation(DIM, rng)
    return ACS.validate(q @ _vertex_matrix(0) @ q.T)
