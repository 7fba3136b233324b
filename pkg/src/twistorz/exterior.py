"""Exterior kernel for 2-forms on an oriented Euclidean 6-space.

Covectors e^1..e^6 are stored as length-6 coefficient arrays (0-based
indices 0..5).  A :class:`TwoForm` stores the 15 coefficients over the
basis e^i ^ e^j, i < j, in lexicographic pair order.  The inner product
on 2-forms makes that basis orthonormal:

    <a, b> = sum_{i<j} a_ij b_ij

which keeps the four fundamental vertex forms at squared norm 3 and makes
polar-set membership an exact zero test.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

DIM = 6

#: ordered index pairs (i, j), i < j, for the 15 basis 2-forms
PAIRS: tuple[tuple[int, int], ...] = tuple(combinations(range(DIM), 2))
PAIR_INDEX: dict[tuple[int, int], int] = {p: k for k, p in enumerate(PAIRS)}

#: ordered index quadruples for the 15 basis 4-forms
QUADS: tuple[tuple[int, int, int, int], ...] = tuple(combinations(range(DIM), 4))


def covector(coeffs) -> np.ndarray:
    a = np.asarray(coeffs, dtype=float)
    if a.shape != (DIM,) or not np.all(np.isfinite(a)):
        raise ValueError("covector needs 6 finite coefficients")
    return a


def basis_covector(i: int) -> np.ndarray:
    e = np.zeros(DIM)
    e[i] = 1.0
    return e


@dataclass(frozen=True)
class TwoForm:
    """Antisymmetric bilinear form, 15 coefficients over e^i ^ e^j, i < j."""

    coeffs: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.coeffs, dtype=float)
        if a.shape != (len(PAIRS),) or not np.all(np.isfinite(a)):
            raise ValueError("TwoForm needs 15 finite coefficients")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "coeffs", a)

    @classmethod
    def zero(cls) -> "TwoForm":
        return cls(np.zeros(len(PAIRS)))

    @classmethod
    def basis(cls, i: int, j: int) -> "TwoForm":
        """e^i ^ e^j for i != j (antisymmetric in the arguments)."""
        c = np.zeros(len(PAIRS))
        if i == j:
            raise ValueError("basis 2-form needs distinct indices")
        sign = 1.0
        if i > j:
            i, j, sign = j, i, -1.0
        c[PAIR_INDEX[i, j]] = sign
        return cls(c)

    @classmethod
    def from_pairs(cls, entries: dict[tuple[int, int], float]) -> "TwoForm":
        c = np.zeros(len(PAIRS))
        for (i, j), v in entries.items():
            if i < j:
                c[PAIR_INDEX[i, j]] += v
            else:
                c[PAIR_INDEX[j, i]] -= v
        return cls(c)

    @classmethod
    def from_matrix(cls, m) -> "TwoForm":
        """Build from an antisymmetric coefficient matrix m[i, j] = w(e_i, e_j)."""
        m = np.asarray(m, dtype=float)
        if m.shape != (DIM, DIM):
            raise ValueError("expected a 6x6 matrix")
        if np.max(np.abs(m + m.T)) > 1e-12 * max(1.0, np.max(np.abs(m))):
            raise ValueError("matrix is not antisymmetric")
        return cls(np.array([m[i, j] for i, j in PAIRS]))

    def matrix(self) -> np.ndarray:
        m = np.zeros((DIM, DIM))
        for k, (i, j) in enumerate(PAIRS):
            m[i, j] = self.coeffs[k]
            m[j, i] = -self.coeffs[k]
        return m

    def coeff(self, i: int, j: int) -> float:
        if i == j:
            return 0.0
        if i < j:
            return float(self.coeffs[PAIR_INDEX[i, j]])
        return -float(self.coeffs[PAIR_INDEX[j, i]])

    def inner(self, other: "TwoForm") -> float:
        return float(self.coeffs @ other.coeffs)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def evaluate(self, x, y) -> float:
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        s = 0.0
        for k, (i, j) in enumerate(PAIRS):
            s += self.coeffs[k] * (x[i] * y[j] - x[j] * y[i])
        return float(s)

    def allclose(self, other: "TwoForm", tol: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self.coeffs - other.coeffs)) <= tol)

    def __add__(self, other: "TwoForm") -> "TwoForm":
        return TwoForm(self.coeffs + other.coeffs)

    def __sub__(self, other: "TwoForm") -> "TwoForm":
        return TwoForm(self.coeffs - other.coeffs)

    def __neg__(self) -> "TwoForm":
        return TwoForm(-self.coeffs)

    def __mul__(self, s: float) -> "TwoForm":
        return TwoForm(self.coeffs * float(s))

    __rmul__ = __mul__


def wedge(a, b) -> TwoForm:
    """Wedge product of two covectors: (a^b)(X, Y) = a(X)b(Y) - a(Y)b(X)."""
    a = covector(a)
    b = covector(b)
    return TwoForm(np.array([a[i] * b[j] - a[j] * b[i] for i, j in PAIRS]))


def form_inner(a: TwoForm, b: TwoForm) -> float:
    """Inner product sum_{i<j} a_ij b_ij (basis 2-forms orthonormal)."""
    return a.inner(b)


def eval_form(w: TwoForm, x, y) -> float:
    """Evaluate w on a pair of vectors."""
    return w.evaluate(x, y)


def wedge_two_forms(a: TwoForm, b: TwoForm) -> np.ndarray:
    """Coefficients of a ^ b over the 15 basis 4-forms (QUADS order).

    Used for decomposability: a 2-form s is a single wedge e ^ f
    exactly when s ^ s = 0.
    """
    out = np.zeros(len(QUADS))
    for q, quad in enumerate(QUADS):
        i, j, k, l = quad
        out[q] = (
            a.coeff(i, j) * b.coeff(k, l)
            - a.coeff(i, k) * b.coeff(j, l)
            + a.coeff(i, l) * b.coeff(j, k)
            + a.coeff(k, l) * b.coeff(i, j)
            - a.coeff(j, l) * b.coeff(i, k)
            + a.coeff(j, k) * b.coeff(i, l)
        )
    return out


def decomposability_residual(w: TwoForm) -> float:
    """Max-abs coefficient of w ^ w; zero exactly for decomposable forms."""
    return float(np.max(np.abs(wedge_two_forms(w, w))))
