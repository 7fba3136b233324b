# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: Nijenhuis components and norms.

Semantics mirror ``_kernels_py`` exactly; both factors of su(2) bracket
as cross products, so the tensor is assembled from explicit 3-vector
cross products instead of einsum contractions.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef inline void _bracket(const double* x, const double* y, double* out) nogil:
    out[0] = x[1] * y[2] - x[2] * y[1]
    out[1] = x[2] * y[0] - x[0] * y[2]
    out[2] = x[0] * y[1] - x[1] * y[0]
    out[3] = x[4] * y[5] - x[5] * y[4]
    out[4] = x[5] * y[3] - x[3] * y[5]
    out[5] = x[3] * y[4] - x[4] * y[3]


cdef inline void _matvec(const double* m, const double* v, double* out) nogil:
    cdef int r, c
    for r in range(6):
        out[r] = 0.0
        for c in range(6):
            out[r] += m[6 * r + c] * v[c]


cdef double _norm_sq(const double* jm) nogil:
    """Squared Nijenhuis norm over ordered index pairs."""
    cdef double ji[6]
    cdef double jj[6]
    cdef double ei[6]
    cdef double ej[6]
    cdef double t1[6]
    cdef double t2[6]
    cdef double b3[6]
    cdef double b4[6]
    cdef double t3[6]
    cdef double t4[6]
    cdef double acc = 0.0
    cdef double comp
    cdef int i, j, k
    for i in range(6):
        for k in range(6):
            ei[k] = 1.0 if k == i else 0.0
        for j in range(i + 1, 6):
            for k in range(6):
                ej[k] = 1.0 if k == j else 0.0
                ji[k] = jm[6 * k + i]
                jj[k] = jm[6 * k + j]
            _bracket(ji, jj, t1)
            _bracket(ei, ej, t2)
            _bracket(ei, jj, b3)
            _bracket(ji, ej, b4)
            _matvec(jm, b3, t3)
            _matvec(jm, b4, t4)
            for k in range(6):
                comp = t1[k] - t2[k] - t3[k] - t4[k]
                acc += comp * comp
    # unordered pairs counted once above; the full ordered sum doubles it
    return 2.0 * acc


def nijenhuis_components(cnp.ndarray[cnp.float64_t, ndim=2] j):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] jc = np.ascontiguousarray(j)
    cdef cnp.ndarray[cnp.float64_t, ndim=3] out = np.zeros((6, 6, 6))
    cdef double ji[6]
    cdef double jj[6]
    cdef double ei[6]
    cdef double ej[6]
    cdef double t1[6]
    cdef double t2[6]
    cdef double b3[6]
    cdef double b4[6]
    cdef double t3[6]
    cdef double t4[6]
    cdef double comp
    cdef int i, jx, k
    cdef const double* jm = <const double*> jc.data
    for i in range(6):
        for k in range(6):
            ei[k] = 1.0 if k == i else 0.0
        for jx in range(i + 1, 6):
            for k in range(6):
                ej[k] = 1.0 if k == jx else 0.0
                ji[k] = jm[6 * k + i]
                jj[k] = jm[6 * k + jx]
            _bracket(ji, jj, t1)
            _bracket(ei, ej, t2)
            _bracket(ei, jj, b3)
            _bracket(ji, ej, b4)
            _matvec(jm, b3, t3)
            _matvec(jm, b4, t4)
            for k in range(6):
                comp = t1[k] - t2[k] - t3[k] - t4[k]
                out[k, i, jx] = comp
                out[k, jx, i] = -comp
    return out


def nijenhuis_norm_sq(cnp.ndarray[cnp.float64_t, ndim=2] j):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] jc = np.ascontiguousarray(j)
    return _norm_sq(<const double*> jc.data)


def conjugated_norm_sq(cnp.ndarray[cnp.float64_t, ndim=2] q,
                       cnp.ndarray[cnp.float64_t, ndim=2] j_ref):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] qc = np.ascontiguousarray(q)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] rc = np.ascontiguousarray(j_ref)
    cdef double tmp[36]
    cdef double jm[36]
    cdef const double* qd = <const double*> qc.data
    cdef const double* rd = <const double*> rc.data
    cdef int r, c, k
    cdef double s
    # tmp = Q J_ref
    for r in range(6):
        for c in range(6):
            s = 0.0
            for k in range(6):
                s += qd[6 * r + k] * rd[6 * k + c]
            tmp[6 * r + c] = s
    # jm = tmp Q^T
    for r in range(6):
        for c in range(6):
            s = 0.0
            for k in range(6):
                s += tmp[6 * r + k] * qd[6 * c + k]
            jm[6 * r + c] = s
    return _norm_sq(jm)
