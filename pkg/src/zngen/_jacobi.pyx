# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cyclic Jacobi rotations for dense symmetric matrices (compiled core).

Hot kernel behind linalg.sym_eigenvalues. The pure-Python twin in
_jacobi_py.py implements the same sweep order and rotation formulas; one
of the two is selected at import time.
"""

from libc.math cimport fabs, sqrt


def off_diagonal_norm(double[:, ::1] a):
    """Frobenius norm of the off-diagonal part."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j
    cdef double s = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            s += 2.0 * a[i, j] * a[i, j]
    return sqrt(s)


def jacobi_sweeps(double[:, ::1] a, double off_target, int max_sweeps):
    """Rotate a in place until the off-diagonal Frobenius norm drops to
    off_target or max_sweeps is exhausted. Returns (sweeps, off_norm).

    One sweep visits every (p, q) pair with p < q in row-major order and
    applies the symmetric Schur rotation that zeroes a[p, q].
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, k
    cdef int sweep
    cdef double apq, app, aqq, tau, t, c, s, akp, akq, off

    off = off_diagonal_norm(a)
    for sweep in range(max_sweeps):
        if off <= off_target:
            return sweep, off
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[p, k] = a[k, p]
                    a[k, q] = s * akp + c * akq
                    a[q, k] = a[k, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
        off = off_diagonal_norm(a)
    return max_sweeps, off
