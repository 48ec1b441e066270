"""Pure-Python twin of the compiled Jacobi kernel.

Same sweep order and rotation formulas as _jacobi.pyx; selected at import
when the extension is unavailable or ZN_PURE_PYTHON is set. Fine for
quotient-sized matrices, slow for the dense oracle sizes.
"""

from __future__ import annotations

from math import sqrt


def off_diagonal_norm(a) -> float:
    n = a.shape[0]
    s = 0.0
    for i in range(n):
        row = a[i]
        for j in range(i + 1, n):
            s += 2.0 * row[j] * row[j]
    return sqrt(s)


def jacobi_sweeps(a, off_target: float, max_sweeps: int):
    n = a.shape[0]
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
