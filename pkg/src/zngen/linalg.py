"""Self-contained linear algebra: Jacobi eigensolver, exact integer
characteristic polynomials, Kronecker products, multiset comparison.

Eigenvalues come from a cyclic Jacobi iteration on a copy of the input;
the rotation kernel is compiled (zngen._jacobi) with a pure-Python
fallback picked at import, overridable with ZN_PURE_PYTHON=1. Jacobi is
deliberate: the quotient matrices are tiny, determinism and high relative
accuracy matter, speed does not.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

if os.environ.get("ZN_PURE_PYTHON"):
    from . import _jacobi_py as _kernel

    BACKEND = "python"
else:
    try:
        from . import _jacobi as _kernel  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:  # extension not built
        from . import _jacobi_py as _kernel

        BACKEND = "python"


def backend_name() -> str:
    """Which Jacobi kernel got selected at import ("cython" or "python")."""
    return BACKEND


class JacobiConvergenceError(RuntimeError):
    def __init__(self, sweeps: int, residual: float):
        super().__init__(
            f"Jacobi did not converge after {sweeps} sweeps "
            f"(off-diagonal residual {residual:.3e})"
        )
        self.sweeps = sweeps
        self.residual = residual


@dataclass(frozen=True)
class SymMatrix:
    """Dense real symmetric matrix; the upper triangle is authoritative."""

    data: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.data, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"square matrix required, got shape {a.shape}")
        if not np.isfinite(a).all():
            raise ValueError("matrix entries must be finite")
        sym = np.triu(a) + np.triu(a, 1).T
        object.__setattr__(self, "data", sym)

    @property
    def order(self) -> int:
        return self.data.shape[0]


@dataclass(frozen=True)
class EigenResult:
    values: np.ndarray  # non-increasing
    sweeps: int
    off_diag_norm: float


def sym_eigenvalues(
    m: SymMatrix | np.ndarray, tol: float = 1e-12, max_sweeps: int = 100
) -> EigenResult:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi iteration.

    Iterates until the off-diagonal Frobenius mass is below tol times the
    Frobenius norm of the input; raises JacobiConvergenceError (carrying
    the residual) if the sweep cap is hit first. Deterministic for fixed
    input: rotations are applied in a fixed row-major pair order.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = m.data if isinstance(m, SymMatrix) else np.asarray(m, dtype=float)
    work = np.array(a, dtype=float, order="C", copy=True)
    norm = float(np.sqrt((work * work).sum()))
    target = tol * norm
    sweeps, off = _kernel.jacobi_sweeps(work, target, max_sweeps)
    if off > target and norm > 0:
        raise JacobiConvergenceError(sweeps, off)
    values = np.sort(np.diagonal(work))[::-1].copy()
    return EigenResult(values=values, sweeps=sweeps, off_diag_norm=float(off))


def char_poly_exact(m) -> tuple[int, ...]:
    """Exact monic characteristic polynomial of an integer matrix via the
    Faddeev-LeVerrier recurrence, returned as coefficients from x^n down
    to the constant term. Arbitrary-width integers throughout.
    """
    rows = [[int(x) for x in row] for row in m]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("square matrix required")
    if n > 64:
        raise ValueError(f"order {n} exceeds the supported cap 64")

    coeffs = [1]
    mk = [row[:] for row in rows]  # M_1 = A
    for k in range(1, n + 1):
        tr = sum(mk[i][i] for i in range(n))
        q, r = divmod(tr, k)
        if r:
            raise AssertionError("trace not divisible in Faddeev-LeVerrier step")
        c = -q
        coeffs.append(c)
        if k == n:
            break
        # M_{k+1} = A (M_k + c I)
        for i in range(n):
            mk[i][i] += c
        mk = [
            [sum(rows[i][l] * mk[l][j] for l in range(n)) for j in range(n)]
            for i in range(n)
        ]
    return tuple(coeffs)


def kron(a: SymMatrix | np.ndarray, b: SymMatrix | np.ndarray) -> SymMatrix:
    """Kronecker product with the usual block convention (a11*b top-left)."""
    am = a.data if isinstance(a, SymMatrix) else np.asarray(a, dtype=float)
    bm = b.data if isinstance(b, SymMatrix) else np.asarray(b, dtype=float)
    return SymMatrix(np.kron(am, bm))


def multiset_close(xs, ys, tol: float) -> bool:
    """Whether two real multisets agree pairwise within tol after sorting."""
    xs = sorted(float(x) for x in xs)
    ys = sorted(float(y) for y in ys)
    if len(xs) != len(ys):
        raise ValueError(f"multiset sizes differ: {len(xs)} vs {len(ys)}")
    return all(abs(x - y) <= tol for x, y in zip(xs, ys))
