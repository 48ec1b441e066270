"""Quotient matrices of the generating graph and their spectra.

The divisor-class partition is equitable, so an order-2^r quotient matrix
carries all eigenvalue information that is not forced by the block
structure: the adjacency spectrum is eig(quotient) plus -1 repeated
phi(n)-1 times plus 0 repeated a_i - 1 times per non-unit class, and the
Laplacian analogue swaps in n and the class degrees. A symmetric matrix
similar to the quotient (diagonal conjugation by the square roots of the
class sizes) is what actually gets eigensolved.

Entries of the symmetric matrices are +-sqrt(integer); every matrix here
carries its signed squared entries exactly, so the radical-scaling laws
(matrices for n are n/n0 times those for n0) are checked in exact integer
arithmetic, no floating point involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, sqrt

import numpy as np

from .graph import degree_of_class
from .numth import FactoredInt, factorize
from .partition import build_partition
from .linalg import SymMatrix, char_poly_exact, sym_eigenvalues

QUOTIENT_ORDER_CAP = 64


@dataclass(frozen=True)
class RootMatrix:
    """Symmetric matrix whose entries are sign(v)*sqrt(|v|) for the stored
    integer grid v. Equality and scaling comparisons stay exact."""

    signed_squares: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.signed_squares)

    def as_array(self) -> np.ndarray:
        n = self.order
        out = np.empty((n, n), dtype=float)
        for i, row in enumerate(self.signed_squares):
            for j, v in enumerate(row):
                out[i, j] = sqrt(v) if v >= 0 else -sqrt(-v)
        return out

    def as_sym(self) -> SymMatrix:
        return SymMatrix(self.as_array())

    def scaled_squares(self, factor: int) -> "RootMatrix":
        """Signed squares of factor * self (entries scale by factor, so
        squares scale by factor**2)."""
        f2 = factor * factor
        return RootMatrix(
            tuple(tuple(f2 * v for v in row) for row in self.signed_squares)
        )


def _entry_sq(values: list[list[int]]) -> RootMatrix:
    return RootMatrix(tuple(tuple(row) for row in values))


@dataclass(frozen=True)
class QuotientMatrices:
    """Every quotient-level matrix for one n, indexed by the canonical
    divisor tuple of the radical."""

    n: FactoredInt
    divisors: tuple[int, ...]
    a: tuple[int, ...]  # sizes of the non-unit classes
    degrees: tuple[int, ...]  # per-class vertex degree, unit class first
    ta: tuple[tuple[int, ...], ...]  # adjacency quotient
    m: tuple[tuple[int, ...], ...]  # Laplacian quotient (zero row sums)
    qn: RootMatrix  # symmetric, similar to ta
    qtilde: RootMatrix  # qn + diag(1, 0, ..., 0)
    lq: RootMatrix  # symmetric, similar to m
    mhat: tuple[tuple[int, ...], ...]  # coarse 3x3 (2x2 for prime powers)

    @property
    def order(self) -> int:
        return len(self.divisors)

    def ta_array(self) -> np.ndarray:
        return np.array(self.ta, dtype=float)

    def m_array(self) -> np.ndarray:
        return np.array(self.m, dtype=float)


def build_quotients(n: int | FactoredInt) -> QuotientMatrices:
    """Construct every quotient matrix for Z_n in canonical divisor order."""
    f = n if isinstance(n, FactoredInt) else factorize(n)
    part = build_partition(f)
    divs = part.tuple.entries
    m = len(divs)
    if m > QUOTIENT_ORDER_CAP:
        raise ValueError(f"quotient order {m} exceeds the cap {QUOTIENT_ORDER_CAP}")
    phi = f.phi
    a = part.a
    sizes = (phi,) + a
    degrees = tuple(degree_of_class(d, f) for d in divs)
    coprime = [[gcd(divs[i], divs[j]) == 1 for j in range(m)] for i in range(m)]

    ta = [[0] * m for _ in range(m)]
    ta[0][0] = phi - 1
    for j in range(1, m):
        ta[0][j] = a[j - 1]
        ta[j][0] = phi
    for i in range(1, m):
        for j in range(1, m):
            if i != j and coprime[i][j]:
                ta[i][j] = a[j - 1]

    lap = [
        [(degrees[i] if i == j else 0) - ta[i][j] for j in range(m)]
        for i in range(m)
    ]

    # signed squares: off-diagonal rho entries are sqrt(size_i * size_j)
    # wherever the classes are joined
    qn_sq = [[0] * m for _ in range(m)]
    qn_sq[0][0] = (phi - 1) * (phi - 1)
    for i in range(m):
        for j in range(m):
            if i != j and coprime[i][j]:
                qn_sq[i][j] = sizes[i] * sizes[j]
    qt_sq = [row[:] for row in qn_sq]
    qt_sq[0][0] = phi * phi
    lq_sq = [[-v for v in row] for row in qn_sq]
    lq_sq[0][0] = (f.value - phi) * (f.value - phi)
    for i in range(1, m):
        lq_sq[i][i] = degrees[i] * degrees[i]

    nn0 = f.value // f.radical
    if f.omega >= 2:
        mid = f.value - phi - nn0
        mhat = ((f.value - phi, -mid, -nn0), (-phi, phi, 0), (-phi, 0, phi))
    else:
        # single prime: there is no middle block, the coarse quotient
        # collapses to 2x2 with spectrum {0, n}
        mhat = ((f.value - phi, -nn0), (-phi, phi))

    return QuotientMatrices(
        n=f,
        divisors=divs,
        a=a,
        degrees=degrees,
        ta=tuple(tuple(r) for r in ta),
        m=tuple(tuple(r) for r in lap),
        qn=_entry_sq(qn_sq),
        qtilde=_entry_sq(qt_sq),
        lq=_entry_sq(lq_sq),
        mhat=mhat,
    )


@dataclass(frozen=True)
class TensorFactorization:
    """qtilde(n0) written as sqrt(phi(n0)) times a Kronecker chain of 2x2
    blocks [[sqrt(phi(p)), 1], [1, 0]], outermost block carrying the
    largest prime."""

    n0: int
    scale_sq: int  # scale = sqrt(scale_sq) = sqrt(phi(n0))
    factors: tuple[RootMatrix, ...]

    @property
    def scale(self) -> float:
        return sqrt(self.scale_sq)

    def reconstruct(self) -> np.ndarray:
        out = np.array([[1.0]])
        for u in self.factors:
            out = np.kron(out, u.as_array())
        return self.scale * out

    def reconstruct_squares(self) -> RootMatrix:
        """Exact signed squares of the reconstruction (all entries are
        non-negative square roots, so squares multiply through)."""
        grid = [[1]]
        for u in self.factors:
            usq = u.signed_squares
            grid = [
                [gv * uv for gv in grow for uv in urow]
                for grow in grid
                for urow in usq
            ]
        return RootMatrix(tuple(tuple(self.scale_sq * v for v in row) for row in grid))


def tensor_factorize(n0: int) -> TensorFactorization:
    """Kronecker factorization of qtilde for square-free n0.

    For non-square-free n reduce first: qtilde(n) = (n/n0) * qtilde(n0).
    """
    f = factorize(n0)
    if f.radical != n0:
        raise ValueError(f"{n0} is not square-free; reduce via the scaling law first")
    if f.value < 2:
        raise ValueError("need n0 >= 2")
    factors = tuple(
        RootMatrix(((p - 1, 1), (1, 0))) for p in reversed(f.primes)
    )
    return TensorFactorization(n0=n0, scale_sq=f.phi, factors=factors)


@dataclass(frozen=True)
class Eigenpair:
    value: float
    multiplicity: int
    provenance: str  # "closed-form" | "numeric"
    label: str = ""


@dataclass(frozen=True)
class BoundInterval:
    j: int  # 1-based index into the non-increasing quotient spectrum
    lo: float
    hi: float
    numeric: float

    def contains(self) -> bool:
        return self.lo <= self.numeric <= self.hi


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    matrix: str  # "adjacency" | "laplacian" | "quotient"
    eigenpairs: tuple[Eigenpair, ...]  # sorted by value, non-increasing
    bounds: tuple[BoundInterval, ...] | None = None
    oracle_residual: float | None = None

    @property
    def total_multiplicity(self) -> int:
        return sum(p.multiplicity for p in self.eigenpairs)

    def values(self) -> np.ndarray:
        """Expanded eigenvalue multiset, non-increasing."""
        out: list[float] = []
        for p in self.eigenpairs:
            out.extend([p.value] * p.multiplicity)
        return np.array(sorted(out, reverse=True))

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "matrix": self.matrix,
            "eigen": [
                {
                    "value": p.value,
                    "multiplicity": p.multiplicity,
                    "provenance": p.provenance,
                    **({"label": p.label} if p.label else {}),
                }
                for p in self.eigenpairs
            ],
        }
        if self.bounds is not None:
            out["bounds"] = [
                {"j": b.j, "lo": b.lo, "hi": b.hi, "numeric": b.numeric}
                for b in self.bounds
            ]
        if self.oracle_residual is not None:
            out["oracle_residual"] = self.oracle_residual
        return out


def _sorted_pairs(pairs: list[Eigenpair]) -> tuple[Eigenpair, ...]:
    return tuple(sorted(pairs, key=lambda p: -p.value))


def qtilde_unit_eigenvalues(f: FactoredInt) -> list[list[float]]:
    """Per-prime eigenvalue pairs of the 2x2 tensor blocks, largest prime
    first: (sqrt(phi(p)) +- sqrt(4 + phi(p))) / 2."""
    out = []
    for p in reversed(f.primes):
        root = sqrt(p - 1.0)
        disc = sqrt(4.0 + (p - 1.0))
        out.append([(root + disc) / 2.0, (root - disc) / 2.0])
    return out


def qtilde_eigenvalues(n: int | FactoredInt) -> SpectrumReport:
    """Closed-form spectrum of qtilde: (n/n0) * sqrt(phi(n0)) times every
    product of one eigenvalue from each 2x2 tensor block."""
    f = n if isinstance(n, FactoredInt) else factorize(n)
    if f.value < 2:
        raise ValueError("need n >= 2")
    scale = (f.value // f.radical) * sqrt(factorize(f.radical).phi)
    units = qtilde_unit_eigenvalues(f)
    values = []
    for choice in product(*units):
        v = scale
        for u in choice:
            v *= u
        values.append(v)
    pairs = [
        Eigenpair(value=v, multiplicity=1, provenance="closed-form",
                  label="tensor-product")
        for v in sorted(values, reverse=True)
    ]
    return SpectrumReport(n=f.value, matrix="quotient", eigenpairs=_sorted_pairs(pairs))


def _dense_eigenvalues(n: int, kind: str, limit: int | None, tol: float):
    from . import oracle  # local import: oracle depends on spectra's peers

    mat = oracle.dense_matrix(n, kind, limit=limit)
    return sym_eigenvalues(mat, tol=tol, max_sweeps=200).values


def adjacency_spectrum(
    n: int | FactoredInt,
    mode: str = "quotient-only",
    limit: int | None = None,
    tol: float = 1e-12,
) -> SpectrumReport:
    """Full adjacency spectrum assembled at quotient level.

    eig(quotient) contributes 2^r numeric values; the unit clique
    contributes -1 with multiplicity phi(n)-1; every non-unit class of
    size a_i contributes 0 with multiplicity a_i - 1. In "full" mode the
    dense spectrum is eigensolved too and the largest sorted deviation is
    attached as oracle_residual.
    """
    if mode not in ("quotient-only", "full"):
        raise ValueError(f"unknown mode {mode!r}")
    f = n if isinstance(n, FactoredInt) else factorize(n)
    q = build_quotients(f)
    quotient_eigs = sym_eigenvalues(q.qn.as_sym(), tol=tol).values
    pairs = [
        Eigenpair(value=float(v), multiplicity=1, provenance="numeric",
                  label="quotient")
        for v in quotient_eigs
    ]
    if f.phi - 1 > 0:
        pairs.append(
            Eigenpair(value=-1.0, multiplicity=f.phi - 1,
                      provenance="closed-form", label="unit-clique block")
        )
    zero_mult = sum(ai - 1 for ai in q.a)
    if zero_mult > 0:
        pairs.append(
            Eigenpair(value=0.0, multiplicity=zero_mult,
                      provenance="closed-form", label="empty-class block")
        )
    report = SpectrumReport(
        n=f.value, matrix="adjacency", eigenpairs=_sorted_pairs(pairs)
    )
    if mode == "full":
        dense = _dense_eigenvalues(f.value, "adjacency", limit, tol)
        residual = float(np.abs(report.values() - dense).max())
        report = SpectrumReport(
            n=f.value,
            matrix="adjacency",
            eigenpairs=report.eigenpairs,
            oracle_residual=residual,
        )
    return report


KNOWN_EIG_TOL = 1e-9


def quotient_known_eigenvalues(f: FactoredInt) -> tuple[int, ...]:
    """Analytically known eigenvalues of the symmetric Laplacian quotient:
    {0, phi(n), n} when n has at least two prime factors. For prime powers
    the quotient of the quotient is 2x2 and only {0, n} survive."""
    if f.omega >= 2:
        return (0, f.phi, f.value)
    return (0, f.value)


def laplacian_spectrum(
    n: int | FactoredInt,
    mode: str = "quotient-only",
    limit: int | None = None,
    tol: float = 1e-14,
) -> SpectrumReport:
    """Full Laplacian spectrum assembled at quotient level.

    n repeats phi(n)-1 times (unit clique), deg(d_j) repeats a_{j-1} - 1
    times per non-unit class, and eig(lq) supplies the remaining 2^r
    values. Numeric quotient eigenvalues matching an analytically known
    value (0, phi(n), n) are snapped to it and tagged closed-form.
    """
    if mode not in ("quotient-only", "full"):
        raise ValueError(f"unknown mode {mode!r}")
    f = n if isinstance(n, FactoredInt) else factorize(n)
    q = build_quotients(f)
    lq_eigs = list(sym_eigenvalues(q.lq.as_sym(), tol=tol).values)

    known = quotient_known_eigenvalues(f)
    matched: dict[int, int] = {}  # index into lq_eigs -> exact value
    for v in known:
        best, best_err = None, None
        for i, lam in enumerate(lq_eigs):
            if i in matched:
                continue
            err = abs(lam - v)
            if best is None or err < best_err:
                best, best_err = i, err
        if best is not None and best_err <= KNOWN_EIG_TOL:
            matched[best] = v

    pairs = []
    for i, lam in enumerate(lq_eigs):
        if i in matched:
            pairs.append(
                Eigenpair(value=float(matched[i]), multiplicity=1,
                          provenance="closed-form",
                          label="known-quotient-eigenvalue")
            )
        else:
            pairs.append(
                Eigenpair(value=float(lam), multiplicity=1,
                          provenance="numeric", label="quotient")
            )
    if f.phi - 1 > 0:
        pairs.append(
            Eigenpair(value=float(f.value), multiplicity=f.phi - 1,
                      provenance="closed-form", label="unit-clique block")
        )
    for j, ai in enumerate(q.a):
        if ai - 1 > 0:
            pairs.append(
                Eigenpair(value=float(q.degrees[j + 1]), multiplicity=ai - 1,
                          provenance="closed-form", label="empty-class block")
            )
    report = SpectrumReport(
        n=f.value, matrix="laplacian", eigenpairs=_sorted_pairs(pairs)
    )
    if mode == "full":
        dense = _dense_eigenvalues(f.value, "laplacian", limit, 1e-12)
        residual = float(np.abs(report.values() - dense).max())
        report = SpectrumReport(
            n=f.value,
            matrix="laplacian",
            eigenpairs=report.eigenpairs,
            oracle_residual=residual,
        )
    return report


def weyl_bounds_adjacency(n: int | FactoredInt, tol: float = 1e-12) -> tuple[BoundInterval, ...]:
    """Per-index sandwich for the symmetric adjacency quotient: the j-th
    eigenvalue lies in [qtilde_j - 1, qtilde_j]."""
    f = n if isinstance(n, FactoredInt) else factorize(n)
    q = build_quotients(f)
    tilde = qtilde_eigenvalues(f).values()
    numeric = sym_eigenvalues(q.qn.as_sym(), tol=tol).values
    return tuple(
        BoundInterval(j=j + 1, lo=float(t - 1.0), hi=float(t), numeric=float(v))
        for j, (t, v) in enumerate(zip(tilde, numeric))
    )


def weyl_bounds_laplacian(n: int | FactoredInt, tol: float = 1e-12) -> tuple[BoundInterval, ...]:
    """Per-index sandwich for the symmetric Laplacian quotient: the j-th
    eigenvalue lies in [(-qtilde)_j + phi(n), (-qtilde)_j + n]."""
    f = n if isinstance(n, FactoredInt) else factorize(n)
    q = build_quotients(f)
    neg_tilde = sorted((-t for t in qtilde_eigenvalues(f).values()), reverse=True)
    numeric = sym_eigenvalues(q.lq.as_sym(), tol=tol).values
    return tuple(
        BoundInterval(
            j=j + 1,
            lo=float(t + f.phi),
            hi=float(t + f.value),
            numeric=float(v),
        )
        for j, (t, v) in enumerate(zip(neg_tilde, numeric))
    )


def char_poly_quotient(n: int | FactoredInt, which: str = "adjacency") -> tuple[int, ...]:
    """Exact characteristic polynomial of the adjacency or Laplacian
    quotient, coefficients from the leading power down."""
    if which not in ("adjacency", "laplacian"):
        raise ValueError(f"unknown matrix kind {which!r}")
    q = build_quotients(n)
    return char_poly_exact(q.ta if which == "adjacency" else q.m)
