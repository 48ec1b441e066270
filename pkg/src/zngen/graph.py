"""The generating graph of Z_n and its closed-form invariants.

Vertices are the residues 0..n-1; a and b are adjacent iff gcd(a, b, n)
is 1 (equivalently, iff {a, b} generates the group). Materialized
adjacency is only needed by the brute-force side and is capped; every
invariant here has a formula that needs no graph at all.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

import numpy as np

from .numth import FactoredInt, factorize
from .partition import ClassPartition, build_partition

DEFAULT_DENSE_LIMIT = 5000


class DenseLimitError(ValueError):
    """Raised when a materialized graph is requested above the dense cap."""


def dense_limit(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get("ZN_DENSE_LIMIT")
    return int(env) if env else DEFAULT_DENSE_LIMIT


@dataclass(frozen=True)
class GeneratingGraph:
    """Adjacency stored as packed bit rows (about n^2/8 bytes)."""

    n: FactoredInt
    rows: np.ndarray  # shape (n, ceil(n/8)), uint8, bit j of row i = edge i~j
    partition: ClassPartition

    def has_edge(self, a: int, b: int) -> bool:
        return bool((self.rows[a, b >> 3] >> (7 - (b & 7))) & 1)

    def dense(self) -> np.ndarray:
        """Unpacked boolean adjacency matrix."""
        m = np.unpackbits(self.rows, axis=1, count=self.n.value)
        return m.astype(bool)

    def degree(self, a: int) -> int:
        return int(np.unpackbits(self.rows[a], count=self.n.value).sum())


def _adjacency_bool(n: int) -> np.ndarray:
    r = np.arange(n, dtype=np.int64)
    m = np.gcd(np.gcd.outer(r, r), n) == 1
    np.fill_diagonal(m, False)
    return m


def build_graph(n: int, limit: int | None = None) -> GeneratingGraph:
    """Materialize the generating graph of Z_n (dense, bit-packed).

    Above the dense cap this refuses; use the quotient-level operations
    (degree_of_class, edge_count, spectra.*) instead, which have no cap.
    """
    cap = dense_limit(limit)
    if not 2 <= n <= cap:
        raise DenseLimitError(
            f"dense graph for n={n} exceeds the cap {cap}; "
            "use the quotient-level operations for large n"
        )
    f = factorize(n)
    rows = np.packbits(_adjacency_bool(n), axis=1)
    return GeneratingGraph(n=f, rows=rows, partition=build_partition(f))


def degree_of_class(d: int, n: int | FactoredInt) -> int:
    """Common degree of every vertex in class [d]: n-1 for the units,
    (n/d)*phi(d) otherwise."""
    f = n if isinstance(n, FactoredInt) else factorize(n)
    if f.radical % d != 0:
        raise ValueError(f"{d} does not divide the radical {f.radical}")
    if d == 1:
        return f.value - 1
    return (f.value // d) * factorize(d).phi


def edge_count(n: int | FactoredInt) -> int:
    """Exact edge count phi(n)/2 * ((n/n0)*sigma(n0) - 1)."""
    f = n if isinstance(n, FactoredInt) else factorize(n)
    if f.value < 2:
        raise ValueError("generating graph needs n >= 2")
    twice = f.phi * ((f.value // f.radical) * f.sigma_radical - 1)
    if twice % 2 != 0:
        raise AssertionError(f"odd degree sum for n={f.value}")
    return twice // 2


@dataclass(frozen=True)
class HGraph:
    """Skeleton graph on the divisor classes: [di] ~ [dj] iff gcd(di, dj) = 1."""

    n: FactoredInt
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def adjacent(self, di: int, dj: int) -> bool:
        return di != dj and gcd(di, dj) == 1


def build_h_graph(n: int | FactoredInt) -> HGraph:
    f = n if isinstance(n, FactoredInt) else factorize(n)
    if f.value < 2:
        raise ValueError("generating graph needs n >= 2")
    verts = build_partition(f).tuple.entries
    edges = tuple(
        (verts[i], verts[j])
        for i in range(len(verts))
        for j in range(i + 1, len(verts))
        if gcd(verts[i], verts[j]) == 1
    )
    return HGraph(n=f, vertices=verts, edges=edges)


def rebuild_from_h(h: HGraph, part: ClassPartition) -> np.ndarray:
    """Adjacency reconstructed from the class skeleton: classes joined
    completely when their divisors are coprime, the unit class a clique,
    every other class independent."""
    n = part.n.value
    m = np.zeros((n, n), dtype=bool)
    members = {c.divisor: c.members for c in part.classes}
    if any(v is None for v in members.values()):
        raise ValueError("rebuild_from_h needs a materialized partition")
    for di in h.vertices:
        for dj in h.vertices:
            if di < dj and h.adjacent(di, dj):
                ix = np.fromiter(members[di], dtype=np.int64)
                jx = np.fromiter(members[dj], dtype=np.int64)
                m[np.ix_(ix, jx)] = True
                m[np.ix_(jx, ix)] = True
    units = np.fromiter(members[1], dtype=np.int64)
    m[np.ix_(units, units)] = True
    m[units, units] = False
    return m


@dataclass(frozen=True)
class GraphProps:
    n: int
    diameter: int
    is_regular: bool
    is_bipartite: bool
    hamiltonian_cycle: tuple[int, ...] | None
    is_eulerian: bool
    is_planar: bool
    clique_number: int
    chromatic_number: int
    independence_number: int
    edge_count: int

    def to_json(self) -> dict:
        d = self.__dict__.copy()
        d["hamiltonian_cycle"] = (
            list(self.hamiltonian_cycle) if self.hamiltonian_cycle else None
        )
        return d


def compute_props(n: int | FactoredInt) -> GraphProps:
    """All closed-form graph invariants.

    diameter 1 iff n prime else 2; regular iff prime; bipartite iff n=2;
    Hamiltonian witness 0,1,...,n-1 for n>2 (consecutive residues are
    always adjacent); Eulerian iff n odd; planar iff n in {2,3,4,6};
    clique = chromatic = phi(n)+omega(n); independence = n/p1.
    """
    f = n if isinstance(n, FactoredInt) else factorize(n)
    if f.value < 2:
        raise ValueError("generating graph needs n >= 2")
    is_prime = f.omega == 1 and f.factors[0][1] == 1
    return GraphProps(
        n=f.value,
        diameter=1 if is_prime else 2,
        is_regular=is_prime,
        is_bipartite=f.value == 2,
        hamiltonian_cycle=tuple(range(f.value)) if f.value > 2 else None,
        is_eulerian=f.value % 2 == 1,
        is_planar=f.value in (2, 3, 4, 6),
        clique_number=f.phi + f.omega,
        chromatic_number=f.phi + f.omega,
        independence_number=f.value // f.factors[0][0],
        edge_count=edge_count(f),
    )


def gen_probability(n: int | FactoredInt) -> Fraction:
    """Probability that a random pair generates: |E| / C(n, 2).

    Unordered-pair convention, so the value lies in [0, 1] and equals 1
    exactly for prime n.
    """
    f = n if isinstance(n, FactoredInt) else factorize(n)
    return Fraction(edge_count(f), comb(f.value, 2))


_PALETTE = [
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff",
    "#9a6324", "#fffac8", "#800000", "#aaffc3",
]


def to_dot(g: GeneratingGraph) -> str:
    """DOT text for the materialized graph, vertices colored by class."""
    part = g.partition
    color = {
        d: _PALETTE[i % len(_PALETTE)] for i, d in enumerate(part.tuple.entries)
    }
    n = g.n.value
    lines = [f"graph E{n} {{", "  node [style=filled];"]
    for a in range(n):
        d = gcd(a, g.n.radical)
        lines.append(f'  {a} [fillcolor="{color[d]}" label="{a}"];')
    for a in range(n):
        for b in range(a + 1, n):
            if g.has_edge(a, b):
                lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def h_to_dot(h: HGraph) -> str:
    """DOT text for the class skeleton."""
    color = {d: _PALETTE[i % len(_PALETTE)] for i, d in enumerate(h.vertices)}
    lines = [f"graph H{h.n.value} {{", "  node [style=filled];"]
    for d in h.vertices:
        lines.append(f'  d{d} [fillcolor="{color[d]}" label="[{d}]"];')
    for di, dj in h.edges:
        lines.append(f"  d{di} -- d{dj};")
    lines.append("}")
    return "\n".join(lines) + "\n"
