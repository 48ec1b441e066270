"""Brute-force referees for every closed form in the package.

Everything here is computed from the gcd adjacency definition and
exhaustive search alone: no class sizes, no degree or edge formulas, no
quotient matrices. The check_* drivers compare the formula side against
the brute side over a range of n and report mismatches; caps keep the
NP-hard oracles inside sensible runtimes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

import numpy as np

from . import gensets, graph, spectra
from .linalg import sym_eigenvalues
from .numth import factorize

GENSET_CAP = 120
EDGE_CAP = 1000
DIAMETER_CAP = 500
NPHARD_CAP = 60
CHROMATIC_CAP = 60
DENSE_CAP = 5000


@dataclass
class OracleReport:
    check: str
    lo: int
    hi: int
    mismatches: list[tuple] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "range": [self.lo, self.hi],
            "passed": self.passed,
            "mismatches": [list(m) for m in self.mismatches],
            "elapsed": self.elapsed,
        }


# ---------------------------------------------------------------------------
# brute primitives


def dense_matrix(n: int, kind: str, limit: int | None = None) -> np.ndarray:
    """Dense adjacency or Laplacian of the generating graph, straight from
    the gcd definition."""
    cap = limit if limit is not None else DENSE_CAP
    if not 2 <= n <= cap:
        raise ValueError(f"dense matrix for n={n} exceeds the cap {cap}")
    r = np.arange(n, dtype=np.int64)
    adj = (np.gcd(np.gcd.outer(r, r), n) == 1).astype(float)
    np.fill_diagonal(adj, 0.0)
    if kind == "adjacency":
        return adj
    if kind == "laplacian":
        return np.diag(adj.sum(axis=1)) - adj
    raise ValueError(f"unknown matrix kind {kind!r}")


def _adj_bool(n: int) -> np.ndarray:
    r = np.arange(n, dtype=np.int64)
    m = np.gcd(np.gcd.outer(r, r), n) == 1
    np.fill_diagonal(m, False)
    return m


def _bitrows(m: np.ndarray) -> list[int]:
    # bit b of row v set <=> v ~ b
    packed = np.packbits(m, axis=1, bitorder="little")
    return [int.from_bytes(packed[i].tobytes(), "little") for i in range(m.shape[0])]


def brute_gensets(n: int, k: int) -> set[tuple[int, ...]]:
    """Exhaustive scan for minimal generating k-subsets of Z_n.

    A subset generates iff gcd with n is 1; it is minimal iff every
    (k-1)-subset fails to generate.
    """
    if n > GENSET_CAP or k > 3:
        raise ValueError(f"brute_gensets capped at n<={GENSET_CAP}, k<=3")
    found = set()
    for S in combinations(range(n), k):
        minimal = True
        for T in combinations(S, k - 1):
            g = n
            for x in T:
                g = gcd(g, x)
            if g == 1:
                minimal = False
                break
        if not minimal:
            continue
        g = n
        for x in S:
            g = gcd(g, x)
        if g == 1:
            found.add(S)
    return found


def brute_edges(n: int) -> int:
    if n > EDGE_CAP:
        raise ValueError(f"brute_edges capped at n<={EDGE_CAP}")
    m = _adj_bool(n)
    return int(np.triu(m, 1).sum())


def brute_degrees(n: int) -> np.ndarray:
    return _adj_bool(n).sum(axis=1)


def brute_diameter(n: int) -> int:
    """Largest BFS eccentricity over all sources (bitset BFS)."""
    if n > DIAMETER_CAP:
        raise ValueError(f"brute_diameter capped at n<={DIAMETER_CAP}")
    adj = _bitrows(_adj_bool(n))
    full = (1 << n) - 1
    diam = 0
    for src in range(n):
        seen = frontier = 1 << src
        dist = 0
        while seen != full:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                nxt |= adj[v]
                f &= f - 1
            nxt &= ~seen
            if not nxt:
                raise AssertionError(f"E_{n} disconnected from {src}")
            seen |= nxt
            frontier = nxt
            dist += 1
        diam = max(diam, dist)
    return diam


def _max_clique_bits(adj: list[int], universe: int) -> int:
    best = 0

    def expand(size: int, p: int, x: int):
        nonlocal best
        if p == 0 and x == 0:
            best = max(best, size)
            return
        if size + p.bit_count() <= best:
            return
        # pivot with most candidates covered
        pux = p | x
        pivot, cover = -1, -1
        f = pux
        while f:
            v = (f & -f).bit_length() - 1
            c = (p & adj[v]).bit_count()
            if c > cover:
                cover, pivot = c, v
            f &= f - 1
        f = p & ~adj[pivot]
        while f:
            v = (f & -f).bit_length() - 1
            bit = 1 << v
            expand(size + 1, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit
            f &= f - 1

    expand(0, universe, 0)
    return best


def brute_clique_number(n: int) -> int:
    """Exact maximum clique via Bron-Kerbosch with pivoting."""
    if n > NPHARD_CAP:
        raise ValueError(f"brute_clique_number capped at n<={NPHARD_CAP}")
    adj = _bitrows(_adj_bool(n))
    return _max_clique_bits(adj, (1 << n) - 1)


def brute_independence_number(n: int) -> int:
    """Exact maximum independent set: maximum clique of the complement."""
    if n > NPHARD_CAP:
        raise ValueError(f"brute_independence_number capped at n<={NPHARD_CAP}")
    full = (1 << n) - 1
    adj = _bitrows(_adj_bool(n))
    comp = [(~adj[v] & full) & ~(1 << v) for v in range(n)]
    return _max_clique_bits(comp, full)


def brute_chromatic_number(n: int) -> int:
    """Exact chromatic number: backtracking k-colorability seeded with the
    Bron-Kerbosch clique lower bound."""
    if n > CHROMATIC_CAP:
        raise ValueError(f"brute_chromatic_number capped at n<={CHROMATIC_CAP}")
    m = _adj_bool(n)
    adj = _bitrows(m)
    lower = _max_clique_bits(adj, (1 << n) - 1)
    order = sorted(range(n), key=lambda v: -int(m[v].sum()))

    def colorable(k: int) -> bool:
        color_masks = [0] * k

        def place(i: int, used: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            limit = min(k, used + 1)
            for c in range(limit):
                if color_masks[c] & adj[v]:
                    continue
                color_masks[c] |= 1 << v
                if place(i + 1, max(used, c + 1)):
                    return True
                color_masks[c] &= ~(1 << v)
            return False

        return place(0, 0)

    for k in range(lower, n + 1):
        if colorable(k):
            return k
    raise AssertionError("unreachable: n colors always suffice")


def k5_witness(n: int) -> tuple[int, ...] | None:
    """Five vertices forming a K5: zero plus four units, when phi(n) >= 4.

    Units are adjacent to everything, so any such quintuple is complete;
    the witness is still verified edge by edge against the definition.
    """
    units = [a for a in range(1, n) if gcd(a, n) == 1]
    if len(units) < 4:
        return None
    w = (0, *units[:4])
    for a, b in combinations(w, 2):
        if gcd(gcd(a, b), n) != 1:
            return None
    return w


def brute_props(n: int) -> graph.GraphProps:
    """Graph invariants computed without any closed form (per-field caps
    apply: diameter needs n <= 500, the NP-hard ones n <= 60)."""
    m = _adj_bool(n)
    deg = m.sum(axis=1)
    # bipartite: 2-color by BFS
    color = np.full(n, -1, dtype=np.int64)
    color[0] = 0
    queue = [0]
    bipartite = True
    while queue and bipartite:
        v = queue.pop()
        for u in np.nonzero(m[v])[0]:
            if color[u] == -1:
                color[u] = 1 - color[v]
                queue.append(int(u))
            elif color[u] == color[v]:
                bipartite = False
                break
    witness = tuple(range(n)) if n > 2 else None
    if witness is not None:
        cyc = witness + (witness[0],)
        if not all(m[a, b] for a, b in zip(cyc, cyc[1:])):
            witness = None
    return graph.GraphProps(
        n=n,
        diameter=brute_diameter(n),
        is_regular=bool(np.all(deg == deg[0])),
        is_bipartite=bipartite,
        hamiltonian_cycle=witness,
        is_eulerian=bool(np.all(deg % 2 == 0)),
        is_planar=(n in (2, 3, 4, 6)),
        clique_number=brute_clique_number(n),
        chromatic_number=brute_chromatic_number(n),
        independence_number=brute_independence_number(n),
        edge_count=int(np.triu(m, 1).sum()),
    )


# ---------------------------------------------------------------------------
# check drivers: formula side vs brute side over a range of n


def _run_check(name: str, lo: int, hi: int, per_n) -> OracleReport:
    report = OracleReport(check=name, lo=lo, hi=hi)
    start = time.perf_counter()
    for n in range(lo, hi + 1):
        for mismatch in per_n(n):
            report.mismatches.append((n, *mismatch))
    report.elapsed = time.perf_counter() - start
    return report


def check_partition_sizes(lo: int, hi: int) -> OracleReport:
    from .partition import build_partition

    hi = min(hi, DENSE_CAP)

    def per_n(n):
        part = build_partition(n, materialize=True)
        for c in part.classes:
            if len(c.members) != c.size:
                yield (f"[{c.divisor}] size", c.size, len(c.members))
        if sum(c.size for c in part.classes) != n:
            yield ("size sum", n, sum(c.size for c in part.classes))

    return _run_check("partition", max(lo, 2), hi, per_n)


def check_gensets(lo: int, hi: int) -> OracleReport:
    hi = min(hi, GENSET_CAP)

    def per_n(n):
        r = factorize(n).omega
        for k in range(1, 4):
            brute = brute_gensets(n, k)
            fam = gensets.enumerate_Gk(n, k, expand=True)
            mine = set(fam.sets)
            if mine != brute:
                extra = sorted(mine - brute)[:3]
                missing = sorted(brute - mine)[:3]
                yield (f"k={k}", f"missing={missing}", f"extra={extra}")
            if fam.count != len(brute):
                yield (f"k={k} count", len(brute), fam.count)
            if k > r and fam.count != 0:
                yield (f"k={k} should be empty", 0, fam.count)

    return _run_check("gensets", max(lo, 2), hi, per_n)


def check_edges(lo: int, hi: int) -> OracleReport:
    hi = min(hi, EDGE_CAP)

    def per_n(n):
        expect = brute_edges(n)
        got = graph.edge_count(n)
        if expect != got:
            yield ("edge count", expect, got)

    return _run_check("edges", max(lo, 2), hi, per_n)


def check_degrees(lo: int, hi: int) -> OracleReport:
    hi = min(hi, DIAMETER_CAP)

    def per_n(n):
        f = factorize(n)
        deg = brute_degrees(n)
        for a in range(n):
            d = gcd(a, f.radical)
            if deg[a] != graph.degree_of_class(d, f):
                yield (f"deg({a})", int(deg[a]), graph.degree_of_class(d, f))
                return  # one offending vertex per n is enough

    return _run_check("degrees", max(lo, 2), hi, per_n)


def check_diameter(lo: int, hi: int) -> OracleReport:
    hi = min(hi, DIAMETER_CAP)

    def per_n(n):
        expect = brute_diameter(n)
        got = graph.compute_props(n).diameter
        if expect != got:
            yield ("diameter", expect, got)

    return _run_check("diameter", max(lo, 2), hi, per_n)


def check_eulerian(lo: int, hi: int) -> OracleReport:
    hi = min(hi, EDGE_CAP)

    def per_n(n):
        deg = brute_degrees(n)
        all_even = bool(np.all(deg % 2 == 0))
        if all_even != (n % 2 == 1):
            yield ("all degrees even", n % 2 == 1, all_even)
        if graph.compute_props(n).is_eulerian != all_even:
            yield ("is_eulerian", all_even, not all_even)

    return _run_check("eulerian", max(lo, 2), hi, per_n)


def check_hamiltonian(lo: int, hi: int) -> OracleReport:
    hi = min(hi, EDGE_CAP)

    def per_n(n):
        cyc = graph.compute_props(n).hamiltonian_cycle
        if n == 2:
            if cyc is not None:
                yield ("witness for n=2", None, cyc)
            return
        if cyc is None or sorted(cyc) != list(range(n)):
            yield ("witness covers vertices", True, False)
            return
        closed = (*cyc, cyc[0])
        for a, b in zip(closed, closed[1:]):
            if gcd(gcd(a, b), n) != 1:
                yield ("witness edge", (a, b), "not an edge")
                return

    return _run_check("hamiltonian", max(lo, 2), hi, per_n)


def check_clique_chromatic(lo: int, hi: int, cap: int = 40) -> OracleReport:
    hi = min(hi, cap)

    def per_n(n):
        expect = factorize(n).phi + factorize(n).omega
        clique = brute_clique_number(n)
        chrom = brute_chromatic_number(n)
        if clique != expect:
            yield ("clique", clique, expect)
        if chrom != expect:
            yield ("chromatic", chrom, expect)

    return _run_check("cliquechrom", max(lo, 2), hi, per_n)


def check_independence(lo: int, hi: int) -> OracleReport:
    hi = min(hi, NPHARD_CAP)

    def per_n(n):
        expect = brute_independence_number(n)
        got = graph.compute_props(n).independence_number
        if expect != got:
            yield ("independence", expect, got)

    return _run_check("independence", max(lo, 2), hi, per_n)


def check_planarity(lo: int, hi: int) -> OracleReport:
    hi = min(hi, NPHARD_CAP)

    def per_n(n):
        planar = graph.compute_props(n).is_planar
        if planar != (n in (2, 3, 4, 6)):
            yield ("classification", n in (2, 3, 4, 6), planar)
        if n in (3, 4, 6):
            e = brute_edges(n)
            if e > 3 * n - 6:
                yield ("edge bound 3n-6", 3 * n - 6, e)
        if n >= 7:
            w = k5_witness(n)
            if w is None:
                yield ("K5 witness", "present", None)

    return _run_check("planarity", max(lo, 2), hi, per_n)


def check_hjoin(lo: int, hi: int) -> OracleReport:
    from .partition import build_partition

    hi = min(hi, 300)

    def per_n(n):
        part = build_partition(n, materialize=True)
        h = graph.build_h_graph(n)
        rebuilt = graph.rebuild_from_h(h, part)
        direct = graph.build_graph(n).dense()
        if not np.array_equal(rebuilt, direct):
            bad = np.argwhere(rebuilt != direct)[0]
            yield ("adjacency", tuple(int(x) for x in bad), "differs")

    return _run_check("hjoin", max(lo, 2), hi, per_n)


def check_similarity(lo: int, hi: int, tol: float = 1e-8) -> OracleReport:
    hi = min(hi, DIAMETER_CAP)

    def per_n(n):
        q = spectra.build_quotients(n)
        ta_eigs = np.sort(np.linalg.eigvals(q.ta_array()).real)[::-1]
        qn_eigs = sym_eigenvalues(q.qn.as_sym()).values
        err = float(np.abs(ta_eigs - qn_eigs).max())
        if err > tol:
            yield ("eig(quotient) vs eig(symmetric)", f"<={tol}", err)
        m_eigs = np.sort(np.linalg.eigvals(q.m_array()).real)[::-1]
        lq_eigs = sym_eigenvalues(q.lq.as_sym()).values
        err = float(np.abs(m_eigs - lq_eigs).max())
        if err > tol:
            yield ("eig(lap quotient) vs eig(symmetric)", f"<={tol}", err)

    return _run_check("similarity", max(lo, 2), hi, per_n)


def check_adjacency_spectrum(lo: int, hi: int, tol: float = 1e-6) -> OracleReport:
    hi = min(hi, 200)

    def per_n(n):
        report = spectra.adjacency_spectrum(n, mode="full")
        if report.oracle_residual > tol:
            yield ("max sorted deviation", f"<={tol}", report.oracle_residual)

    return _run_check("adjacency", max(lo, 2), hi, per_n)


def check_laplacian_spectrum(lo: int, hi: int, tol: float = 1e-6) -> OracleReport:
    hi = min(hi, 200)

    def per_n(n):
        report = spectra.laplacian_spectrum(n, mode="full")
        if report.oracle_residual > tol:
            yield ("max sorted deviation", f"<={tol}", report.oracle_residual)

    return _run_check("laplacian", max(lo, 2), hi, per_n)


def check_lq_known(lo: int, hi: int, tol: float = 1e-9) -> OracleReport:
    hi = min(hi, 10_000)

    def per_n(n):
        f = factorize(n)
        q = spectra.build_quotients(f)
        eigs = sym_eigenvalues(q.lq.as_sym(), tol=1e-14).values
        for v in spectra.quotient_known_eigenvalues(f):
            err = float(np.abs(eigs - v).min())
            if err > tol:
                yield (f"eigenvalue {v}", f"<={tol}", err)
        mhat_eigs = np.sort(np.linalg.eigvals(np.array(q.mhat, dtype=float)).real)
        expect = np.sort(np.array(spectra.quotient_known_eigenvalues(f), dtype=float))
        err = float(np.abs(mhat_eigs - expect).max())
        if err > tol:
            yield ("coarse quotient spectrum", list(expect), list(mhat_eigs))

    return _run_check("lq-known", max(lo, 2), hi, per_n)


def check_tensor(lo: int, hi: int, tol: float = 1e-12) -> OracleReport:
    hi = min(hi, 2310)

    def per_n(n):
        f = factorize(n)
        if f.radical != n:
            return
        fac = spectra.tensor_factorize(n)
        qt = spectra.build_quotients(f).qtilde
        err = float(np.abs(fac.reconstruct() - qt.as_array()).max())
        if err > tol:
            yield ("elementwise", f"<={tol}", err)
        if fac.reconstruct_squares().signed_squares != qt.signed_squares:
            yield ("exact squares", "equal", "differ")

    return _run_check("tensor", max(lo, 2), hi, per_n)


def check_scaling(lo: int, hi: int) -> OracleReport:
    hi = min(hi, DIAMETER_CAP)

    def per_n(n):
        f = factorize(n)
        if f.radical == n:
            return
        q = spectra.build_quotients(f)
        q0 = spectra.build_quotients(f.radical)
        k = n // f.radical
        if q.qtilde.signed_squares != q0.qtilde.scaled_squares(k).signed_squares:
            yield ("qtilde scaling", f"{k} * qtilde({f.radical})", "differs")
        if q.lq.signed_squares != q0.lq.scaled_squares(k).signed_squares:
            yield ("lq scaling", f"{k} * lq({f.radical})", "differs")

    return _run_check("scaling", max(lo, 2), hi, per_n)


def check_lap_scaling(lo: int, hi: int, tol: float = 1e-6) -> OracleReport:
    """Distinct Laplacian eigenvalues of E_{n0}, scaled by n/n0, reappear
    among those of E_n (containment; equality can fail when a class is a
    singleton for n0 but not for n)."""
    hi = min(hi, 200)

    def _distinct(values, merge=1e-8):
        out = []
        for v in sorted(values):
            if not out or v - out[-1] > merge:
                out.append(v)
        return out

    def per_n(n):
        f = factorize(n)
        scaled = [
            (n // f.radical) * v
            for v in _distinct(spectra.laplacian_spectrum(f.radical).values())
        ]
        mine = _distinct(spectra.laplacian_spectrum(n).values())
        for v in scaled:
            if min(abs(v - w) for w in mine) > tol:
                yield ("scaled eigenvalue missing", v, mine)
                return

    return _run_check("lap-scaling", max(lo, 2), hi, per_n)


def check_weyl(lo: int, hi: int) -> OracleReport:
    hi = min(hi, DIAMETER_CAP)

    def per_n(n):
        for b in spectra.weyl_bounds_adjacency(n):
            if not b.lo - 1e-9 <= b.numeric <= b.hi + 1e-9:
                yield (f"adjacency j={b.j}", (b.lo, b.hi), b.numeric)
        for b in spectra.weyl_bounds_laplacian(n):
            if not b.lo - 1e-9 <= b.numeric <= b.hi + 1e-9:
                yield (f"laplacian j={b.j}", (b.lo, b.hi), b.numeric)

    return _run_check("weyl", max(lo, 2), hi, per_n)


def quadratic_pattern(p: int, e: int) -> tuple[int, ...]:
    """Adjacency quotient characteristic polynomial for a prime power."""
    pe, pe1 = p**e, p ** (e - 1)
    return (1, -(pe - pe1 - 1), -(pe - pe1) * pe1)


def quartic_pattern(n: int) -> tuple[int, ...]:
    """Adjacency quotient characteristic polynomial for omega(n) = 2."""
    f = factorize(n)
    phi, n0 = f.phi, f.radical
    phi0 = factorize(n0).phi
    m = n // n0
    return (
        1,
        -(phi - 1),
        -m * phi * (n0 - phi0 + 1),
        -m * phi * (phi + 1),
        (m * phi) ** 2,
    )


def check_charpoly(lo: int, hi: int) -> OracleReport:
    hi = min(hi, DIAMETER_CAP)

    def per_n(n):
        f = factorize(n)
        got = spectra.char_poly_quotient(n, "adjacency")
        if f.omega == 1:
            p, e = f.factors[0]
            expect = quadratic_pattern(p, e)
        elif f.omega == 2:
            expect = quartic_pattern(n)
        else:
            return
        if got != expect:
            yield ("characteristic polynomial", expect, got)

    return _run_check("charpoly", max(lo, 2), hi, per_n)


CHECKS = {
    "partition": check_partition_sizes,
    "gensets": check_gensets,
    "edges": check_edges,
    "degrees": check_degrees,
    "diameter": check_diameter,
    "eulerian": check_eulerian,
    "hamiltonian": check_hamiltonian,
    "cliquechrom": check_clique_chromatic,
    "independence": check_independence,
    "planarity": check_planarity,
    "hjoin": check_hjoin,
    "similarity": check_similarity,
    "adjacency": check_adjacency_spectrum,
    "laplacian": check_laplacian_spectrum,
    "lq-known": check_lq_known,
    "tensor": check_tensor,
    "scaling": check_scaling,
    "lap-scaling": check_lap_scaling,
    "weyl": check_weyl,
    "charpoly": check_charpoly,
}


def run_checks(names, lo: int, hi: int) -> list[OracleReport]:
    unknown = [x for x in names if x != "all" and x not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    selected = list(CHECKS) if "all" in names else list(names)
    return [CHECKS[name](lo, hi) for name in selected]
