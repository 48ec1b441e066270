"""Minimal generating sets of Z_n of every size.

A k-subset generates Z_n iff the gcd of its elements with n is 1, and it
is minimal iff no (k-1)-subset still generates. Both conditions only
depend on the divisor classes of the elements, so enumeration happens
over k-combinations of the 2^r class divisors and is expanded to element
level on request. Exhaustive subset scans live in the oracle module only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations, product
from math import gcd

from .numth import FactoredInt, factorize
from .partition import build_partition


@dataclass(frozen=True)
class GenSetFamily:
    n: FactoredInt
    k: int
    class_combos: tuple[tuple[int, ...], ...]
    count: int
    sets: tuple[tuple[int, ...], ...] | None = None

    def to_json(self) -> dict:
        out = {
            "n": self.n.value,
            "k": self.k,
            "combos": [list(c) for c in self.class_combos],
            "count": self.count,
        }
        if self.sets is not None:
            out["sets"] = [list(s) for s in self.sets]
        return out


def is_generating_set(S, n: int) -> bool:
    """True iff the subset S generates Z_n, i.e. gcd(S, n) == 1."""
    elems = sorted(set(S))
    if not elems:
        raise ValueError("empty set cannot be tested for generation")
    if any(not 0 <= g < n for g in elems):
        raise ValueError(f"elements must lie in [0, {n})")
    return reduce(gcd, elems, n) == 1


def is_minimal_generating_set(S, n: int) -> bool:
    """True iff S generates Z_n and no proper subset does.

    It suffices to test the (|S|-1)-subsets: any generating proper subset
    extends to a generating subset of that size.
    """
    elems = tuple(sorted(set(S)))
    if not is_generating_set(elems, n):
        return False
    if len(elems) == 1:
        return True
    return all(
        reduce(gcd, sub, n) != 1 for sub in combinations(elems, len(elems) - 1)
    )


def max_minimal_size(n: int) -> int:
    """Largest possible size of a minimal generating set: omega(n)."""
    f = factorize(n)
    if f.value < 2:
        raise ValueError("Z_1 is the trivial group")
    return f.omega


def _combo_ok(divs: tuple[int, ...]) -> bool:
    if reduce(gcd, divs) != 1:
        return False
    if len(divs) == 1:
        return True
    return all(reduce(gcd, sub) != 1 for sub in combinations(divs, len(divs) - 1))


def enumerate_Gk(n: int, k: int, expand: bool = False) -> GenSetFamily:
    """All minimal generating sets of Z_n of size k, as divisor-class
    combinations plus an optional element-level expansion.

    k = 1 yields the units U(n); k > omega(n) yields the empty family.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    f = factorize(n)
    if f.value < 2:
        raise ValueError("Z_1 is the trivial group")
    part = build_partition(f, materialize=expand)

    if k > f.omega:
        return GenSetFamily(n=f, k=k, class_combos=(), count=0, sets=() if expand else None)

    combos = tuple(
        divs for divs in combinations(part.tuple.entries, k) if _combo_ok(divs)
    )
    count = 0
    for divs in combos:
        prod_size = 1
        for d in divs:
            prod_size *= part.size_of(d)
        count += prod_size

    sets: tuple[tuple[int, ...], ...] | None = None
    if expand:
        expanded = set()
        for divs in combos:
            pools = [part.class_of_divisor(d).members for d in divs]
            for pick in product(*pools):
                expanded.add(tuple(sorted(pick)))
        sets = tuple(sorted(expanded))
        if len(sets) != count:
            raise AssertionError(
                f"G_{k}(Z_{n}): counted {count} but expanded {len(sets)}"
            )
    return GenSetFamily(n=f, k=k, class_combos=combos, count=count, sets=sets)
