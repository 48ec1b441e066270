"""Divisor classes of Z_n: residues grouped by gcd with the radical.

Two residues fall in the same class exactly when they share the same gcd
with the square-free part n0, so the classes are indexed by the divisors
of n0 and there are 2^omega(n) of them. Class sizes have a closed form;
materializing the members is optional and only the brute-force checks
ever need it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .numth import DivisorTuple, FactoredInt, divisor_tuple, factorize


@dataclass(frozen=True)
class DivisorClass:
    divisor: int
    size: int
    members: tuple[int, ...] | None = None


@dataclass(frozen=True)
class ClassPartition:
    n: FactoredInt
    tuple: DivisorTuple
    classes: tuple[DivisorClass, ...]

    @property
    def a(self) -> tuple[int, ...]:
        """Sizes of the non-unit classes, aligned with tuple entries 2..2^r."""
        return tuple(c.size for c in self.classes[1:])

    def size_of(self, d: int) -> int:
        return self.classes[self.tuple.index_of(d)].size

    def class_of_divisor(self, d: int) -> DivisorClass:
        return self.classes[self.tuple.index_of(d)]

    def binary_sequence(self, d: int) -> str:
        """The paper-style 0/1 string marking which primes divide d."""
        return "".join("1" if d % p == 0 else "0" for p in self.n.primes)


def class_of(a: int, n: FactoredInt | int) -> int:
    """Divisor of n0 labelling the class of residue a."""
    f = n if isinstance(n, FactoredInt) else factorize(n)
    if not 0 <= a < f.value:
        raise ValueError(f"residue {a} out of range for Z_{f.value}")
    return gcd(a, f.radical)


def class_size(d: int, n: FactoredInt) -> int:
    """Closed-form class size (n/n0) * phi(n0/d); gives phi(n) for d = 1."""
    n0 = n.radical
    if n0 % d != 0:
        raise ValueError(f"{d} does not divide the radical {n0}")
    return (n.value // n0) * factorize(n0 // d).phi


def build_partition(n: FactoredInt | int, materialize: bool = False) -> ClassPartition:
    """Partition Z_n into divisor classes in canonical order.

    With materialize=True the member lists are enumerated and each member
    is checked against class_of; sizes always come from the closed form.
    """
    f = n if isinstance(n, FactoredInt) else factorize(n)
    if f.value < 2:
        raise ValueError("partition requires n >= 2")
    tup = divisor_tuple(f.radical)

    members: dict[int, list[int]] = {d: [] for d in tup.entries}
    if materialize:
        for a in range(f.value):
            members[gcd(a, f.radical)].append(a)

    classes = []
    for d in tup.entries:
        size = class_size(d, f)
        mem: tuple[int, ...] | None = None
        if materialize:
            mem = tuple(members[d])
            if len(mem) != size:
                raise AssertionError(
                    f"class [{d}] of Z_{f.value}: closed-form size {size}, "
                    f"materialized {len(mem)}"
                )
        classes.append(DivisorClass(divisor=d, size=size, members=mem))
    return ClassPartition(n=f, tuple=tup, classes=tuple(classes))


def table_rows(part: ClassPartition) -> list[dict]:
    """Class-table rows (binary sequence, divisor, size, members) in
    canonical order, ready for CSV/JSON emission."""
    rows = []
    for c in part.classes:
        row = {
            "s": part.binary_sequence(c.divisor),
            "divisor": c.divisor,
            "size": c.size,
        }
        if c.members is not None:
            row["members"] = list(c.members)
        rows.append(row)
    return rows
