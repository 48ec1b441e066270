"""Integer factorization and the arithmetic functions used everywhere else.

All arithmetic is exact (Python ints). Factorization is plain trial
division seeded with a small prime table, which is plenty for the
intended working range (n up to about 10**7).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [p for p in range(limit + 1) if flags[p]]


_SMALL_PRIMES = _sieve(1024)


@dataclass(frozen=True)
class FactoredInt:
    """A positive integer with its prime factorization and derived functions.

    factors are (prime, exponent) pairs in increasing prime order;
    radical is the square-free part, omega the number of distinct primes,
    phi the Euler totient, sigma_radical / tau_radical the divisor sum
    and divisor count of the radical.
    """

    value: int
    factors: tuple[tuple[int, int], ...]
    radical: int
    omega: int
    phi: int
    sigma_radical: int
    tau_radical: int

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __int__(self) -> int:
        return self.value


def factorize(n: int) -> FactoredInt:
    """Factor n >= 1 by trial division and populate every derived field."""
    if n < 1:
        raise ValueError(f"factorize requires a positive integer, got {n}")
    m = n
    factors: list[tuple[int, int]] = []
    for p in _SMALL_PRIMES:
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    if m > 1:
        # Continue past the prime table with a 6k+-1 wheel.
        p = _SMALL_PRIMES[-1] + 2
        p += (6 - p % 6) % 6 - 1  # align to 6k-1
        while p * p <= m:
            for cand in (p, p + 2):
                if m % cand == 0:
                    e = 0
                    while m % cand == 0:
                        m //= cand
                        e += 1
                    factors.append((cand, e))
            p += 6
        if m > 1:
            factors.append((m, 1))
    factors.sort()

    radical = 1
    phi = n
    for p, _ in factors:
        radical *= p
        phi = phi // p * (p - 1)
    sigma_rad = 1
    for p, _ in factors:
        sigma_rad *= p + 1
    return FactoredInt(
        value=n,
        factors=tuple(factors),
        radical=radical,
        omega=len(factors),
        phi=phi,
        sigma_radical=sigma_rad,
        tau_radical=1 << len(factors),
    )


def euler_phi(n: int) -> int:
    return factorize(n).phi


def sigma(n: int) -> int:
    """Sum of divisors of n."""
    if n < 1:
        raise ValueError(f"sigma requires a positive integer, got {n}")
    total = 1
    for p, e in factorize(n).factors:
        total *= (p ** (e + 1) - 1) // (p - 1)
    return total


def divisors(n: int) -> tuple[int, ...]:
    """All divisors of n in ascending order."""
    if n < 1:
        raise ValueError(f"divisors requires a positive integer, got {n}")
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


@dataclass(frozen=True)
class DivisorTuple:
    """Divisors of a square-free n0 in the canonical recursive order.

    The order is built one prime at a time: the tuple for r primes is the
    tuple for the first r-1 primes followed by the same entries multiplied
    by the largest prime. Mirror entries multiply to n0:
    entries[i] * entries[2^r - 1 - i] == n0.
    """

    n0: int
    entries: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def index_of(self, d: int) -> int:
        return self.entries.index(d)


def divisor_tuple(n0: int) -> DivisorTuple:
    """Canonical divisor ordering of a square-free integer.

    This ordering is the index space for every quotient matrix in the
    package; nothing else is ever exposed.
    """
    f = factorize(n0)
    if f.radical != n0:
        raise ValueError(f"{n0} is not square-free")
    entries = [1]
    for p in f.primes:
        entries = entries + [d * p for d in entries]
    return DivisorTuple(n0=n0, entries=tuple(entries))
