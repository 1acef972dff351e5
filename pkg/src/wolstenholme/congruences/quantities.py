"""Fermat quotients, harmonic and power sums, and Bernoulli numbers mod p."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Literal

import numpy as np

from .. import _vec
from ..errors import IndexOutOfRange
from ..modmath import ResidueClass, is_prime

Range = Literal["half", "full"]


def _check_prime(p: int, minimum: int) -> None:
    if p < minimum or not is_prime(p):
        raise ValueError(f"expected a prime >= {minimum}, got {p}")


def _top(p: int, rng: Range) -> int:
    if rng == "full":
        return p - 1
    if rng == "half":
        return (p - 1) // 2
    raise ValueError(f"range must be 'half' or 'full', got {rng!r}")


def rational_mod(x: Fraction | int, m: int) -> int:
    """Image of a rational with denominator prime to ``m`` in ``Z/mZ``."""
    x = Fraction(x)
    return x.numerator * pow(x.denominator, -1, m) % m


@dataclass(frozen=True)
class FermatQuotient:
    """``q = (2**(p-1) - 1) / p`` known modulo ``p**e``."""

    p: int
    e: int
    value: ResidueClass


def fermat_quotient(p: int, e: int = 1) -> FermatQuotient:
    _check_prime(p, 3)
    if e < 1:
        raise ValueError("precision must be at least 1")
    r = pow(2, p - 1, p ** (e + 1))
    # r = 1 (mod p) by Fermat, so the division is exact.
    return FermatQuotient(p, e, ResidueClass((r - 1) // p, p**e))


def harmonic_sum(p: int, s: int, rng: Range = "full", e: int = 1) -> ResidueClass:
    """``sum(1/i**s)`` over ``1..p-1`` (full) or ``1..(p-1)/2`` (half), mod ``p**e``."""
    _check_prime(p, 5)
    if s < 1:
        raise ValueError("power must be positive")
    return ResidueClass(_vec.inverse_power_sum(1, _top(p, rng), s, p, e), p**e)


def power_sum(p: int, n: int, rng: Range = "full") -> ResidueClass:
    """``sum(i**n) mod p`` over the range; negative ``n`` uses inverses."""
    _check_prime(p, 5)
    top = _top(p, rng)
    base = np.arange(1, top + 1, dtype=np.uint64)
    if n < 0:
        base = _vec.inverses(base, p)
    return ResidueClass(_vec.sum_array(_vec.powmod(base, abs(n), p), p), p)


@dataclass(frozen=True)
class HalfHarmonicData:
    """Harmonic sums of powers 1..3 over both ranges, each at moduli p, p**2, p**3."""

    p: int
    sums: dict = field(compare=False)

    def get(self, s: int, rng: Range, e: int) -> ResidueClass:
        return self.sums[(s, rng, e)]


def harmonic_data(p: int) -> HalfHarmonicData:
    sums = {
        (s, rng, e): harmonic_sum(p, s, rng, e)
        for s in (1, 2, 3)
        for rng in ("half", "full")
        for e in (1, 2, 3)
    }
    return HalfHarmonicData(p, sums)


# -- Bernoulli numbers ---------------------------------------------------------


@dataclass(frozen=True)
class BernoulliModP:
    p: int
    index: int
    value: ResidueClass


@lru_cache(maxsize=64)
def bernoulli_table(p: int) -> tuple[int, ...]:
    """``B_0 .. B_{p-3}`` mod ``p`` from ``sum_{k<=m} C(m+1, k) B_k = 0``.

    Pascal rows are carried mod ``p``; odd indices above 1 are set to zero
    without evaluation. O(p**2) work, vectorised across each row.
    """
    _check_prime(p, 3)
    top = p - 3
    if top < 0:
        return ()
    inv = [0] + [pow(i, -1, p) for i in range(1, p)]
    if p >= 1 << 31:
        raise ValueError("Bernoulli table limited to p < 2**31")
    bern = np.zeros(top + 1, dtype=np.int64)
    bern[0] = 1
    row = np.zeros(top + 2, dtype=np.int64)  # C(m, k) for the current m
    row[0] = row[1] = 1
    for m in range(1, top + 1):
        row[1 : m + 2] = (row[1 : m + 2] + row[0 : m + 1]) % p  # now C(m+1, k)
        if m > 1 and m % 2:
            continue
        s = int(np.sum(row[:m] * bern[:m] % p) % p)
        bern[m] = -s * inv[m + 1] % p
    return tuple(int(b) for b in bern)


def bernoulli_mod_p(p: int, m: int) -> BernoulliModP:
    """``B_m mod p`` for ``0 <= m <= p - 3``; the O(p**2) reference evaluation."""
    if m < 0 or m >= p - 2:
        raise IndexOutOfRange(f"B_{m} mod {p} needs 0 <= m <= p-3")
    return BernoulliModP(p, m, ResidueClass(bernoulli_table(p)[m], p))


def half_cubic_sum(p: int) -> int:
    """``sum_{k=1}^{(p-1)/2} k**-3 mod p``."""
    return _vec.inverse_power_sum(1, (p - 1) // 2, 3, p, 1)


# B_{p-3} = CUBIC_CONSTANT * half_cubic_sum(p) (mod p). Frozen from pin_cubic_constant
# over the primes 7..200; tests/test_quantities.py re-runs the pinning.
CUBIC_CONSTANT = Fraction(-1, 2)


def pin_cubic_constant(primes: Iterable[int], bound: int = 12) -> Fraction:
    """Find the unique small rational ``c`` with ``B_{p-3} = c * half_cubic_sum(p)`` for all ``primes``.

    Candidates are ``a/b`` with ``|a|, b <= bound``. Raises ``ValueError`` if
    no candidate or more than one survives.
    """
    data = [(p, half_cubic_sum(p), bernoulli_table(p)[p - 3]) for p in primes]
    found = set()
    for b in range(1, bound + 1):
        for a in range(-bound, bound + 1):
            c = Fraction(a, b)
            if all(p <= b or rational_mod(c, p) * s % p == bern for p, s, bern in data):
                found.add(c)
    if len(found) != 1:
        raise ValueError(f"constant not pinned: candidates {sorted(found)}")
    return found.pop()


def bernoulli_pm3_fast(p: int) -> ResidueClass:
    """``B_{p-3} mod p`` in O(p) from the half-range sum of inverse cubes."""
    _check_prime(p, 7)
    return ResidueClass(rational_mod(CUBIC_CONSTANT, p) * half_cubic_sum(p) % p, p)
