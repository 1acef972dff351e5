"""Modular arithmetic kernel: residues, primality, factoring, CRT and binomials.

Binomial coefficients modulo ``p**e`` are computed from the p-free parts of
factorials (the product of integers up to ``N`` that are prime to ``p``) and
an explicit count of the power of ``p`` dividing the coefficient. Long runs
of full residue blocks are collapsed by polynomial doubling, so the cost is
``O(p * e**2 + log(N) * e**2)`` rather than ``O(N)``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _vec
from .errors import NonCoprimeModuli, NotInvertible


@dataclass(frozen=True)
class ResidueClass:
    """An integer class ``value (mod modulus)`` with ``0 <= value < modulus``.

    Modulus 1 is allowed and stands for the single class ``0 (mod 1)``.
    """

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"value {self.value} not reduced mod {self.modulus}")

    @classmethod
    def of(cls, value: int, modulus: int) -> "ResidueClass":
        return cls(value % modulus, modulus)

    def _other(self, other) -> int:
        if isinstance(other, ResidueClass):
            if other.modulus != self.modulus:
                raise ValueError(f"moduli differ: {self.modulus} vs {other.modulus}")
            return other.value
        return int(other)

    def __add__(self, other):
        return ResidueClass.of(self.value + self._other(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return ResidueClass.of(self.value - self._other(other), self.modulus)

    def __rsub__(self, other):
        return ResidueClass.of(self._other(other) - self.value, self.modulus)

    def __mul__(self, other):
        return ResidueClass.of(self.value * self._other(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return ResidueClass.of(-self.value, self.modulus)

    def __int__(self):
        return self.value

    def is_one(self) -> bool:
        """True when the class is 1; the degenerate class mod 1 counts as one."""
        return self.value == 1 % self.modulus

    def reduce(self, modulus: int) -> "ResidueClass":
        if self.modulus % modulus:
            raise ValueError(f"{modulus} does not divide {self.modulus}")
        return ResidueClass(self.value % modulus, modulus)

    def __str__(self):
        return f"{self.value} (mod {self.modulus})"


@dataclass(frozen=True)
class PrimePowerModulus:
    p: int
    e: int

    def __post_init__(self):
        if self.e < 1:
            raise ValueError("exponent must be at least 1")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def m(self) -> int:
        return self.p**self.e


@dataclass(frozen=True)
class Factorization:
    """Prime factorisation as ``((p1, e1), (p2, e2), ...)`` with increasing primes."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)) or any(e < 1 for _, e in self.factors):
            raise ValueError(f"malformed factorisation {self.factors}")

    @property
    def n(self) -> int:
        return math.prod(p**e for p, e in self.factors)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def is_prime_power(self) -> bool:
        return len(self.factors) == 1

    def as_lists(self) -> list[list[int]]:
        return [[p, e] for p, e in self.factors]


# -- primes -----------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin.

    The first twelve primes as witnesses are proven sufficient for every
    n < 3.3e24, which covers the whole 64-bit range.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=8)
def _sieve(limit: int) -> np.ndarray:
    flags = np.ones(limit, dtype=bool)
    flags[:2] = False
    for i in range(2, math.isqrt(limit - 1) + 1):
        if flags[i]:
            flags[i * i :: i] = False
    return np.flatnonzero(flags)


def primes_below(limit: int) -> np.ndarray:
    """Sorted int64 array of the primes ``< limit``."""
    if limit <= 2:
        return np.zeros(0, dtype=np.int64)
    # Round up so repeated calls with nearby limits share one sieve.
    size = 1 << max(10, (limit - 1).bit_length())
    primes = _sieve(size)
    return primes[: np.searchsorted(primes, limit)]


def primes_in(lo: int, hi: int) -> list[int]:
    """Primes in ``[lo, hi)``."""
    if hi <= lo:
        return []
    primes = primes_below(hi)
    return [int(p) for p in primes[np.searchsorted(primes, lo) :]]


# -- inverses, powers, CRT ----------------------------------------------------


def mod_pow(base: ResidueClass, exp: int) -> ResidueClass:
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    return ResidueClass(pow(base.value, exp, base.modulus), base.modulus)


def mod_inverse(a: int, m: int) -> ResidueClass:
    g = math.gcd(a, m)
    if g != 1:
        raise NotInvertible(a, m, g)
    return ResidueClass(pow(a, -1, m) if m > 1 else 0, m)


def crt_combine(parts: Sequence[ResidueClass]) -> ResidueClass:
    """Combine residues with pairwise coprime moduli into one class."""
    if not parts:
        raise ValueError("no residues to combine")
    for i, a in enumerate(parts):
        for b in parts[i + 1 :]:
            g = math.gcd(a.modulus, b.modulus)
            if g != 1:
                raise NonCoprimeModuli(a.modulus, b.modulus, g)
    value, modulus = 0, 1
    for part in parts:
        # value + modulus * t = part.value  (mod part.modulus)
        t = (part.value - value) * (pow(modulus, -1, part.modulus) if part.modulus > 1 else 0)
        value += modulus * (t % part.modulus)
        modulus *= part.modulus
    return ResidueClass(value % modulus, modulus)


# -- factoring ----------------------------------------------------------------

_TRIAL_LIMIT = 10**6


def _pollard_brent(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _factor_rho(n: int, out: dict[int, int], rng: random.Random) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n, rng)
    _factor_rho(d, out, rng)
    _factor_rho(n // d, out, rng)


def factorize(n: int) -> Factorization:
    """Complete factorisation of ``n >= 1``: trial division below 10**6, then Brent's rho."""
    if n < 1:
        raise ValueError("n must be positive")
    out: dict[int, int] = {}
    limit = min(math.isqrt(n), _TRIAL_LIMIT)
    if n < 1 << 62:
        primes = primes_below(limit + 1)
        hits = primes[np.int64(n) % primes == 0] if primes.size else primes
        divisors: Iterable[int] = (int(p) for p in hits)
    else:
        divisors = (int(p) for p in primes_below(limit + 1))
    for p in divisors:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        if n <= _TRIAL_LIMIT**2 or is_prime(n):
            out[n] = out.get(n, 0) + 1
        else:
            _factor_rho(n, out, random.Random(n))
    return Factorization(tuple(sorted(out.items())))


def factor_odd(n: int) -> Factorization:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"factor_odd expects an odd n >= 3, got {n}")
    return factorize(n)


# -- binomial coefficients ----------------------------------------------------


def binomial_exact(n: int, k: int) -> int:
    return math.comb(n, k)


def _legendre(n: int, p: int) -> int:
    """Exponent of ``p`` in ``n!``."""
    v = 0
    while n:
        n //= p
        v += n
    return v


def _polymul(a: list[int], b: list[int], m: int) -> list[int]:
    e = len(a)
    out = [0] * e
    for i, ai in enumerate(a):
        if ai:
            for j in range(e - i):
                out[i + j] += ai * b[j]
    return [c % m for c in out]


def _shift(poly: list[int], s: int, m: int) -> list[int]:
    """Coefficients of ``poly(t + s)``, truncated to the same length."""
    e = len(poly)
    out = [0] * e
    spow = [pow(s, i, m) for i in range(e)]
    for k, c in enumerate(poly):
        if c:
            for j in range(k + 1):
                out[j] += c * math.comb(k, j) * spow[k - j]
    return [c % m for c in out]


@lru_cache(maxsize=256)
def _block_poly(p: int, e: int) -> tuple[int, ...]:
    """``prod_{i=1}^{p-1} (p*t + i)`` as a polynomial in ``t``, mod ``p**e``.

    The coefficient of ``t**k`` carries a factor ``p**k``, so only degrees
    below ``e`` survive the reduction.
    """
    m = p**e
    if _vec.fits(m) and p > 64:
        # Product tree over the linear factors (x + i), coefficients stored by column.
        polys = np.zeros((p - 1, e), dtype=np.uint64)
        polys[:, 0] = np.arange(1, p, dtype=np.uint64)
        if e > 1:
            polys[:, 1] = 1
        while polys.shape[0] > 1:
            if polys.shape[0] & 1:
                pad = np.zeros((1, e), dtype=np.uint64)
                pad[0, 0] = 1
                polys = np.vstack([polys, pad])
            a, b = polys[0::2], polys[1::2]
            nxt = np.zeros_like(a)
            for i in range(e):
                for j in range(e - i):
                    nxt[:, i + j] = _vec.addmod(nxt[:, i + j], _vec.mulmod(a[:, i], b[:, j], m), m)
            polys = nxt
        coeffs = [int(c) for c in polys[0]]
    else:
        coeffs = [1] + [0] * (e - 1)
        for i in range(1, p):
            for k in range(e - 1, 0, -1):
                coeffs[k] = (coeffs[k] * i + coeffs[k - 1]) % m
            coeffs[0] = coeffs[0] * i % m
    return tuple(c * p**k % m for k, c in enumerate(coeffs))


def _full_blocks(q: int, p: int, e: int) -> int:
    """``prod_{j<q} prod_{i=1}^{p-1} (j*p + i)`` mod ``p**e`` by binary doubling."""
    m = p**e
    g = list(_block_poly(p, e))
    acc = [1 % m] + [0] * (e - 1)
    count = 0
    for bit in bin(q)[2:]:
        acc = _polymul(acc, _shift(acc, count, m), m)
        count *= 2
        if bit == "1":
            acc = _polymul(acc, _shift(g, count, m), m)
            count += 1
    return acc[0]


def unit_factorial(n: int, p: int, e: int) -> int:
    """Product of the integers ``1..n`` prime to ``p``, modulo ``p**e``."""
    m = p**e
    q, r = divmod(n, p)
    if n <= 4 * p + 4096:
        return _vec.range_product(1, n, m, skip=p)
    return _full_blocks(q, p, e) * _vec.range_product(q * p + 1, q * p + r, m) % m


def _unit_factorials(ns: Iterable[int], p: int, e: int) -> dict[int, int]:
    m = p**e
    wanted = sorted(set(ns))
    out: dict[int, int] = {}
    small = [n for n in wanted if n <= 4 * p + 4096]
    # Small arguments share one running product over consecutive segments.
    acc, prev = 1 % m, 0
    for n in small:
        acc = acc * _vec.range_product(prev + 1, n, m, skip=p) % m
        out[n] = acc
        prev = n
    for n in wanted:
        if n not in out:
            out[n] = unit_factorial(n, p, e)
    return out


def binomial_mod_prime(n: int, k: int, p: int) -> int:
    """``C(n, k) mod p`` by Lucas' theorem, one base-p digit at a time."""
    if k < 0 or k > n:
        return 0
    acc = 1
    while n or k:
        (n, a), (k, b) = divmod(n, p), divmod(k, p)
        if b > a:
            return 0
        b = min(b, a - b)
        if b:
            num = _vec.range_product(a - b + 1, a, p)
            den = _vec.range_product(1, b, p)
            acc = acc * num * pow(den, -1, p) % p
    return acc


def binomial_mod_prime_power(n: int, k: int, pm: PrimePowerModulus) -> ResidueClass:
    """``C(n, k) mod p**e``, exact even when ``p`` divides intermediate factors."""
    p, e, m = pm.p, pm.e, pm.m
    if k < 0 or k > n:
        return ResidueClass(0, m)
    if e == 1:
        return ResidueClass(binomial_mod_prime(n, k, p), m)
    v = _legendre(n, p) - _legendre(k, p) - _legendre(n - k, p)
    if v >= e:
        return ResidueClass(0, m)
    levels = []
    a, b, c = n, k, n - k
    while a:
        levels.append((a, b, c))
        a, b, c = a // p, b // p, c // p
    table = _unit_factorials((x for lvl in levels for x in lvl), p, e)
    num = den = 1
    for a, b, c in levels:
        num = num * table[a] % m
        den = den * table[b] * table[c] % m
    return ResidueClass(p**v * num * pow(den, -1, m) % m, m)


def binomial_mod_prime_power_direct(n: int, k: int, pm: PrimePowerModulus) -> ResidueClass:
    """Reference ``C(n, k) mod p**e`` from the product ``prod (n-k+i)/i``.

    O(k) and deliberately naive; kept as an independent path for cross-checks.
    """
    p, m = pm.p, pm.m
    if k < 0 or k > n:
        return ResidueClass(0, m)
    k = min(k, n - k)
    v = 0
    num = den = 1
    for i in range(1, k + 1):
        a, b = n - k + i, i
        while a % p == 0:
            a //= p
            v += 1
        while b % p == 0:
            b //= p
            v -= 1
        num = num * a % m
        den = den * b % m
    if v >= pm.e:
        return ResidueClass(0, m)
    return ResidueClass(p**v * num * pow(den, -1, m) % m, m)
