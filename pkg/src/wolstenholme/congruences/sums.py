"""The S and T families of harmonic-type sums and the p**2 closed forms.

Notation (h = (p-1)/2, all sums over integers prime to p):

    S_a = sum_{i<=h} 1/i                    S_b = sum_{i<j<=h} 1/(ij)
    S_c = sum_{i<=(p*p-1)/2} 1/i            S_d = sum_{i<=h, j<=(p*p-1)/2} 1/(ij)
    S_e = sum_{i<j<k<=h} 1/(ijk)

and the T sums are the same with h replaced by p-1 and (p*p-1)/2 by p*p-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .. import _vec
from ..modmath import PrimePowerModulus, ResidueClass, binomial_mod_prime_power, is_prime
from .quantities import bernoulli_mod_p, bernoulli_pm3_fast, fermat_quotient, rational_mod

# Closed forms use the O(p**2) Bernoulli oracle up to here, the fast path above.
ORACLE_LIMIT = 2000


def _check(p: int) -> None:
    if p < 7 or not is_prime(p):
        raise ValueError(f"expected a prime p > 5, got {p}")


def _inv_sum(lo: int, hi: int, p: int, e: int, s: int = 1) -> int:
    return _vec.inverse_power_sum(lo, hi, s, p, e)


def _pair_sums(top: int, p: int) -> tuple[int, int]:
    """``(sum_{i<j<=top} 1/(i j**2), sum_{i<j<=top} 1/(i**2 j))`` mod ``p``."""
    if p >= 1 << 30:
        inv = [pow(i, -1, p) for i in range(1, top + 1)]
        a = b = c1 = c2 = 0
        for x in inv:
            a += c1 * x * x
            b += c2 * x
            c1 += x
            c2 += x * x
        return a % p, b % p
    inv = np.array([pow(i, -1, p) for i in range(1, top + 1)], dtype=np.int64)
    inv2 = inv * inv % p
    # exclusive prefix sums: sum over i < j
    pre1 = (np.cumsum(inv) - inv) % p
    pre2 = (np.cumsum(inv2) - inv2) % p
    a = int(np.sum(pre1 * inv2 % p) % p)
    b = int(np.sum(pre2 * inv % p) % p)
    return a, b


def ij_square_sums(p: int) -> tuple[ResidueClass, ResidueClass]:
    """Half-range ``sum_{i<j} 1/(i j**2)`` and ``sum_{i<j} 1/(i**2 j)`` mod ``p``."""
    _check(p)
    a, b = _pair_sums((p - 1) // 2, p)
    return ResidueClass(a, p), ResidueClass(b, p)


def _cubic_e(top: int, p: int) -> int:
    """``sum_{i<j<k<=top} 1/(ijk) mod p`` from the expansion of ``(sum 1/i)**3``."""
    s1 = _inv_sum(1, top, p, 1)
    s3 = _inv_sum(1, top, p, 1, 3)
    a, b = _pair_sums(top, p)
    return (s1**3 - s3 - 3 * a - 3 * b) * pow(6, -1, p) % p


def triple_sum_direct(top: int, p: int) -> int:
    """``sum_{i<j<k<=top} 1/(ijk) mod p`` by the literal triple loop; O(top**3)."""
    inv = [pow(i, -1, p) for i in range(1, top + 1)]
    total = 0
    for k in range(top):
        for j in range(k):
            ij = inv[k] * inv[j]
            for i in range(j):
                total += ij * inv[i]
    return total % p


@dataclass(frozen=True)
class SSumRecord:
    p: int
    s_a: ResidueClass  # mod p**3
    s_b: ResidueClass  # mod p**2
    s_c: ResidueClass  # mod p**2
    s_d: ResidueClass  # mod p
    s_e: ResidueClass  # mod p


@dataclass(frozen=True)
class TSumRecord:
    p: int
    t_a: ResidueClass
    t_b: ResidueClass
    t_c: ResidueClass
    t_d: ResidueClass
    t_e: ResidueClass


def s_c_direct(p: int) -> ResidueClass:
    """S_c mod p**2 by summing every term; O(p**2)."""
    return ResidueClass(_inv_sum(1, (p * p - 1) // 2, p, 2), p * p)


def s_c_block(p: int) -> ResidueClass:
    """S_c mod p**2 keeping only the last, partial block of ``(p-1)/2`` terms.

    Every full run of ``p - 1`` consecutive integers prime to ``p`` sums to 0
    mod ``p**2``, and ``(p*p-1)/2 = h*p + h`` with ``h = (p-1)/2``.
    """
    h = (p - 1) // 2
    return ResidueClass(_inv_sum(h * p + 1, h * p + h, p, 2), p * p)


def s_sums(p: int) -> SSumRecord:
    _check(p)
    h = (p - 1) // 2
    p2 = p * p
    s_a = _inv_sum(1, h, p, 3)
    h2 = _inv_sum(1, h, p, 2, 2)
    s_b = (s_a * s_a - h2) * pow(2, -1, p2) % p2
    s_c = s_c_block(p).value
    # The double sum factors as (sum over i) * (sum over j).
    s_d = _inv_sum(1, h, p, 1) * _inv_sum(1, (p2 - 1) // 2, p, 1) % p
    s_e = _cubic_e(h, p)
    return SSumRecord(
        p,
        ResidueClass(s_a, p**3),
        ResidueClass(s_b, p2),
        ResidueClass(s_c, p2),
        ResidueClass(s_d, p),
        ResidueClass(s_e, p),
    )


def t_sums(p: int) -> TSumRecord:
    _check(p)
    p2 = p * p
    t_a = _inv_sum(1, p - 1, p, 3)
    h2 = _inv_sum(1, p - 1, p, 2, 2)
    t_b = (t_a * t_a - h2) * pow(2, -1, p2) % p2
    t_c = _inv_sum(1, p2 - 1, p, 2)
    t_d = _inv_sum(1, p - 1, p, 1) * _inv_sum(1, p2 - 1, p, 1) % p
    t_e = _cubic_e(p - 1, p)
    return TSumRecord(
        p,
        ResidueClass(t_a, p**3),
        ResidueClass(t_b, p2),
        ResidueClass(t_c, p2),
        ResidueClass(t_d, p),
        ResidueClass(t_e, p),
    )


# -- closed forms at p**2 ---------------------------------------------------------


def bernoulli_reference(p: int) -> int:
    """``B_{p-3} mod p``: oracle for small ``p``, fast path beyond ``ORACLE_LIMIT``."""
    if p <= ORACLE_LIMIT:
        return bernoulli_mod_p(p, p - 3).value.value
    return bernoulli_pm3_fast(p).value


@dataclass(frozen=True)
class SquareFormulas:
    """Values mod ``p**4`` attached to ``p**2``.

    Pairs meant to agree: (w_direct, w_closed), (m_direct, m_closed),
    (pow4_direct, pow4_closed).
    """

    p: int
    w_direct: ResidueClass
    w_closed: ResidueClass
    m_direct: ResidueClass
    m_closed: ResidueClass
    pow4_direct: ResidueClass
    pow4_closed: ResidueClass


@lru_cache(maxsize=512)
def square_pseudoprime_formulas(p: int) -> SquareFormulas:
    _check(p)
    pm = PrimePowerModulus(p, 4)
    m = pm.m
    n = p * p
    q = fermat_quotient(p, 3).value.value
    b = bernoulli_reference(p)
    p3b = p**3 * b
    w_direct = binomial_mod_prime_power(2 * n - 1, n - 1, pm).value
    w_closed = (1 + rational_mod(2 * p3b, m) * pow(3, -1, m)) % m
    # 4**(n-1) M_n = (-1)**((n-1)/2) C(n-1, (n-1)/2); (n-1)/2 is even for odd p.
    m_direct = binomial_mod_prime_power(n - 1, (n - 1) // 2, pm).value
    four_pow = (1 + p * q) ** 2 + 2 * p * p * q + 3 * p**3 * q * q
    m_closed = (four_pow + p3b * pow(12, -1, m)) % m
    pow4_direct = pow(4, n - 1, m)
    return SquareFormulas(
        p,
        ResidueClass(w_direct, m),
        ResidueClass(w_closed, m),
        ResidueClass(m_direct, m),
        ResidueClass(m_closed, m),
        ResidueClass(pow4_direct, m),
        ResidueClass(four_pow % m, m),
    )
