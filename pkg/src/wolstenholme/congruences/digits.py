"""W_n and M_n modulo a prime from the base-p digits of n.

Both evaluators peel one base-p digit per step and finish with a lookup in
a per-prime table built from the one-step recurrences

    W_n = 4 (2n-1)/(2n) W_{n-1},   W_0 = 1/2
    M_n = -1/4 (n-2)/(n-1) M_{n-2}, M_1 = 1

so a query costs O(log_p n) after an O(p) table build.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..modmath import ResidueClass, binomial_mod_prime, is_prime

# Primes above this get no table; base values are evaluated on demand instead.
TABLE_LIMIT = 1 << 17


def _check(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise ValueError(f"expected an odd prime, got {p}")


@lru_cache(maxsize=512)
def w_table(p: int) -> tuple[int, ...]:
    """``W_0 .. W_{p-1}`` mod ``p``."""
    _check(p)
    table = [pow(2, -1, p)]
    for n in range(1, p):
        table.append(table[-1] * 4 * (2 * n - 1) * pow(2 * n, -1, p) % p)
    return tuple(table)


@lru_cache(maxsize=512)
def m_table(p: int) -> tuple[int, ...]:
    """``M_n mod p`` indexed by ``n < p``; even slots hold 0 and are never read."""
    _check(p)
    table = [0] * p
    table[1] = 1
    quarter = pow(4, -1, p)
    for n in range(3, p, 2):
        table[n] = -quarter * (n - 2) * pow(n - 1, -1, p) * table[n - 2] % p
    return tuple(table)


def w_direct_mod_p(n: int, p: int) -> int:
    """``W_n mod p`` straight from ``C(2n-1, n-1)`` (Lucas); ``W_0 = 1/2``."""
    if n == 0:
        return pow(2, -1, p)
    return binomial_mod_prime(2 * n - 1, n - 1, p)


def m_direct_mod_p(n: int, p: int) -> int:
    """``M_n mod p`` straight from its binomial definition."""
    h = (n - 1) // 2
    sign = -1 if h % 2 else 1
    return sign * binomial_mod_prime(n - 1, h, p) * pow(4, 1 - n, p) % p


def _w_base(n: int, p: int) -> int:
    if p <= TABLE_LIMIT:
        return w_table(p)[n]
    return w_direct_mod_p(n, p)


def _m_base(n: int, p: int) -> int:
    if p <= TABLE_LIMIT:
        return m_table(p)[n]
    return m_direct_mod_p(n, p)


def w_mod_p_int(n: int, p: int) -> int:
    acc = 1
    half = (p - 1) // 2
    while n >= p:
        m, r = divmod(n, p)
        if r > half:
            return 0
        if r:
            acc = acc * 2 * _w_base(r, p) % p
        n = m
    return acc * _w_base(n, p) % p


def m_mod_p_int(n: int, p: int) -> int:
    acc = 1
    while n >= p:
        m, r = divmod(n, p)
        if r == 0:
            n = m
            continue
        if m % 2:
            return 0
        acc = acc * _m_base(r, p) % p
        n = m + 1
    return acc * _m_base(n, p) % p


def w_mod_p(n: int, p: int) -> ResidueClass:
    """``W_n mod p`` for ``n >= 0`` (with ``W_0 = 1/2``)."""
    _check(p)
    if n < 0:
        raise ValueError("n must be non-negative")
    return ResidueClass(w_mod_p_int(n, p), p)


def m_mod_p(n: int, p: int) -> ResidueClass:
    """``M_n mod p`` for odd ``n >= 1``."""
    _check(p)
    if n < 1 or n % 2 == 0:
        raise ValueError(f"M_n needs odd n >= 1, got {n}")
    return ResidueClass(m_mod_p_int(n, p), p)


def w_reflection_sides(n: int, p: int) -> tuple[int, int]:
    """Both sides of ``W_n = 4**(2n) (-1)**((p-1)/2) W_{(p-1)/2-n} (mod p)``.

    The left side comes from the table, the right side from Lucas. For
    ``n > (p-1)/2`` the right index is negative; running the recurrence
    backwards from ``W_0`` makes every negative index 0, and that value is used.
    """
    half = (p - 1) // 2
    j = half - n
    rhs_w = w_direct_mod_p(j, p) if j >= 0 else 0
    sign = -1 if half % 2 else 1
    rhs = pow(4, 2 * n, p) * sign * rhs_w % p
    return w_mod_p_int(n, p), rhs


def m_reflection_sides(n: int, p: int) -> tuple[int, int]:
    """Both sides of ``M_n = 4**(1-n) M_{p-n+1} (mod p)`` for odd ``n``."""
    return m_mod_p_int(n, p), pow(4, 1 - n, p) * m_direct_mod_p(p - n + 1, p) % p


def w_reflection_check(n: int, p: int) -> bool:
    if not 0 < n < p:
        raise ValueError("reflection is stated for 0 < n < p")
    _check(p)
    lhs, rhs = w_reflection_sides(n, p)
    return lhs == rhs


def m_reflection_check(n: int, p: int) -> bool:
    if not 0 < n < p or n % 2 == 0:
        raise ValueError("M reflection needs odd n with 0 < n < p")
    _check(p)
    lhs, rhs = m_reflection_sides(n, p)
    return lhs == rhs


# -- array versions for scans ------------------------------------------------------


def w_mod_p_array(ns: np.ndarray, p: int) -> np.ndarray:
    """``W_n mod p`` for every entry of a non-negative int64 array; needs a table-sized ``p``."""
    table = np.array(w_table(p), dtype=np.int64)
    half = (p - 1) // 2
    cur = np.asarray(ns, dtype=np.int64).copy()
    acc = np.ones_like(cur)
    dead = np.zeros(cur.shape, dtype=bool)
    while True:
        big = cur >= p
        if not big.any():
            break
        r = np.where(big, cur % p, 0)
        dead |= r > half
        step = big & (r > 0) & ~dead
        acc[step] = acc[step] * 2 * table[r[step]] % p
        cur = np.where(big, cur // p, cur)
    out = acc * table[cur] % p
    out[dead] = 0
    return out


def m_mod_p_array(ns: np.ndarray, p: int) -> np.ndarray:
    """``M_n mod p`` for every entry of an array of odd positive int64 values."""
    table = np.array(m_table(p), dtype=np.int64)
    cur = np.asarray(ns, dtype=np.int64).copy()
    acc = np.ones_like(cur)
    dead = np.zeros(cur.shape, dtype=bool)
    while True:
        big = (cur >= p) & ~dead
        if not big.any():
            break
        m, r = cur // p, cur % p
        dead |= big & (r > 0) & (m % 2 == 1)
        step = big & (r > 0) & ~dead
        acc[step] = acc[step] * table[r[step]] % p
        cur = np.where(big & (r == 0), m, cur)
        cur = np.where(step, m + 1, cur)
    cur = np.where(dead, 1, cur)
    out = acc * table[cur] % p
    out[dead] = 0
    return out
