"""Vectorised modular arithmetic on ``uint64`` arrays.

Products are reduced with the floating-point quotient trick: the quotient
``a*b // m`` is estimated in float64 (or x87 extended precision for larger
moduli) and the remainder is corrected in wrapping 64-bit integer
arithmetic. Every helper falls back to plain Python integers when the
modulus does not fit the fast tier, so callers never need to branch.
"""

from __future__ import annotations

import numpy as np

_F64_LIMIT = 1 << 50
# A 64-bit mantissa keeps the quotient error below 1/4 for m < 2**61.
FAST_LIMIT = (1 << 61) if np.finfo(np.longdouble).nmant >= 63 else _F64_LIMIT

_CHUNK = 1 << 20
_SMALL = 48


def fits(m: int) -> bool:
    """True when arithmetic mod ``m`` can run on uint64 arrays."""
    return 1 < m < FAST_LIMIT


def mulmod(a: np.ndarray, b: np.ndarray, m: int) -> np.ndarray:
    """Elementwise ``a * b % m`` for uint64 arrays with entries below ``m``."""
    if m < _F64_LIMIT:
        q = np.floor(a.astype(np.float64) * b.astype(np.float64) / float(m))
    else:
        q = np.floor(a.astype(np.longdouble) * b.astype(np.longdouble) / np.longdouble(m))
    r = (a * b - q.astype(np.uint64) * np.uint64(m)).view(np.int64)
    return np.mod(r, np.int64(m)).view(np.uint64)


def addmod(a: np.ndarray, b: np.ndarray, m: int) -> np.ndarray:
    s = a + b
    return np.where(s >= np.uint64(m), s - np.uint64(m), s)


def prod_array(a: np.ndarray, m: int) -> int:
    """Product of a uint64 array (entries already reduced) modulo ``m``."""
    a = np.asarray(a, dtype=np.uint64)
    if a.size == 0:
        return 1 % m
    while a.size > 1:
        if a.size & 1:
            tail = a[-1:]
            a = np.concatenate([mulmod(a[0:-1:2], a[1::2], m), tail])
        else:
            a = mulmod(a[0::2], a[1::2], m)
    return int(a[0])


def sum_array(a: np.ndarray, m: int) -> int:
    """Sum of a uint64 array modulo ``m`` without overflowing."""
    a = np.asarray(a, dtype=np.uint64)
    hi = int(np.sum(a >> np.uint64(32), dtype=np.uint64))
    lo = int(np.sum(a & np.uint64(0xFFFFFFFF), dtype=np.uint64))
    return ((hi << 32) + lo) % m


def powmod(base: np.ndarray, exp: int, m: int) -> np.ndarray:
    """Elementwise ``base ** exp % m`` with a shared non-negative exponent."""
    if exp < 0:
        raise ValueError("negative exponent")
    result = np.full(base.shape, 1 % m, dtype=np.uint64)
    b = base.astype(np.uint64) % np.uint64(m)
    while exp:
        if exp & 1:
            result = mulmod(result, b, m)
        exp >>= 1
        if exp:
            b = mulmod(b, b, m)
    return result


def _coprime_range(lo: int, hi: int, skip: int | None) -> np.ndarray:
    vals = np.arange(lo, hi + 1, dtype=np.uint64)
    if skip is not None:
        vals = vals[vals % np.uint64(skip) != 0]
    return vals


def range_product(lo: int, hi: int, m: int, skip: int | None = None) -> int:
    """Product of the integers in ``[lo, hi]`` not divisible by ``skip``, mod ``m``.

    ``lo`` must be positive. An empty range gives ``1 % m``.
    """
    if m == 1:
        return 0
    if hi < lo:
        return 1
    if hi - lo < _SMALL or not fits(m) or hi >= 1 << 63:
        acc = 1
        for i in range(lo, hi + 1):
            if skip is None or i % skip:
                acc = acc * i % m
        return acc
    acc = 1
    for start in range(lo, hi + 1, _CHUNK):
        stop = min(hi, start + _CHUNK - 1)
        vals = _coprime_range(start, stop, skip)
        if stop >= m:
            vals %= np.uint64(m)
        acc = acc * prod_array(vals, m) % m
    return acc


def inverse_power_sum(lo: int, hi: int, s: int, p: int, e: int) -> int:
    """``sum(i**-s for i in [lo, hi] if p does not divide i)`` modulo ``p**e``.

    Inverses come from Euler's theorem, ``i**(phi - s)``; the caller must
    ensure ``s < phi(p**e)``.
    """
    m = p**e
    phi = p ** (e - 1) * (p - 1)
    if hi < lo:
        return 0
    if hi - lo < _SMALL or not fits(m) or hi >= 1 << 63:
        return sum(pow(i, -s, m) for i in range(lo, hi + 1) if i % p) % m
    total = 0
    for start in range(lo, hi + 1, _CHUNK):
        stop = min(hi, start + _CHUNK - 1)
        vals = _coprime_range(start, stop, p) % np.uint64(m)
        total += sum_array(powmod(vals, phi - s, m), m)
    return total % m


def inverses(vals: np.ndarray, p: int, e: int = 1) -> np.ndarray:
    """Elementwise inverses modulo ``p**e`` of values coprime to ``p``."""
    m = p**e
    return powmod(vals, p ** (e - 1) * (p - 1) - 1, m)
