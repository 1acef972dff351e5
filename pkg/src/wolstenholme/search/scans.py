"""Work units and per-unit processing for every scan kind.

Each scan pairs a cheap criterion that is applied to every candidate with a
direct evaluation that confirms every hit. A seeded sample of the rejected
candidates is also evaluated directly, so a faulty criterion cannot silently
drop hits.
"""

from __future__ import annotations

import math
import random
from functools import lru_cache

import numpy as np

from ..congruences.digits import m_mod_p_array, w_mod_p_array
from ..congruences.values import b_pm3, family_value, pseudoprime_test
from ..errors import ConfirmationMismatch
from ..modmath import Factorization, ResidueClass, factorize, primes_below, primes_in
from .hits import ScanSpec, SearchHit

Unit = tuple  # (index, a, b, ...) -- plain tuples pickle cheaply


def unit_rng(spec: ScanSpec, index: int) -> random.Random:
    return random.Random(f"{spec.seed}:{index}")


# -- exact witnesses for the large-prime side ---------------------------------------


@lru_cache(maxsize=4096)
def exact_witness(m: int, family: str) -> int:
    """``|W_m - 1|`` or ``|A_m - 4**(m-1)|`` with ``A_m = (-1)**((m-1)/2) C(m-1, (m-1)/2)``.

    For a prime ``P > m``, ``P`` divides this integer exactly when
    ``W_{mP} = 1`` (resp. ``M_{mP} = 1``) mod ``P``, because the last base-P
    digit of ``mP`` is 0.
    """
    if family == "W":
        return abs(math.comb(2 * m - 1, m - 1) - 1)
    h = (m - 1) // 2
    a = math.comb(m - 1, h) * (-1 if h % 2 else 1)
    return abs(a - 4 ** (m - 1))


def big_mod_array(x: int, mods: np.ndarray) -> np.ndarray:
    """``x mod s`` for a big non-negative integer ``x`` and an int64 array of moduli."""
    mods = np.asarray(mods, dtype=np.int64)
    if mods.size == 0:
        return mods.copy()
    if int(mods.max()) >= 1 << 31:
        return np.array([x % int(s) for s in mods], dtype=np.int64)
    nbytes = max(4, (x.bit_length() + 31) // 32 * 4)
    words = np.frombuffer(x.to_bytes(nbytes, "big"), dtype=">u4").astype(np.int64)
    acc = np.zeros_like(mods)
    for w in words:
        acc = ((acc << 32) + w) % mods
    return acc


def residue_array(ns: np.ndarray, p: int, family: str) -> np.ndarray:
    return (w_mod_p_array if family == "W" else m_mod_p_array)(ns, p)


# -- unit lists -------------------------------------------------------------------


def make_units(spec: ScanSpec) -> list[Unit]:
    if spec.kind in ("wprimes", "mprimes", "square"):
        return [(i, a, min(a + spec.block, spec.hi)) for i, a in enumerate(range(spec.lo, spec.hi, spec.block))]
    if spec.kind == "general":
        step = 2 * spec.block
        return [(i, a, min(a + step, spec.hi)) for i, a in enumerate(range(0, spec.hi, step))]
    if spec.kind == "semiprime":
        bound = spec.hi
        units = []
        primes = primes_below(bound // 3 + 1)
        for r in primes_in(3, math.isqrt(bound - 1) + 1):
            top = (bound - 1) // r
            lo_i = int(np.searchsorted(primes, r, side="right"))
            hi_i = int(np.searchsorted(primes, top, side="right"))
            for start in range(lo_i, hi_i, spec.block):
                stop = min(start + spec.block, hi_i)
                units.append((len(units), r, int(primes[start]), int(primes[stop - 1])))
        return units
    raise ValueError(f"unknown scan kind {spec.kind!r}")


# -- processing -------------------------------------------------------------------


def _mismatch(what: str, n: int) -> ConfirmationMismatch:
    return ConfirmationMismatch(f"{what} for n = {n}")


def _prime_unit(spec: ScanSpec, unit: Unit) -> list[SearchHit]:
    index, a, b = unit
    family = "W" if spec.kind == "wprimes" else ("M" if spec.kind == "mprimes" else spec.family)
    square = spec.kind == "square"
    rng = unit_rng(spec, index)
    hits = []
    for p in primes_in(max(a, 5), b):
        b3 = b_pm3(p)
        flagged = b3.value == 0
        sampled = rng.random() < spec.sample_rate
        if not (flagged or sampled):
            continue
        if square:
            ok, residual = pseudoprime_test(p * p, family, 2, "direct", Factorization(((p, 2),)))
        else:
            residual = family_value(family, p, 4) - 1
            ok = residual.value == 0
        if ok != flagged:
            raise _mismatch(f"B_(p-3) criterion says {flagged}, direct evaluation says {ok}", p)
        if ok:
            if square:
                hits.append(SearchHit(p * p, family, "square-pseudoprime", 2, Factorization(((p, 2),)), residual))
            else:
                hits.append(SearchHit(p, family, "prime", 4, Factorization(((p, 1),)), residual, b_pm3=b3))
    return hits


def _direct(n: int, spec: ScanSpec, f: Factorization, order: int = 1) -> tuple[bool, ResidueClass]:
    return pseudoprime_test(n, spec.family, order, "direct", f)


def _semiprime_unit(spec: ScanSpec, unit: Unit) -> list[SearchHit]:
    index, r, s_lo, s_hi = unit
    rng = unit_rng(spec, index)
    s = np.array(primes_in(s_lo, s_hi + 1), dtype=np.int64)
    # W_{rs} = W_s (mod r) and W_{rs} = W_r (mod s), since the last digit is 0 in each base.
    pass_r = residue_array(s, r, spec.family) == 1 % r
    pass_s = big_mod_array(exact_witness(r, spec.family), s) == 0
    passed = pass_r & pass_s
    filtered = np.zeros(s.shape, dtype=bool)
    if spec.family == "W" and not spec.strict:
        # no twin pair and no Sophie Germain pair gives a pseudoprime
        filtered = (s == r + 2) | (s == 2 * r + 1)
    hits = []
    for i, si in enumerate(s.tolist()):
        n = r * si
        f = Factorization(((r, 1), (si, 1)))
        sampled = rng.random() < spec.sample_rate
        if passed[i] and not filtered[i]:
            ok1, res1 = _direct(n, spec, f)
            if not ok1:
                raise _mismatch("digit criterion accepted but direct evaluation rejected", n)
            ok, residual = (ok1, res1) if spec.order == 1 else _direct(n, spec, f, spec.order)
            if ok:
                hits.append(SearchHit(n, spec.family, "semiprime-pseudoprime", spec.order, f, residual))
        elif sampled:
            ok, _ = _direct(n, spec, f, spec.order)
            if ok:
                why = "filtered pair" if filtered[i] else "digit criterion rejected"
                raise _mismatch(f"{why} but direct evaluation accepted", n)
    return hits


def _general_unit(spec: ScanSpec, unit: Unit) -> list[SearchHit]:
    index, a, b = unit
    rng = unit_rng(spec, index)
    start = max(a, 9) | 1
    ns = np.arange(start, b, 2, dtype=np.int64)
    if ns.size == 0:
        return []
    rem = ns.copy()
    alive = np.ones(ns.shape, dtype=bool)
    nfactors = np.zeros(ns.shape, dtype=np.int64)
    for p in primes_in(3, math.isqrt(b - 1) + 1):
        first = (-start) % p
        # ns[i] = start + 2i; need start + 2i = 0 (mod p)
        first = first * pow(2, -1, p) % p
        idx = np.arange(first, ns.size, p)
        idx = idx[ns[idx] != p]
        if idx.size == 0:
            continue
        nfactors[idx] += 1
        sub = rem[idx]
        while True:
            div = sub % p == 0
            if not div.any():
                break
            sub = np.where(div, sub // p, sub)
        rem[idx] = sub
        live = idx[alive[idx]]
        alive[live] = residue_array(ns[live], p, spec.family) == 1 % p
    composite = nfactors > 0
    prime_power = (nfactors == 1) & (rem == 1)
    candidate = composite & (spec.include_prime_powers | ~prime_power)
    # one prime factor above the sieving bound: test it through the exact cofactor witness
    big = np.flatnonzero(alive & candidate & (rem > 1))
    if big.size:
        cof = ns[big] // rem[big]
        for m in np.unique(cof).tolist():
            sel = big[cof == m]
            ok = big_mod_array(exact_witness(int(m), spec.family), rem[sel]) == 0
            alive[sel[~ok]] = False
    hits = []
    for i in range(ns.size):
        if not candidate[i]:
            continue
        sampled = rng.random() < spec.sample_rate
        n = int(ns[i])
        if alive[i]:
            f = factorize(n)
            ok, residual = _direct(n, spec, f)
            squarefree = all(e == 1 for _, e in f)
            if squarefree and not ok:
                raise _mismatch("digit criterion accepted but direct evaluation rejected", n)
            if ok:
                hits.append(SearchHit(n, spec.family, "general-pseudoprime", 1, f, residual))
        elif sampled:
            ok, _ = _direct(n, spec, factorize(n))
            if ok:
                raise _mismatch("digit criterion rejected but direct evaluation accepted", n)
    return hits


def process_unit(spec: ScanSpec, unit: Unit) -> list[SearchHit]:
    if spec.kind in ("wprimes", "mprimes", "square"):
        return _prime_unit(spec, unit)
    if spec.kind == "semiprime":
        return _semiprime_unit(spec, unit)
    if spec.kind == "general":
        return _general_unit(spec, unit)
    raise ValueError(f"unknown scan kind {spec.kind!r}")
