"""Empirical checks of the congruences used throughout the package.

Each registry entry names one statement, enumerates test inputs for a range
limit, and evaluates the two sides of the statement through separate code
paths. A verdict lists every input where the sides differ, with both values,
so any counterexample can be replayed with :func:`replay`.
"""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .congruences import digits
from .congruences.quantities import (
    bernoulli_mod_p,
    bernoulli_table,
    fermat_quotient,
    harmonic_sum,
    power_sum,
    rational_mod,
)
from .congruences.sums import (
    bernoulli_reference,
    ij_square_sums,
    s_c_block,
    s_c_direct,
    s_sums,
    square_pseudoprime_formulas,
    triple_sum_direct,
)
from .congruences.values import m_value, pseudoprime_test, w_value
from .errors import UnknownStatement
from .modmath import PrimePowerModulus, binomial_mod_prime, binomial_mod_prime_power, primes_in

PROFILES = {
    "quick": {"linear": 100, "quadratic": 100, "cubic": 40, "corollary": 10**4},
    "standard": {"linear": 2000, "quadratic": 300, "cubic": 60, "corollary": 10**6},
    "extended": {"linear": 10**5, "quadratic": 2000, "cubic": 150, "corollary": 10**7},
}

REFLECTION = ("w-reflect", "m-reflect")


@dataclass
class StatementVerdict:
    id: str
    description: str
    range: str
    status: str  # pass | fail | partial
    counterexamples: list = field(default_factory=list)
    runtime: float = 0.0
    checked: int = 0
    note: str = ""

    def to_record(self) -> dict:
        rec = asdict(self)
        rec["runtime"] = round(self.runtime, 3)
        return rec


@dataclass(frozen=True)
class Statement:
    id: str
    description: str
    cost: str
    inputs: Callable[[int], Iterable[dict]]
    sides: Callable[..., tuple]
    paths: str
    range_text: Callable[[int], str]


REGISTRY: dict[str, Statement] = {}


def statement(id, description, cost, paths, range_text):
    def deco(fn):
        inputs, sides = fn()
        REGISTRY[id] = Statement(id, description, cost, inputs, sides, paths, range_text)
        return fn

    return deco


def _primes(lo: int, hi: int) -> Iterator[dict]:
    return ({"p": p} for p in primes_in(lo, hi + 1))


def _exact_w(n: int) -> Fraction:
    return Fraction(1, 2) if n == 0 else Fraction(math.comb(2 * n - 1, n - 1))


def _exact_m(n: int) -> Fraction:
    h = (n - 1) // 2
    return Fraction((-1) ** h * math.comb(n - 1, h), 4 ** (n - 1))


def _q(p: int, e: int = 2) -> int:
    return fermat_quotient(p, e).value.value


def _b(p: int) -> int:
    return bernoulli_mod_p(p, p - 3).value.value


def _r(x, m: int) -> int:
    return rational_mod(Fraction(x), m)


def _primes_text(lo):
    return lambda L: f"primes {lo} <= p <= {L}"


# -- harmonic sums and power sums -------------------------------------------------


@statement(
    "wolst-harmonic",
    "sum_{i=1}^{p-1} 1/i = 0 (mod p^2)",
    "linear",
    "vectorised sum of i^(phi-1) mod p^2 vs the constant 0",
    _primes_text(5),
)
def _():
    return (lambda L: _primes(5, L)), (lambda p: (harmonic_sum(p, 1, "full", 2).value, 0))


def _glaisher_inputs(L, half):
    for p in primes_in(5, L + 1):
        for n in range(-2 * (p - 1), 2 * (p - 1) + 1):
            if half and (n % 2 or n % (p - 1) == 0):
                continue
            yield {"p": p, "n": n}


@statement(
    "glaisher-full",
    "sum_{i=1}^{p-1} i^n = -1 (mod p) if (p-1) | n, else 0",
    "quadratic",
    "vectorised power sum vs divisibility test on n",
    lambda L: f"primes 5 <= p <= {L}, |n| <= 2(p-1)",
)
def _():
    def sides(p, n):
        return power_sum(p, n, "full").value, (p - 1 if n % (p - 1) == 0 else 0)

    return (lambda L: _glaisher_inputs(L, False)), sides


@statement(
    "glaisher-half",
    "sum_{i=1}^{(p-1)/2} i^n = 0 (mod p) for even n with (p-1) not dividing n",
    "quadratic",
    "vectorised half-range power sum vs the constant 0",
    lambda L: f"primes 5 <= p <= {L}, even |n| <= 2(p-1)",
)
def _():
    return (lambda L: _glaisher_inputs(L, True)), (lambda p, n: (power_sum(p, n, "half").value, 0))


@statement(
    "remark-sq",
    "2 sum_{i<j<=N} 1/(ij) = (sum 1/i)^2 - sum 1/i^2 as rationals",
    "linear",
    "exact double loop over Fractions vs the squared single sums",
    lambda L: "N = 1..20 (exact rational arithmetic)",
)
def _():
    def sides(N):
        lhs = 2 * sum(Fraction(1, i * j) for j in range(1, N + 1) for i in range(1, j))
        s1 = sum(Fraction(1, i) for i in range(1, N + 1))
        s2 = sum(Fraction(1, i * i) for i in range(1, N + 1))
        return lhs, s1 * s1 - s2

    return (lambda L: ({"N": N} for N in range(1, 21))), sides


@statement(
    "wolst-cong",
    "C(2p-1, p-1) = 1 (mod p^3)",
    "linear",
    "binomial from p-free factorials mod p^3 vs the constant 1",
    _primes_text(5),
)
def _():
    return (lambda L: _primes(5, L)), (lambda p: (w_value(p, 3).value, 1))


@statement(
    "sylvester",
    "sum_{i=1}^{(p-1)/2} 1/i = -2q (mod p), q the Fermat quotient of 2",
    "linear",
    "half-range inverse sum vs (2^(p-1)-1)/p",
    _primes_text(5),
)
def _():
    return (lambda L: _primes(5, L)), (lambda p: (harmonic_sum(p, 1, "half", 1).value, -2 * _q(p, 1) % p))


@statement(
    "lehmer-equiv",
    "M_p = 1 (mod p^3) and sum_{i<=(p-1)/2} 1/i = -2q + p q^2 (mod p^2), both holding",
    "linear",
    "M_p from the binomial mod p^3 and the half sum mod p^2 vs 1 and the q expression",
    _primes_text(5),
)
def _():
    def sides(p):
        q, p2 = _q(p), p * p
        return (m_value(p, 3).value, harmonic_sum(p, 1, "half", 2).value), (1, (-2 * q + p * q * q) % p2)

    return (lambda L: _primes(5, L)), sides


@statement(
    "morley-cong",
    "(-1)^((p-1)/2) C(p-1, (p-1)/2) = 4^(p-1) (mod p^3)",
    "linear",
    "binomial from p-free factorials vs modular power of 4",
    _primes_text(5),
)
def _():
    def sides(p):
        m = p**3
        h = (p - 1) // 2
        c = binomial_mod_prime_power(p - 1, h, PrimePowerModulus(p, 3)).value
        return (-c if h % 2 else c) % m, pow(4, p - 1, m)

    return (lambda L: _primes(5, L)), sides


# -- Bernoulli-number statements --------------------------------------------------


@statement(
    "thm2-msq",
    "4^(p^2-1) M_{p^2} = (1+pq)^2 + p^3 B_{p-3}/12 + 2p^2 q + 3p^3 q^2 (mod p^4)",
    "quadratic",
    "binomial C(p^2-1, (p^2-1)/2) mod p^4 vs closed form with oracle B_{p-3}",
    _primes_text(7),
)
def _():
    def sides(p):
        f = square_pseudoprime_formulas(p)
        return f.m_direct.value, f.m_closed.value

    return (lambda L: _primes(7, L)), sides


@statement(
    "prop-ij2",
    "sum_{i<j<=(p-1)/2} 1/(i j^2) = (3/2) B_{p-3} (mod p)",
    "quadratic",
    "prefix-sum double sum vs Bernoulli recurrence oracle",
    _primes_text(7),
)
def _():
    return (lambda L: _primes(7, L)), (lambda p: (ij_square_sums(p)[0].value, _r(Fraction(3, 2), p) * _b(p) % p))


@statement(
    "prop-i2j",
    "sum_{i<j<=(p-1)/2} 1/(i^2 j) = (1/2) B_{p-3} (mod p)",
    "quadratic",
    "prefix-sum double sum vs Bernoulli recurrence oracle",
    _primes_text(7),
)
def _():
    return (lambda L: _primes(7, L)), (lambda p: (ij_square_sums(p)[1].value, _r(Fraction(1, 2), p) * _b(p) % p))


@statement(
    "cor-triple",
    "sum_{i<j<k<=(p-1)/2} 1/(ijk) = -(2/3) B_{p-3} - (4/3) q^3 (mod p)",
    "cubic",
    "literal triple loop vs oracle B_{p-3} and q",
    _primes_text(7),
)
def _():
    def sides(p):
        rhs = (_r(Fraction(-2, 3), p) * _b(p) - _r(Fraction(4, 3), p) * _q(p, 1) ** 3) % p
        return triple_sum_direct((p - 1) // 2, p), rhs

    return (lambda L: _primes(7, L)), sides


@statement(
    "lemma2-bern",
    "over even k <= p-3: sum B_k = -1/2, sum k B_k = -1/2, sum (p-k) B_k = 1/2 (mod p)",
    "quadratic",
    "sums over the Bernoulli recurrence table vs the constants",
    _primes_text(7),
)
def _():
    def sides(p):
        table = bernoulli_table(p)
        ks = range(0, p - 2, 2)
        a = sum(table[k] for k in ks) % p
        b = sum(k * table[k] for k in ks) % p
        c = sum((p - k) * table[k] for k in ks) % p
        half = _r(Fraction(1, 2), p)
        return (a, b, c), (-half % p, -half % p, half)

    return (lambda L: _primes(7, L)), sides


@statement(
    "sb-closed",
    "sum_{i<j<=(p-1)/2} 1/(ij) = 2q^2 - 2pq^3 - (7/6) p B_{p-3} (mod p^2)",
    "quadratic",
    "half of (S_a^2 - sum 1/i^2) mod p^2 vs closed form with oracle B_{p-3}",
    _primes_text(7),
)
def _():
    def sides(p):
        p2, q = p * p, _q(p)
        rhs = (2 * q * q - 2 * p * q**3 - _r(Fraction(7, 6), p2) * p * _b(p)) % p2
        return s_sums(p).s_b.value, rhs

    return (lambda L: _primes(7, L)), sides


@statement(
    "sc-closed",
    "sum_{i<=(p^2-1)/2, (i,p)=1} 1/i = -2q + p q^2 (mod p^2)",
    "quadratic",
    "full O(p^2) sum and last-block sum vs the q expression",
    _primes_text(7),
)
def _():
    def sides(p):
        p2, q = p * p, _q(p)
        closed = (-2 * q + p * q * q) % p2
        return (s_c_direct(p).value, s_c_block(p).value), (closed, closed)

    return (lambda L: _primes(7, L)), sides


@statement(
    "sd-closed",
    "sum_{i<=(p-1)/2} sum_{j<=(p^2-1)/2, (j,p)=1} 1/(ij) = 4q^2 (mod p)",
    "quadratic",
    "product of the two single sums mod p vs 4q^2",
    _primes_text(7),
)
def _():
    return (lambda L: _primes(7, L)), (lambda p: (s_sums(p).s_d.value, 4 * _q(p, 1) ** 2 % p))


@statement(
    "thm3-wsq",
    "C(2p^2-1, p^2-1) = 1 + (2/3) p^3 B_{p-3} (mod p^4)",
    "quadratic",
    "binomial from p-free factorials mod p^4 vs closed form with oracle B_{p-3}",
    _primes_text(7),
)
def _():
    def sides(p):
        f = square_pseudoprime_formulas(p)
        return f.w_direct.value, f.w_closed.value

    return (lambda L: _primes(7, L)), sides


@statement(
    "lemma3-4pow",
    "4^(p^2-1) = (1+pq)^2 + 2p^2 q + 3p^3 q^2 (mod p^4)",
    "linear",
    "modular power vs polynomial in the exact Fermat quotient",
    _primes_text(5),
)
def _():
    def sides(p):
        m, q = p**4, _q(p, 3)
        return pow(4, p * p - 1, m), ((1 + p * q) ** 2 + 2 * p * p * q + 3 * p**3 * q * q) % m

    return (lambda L: _primes(5, L)), sides


@statement(
    "main-equiv",
    "W_{p^2} = 1 (mod p^4) iff M_{p^2} = 1 (mod p^4) iff W_p = 1 (mod p^4) iff p | B_{p-3}",
    "quadratic",
    "three direct binomial tests mod p^4 vs divisibility of B_{p-3}",
    lambda L: f"primes 7 <= p <= {L} and p = 16843",
)
def _():
    def inputs(L):
        yield from _primes(7, L)
        if L < 16843:
            yield {"p": 16843}

    def sides(p):
        f = square_pseudoprime_formulas(p)
        m = p**4
        w_sq = f.w_direct.value == 1
        m_sq = f.m_direct.value == f.pow4_direct.value  # 4^(n-1) M_n = 4^(n-1)
        w_p = w_value(p, 4).value == 1
        div = bernoulli_reference(p) == 0
        return (w_sq, m_sq, w_p), (div, div, div)

    return inputs, sides


# -- W_n statements ----------------------------------------------------------------


def _pm_inputs(L):
    for p in primes_in(5, L + 1):
        for m in range(1, L + 1, 2):
            yield {"p": p, "m": m}


def _pair_inputs(L, lo=5):
    ps = primes_in(lo, L + 1)
    for i, r in enumerate(ps):
        for s in ps[i + 1 :]:
            yield {"r": r, "s": s}


def _bicond_inputs(L):
    for pair in _pair_inputs(L, 3):
        for k in (1, 2, 3):
            yield {**pair, "k": k}


@statement(
    "w-mult",
    "W_{pm} = W_m (mod p^3) for primes p > 3 and odd m",
    "cubic",
    "binomial mod p^3 from p-free factorials vs exact W_m",
    lambda L: f"primes 5 <= p <= {L}, odd m <= {L}",
)
def _():
    def sides(p, m):
        return w_value_mod(p * m, p**3), int(_exact_w(m)) % p**3

    return _pm_inputs, sides


def w_value_mod(n: int, modulus: int) -> int:
    return math.comb(2 * n - 1, n - 1) % modulus


def m_value_mod(n: int, modulus: int) -> int:
    x = _exact_m(n)
    return rational_mod(x, modulus)


@statement(
    "w-semiprime",
    "W_{rs} = W_r + W_s - 1 (mod r^3 s^3) for distinct primes r, s > 3",
    "cubic",
    "exact big-integer W_{rs} vs exact W_r and W_s",
    lambda L: f"primes 5 <= r < s <= {L}",
)
def _():
    def sides(r, s):
        m = (r * s) ** 3
        return w_value_mod(r * s, m), (w_value_mod(r, m) + w_value_mod(s, m) - 1) % m

    return (lambda L: _pair_inputs(L)), sides


@statement(
    "w-biconditional",
    "W_{rs} = 1 (mod (rs)^k) iff W_r = 1 (mod s^k) and W_s = 1 (mod r^k), k = 1, 2, 3",
    "cubic",
    "exact W_{rs} reduced mod (rs)^k vs the two one-sided exact tests",
    lambda L: f"primes 3 <= r < s <= {L}, k = 1..3",
)
def _():
    def sides(r, s, k):
        lhs = w_value_mod(r * s, (r * s) ** k) == 1
        rhs = w_value_mod(r, s**k) == 1 and w_value_mod(s, r**k) == 1
        return lhs, rhs

    return _bicond_inputs, sides


@statement(
    "w-recur",
    "W_n = 4 (2n-1)/(2n) W_{n-1} with W_0 = 1/2, as rationals",
    "linear",
    "exact W_n vs the recurrence applied to exact W_{n-1}",
    lambda L: f"1 <= n <= {L}",
)
def _():
    def sides(n):
        return _exact_w(n), Fraction(4 * (2 * n - 1), 2 * n) * _exact_w(n - 1)

    return (lambda L: ({"n": n} for n in range(1, L + 1))), sides


def _reflect_inputs(L, odd):
    for p in primes_in(5, L + 1):
        for n in range(1, p, 2 if odd else 1):
            yield {"p": p, "n": n}


@statement(
    "w-reflect",
    "W_n = 4^(2n) (-1)^((p-1)/2) W_{(p-1)/2-n} (mod p) for 0 < n < p",
    "quadratic",
    "recurrence table vs Lucas evaluation of the reflected index",
    lambda L: f"primes 5 <= p <= {L}, 0 < n < p",
)
def _():
    return (lambda L: _reflect_inputs(L, False)), (lambda p, n: digits.w_reflection_sides(n, p))


@statement(
    "thm4-lucas",
    "for n = mp + r: W_n = W_m if r = 0, 0 if r > (p-1)/2, else 2 W_m W_r (mod p)",
    "quadratic",
    "iterated digit rule with recurrence table vs Lucas' theorem on C(2n-1, n-1)",
    lambda L: f"primes 3 <= p <= {L}, 1 <= n <= 10p",
)
def _():
    def inputs(L):
        for p in primes_in(3, L + 1):
            for n in range(1, 10 * p + 1):
                yield {"p": p, "n": n}

    return inputs, (lambda p, n: (digits.w_mod_p_int(n, p), binomial_mod_prime(2 * n - 1, n - 1, p)))


def _twin_pairs(bound):
    for r in primes_in(5, math.isqrt(bound) + 1):
        if (r + 2) * r < bound and primes_in(r + 2, r + 3):
            yield {"r": r, "s": r + 2}


def _sg_pairs(bound):
    for r in primes_in(5, math.isqrt(bound) + 1):
        s = 2 * r + 1
        if r * s < bound and primes_in(s, s + 1):
            yield {"r": r, "s": s}


@statement(
    "cor-twin",
    "for twin primes r, s = r + 2 with r >= 5, rs is not an order-1 Wolstenholme pseudoprime",
    "corollary",
    "direct binomial test mod rs vs the predicted False",
    lambda L: f"twin pairs with r >= 5, rs < {L}",
)
def _():
    return _twin_pairs, (lambda r, s: (pseudoprime_test(r * s, "W", 1, "direct")[0], False))


@statement(
    "cor-sg",
    "for primes r and s = 2r + 1, rs is not an order-1 Wolstenholme pseudoprime",
    "corollary",
    "direct binomial test mod rs vs the predicted False",
    lambda L: f"Sophie Germain pairs with r >= 5, rs < {L}",
)
def _():
    return _sg_pairs, (lambda r, s: (pseudoprime_test(r * s, "W", 1, "direct")[0], False))


# -- M_n statements ----------------------------------------------------------------


@statement(
    "m-mult",
    "M_{pm} = M_m (mod p^3) for primes p > 3 and odd m",
    "cubic",
    "exact rational M_{pm} reduced mod p^3 vs exact M_m",
    lambda L: f"primes 5 <= p <= {L}, odd m <= {L}",
)
def _():
    return _pm_inputs, (lambda p, m: (m_value_mod(p * m, p**3), m_value_mod(m, p**3)))


@statement(
    "m-semiprime",
    "M_{rs} = M_r + M_s - 1 (mod r^3 s^3) for distinct primes r, s > 3",
    "cubic",
    "exact rational M_{rs} vs exact M_r and M_s",
    lambda L: f"primes 5 <= r < s <= {L}",
)
def _():
    def sides(r, s):
        m = (r * s) ** 3
        return m_value_mod(r * s, m), (m_value_mod(r, m) + m_value_mod(s, m) - 1) % m

    return (lambda L: _pair_inputs(L)), sides


@statement(
    "m-biconditional",
    "M_{rs} = 1 (mod (rs)^k) iff M_r = 1 (mod s^k) and M_s = 1 (mod r^k), k = 1, 2, 3",
    "cubic",
    "exact M_{rs} reduced mod (rs)^k vs the two one-sided exact tests",
    lambda L: f"primes 3 <= r < s <= {L}, k = 1..3",
)
def _():
    def sides(r, s, k):
        lhs = m_value_mod(r * s, (r * s) ** k) == 1
        rhs = m_value_mod(r, s**k) == 1 and m_value_mod(s, r**k) == 1
        return lhs, rhs

    return _bicond_inputs, sides


@statement(
    "m-recur",
    "M_n = -(1/4) (n-2)/(n-1) M_{n-2} for odd n >= 3, as rationals",
    "linear",
    "exact M_n vs the recurrence applied to exact M_{n-2}",
    lambda L: f"odd 3 <= n <= {L}",
)
def _():
    def sides(n):
        return _exact_m(n), Fraction(-(n - 2), 4 * (n - 1)) * _exact_m(n - 2)

    return (lambda L: ({"n": n} for n in range(3, L + 1, 2))), sides


@statement(
    "m-reflect",
    "M_n = 4^(1-n) M_{p-n+1} (mod p) for odd 0 < n < p",
    "quadratic",
    "recurrence table vs Lucas evaluation of the reflected index",
    lambda L: f"primes 5 <= p <= {L}, odd 0 < n < p",
)
def _():
    return (lambda L: _reflect_inputs(L, True)), (lambda p, n: digits.m_reflection_sides(n, p))


@statement(
    "thm5-lucas",
    "for odd n = mp + r: M_n = M_m if r = 0, 0 if m odd, else M_{m+1} M_r (mod p)",
    "quadratic",
    "iterated digit rule with recurrence table vs Lucas' theorem on C(n-1, (n-1)/2)",
    lambda L: f"primes 3 <= p <= {L}, odd 1 <= n <= 10p",
)
def _():
    def inputs(L):
        for p in primes_in(3, L + 1):
            for n in range(1, 10 * p + 1, 2):
                yield {"p": p, "n": n}

    return inputs, (lambda p, n: (digits.m_mod_p_int(n, p), digits.m_direct_mod_p(n, p)))


# -- driver -------------------------------------------------------------------------


def _fmt(x) -> str:
    if isinstance(x, tuple):
        return "(" + ", ".join(_fmt(v) for v in x) + ")"
    return str(x)


def limit_for(stmt: Statement, profile: str) -> int:
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; choose from {sorted(PROFILES)}")
    return PROFILES[profile][stmt.cost]


def get(id: str) -> Statement:
    try:
        return REGISTRY[id]
    except KeyError:
        raise UnknownStatement(id) from None


def replay(id: str, inputs: dict) -> tuple:
    """Re-evaluate both sides of ``id`` at ``inputs``."""
    return get(id).sides(**inputs)


def _reflection_note(id: str, bad: list, checked: int) -> tuple[str, str]:
    def upper(ce):
        inp = ce["inputs"]
        return inp["n"] > (inp["p"] - 1) // 2

    low_bad = sum(1 for ce in bad if not upper(ce))
    high_bad = len(bad) - low_bad
    extra = " (with W_k = 0 for k < 0)" if id == "w-reflect" else ""
    if not bad:
        return "pass", f"holds on 0 < n <= (p-1)/2 and on (p-1)/2 < n < p{extra}"
    if low_bad == 0:
        return "partial", f"effective domain 0 < n <= (p-1)/2; {high_bad} failures above it"
    return "fail", f"{low_bad} failures with n <= (p-1)/2, {high_bad} above"


def verify_statement(id: str, limit: int | None = None, profile: str = "standard") -> StatementVerdict:
    stmt = get(id)
    if limit is None:
        limit = limit_for(stmt, profile)
    t0 = time.perf_counter()
    bad = []
    checked = 0
    for inputs in stmt.inputs(limit):
        lhs, rhs = stmt.sides(**inputs)
        checked += 1
        if lhs != rhs:
            bad.append({"inputs": dict(inputs), "lhs": _fmt(lhs), "rhs": _fmt(rhs)})
    runtime = time.perf_counter() - t0
    note = ""
    if id in REFLECTION:
        status, note = _reflection_note(id, bad, checked)
    else:
        status = "pass" if not bad else "fail"
    if id == "thm3-wsq" and bad:
        flipped = sum(1 for ce in bad if _flipped_sign_holds(ce["inputs"]["p"]))
        note = f"the variant 1 - (2/3) p^3 B_(p-3) holds at {flipped} of {len(bad)} failing primes"
    return StatementVerdict(id, stmt.description, stmt.range_text(limit), status, bad, runtime, checked, note)


def _flipped_sign_holds(p: int) -> bool:
    m = p**4
    f = square_pseudoprime_formulas(p)
    return f.w_direct.value == (1 - 2 * p**3 * bernoulli_reference(p) * pow(3, -1, m)) % m


def run_all(profile: str = "standard", ids: Iterable[str] | None = None, progress=None) -> list[StatementVerdict]:
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; choose from {sorted(PROFILES)}")
    out = []
    for id in sorted(ids or REGISTRY):
        v = verify_statement(id, profile=profile)
        if progress is not None:
            print(f"[verify] {id}: {v.status} ({v.checked} cases, {v.runtime:.1f}s)", file=progress, flush=True)
        out.append(v)
    return out


def exit_code(verdicts: Iterable[StatementVerdict]) -> int:
    """1 if any statement outside the two reflection checks failed, else 0."""
    return int(any(v.status != "pass" and v.id not in REFLECTION for v in verdicts))


def summary_table(verdicts: list[StatementVerdict]) -> str:
    width = max(len(v.id) for v in verdicts)
    rows = [f"{'statement':<{width}}  status   cases     time  range"]
    for v in verdicts:
        rows.append(f"{v.id:<{width}}  {v.status:<7} {v.checked:>6} {v.runtime:>7.2f}s  {v.range}")
        if v.note:
            rows.append(f"{'':<{width}}  note: {v.note}")
    return "\n".join(rows)


def fast_path_gate(profile: str = "standard") -> bool:
    """True when both digit-rule statements pass; the fast evaluators rely on them."""
    return all(verify_statement(i, profile=profile).status == "pass" for i in ("thm4-lucas", "thm5-lucas"))
