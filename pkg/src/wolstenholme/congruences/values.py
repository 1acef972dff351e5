"""W_n and M_n modulo n**k, the prime tests mod p**4, and pseudoprime tests.

``W_n = C(2n-1, n-1)`` and ``M_n = (-1)**((n-1)/2) C(n-1, (n-1)/2) 4**(1-n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from ..errors import ConsistencyError, EvenInput, NotComposite
from ..modmath import (
    Factorization,
    PrimePowerModulus,
    ResidueClass,
    binomial_mod_prime_power,
    binomial_mod_prime_power_direct,
    crt_combine,
    factor_odd,
    is_prime,
    mod_inverse,
    mod_pow,
)
from .digits import m_mod_p_int, w_mod_p_int
from .quantities import bernoulli_mod_p, bernoulli_pm3_fast

Family = Literal["W", "M"]

# Below this, the fast order-1 pseudoprime path is cross-checked against the exact path.
CROSS_CHECK_LIMIT = 20000


def _family(family: str) -> str:
    f = family.upper()
    if f not in ("W", "M"):
        raise ValueError(f"family must be W or M, got {family!r}")
    return f


def _check_odd(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"expected an odd n >= 1, got {n}")


def _factors(n: int, factorization: Factorization | None) -> Factorization:
    if n == 1:
        return Factorization(())
    f = factorization or factor_odd(n)
    if f.n != n:
        raise ValueError(f"factorisation does not match {n}")
    return f


def _per_prime_power(n: int, k: int, f: Factorization, direct: bool, family: str) -> ResidueClass:
    binom = binomial_mod_prime_power_direct if direct else binomial_mod_prime_power
    if family == "W":
        top, low = 2 * n - 1, n - 1
    else:
        top, low = n - 1, (n - 1) // 2
    parts = [binom(top, low, PrimePowerModulus(p, a * k)) for p, a in f]
    return crt_combine(parts)


def w_value(n: int, k: int, factorization: Factorization | None = None, direct: bool = False) -> ResidueClass:
    """``W_n mod n**k`` for odd ``n``; ``n = 1`` gives the single class mod 1."""
    _check_odd(n)
    if k < 1:
        raise ValueError("k must be positive")
    if n == 1:
        return ResidueClass(0, 1)
    return _per_prime_power(n, k, _factors(n, factorization), direct, "W")


def m_value(n: int, k: int, factorization: Factorization | None = None, direct: bool = False) -> ResidueClass:
    """``M_n mod n**k`` for odd ``n``; ``n = 1`` gives the single class mod 1."""
    _check_odd(n)
    if k < 1:
        raise ValueError("k must be positive")
    if n == 1:
        return ResidueClass(0, 1)
    binom = _per_prime_power(n, k, _factors(n, factorization), direct, "M")
    mod = binom.modulus
    scale = mod_pow(mod_inverse(4, mod), n - 1)
    if (n - 1) // 2 % 2:
        scale = -scale
    return binom * scale


def family_value(family: str, n: int, k: int, **kwargs) -> ResidueClass:
    return (w_value if _family(family) == "W" else m_value)(n, k, **kwargs)


# -- prime tests ------------------------------------------------------------------


@dataclass(frozen=True)
class PrimeTestResult:
    """Outcome of a mod ``p**4`` prime test.

    ``residual`` is ``W_p - 1`` (or ``M_p - 1``) mod ``p**4``; ``b_pm3`` is
    ``B_{p-3} mod p``. A Wolstenholme (Morley) prime has ``residual == 0``,
    which must coincide with ``b_pm3 == 0``.
    """

    p: int
    hit: bool
    residual: ResidueClass
    b_pm3: ResidueClass

    def __bool__(self):
        return self.hit


def b_pm3(p: int) -> ResidueClass:
    """``B_{p-3} mod p``: oracle for ``p = 5``, the O(p) fast path above."""
    if p == 5:
        return bernoulli_mod_p(5, 2).value
    return bernoulli_pm3_fast(p)


def _prime_test(p: int, family: str) -> PrimeTestResult:
    if p < 5 or not is_prime(p):
        raise ValueError(f"expected a prime p > 3, got {p}")
    residual = family_value(family, p, 4) - 1
    b = b_pm3(p)
    hit = residual.value == 0
    if hit != (b.value == 0):
        raise ConsistencyError(f"{family}_{p}: residual {residual} but B_(p-3) = {b}")
    return PrimeTestResult(p, hit, residual, b)


def wolstenholme_prime_test(p: int) -> PrimeTestResult:
    """Is ``C(2p-1, p-1) = 1 (mod p**4)``? Cross-checked against ``p | B_{p-3}``."""
    return _prime_test(p, "W")


def morley_prime_test(p: int) -> PrimeTestResult:
    """Is ``M_p = 1 (mod p**4)``? Cross-checked against ``p | B_{p-3}``."""
    return _prime_test(p, "M")


# -- pseudoprimes -----------------------------------------------------------------


def fast_order1_residue(n: int, family: str, f: Factorization) -> ResidueClass | None:
    """``W_n`` or ``M_n`` mod ``n`` from base-p digits, or None if ``n`` is not squarefree."""
    if any(a > 1 for _, a in f):
        return None
    ev = w_mod_p_int if _family(family) == "W" else m_mod_p_int
    return crt_combine([ResidueClass(ev(n, p), p) for p, _ in f])


def pseudoprime_test(
    n: int,
    family: str,
    k: int = 1,
    method: str = "fast",
    factorization: Factorization | None = None,
) -> tuple[bool, ResidueClass]:
    """Is the odd composite ``n`` a pseudoprime of order ``k``?

    Returns the verdict and the residual ``W_n - 1`` (or ``M_n - 1``) mod ``n**k``.
    ``method='fast'`` uses the base-p digit evaluators for squarefree ``n`` at
    order 1; ``'direct'`` always multiplies out the binomial modulo each prime power.
    """
    family = _family(family)
    if n % 2 == 0:
        raise EvenInput(f"{n} is even")
    if not 1 <= k <= 4:
        raise ValueError("order must be in 1..4")
    if method not in ("fast", "direct"):
        raise ValueError(f"unknown method {method!r}")
    if n < 9 or is_prime(n):
        raise NotComposite(f"{n} is not an odd composite")
    f = _factors(n, factorization)
    value = None
    if method == "fast" and k == 1:
        value = fast_order1_residue(n, family, f)
        if value is not None and n < CROSS_CHECK_LIMIT:
            exact = family_value(family, n, 1, factorization=f)
            if exact != value:
                raise ConsistencyError(f"{family}_{n} mod {n}: digits give {value}, exact gives {exact}")
    if value is None:
        value = family_value(family, n, k, factorization=f)
    residual = value - 1
    return residual.value == 0, residual
