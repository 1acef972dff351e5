import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wolstenholme.errors import NonCoprimeModuli, NotInvertible
from wolstenholme.modmath import (
    Factorization,
    PrimePowerModulus,
    ResidueClass,
    binomial_exact,
    binomial_mod_prime,
    binomial_mod_prime_power,
    binomial_mod_prime_power_direct,
    crt_combine,
    factor_odd,
    factorize,
    is_prime,
    mod_inverse,
    mod_pow,
    primes_below,
    primes_in,
)

SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def _trial_sieve(limit):
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit - 1) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit, i)))
    return flags


# -- examples -------------------------------------------------------------------


def test_is_prime_examples():
    assert is_prime(2)
    assert is_prime(16843)
    assert not is_prime(27173)


def test_mod_pow_examples():
    assert mod_pow(ResidueClass(4, 125), 4) == ResidueClass(6, 125)
    assert mod_pow(ResidueClass(3, 11), 0) == ResidueClass(1, 11)
    assert mod_pow(ResidueClass(2, 25), 4) == ResidueClass(16, 25)


def test_mod_inverse_examples():
    assert mod_inverse(2, 7) == ResidueClass(4, 7)
    assert mod_inverse(30, 7) == ResidueClass(4, 7)
    with pytest.raises(NotInvertible) as info:
        mod_inverse(5, 25)
    assert info.value.gcd == 5


def test_crt_examples():
    assert crt_combine([ResidueClass(1, 27), ResidueClass(1, 125)]) == ResidueClass(1, 3375)
    assert crt_combine([ResidueClass(2, 3), ResidueClass(3, 5)]) == ResidueClass(8, 15)
    with pytest.raises(NonCoprimeModuli):
        crt_combine([ResidueClass(0, 4), ResidueClass(0, 6)])


def test_factor_odd_examples():
    assert factor_odd(27173).factors == ((29, 1), (937, 1))
    assert factor_odd(9).factors == ((3, 2),)
    # 16843 squared is 283686649; the longer number quoted alongside it is prime
    assert factor_odd(16843**2).factors == ((16843, 2),)
    assert 16843**2 == 283686649
    assert factor_odd(283686161449).factors == ((283686161449, 1),)


def test_binomial_examples():
    assert binomial_exact(9, 4) == 126
    assert binomial_exact(4, 2) == 6
    assert binomial_exact(13, 6) == 1716
    assert binomial_mod_prime_power(9, 4, PrimePowerModulus(5, 3)) == ResidueClass(1, 125)
    assert binomial_mod_prime_power(2 * 16843 - 1, 16842, PrimePowerModulus(16843, 4)).value == 1
    assert binomial_mod_prime_power(40, 0, PrimePowerModulus(3, 4)).value == 1


# -- types ----------------------------------------------------------------------


def test_residue_class_invariants():
    with pytest.raises(ValueError):
        ResidueClass(5, 5)
    with pytest.raises(ValueError):
        ResidueClass(-1, 5)
    with pytest.raises(ValueError):
        ResidueClass(0, 0)
    r = ResidueClass(3, 7)
    assert r + 5 == ResidueClass(1, 7)
    assert r * r == ResidueClass(2, 7)
    assert -r == ResidueClass(4, 7)
    assert 1 - r == ResidueClass(5, 7)
    assert ResidueClass(10, 25).reduce(5) == ResidueClass(0, 5)
    with pytest.raises(ValueError):
        r + ResidueClass(1, 5)


def test_prime_power_modulus():
    pm = PrimePowerModulus(16843, 4)
    assert pm.m == 16843**4
    with pytest.raises(ValueError):
        PrimePowerModulus(15, 2)
    with pytest.raises(ValueError):
        PrimePowerModulus(7, 0)


def test_factorization_validation():
    f = Factorization(((3, 2), (5, 1)))
    assert f.n == 45 and not f.is_prime_power()
    assert f.as_lists() == [[3, 2], [5, 1]]
    with pytest.raises(ValueError):
        Factorization(((5, 1), (3, 1)))
    with pytest.raises(ValueError):
        Factorization(((3, 0),))


# -- invariants -----------------------------------------------------------------


def test_is_prime_matches_sieve_to_1e6():
    limit = 10**6 + 1
    flags = _trial_sieve(limit)
    ours = np.zeros(limit, dtype=bool)
    ours[primes_below(limit)] = True
    assert np.array_equal(ours, np.frombuffer(bytes(flags), dtype=np.uint8).astype(bool))
    rng = random.Random(0)
    for n in [rng.randrange(limit) for _ in range(20000)] + list(range(200)):
        assert is_prime(n) == bool(flags[n]), n


def test_is_prime_large():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)
    assert is_prime(18446744073709551557)  # largest prime below 2**64
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    assert not is_prime(3825123056546413051)


def test_primes_in_half_open():
    assert primes_in(5, 20) == [5, 7, 11, 13, 17, 19]
    assert primes_in(16843, 16844) == [16843]
    assert primes_in(20, 20) == []


def test_binomial_oracle_exhaustive_small():
    for p in SMALL_PRIMES:
        for e in range(1, 5):
            pm = PrimePowerModulus(p, e)
            m = pm.m
            for n in range(0, 101):
                for k in range(n + 1):
                    assert binomial_mod_prime_power(n, k, pm).value == math.comb(n, k) % m, (n, k, p, e)


def test_binomial_oracle_sampled_to_2000():
    rng = random.Random(2024)
    for _ in range(20000):
        p = rng.choice(SMALL_PRIMES)
        e = rng.randint(1, 4)
        n = rng.randint(0, 2000)
        k = rng.randint(0, n)
        pm = PrimePowerModulus(p, e)
        exact = math.comb(n, k) % pm.m
        assert binomial_mod_prime_power(n, k, pm).value == exact, (n, k, p, e)
        assert binomial_mod_prime_power_direct(n, k, pm).value == exact


def test_binomial_full_rows_at_2000():
    for p in (3, 7, 47):
        pm = PrimePowerModulus(p, 4)
        row = [math.comb(2000, k) % pm.m for k in range(2001)]
        assert [binomial_mod_prime_power(2000, k, pm).value for k in range(0, 2001, 7)] == row[::7]


def test_binomial_large_modulus_tier():
    pm = PrimePowerModulus(2124679, 4)
    p = 2124679
    # the second known Wolstenholme prime: W_p = 1 (mod p**4), modulus above 2**64
    fast = binomial_mod_prime_power(2 * p - 1, p - 1, pm)
    assert fast.value == 1
    assert binomial_mod_prime_power_direct(2 * p - 1, p - 1, pm) == fast


def test_lucas_matches_exact():
    for p in (2, 3, 5, 13):
        for n in range(120):
            for k in range(n + 1):
                assert binomial_mod_prime(n, k, p) == math.comb(n, k) % p


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=-10**6, max_value=10**6), st.integers(min_value=2, max_value=10**9))
def test_mod_inverse_property(a, m):
    g = math.gcd(a, m)
    if g == 1:
        assert mod_inverse(a, m).value * a % m == 1 % m
    else:
        with pytest.raises(NotInvertible):
            mod_inverse(a, m)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 10**12), st.sampled_from([3, 4, 5, 7, 11, 13, 17, 49, 81, 125])), min_size=1, max_size=5))
def test_crt_property(parts):
    moduli = [m for _, m in parts]
    coprime = all(math.gcd(a, b) == 1 for i, a in enumerate(moduli) for b in moduli[i + 1 :])
    classes = [ResidueClass.of(v, m) for v, m in parts]
    if not coprime:
        with pytest.raises(NonCoprimeModuli):
            crt_combine(classes)
        return
    out = crt_combine(classes)
    assert out.modulus == math.prod(moduli)
    for c in classes:
        assert out.value % c.modulus == c.value


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=2**40).map(lambda x: 2 * x + 1))
def test_factor_odd_property(n):
    f = factor_odd(n)
    assert f.n == n
    assert all(is_prime(p) for p, _ in f)


def test_factorize_semiprime_above_trial_range():
    n = 1000003 * 1000033
    assert factorize(n).factors == ((1000003, 1), (1000033, 1))
