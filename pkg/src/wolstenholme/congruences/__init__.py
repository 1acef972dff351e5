"""Quantities attached to W_n, M_n, harmonic sums and Bernoulli numbers mod p."""

from .digits import (
    m_mod_p,
    m_reflection_check,
    m_table,
    w_mod_p,
    w_reflection_check,
    w_table,
)
from .quantities import (
    CUBIC_CONSTANT,
    BernoulliModP,
    FermatQuotient,
    HalfHarmonicData,
    bernoulli_mod_p,
    bernoulli_pm3_fast,
    fermat_quotient,
    harmonic_data,
    harmonic_sum,
    pin_cubic_constant,
    power_sum,
    rational_mod,
)
from .sums import (
    SquareFormulas,
    SSumRecord,
    TSumRecord,
    ij_square_sums,
    s_sums,
    square_pseudoprime_formulas,
    t_sums,
)
from .values import (
    PrimeTestResult,
    m_value,
    morley_prime_test,
    pseudoprime_test,
    w_value,
    wolstenholme_prime_test,
)

__all__ = [
    "BernoulliModP",
    "CUBIC_CONSTANT",
    "FermatQuotient",
    "HalfHarmonicData",
    "PrimeTestResult",
    "SSumRecord",
    "SquareFormulas",
    "TSumRecord",
    "bernoulli_mod_p",
    "bernoulli_pm3_fast",
    "fermat_quotient",
    "harmonic_data",
    "harmonic_sum",
    "ij_square_sums",
    "m_mod_p",
    "m_reflection_check",
    "m_table",
    "m_value",
    "morley_prime_test",
    "pin_cubic_constant",
    "power_sum",
    "pseudoprime_test",
    "rational_mod",
    "s_sums",
    "square_pseudoprime_formulas",
    "t_sums",
    "w_mod_p",
    "w_reflection_check",
    "w_table",
    "w_value",
    "wolstenholme_prime_test",
]
