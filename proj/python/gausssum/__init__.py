"""Normalized quadratic Gauss sums: exact closed forms and verification.

phi(a, b) = a**-0.5 * sum(exp(pi*1j * n*n * b / a) for n in range(a)).
Even numerators evaluate exactly into the algebra {0} | {c*sqrt(m)*zeta8**e};
direct summation, exhaustive counting, and the identity checks live alongside
as independent oracles.
"""

from ._core import (
    BoundError,
    ExactValue,
    count_sqrt_brute,
    count_sqrt_closed,
    factorize,
    fourier_check,
    induction_check,
    is_prime,
    legendre,
    phi_assuming_ls,
    phi_base,
    phi_exact,
    phi_exact_with_trace,
    phi_numeric,
    phi_odd_prime_power,
    phi_two_power,
    reflection_product,
    self_test,
    sylvester_brute,
    sylvester_count,
    verify_ls,
)

__version__ = "0.1.0"

__all__ = [
    "BoundError",
    "ExactValue",
    "count_sqrt_brute",
    "count_sqrt_closed",
    "factorize",
    "fourier_check",
    "induction_check",
    "is_prime",
    "legendre",
    "phi_assuming_ls",
    "phi_base",
    "phi_exact",
    "phi_exact_with_trace",
    "phi_numeric",
    "phi_odd_prime_power",
    "phi_two_power",
    "reflection_product",
    "self_test",
    "sylvester_brute",
    "sylvester_count",
    "verify_ls",
]
