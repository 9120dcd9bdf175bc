"""Exact big-integer ground truth.

Nothing here consults a multiplicative order: a**j - 1 and Phi_j(a) are built
as Python integers and their small prime divisors are found by trial
division.  The only shared piece with the fast path is the prime sieve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .modular_core import factorize, primes_array

DEFAULT_CAP_U = 64
DEFAULT_CAP_X = 10_000


class OracleConsistencyError(ArithmeticError):
    """An exact division that must be exact was not."""


@dataclass(frozen=True)
class OracleResult:
    j: int
    value: int
    omega_x: int
    prime_divisors_leq_x: tuple[int, ...]


def pow_minus_one(a: int, j: int) -> int:
    if a < 2 or j < 1:
        raise ValueError("need a >= 2 and j >= 1")
    return a**j - 1


def prime_divisors_upto(n: int, x: int) -> tuple[int, ...]:
    if n < 1:
        raise ValueError("n must be positive")
    return tuple(q for q in primes_array(x).tolist() if n % q == 0)


def omega_x(n: int, x: int) -> int:
    """Number of distinct primes q <= x dividing n."""
    return len(prime_divisors_upto(n, x))


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(k > 1 for _, k in fac.factors):
        return 0
    return -1 if len(fac.factors) % 2 else 1


def divisors(n: int) -> list[int]:
    divs = [1]
    for q, k in factorize(n).factors:
        divs = [d * q**i for d in divs for i in range(k + 1)]
    return sorted(divs)


@lru_cache(maxsize=4096)
def cyclotomic_eval(j: int, a: int) -> int:
    """Phi_j(a) as the exact quotient prod_{d|j, mu=+1}(a^d-1) / prod_{d|j, mu=-1}(a^d-1)."""
    if j < 1 or a < 2:
        raise ValueError("need j >= 1 and a >= 2")
    num = den = 1
    for d in divisors(j):
        mu = mobius(j // d)
        if mu == 1:
            num *= a**d - 1
        elif mu == -1:
            den *= a**d - 1
    q, r = divmod(num, den)
    if r:
        raise OracleConsistencyError(f"Phi_{j}({a}) product is not an integer")
    return q


def oracle_result(a: int, j: int, x: int) -> OracleResult:
    n = pow_minus_one(a, j)
    divs = prime_divisors_upto(n, x)
    return OracleResult(j=j, value=n, omega_x=len(divs), prime_divisors_leq_x=divs)


@lru_cache(maxsize=1 << 14)
def _omega_pow(a: int, j: int, x: int) -> int:
    return omega_x(pow_minus_one(a, j), x)


def oracle_D(a: int, u: int, x: int) -> int:
    """sum_{j<=u} omega_x(a**j - 1) by direct factoring."""
    if u < 1:
        raise ValueError("u must be >= 1")
    return sum(_omega_pow(a, j, x) for j in range(1, u + 1))


def oracle_D_prefix(a: int, u: int, x: int) -> list[int]:
    """[oracle_D(a, 1, x), ..., oracle_D(a, u, x)]."""
    out, total = [], 0
    for j in range(1, u + 1):
        total += _omega_pow(a, j, x)
        out.append(total)
    return out


def verify_order_divisibility(a: int, p: int, j: int) -> bool:
    """Whether [p | a^j - 1] agrees with [f_p | j].

    f_p is found here by brute-force iteration, not by the fast path.
    """
    if a % p == 0:
        raise ValueError(f"{p} divides {a}")
    f, r = 1, a % p
    while r != 1:
        r = r * a % p
        f += 1
    return ((a**j - 1) % p == 0) == (j % f == 0)


def cyclotomic_omega_sum(a: int, x: int) -> Fraction:
    """sum_{j<x} omega_x(Phi_j(a)) / j as an exact rational."""
    return sum((Fraction(omega_x(cyclotomic_eval(j, a), x), j) for j in range(1, x)),
               Fraction(0))
