"""Primes, multiplicative orders, primitive roots and the cosets of <a> in F_p*."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np


class EmptyRangeError(ValueError):
    pass


class UndefinedOrderError(ValueError):
    """Raised when p divides a, so a has no multiplicative order mod p."""


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.factors)

    def value(self) -> int:
        out = 1
        for q, k in self.factors:
            out *= q**k
        return out


@dataclass(frozen=True)
class OrderRecord:
    p: int
    a_mod_p: int
    f_p: int
    e_p: int
    g: int


@dataclass(frozen=True, eq=False)
class CosetTable:
    """Cosets of H_p = <a> in F_p*.

    ``reps[i-1] = g**i mod p`` for coset index ``i = 1..e_p`` and
    ``coset_of[k]`` is the index of the coset holding residue ``k``
    (``coset_of[0]`` is unused and set to 0).  ``members[i-1, j-1]`` is
    ``g**i * a**j mod p`` for ``j = 1..f_p``.
    """

    p: int
    reps: np.ndarray
    coset_of: np.ndarray
    members: np.ndarray

    @property
    def e_p(self) -> int:
        return len(self.reps)

    @property
    def f_p(self) -> int:
        return self.members.shape[1]

    def coset(self, i: int) -> list[int]:
        return self.members[i - 1].tolist()


@lru_cache(maxsize=8)
def _sieve(x: int) -> np.ndarray:
    is_prime = np.ones(x + 1, dtype=bool)
    is_prime[:2] = False
    for q in range(2, math.isqrt(x) + 1):
        if is_prime[q]:
            is_prime[q * q :: q] = False
    out = np.flatnonzero(is_prime).astype(np.int64)
    out.setflags(write=False)
    return out


def sieve_primes(x: int) -> list[int]:
    """All primes <= x in ascending order (sieve of Eratosthenes)."""
    x = int(x)
    if x < 2:
        raise EmptyRangeError(f"no primes <= {x}")
    return _sieve(x).tolist()


def primes_array(x: int) -> np.ndarray:
    """Read-only int64 array of the primes <= x (empty when x < 2)."""
    x = int(x)
    if x < 2:
        return np.empty(0, dtype=np.int64)
    return _sieve(x)


def mod_pow(b: int, e: int, p: int) -> int:
    return pow(b, e, p)


def factorize(n: int) -> Factorization:
    """Trial division by sieved primes up to sqrt(n)."""
    n = int(n)
    if n <= 0:
        raise ValueError(f"cannot factor {n}")
    return _factorize(n)


@lru_cache(maxsize=1 << 16)
def _factorize(n: int) -> Factorization:
    factors = []
    m = n
    root = math.isqrt(n)
    for q in primes_array(max(root, 2)).tolist():
        if q * q > m:
            break
        if m % q == 0:
            k = 0
            while m % q == 0:
                m //= q
                k += 1
            factors.append((q, k))
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def _check_base(a: int, p: int) -> int:
    r = a % p
    if r == 0:
        raise UndefinedOrderError(f"{p} divides {a}; order undefined")
    return r


def multiplicative_order(a: int, p: int) -> int:
    """Least j >= 1 with a**j == 1 (mod p).

    Starts from p - 1 and strips each prime factor q of p - 1 while
    a**(f/q) is still 1.
    """
    r = _check_base(a, p)
    f = p - 1
    for q, _ in factorize(p - 1).factors if p > 2 else ():
        while f % q == 0 and pow(r, f // q, p) == 1:
            f //= q
    return f


def primitive_root(p: int) -> int:
    """Least generator of F_p*."""
    if p == 2:
        return 1
    qs = factorize(p - 1).primes
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise ValueError(f"{p} is not prime")


def order_record(p: int, a: int) -> OrderRecord:
    f = multiplicative_order(a, p)
    return OrderRecord(p=p, a_mod_p=a % p, f_p=f, e_p=(p - 1) // f, g=primitive_root(p))


def power_table(base: int, n: int, p: int) -> np.ndarray:
    """``[base**0, base**1, ..., base**(n-1)] mod p`` as int64, by doubling."""
    out = np.empty(n, dtype=np.int64)
    if n == 0:
        return out
    out[0] = 1 % p
    filled = 1
    while filled < n:
        step = min(filled, n - filled)
        mult = pow(base, filled, p)
        out[filled : filled + step] = out[:step] * mult % p
        filled += step
    return out


def build_coset_table(p: int, a: int, g: int) -> CosetTable:
    r = _check_base(a, p)
    f = multiplicative_order(r, p)
    e = (p - 1) // f
    reps = power_table(g, e + 1, p)[1:]
    apow = power_table(r, f + 1, p)[1:]
    members = np.outer(reps, apow) % p
    coset_of = np.zeros(p, dtype=np.int64)
    coset_of[members] = np.arange(1, e + 1, dtype=np.int64)[:, None]
    return CosetTable(p=p, reps=reps, coset_of=coset_of, members=members)


def is_perfect_square(a: int) -> bool:
    return a >= 0 and math.isqrt(a) ** 2 == a


def warn_if_degenerate_base(a: int) -> None:
    if a < 2:
        warnings.warn(f"base a={a} is below 2; results are computable but outside Artin's setting",
                      stacklevel=3)
    elif is_perfect_square(a):
        warnings.warn(f"base a={a} is a perfect square; it is never a primitive root for p > 2",
                      stacklevel=3)


@lru_cache(maxsize=32)
def _order_records(a: int, x: int) -> tuple[OrderRecord, ...]:
    return tuple(order_record(p, a) for p in primes_array(x).tolist() if a % p)


def order_records(a: int, x: int) -> tuple[OrderRecord, ...]:
    """Order records for every prime p <= x with p not dividing a, ascending."""
    return _order_records(int(a), int(x))
