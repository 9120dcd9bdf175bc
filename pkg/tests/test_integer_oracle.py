import pytest

from artinperiods.integer_oracle import (
    OracleConsistencyError,
    cyclotomic_eval,
    divisors,
    mobius,
    omega_x,
    oracle_D,
    oracle_D_prefix,
    oracle_result,
    pow_minus_one,
    verify_order_divisibility,
)

from oracles import D_by_factoring, primes_upto


def test_pow_minus_one():
    assert pow_minus_one(2, 4) == 15
    assert pow_minus_one(2, 11) == 2047
    assert pow_minus_one(10, 3) == 999
    with pytest.raises(ValueError):
        pow_minus_one(1, 3)


def test_omega_x():
    assert omega_x(15, 10) == 2
    assert omega_x(1, 10) == 0
    assert omega_x(2047, 3) == 0
    assert omega_x(2047, 89) == 2


def test_mobius():
    assert [mobius(n) for n in (1, 2, 4, 6, 30, 12)] == [1, -1, 0, 1, -1, 0]


def test_cyclotomic_examples():
    assert cyclotomic_eval(1, 2) == 1
    assert cyclotomic_eval(12, 2) == 2**4 - 2**2 + 1 == 13
    assert cyclotomic_eval(6, 2) == 63 * 1 // (3 * 7) == 3


def _cyclotomic_by_polynomial_division(j, a):
    # coefficients, highest degree first; x^j - 1 divided by Phi_d for proper divisors d
    def polydiv(num, den):
        num = list(num)
        out = []
        while len(num) >= len(den):
            c = num[0] // den[0]
            out.append(c)
            for i, d in enumerate(den):
                num[i] -= c * d
            num.pop(0)
        assert all(v == 0 for v in num)
        return out

    cache = {}
    for n in range(1, j + 1):
        if j % n:
            continue
        poly = [1] + [0] * (n - 1) + [-1]
        for d in range(1, n):
            if n % d == 0:
                poly = polydiv(poly, cache[d])
        cache[n] = poly
    return sum(c * a**k for k, c in enumerate(reversed(cache[j])))


@pytest.mark.parametrize("j", [1, 2, 6, 12, 15, 30, 36])
@pytest.mark.parametrize("a", [2, 3, 10])
def test_cyclotomic_matches_polynomial_division(j, a):
    assert cyclotomic_eval(j, a) == _cyclotomic_by_polynomial_division(j, a)


def test_telescoping_product():
    for a in (2, 3, 5, 10):
        for j in range(1, 61):
            prod = 1
            for d in divisors(j):
                prod *= cyclotomic_eval(d, a)
            assert prod == a**j - 1


def test_inexact_division_error_type():
    assert issubclass(OracleConsistencyError, ArithmeticError)


@pytest.mark.parametrize("a,u,x,D", [(2, 4, 10, 4), (2, 1, 10, 0), (3, 2, 10, 2)])
def test_oracle_D_examples(a, u, x, D):
    assert oracle_D(a, u, x) == D == D_by_factoring(a, u, x)


def test_oracle_D_prefix():
    assert oracle_D_prefix(2, 6, 20) == [oracle_D(2, u, 20) for u in range(1, 7)]


def test_oracle_result():
    r = oracle_result(2, 4, 10)
    assert r.value == 15 and r.prime_divisors_leq_x == (3, 5) and r.omega_x == 2


@pytest.mark.parametrize("a,p,j", [(2, 7, 6), (2, 7, 2), (2, 11, 10)])
def test_order_divisibility_examples(a, p, j):
    assert verify_order_divisibility(a, p, j)


def test_order_divisibility_grid():
    for a in (2, 3, 5, 6, 7, 10):
        for p in primes_upto(200):
            if a % p == 0:
                continue
            assert all(verify_order_divisibility(a, p, j) for j in range(1, 51))
    with pytest.raises(ValueError):
        verify_order_divisibility(6, 3, 2)


def test_cyclotomic_omega_monotone():
    for a in (2, 3, 5):
        for j in range(1, 40):
            for x in (10, 50):
                assert omega_x(cyclotomic_eval(j, a), x) <= omega_x(a**j - 1, x)
