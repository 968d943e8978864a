"""Exact arithmetic: examples plus brute-force oracles."""

import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistedmoments import arith


def test_factorize_examples():
    assert arith.factorize(1) == ()
    assert arith.factorize(12) == ((2, 2), (3, 1))
    assert arith.factorize(97) == ((97, 1),)


@given(st.integers(min_value=1, max_value=10**6))
def test_factorize_roundtrip(n):
    fac = arith.factorize(n)
    prod = 1
    last = 0
    for p, e in fac:
        assert p > last and e >= 1
        last = p
        prod *= p**e
    assert prod == n


def test_factorize_large_semiprime_uses_rho():
    p, q = 1_000_003, 1_000_033
    assert arith.factorize(p * q) == ((p, 1), (q, 1))


def test_factorize_rejects_out_of_range():
    with pytest.raises(ValueError):
        arith.factorize(0)


def test_mobius_examples():
    assert arith.mobius(1) == 1
    assert arith.mobius(12) == 0
    assert arith.mobius(30) == -1


def test_mobius_sum_is_unit_indicator():
    # sum_{d | n} mu(d) = [n == 1]
    for n in range(1, 10_001):
        total = sum(arith.mobius(d) for d in arith.divisors(n))
        assert total == (1 if n == 1 else 0)


def test_divisors_examples():
    assert arith.divisors(1) == [1]
    assert arith.divisors(12) == [1, 2, 3, 4, 6, 12]
    assert arith.divisors(97) == [1, 97]


def test_sigma_complex_examples():
    assert arith.sigma_complex(0, 6) == pytest.approx(4)
    assert arith.sigma_complex(1, 6) == pytest.approx(12)
    assert arith.sigma_complex(0, 1) == pytest.approx(1)


@given(st.integers(min_value=1, max_value=400), st.integers(min_value=1, max_value=400))
def test_sigma_complex_multiplicative_on_coprime(m, n):
    if math.gcd(m, n) != 1:
        return
    nu = 0.7 - 1.3j
    lhs = arith.sigma_complex(nu, m * n)
    rhs = arith.sigma_complex(nu, m) * arith.sigma_complex(nu, n)
    assert lhs == pytest.approx(rhs, rel=1e-12)


def _ramanujan_brute(n, d):
    return sum(
        cmath.exp(2j * math.pi * l * n / d) for l in range(1, d + 1) if math.gcd(l, d) == 1
    )


def test_ramanujan_examples():
    assert arith.ramanujan_sum(2, 4) == -2
    assert arith.ramanujan_sum(1, 4) == 0
    assert arith.ramanujan_sum(5, 1) == 1


def test_ramanujan_brute_force_sweep():
    # exact divisor-convolution value vs the exponential sum, d <= 200
    for d in range(1, 201):
        for n in (0, 1, 2, 3, d - 1, d, 2 * d + 3):
            brute = _ramanujan_brute(n, d)
            exact = arith.ramanujan_sum(n, d)
            assert abs(brute - exact) < 1e-9
            assert abs(brute.imag) < 1e-9


@given(st.integers(min_value=-500, max_value=500), st.integers(min_value=1, max_value=200))
def test_ramanujan_even_in_n(n, d):
    assert arith.ramanujan_sum(n, d) == arith.ramanujan_sum(-n, d)


def test_mod_inverse_examples():
    assert arith.mod_inverse(3, 7) == 5
    assert arith.mod_inverse(1, 11) == 1
    assert arith.mod_inverse(10, 17) == 12


@given(st.integers(min_value=2, max_value=10**6), st.integers(min_value=1, max_value=10**6))
def test_mod_inverse_oracle(d, x):
    if math.gcd(x, d) != 1:
        with pytest.raises(ValueError):
            arith.mod_inverse(x, d)
    else:
        y = arith.mod_inverse(x, d)
        assert 1 <= y <= d - 1
        assert x * y % d == 1


def test_euler_phi_examples():
    assert arith.euler_phi(1) == 1
    assert arith.euler_phi(97) == 96
    assert arith.euler_phi(12) == 4


@given(st.integers(min_value=1, max_value=2000))
@settings(max_examples=60)
def test_euler_phi_counts_coprime_residues(n):
    assert arith.euler_phi(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_radical_and_prime_power():
    assert arith.radical(60) == 30
    assert arith.radical(1) == 1
    assert arith.prime_power(48, 2) == 4
    assert arith.prime_power(48, 5) == 0
