"""Exact integer arithmetic and classical multiplicative functions.

Everything in this module is exact: integers in, integers (or Fractions)
out.  These are the primitives every identity check leans on, so they are
kept deliberately boring -- trial division with a Pollard-rho fallback,
Moebius via the factorization, Ramanujan sums through the divisor
convolution rather than floating-point exponential sums.
"""

from __future__ import annotations

import math
from functools import lru_cache

Factorization = list[tuple[int, int]]

_MAX_INPUT = 2**63 - 1
_TRIAL_BOUND = 10**6


def _pollard_rho(n: int) -> int:
    """Find a nontrivial factor of composite odd n with no factor <= 10^6."""
    if n % 2 == 0:
        return 2
    for c in range(1, 50):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed to split {n}")  # pragma: no cover


def _is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24 (fixed witness set)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n as ((p1, e1), (p2, e2), ...), p ascending.

    factorize(1) is the empty tuple.  Inputs are expected to fit in a
    signed 64-bit range; small inputs go through trial division, anything
    surviving past 10^6 is split by Pollard rho.
    """
    if not 1 <= n <= _MAX_INPUT:
        raise ValueError(f"factorize: n must be in [1, 2^63-1], got {n}")
    out = []
    m = n
    for p in (2, 3, 5):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
    # wheel over 6k+-1
    p = 7
    step = 4
    while p * p <= m and p <= _TRIAL_BOUND:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += step
        step = 6 - step
    if m > 1:
        if m <= _TRIAL_BOUND * _TRIAL_BOUND or _is_probable_prime(m):
            out.append((m, 1))
        else:
            big = sorted(_split_completely(m))
            merged: dict[int, int] = {}
            for q in big:
                merged[q] = merged.get(q, 0) + 1
            out.extend(sorted(merged.items()))
    out.sort()
    return tuple(out)


def _split_completely(n: int) -> list[int]:
    if _is_probable_prime(n):
        return [n]
    d = _pollard_rho(n)
    return _split_completely(d) + _split_completely(n // d)


def mobius(n: int) -> int:
    """Moebius function: 0 if a square divides n, else (-1)^(number of primes)."""
    if n < 1:
        raise ValueError("mobius: n must be >= 1")
    fac = factorize(n)
    if any(e >= 2 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise ValueError("divisors: n must be >= 1")
    out = [1]
    for p, e in factorize(n):
        out = [d * q for d in out for q in [p**k for k in range(e + 1)]]
    return sorted(out)


def radical(n: int) -> int:
    """Product of the distinct primes dividing n (radical of n)."""
    r = 1
    for p, _ in factorize(n):
        r *= p
    return r


def prime_power(n: int, p: int) -> int:
    """Exponent of the prime p in n."""
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def sigma_complex(nu: complex, n: int) -> complex:
    """Divisor power sum sum_{d | n} d^nu, evaluated in complex arithmetic.

    sigma_complex(0, n) is the divisor count; the function is
    multiplicative on coprime arguments.
    """
    if n < 1:
        raise ValueError("sigma_complex: n must be >= 1")
    nu = complex(nu)
    out = 1.0 + 0.0j
    for p, e in factorize(n):
        out *= sum(complex(p) ** (nu * k) for k in range(e + 1))
    return out


def ramanujan_sum(n: int, d: int) -> int:
    """Ramanujan sum S(0, n; d) = sum over units l mod d of e(l n / d).

    Computed exactly through the classical divisor form
    sum_{e | gcd(|n|, d)} e * mu(d/e), with gcd(0, d) = d.  In particular
    S(0, -n; d) = S(0, n; d); no floating point ever enters.
    """
    if d < 1:
        raise ValueError("ramanujan_sum: d must be >= 1")
    g = math.gcd(abs(n), d)   # gcd(0, d) == d
    out = 0
    for e in divisors(g):
        out += e * mobius(d // e)
    return out


def mod_inverse(x: int, d: int) -> int:
    """Inverse of x modulo d, in [1, d-1].  Requires gcd(x, d) = 1, d >= 2."""
    if d < 2:
        raise ValueError("mod_inverse: d must be >= 2")
    try:
        return pow(x, -1, d)
    except ValueError:
        raise ValueError(f"mod_inverse: {x} is not invertible mod {d}") from None


def euler_phi(n: int) -> int:
    """Euler's totient, computed from the factorization."""
    if n < 1:
        raise ValueError("euler_phi: n must be >= 1")
    out = 1
    for p, e in factorize(n):
        out *= p ** (e - 1) * (p - 1)
    return out


def is_prime(n: int) -> bool:
    """Primality test (deterministic in the 64-bit range)."""
    return n >= 2 and _is_probable_prime(n)
