"""GL(3) Hecke-eigenvalue data: exact symbolic algebra and Eisenstein values.

The local L-factor at p is the inverse of ``1 - A_p X + B_p X^2 - X^3``,
where ``A_p`` stands for the eigenvalue at p and ``B_p`` for its dual.
Every eigenvalue at a prime power is therefore a polynomial with integer
coefficients in these two generators, and every two-index Fourier
coefficient follows from the Moebius convolution

    B(m1, m2) = sum_{r | gcd(m1, m2)} mu(r) * lam_bar(m1/r) * lam(m2/r).

Two coefficient providers realize the same interface:

* :class:`SymbolicProvider` -- values are :class:`HeckePoly` (exact, for a
  cusp form with unknown eigenvalues);
* :class:`EisensteinProvider` -- values are the complex triple divisor sums
  tau_alpha(n) for a zero-sum parameter triple alpha (the minimal-parabolic
  specialization), with lam_bar given by tau_{-alpha}.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from . import arith
from .expsum import ExpSum

Monomial = tuple[tuple[int, int], ...]   # ((gen, exp), ...) sorted by gen
# generator encoding: gen = 2p for A_p, 2p+1 for B_p


def _merge_monomials(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while i < n1 and j < n2:
        g1, e1 = m1[i]
        g2, e2 = m2[j]
        if g1 == g2:
            out.append((g1, e1 + e2))
            i += 1
            j += 1
        elif g1 < g2:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def _mul_terms(t1: dict, t2: dict) -> dict:
    out: dict = {}
    get = out.get
    for m1, c1 in t1.items():
        for m2, c2 in t2.items():
            m = _merge_monomials(m1, m2)
            v = get(m)
            if v is None:
                out[m] = c1 * c2
            else:
                v = v + c1 * c2
                if v:
                    out[m] = v
                else:
                    del out[m]
    return out


class HeckePoly:
    """Sparse polynomial over Q in the generators A_p, B_p (p prime).

    Immutable by convention: operations return fresh instances and never
    mutate ``terms``.  Zero coefficients are pruned, so two equal
    polynomials have equal term dicts.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = terms if terms is not None else {}

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls) -> "HeckePoly":
        return cls({})

    @classmethod
    def one(cls) -> "HeckePoly":
        return cls({(): 1})

    @classmethod
    def constant(cls, c) -> "HeckePoly":
        return cls({(): c}) if c else cls({})

    @classmethod
    def gen_a(cls, p: int) -> "HeckePoly":
        return cls({((2 * p, 1),): 1})

    @classmethod
    def gen_b(cls, p: int) -> "HeckePoly":
        return cls({((2 * p + 1, 1),): 1})

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        if not isinstance(other, HeckePoly):
            other = HeckePoly.constant(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return HeckePoly(out)

    __radd__ = __add__

    def __neg__(self):
        return HeckePoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, HeckePoly):
            other = HeckePoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return HeckePoly.constant(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, HeckePoly):
            return HeckePoly(_mul_terms(self.terms, other.terms))
        if not other:
            return HeckePoly({})
        return HeckePoly({m: c * other for m, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, HeckePoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == HeckePoly.constant(other).terms
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- structure ----------------------------------------------------
    def dual(self) -> "HeckePoly":
        """Ring automorphism swapping A_p and B_p for every prime p."""
        out = {}
        for m, c in self.terms.items():
            swapped = tuple(sorted((g ^ 1, e) for g, e in m))
            out[swapped] = c
        return HeckePoly(out)

    def evaluate(self, assign: dict[int, tuple[complex, complex]]) -> complex:
        """Substitute A_p -> assign[p][0], B_p -> assign[p][1]."""
        total = 0j
        for m, c in self.terms.items():
            v = complex(c.numerator) / c.denominator if isinstance(c, Fraction) else complex(c)
            for g, e in m:
                v *= assign[g >> 1][g & 1] ** e
            total += v
        return total

    def primes(self) -> set[int]:
        return {g >> 1 for m in self.terms for g, _ in m}

    # -- rendering ------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        def keyfun(m):
            return (-sum(e for _, e in m), m)
        parts = []
        for m in sorted(self.terms, key=keyfun):
            c = self.terms[m]
            mono = "*".join(
                f"{'A' if g % 2 == 0 else 'B'}{g >> 1}" + (f"^{e}" if e > 1 else "")
                for g, e in m
            )
            frac = Fraction(c)
            mag = abs(frac)
            cs = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{cs}*{mono}"
            else:
                body = cs
            parts.append(("-" if frac < 0 else "+", body))
        sign0, body0 = parts[0]
        out = body0 if sign0 == "+" else f"-{body0}"
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"HeckePoly({self})"


# ---------------------------------------------------------------------------
# eigenvalues at prime powers: the recurrence from the local factor
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def lambda_power(p: int, k: int) -> HeckePoly:
    """Eigenvalue at p^k as a polynomial in A_p, B_p.

    The X^k coefficient of (1 - A_p X + B_p X^2 - X^3)^{-1}, i.e. the
    recurrence lam(p^k) = A_p lam(p^{k-1}) - B_p lam(p^{k-2}) + lam(p^{k-3})
    with lam(p^0) = 1 and lam vanishing at negative exponents.
    """
    if k < 0:
        return HeckePoly.zero()
    if k == 0:
        return HeckePoly.one()
    return (
        HeckePoly.gen_a(p) * lambda_power(p, k - 1)
        - HeckePoly.gen_b(p) * lambda_power(p, k - 2)
        + lambda_power(p, k - 3)
    )


@lru_cache(maxsize=None)
def _lambda_sym(n: int) -> HeckePoly:
    out = HeckePoly.one()
    for p, e in arith.factorize(n):
        out = out * lambda_power(p, e)
    return out


@lru_cache(maxsize=None)
def _lambda_bar_sym(n: int) -> HeckePoly:
    return _lambda_sym(n).dual()


def dual(x: HeckePoly) -> HeckePoly:
    """Involution exchanging the form with its dual (A_p <-> B_p)."""
    return x.dual()


# ---------------------------------------------------------------------------
# coefficient providers
# ---------------------------------------------------------------------------

class SymbolicProvider:
    """Eigenvalue data for a cusp form with unknown (formal) eigenvalues."""

    is_symbolic = True
    ring = "symbolic"

    def lam(self, n: int) -> HeckePoly:
        return _lambda_sym(n)

    def lam_bar(self, n: int) -> HeckePoly:
        return _lambda_bar_sym(n)

    def one(self) -> HeckePoly:
        return HeckePoly.one()

    def coerce_scalar(self, q: Fraction):
        return q

    def __repr__(self):
        return "SymbolicProvider()"


class EisensteinProvider:
    """tau_alpha coefficients for a zero-sum complex triple alpha.

    tau_alpha(n) = sum over ordered triples d1*d2*d3 = n of
    d1^{-a1} d2^{-a2} d3^{-a3}; this is the eigenvalue of the
    minimal-parabolic specialization with parameters alpha.  The identities
    checked here hold formally for any zero-sum triple, so temperedness
    (purely imaginary parameters) is not enforced.
    """

    is_symbolic = False
    ring = "complex"

    def __init__(self, alpha):
        alpha = tuple(complex(a) for a in alpha)
        if len(alpha) != 3:
            raise ValueError("EisensteinProvider: alpha must be a triple")
        if abs(sum(alpha)) > 1e-12:
            raise ValueError(f"EisensteinProvider: alpha must sum to 0, got {alpha}")
        self.alpha = alpha
        self._lam_cache: dict[int, complex] = {1: 1.0 + 0j}
        self._bar_cache: dict[int, complex] = {1: 1.0 + 0j}

    def _prime_power_value(self, p: int, k: int, alpha) -> complex:
        # tau at p^k: sum of p^{-(i a1 + j a2 + l a3)} over i + j + l = k
        a1, a2, a3 = alpha
        out = 0j
        pl = math.log(p)
        for i in range(k + 1):
            for j in range(k + 1 - i):
                l = k - i - j
                out += cmath.exp(-(i * a1 + j * a2 + l * a3) * pl)
        return out

    def _value(self, n: int, alpha, cache) -> complex:
        v = cache.get(n)
        if v is None:
            v = 1.0 + 0j
            for p, e in arith.factorize(n):
                v *= self._prime_power_value(p, e, alpha)
            cache[n] = v
        return v

    def lam(self, n: int) -> complex:
        return self._value(n, self.alpha, self._lam_cache)

    def lam_bar(self, n: int) -> complex:
        return self._value(n, tuple(-a for a in self.alpha), self._bar_cache)

    def one(self) -> complex:
        return 1.0 + 0j

    def coerce_scalar(self, q: Fraction):
        return q.numerator / q.denominator

    def __repr__(self):
        return f"EisensteinProvider(alpha={self.alpha})"


def lambda_of(provider, n: int):
    """Multiplicative eigenvalue extension: product over p^e || n."""
    if n < 1:
        raise ValueError("lambda_of: n must be >= 1")
    return provider.lam(n)


def fourier_coefficient(provider, m1: int, m2: int):
    """Two-index Fourier coefficient via the Moebius convolution.

    B(m1, m2) = sum_{r | gcd(m1, m2)} mu(r) lam_bar(m1/r) lam(m2/r);
    swapping the indices corresponds to applying the dual involution.
    """
    if m1 < 1 or m2 < 1:
        raise ValueError("fourier_coefficient: indices must be >= 1")
    g = math.gcd(m1, m2)
    total = None
    for r in arith.divisors(g):
        mu = arith.mobius(r)
        if mu == 0:
            continue
        term = mu * (provider.lam_bar(m1 // r) * provider.lam(m2 // r))
        total = term if total is None else total + term
    return total


_LF_BASES = {
    # (dualize, var) -> (base exponent of p, extra scalar power of 1/p)
    (False, "s"): (2, 0),
    (False, "2s"): (1, 0),
    (False, "2s-1"): (1, 1),
    (True, "s"): (-2, 2),
    (True, "2s"): (-1, 2),
    (True, "2s-1"): (-1, 1),
}


def cfkrs_local_factor(provider, a: int, *, dualize: bool = False, var: str = "s") -> ExpSum:
    """Finite Euler product over p | a entering the main-term identities.

    Undualized: prod_{p|a} { lam_bar(p^{o_p}) - lam_bar(p^{o_p - 1}) p^{-2s} }.
    Dualized:   prod_{p|a} { lam(p^{o_p})     - lam(p^{o_p - 1}) p^{-2(1-s)} }.

    Returned as an :class:`ExpSum` in the exponent variable named by
    ``var``: "s" itself, "2s" (so p^{-2s} contributes at base p), or
    "2s-1" (the off-diagonal normalization, where p^{-2(1-s)} becomes the
    rational base 1/p scaled by 1/p).  a = 1 gives the empty product 1.
    """
    try:
        base_exp, inv_pow = _LF_BASES[(dualize, var)]
    except KeyError:
        raise ValueError(f"cfkrs_local_factor: unsupported variable {var!r}") from None
    value = provider.lam if dualize else provider.lam_bar
    out = ExpSum({Fraction(1): provider.one()}, None, provider.ring)
    for p, e in arith.factorize(a):
        lead = value(p**e)
        sub = value(p ** (e - 1))
        scale = provider.coerce_scalar(Fraction(1, p**inv_pow))
        factor = ExpSum(
            {
                Fraction(1): lead,
                Fraction(p) ** base_exp: -(sub * scale) if inv_pow else -sub,
            },
            None,
            provider.ring,
        )
        out = out.mul(factor)
    return out


def eisenstein_assignment(alpha, primes) -> dict[int, tuple[complex, complex]]:
    """Substitution map sending A_p, B_p to tau_alpha(p), tau_{-alpha}(p)."""
    prov = EisensteinProvider(alpha)
    return {p: (prov.lam(p), prov.lam_bar(p)) for p in primes}
