"""Acceptance gate: every headline criterion at its stated tolerance.

Each test prints one PASS/FAIL line (visible with ``pytest -s`` or in the
captured output) and asserts the criterion, including its time budget
where one is declared.
"""

import math
import subprocess
import sys
import time
from fractions import Fraction

import numpy as np

from twistedmoments import arith, identities as idn, numeric
from twistedmoments.hecke import (
    EisensteinProvider,
    HeckePoly,
    SymbolicProvider,
    eisenstein_assignment,
    lambda_power,
)
from twistedmoments.numeric import characters_mod, gauss_sum

ALPHAS = [(0j, 0j, 0j), (0.3j, -0.1j, -0.2j)]
POINTS = [(2.2 + 0j, 2.1 + 0j), (2.5 + 0j, 2.0 + 0j)]


def _report(num: int, label: str, ok: bool, detail: str = ""):
    line = f"criterion {num:2d} [{'PASS' if ok else 'FAIL'}]: {label}"
    if detail:
        line += f"  ({detail})"
    print(line, flush=True)
    assert ok, line


def test_criterion_01_diagonal_exact_sweep():
    t0 = time.monotonic()
    failures = [a for a in range(1, 201) if not idn.check_diagonal(a, 10).passed]
    elapsed = time.monotonic() - t0
    _report(
        1,
        "diagonal identity exact for a in [1, 200], height 10, < 30 s",
        not failures and elapsed < 30.0,
        f"{elapsed:.1f} s",
    )


def test_criterion_02_offdiag_exact_sweep_and_spot():
    t0 = time.monotonic()
    failures = [
        a
        for a in range(1, 61)
        if not idn.check_offdiag_residue(a, inner_cutoff=10 * a * a, height=10).passed
    ]
    elapsed = time.monotonic() - t0
    lhs, rhs = idn.offdiag_sides(SymbolicProvider(), 2, 10)
    A, B = HeckePoly.gen_a(2), HeckePoly.gen_b(2)
    spot = A * A - (A * A - B) * Fraction(1, 2)
    spot_ok = lhs.terms[Fraction(1)] == spot and rhs.terms[Fraction(1)] == spot
    _report(
        2,
        "off-diagonal residue identity exact for a in [1, 60], height 10, < 60 s; spot value at a = 2",
        not failures and spot_ok and elapsed < 60.0,
        f"{elapsed:.1f} s",
    )


def test_criterion_03_ramanujan_generating():
    worst = 0.0
    ok = True
    for a1 in range(1, 21):
        for z in (2 + 0j, 2.5 + 0j, 3 + 1j, 3 - 1j):
            rep = idn.check_ramanujan_generating(a1, z, tol=1e-6)
            ok = ok and rep.passed
            worst = max(worst, rep.max_error)
    _report(3, "Ramanujan generating identity < 1e-6 with doubling stability", ok, f"max {worst:.2e}")


def test_criterion_04_twisted_decomposition_grid():
    worst = 0.0
    ok = True
    for alpha in ALPHAS:
        for a in (1, 2, 3, 4, 6, 12):
            for s, s0 in POINTS:
                for sign in (1, -1):
                    rep = idn.check_twisted_decomposition(
                        a, s0, s, sign, alpha, a0_cutoff=200_000, a1_cutoff=200_000, tol=1e-5
                    )
                    ok = ok and rep.passed
                    worst = max(worst, rep.max_error)
    _report(4, "twisted decomposition raw vs decomposed < 1e-5 on the full grid", ok, f"max {worst:.2e}")


def test_criterion_05_residue_cross_check():
    worst = 0.0
    ok = True
    for a in (1, 2, 6):
        rep = idn.check_residue_numeric(a, 2.0, (0j, 0j, 0j), tol=1e-3)
        ok = ok and rep.passed
        errors = {item.key: item.error for item in rep.items}
        ok = ok and errors["sign-independence"] < 1e-12
        worst = max(worst, rep.max_error)
    _report(5, "residue matches closed form < 1e-3, sign-independent to machine precision", ok, f"max {worst:.2e}")


def test_criterion_06_prime_dual_moment():
    worst = 0.0
    ok = True
    for alpha in ALPHAS:
        for p in (3, 5, 7, 11, 13):
            for s, s0 in POINTS:
                for sign in (1, -1):
                    rep = idn.check_prime_dual(p, s0, s, sign, alpha, tol=1e-5)
                    ok = ok and rep.passed
                    worst = max(worst, rep.max_error)
    _report(6, "prime dual moment < 1e-5 with component-wise three-way split", ok, f"max {worst:.2e}")


def test_criterion_07_gauss_sums():
    worst = 0.0
    ok = True
    for p in (q for q in range(3, 51) if arith.is_prime(q)):
        chars = characters_mod(p)
        tau0 = gauss_sum(chars[0])
        ok = ok and round(tau0.real) == -1 and abs(tau0 - (-1)) < 1e-11
        for chi in chars[1:]:
            err = abs(abs(gauss_sum(chi)) - math.sqrt(p))
            worst = max(worst, err)
            ok = ok and err < 1e-11
    _report(7, "|tau(chi)| = sqrt(p) to 1e-11 for p <= 50; tau(chi_0) = -1", ok, f"max {worst:.2e}")


def test_criterion_08_functional_equation():
    worst = 0.0
    ok = True
    for p in (5, 7):
        for s0 in (0.5 + 1j, 0.5 + 2j):
            rep = idn.check_dirichlet_functional_eq(p, s0, tol=1e-7)
            ok = ok and rep.passed
            worst = max(worst, rep.max_error)
    _report(8, "Dirichlet functional equation and parity aggregates < 1e-7", ok, f"max {worst:.2e}")


def test_criterion_09_conjecture_factor():
    worst = 0.0
    ok = True
    for alpha in ALPHAS:
        for eps in ((1, 1, 1), (1, -1, 1)):
            for a in range(1, 31):
                rep = idn.check_conjecture_factor(a, alpha, eps, tol=1e-10)
                ok = ok and rep.passed
                worst = max(worst, rep.max_error)
    _report(9, "predicted arithmetic factor matches residue factor at s = 1/2 < 1e-10", ok, f"max {worst:.2e}")


def test_criterion_10_property_suites_and_full_run():
    ok = True
    # orthogonality, p <= 31
    for p in (q for q in range(3, 32) if arith.is_prime(q)):
        chars = characters_mod(p)
        for l in range(1, p):
            for m in range(1, p):
                s = sum(chi(l).conjugate() * chi(m) for chi in chars)
                ok = ok and abs(s - ((p - 1) if l == m else 0)) < 1e-10
    # Hurwitz-character decomposition at a spot
    chars = characters_mod(13)
    z = 2 + 3j
    for l in (1, 5, 12):
        rhs = sum(chi(l).conjugate() * numeric.dirichlet_L(z, chi) for chi in chars)
        rhs *= 13**z / 12
        ok = ok and abs(numeric.hurwitz_zeta(z, l / 13) - rhs) < 1e-9
    # Hecke recurrence vs tau_alpha
    alpha = (0.3j, -0.1j, -0.2j)
    eis = EisensteinProvider(alpha)
    for p in (2, 3, 5, 7, 11):
        assign = eisenstein_assignment(alpha, {p})
        for k in range(7):
            want = numeric.tau_alpha_direct(p**k, alpha)
            ok = ok and abs(eis.lam(p**k) - want) < 1e-12
            ok = ok and abs(lambda_power(p, k).evaluate(assign) - want) < 1e-11
    # Moebius sum and Ramanujan brute force
    mu = numeric.mobius_sieve(10_000)
    for n in (1, 2, 360, 9999):
        ok = ok and sum(int(mu[d]) for d in arith.divisors(n)) == (1 if n == 1 else 0)
    for d in (4, 12, 36, 200):
        row = numeric.ramanujan_row(d, 3 * d)
        for n in range(3 * d + 1):
            brute = sum(
                np.exp(2j * np.pi * l * n / d) for l in range(1, d + 1) if math.gcd(l, d) == 1
            )
            ok = ok and abs(brute - row[n]) < 1e-9
    # full CLI run under two minutes, exit code 0
    t0 = time.monotonic()
    proc = subprocess.run(
        [sys.executable, "-m", "twistedmoments", "verify", "all"],
        capture_output=True,
        text=True,
    )
    elapsed = time.monotonic() - t0
    ok = ok and proc.returncode == 0 and elapsed < 120.0
    ok = ok and proc.stdout.strip().splitlines()[-1].startswith("PASS")
    _report(10, "property suites pass; `verify all` exits 0 in under two minutes", ok, f"{elapsed:.1f} s")
