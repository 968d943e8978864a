"""The identity verifiers: passes, refusals, cross-layer consistency."""

from fractions import Fraction

import pytest

from twistedmoments import identities as idn
from twistedmoments.expsum import assert_equal_up_to
from twistedmoments.hecke import (
    EisensteinProvider,
    HeckePoly,
    SymbolicProvider,
    eisenstein_assignment,
    fourier_coefficient,
    lambda_power,
)
from twistedmoments.numeric import OutOfRegionError, characters_mod

SYM = SymbolicProvider()
ALPHA0 = (0j, 0j, 0j)
ALPHA1 = (0.3j, -0.1j, -0.2j)


# ---------------------------------------------------------------------------
# symbolic identities
# ---------------------------------------------------------------------------

def test_diagonal_trivial_and_sweep():
    assert idn.check_diagonal(1, 50).passed      # reduces to L = L
    for a in range(1, 41):
        assert idn.check_diagonal(a, 10).passed


def test_diagonal_spot_value_at_prime_base():
    p = 5
    lhs, rhs = idn.diagonal_sides(SYM, p, p)
    A, B = HeckePoly.gen_a(p), HeckePoly.gen_b(p)
    assert lhs.terms[Fraction(p)] == A * B - HeckePoly.one()
    assert rhs.terms[Fraction(p)] == A * B - HeckePoly.one()


def test_diagonal_tall_height():
    assert idn.check_diagonal(12, 100).passed


def test_offdiag_trivial_is_L_series():
    lhs, rhs = idn.offdiag_sides(SYM, 1, 20)
    for n in range(1, 21):
        assert lhs.terms[Fraction(n)] == SYM.lam(n)
    assert assert_equal_up_to(lhs, rhs, 20).passed


def test_offdiag_spot_value():
    # base 1 at a = 2: both sides are A2^2 - (A2^2 - B2)/2
    lhs, rhs = idn.offdiag_sides(SYM, 2, 10)
    A, B = HeckePoly.gen_a(2), HeckePoly.gen_b(2)
    expected = A * A - (A * A - B) * Fraction(1, 2)
    assert lhs.terms[Fraction(1)] == expected
    assert rhs.terms[Fraction(1)] == expected


def test_offdiag_sweep_small():
    for a in range(1, 31):
        assert idn.check_offdiag_residue(a, height=10).passed


def test_offdiag_large_spots():
    for a in (75, 100, 128):
        assert idn.check_offdiag_residue(a, height=6).passed


def test_offdiag_rejects_insufficient_cutoff():
    with pytest.raises(ValueError):
        idn.check_offdiag_residue(6, inner_cutoff=100, height=10)


def test_offdiag_matches_generic_expsum_construction():
    # the tuned builder agrees with truncated_L * local factor, rescaled
    from twistedmoments.expsum import truncated_L
    from twistedmoments.hecke import cfkrs_local_factor

    for a in (2, 6, 12):
        height = 4
        _, rhs = idn.offdiag_sides(SYM, a, height)
        lf = cfkrs_local_factor(SYM, a, dualize=True, var="2s-1")
        generic = truncated_L(SYM, "standard", height * a * a).mul(lf).scale_base(a, 1)
        for base, coeff in rhs.terms.items():
            assert generic.terms[base] == coeff
        for base, coeff in generic.terms.items():
            if base <= height:
                assert rhs.terms.get(base, HeckePoly.zero()) == coeff


@pytest.mark.slow
def test_offdiag_full_declared_range():
    for a in range(31, 201):
        assert idn.check_offdiag_residue(a, height=10).passed


# ---------------------------------------------------------------------------
# symbolic against Eisenstein evaluation
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("a", range(1, 31))
def test_layer_consistency(a):
    eis = EisensteinProvider(ALPHA1)
    height = 6
    for sides in (idn.diagonal_sides, idn.offdiag_sides):
        sym_l, sym_r = sides(SYM, a, height)
        eis_l, eis_r = sides(eis, a, height)
        primes = set()
        for es in (sym_l, sym_r):
            for poly in es.terms.values():
                primes |= poly.primes()
        assign = eisenstein_assignment(ALPHA1, primes)
        assert assert_equal_up_to(sym_l.evaluate(assign), eis_l, height, tol=1e-10).passed
        assert assert_equal_up_to(sym_r.evaluate(assign), eis_r, height, tol=1e-10).passed


# ---------------------------------------------------------------------------
# Ramanujan generating series
# ---------------------------------------------------------------------------

def test_ramanujan_generating_mu_case():
    # a1 = 1: sum mu(d) d^{-z} = 1/zeta(z)
    rep = idn.check_ramanujan_generating(1, 2.0)
    assert rep.passed


@pytest.mark.parametrize("a1,z", [(6, 2.5), (4, 3.0), (12, 3 + 1j)])
def test_ramanujan_generating_examples(a1, z):
    assert idn.check_ramanujan_generating(a1, z).passed


def test_ramanujan_generating_out_of_region():
    with pytest.raises(OutOfRegionError):
        idn.check_ramanujan_generating(3, 1.5)


# ---------------------------------------------------------------------------
# twisted decomposition / residue / prime dual
# ---------------------------------------------------------------------------

def test_twisted_decomposition_trivial():
    rep = idn.check_twisted_decomposition(1, 2.1, 2.2, 1, ALPHA0, a0_cutoff=50_000, a1_cutoff=50_000)
    assert rep.passed


@pytest.mark.parametrize("a", [2, 6])
@pytest.mark.parametrize("sign", [1, -1])
def test_twisted_decomposition_small_grid(a, sign):
    rep = idn.check_twisted_decomposition(a, 2.1, 2.2, sign, ALPHA1, a0_cutoff=50_000, a1_cutoff=50_000)
    assert rep.passed
    assert rep.max_error < 1e-6


def test_twisted_decomposition_sign_blind_when_untwisted():
    r_plus = idn.check_twisted_decomposition(1, 2.0, 2.5, 1, ALPHA0, a0_cutoff=20_000, a1_cutoff=20_000)
    r_minus = idn.check_twisted_decomposition(1, 2.0, 2.5, -1, ALPHA0, a0_cutoff=20_000, a1_cutoff=20_000)
    assert r_plus.max_error == r_minus.max_error


def test_twisted_decomposition_out_of_region():
    with pytest.raises(OutOfRegionError):
        idn.check_twisted_decomposition(2, 1.2, 2.0, 1, ALPHA0)


@pytest.mark.parametrize("alpha", [ALPHA0, ALPHA1])
@pytest.mark.parametrize("a", [1, 2, 6])
def test_residue_numeric(a, alpha):
    rep = idn.check_residue_numeric(a, 2.0, alpha)
    assert rep.passed
    by_key = {item.key: item.error for item in rep.items}
    assert by_key["sign-independence"] < 1e-12
    assert by_key["series-at-pole"] < 1e-9


def test_residue_out_of_region():
    with pytest.raises(OutOfRegionError):
        idn.check_residue_numeric(2, 1.2, ALPHA0)


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("sign", [1, -1])
def test_prime_dual_small(p, sign):
    rep = idn.check_prime_dual(p, 2.1, 2.2, sign, ALPHA1)
    assert rep.passed
    assert rep.max_error < 1e-10


def test_prime_dual_sign_reports_differ():
    # the character combination is genuinely sign-dependent
    plus = idn.check_prime_dual(5, 2.1, 2.2, 1, ALPHA1)
    minus = idn.check_prime_dual(5, 2.1, 2.2, -1, ALPHA1)
    assert plus.params["sign"] != minus.params["sign"]


def test_prime_dual_rejects_composite():
    with pytest.raises(ValueError):
        idn.check_prime_dual(9, 2.1, 2.2, 1, ALPHA0)


def test_prime_dual_out_of_region():
    with pytest.raises(OutOfRegionError):
        idn.check_prime_dual(5, 2.8, 2.0, 1, ALPHA0)


# ---------------------------------------------------------------------------
# Gauss twists, functional equation, conjecture factor
# ---------------------------------------------------------------------------

def test_gauss_twist_all_characters():
    for p in (3, 5, 7):
        for n in (1, 2, p, 3 * p):
            for j in range(p - 1):
                assert idn.check_gauss_twist(p, n, j).passed


def test_gauss_moduli():
    for p in (3, 5, 7, 11, 13, 47):
        assert idn.check_gauss_moduli(p).passed


@pytest.mark.parametrize("p", [5, 7])
@pytest.mark.parametrize("s0", [0.5 + 1j, 0.5 + 2j])
def test_functional_equation(p, s0):
    rep = idn.check_dirichlet_functional_eq(p, s0)
    assert rep.passed
    keys = {item.key for item in rep.items}
    assert "even-aggregate" in keys and "odd-aggregate" in keys


def test_conjecture_factor_examples():
    assert idn.check_conjecture_factor(1, ALPHA0, (1, 1, 1)).passed
    # a = p, alpha = 0: both sides p^{-1/2} (3 - 1/p)
    rep = idn.check_conjecture_factor(7, ALPHA0, (1, 1, 1))
    assert rep.passed
    value = 7 ** (-0.5) * (3 - 1 / 7)
    direct = 7 ** (-0.5) * idn._conjecture_direct_product(7, (0, 0, 0))
    assert direct == pytest.approx(value)
    assert idn.check_conjecture_factor(12, ALPHA1, (1, -1, 1)).passed


def test_conjecture_factor_rejects_bad_signs():
    with pytest.raises(ValueError):
        idn.check_conjecture_factor(4, ALPHA0, (1, 0, 1))


# ---------------------------------------------------------------------------
# report plumbing
# ---------------------------------------------------------------------------

def test_report_serialization_shape():
    rep = idn.check_diagonal(6, 5)
    blob = rep.to_dict()
    assert set(blob) == {"identity", "params", "mode", "items", "max_error", "pass", "substitution"}
    assert blob["mode"] == "symbolic"
    assert blob["substitution"] == "u = 2s"
    for item in blob["items"]:
        assert set(item) == {"key", "error", "exact"}
        assert item["exact"] is True
