"""The formal exponent-sum calculus and its completeness bookkeeping."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twistedmoments.expsum import (
    CompletenessError,
    ExpSum,
    RingMismatchError,
    assert_equal_up_to,
    truncated_L,
)
from twistedmoments.hecke import EisensteinProvider, HeckePoly, SymbolicProvider

SYM = SymbolicProvider()


def cexp(terms, bound=None):
    return ExpSum(terms, bound, "complex")


def test_add_examples():
    assert cexp({2: 1.0}).add(cexp({2: 2.5})) == cexp({2: 3.5})
    x = cexp({2: 1.0, 3: -1.0})
    assert x.add(ExpSum.zero("complex")) == x
    assert cexp({1: 1.0}).add(cexp({1: -1.0})).terms == {}


def test_add_ring_mismatch():
    with pytest.raises(RingMismatchError):
        cexp({1: 1.0}).add(ExpSum({1: HeckePoly.one()}, None, "symbolic"))


def test_mul_examples():
    assert cexp({2: 2.0}).mul(cexp({3: 3.0})) == cexp({6: 6.0})
    sq = cexp({1: 1.0, 2: 1.0}).mul(cexp({1: 1.0, 2: 1.0}))
    assert sq == cexp({1: 1.0, 2: 2.0, 4: 1.0})
    assert cexp({Fraction(1, 2): 1.0}).mul(cexp({2: 1.0})) == cexp({1: 1.0})


small = st.dictionaries(
    st.sampled_from([Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2)]),
    st.integers(-3, 3).map(complex),
    max_size=3,
)


@given(small, small, small)
def test_mul_commutative_associative(a, b, c):
    x, y, z = cexp(a), cexp(b), cexp(c)
    assert x.mul(y) == y.mul(x)
    assert x.mul(y).mul(z) == x.mul(y.mul(z))


def test_scale_base_examples():
    p = 3
    assert cexp({p * p: 1.0}).scale_base(p * p, 1.0) == cexp({1: 1.0})
    assert cexp({1: 1.0}).scale_base(5, 1.0) == cexp({Fraction(1, 5): 1.0})
    x = ExpSum({2: HeckePoly.gen_a(2)}, None, "symbolic")
    y = x.scale_base(1, HeckePoly.gen_b(2))
    assert y.terms[Fraction(2)] == HeckePoly.gen_a(2) * HeckePoly.gen_b(2)


@given(small, st.sampled_from([Fraction(2), Fraction(3), Fraction(1, 2)]))
def test_scale_base_roundtrip(a, q):
    x = cexp(a, bound=10)
    back = x.scale_base(q, 1.0).scale_base(1 / q, 1.0)
    assert back == x


def test_completeness_add_and_mul():
    x = cexp({1: 1.0, 2: 1.0}, bound=10)
    y = cexp({1: 1.0}, bound=4)
    assert x.add(y).bound == 4
    assert x.mul(y).bound == 4          # min(10*1, 4*1)
    shifted = cexp({100: 1.0}, bound=1000)
    assert x.mul(shifted).bound == 1000  # min(10*100, 1000*1)
    exact = cexp({1: 2.0})
    assert x.mul(exact).bound == 10


def test_truncated_L_examples():
    assert truncated_L(SYM, "standard", 1).terms == {Fraction(1): HeckePoly.one()}
    two = truncated_L(SYM, "standard", 2)
    assert two.terms[Fraction(2)] == HeckePoly.gen_a(2)
    assert two.bound == 2
    dual_two = truncated_L(SYM, "dual", 2)
    assert dual_two.terms[Fraction(2)] == HeckePoly.gen_b(2)


def test_truncated_L_eisenstein_matches_triple_divisor_count():
    eis = EisensteinProvider((0, 0, 0))
    series = truncated_L(eis, "standard", 1000)
    for n in range(1, 1001):
        count = sum(
            1
            for d1 in range(1, n + 1)
            if n % d1 == 0
            for d2 in range(1, n // d1 + 1)
            if (n // d1) % d2 == 0
        )
        assert series.terms[Fraction(n)] == pytest.approx(count)


def test_assert_equal_refuses_past_bound():
    x = cexp({1: 1.0}, bound=5)
    y = cexp({1: 1.0}, bound=20)
    with pytest.raises(CompletenessError):
        assert_equal_up_to(x, y, 6)
    # a product of truncations cannot be silently compared high up
    lx = truncated_L(SYM, "standard", 5)
    with pytest.raises(CompletenessError):
        assert_equal_up_to(lx.mul(lx), lx.mul(lx), 25)


def test_assert_equal_symbolic():
    x = ExpSum({1: HeckePoly.gen_a(2)}, 10, "symbolic")
    y = ExpSum({1: HeckePoly.gen_b(2)}, 10, "symbolic")
    report = assert_equal_up_to(x, y, 1)
    assert not report.passed
    assert report.items[0].key == "1"
    same = assert_equal_up_to(x, x, 10)
    assert same.passed and same.mode == "symbolic"


def test_assert_equal_complex_tolerance():
    x = cexp({1: 1.0}, bound=5)
    y = cexp({1: 1.0 + 1e-12}, bound=5)
    assert assert_equal_up_to(x, y, 5, tol=1e-10).passed
    assert not assert_equal_up_to(x, y, 5, tol=1e-13).passed


def test_evaluate_maps_symbolic_to_complex():
    x = ExpSum({2: HeckePoly.gen_a(3), 1: HeckePoly.one()}, 10, "symbolic")
    out = x.evaluate({3: (2.5 + 0j, 0j)})
    assert out.ring == "complex"
    assert out.terms[Fraction(2)] == pytest.approx(2.5)
    assert out.bound == 10


def test_json_rendering_sorted_by_base():
    x = ExpSum({Fraction(3, 2): HeckePoly.gen_a(2), 1: HeckePoly.one()}, 10, "symbolic")
    blob = x.to_json_obj()
    assert blob["completeness_bound"] == "10"
    assert blob["terms"] == [["1", "1"], ["3/2", "A2"]]
    y = cexp({Fraction(1, 2): 2.0 + 1.0j})
    assert y.to_json_obj()["terms"] == [["1/2", "2.0+1.0i"]]
