import pytest
from hypothesis import given, strategies as st

from qpyth.poly import (
    InexactDivision,
    Poly,
    PolyError,
    add,
    eval_int,
    exact_div,
    from_json,
    has_positive_coeffs,
    invert_variable_scaled,
    is_monic_both_ends,
    is_palindromic,
    is_unimodal,
    mul,
    neg,
    parse_coeffs,
    q_int,
    reciprocal,
    shift,
    sub,
    to_json,
    to_text,
)

coeff_lists = st.lists(st.integers(-50, 50), max_size=9)
polys = coeff_lists.map(Poly)
nonzero_const = st.lists(st.integers(-20, 20), max_size=8).flatmap(
    lambda xs: st.integers(1, 20).map(lambda c0: Poly([c0, *xs]))
)


def P(*cs):
    return Poly(cs)


class TestArithmetic:
    def test_binomial_square(self):
        assert mul(P(1, 1), P(1, 1)) == P(1, 2, 1)

    def test_zero_absorbs(self):
        z = mul(P(1, 1, 0, 1), Poly())
        assert z == Poly() and z.coeffs == () and z.degree is None

    def test_q4_factorization(self):
        assert mul(P(1, 1), P(1, 0, 1)) == P(1, 1, 1, 1)

    def test_normalization(self):
        assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
        assert sub(P(1, 2, 3), P(0, 0, 3)).coeffs == (1, 2)

    def test_shift_and_neg(self):
        assert shift(P(1, 1), 2) == P(0, 0, 1, 1)
        assert neg(P(1, -2)) == P(-1, 2)
        with pytest.raises(PolyError):
            shift(P(1), -1)

    def test_big_coefficients_exact(self):
        big = 10**40 + 7
        assert mul(P(big, 1), P(big, 1))[0] == big * big

    @given(polys, polys, polys)
    def test_ring_laws(self, a, b, c):
        assert add(a, b) == add(b, a)
        assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
        assert sub(add(a, b), b) == a
        for p in (add(a, b), mul(a, b), sub(a, c)):
            assert not p.coeffs or p.coeffs[-1] != 0

    @given(polys, st.integers(-5, 5))
    def test_eval_matches_sum(self, p, x):
        assert eval_int(p, x) == sum(c * x**i for i, c in enumerate(p.coeffs))


class TestEval:
    def test_examples(self):
        assert eval_int(P(1, 1, 1, 1), 1) == 4
        assert eval_int(Poly(), 7) == 0
        assert eval_int(P(1, 3, 3, 3, 2, 1), 1) == 13


class TestReciprocal:
    def test_examples(self):
        assert reciprocal(P(1, 1, 2, 1)) == P(1, 2, 1, 1)
        assert reciprocal(P(1, 1, 1)) == P(1, 1, 1)
        assert reciprocal(P(0, 1, 1)) == P(1, 1)

    def test_zero_rejected(self):
        with pytest.raises(PolyError, match="reciprocal of zero undefined"):
            reciprocal(Poly())

    @given(nonzero_const)
    def test_involution(self, p):
        assert reciprocal(reciprocal(p)) == p

    @given(nonzero_const, nonzero_const)
    def test_multiplicative(self, p, r):
        assert reciprocal(mul(p, r)) == mul(reciprocal(p), reciprocal(r))

    @given(polys.filter(bool))
    def test_value_at_one(self, p):
        assert eval_int(reciprocal(p), 1) == eval_int(p, 1)


class TestInvertScaled:
    def test_examples(self):
        assert invert_variable_scaled(P(1, 1), 4) == P(0, 0, 0, 1, 1)
        assert invert_variable_scaled(P(1, 1, 1, 1), 4) == P(0, 1, 1, 1, 1)
        assert invert_variable_scaled(P(1), 0) == P(1)

    def test_window_too_small(self):
        with pytest.raises(PolyError):
            invert_variable_scaled(P(1, 1, 1), 1)

    @given(nonzero_const, st.integers(0, 4))
    def test_is_padded_reciprocal(self, p, pad):
        assert invert_variable_scaled(p, p.degree + pad) == shift(reciprocal(p), pad)


class TestPredicates:
    def test_palindromic(self):
        assert is_palindromic(P(1, 1, 1, 1))
        assert not is_palindromic(P(1, 2, 1, 1))
        assert is_palindromic(P(5))
        with pytest.raises(PolyError):
            is_palindromic(Poly())

    def test_monic(self):
        assert is_monic_both_ends(P(1, 10, 13, 1))
        assert not is_monic_both_ends(P(0, 1, 1))
        assert not is_monic_both_ends(P(2, 1))
        assert not is_monic_both_ends(Poly())

    def test_positive(self):
        assert has_positive_coeffs(P(1, 3, 5, 9, 11, 12, 11, 8, 4, 1))
        assert not has_positive_coeffs(P(1, -1))
        assert not has_positive_coeffs(P(1, 0, 0, 1))
        assert not has_positive_coeffs(Poly())

    def test_unimodal(self):
        assert is_unimodal(P(1, 3, 3, 3, 2, 1))
        assert not is_unimodal(P(1, 2, 1, 2, 1))
        assert is_unimodal(P(1, 1, 1))

    @given(st.lists(st.integers(1, 6), min_size=1, max_size=6), st.booleans())
    def test_palindrome_unimodal_iff_first_half_rises(self, half, odd):
        cs = half + (half[-2::-1] if odd else half[::-1])
        p = Poly(cs)
        assert is_palindromic(p)
        rises = all(x <= y for x, y in zip(half, half[1:]))
        assert is_unimodal(p) == rises


class TestExactDiv:
    def test_b31_over_one_plus_q(self):
        b31 = P(1, 2, 2, 2, 1)
        s = exact_div(b31, P(1, 1))
        assert mul(s, P(1, 1)) == b31
        # the quotient is [4]_q, so B_{3/1} = (1+q)^2 (1+q^2)
        assert s == q_int(4)
        assert b31 == mul(mul(P(1, 1), P(1, 1)), P(1, 0, 1))
        assert mul(P(1, 1), mul(P(1, 0, 1), P(1, 0, 1))) != b31

    def test_by_one(self):
        p = P(3, 0, -2, 7)
        assert exact_div(p, P(1)) == p

    def test_inexact(self):
        with pytest.raises(InexactDivision) as err:
            exact_div(P(1, 1, 1), P(1, 1))
        assert err.value.remainder == P(1)

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            exact_div(P(1), Poly())

    @given(polys, polys.filter(bool))
    def test_round_trip(self, p, d):
        assert exact_div(mul(p, d), d) == p


class TestRendering:
    def test_text(self):
        assert to_text(P(1, 2, 1, 1)) == "1 + 2*q + q^2 + q^3"
        assert to_text(Poly()) == "0"
        assert to_text(P(0, -1, 3)) == "-q + 3*q^2"

    def test_json(self):
        assert to_json(P(1, 2, 1, 1)) == ["1", "2", "1", "1"]

    @given(polys)
    def test_json_round_trip(self, p):
        assert from_json(to_json(p)) == p
        assert parse_coeffs(",".join(to_json(p))) == p

    def test_q_int(self):
        assert q_int(3) == P(1, 1, 1)
        assert q_int(1) == P(1)
        assert q_int(6) == P(1, 1, 1, 1, 1, 1)
        with pytest.raises(PolyError):
            q_int(0)
