from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from qpyth.qarith import cf_expand, cf_to_fraction
from qpyth.triples import (
    INF,
    IDENTITY,
    L,
    R,
    ClassicalTriple,
    SymMat2,
    TripleError,
    X0,
    branch_root,
    euclid_triple,
    is_primitive,
    is_pythagorean,
    is_standard,
    matrix_fraction,
    matrix_from_fraction,
    matrix_to_triple,
    moebius,
    pythagorean_tree,
    sl2_act,
    standard_triples,
    tree_rows,
    triple_to_matrix,
    word_int_matrix,
)

F = Fraction

coprime_pairs = st.tuples(st.integers(1, 80), st.integers(1, 80)).filter(
    lambda t: gcd(*t) == 1 and t[0] != t[1]
).map(lambda t: (max(t), min(t)))

FIGURE_ROWS = [
    [(12, 5, 13), (6, 8, 10)],
    [(20, 21, 29), (30, 16, 34), (24, 7, 25), (8, 15, 17)],
    [(28, 45, 53), (70, 24, 74), (80, 39, 89), (48, 55, 73),
     (42, 40, 58), (56, 33, 65), (40, 9, 41), (10, 24, 26)],
]


class TestEuclid:
    @pytest.mark.parametrize("m,n,t", [(2, 1, (4, 3, 5)), (3, 1, (6, 8, 10)), (3, 2, (12, 5, 13))])
    def test_examples(self, m, n, t):
        assert euclid_triple(m, n) == t

    @pytest.mark.parametrize("m,n", [(4, 2), (1, 2), (0, 1)])
    def test_rejects(self, m, n):
        with pytest.raises(TripleError):
            euclid_triple(m, n)

    @given(coprime_pairs)
    def test_standard_and_matrix_form(self, mn):
        m, n = mn
        t = euclid_triple(m, n)
        assert is_standard(t)
        assert matrix_to_triple(matrix_from_fraction(F(m, n))) == t


class TestClassification:
    def test_examples(self):
        assert is_standard((4, 3, 5)) and is_primitive((4, 3, 5))
        assert is_standard((6, 8, 10)) and not is_primitive((6, 8, 10))
        assert not is_standard((9, 12, 15))
        assert not is_standard((3, 4, 5))
        assert not is_standard((8, 6, 10))
        assert is_pythagorean((0, -1, 1))

    def test_standard_brute_force_matches_euclid(self):
        euclid = {
            euclid_triple(m, n)
            for m in range(2, 11) for n in range(1, m) if gcd(m, n) == 1
        }
        brute = set(standard_triples(100))
        assert brute == {t for t in euclid if t.c <= 100}
        assert len(brute) == 23


class TestMatrixForm:
    def test_examples(self):
        assert triple_to_matrix((4, 3, 5)) == SymMat2(4, 2, 1)
        assert matrix_to_triple(SymMat2(1, 1, 1)) == (2, 0, 2)
        assert triple_to_matrix((0, -1, 1)) == X0
        with pytest.raises(TripleError, match="matrix not integral"):
            triple_to_matrix((3, 4, 5))

    def test_action_examples(self):
        X = triple_to_matrix((4, 3, 5))
        assert sl2_act(R, X) == SymMat2(9, 3, 1)
        assert matrix_to_triple(sl2_act(R, X)) == (6, 8, 10)
        assert sl2_act(L, X) == SymMat2(4, 6, 9)
        assert matrix_to_triple(sl2_act(L, X)) == (12, -5, 13)
        assert sl2_act(IDENTITY, X) == X
        with pytest.raises(TripleError):
            sl2_act(((2, 0), (0, 1)), X)

    def test_from_fraction(self):
        assert matrix_from_fraction(F(2)) == SymMat2(4, 2, 1)
        assert matrix_from_fraction(F(3, 2)) == SymMat2(9, 6, 4)
        assert matrix_from_fraction(F(1)) == SymMat2(1, 1, 1)
        with pytest.raises(TripleError):
            matrix_from_fraction(F(1, 2))

    @given(coprime_pairs)
    def test_word_action_on_x0(self, mn):
        f = F(*mn)
        A = word_int_matrix(cf_expand(f))
        assert sl2_act(A, X0) == matrix_from_fraction(f)

    @given(st.lists(st.sampled_from("RL"), max_size=12))
    def test_rank_one_preserved(self, word):
        X = X0
        for g in word:
            X = sl2_act(R if g == "R" else L, X)
            assert X.det() == 0 and X.x11 >= 0 and X.x22 >= 0
            assert is_pythagorean(matrix_to_triple(X))


class TestMoebius:
    def test_examples(self):
        assert moebius(R, F(0)) == F(1)
        assert moebius(word_int_matrix(cf_expand(F(3, 2))), F(0)) == F(3, 2)
        assert moebius(L, F(2)) == F(2, 3)
        assert moebius(((0, 1), (1, 0)), F(0)) is INF
        assert moebius(R, INF) is INF
        assert str(INF) == "1/0"

    @given(st.lists(st.integers(1, 9), min_size=1, max_size=7).filter(lambda c: len(c) % 2))
    def test_word_on_zero_is_cf(self, cf):
        assert moebius(word_int_matrix(cf), F(0)) == cf_to_fraction(cf)


class TestTree:
    def test_stem(self):
        root = pythagorean_tree(0)
        assert root.triple == (0, -1, 1) and root.fraction is None
        stem = root.children[0]
        assert stem.triple == (2, 0, 2) and stem.fraction == 1
        assert branch_root(root).triple.display() == (4, 3, 5)
        assert branch_root(root).word == "RR"

    def test_figure_rows(self):
        rows = tree_rows(pythagorean_tree(3), 3)
        assert [[n.triple.display() for n in row] for row in rows] == FIGURE_ROWS

    def test_node_fractions(self):
        rows = tree_rows(pythagorean_tree(3), 3)
        assert [str(n.fraction) for n in rows[2]] == [
            "7/2", "7/5", "8/5", "8/3", "7/3", "7/4", "5/4", "5"]
        node = next(n for n in rows[2] if n.triple.display() == (56, 33, 65))
        assert node.fraction == F(7, 4)

    def test_invariants(self):
        for node in pythagorean_tree(6).walk():
            X = node.matrix
            assert X.det() == 0 and X.trace() == node.triple.c
            assert matrix_to_triple(X) == node.triple
            if node.fraction is not None and node.fraction > 1:
                f = node.fraction
                assert node.triple.display() == euclid_triple(f.numerator, f.denominator)

    def test_words_act_in_order(self):
        for node in pythagorean_tree(4).walk():
            X = X0
            for g in node.word:
                X = sl2_act(R if g == "R" else L, X)
            assert X == node.matrix

    def test_coverage_depth_12(self):
        seen = {n.triple.display() for n in pythagorean_tree(12).walk()}
        missing = [t for t in standard_triples(100) if tuple(t) not in seen]
        assert missing == []

    def test_matrix_fraction_rejects_non_outer_product(self):
        with pytest.raises(TripleError):
            matrix_fraction(SymMat2(2, 1, 1))

    def test_display(self):
        t = ClassicalTriple(12, -5, 13)
        assert t.display() == (12, 5, 13) and str(t) == "(12,5,13)"

    def test_negative_depth(self):
        with pytest.raises(TripleError):
            pythagorean_tree(-1)
