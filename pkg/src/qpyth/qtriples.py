"""q-deformed Pythagorean triples built from q-rationals.

For m/n > 1 with [m/n]_q = N/D and [n/m]_q = N'/D':

    A = q N N' + D D'
    B = N D' - D N'
    C = q N^2 + D^2

and A^2 + q B^2 = C C*.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .poly import (
    Poly,
    has_positive_coeffs,
    is_monic_both_ends,
    is_palindromic,
    is_unimodal,
    q_int,
    to_json,
)
from .qarith import (
    Mat2Poly,
    cf_expand,
    format_fraction,
    q_rational,
    q_rational_inverse,
    transpose_word_matrix,
    word_matrix,
    x0_matrix,
)
from .triples import ClassicalTriple, TreeNode, euclid_triple, pythagorean_tree


class QTripleError(ValueError):
    pass


def _check_base(f: Fraction) -> Fraction:
    f = Fraction(f)
    if f <= 1:
        raise QTripleError(f"degenerate base {f} (B would vanish); need m/n > 1")
    return f


@dataclass(frozen=True)
class QPythTriple:
    A: Poly
    B: Poly
    C: Poly
    base: Fraction | None = None

    @property
    def Cstar(self) -> Poly:
        return self.C.reciprocal()

    def classical(self) -> ClassicalTriple:
        return ClassicalTriple(self.A(1), self.B(1), self.C(1))

    def to_json(self) -> dict:
        return {
            "base": format_fraction(self.base) if self.base is not None else None,
            "A": to_json(self.A),
            "B": to_json(self.B),
            "C": to_json(self.C),
            "Cstar": to_json(self.Cstar),
            "classical": list(self.classical()),
            "conditions": check_conditions(self).to_json(),
        }


def q_matrix(f: Fraction) -> Mat2Poly:
    """A_q X0 A_q^T for the odd continued fraction of f."""
    cf = cf_expand(_check_base(f))
    return word_matrix(cf) @ x0_matrix() @ transpose_word_matrix(cf)


def q_trace_c(f: Fraction) -> Poly:
    r = q_rational(_check_base(f))
    return r.num * r.num * Poly((0, 1)) + r.den * r.den


def q_triple(f: Fraction) -> QPythTriple:
    f = _check_base(f)
    r = q_rational(f)
    inv = q_rational_inverse(r)
    N, D, Ni, Di = r.num, r.den, inv.num, inv.den
    A = (N * Ni).shift(1) + D * Di
    B = N * Di - D * Ni
    C = (N * N).shift(1) + D * D
    return QPythTriple(A, B, C, f)


def q_triple_mn(m: int, n: int) -> QPythTriple:
    if gcd(m, n) != 1:
        raise QTripleError(f"{m}/{n} is not in lowest terms")
    return q_triple(Fraction(m, n))


def verify_pythagoras(A: Poly, B: Poly, C: Poly) -> bool:
    """A^2 + q B^2 == C C*."""
    if not C:
        raise QTripleError("C must be nonzero")
    return A * A + (B * B).shift(1) == C * C.reciprocal()


@dataclass(frozen=True)
class ConditionReport:
    positive_A: bool
    positive_B: bool
    positive_C: bool
    palindromic_A: bool
    palindromic_B: bool
    monic_A: bool
    monic_B: bool
    monic_C: bool
    monic_Cstar: bool
    unimodal_A: bool
    unimodal_B: bool
    unimodal_C: bool

    @property
    def con1(self) -> bool:
        return self.positive_A and self.positive_B and self.positive_C

    @property
    def con2(self) -> bool:
        return self.palindromic_A and self.palindromic_B

    @property
    def con3(self) -> bool:
        return self.monic_A and self.monic_B and self.monic_C and self.monic_Cstar

    @property
    def con4_conjectural(self) -> bool:
        return self.unimodal_A and self.unimodal_B and self.unimodal_C

    @property
    def conditions_1_to_3(self) -> bool:
        return self.con1 and self.con2 and self.con3

    def to_json(self) -> dict:
        return {
            "positive": self.con1,
            "palindromic": self.con2,
            "monic": self.con3,
            "unimodal_conjectural": self.con4_conjectural,
        }


def _palin(p: Poly) -> bool:
    return bool(p) and is_palindromic(p)


def check_conditions(t: QPythTriple) -> ConditionReport:
    cstar = t.C.reciprocal() if t.C else t.C
    return ConditionReport(
        positive_A=has_positive_coeffs(t.A),
        positive_B=has_positive_coeffs(t.B),
        positive_C=has_positive_coeffs(t.C),
        palindromic_A=_palin(t.A),
        palindromic_B=_palin(t.B),
        monic_A=is_monic_both_ends(t.A),
        monic_B=is_monic_both_ends(t.B),
        monic_C=is_monic_both_ends(t.C),
        monic_Cstar=is_monic_both_ends(cstar),
        unimodal_A=is_unimodal(t.A),
        unimodal_B=is_unimodal(t.B),
        unimodal_C=is_unimodal(t.C),
    )


def series_solution(n: int) -> QPythTriple:
    """((1 + q^n)[n]_q, [n+1]_q [n-1]_q, 1 + q [n]_q^2) for n >= 2."""
    if n < 2:
        raise QTripleError("series needs n >= 2")
    qn = q_int(n)
    A = (Poly.monomial(n) + 1) * qn
    B = q_int(n + 1) * q_int(n - 1)
    C = (qn * qn).shift(1) + 1
    return QPythTriple(A, B, C, Fraction(n))


def brahmagupta_check(n1: Poly, d1: Poly, n2: Poly, d2: Poly) -> bool:
    """(q n1^2 + d1^2)(q n2^2 + d2^2) == (q n1 n2 + d1 d2)^2 + q (n1 d2 - d1 n2)^2."""
    lhs = ((n1 * n1).shift(1) + d1 * d1) * ((n2 * n2).shift(1) + d2 * d2)
    x = (n1 * n2).shift(1) + d1 * d2
    y = n1 * d2 - d1 * n2
    return lhs == x * x + (y * y).shift(1)


def same_up_to_reciprocal(c1: Poly, c2: Poly) -> bool:
    return c1 == c2 or c1 == c2.reciprocal()


# -- q-tree ----------------------------------------------------------------

def annotate(node: TreeNode) -> QPythTriple | None:
    if node.fraction is None or node.fraction <= 1:
        return None
    return q_triple(node.fraction)


def q_pythagorean_tree(depth: int) -> list[tuple[TreeNode, QPythTriple | None]]:
    """Nodes of the classical tree in preorder, each with its q-triple (or None)."""
    tree = pythagorean_tree(depth)
    return [(node, annotate(node)) for node in tree.walk()]


def unimodality_scan(max_m: int) -> tuple[int, list[tuple[Fraction, str]]]:
    """Check unimodality of A, B, C for every coprime m > n, m <= max_m.

    Returns (number of fractions checked, counterexamples as (fraction, which)).
    """
    checked = 0
    bad = []
    for m in range(2, max_m + 1):
        for n in range(1, m):
            if gcd(m, n) != 1:
                continue
            t = q_triple(Fraction(m, n))
            checked += 1
            for name, p in (("A", t.A), ("B", t.B), ("C", t.C)):
                if not is_unimodal(p):
                    bad.append((Fraction(m, n), name))
    return checked, bad


def coprime_fractions(max_m: int, include_one: bool = False):
    """Fractions m/n > 1 (or >= 1) in lowest terms with m <= max_m."""
    for m in range(1, max_m + 1):
        for n in range(1, m + 1):
            if gcd(m, n) == 1 and (m > n or include_one):
                yield Fraction(m, n)


def euclid_of(f: Fraction) -> ClassicalTriple:
    return euclid_triple(f.numerator, f.denominator)
