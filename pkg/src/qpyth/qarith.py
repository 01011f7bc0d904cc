"""Continued fractions, the q-deformed generators R_q and L_q, and q-rationals.

Three routes to the numerator/denominator pair of a q-rational live here:
the word-matrix product, the shift/inversion recurrence, and the inversion
by coefficient reversal. They are kept separate so the tests can play them
against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from .poly import ONE, ZERO, Poly, q_int  # noqa: F401

CFrac = tuple[int, ...]


class QArithError(ValueError):
    pass


def parse_fraction(text: str) -> Fraction:
    """Parse "m/n" or a bare "m" into a positive Fraction."""
    text = text.strip()
    try:
        if "/" in text:
            m, n = text.split("/", 1)
            m, n = int(m), int(n)
        else:
            m, n = int(text), 1
    except ValueError as exc:
        raise QArithError(f"cannot parse fraction {text!r}") from exc
    if n == 0:
        raise QArithError("zero denominator")
    f = Fraction(m, n)
    if f <= 0:
        raise QArithError(f"fraction must be positive, got {text}")
    return f


def format_fraction(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


# -- continued fractions ---------------------------------------------------

def cf_expand(f: Fraction) -> CFrac:
    """Odd-length continued fraction [a1, ..., ak] of f >= 1."""
    f = Fraction(f)
    if f < 1:
        raise QArithError("expansion defined for fractions >= 1")
    m, n = f.numerator, f.denominator
    terms = []
    while n:
        a, r = divmod(m, n)
        terms.append(a)
        m, n = n, r
    if len(terms) % 2 == 0:
        if terms[-1] >= 2:
            terms[-1] -= 1
            terms.append(1)
        else:
            terms.pop()
            terms[-1] += 1
    return tuple(terms)


def cf_to_fraction(cf: Sequence[int]) -> Fraction:
    if not cf:
        raise QArithError("empty continued fraction")
    if any(a < 1 for a in cf):
        raise QArithError("continued fraction terms must be >= 1")
    # convergent recurrence: p_k = a_k p_{k-1} + p_{k-2}
    p0, p1 = 1, cf[0]
    q0, q1 = 0, 1
    for a in cf[1:]:
        p0, p1 = p1, a * p1 + p0
        q0, q1 = q1, a * q1 + q0
    return Fraction(p1, q1)


def format_cf(cf: Sequence[int]) -> str:
    return "[" + ",".join(str(a) for a in cf) + "]"


# -- 2x2 polynomial matrices -----------------------------------------------

@dataclass(frozen=True)
class Mat2Poly:
    e11: Poly
    e12: Poly
    e21: Poly
    e22: Poly

    def __matmul__(self, other: Mat2Poly) -> Mat2Poly:
        return Mat2Poly(
            self.e11 * other.e11 + self.e12 * other.e21,
            self.e11 * other.e12 + self.e12 * other.e22,
            self.e21 * other.e11 + self.e22 * other.e21,
            self.e21 * other.e12 + self.e22 * other.e22,
        )

    def __pow__(self, k: int) -> Mat2Poly:
        if k < 0:
            raise QArithError("negative matrix power")
        out = IDENTITY
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def rows(self) -> tuple[tuple[Poly, Poly], tuple[Poly, Poly]]:
        return ((self.e11, self.e12), (self.e21, self.e22))

    def at(self, x: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """Evaluate every entry at q = x."""
        return ((self.e11(x), self.e12(x)), (self.e21(x), self.e22(x)))

    def trace(self) -> Poly:
        return self.e11 + self.e22

    def det(self) -> Poly:
        return self.e11 * self.e22 - self.e12 * self.e21


IDENTITY = Mat2Poly(ONE, ZERO, ZERO, ONE)
_Q = Poly((0, 1))


def gen_R() -> Mat2Poly:
    return Mat2Poly(_Q, ONE, ZERO, ONE)


def gen_L() -> Mat2Poly:
    return Mat2Poly(_Q, ZERO, _Q, ONE)


def x0_matrix() -> Mat2Poly:
    return Mat2Poly(ZERO, ZERO, ZERO, ONE)


def _check_odd(cf: Sequence[int]) -> None:
    if len(cf) % 2 == 0:
        raise QArithError(f"continued fraction {format_cf(cf)} has even length")
    if any(a < 1 for a in cf):
        raise QArithError("continued fraction terms must be >= 1")


def word_matrix(cf: Sequence[int]) -> Mat2Poly:
    """R_q^a1 L_q^a2 R_q^a3 ... R_q^ak."""
    _check_odd(cf)
    R, L = gen_R(), gen_L()
    out = IDENTITY
    for i, a in enumerate(cf):
        out = out @ ((R if i % 2 == 0 else L) ** a)
    return out


def transpose_word_matrix(cf: Sequence[int]) -> Mat2Poly:
    """L_q^ak R_q^a(k-1) ... L_q^a1: the reversed word with R, L swapped."""
    _check_odd(cf)
    R, L = gen_R(), gen_L()
    out = IDENTITY
    for i in range(len(cf) - 1, -1, -1):
        out = out @ ((L if i % 2 == 0 else R) ** cf[i])
    return out


def q_transpose(M: Mat2Poly) -> Mat2Poly:
    """[[a, b], [c, d]] -> [[a, c/q], [q b, d]]."""
    if M.e21[0] != 0:
        raise QArithError("lower-left entry is not divisible by q")
    return Mat2Poly(M.e11, Poly(M.e21.coeffs[1:]), M.e12.shift(1), M.e22)


# -- q-rationals -----------------------------------------------------------

@dataclass(frozen=True)
class QRational:
    num: Poly
    den: Poly
    base: Fraction

    def to_json(self) -> dict:
        return {
            "base": format_fraction(self.base),
            "num": [str(c) for c in self.num],
            "den": [str(c) for c in self.den],
        }

    @classmethod
    def from_json(cls, data: dict) -> QRational:
        return cls(
            Poly(int(c) for c in data["num"]),
            Poly(int(c) for c in data["den"]),
            parse_fraction(data["base"]),
        )


@lru_cache(maxsize=4096)
def _q_rational_cached(m: int, n: int) -> QRational:
    A = word_matrix(cf_expand(Fraction(m, n)))
    return QRational(A.e12, A.e22, Fraction(m, n))


def q_rational(f: Fraction) -> QRational:
    """Numerator and denominator of [f]_q for f >= 1, read off the word matrix."""
    f = Fraction(f)
    if f < 1:
        raise QArithError("q_rational needs f >= 1; use q_rational_inverse below 1")
    return _q_rational_cached(f.numerator, f.denominator)


def q_rational_inverse(r: QRational) -> QRational:
    """[n/m]_q from [m/n]_q by reversing both polynomials inside a common window."""
    d = max(r.num.degree, r.den.degree)
    return QRational(
        r.den.invert_variable_scaled(d),
        r.num.invert_variable_scaled(d),
        1 / r.base,
    )


def q_rational_any(f: Fraction) -> QRational:
    """[f]_q for any positive f, routing f < 1 through the inversion."""
    f = Fraction(f)
    if f >= 1:
        return q_rational(f)
    return q_rational_inverse(q_rational(1 / f))


def q_rational_plus_one(r: QRational) -> QRational:
    """[x + 1]_q = q [x]_q + 1."""
    return QRational(r.num.shift(1) + r.den, r.den, r.base + 1)


def q_rational_by_recurrence(f: Fraction) -> QRational:
    """[f]_q for f >= 1 built only from the shift and inversion rules.

    Walks the continued fraction from its last term outward.
    """
    cf = cf_expand(Fraction(f))
    r = QRational(ONE, ONE, Fraction(1))
    for _ in range(cf[-1] - 1):
        r = q_rational_plus_one(r)
    for a in reversed(cf[:-1]):
        r = q_rational_inverse(r)
        for _ in range(a):
            r = q_rational_plus_one(r)
    return r


def _content(p: Poly) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def _low_order(p: Poly) -> int:
    for i, c in enumerate(p):
        if c:
            return i
    return 0


def reduce_pair(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Cancel the common power of q, the common integer content and the sign."""
    if not den:
        raise QArithError("zero denominator")
    if not num:
        return num, ONE
    k = min(_low_order(num), _low_order(den))
    if k:
        num, den = Poly(num.coeffs[k:]), Poly(den.coeffs[k:])
    g = gcd(_content(num), _content(den))
    if den.coeffs[-1] < 0:
        g = -g
    if g != 1:
        num = Poly(c // g for c in num)
        den = Poly(c // g for c in den)
    return num, den


def perrine_inverse(r: QRational) -> QRational:
    """Inversion through ((q-1)x + 1) / (q x + 1 - q) applied to x = num/den.

    No change of variable is needed. The raw numerator and denominator are
    reduced by their common monomial and content before being returned.
    """
    qm1 = Poly((-1, 1))
    one_minus_q = Poly((1, -1))
    num = qm1 * r.num + r.den
    den = r.num.shift(1) + one_minus_q * r.den
    num, den = reduce_pair(num, den)
    return QRational(num, den, 1 / r.base)


def same_rational_function(n1: Poly, d1: Poly, n2: Poly, d2: Poly) -> bool:
    return n1 * d2 == n2 * d1


def total_positivity_poly(r1: QRational, r2: QRational) -> Poly:
    """num(r1) den(r2) - den(r1) num(r2), for base(r1) > base(r2)."""
    if r1.base <= r2.base:
        raise QArithError("total positivity needs base(r1) > base(r2)")
    return r1.num * r2.den - r1.den * r2.num
