"""Classical Pythagorean triples as rank-one symmetric matrices.

A triple (a, b, c) is stored with a signed b; the L-move flips the sign of b
and the root of the tree is (0, -1, 1). Display uses |b|.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterator, NamedTuple, Sequence


IntMat = tuple[tuple[int, int], tuple[int, int]]

R = ((1, 1), (0, 1))
L = ((1, 0), (1, 1))
IDENTITY = ((1, 0), (0, 1))

MAX_TREE_DEPTH = 64


class TripleError(ValueError):
    pass


class ClassicalTriple(NamedTuple):
    a: int
    b: int
    c: int

    def display(self) -> tuple[int, int, int]:
        return (self.a, abs(self.b), self.c)

    def __str__(self):
        a, b, c = self.display()
        return f"({a},{b},{c})"


class SymMat2(NamedTuple):
    x11: int
    x12: int
    x22: int

    def det(self) -> int:
        return self.x11 * self.x22 - self.x12 * self.x12

    def trace(self) -> int:
        return self.x11 + self.x22

    def as_rows(self) -> IntMat:
        return ((self.x11, self.x12), (self.x12, self.x22))


def euclid_triple(m: int, n: int) -> ClassicalTriple:
    if m < 1 or n < 1 or gcd(m, n) != 1 or m < n:
        raise TripleError(f"need coprime positive m >= n, got ({m}, {n})")
    return ClassicalTriple(2 * m * n, m * m - n * n, m * m + n * n)


def is_pythagorean(t: Sequence[int]) -> bool:
    a, b, c = t
    return a * a + b * b == c * c


def is_standard(t: Sequence[int]) -> bool:
    a, b, c = t
    if a <= 0 or b <= 0 or c <= 0 or not is_pythagorean(t):
        return False
    g = gcd(gcd(a, b), c)
    if g == 1:
        return a % 2 == 0
    if g == 2:
        return (a // 2) % 2 == 1
    return False


def is_primitive(t: Sequence[int]) -> bool:
    a, b, c = t
    return is_pythagorean(t) and gcd(gcd(a, b), c) == 1


def triple_to_matrix(t: Sequence[int]) -> SymMat2:
    a, b, c = t
    if (c + b) % 2 or (c - b) % 2 or a % 2:
        raise TripleError(f"matrix not integral for {tuple(t)}")
    return SymMat2((c + b) // 2, a // 2, (c - b) // 2)


def matrix_to_triple(X: SymMat2) -> ClassicalTriple:
    return ClassicalTriple(2 * X.x12, X.x11 - X.x22, X.x11 + X.x22)


def _det(A: IntMat) -> int:
    return A[0][0] * A[1][1] - A[0][1] * A[1][0]


def matmul(A: IntMat, B: IntMat) -> IntMat:
    return (
        (A[0][0] * B[0][0] + A[0][1] * B[1][0], A[0][0] * B[0][1] + A[0][1] * B[1][1]),
        (A[1][0] * B[0][0] + A[1][1] * B[1][0], A[1][0] * B[0][1] + A[1][1] * B[1][1]),
    )


def sl2_act(A: IntMat, X: SymMat2) -> SymMat2:
    """A X A^T."""
    if _det(A) != 1:
        raise TripleError("acting matrix must have determinant 1")
    (p, r), (s, u) = A
    x, y, z = X
    # rows of A X
    m11, m12 = p * x + r * y, p * y + r * z
    m21, m22 = s * x + u * y, s * y + u * z
    return SymMat2(m11 * p + m12 * r, m11 * s + m12 * u, m21 * s + m22 * u)


class _Infinity:
    def __repr__(self):
        return "INF"

    def __str__(self):
        return "1/0"


INF = _Infinity()


def moebius(A: IntMat, x):
    """(alpha x + beta) / (gamma x + delta) on Q with a point at infinity."""
    (al, be), (ga, de) = A
    if x is INF:
        p, q = 1, 0
    else:
        x = Fraction(x)
        p, q = x.numerator, x.denominator
    num, den = al * p + be * q, ga * p + de * q
    if den == 0:
        return INF
    return Fraction(num, den)


def word_int_matrix(cf: Sequence[int]) -> IntMat:
    """R^a1 L^a2 R^a3 ... as an integer matrix."""
    out = IDENTITY
    for i, a in enumerate(cf):
        g = R if i % 2 == 0 else L
        for _ in range(a):
            out = matmul(out, g)
    return out


def matrix_from_fraction(f: Fraction) -> SymMat2:
    f = Fraction(f)
    if f < 1:
        raise TripleError("matrix_from_fraction needs f >= 1")
    m, n = f.numerator, f.denominator
    return SymMat2(m * m, m * n, n * n)


def matrix_fraction(X: SymMat2) -> Fraction | None:
    """The fraction >= 1 whose outer product is X, or None for X0."""
    m, n = isqrt(X.x11), isqrt(X.x22)
    if m * m != X.x11 or n * n != X.x22 or m * n != abs(X.x12):
        raise TripleError(f"{X} is not the outer product of an integer vector")
    if m == 0 or n == 0:
        return None
    return Fraction(max(m, n), min(m, n))


# -- the tree --------------------------------------------------------------

@dataclass
class TreeNode:
    word: str
    matrix: SymMat2
    triple: ClassicalTriple
    fraction: Fraction | None
    left: TreeNode | None = None
    right: TreeNode | None = None
    children: list = field(default_factory=list, repr=False)

    def walk(self) -> Iterator[TreeNode]:
        yield self
        for ch in self.children:
            yield from ch.walk()


X0 = SymMat2(0, 0, 1)


def _node(word: str, X: SymMat2) -> TreeNode:
    return TreeNode(word, X, matrix_to_triple(X), matrix_fraction(X))


def _grow(node: TreeNode, depth: int) -> None:
    if depth == 0:
        return
    node.left = _node(node.word + "L", sl2_act(L, node.matrix))
    node.right = _node(node.word + "R", sl2_act(R, node.matrix))
    node.children = [node.left, node.right]
    _grow(node.left, depth - 1)
    _grow(node.right, depth - 1)


def pythagorean_tree(depth: int) -> TreeNode:
    """Root (0,-1,1), stem R, R to (4,3,5), then `depth` branching levels.

    Words are written in order of application, so "RRL" means L acting after
    the stem.
    """
    if depth < 0:
        raise TripleError("depth must be nonnegative")
    root = _node("", X0)
    stem1 = _node("R", sl2_act(R, root.matrix))
    stem2 = _node("RR", sl2_act(R, stem1.matrix))
    root.right = stem1
    root.children = [stem1]
    stem1.right = stem2
    stem1.children = [stem2]
    _grow(stem2, depth)
    return root


def branch_root(tree: TreeNode) -> TreeNode:
    """The (4,3,5) node where branching starts."""
    return tree.children[0].children[0]


def tree_rows(tree: TreeNode, depth: int) -> list[list[TreeNode]]:
    """Rows below (4,3,5), each listed left to right."""
    rows = []
    level = [branch_root(tree)]
    for _ in range(depth):
        level = [ch for n in level for ch in (n.left, n.right) if ch is not None]
        if not level:
            break
        rows.append(level)
    return rows


def standard_triples(max_c: int) -> list[ClassicalTriple]:
    """All standard triples with hypotenuse <= max_c, by brute force over a, b."""
    out = []
    for c in range(1, max_c + 1):
        for a in range(2, c, 2):
            b2 = c * c - a * a
            b = isqrt(b2)
            if b > 0 and b * b == b2 and is_standard((a, b, c)):
                out.append(ClassicalTriple(a, b, c))
    return out
