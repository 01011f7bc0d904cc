"""Bounded exhaustive search for solutions of A^2 + q B^2 = C C*.

Candidates are restricted to conditions 1-3: positive coefficients, A and B
palindromic, A, B, C, C* monic at both ends. The search pairs palindromic A
and B with deg A = deg B + 1 and then factors S = A^2 + q B^2 as C C*
coefficient by coefficient. S must be palindromic, which for palindromic A, B
happens only when deg A = deg B + 1 or A = B; the second case forces a = b,
impossible for a Pythagorean triple.

`brute_force_solutions` is the independent check: it walks every admissible
C directly and looks S = C C* up in a table of all A^2 + q B^2, with no
degree-gap assumption and no use of `solve_for_C`.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator, Sequence

from .poly import Poly, is_palindromic, is_unimodal, to_json
from .qtriples import check_conditions, QPythTriple, verify_pythagoras
from .triples import ClassicalTriple, is_standard

log = logging.getLogger(__name__)

Coeffs = tuple[int, ...]
Progress = Callable[[int, int], None]


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class SearchBounds:
    max_deg_C: int
    max_coeff: int
    require_unimodal: bool = False

    def __post_init__(self):
        if self.max_deg_C < 1 or self.max_coeff < 1:
            raise SearchError("search bounds must be >= 1")


@dataclass(frozen=True, order=True)
class Solution:
    A: Poly = field(compare=False)
    B: Poly = field(compare=False)
    C: Poly = field(compare=False)

    def sort_key(self):
        return (self.C.degree, self.C.coeffs, self.A.coeffs, self.B.coeffs)

    def terms(self) -> int:
        """Total number of nonzero terms in A, B and C."""
        return sum(1 for p in (self.A, self.B, self.C) for c in p if c)

    def as_triple(self) -> QPythTriple:
        return QPythTriple(self.A, self.B, self.C)

    def to_json(self) -> dict:
        return {"A": to_json(self.A), "B": to_json(self.B), "C": to_json(self.C),
                "terms": self.terms()}


@dataclass
class SolutionSet:
    target: ClassicalTriple
    bounds: SearchBounds
    solutions: list[Solution]
    examined: int = 0

    def __len__(self):
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    def keys(self) -> set[tuple[Coeffs, Coeffs, Coeffs]]:
        return {(s.A.coeffs, s.B.coeffs, s.C.coeffs) for s in self.solutions}

    def contains(self, A: Poly, B: Poly, C: Poly) -> bool:
        """Membership with C and C* identified."""
        key = canonical_key(A, B, C)
        return any(canonical_key(s.A, s.B, s.C) == key for s in self.solutions)

    def to_json(self) -> dict:
        return {
            "target": list(self.target),
            "bounds": asdict(self.bounds),
            "solutions": [s.to_json() for s in self.solutions],
        }


def canonical_c(C: Coeffs) -> Coeffs:
    """Pick the lexicographically smaller of C and its reversal."""
    r = C[::-1]
    return C if C <= r else r


def canonical_key(A: Poly, B: Poly, C: Poly) -> tuple[Coeffs, Coeffs, Coeffs]:
    return (A.coeffs, B.coeffs, canonical_c(C.coeffs))


# -- candidate generation -------------------------------------------------

def _compositions(total: int, parts: int, cap: int) -> Iterator[list[int]]:
    """Sequences of `parts` integers in [1, cap] summing to `total`, lexicographic."""
    if parts == 0:
        if total == 0:
            yield []
        return
    lo = max(1, total - cap * (parts - 1))
    hi = min(cap, total - (parts - 1))
    for x in range(lo, hi + 1):
        for rest in _compositions(total - x, parts - 1, cap):
            yield [x] + rest


def enumerate_palindromic_coeffs(total: int, deg: int, max_coeff: int | None = None) -> Iterator[Coeffs]:
    """Palindromic coefficient tuples of exact degree `deg`, ends 1, all >= 1."""
    if deg < 0 or total < 1:
        return
    if deg == 0:
        if total == 1:
            yield (1,)
        return
    cap = max_coeff if max_coeff is not None else total
    if cap < 1:
        return
    rest = total - 2
    inner = deg - 1
    pairs, has_mid = divmod(inner, 2)
    if not has_mid:
        if rest % 2:
            return
        for half in _compositions(rest // 2, pairs, cap):
            yield (1, *half, *half[::-1], 1)
        return
    # odd number of interior slots: a middle coefficient plus mirrored pairs
    out = []
    for mid in range(1, min(cap, rest) + 1):
        r = rest - mid
        if r % 2:
            continue
        for half in _compositions(r // 2, pairs, cap):
            out.append((1, *half, mid, *half[::-1], 1))
    out.sort()
    yield from out


def enumerate_palindromic(total: int, deg: int, max_coeff: int | None = None) -> list[Poly]:
    return [Poly(c) for c in enumerate_palindromic_coeffs(total, deg, max_coeff)]


# -- factoring S = C C* ---------------------------------------------------

def _conv(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def solve_for_C_coeffs(S: Sequence[int], c: int, max_coeff: int | None = None) -> list[Coeffs]:
    """All C with C C* = S, positive coefficients, ends 1 and C(1) = c.

    Writing C = c_0 + ... + c_D q^D, the coefficient of q^k in C C* is
    sum_{i=0..k} c_i c_{D-k+i}. With c_0 = c_D = 1 the new unknowns at step k
    are c_k and c_{D-k}, entering only through their sum, so each step fixes
    that sum and branches on how to split it. Every reported C is
    lexicographically <= its reversal.
    """
    S = tuple(S)
    if not S or len(S) % 2 == 0 or S[0] != 1 or S[-1] != 1:
        return []
    D = (len(S) - 1) // 2
    cap = max_coeff if max_coeff is not None else c
    if D == 0:
        return [(1,)] if c == 1 else []
    # C(1)^2 = S(1) and C(1) = c
    if sum(S) != c * c:
        return []
    coeffs = [0] * (D + 1)
    coeffs[0] = coeffs[D] = 1
    sumsq_target = S[D]
    found: list[Coeffs] = []

    def known_sum(k: int) -> int:
        return sum(coeffs[i] * coeffs[D - k + i] for i in range(1, k))

    def rec(k: int, used: int, sumsq: int, free: int) -> None:
        # used/sumsq: sum and sum of squares of assigned coefficients;
        # free: number of still unassigned coefficients
        if used + free > c or sumsq + free > sumsq_target:
            return
        j = D - k
        if k > j:
            C = tuple(coeffs)
            if used == c and _conv(C, C[::-1]) == list(S) and C <= C[::-1]:
                found.append(C)
            return
        s = S[k] - known_sum(k)
        if k == j:
            if s % 2 or not 1 <= s // 2 <= cap:
                return
            x = s // 2
            coeffs[k] = x
            rec(k + 1, used + x, sumsq + x * x, free - 1)
            return
        lo = max(1, s - cap)
        hi = min(cap, s - 1)
        for x in range(lo, hi + 1):
            y = s - x
            coeffs[k], coeffs[j] = x, y
            rec(k + 1, used + s, sumsq + x * x + y * y, free - 2)
        coeffs[k] = coeffs[j] = 0

    rec(1, 2, 2, D - 1)
    found.sort()
    return found


def solve_for_C(S: Poly, c: int, max_coeff: int | None = None) -> list[Poly]:
    return [Poly(x) for x in solve_for_C_coeffs(S.coeffs, c, max_coeff)]


# -- the search -----------------------------------------------------------

def _check_target(target: Sequence[int]) -> ClassicalTriple:
    t = ClassicalTriple(*target)
    if not is_standard(t):
        raise SearchError(
            f"target {tuple(t)} is not a standard triple with the even leg first"
        )
    return t


def _accept(A: Coeffs, B: Coeffs, C: Coeffs, bounds: SearchBounds) -> bool:
    if bounds.require_unimodal and not (is_unimodal(A) and is_unimodal(B) and is_unimodal(C)):
        return False
    return True


def _python_block(As, Bs, c, cap):
    qB2s = [[0] + _conv(B, B) for B in Bs]
    for A in As:
        A2 = _conv(A, A)
        for B, qB2 in zip(Bs, qB2s):
            S = [x + y for x, y in zip(A2, qB2 + [0])]
            for C in solve_for_C_coeffs(S, c, cap):
                yield A, B, C


def _compiled_block(As, Bs, c, cap):
    import numpy as np

    from ._kernel import block_search

    rows = block_search(np.array(As, dtype=np.int64), np.array(Bs, dtype=np.int64), c, cap)
    for row in rows:
        A, B = As[row[0]], Bs[row[1]]
        C = tuple(int(x) for x in row[2:])
        # exact re-check with unbounded integers
        if C in solve_for_C_coeffs(
            [x + y for x, y in zip(_conv(A, A), [0] + _conv(B, B) + [0])], c, cap
        ):
            yield A, B, C
        else:  # pragma: no cover - would mean an int64 overflow slipped through
            raise SearchError(f"compiled kernel reported a spurious solution {C}")


def compiled_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:  # pragma: no cover
        return False
    return True


def search_solutions(
    target: Sequence[int],
    bounds: SearchBounds,
    progress: Progress | None = None,
    engine: str = "auto",
) -> SolutionSet:
    """Every solution of A^2 + q B^2 = C C* satisfying conditions 1-3 within bounds.

    A, B, C all have coefficients <= bounds.max_coeff and deg C <= bounds.max_deg_C
    (deg C = deg A for any solution). `engine` is "python", "compiled" or
    "auto"; the compiled kernel is used only where int64 cannot overflow.
    Work is split into blocks by deg A, so the result does not depend on the
    engine or on block order.
    """
    if engine not in ("auto", "python", "compiled"):
        raise SearchError(f"unknown engine {engine!r}")
    t = _check_target(target)
    a, b, c = t
    cap = bounds.max_coeff
    found: dict[tuple, Solution] = {}
    examined = 0
    for dA in range(1, bounds.max_deg_C + 1):
        Bs = list(enumerate_palindromic_coeffs(b, dA - 1, cap))
        if not Bs:
            continue
        As = list(enumerate_palindromic_coeffs(a, dA, cap))
        if not As:
            continue
        use_compiled = engine == "compiled" or (
            engine == "auto" and len(As) * len(Bs) > 2000 and compiled_available()
        )
        if use_compiled:
            from ._kernel import int64_safe

            if not int64_safe(dA, cap, c):
                if engine == "compiled":
                    raise SearchError("bounds too large for the int64 kernel")
                use_compiled = False
        block = _compiled_block if use_compiled else _python_block
        for A, B, C in block(As, Bs, c, cap):
            if _accept(A, B, C, bounds):
                found[(A, B, C)] = Solution(Poly(A), Poly(B), Poly(C))
        examined += len(As) * len(Bs)
        if progress:
            progress(examined, len(found))
    sols = sorted(found.values(), key=Solution.sort_key)
    log.debug("search %s: %d candidate pairs, %d solutions", tuple(t), examined, len(sols))
    return SolutionSet(t, bounds, sols, examined)


def brute_force_solutions(target: Sequence[int], bounds: SearchBounds) -> SolutionSet:
    """Unpruned reference search: enumerate C directly, match A^2 + q B^2 by table."""
    t = _check_target(target)
    a, b, c = t
    cap = bounds.max_coeff
    D_max = bounds.max_deg_C
    table: dict[Coeffs, list[tuple[Coeffs, Coeffs]]] = {}
    As = [A for d in range(0, D_max + 1) for A in enumerate_palindromic_coeffs(a, d, cap)]
    Bs = [B for d in range(0, D_max + 1) for B in enumerate_palindromic_coeffs(b, d, cap)]
    for A in As:
        PA = Poly(A)
        for B in Bs:
            S = PA * PA + (Poly(B) * Poly(B)).shift(1)
            table.setdefault(S.coeffs, []).append((A, B))
    found = {}
    examined = 0
    for D in range(1, D_max + 1):
        for mid in _compositions(c - 2, D - 1, cap):
            C = (1, *mid, 1)
            examined += 1
            S = (Poly(C) * Poly(C[::-1])).coeffs
            for A, B in table.get(S, ()):
                Cc = canonical_c(C)
                if _accept(A, B, Cc, bounds):
                    found[(A, B, Cc)] = Solution(Poly(A), Poly(B), Poly(Cc))
    sols = sorted(found.values(), key=Solution.sort_key)
    return SolutionSet(t, bounds, sols, examined)


def is_sound(sol: Solution, target: Sequence[int]) -> bool:
    """verify_pythagoras, conditions 1-3 and the q = 1 specialization."""
    rep = check_conditions(sol.as_triple())
    return (
        verify_pythagoras(sol.A, sol.B, sol.C)
        and rep.conditions_1_to_3
        and tuple(sol.as_triple().classical()) == tuple(target)
    )


def palindromic_sum_is_palindromic(A: Poly, B: Poly) -> bool:
    """Whether A^2 + q B^2 is palindromic (used to test the degree-gap lemma).

    For palindromic A, B with positive coefficients this holds exactly when
    deg A = deg B + 1 or A = B.
    """
    return is_palindromic(A * A + (B * B).shift(1))
