"""Dense univariate polynomials over the integers.

Coefficients are stored ascending (index i holds the coefficient of q^i)
with trailing zeros stripped, so the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from itertools import zip_longest
from typing import Iterable, Sequence


class PolyError(ValueError):
    pass


class InexactDivision(PolyError):
    """Raised by exact_div when the divisor does not divide evenly."""

    def __init__(self, message: str, remainder: "Poly"):
        super().__init__(message)
        self.remainder = remainder


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Poly:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = _strip(int(c) for c in coeffs)
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> Poly:
        if k < 0:
            raise PolyError("negative exponent")
        return cls((0,) * k + (c,))

    # -- basic properties --------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.coeffs))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Poly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-a for a in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Poly(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise PolyError("negative power")
        result = Poly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> Poly:
        """Multiply by q**k."""
        if k < 0:
            raise PolyError("shift must be nonnegative")
        if not self.coeffs:
            return self
        return Poly((0,) * k + self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- reversal ----------------------------------------------------------

    def reciprocal(self) -> Poly:
        """q**deg * p(1/q): the coefficient sequence reversed."""
        if not self.coeffs:
            raise PolyError("reciprocal of zero undefined")
        return Poly(reversed(self.coeffs))

    def invert_variable_scaled(self, d: int) -> Poly:
        """q**d * p(1/q), for a formal degree d >= deg p."""
        if not self.coeffs:
            return self
        if d < len(self.coeffs) - 1:
            raise PolyError(f"formal degree {d} is below the degree {self.degree}")
        padded = self.coeffs + (0,) * (d + 1 - len(self.coeffs))
        return Poly(reversed(padded))

    # -- rendering ---------------------------------------------------------

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __str__(self):
        return to_text(self)


def _coerce(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, int):
        return Poly((x,))
    return NotImplemented


ZERO = Poly()
ONE = Poly((1,))
Q = Poly((0, 1))


# Functional surface used across the package.

def add(p: Poly, r: Poly) -> Poly:
    return p + r


def sub(p: Poly, r: Poly) -> Poly:
    return p - r


def mul(p: Poly, r: Poly) -> Poly:
    return p * r


def neg(p: Poly) -> Poly:
    return -p


def shift(p: Poly, k: int) -> Poly:
    return p.shift(k)


def eval_int(p: Poly, x: int) -> int:
    return p(x)


def reciprocal(p: Poly) -> Poly:
    return p.reciprocal()


def invert_variable_scaled(p: Poly, d: int) -> Poly:
    return p.invert_variable_scaled(d)


def is_palindromic(p: Poly) -> bool:
    if not p.coeffs:
        raise PolyError("palindromicity of zero undefined")
    return p.coeffs == p.coeffs[::-1]


def is_monic_both_ends(p: Poly) -> bool:
    return bool(p.coeffs) and p.coeffs[0] == 1 and p.coeffs[-1] == 1


def has_positive_coeffs(p: Poly) -> bool:
    """Every coefficient from q^0 up to the leading term is >= 1."""
    return bool(p.coeffs) and all(c >= 1 for c in p.coeffs)


def is_unimodal(p: Poly | Sequence[int]) -> bool:
    cs = p.coeffs if isinstance(p, Poly) else tuple(p)
    i, n = 0, len(cs)
    while i + 1 < n and cs[i] <= cs[i + 1]:
        i += 1
    while i + 1 < n and cs[i] >= cs[i + 1]:
        i += 1
    return i + 1 >= n


def exact_div(p: Poly, d: Poly) -> Poly:
    """Quotient s with p == d*s; raises InexactDivision otherwise."""
    if not d.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p.coeffs)
    dc = d.coeffs
    lead = dc[-1]
    dd = len(dc) - 1
    if len(rem) < len(dc):
        if rem:
            raise InexactDivision("divisor has higher degree", Poly(rem))
        return Poly()
    quot = [0] * (len(rem) - dd)
    for k in range(len(quot) - 1, -1, -1):
        c, r = divmod(rem[k + dd], lead)
        if r:
            raise InexactDivision(
                f"non-integral quotient coefficient at q^{k}", Poly(rem)
            )
        quot[k] = c
        if c:
            for j, x in enumerate(dc):
                rem[k + j] -= c * x
    remainder = Poly(rem)
    if remainder:
        raise InexactDivision(f"nonzero remainder {to_text(remainder)}", remainder)
    return Poly(quot)


def q_int(n: int) -> Poly:
    """The q-integer 1 + q + ... + q**(n-1)."""
    if n < 1:
        raise PolyError("q-integer needs n >= 1")
    return Poly((1,) * n)


# -- text / JSON forms ----------------------------------------------------

def to_text(p: Poly, var: str = "q") -> str:
    if not p.coeffs:
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def to_json(p: Poly) -> list[str]:
    return [str(c) for c in p.coeffs]


def from_json(data: Sequence[str | int]) -> Poly:
    return Poly(int(c) for c in data)


def parse_coeffs(text: str) -> Poly:
    """Parse a comma-separated ascending coefficient list such as "1,2,1"."""
    text = text.strip().strip("[]")
    if not text:
        return Poly()
    try:
        return Poly(int(tok.strip().strip('"')) for tok in text.split(","))
    except ValueError as exc:
        raise PolyError(f"bad coefficient list {text!r}") from exc
