"""Polynomials over F2, R1 = F2+uF2 and R = F2+uF2+vF2+uvF2.

Binary polynomials are stored as integer bitmasks (bit i is the coefficient
of x^i).  Polynomials over R1 and R are normalized coefficient tuples with
index i holding the coefficient of x^i; the zero polynomial is the empty
tuple and has degree -1.

Text form: terms highest degree first joined by "+", e.g. "x^6+x^3+1",
"vx^6+uvx^5+x^4+(u+uv)x^3".  Compound coefficients are parenthesized.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .ring import (
    ONE,
    R1_ZERO,
    ZERO,
    R1Element,
    RElement,
    embed,
    format_element,
    parse_element,
)


class BinaryPoly:
    """Polynomial over F2 backed by an int bitmask."""

    __slots__ = ("bits",)

    def __init__(self, bits: int = 0):
        if bits < 0:
            raise ValueError("bitmask must be nonnegative")
        self.bits = bits

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "BinaryPoly":
        bits = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                bits |= 1 << i
        return cls(bits)

    @classmethod
    def monomial(cls, k: int) -> "BinaryPoly":
        return cls(1 << k)

    @classmethod
    def xn_minus_1(cls, n: int) -> "BinaryPoly":
        return cls((1 << n) | 1)

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.degree + 1))

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryPoly) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(("BinaryPoly", self.bits))

    def __lt__(self, other: "BinaryPoly") -> bool:
        return (self.degree, self.bits) < (other.degree, other.bits)

    def __add__(self, other: "BinaryPoly") -> "BinaryPoly":
        return BinaryPoly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "BinaryPoly") -> "BinaryPoly":
        return BinaryPoly(clmul(self.bits, other.bits))

    def __pow__(self, k: int) -> "BinaryPoly":
        result = BinaryPoly(1)
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other: "BinaryPoly"):
        return divmod_f2(self, other)

    def __floordiv__(self, other: "BinaryPoly") -> "BinaryPoly":
        return divmod_f2(self, other)[0]

    def __mod__(self, other: "BinaryPoly") -> "BinaryPoly":
        return divmod_f2(self, other)[1]

    def divides(self, other: "BinaryPoly") -> bool:
        """True iff self | other."""
        return not (other % self)

    def shift(self, k: int) -> "BinaryPoly":
        return BinaryPoly(self.bits << k)

    def evaluate_at_one(self) -> int:
        return self.bits.bit_count() & 1

    def reduce_mod_xn(self, n: int) -> "BinaryPoly":
        return BinaryPoly(fold_mod_xn(self.bits, n))

    def __str__(self) -> str:
        return format_poly([ONE if c else ZERO for c in self.coeffs])

    def __repr__(self) -> str:
        return f"BinaryPoly({self})"


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bitmasks."""
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def fold_mod_xn(bits: int, n: int) -> int:
    """Reduce a bitmask polynomial modulo x^n - 1."""
    mask = (1 << n) - 1
    out = 0
    while bits:
        out ^= bits & mask
        bits >>= n
    return out


def divmod_f2(num: BinaryPoly, den: BinaryPoly) -> tuple[BinaryPoly, BinaryPoly]:
    """Long division over F2: num = quot*den + rem with deg rem < deg den."""
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    a, b = num.bits, den.bits
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        s = a.bit_length() - db
        q |= 1 << s
        a ^= b << s
    return BinaryPoly(q), BinaryPoly(a)


def mul_mod_xn_f2(f: BinaryPoly, g: BinaryPoly, n: int) -> BinaryPoly:
    if n < 1:
        raise ValueError("length n must be at least 1")
    return BinaryPoly(fold_mod_xn(clmul(f.bits, g.bits), n))


class RingPoly:
    """Polynomial with coefficients in R1 or R; see R1Poly and RPoly."""

    __slots__ = ("coeffs",)
    element_type: type = RElement
    zero_element = ZERO

    def __init__(self, coeffs: Sequence = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, self.element_type):
                raise TypeError(f"{type(self).__name__} coefficient {c!r} has wrong type")
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.coeffs))

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.zero_element

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return type(self)([self.coeff(i) + other.coeff(i) for i in range(n)])

    __sub__ = __add__

    def __mul__(self, other):
        if not self or not other:
            return type(self)()
        out = [self.zero_element] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return type(self)(out)

    def scale(self, c):
        return type(self)([c * a for a in self.coeffs])

    def shift(self, k: int):
        return type(self)([self.zero_element] * k + list(self.coeffs))

    def reduce_mod_xn(self, n: int):
        out = [self.zero_element] * n
        for i, c in enumerate(self.coeffs):
            out[i % n] = out[i % n] + c
        return type(self)(out)

    def word(self, n: int) -> tuple:
        """Length-n coefficient vector of self mod x^n - 1."""
        reduced = self.reduce_mod_xn(n)
        return tuple(reduced.coeff(i) for i in range(n))

    def evaluate_at_one(self):
        total = self.zero_element
        for c in self.coeffs:
            total = total + c
        return total

    def map_coeffs(self, fn):
        return type(self)([fn(c) for c in self.coeffs])

    def __str__(self) -> str:
        return format_poly([_as_r(c) for c in self.coeffs])

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


class R1Poly(RingPoly):
    __slots__ = ()
    element_type = R1Element
    zero_element = R1_ZERO

    @classmethod
    def from_binary(cls, g: BinaryPoly, p: BinaryPoly | None = None) -> "R1Poly":
        """g + u*p for binary g, p."""
        p = p or BinaryPoly()
        n = max(g.degree, p.degree) + 1
        return cls([R1Element((g.bits >> i) & 1, (p.bits >> i) & 1) for i in range(n)])

    def binary_parts(self) -> tuple[BinaryPoly, BinaryPoly]:
        """Return (g, p) with self = g + u*p."""
        g = BinaryPoly.from_coeffs(c.c0 for c in self.coeffs)
        p = BinaryPoly.from_coeffs(c.c1 for c in self.coeffs)
        return g, p


class RPoly(RingPoly):
    __slots__ = ()
    element_type = RElement
    zero_element = ZERO

    @classmethod
    def from_r1(cls, f: R1Poly) -> "RPoly":
        return cls([embed(c) for c in f.coeffs])

    @classmethod
    def from_binary(cls, f: BinaryPoly) -> "RPoly":
        return cls([ONE if c else ZERO for c in f.coeffs])


def _as_r(c) -> RElement:
    return embed(c) if isinstance(c, R1Element) else c


def poly_from_word(word: Sequence):
    """Wrap a coefficient vector (R or R1 entries) as a polynomial."""
    if word and isinstance(word[0], R1Element):
        return R1Poly(word)
    return RPoly(word)


def mul_mod_xn(f, g, n: int):
    """Product in the quotient ring modulo x^n - 1 (same type as f)."""
    if n < 1:
        raise ValueError("length n must be at least 1")
    if isinstance(f, BinaryPoly):
        return mul_mod_xn_f2(f, g, n)
    return (f * g).reduce_mod_xn(n)


def reciprocal(f, degree: int | None = None):
    """f*(x) = x^d f(1/x) with d = deg(f) unless a larger nominal degree is given.

    A nominal degree keeps the bookkeeping exact when a product or sum has
    lost its leading term (zero divisors, cancellation).
    """
    if not f:
        raise ValueError("reciprocal of zero undefined")
    if degree is not None and degree < f.degree:
        raise ValueError(f"nominal degree {degree} is below deg f = {f.degree}")
    pad = 0 if degree is None else degree - f.degree
    if isinstance(f, BinaryPoly):
        return BinaryPoly.from_coeffs(reversed(f.coeffs)).shift(pad)
    return type(f)(list(reversed(f.coeffs))).shift(pad)


def is_self_reciprocal(f) -> bool:
    return reciprocal(f) == f


def format_poly(coeffs: Sequence[RElement]) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c.is_zero():
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        name = format_element(c)
        if "+" in name:
            name = f"({name})"
        elif name == "1" and mono:
            name = ""
        terms.append(name + mono)
    return "+".join(terms) if terms else "0"


_TERM = re.compile(r"^(?P<coef>\([^()]*\)|[1uv]*)(?P<x>x(?:\^(?P<exp>\d+))?)?$")


def _split_terms(text: str) -> list[str]:
    terms, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {text!r}")
        if ch == "+" and depth == 0:
            terms.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    terms.append("".join(cur))
    return terms


def parse_rpoly(text: str) -> RPoly:
    """Parse polynomial text with coefficients in R.  "-" is read as "+"."""
    s = text.replace(" ", "").replace("*", "").replace("-", "+")
    if not s:
        raise ValueError("empty polynomial")
    if s == "0":
        return RPoly()
    coeffs: dict[int, RElement] = {}
    for term in _split_terms(s):
        m = _TERM.match(term)
        if not term or not m or (not m.group("coef") and not m.group("x")):
            raise ValueError(f"bad polynomial term {term!r} in {text!r}")
        coef_text = m.group("coef")
        coef = parse_element(coef_text) if coef_text else ONE
        if m.group("x"):
            k = int(m.group("exp")) if m.group("exp") else 1
        else:
            k = 0
        coeffs[k] = coeffs.get(k, ZERO) + coef
    n = max(coeffs) + 1
    return RPoly([coeffs.get(i, ZERO) for i in range(n)])


def parse_r1poly(text: str) -> R1Poly:
    f = parse_rpoly(text)
    if any(not c.b.is_zero() for c in f.coeffs):
        raise ValueError(f"{text!r} has coefficients outside F2+uF2")
    return R1Poly([c.a for c in f.coeffs])


def parse_binary(text: str) -> BinaryPoly:
    f = parse_rpoly(text)
    if any(c not in (ZERO, ONE) for c in f.coeffs):
        raise ValueError(f"{text!r} is not a binary polynomial")
    return BinaryPoly.from_coeffs(1 if c == ONE else 0 for c in f.coeffs)
