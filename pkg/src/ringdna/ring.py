"""Arithmetic in the chain ring R1 = F2 + uF2 and the ring R = R1 + vR1.

Relations: u^2 = 0, v^2 = v, uv = vu, characteristic 2.

An element of R1 is c0 + u*c1 and an element of R is a + b*v with a, b in
R1.  Every element of R has a 4-bit index (a.c0, a.c1, b.c0, b.c1), most
significant bit first; this index fixes the total order used for every
deterministic listing in the package, and XOR of indices is ring addition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


@dataclass(frozen=True, order=True)
class R1Element:
    """c0 + u*c1 in F2 + uF2."""

    c0: int = 0
    c1: int = 0

    def __post_init__(self):
        if self.c0 not in (0, 1) or self.c1 not in (0, 1):
            raise ValueError(f"R1 coordinates must be bits, got ({self.c0}, {self.c1})")

    @property
    def index(self) -> int:
        return (self.c0 << 1) | self.c1

    @classmethod
    def from_index(cls, i: int) -> "R1Element":
        return R1_ELEMENTS[i]

    def __add__(self, other: "R1Element") -> "R1Element":
        return R1Element(self.c0 ^ other.c0, self.c1 ^ other.c1)

    __sub__ = __add__

    def __mul__(self, other: "R1Element") -> "R1Element":
        # (c0 + u c1)(d0 + u d1) = c0 d0 + u (c0 d1 + c1 d0)
        return R1Element(
            self.c0 & other.c0, (self.c0 & other.c1) ^ (self.c1 & other.c0)
        )

    def is_zero(self) -> bool:
        return not (self.c0 or self.c1)

    def is_unit(self) -> bool:
        return bool(self.c0)

    def __str__(self) -> str:
        return format_element(RElement(self, R1_ZERO))

    def __repr__(self) -> str:
        return f"R1Element({self})"


R1_ELEMENTS = tuple(R1Element(c0, c1) for c0, c1 in product((0, 1), repeat=2))
R1_ZERO, R1_U, R1_ONE, R1_ONE_PLUS_U = (
    R1Element(0, 0),
    R1Element(0, 1),
    R1Element(1, 0),
    R1Element(1, 1),
)


@dataclass(frozen=True)
class RElement:
    """a + b*v in R, with a, b in R1."""

    a: R1Element = R1_ZERO
    b: R1Element = R1_ZERO

    @property
    def index(self) -> int:
        return (self.a.index << 2) | self.b.index

    @classmethod
    def from_index(cls, i: int) -> "RElement":
        return ELEMENTS[i]

    def __lt__(self, other: "RElement") -> bool:
        return self.index < other.index

    def __add__(self, other: "RElement") -> "RElement":
        return ELEMENTS[self.index ^ other.index]

    __sub__ = __add__

    def __mul__(self, other: "RElement") -> "RElement":
        return ELEMENTS[_MUL[self.index][other.index]]

    def is_zero(self) -> bool:
        return self.index == 0

    def is_unit(self) -> bool:
        # a unit iff both CRT components are units of R1
        c1, c2 = crt_split(self)
        return c1.is_unit() and c2.is_unit()

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"RElement({self})"


def _symbolic_mul(x: RElement, y: RElement) -> RElement:
    # (a1 + b1 v)(a2 + b2 v) = a1 a2 + (a1 b2 + a2 b1 + b1 b2) v   using v^2 = v
    return RElement(x.a * y.a, x.a * y.b + y.a * x.b + x.b * y.b)


ELEMENTS = tuple(RElement(a, b) for a in R1_ELEMENTS for b in R1_ELEMENTS)
_MUL = tuple(tuple(_symbolic_mul(x, y).index for y in ELEMENTS) for x in ELEMENTS)

ZERO = RElement(R1_ZERO, R1_ZERO)
ONE = RElement(R1_ONE, R1_ZERO)
U = RElement(R1_U, R1_ZERO)
V = RElement(R1_ZERO, R1_ONE)
UV = RElement(R1_ZERO, R1_U)
ONE_PLUS_V = ONE + V


def embed(x: R1Element) -> RElement:
    """View an R1 element as an element of R (b = 0)."""
    return RElement(x, R1_ZERO)


def mul_r(x: RElement, y: RElement) -> RElement:
    return x * y


def sigma(x: RElement) -> RElement:
    """The automorphism a + bv -> a + (1+v)b, which swaps v and 1+v."""
    return RElement(x.a + x.b, x.b)


def gray_map(x: RElement) -> tuple[R1Element, R1Element]:
    """Gray image (a, a+b) of a + bv."""
    return x.a, x.a + x.b


def gray_inverse(pair: tuple[R1Element, R1Element]) -> RElement:
    first, second = pair
    return RElement(first, first + second)


def complement(x: RElement) -> RElement:
    """Watson-Crick complement lifted to R: x + u."""
    return x + U


def crt_split(x: RElement) -> tuple[R1Element, R1Element]:
    """Return (c1, c2) with x = v*c1 + (1+v)*c2."""
    return x.a + x.b, x.a


def crt_join(c1: R1Element, c2: R1Element) -> RElement:
    return RElement(c2, c1 + c2)


# Text notation: terms in the order 1, u, v, uv joined by "+".
_MONOMIALS = (("1", ONE), ("u", U), ("v", V), ("uv", UV))


def format_element(x: RElement) -> str:
    # basis 1, u, v, uv: x = a.c0 + u a.c1 + v b.c0 + uv b.c1
    bits = (x.a.c0, x.a.c1, x.b.c0, x.b.c1)
    terms = [name for (name, _), bit in zip(_MONOMIALS, bits) if bit]
    return "+".join(terms) if terms else "0"


def parse_element(text: str) -> RElement:
    """Parse notation such as "1+u+uv"; monomials may be reordered or repeated."""
    s = text.replace(" ", "")
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise ValueError("empty ring element")
    total = ZERO
    for term in s.split("+"):
        total = total + _parse_monomial(term, text)
    return total


def _parse_monomial(term: str, context: str) -> RElement:
    if term == "0":
        return ZERO
    value = ONE
    for ch in term:
        if ch == "1":
            continue
        if ch == "u":
            value = value * U
        elif ch == "v":
            value = value * V
        else:
            raise ValueError(f"bad ring element {context!r}")
    if not term:
        raise ValueError(f"bad ring element {context!r}")
    return value


def parse_r1_element(text: str) -> R1Element:
    x = parse_element(text)
    if not x.b.is_zero():
        raise ValueError(f"{text!r} is not an element of F2+uF2")
    return x.a
