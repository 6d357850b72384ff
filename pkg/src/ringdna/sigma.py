"""The sigma-set L(f) generator construction and its DNA codes.

With f = v*f1 + (1+v)*f2 and m = min(n - deg f1, n - deg f2), the generators
are E_i = x^i f and F_i = x^i sigma(h) for 0 <= i < m, where h pads the
lower-degree component so both reach degree max(deg f1, deg f2).  The code is
the R-module spanned by the generators, not the ideal (f).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .codes import InvalidSpecError, R1CodeSpec, RCodeSpec, divmod_r1, ideal_words, validate_r1_spec
from .constraints import contains_all_u
from .dna import phi
from .poly import BinaryPoly, R1Poly, RPoly, parse_r1poly
from .ring import ELEMENTS, ONE, ONE_PLUS_V, U, UV, V, RElement, sigma
from .words import (
    DEFAULT_BOUND,
    CodeWords,
    complement_packed,
    echelon,
    pack_r,
    reverse_packed,
    sigma_packed,
    span_array,
)


def _divides_xn_minus_1(f: R1Poly, n: int) -> bool:
    if not f or not f.coeffs[-1].is_unit():
        return False
    _, rem = divmod_r1(R1Poly.from_binary(BinaryPoly.xn_minus_1(n)), f)
    return not rem


@dataclass(frozen=True)
class SigmaSetSpec:
    n: int
    f1: R1Poly
    f2: R1Poly
    augment_complement: bool = False

    @classmethod
    def parse(cls, n: int, f1: str, f2: str, augment_complement: bool = False) -> "SigmaSetSpec":
        return cls(n, parse_r1poly(f1), parse_r1poly(f2), augment_complement)

    @property
    def t1(self) -> int:
        return self.f1.degree

    @property
    def t2(self) -> int:
        return self.f2.degree

    @property
    def m(self) -> int:
        return min(self.n - self.t1, self.n - self.t2)

    @property
    def f(self) -> RPoly:
        return RPoly.from_r1(self.f1).scale(V) + RPoly.from_r1(self.f2).scale(ONE_PLUS_V)

    @property
    def h(self) -> RPoly:
        f1 = RPoly.from_r1(self.f1)
        f2 = RPoly.from_r1(self.f2)
        if self.t2 >= self.t1:
            return f1.shift(self.t2 - self.t1).scale(V) + f2.scale(ONE_PLUS_V)
        return f1.scale(V) + f2.shift(self.t1 - self.t2).scale(ONE_PLUS_V)

    @property
    def sigma_h(self) -> RPoly:
        return self.h.map_coeffs(sigma)

    def validate(self) -> None:
        for name, fi in (("f1", self.f1), ("f2", self.f2)):
            if not fi:
                raise InvalidSpecError(f"{name} is zero")
            if not _divides_xn_minus_1(fi, self.n):
                raise InvalidSpecError(f"{name}={fi} does not divide x^{self.n}-1 over F2+uF2")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "f1": str(self.f1),
            "f2": str(self.f2),
            "augment_complement": self.augment_complement,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "SigmaSetSpec":
        try:
            return cls.parse(int(doc["n"]), doc["f1"], doc["f2"], bool(doc.get("augment_complement", False)))
        except KeyError as exc:
            raise InvalidSpecError(f"malformed sigma-set spec: missing {exc}") from exc
        except ValueError as exc:
            raise InvalidSpecError(f"malformed sigma-set spec: {exc}") from exc


def build_sigma_set(spec: SigmaSetSpec) -> list[tuple[RElement, ...]]:
    """E_0..E_{m-1}, F_0..F_{m-1} as length-n words, then (u,...,u) if augmented."""
    spec.validate()
    n, m = spec.n, spec.m
    es = [spec.f.shift(i).word(n) for i in range(m)]
    fs = [spec.sigma_h.shift(i).word(n) for i in range(m)]
    out = es + fs
    if spec.augment_complement:
        out.append((U,) * n)
    return out


def generator_matrix(spec: SigmaSetSpec) -> list[tuple[RElement, ...]]:
    """Rows E_0, F_0, E_1, F_1, ... (complement row last when augmented)."""
    gens = build_sigma_set(spec)
    m = spec.m
    rows = []
    for i in range(m):
        rows += [gens[i], gens[m + i]]
    rows += gens[2 * m :]
    return rows


def format_matrix(rows: Sequence[Sequence[RElement]]) -> str:
    cells = [[str(c) for c in row] for row in rows]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


_R_SCALARS = (ONE, U, V, UV)


def span_basis(spec: SigmaSetSpec) -> list[int]:
    """Echelon F2 basis of the R-module spanned by the generators."""
    vectors = []
    for g in build_sigma_set(spec):
        for s in _R_SCALARS:
            vectors.append(pack_r(tuple(s * c for c in g)))
    return echelon(vectors)


def span_size_log2(spec: SigmaSetSpec) -> int:
    return len(span_basis(spec))


def rows_independent(spec: SigmaSetSpec) -> bool:
    """True iff the span has 16^(number of generators) elements."""
    return span_size_log2(spec) == 4 * len(build_sigma_set(spec))


def span_enumerate(spec: SigmaSetSpec, bound: int = DEFAULT_BOUND) -> CodeWords:
    """All R-linear combinations of the generators, deduplicated."""
    return CodeWords(span_array(span_basis(spec), spec.n, "R", bound), spec.n, "R")


def combine(spec: SigmaSetSpec, alpha: Sequence[RElement], beta: Sequence[RElement]):
    """sum alpha_i E_i + sum beta_i F_i."""
    m = spec.m
    if len(alpha) != m or len(beta) != m:
        raise ValueError(f"need {m} coefficients for each of alpha and beta")
    gens = build_sigma_set(spec)
    word = [ELEMENTS[0]] * spec.n
    for coef, g in zip(list(alpha) + list(beta), gens[: 2 * m]):
        word = [w + coef * c for w, c in zip(word, g)]
    return tuple(word)


def sigma_transformed(spec: SigmaSetSpec, alpha, beta):
    """sum sigma(alpha_i) F_{m-1-i} + sum sigma(beta_i) E_{m-1-i}."""
    m = spec.m
    new_alpha = [sigma(beta[m - 1 - i]) for i in range(m)]
    new_beta = [sigma(alpha[m - 1 - i]) for i in range(m)]
    return combine(spec, new_alpha, new_beta)


def reversibility_identity_check(spec: SigmaSetSpec, alpha, beta) -> bool:
    """phi(sum a_i E_i + sum b_i F_i) reversed equals phi of the sigma-transformed combination."""
    left = phi(combine(spec, alpha, beta))[::-1]
    right = phi(sigma_transformed(spec, alpha, beta))
    return left == right


def phi_reverse_packed(arr: np.ndarray, n: int) -> np.ndarray:
    """Packed words whose phi-image is the reversal of phi of the input."""
    return sigma_packed(reverse_packed(arr, n, "R"), n)


def phi_image_reverse_closed(words: CodeWords) -> tuple[bool, tuple | None]:
    """Exhaustive check that reversing any phi-image gives another phi-image."""
    image = phi_reverse_packed(words.packed, words.n)
    present = words.isin(image)
    if bool(present.all()):
        return True, None
    return False, words.unpack(words.least(words.packed[~present]))


def phi_image_rc_closed(words: CodeWords) -> tuple[bool, tuple | None]:
    """Exhaustive check of closure of the phi-image under the DNA reverse-complement."""
    # complementing every base of a phi-image adds u to every coordinate
    image = complement_packed(phi_reverse_packed(words.packed, words.n), words.n, "R")
    present = words.isin(image)
    if bool(present.all()):
        return True, None
    return False, words.unpack(words.least(words.packed[~present]))


def ideal_of_f(spec: SigmaSetSpec, bound: int = DEFAULT_BOUND) -> CodeWords:
    """The cyclic code (f) generated as an ideal, for comparison with the span."""
    return ideal_words(spec.n, [spec.f], bound)


def span_equals_ideal(spec: SigmaSetSpec) -> bool:
    """Compare the span with the ideal (f) via F2 bases, without enumeration."""
    span = span_basis(spec)
    vectors = []
    for s in _R_SCALARS:
        h = RPoly([s]) * spec.f
        for i in range(spec.n):
            vectors.append(pack_r(h.shift(i).word(spec.n)))
    ideal = echelon(vectors)
    return span == ideal


@dataclass
class IdealComplementResult:
    spec: RCodeSpec
    f: RPoly
    x_minus_1_divides: bool
    rc_claimed: bool
    contains_all_u: bool

    def to_json(self) -> dict:
        return {
            "code": self.spec.to_json(),
            "f": str(self.f),
            "x-1 divides f": self.x_minus_1_divides,
            "reverse-complement claimed": self.rc_claimed,
            "contains (u,...,u)": self.contains_all_u,
        }


def ideal_complement_construct(f1, n: int) -> IdealComplementResult:
    """The cyclic code (f) with f = v*f1 + (1+v)*f1 = f1 and its complement claim.

    The reverse-complement claim is made only when x - 1 does not divide f; the
    actual membership of (u,...,u) is reported alongside.
    """
    if isinstance(f1, BinaryPoly):
        f1 = R1Poly.from_binary(f1)
    g, p = f1.binary_parts()
    comp = R1CodeSpec(n, g, p, g)
    report = validate_r1_spec(comp)
    if not report.ok:
        reasons = "; ".join(f"{c.name} ({c.detail})" for c in report.failures())
        raise InvalidSpecError(f"f1={f1} does not give a cyclic code of length {n}: {reasons}")
    spec = RCodeSpec(n, comp, comp)
    f = RPoly.from_r1(f1).scale(V) + RPoly.from_r1(f1).scale(ONE_PLUS_V)
    divides = f.reduce_mod_xn(n).evaluate_at_one().is_zero()
    return IdealComplementResult(spec, f, divides, not divides, contains_all_u(spec))
