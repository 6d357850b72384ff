"""Cyclic codes over R1 = F2+uF2 and over R = vR1 + (1+v)R1.

A cyclic code over R1 of length n is the ideal (g + u*p, u*a) of
R1[x]/(x^n - 1) with binary g, p, a satisfying a | g | x^n - 1 and
a | p*(x^n - 1)/g.  Odd lengths always have p = 0 (the principal form
(g, ua) = (g + ua)).  A cyclic code over R is a pair of such codes,
C = v*C1 + (1+v)*C2.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache

from .factor import divisors_xn_minus_1
from .poly import BinaryPoly, R1Poly, RPoly, parse_binary
from .ring import ONE, ONE_PLUS_V, R1_ONE, R1_U, U, UV, V, R1Element, crt_split
from .words import (
    DEFAULT_BOUND,
    CodeWords,
    EnumerationBoundError,
    echelon,
    pack_r,
    pack_r1,
    product_r,
    rank,
    rotate_packed,
    span_array,
)

log = logging.getLogger(__name__)


class InvalidSpecError(ValueError):
    pass


@dataclass(frozen=True)
class R1CodeSpec:
    """Generator data (g, p, a) of the cyclic code (g + up, ua) over R1."""

    n: int
    g: BinaryPoly
    p: BinaryPoly = field(default_factory=BinaryPoly)
    a: BinaryPoly | None = None

    def __post_init__(self):
        if self.a is None:
            object.__setattr__(self, "a", self.g)

    @classmethod
    def parse(cls, n: int, g: str, p: str = "0", a: str | None = None) -> "R1CodeSpec":
        gp = parse_binary(g)
        return cls(n, gp, parse_binary(p), parse_binary(a) if a is not None else gp)

    @property
    def one_generator(self) -> bool:
        return self.a == self.g

    @property
    def g_hat(self) -> BinaryPoly:
        return BinaryPoly.xn_minus_1(self.n) // self.g

    @property
    def p_canonical(self) -> BinaryPoly:
        """p reduced modulo a; generates the same code."""
        return self.p % self.a if self.a else self.p

    @property
    def generator(self) -> R1Poly:
        return R1Poly.from_binary(self.g, self.p)

    def to_json(self) -> dict:
        return {"g": str(self.g), "p": str(self.p), "a": str(self.a)}

    def __str__(self) -> str:
        gen = f"({self.g})+u({self.p})" if self.p else f"({self.g})"
        return gen if self.one_generator else f"<{gen}, u({self.a})>"


@dataclass(frozen=True)
class RCodeSpec:
    """C = v*C1 + (1+v)*C2 for cyclic codes C1, C2 over R1 of length n."""

    n: int
    c1: R1CodeSpec
    c2: R1CodeSpec

    def __post_init__(self):
        if self.c1.n != self.n or self.c2.n != self.n:
            raise InvalidSpecError(
                f"component lengths {self.c1.n}, {self.c2.n} differ from n={self.n}"
            )

    def to_json(self) -> dict:
        return {"n": self.n, "c1": self.c1.to_json(), "c2": self.c2.to_json()}

    @classmethod
    def from_json(cls, doc: dict) -> "RCodeSpec":
        try:
            n = int(doc["n"])
            comps = []
            for key in ("c1", "c2"):
                c = doc[key]
                comps.append(R1CodeSpec.parse(n, c["g"], c.get("p", "0"), c.get("a")))
        except (KeyError, TypeError) as exc:
            raise InvalidSpecError(f"malformed code spec: missing {exc}") from exc
        except ValueError as exc:
            raise InvalidSpecError(f"malformed code spec: {exc}") from exc
        return cls(n, *comps)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ValidationReport:
    form: str
    checks: list[Check]
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "form": self.form,
            "ok": self.ok,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
            "warnings": list(self.warnings),
        }


def _divides(d: BinaryPoly, f: BinaryPoly) -> bool:
    return bool(d) and d.divides(f)


def divmod_r1(num: R1Poly, den: R1Poly) -> tuple[R1Poly, R1Poly]:
    """Long division over R1; the leading coefficient of den must be a unit."""
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    lead = den.coeffs[-1]
    if not lead.is_unit():
        raise InvalidSpecError(f"leading coefficient of {den} is not a unit")
    inv = lead  # both units of R1 are involutions: (1+u)^2 = 1
    rem = list(num.coeffs)
    quot = [R1Element()] * max(0, len(rem) - len(den.coeffs) + 1)
    d = den.degree
    for k in range(len(rem) - 1, d - 1, -1):
        c = rem[k] * inv
        if c.is_zero():
            continue
        quot[k - d] = c
        for j, b in enumerate(den.coeffs):
            rem[k - d + j] = rem[k - d + j] + c * b
    return R1Poly(quot), R1Poly(rem)


@lru_cache(maxsize=4096)
def validate_r1_spec(spec: R1CodeSpec) -> ValidationReport:
    """Divisibility and degree conditions on (g, p, a); cached per spec."""
    n, g, p, a = spec.n, spec.g, spec.p, spec.a
    xn1 = BinaryPoly.xn_minus_1(n) if n >= 1 else BinaryPoly()
    checks = [Check("length n >= 1", n >= 1, f"n={n}")]
    if n < 1:
        return ValidationReport("invalid", checks)
    odd = n % 2 == 1
    if odd:
        form = "odd n: principal (g, ua) = (g+ua)"
    elif spec.one_generator:
        form = "even n: one generator (g+up)"
    else:
        form = "even n: two generators (g+up, ua)"
    warnings: list[str] = []
    checks.append(Check("g | x^n-1", _divides(g, xn1), f"g={g}"))
    checks.append(Check("a | g", _divides(a, g), f"a={a}, g={g}"))
    if p and a and p.degree >= a.degree:
        if p.degree == a.degree:
            warnings.append(
                f"deg p = deg a = {a.degree}: accepted, p is reduced mod a to the canonical form"
            )
            checks.append(Check("deg p <= deg a", True, f"deg p={p.degree}"))
        else:
            checks.append(Check("deg p < deg a", False, f"deg p={p.degree}, deg a={a.degree}"))
    else:
        checks.append(Check("deg p < deg a", True, f"deg p={p.degree}, deg a={a.degree}"))
    if checks[1].passed:
        ghat = spec.g_hat
        checks.append(Check("a | p*g_hat", _divides(a, p * ghat), f"g_hat={ghat}"))
        if not odd and spec.one_generator:
            gen = spec.generator
            _, rem = divmod_r1(R1Poly.from_binary(xn1), gen)
            checks.append(Check("(g+up) | x^n-1 over R1", not rem, f"remainder {rem}"))
    if odd and spec.p_canonical:
        checks.append(Check("odd n has p = 0", False, f"p={p}"))
    for w in warnings:
        log.warning("%s", w)
    return ValidationReport(form, checks, warnings)


def validate_r_spec(spec: RCodeSpec) -> tuple[ValidationReport, ValidationReport]:
    return validate_r1_spec(spec.c1), validate_r1_spec(spec.c2)


def _require_valid(spec) -> None:
    specs = (spec.c1, spec.c2) if isinstance(spec, RCodeSpec) else (spec,)
    for s in specs:
        report = validate_r1_spec(s)
        if not report.ok:
            reasons = "; ".join(f"{c.name} ({c.detail})" for c in report.failures())
            raise InvalidSpecError(f"invalid code spec {s}: {reasons}")


@dataclass(frozen=True)
class GeneratingSet:
    """Ordered polynomials spanning a code as an F2-space."""

    n: int
    ring: str
    polys: tuple

    def packed(self) -> list[int]:
        pk = pack_r if self.ring == "R" else pack_r1
        return [pk(f.word(self.n)) for f in self.polys]

    def __len__(self) -> int:
        return len(self.polys)

    def is_independent(self) -> bool:
        return rank(self.packed()) == len(self.polys)

    def span(self, bound: int = DEFAULT_BOUND) -> CodeWords:
        return CodeWords(span_array(echelon(self.packed()), self.n, self.ring, bound), self.n, self.ring)


def r1_basis(spec: R1CodeSpec) -> GeneratingSet:
    """F2-basis of (g + up, ua): shifts of g+up, of ug and (when a != g) of ua."""
    _require_valid(spec)
    n, g, a = spec.n, spec.g, spec.a
    p = spec.p_canonical
    gen = R1Poly.from_binary(g, p)
    ug = R1Poly.from_binary(BinaryPoly(), g)
    ua = R1Poly.from_binary(BinaryPoly(), a)
    free = n - g.degree
    polys = [gen.shift(i) for i in range(free)]
    polys += [ug.shift(i) for i in range(free)]
    if not spec.one_generator:
        polys += [ua.shift(i) for i in range(g.degree - a.degree)]
    return GeneratingSet(n, "R1", tuple(polys))


def r1_rank(spec: R1CodeSpec) -> int:
    """Module rank: n - deg g for the free case a = g, n - deg a otherwise."""
    _require_valid(spec)
    return spec.n - (spec.g.degree if spec.one_generator else spec.a.degree)


def code_size_log2(spec) -> int:
    """log2 |C| from basis cardinalities."""
    if isinstance(spec, RCodeSpec):
        return code_size_log2(spec.c1) + code_size_log2(spec.c2)
    _require_valid(spec)
    return 2 * spec.n - spec.g.degree - spec.a.degree


def enumerate_code(spec, bound: int = DEFAULT_BOUND) -> CodeWords:
    """All codewords of an R1CodeSpec or RCodeSpec."""
    log2 = code_size_log2(spec)
    if (1 << log2) > bound:
        raise EnumerationBoundError(f"code has 2^{log2} words, above the enumeration bound {bound}")
    if isinstance(spec, RCodeSpec):
        return product_r(enumerate_code(spec.c1, bound), enumerate_code(spec.c2, bound), bound)
    return r1_basis(spec).span(bound)


def _r1_member(spec: R1CodeSpec, w0: BinaryPoly, w1: BinaryPoly) -> bool:
    # w0 + u w1 = (g+up)A0 + u(aB) mod x^n-1  iff  g | w0 and a | w1 + p*(w0/g)
    q, r = divmod(w0, spec.g)
    if r:
        return False
    residue = (w1 + spec.p * q).reduce_mod_xn(spec.n)
    return spec.a.divides(residue)


def contains(spec, word) -> bool:
    """Membership of a word (sequence of ring elements) by polynomial division."""
    if len(word) != spec.n:
        raise ValueError(f"word length {len(word)} differs from code length {spec.n}")
    _require_valid(spec)
    if isinstance(spec, RCodeSpec):
        parts = [crt_split(c) for c in word]
        return _contains_r1(spec.c1, [x for x, _ in parts]) and _contains_r1(
            spec.c2, [y for _, y in parts]
        )
    return _contains_r1(spec, list(word))


def _contains_r1(spec: R1CodeSpec, word) -> bool:
    w0 = BinaryPoly.from_coeffs(c.c0 for c in word)
    w1 = BinaryPoly.from_coeffs(c.c1 for c in word)
    return _r1_member(spec, w0, w1)


def minimal_generating_set_r(spec: RCodeSpec) -> GeneratingSet:
    """v*Pi + (1+v)*Omega from the component bases."""
    pi = r1_basis(spec.c1).polys
    omega = r1_basis(spec.c2).polys
    polys = [RPoly.from_r1(f).scale(V) for f in pi]
    polys += [RPoly.from_r1(f).scale(ONE_PLUS_V) for f in omega]
    return GeneratingSet(spec.n, "R", tuple(polys))


def ideal_words(n: int, generators, bound: int = DEFAULT_BOUND) -> CodeWords:
    """The ideal generated by ``generators`` in (ring)[x]/(x^n-1), by closure.

    Spans {s * x^i * f} over F2 with s running over an F2-basis of the
    coefficient ring; independent of the structure theorems.
    """
    gens = list(generators)
    if gens and isinstance(gens[0], R1Poly):
        scalars, pk, ring = (R1Poly([R1_ONE]), R1Poly([R1_U])), pack_r1, "R1"
    else:
        scalars = tuple(RPoly([s]) for s in (ONE, U, V, UV))
        pk, ring = pack_r, "R"
    vectors = []
    for f in gens:
        for s in scalars:
            h = s * f
            for i in range(n):
                vectors.append(pk(h.shift(i).word(n)))
    basis = echelon(vectors)
    return CodeWords(span_array(basis, n, ring, bound), n, ring)


def ideal_of_spec(spec, bound: int = DEFAULT_BOUND) -> CodeWords:
    """Closure oracle for (g+up, ua) or its R counterpart."""
    if isinstance(spec, RCodeSpec):
        return product_r(ideal_of_spec(spec.c1, bound), ideal_of_spec(spec.c2, bound), bound)
    gens = [spec.generator, R1Poly.from_binary(BinaryPoly(), spec.a)]
    return ideal_words(spec.n, gens, bound)


def cyclic_closure_check(words: CodeWords) -> bool:
    """True iff the set is closed under the cyclic shift and under addition."""
    if len(words) == 0:
        return False
    shifted = rotate_packed(words.packed, words.n, words.ring)
    if not bool(words.isin(shifted).all()):
        return False
    # a set containing 0 is additively closed iff it has 2^rank elements
    if not words.contains_packed(0):
        return False
    return len(words) == 1 << rank(int(x) for x in words.packed)


def all_r1_specs(n: int) -> list[R1CodeSpec]:
    """Every valid canonical (g, p, a) for length n (deg p < deg a)."""
    divs = divisors_xn_minus_1(n)
    out = []
    for g in divs:
        for a in divs:
            if not a.divides(g):
                continue
            ghat = BinaryPoly.xn_minus_1(n) // g
            for pbits in range(1 << max(0, a.degree)):
                p = BinaryPoly(pbits)
                if a.divides(p * ghat):
                    spec = R1CodeSpec(n, g, p, a)
                    if validate_r1_spec(spec).ok:
                        out.append(spec)
    return out
