import random
from itertools import product

import numpy as np
import pytest

from ringdna.codes import (
    InvalidSpecError,
    R1CodeSpec,
    RCodeSpec,
    all_r1_specs,
    code_size_log2,
    contains,
    cyclic_closure_check,
    enumerate_code,
    ideal_of_spec,
    minimal_generating_set_r,
    r1_basis,
    validate_r1_spec,
)
from ringdna.factor import factor_xn_minus_1
from ringdna.poly import BinaryPoly, parse_rpoly
from ringdna.ring import ELEMENTS, R1_ELEMENTS, ZERO
from ringdna.words import CodeWords, EnumerationBoundError, product_r, unpack_r1

REV8 = RCodeSpec(
    8,
    R1CodeSpec.parse(8, "x^6+x^4+x^2+1", "x^5+x"),
    R1CodeSpec.parse(8, "x^4+1", "x^3+x"),
)
CODE3 = RCodeSpec(3, R1CodeSpec.parse(3, "x^2+x+1"), R1CodeSpec.parse(3, "x^2+x+1"))


def zero_spec(n):
    xn = BinaryPoly.xn_minus_1(n)
    return R1CodeSpec(n, xn, BinaryPoly(), xn)


# naive ideal closure over R1 with words as tuples of (c0, c1) bit pairs


def _r1_mul(a, b):
    return (a[0] & b[0], (a[0] & b[1]) ^ (a[1] & b[0]))


def _word_add(x, y):
    return tuple((a[0] ^ b[0], a[1] ^ b[1]) for a, b in zip(x, y))


def naive_ideal(n, gens):
    """Additive closure of {s x^i g}; generators are coefficient lists of bit pairs."""
    vectors = []
    for g in gens:
        w = [(0, 0)] * n
        for i, c in enumerate(g):
            w[i % n] = (w[i % n][0] ^ c[0], w[i % n][1] ^ c[1])
        for shift in range(n):
            rot = tuple(w[(j - shift) % n] for j in range(n))
            for s in ((1, 0), (0, 1)):
                vectors.append(tuple(_r1_mul(s, c) for c in rot))
    span = {tuple([(0, 0)] * n)}
    for v in vectors:
        if v not in span:
            span |= {_word_add(s, v) for s in span}
    return span


def r1_words_as_pairs(words: CodeWords):
    return {tuple((c.c0, c.c1) for c in w) for w in words}


def spec_generators(spec: R1CodeSpec):
    g, p, a = spec.g.coeffs, spec.p.coeffs, spec.a.coeffs
    k = max(len(g), len(p))
    gen = [((g[i] if i < len(g) else 0), (p[i] if i < len(p) else 0)) for i in range(k)]
    ua = [(0, c) for c in a]
    return [gen, ua]


def test_validation_examples():
    assert validate_r1_spec(REV8.c1).ok
    assert validate_r1_spec(CODE3.c1).ok
    bad = validate_r1_spec(R1CodeSpec.parse(4, "x+1", "0", "x^2+1"))
    assert not bad.ok
    assert [c.name for c in bad.failures()] == ["a | g"]


def test_validation_failures():
    assert not validate_r1_spec(R1CodeSpec.parse(5, "x^2+1")).ok
    assert not validate_r1_spec(R1CodeSpec.parse(4, "x^2+1", "x^3", "x+1")).ok
    # odd length forces p = 0
    assert not validate_r1_spec(R1CodeSpec.parse(3, "x+1", "1", "x+1")).ok
    assert not validate_r1_spec(R1CodeSpec(0, BinaryPoly(1))).ok


def test_deg_p_equal_deg_a_warns(caplog):
    spec = R1CodeSpec.parse(4, "x^2+1", "x+1", "x+1")
    report = validate_r1_spec(spec)
    assert report.ok and report.warnings
    assert spec.p_canonical == BinaryPoly()


def test_invalid_spec_raises():
    with pytest.raises(InvalidSpecError):
        enumerate_code(R1CodeSpec.parse(5, "x^2+1"))
    with pytest.raises(InvalidSpecError):
        RCodeSpec(4, R1CodeSpec.parse(4, "x+1"), R1CodeSpec.parse(5, "x+1"))


def test_r1_basis_examples():
    b = r1_basis(CODE3.c1)
    assert [str(f) for f in b.polys] == ["x^2+x+1", "ux^2+ux+u"]
    assert len(enumerate_code(CODE3.c1)) == 4
    b = r1_basis(REV8.c1)
    assert len(b) == 4 and b.is_independent()
    assert len(enumerate_code(REV8.c1)) == 16
    assert len(r1_basis(zero_spec(5))) == 0
    assert len(enumerate_code(zero_spec(5))) == 1


def test_enumeration_examples():
    assert len(enumerate_code(CODE3)) == 16
    assert len(enumerate_code(REV8)) == 4096
    z = RCodeSpec(4, zero_spec(4), zero_spec(4))
    assert enumerate_code(z).words() == [(ZERO,) * 4]


def test_enumeration_bound():
    with pytest.raises(EnumerationBoundError, match="bound 100"):
        enumerate_code(REV8, bound=100)


def test_contains_examples():
    f = parse_rpoly("vx^6+uvx^5+x^4+(u+uv)x^3+vx^2+ux+1")
    fr = parse_rpoly("vx+uvx^2+x^3+(u+uv)x^4+vx^5+ux^6+x^7")
    assert contains(REV8, f.word(8))
    assert contains(REV8, fr.word(8))
    assert contains(REV8, (ZERO,) * 8)
    with pytest.raises(ValueError):
        contains(REV8, (ZERO,) * 7)


def test_minimal_generating_set_examples():
    gens = minimal_generating_set_r(CODE3)
    assert [str(f) for f in gens.polys] == [
        "vx^2+vx+v",
        "uvx^2+uvx+uv",
        "(1+v)x^2+(1+v)x+(1+v)",
        "(u+uv)x^2+(u+uv)x+(u+uv)",
    ]
    assert len(minimal_generating_set_r(REV8)) == 12
    assert len(minimal_generating_set_r(RCodeSpec(3, zero_spec(3), zero_spec(3)))) == 0


def ideal_count_formula(n):
    """Number of ideals of (F2+uF2)[x]/(x^n-1) for odd n: three per irreducible factor."""
    return 3 ** len(factor_xn_minus_1(n))


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9, 15])
def test_spec_count_odd_lengths(n):
    assert len(all_r1_specs(n)) == ideal_count_formula(n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_specs_are_exactly_the_ideals(n):
    # every ideal is generated by at most two elements; enumerate all pairs
    elems = list(product(product((0, 1), repeat=2), repeat=n))
    ideals = set()
    for x in elems:
        for y in elems:
            if y < x:
                continue
            ideals.add(frozenset(naive_ideal(n, [list(x), list(y)])))
    specs = all_r1_specs(n)
    codes = {frozenset(r1_words_as_pairs(enumerate_code(s))) for s in specs}
    assert len(codes) == len(specs)
    assert codes == ideals


def test_sampled_ideals_length4_are_specs():
    n = 4
    rng = random.Random(4)
    elems = list(product(product((0, 1), repeat=2), repeat=n))
    specs = all_r1_specs(n)
    codes = {frozenset(r1_words_as_pairs(enumerate_code(s))) for s in specs}
    assert len(codes) == len(specs) == 23
    seen = set()
    for _ in range(1500):
        ideal = frozenset(naive_ideal(n, [list(rng.choice(elems)), list(rng.choice(elems))]))
        assert ideal in codes
        seen.add(ideal)
    assert len(seen) > 12


@pytest.mark.parametrize("n", range(1, 9))
def test_size_formula_and_closure_oracle(n):
    rng = random.Random(n)
    specs = all_r1_specs(n)
    for spec in specs:
        words = enumerate_code(spec)
        assert len(words) == 2 ** code_size_log2(spec)
        assert cyclic_closure_check(words)
    for spec in rng.sample(specs, min(6, len(specs))):
        if n <= 6:
            assert r1_words_as_pairs(enumerate_code(spec)) == naive_ideal(n, spec_generators(spec))
        assert enumerate_code(spec) == ideal_of_spec(spec)


def test_odd_principal_form_equivalence():
    # (g, ua) = (g + ua) for odd n
    for n in (3, 5, 7):
        for spec in all_r1_specs(n):
            single = [list(zip(spec.g.coeffs, [0] * len(spec.g.coeffs)))]
            a = spec.a.coeffs
            g = spec.g.coeffs
            k = max(len(g), len(a))
            gua = [((g[i] if i < len(g) else 0), (a[i] if i < len(a) else 0)) for i in range(k)]
            if n <= 5:
                assert naive_ideal(n, [gua]) == r1_words_as_pairs(enumerate_code(spec))
            assert single  # spec keeps p = 0
            assert spec.p == BinaryPoly()


@pytest.mark.parametrize("n, count", [(2, 12), (3, 12), (4, 3)])
def test_contains_agrees_with_enumeration_exhaustively(n, count):
    rng = random.Random(100 + n)
    specs = [(a, b) for a in all_r1_specs(n) for b in all_r1_specs(n)]
    all_words = list(product(ELEMENTS, repeat=n))
    for a, b in rng.sample(specs, min(count, len(specs))):
        spec = RCodeSpec(n, a, b)
        words = enumerate_code(spec)
        assert all(contains(spec, w) == (w in words) for w in all_words)


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_contains_agrees_with_enumeration_random(n):
    rng = random.Random(200 + n)
    specs = all_r1_specs(n)
    for _ in range(4):
        spec = RCodeSpec(n, rng.choice(specs), rng.choice(specs))
        if code_size_log2(spec) > 16:
            continue
        words = enumerate_code(spec)
        for _ in range(250):
            w = tuple(rng.choice(ELEMENTS) for _ in range(n))
            assert contains(spec, w) == (w in words)
        for i in rng.sample(range(len(words)), min(20, len(words))):
            assert contains(spec, words.unpack(words.packed[i]))


@pytest.mark.parametrize("n", range(2, 9))
def test_generating_set_span_equals_code(n):
    rng = random.Random(300 + n)
    specs = all_r1_specs(n)
    for _ in range(8):
        spec = RCodeSpec(n, rng.choice(specs), rng.choice(specs))
        if code_size_log2(spec) > 18:
            continue
        gens = minimal_generating_set_r(spec)
        assert gens.is_independent()
        assert gens.span() == enumerate_code(spec)
        assert len(gens) == code_size_log2(spec)


def _non_cyclic_r1(n):
    """The F2-span of the single word (1, 0, ..., 0)."""
    word = (R1_ELEMENTS[2],) + (R1_ELEMENTS[0],) * (n - 1)
    return CodeWords.from_words([word, (R1_ELEMENTS[0],) * n])


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_cyclic_iff_components_cyclic(n):
    rng = random.Random(400 + n)
    specs = all_r1_specs(n)
    for _ in range(6):
        c1, c2 = rng.choice(specs), rng.choice(specs)
        w1, w2 = enumerate_code(c1), enumerate_code(c2)
        assert cyclic_closure_check(product_r(w1, w2))
        bad = _non_cyclic_r1(n)
        assert not cyclic_closure_check(bad)
        assert not cyclic_closure_check(product_r(bad, w2))
        assert not cyclic_closure_check(product_r(w1, bad))


def test_cyclic_closure_examples():
    assert cyclic_closure_check(CodeWords.from_words([(ZERO,) * 3]))
    assert not cyclic_closure_check(CodeWords.from_words([(ZERO,) * 3, (ELEMENTS[8],) + (ZERO,) * 2]))


def test_spec_json_roundtrip():
    doc = REV8.to_json()
    assert RCodeSpec.from_json(doc) == REV8
    with pytest.raises(InvalidSpecError):
        RCodeSpec.from_json({"n": 3, "c1": {"g": "x+1"}})
    with pytest.raises(InvalidSpecError):
        RCodeSpec.from_json({"n": 3, "c1": {"g": "x+"}, "c2": {"g": "x+1"}})


def test_deterministic_order():
    words = enumerate_code(CODE3).words()
    keys = [[c.index for c in w] for w in words]
    assert keys == sorted(keys)
    again = enumerate_code(CODE3).words()
    assert words == again
    assert np.all(np.diff(enumerate_code(CODE3).packed.astype(np.int64)) > 0)
    assert unpack_r1(0, 3) == (R1_ELEMENTS[0],) * 3
