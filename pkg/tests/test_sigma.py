import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringdna.codes import InvalidSpecError
from ringdna.dna import phi
from ringdna.factor import divisors_xn_minus_1
from ringdna.poly import BinaryPoly, R1Poly, RPoly, is_self_reciprocal, parse_binary
from ringdna.ring import ELEMENTS, U, ZERO, parse_element, sigma
from ringdna.sigma import (
    SigmaSetSpec,
    build_sigma_set,
    combine,
    format_matrix,
    generator_matrix,
    ideal_of_f,
    phi_image_rc_closed,
    phi_image_reverse_closed,
    reversibility_identity_check,
    rows_independent,
    span_basis,
    span_enumerate,
    span_equals_ideal,
    span_size_log2,
    ideal_complement_construct,
)

SIG9 = SigmaSetSpec.parse(9, "x+1", "x^6+x^3+1")
SIG7 = SigmaSetSpec.parse(7, "x+1", "x^6+x^5+x^4+x^3+x^2+x+1")
SIG8 = SigmaSetSpec.parse(8, "1+x^2+x^4+x^6", "1+x^2+x^4+x^6")

PRINTED_SIG9 = """\
1 v 0 1+v 0 0 1+v 0 0
v 0 0 v 0 1+v 1 0 0
0 1 v 0 1+v 0 0 1+v 0
0 v 0 0 v 0 1+v 1 0
0 0 1 v 0 1+v 0 0 1+v
0 0 v 0 0 v 0 1+v 1"""


def elems(*names):
    return tuple(parse_element(s) for s in names)


def self_reciprocal_pairs(lengths, max_log2=12):
    for n in lengths:
        ds = [d for d in divisors_xn_minus_1(n) if is_self_reciprocal(d) and d.degree < n]
        for a in ds:
            for b in ds:
                spec = SigmaSetSpec(n, R1Poly.from_binary(a), R1Poly.from_binary(b))
                if span_size_log2(spec) <= max_log2:
                    yield spec


def test_sigma9_polynomials_and_matrix():
    assert str(SIG9.f) == "(1+v)x^6+(1+v)x^3+vx+1"
    assert SIG9.sigma_h == RPoly(elems("v", "0", "0", "v", "0", "1+v", "1"))
    rows = generator_matrix(SIG9)
    assert "\n".join(" ".join(map(str, r)) for r in rows) == PRINTED_SIG9
    assert SIG9.m == 3


def test_sigma9_combination():
    alpha, beta = elems("0", "1", "u"), elems("0", "1", "v")
    c1 = combine(SIG9, alpha, beta)
    assert c1 == elems("0", "1+v", "u", "uv", "1", "u+v+uv", "1+v", "v", "u+v+uv")
    assert phi(c1) == "AGTAGTGATAATTGGAGG"
    assert reversibility_identity_check(SIG9, alpha, beta)
    assert reversibility_identity_check(SIG9, (ZERO,) * 3, (ZERO,) * 3)
    with pytest.raises(ValueError):
        combine(SIG9, alpha[:2], beta)


def test_sigma9_span_size():
    # six independent rows over R, so the span has 16^6 words
    assert span_size_log2(SIG9) == 24
    assert rows_independent(SIG9)


def test_trivial_sigma_sets():
    one = SigmaSetSpec.parse(4, "1", "1")
    rows = generator_matrix(one)
    assert len(rows) == 8 and one.m == 4
    assert one.h == one.f
    assert one.sigma_h == one.f.map_coeffs(sigma)
    full = SigmaSetSpec(5, R1Poly.from_binary(BinaryPoly.xn_minus_1(5)), R1Poly.from_binary(BinaryPoly.xn_minus_1(5)))
    assert full.m == 0
    assert span_enumerate(full).words() == [(ZERO,) * 5]


def test_invalid_sigma_sets():
    with pytest.raises(InvalidSpecError):
        build_sigma_set(SigmaSetSpec.parse(5, "x^2+1", "x+1"))
    with pytest.raises(InvalidSpecError):
        build_sigma_set(SigmaSetSpec(5, R1Poly(), R1Poly.from_binary(parse_binary("x+1"))))


def test_sigma7_code():
    words = span_enumerate(SIG7)
    assert len(words) == 256
    assert (U,) * 7 in words
    assert phi_image_rc_closed(words) == (True, None)
    assert phi_image_reverse_closed(words) == (True, None)
    assert not span_equals_ideal(SIG7)


def test_sigma8_code():
    assert SIG8.m == 2
    assert len(generator_matrix(SIG8)) == 4
    words = span_enumerate(SIG8)
    assert len(words) == 256 == 16**SIG8.m
    assert span_equals_ideal(SIG8)
    assert words == ideal_of_f(SIG8)
    assert phi_image_reverse_closed(words)[0]


@settings(max_examples=200, deadline=None)
@given(st.lists(st.sampled_from(ELEMENTS), min_size=4, max_size=4))
def test_reversal_identity_sigma8(coeffs):
    assert reversibility_identity_check(SIG8, coeffs[:2], coeffs[2:])


@settings(max_examples=100, deadline=None)
@given(st.lists(st.sampled_from(ELEMENTS), min_size=6, max_size=6))
def test_reversal_identity_sigma9(coeffs):
    assert reversibility_identity_check(SIG9, coeffs[:3], coeffs[3:])


def test_self_reciprocal_sweep_reverse_closed():
    count = 0
    for spec in self_reciprocal_pairs(range(1, 13)):
        closed, witness = phi_image_reverse_closed(span_enumerate(spec))
        assert closed, (spec.n, str(spec.f1), str(spec.f2), witness)
        count += 1
    assert count > 100


def test_reverse_closure_can_fail():
    # f1 = x^3+x+1 is not self-reciprocal; the closure check must notice
    spec = SigmaSetSpec.parse(7, "x^3+x+1", "x^3+x+1")
    closed, witness = phi_image_reverse_closed(span_enumerate(spec))
    assert not closed and witness is not None


def test_augmented_sigma_set_is_rc_closed():
    for spec in self_reciprocal_pairs(range(1, 10), max_log2=10):
        aug = SigmaSetSpec(spec.n, spec.f1, spec.f2, augment_complement=True)
        words = span_enumerate(aug)
        assert (U,) * spec.n in words
        assert phi_image_rc_closed(words)[0]
        assert span_basis(aug)


def test_rc_iff_all_u_present():
    # reverse-closed images containing (u,...,u) are reverse-complement closed
    seen = 0
    for spec in self_reciprocal_pairs(range(1, 12)):
        words = span_enumerate(spec)
        if (U,) * spec.n in words:
            seen += 1
            assert phi_image_rc_closed(words)[0]
        else:
            assert not phi_image_rc_closed(words)[0]
    assert seen > 10


def test_ideal_complement_claims():
    r = ideal_complement_construct(parse_binary("x^6+x^5+x^4+x^3+x^2+x+1"), 7)
    assert not r.x_minus_1_divides and r.rc_claimed and r.contains_all_u
    z = ideal_complement_construct(BinaryPoly.xn_minus_1(4), 4)
    assert z.x_minus_1_divides
    r = ideal_complement_construct(parse_binary("1+x^2+x^4+x^6"), 8)
    assert r.x_minus_1_divides and not r.rc_claimed
    # the complement of zero is nevertheless a codeword of (f)
    assert r.contains_all_u
    with pytest.raises(InvalidSpecError):
        ideal_complement_construct(parse_binary("x^2+1"), 5)


def test_ideal_reversal_identity_random():
    rng = random.Random(47)
    for n, text in [(7, "x^6+x^5+x^4+x^3+x^2+x+1"), (8, "1+x^2+x^4+x^6"), (9, "x^6+x^3+1"), (15, "x^4+x^3+x^2+x+1")]:
        f = RPoly.from_binary(parse_binary(text))
        k = n - f.degree
        for _ in range(50):
            alpha = [rng.choice(ELEMENTS) for _ in range(k)]
            lhs = sum((f.shift(i).scale(a) for i, a in enumerate(alpha)), RPoly()).word(n)
            rhs = sum((f.shift(k - 1 - i).scale(sigma(a)) for i, a in enumerate(alpha)), RPoly()).word(n)
            assert phi(lhs)[::-1] == phi(rhs)


def test_format_matrix():
    text = format_matrix(generator_matrix(SIG8))
    assert len(text.splitlines()) == 4
