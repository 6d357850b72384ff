"""Regenerate the worked examples and tables and diff them against golden data.

Golden files live in ``ringdna/data`` and are stored verbatim.  Each
reproduction returns a :class:`Reproduction` whose ``lines`` are the report and
whose ``diff`` is a unified diff (empty when everything matches).
"""

from __future__ import annotations

import difflib
import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .codes import R1CodeSpec, RCodeSpec, enumerate_code, validate_r_spec
from .constraints import (
    griesmer_check,
    is_reversible_bruteforce,
    is_reversible_structural,
    min_hamming_distance,
)
from .dna import complement_dna, decimal_to_dna, phi, quaternary_decimal, zeta
from .poly import RPoly, mul_mod_xn, parse_rpoly, reciprocal
from .ring import ELEMENTS, ONE_PLUS_V, U, V, complement, format_element, gray_map, parse_element, parse_r1_element
from .sigma import (
    SigmaSetSpec,
    combine,
    generator_matrix,
    phi_image_rc_closed,
    phi_image_reverse_closed,
    sigma_transformed,
    span_basis,
    span_enumerate,
    span_equals_ideal,
    ideal_complement_construct,
)

IDS = ("table1", "eq7", "ex3.9", "ex4.3", "ex4.5", "table2", "ex5.7")

# the n=9 sigma-set span has 16^6 words; closure is checked over all of them
FULL_SPAN_BOUND = 1 << 24


@dataclass
class Reproduction:
    id: str
    passed: bool
    lines: list[str] = field(default_factory=list)
    diff: list[str] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def check(self, label: str, ok: bool, detail: str = "") -> bool:
        self.lines.append(f"[{'ok' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else ""))
        if not ok:
            self.passed = False
        return ok

    def compare(self, label: str, expected: list[str], actual: list[str]) -> bool:
        """Line-wise comparison; a mismatch records a unified diff."""
        ok = expected == actual
        if not ok:
            self.diff += list(
                difflib.unified_diff(expected, actual, f"golden/{label}", f"computed/{label}", lineterm="")
            )
        return self.check(label, ok, f"{len(actual)} lines" if ok else "differs from golden data")

    def text(self) -> str:
        head = f"{self.id}: {'PASS' if self.passed else 'FAIL'}"
        return "\n".join([head, *self.lines, *self.diff]) + "\n"


def _data_text(name: str) -> str:
    return resources.files("ringdna").joinpath("data", name).read_text()


def _data_lines(name: str) -> list[str]:
    return [ln for ln in _data_text(name).splitlines() if ln.strip() and not ln.startswith("#")]


@lru_cache(maxsize=None)
def examples() -> dict:
    return json.loads(_data_text("examples.json"))


def golden_zeta_table() -> list[tuple[str, str, str]]:
    return [tuple(ln.split("\t")) for ln in _data_lines("zeta_table.tsv")]


def golden_code_n3_dna() -> list[str]:
    return [s for ln in _data_lines("code_n3_dna.txt") for s in ln.split()]


def golden_sigma_n8_decimals() -> list[int]:
    return [int(s) for ln in _data_lines("sigma_n8_decimals.txt") for s in ln.split()]


def golden_sigma_n9_matrix() -> list[list[str]]:
    return [ln.split() for ln in _data_lines("sigma_n9_matrix.txt")]


def _words(strings) -> tuple:
    return tuple(parse_element(s) for s in strings)


def _r1_spec(n: int, doc: dict) -> R1CodeSpec:
    return R1CodeSpec.parse(n, doc["g"], doc.get("p", "0"), doc.get("a"))


def example_spec(key: str) -> RCodeSpec:
    doc = examples()[key]
    return RCodeSpec(doc["n"], _r1_spec(doc["n"], doc["c1"]), _r1_spec(doc["n"], doc["c2"]))


def example_sigma(key: str) -> SigmaSetSpec:
    doc = examples()[key]
    return SigmaSetSpec.parse(doc["n"], doc["f1"], doc["f2"])


# ------------------------------------------------------------------ zeta table


def _gray_text(pair) -> str:
    return f"({pair[0]},{pair[1]})"


def reproduce_zeta_table() -> Reproduction:
    rep = Reproduction("table1", True)
    golden = golden_zeta_table()
    expected, actual = [], []
    for elem, gray, dna in golden:
        x = parse_element(elem)
        # printed Gray images are read as ring elements, so "u+1" equals "1+u"
        printed = tuple(parse_r1_element(t) for t in gray.strip("()").split(","))
        expected.append(f"{format_element(x)}\t{_gray_text(printed)}\t{dna}")
        actual.append(f"{format_element(x)}\t{_gray_text(gray_map(x))}\t{zeta(x)}")
    rep.check("all 16 elements listed once", sorted(parse_element(e) for e, _, _ in golden) == sorted(ELEMENTS))
    rep.compare("zeta table", expected, actual)
    wcc = [x for x in ELEMENTS if zeta(complement(x)) != complement_dna(zeta(x))]
    rep.check("zeta(x+u) = WCC(zeta(x)) for all 16 x", not wcc, ", ".join(map(str, wcc)))
    return rep


# ------------------------------------------------------------------ phi of a word


def reproduce_phi_word() -> Reproduction:
    rep = Reproduction("eq7", True)
    doc = examples()["phi_word"]
    got = phi(_words(doc["word"]))
    rep.lines.append(got)
    rep.compare("phi(1,v,u,u+v)", [doc["dna"]], [got])
    return rep


# ------------------------------------------------------------------ reversible n=8 code


def reproduce_reversible_n8() -> Reproduction:
    rep = Reproduction("ex3.9", True)
    doc = examples()["reversible_n8"]
    spec = example_spec("reversible_n8")
    n = spec.n
    r1, r2 = validate_r_spec(spec)
    rep.check("spec validates", r1.ok and r2.ok, f"C1 {r1.form}; C2 {r2.form}")
    verdict = is_reversible_structural(spec)
    rep.check("structural reversibility", verdict.holds, verdict.method)
    f = RPoly.from_r1(spec.c1.generator).scale(V) + RPoly.from_r1(spec.c2.generator).scale(ONE_PLUS_V)
    rep.compare("f", [str(parse_rpoly(doc["f"]))], [str(f)])
    fr = reciprocal(f).shift(n - 1 - f.degree)
    rep.compare("f^r = x^(n-1) f(1/x)", [str(parse_rpoly(doc["f_r"]))], [str(fr)])
    prod = mul_mod_xn(parse_rpoly(doc["multiplier"]), f, n)
    rep.compare("(vx+(1+v)x^3) f mod x^8-1", [str(fr)], [str(prod)])
    words = enumerate_code(spec)
    rep.check("code size", len(words) == 4096, str(len(words)))
    bf = is_reversible_bruteforce(words)
    rep.check("brute-force reversal closure", bf.holds, f"{len(words)} words")
    rep.data = {"size": len(words)}
    return rep


# ------------------------------------------------------------------ sigma-set, n=9


def reproduce_sigma_n9(exhaustive: bool = True) -> Reproduction:
    rep = Reproduction("ex4.3", True)
    doc = examples()["sigma_n9"]
    spec = example_sigma("sigma_n9")
    rep.compare("f", [str(parse_rpoly(doc["f"]))], [str(spec.f)])
    rep.compare("sigma(h)", [str(parse_rpoly(doc["sigma_h"]))], [str(spec.sigma_h)])
    rows = generator_matrix(spec)
    expected = [" ".join(r) for r in golden_sigma_n9_matrix()]
    rep.compare("generator matrix", expected, [" ".join(str(c) for c in r) for r in rows])
    alpha, beta = _words(doc["alpha"]), _words(doc["beta"])
    c1 = combine(spec, alpha, beta)
    c2 = sigma_transformed(spec, alpha, beta)
    rep.compare("c1", [" ".join(doc["c1"])], [" ".join(map(str, c1))])
    rep.compare("phi(c1)", [doc["phi_c1"]], [phi(c1)])
    rep.compare("c2", [" ".join(doc["c2"])], [" ".join(map(str, c2))])
    rep.compare("phi(c2)", [doc["phi_c2"]], [phi(c2)])
    rep.check("reverse(phi(c1)) = phi(c2)", phi(c1)[::-1] == phi(c2))
    log2 = len(span_basis(spec))
    rep.lines.append(f"span has 2^{log2} = {1 << log2} words ({len(rows)} generators)")
    rep.data = {"span_log2": log2}
    if exhaustive:
        words = span_enumerate(spec, bound=FULL_SPAN_BOUND)
        closed, witness = phi_image_reverse_closed(words)
        rep.check("phi-image of the full span is reverse-closed", closed, f"{len(words)} words checked")
        rep.data["checked"] = len(words)
    return rep


# ------------------------------------------------------------------ sigma-set, n=7


def reproduce_sigma_n7() -> Reproduction:
    rep = Reproduction("ex4.5", True)
    doc = examples()["sigma_n7"]
    spec = example_sigma("sigma_n7")
    rep.compare("f", [str(parse_rpoly(doc["f"]))], [str(spec.f)])
    words = span_enumerate(spec)
    rep.lines.append(f"span has {len(words)} words")
    rep.check("(u,...,u) in the span", (U,) * spec.n in words)
    closed, witness = phi_image_rc_closed(words)
    rep.check("phi-image reverse-complement closed", closed, f"{len(words)} words checked")
    rev, _ = phi_image_reverse_closed(words)
    rep.check("phi-image reverse-closed", rev)
    rep.data = {"size": len(words)}
    return rep


# ------------------------------------------------------------------ n=3 code


def reproduce_code_n3() -> Reproduction:
    rep = Reproduction("table2", True)
    golden = golden_code_n3_dna()
    words = enumerate_code(example_spec("code_n3"))
    got = sorted(phi(w) for w in words)
    want = sorted(golden)
    hits = len(set(got) & set(want))
    rep.lines.append(f"{hits}/{len(want)} DNA strings match")
    rep.compare("codewords as DNA strings", want, got)
    rep.data = {"hits": hits, "size": len(words)}
    return rep


# ------------------------------------------------------------------ sigma-set, n=8


def _digit_distance(a: int, b: int) -> int | None:
    sa, sb = str(a), str(b)
    if len(sa) != len(sb):
        return None
    return sum(x != y for x, y in zip(sa, sb))


def classify_decimals(printed: list[int], computed: list[int], max_digits: int = 2) -> dict:
    """Set comparison of printed and computed decimals.

    Printed values absent from the computed set are missing, computed values
    absent from the table are extra.  A missing/extra pair that differ in at
    most ``max_digits`` decimal positions is reported as a possible typo.
    """
    counts = Counter(printed)
    dup = sorted(v for v, c in counts.items() if c > 1)
    comp = set(computed)
    missing = sorted(set(printed) - comp)
    extra = sorted(comp - set(printed))
    typos = []
    left = list(extra)
    for m in missing:
        dists = [(_digit_distance(m, e), e) for e in left]
        dists = [(d, e) for d, e in dists if d is not None and d <= max_digits]
        if dists:
            d, e = min(dists)
            left.remove(e)
            typos.append({"printed": m, "computed": e, "digits_differ": d})
    paired_m = {t["printed"] for t in typos}
    return {
        "printed_entries": len(printed),
        "computed_entries": len(comp),
        "matched": len(set(printed) & comp),
        "duplicates": dup,
        "missing": [m for m in missing if m not in paired_m],
        "extra": left,
        "possible_typos": typos,
    }


def reproduce_sigma_n8() -> Reproduction:
    rep = Reproduction("ex5.7", True)
    doc = examples()["sigma_n8"]
    spec = example_sigma("sigma_n8")
    words = span_enumerate(spec)
    rep.check("span size 256 = 16^m, m = 2", len(words) == 16**spec.m == 256, str(len(words)))
    ex = doc["decimal_example"]
    rep.check(
        f"quaternary_decimal({ex['dna']})",
        quaternary_decimal(ex["dna"]) == ex["value"],
        str(quaternary_decimal(ex["dna"])),
    )
    d = min_hamming_distance(words)
    n, k, dd = doc["parameters"]
    rep.check("minimum Hamming distance", d == dd, str(d))
    bound, ok = griesmer_check(n, k, d)
    rep.check("Griesmer inequality n >= sum ceil(d/2^i)", ok, f"sum = {bound}, n = {n}")
    if bound != n:
        rep.lines.append(f"note: the Griesmer sum {bound} is below n = {n}, so the bound is not attained")
    rev, _ = phi_image_reverse_closed(words)
    rep.check("phi-image reverse-closed", rev)
    ideal = ideal_complement_construct(spec.f1, n)
    has_u_span = (U,) * n in words
    rep.lines.append(
        f"x-1 divides f: {ideal.x_minus_1_divides}; (u,...,u) in (f): {ideal.contains_all_u}; "
        f"(u,...,u) in span: {has_u_span}; phi-image RC closed: {phi_image_rc_closed(words)[0]}"
    )
    rep.lines.append(f"span equals the ideal (f): {span_equals_ideal(spec)}")
    computed = [quaternary_decimal(phi(w)) for w in words]
    printed = golden_sigma_n8_decimals()
    report = classify_decimals(printed, computed)
    rep.data = {"size": len(words), "min_distance": d, "griesmer_sum": bound, "decimals": report}
    rep.lines.append(
        f"printed decimals: {report['matched']}/{report['printed_entries']} printed entries match, "
        f"{len(report['possible_typos'])} possible typos, {len(report['missing'])} missing, "
        f"{len(report['extra'])} extra, {len(report['duplicates'])} duplicates"
    )
    for t in report["possible_typos"]:
        rep.lines.append(
            f"  possible typo: printed {t['printed']} ({decimal_to_dna(t['printed'], 2 * n)}) vs "
            f"computed {t['computed']} ({decimal_to_dna(t['computed'], 2 * n)}), "
            f"{t['digits_differ']} decimal digits differ"
        )
    for m in report["missing"]:
        rep.lines.append(f"  missing (printed, not a codeword): {m}")
    for e in report["extra"]:
        rep.lines.append(f"  extra (codeword, not printed): {e}")
    rep.compare("printed decimal set", [str(v) for v in sorted(set(printed))], [str(v) for v in sorted(set(computed))])
    return rep


_RUNNERS = {
    "table1": reproduce_zeta_table,
    "eq7": reproduce_phi_word,
    "ex3.9": reproduce_reversible_n8,
    "ex4.3": reproduce_sigma_n9,
    "ex4.5": reproduce_sigma_n7,
    "table2": reproduce_code_n3,
    "ex5.7": reproduce_sigma_n8,
}


def reproduce(example_id: str) -> Reproduction:
    if example_id not in _RUNNERS:
        raise ValueError(f"unknown example id {example_id!r}; choose from {', '.join(IDS)}")
    return _RUNNERS[example_id]()
