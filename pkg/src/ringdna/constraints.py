"""Reverse, reverse-complement, distance and GC checks for codes over R.

Structural verdicts come from the generator polynomials; brute-force verdicts
scan an enumerated word set.  Any failing brute-force verdict carries the
lexicographically least counterexample.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .codes import R1CodeSpec, RCodeSpec, _require_valid, contains, enumerate_code, r1_rank
from .poly import BinaryPoly, is_self_reciprocal, reciprocal
from .ring import U
from .words import (
    DEFAULT_BOUND,
    CodeWords,
    EnumerationBoundError,
    complement_packed,
    components,
    g_and_c_counts,
    hamming_weight_packed,
    reverse_packed,
    unit_planes_weight,
)


@dataclass
class Verdict:
    holds: bool
    method: str
    witness: tuple | None = None
    reasons: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        out = {"holds": self.holds, "method": self.method, "reasons": self.reasons}
        if self.witness is not None:
            out["witness"] = [str(c) for c in self.witness]
        return out


def _x_i_p_star(g: BinaryPoly, p: BinaryPoly) -> BinaryPoly:
    # x^(deg g - deg p) * p*, i.e. x^deg(g) p(1/x); zero when p = 0
    if not p:
        return BinaryPoly()
    return reciprocal(p).shift(g.degree - p.degree)


def r1_reversible_structural(spec: R1CodeSpec) -> Verdict:
    """Reversibility of (g+up, ua) from self-reciprocity and divisibility conditions."""
    _require_valid(spec)
    g, a, p = spec.g, spec.a, spec.p_canonical
    reasons = []
    ok = True
    if not is_self_reciprocal(g):
        ok = False
        reasons.append(f"g={g} is not self-reciprocal")
    if spec.n % 2 == 1 or not p:
        # odd length (g, ua): g and a self-reciprocal
        if not is_self_reciprocal(a):
            ok = False
            reasons.append(f"a={a} is not self-reciprocal")
        rule = "odd n" if spec.n % 2 == 1 else "even n, p = 0"
    elif spec.one_generator:
        rule = "even n, one generator"
        q = _x_i_p_star(g, p)
        if not (q == p or g == q + p):
            ok = False
            reasons.append(f"neither x^i p* = p nor g = x^i p* + p (x^i p* = {q})")
    else:
        rule = "even n, two generators"
        if not is_self_reciprocal(a):
            ok = False
            reasons.append(f"a={a} is not self-reciprocal")
        q = _x_i_p_star(g, p)
        if not a.divides(q + p):
            ok = False
            reasons.append(f"a={a} does not divide x^i p* + p = {q + p}")
    return Verdict(ok, f"structural ({rule})", reasons=reasons)


def is_reversible_structural(spec) -> Verdict:
    if isinstance(spec, R1CodeSpec):
        return r1_reversible_structural(spec)
    v1 = r1_reversible_structural(spec.c1)
    v2 = r1_reversible_structural(spec.c2)
    reasons = [f"C1: {r}" for r in v1.reasons] + [f"C2: {r}" for r in v2.reasons]
    return Verdict(v1.holds and v2.holds, f"structural (C1 {v1.method}; C2 {v2.method})", reasons=reasons)


def _closure(words: CodeWords, image: np.ndarray, method: str) -> Verdict:
    # the maps checked here are bijections on words, so closure means the
    # sorted image is the code itself
    if len(image) == len(words) and np.array_equal(np.sort(image), words.packed):
        return Verdict(True, method)
    present = words.isin(image)
    if bool(present.all()):
        return Verdict(True, method)
    witness = words.unpack(words.least(words.packed[~present]))
    return Verdict(False, method, witness, [f"image of {[str(c) for c in witness]} is not a codeword"])


def is_reversible_bruteforce(words: CodeWords) -> Verdict:
    return _closure(words, reverse_packed(words.packed, words.n, words.ring), "brute force reversal")


def is_complement_bruteforce(words: CodeWords) -> Verdict:
    return _closure(words, complement_packed(words.packed, words.n, words.ring), "brute force complement")


def is_reverse_complement_bruteforce(words: CodeWords) -> Verdict:
    rc = complement_packed(reverse_packed(words.packed, words.n, words.ring), words.n, words.ring)
    return _closure(words, rc, "brute force reverse-complement")


def contains_all_u(spec) -> bool:
    return contains(spec, (U,) * spec.n) if isinstance(spec, RCodeSpec) else contains(spec, (U.a,) * spec.n)


def is_reverse_complement(code) -> Verdict:
    """Structural path for specs (reversible and contains (u,...,u)); brute force for word sets."""
    if isinstance(code, CodeWords):
        return is_reverse_complement_bruteforce(code)
    rev = is_reversible_structural(code)
    has_u = contains_all_u(code)
    reasons = list(rev.reasons)
    if not has_u:
        reasons.append("(u,...,u), the complement of the zero word, is not a codeword")
    return Verdict(rev.holds and has_u, "structural (reversible and (u,...,u) in C)", reasons=reasons)


def min_hamming_distance(words: CodeWords) -> int:
    """Minimum weight over nonzero words, equal to the minimum distance of a linear code."""
    if len(words) < 2:
        raise ValueError("minimum distance needs at least two codewords")
    w = hamming_weight_packed(words.packed, words.n, words.ring)
    return int(w[w > 0].min())


def min_pairwise_distance(words: CodeWords) -> int:
    """Minimum distance over all distinct pairs (quadratic)."""
    if len(words) < 2:
        raise ValueError("minimum distance needs at least two codewords")
    arr = words.packed
    best = words.n
    for i in range(len(arr) - 1):
        diff = arr[i + 1 :] ^ arr[i]
        best = min(best, int(hamming_weight_packed(diff, words.n, words.ring).min()))
    return best


def griesmer_bound(k: int, d: int, q: int = 2) -> int:
    if k < 1 or d < 1:
        raise ValueError("griesmer bound needs k >= 1 and d >= 1")
    return sum(-(-d // q**i) for i in range(k))


def griesmer_check(n: int, k: int, d: int, q: int = 2) -> tuple[int, bool]:
    bound = griesmer_bound(k, d, q)
    return bound, n >= bound


def rank_of_code(spec: RCodeSpec) -> int:
    """Max of the component module ranks."""
    return max(r1_rank(spec.c1), r1_rank(spec.c2))


def module_rank(words: CodeWords) -> int:
    """Rank read from the word set: log2 of the torsion part {w : u*w in C}.

    For an R word set the rank is the maximum over the two components.
    """
    if words.ring == "R":
        return max(module_rank(c) for c in components(words))
    mask = (1 << words.n) - 1
    residues = [int(x) & mask for x in words.packed]
    torsion = sum(1 for r in residues if r == 0)
    return int(math.log2(torsion))


@dataclass
class GCReport:
    histogram: dict[int, int]
    joint_constant: bool
    balanced: bool
    constant_value: int | None

    def verdict(self, mode: str) -> bool:
        if mode == "joint":
            return self.joint_constant
        if mode == "balanced":
            return self.balanced
        raise ValueError(f"unknown gc mode {mode!r}")

    def to_json(self) -> dict:
        return {
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "joint_constant": self.joint_constant,
            "constant_value": self.constant_value,
            "balanced": self.balanced,
        }


def fixed_gc_report(words: CodeWords) -> GCReport:
    """GC histogram; joint = one |G|+|C| value on nonzero words; balanced = #G = #C on nonzero words."""
    gc = unit_planes_weight(words.packed, words.n)
    hist = Counter(int(x) for x in gc)
    nonzero = np.array([int(x) != 0 for x in words.packed], dtype=bool)
    values = set(int(x) for x in gc[nonzero])
    g, c = g_and_c_counts(words.packed, words.n)
    balanced = bool(np.all(g[nonzero] == c[nonzero]))
    return GCReport(dict(hist), len(values) <= 1, balanced, next(iter(values)) if len(values) == 1 else None)


@dataclass
class ConstraintReport:
    n: int
    size: int
    reversible: Verdict
    reverse_complement: Verdict
    min_distance: int | None
    rank: int
    gc: GCReport | None
    griesmer: tuple[int, bool] | None
    component_distances: tuple[int | None, int | None] | None = None
    brute_force: dict[str, Verdict] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "size": self.size,
            "reversible": self.reversible.to_json(),
            "reverse_complement": self.reverse_complement.to_json(),
            "brute_force": {k: v.to_json() for k, v in self.brute_force.items()},
            "min_distance": self.min_distance,
            "component_distances": list(self.component_distances) if self.component_distances else None,
            "rank": self.rank,
            "gc": self.gc.to_json() if self.gc else None,
            "griesmer": {"bound": self.griesmer[0], "satisfied": self.griesmer[1]} if self.griesmer else None,
            "notes": self.notes,
        }


def _component_distance(c: CodeWords) -> int | None:
    return min_hamming_distance(c) if len(c) >= 2 else None


def report_for_words(words: CodeWords, rank: int | None = None, q: int = 2) -> ConstraintReport:
    """Brute-force report for an enumerated R word set."""
    rev = is_reversible_bruteforce(words)
    rc = is_reverse_complement_bruteforce(words)
    k = module_rank(words) if rank is None else rank
    d = min_hamming_distance(words) if len(words) >= 2 else None
    comps = components(words)
    notes = []
    griesmer = None
    if d is not None and k >= 1:
        griesmer = griesmer_check(words.n, k, d, q)
        if griesmer[0] < words.n:
            notes.append(
                f"griesmer sum {griesmer[0]} is below n={words.n}: the bound holds but is not attained"
            )
    return ConstraintReport(
        n=words.n,
        size=len(words),
        reversible=rev,
        reverse_complement=rc,
        min_distance=d,
        rank=k,
        gc=fixed_gc_report(words),
        griesmer=griesmer,
        component_distances=(_component_distance(comps[0]), _component_distance(comps[1])),
        brute_force={"reversible": rev, "reverse_complement": rc},
        notes=notes,
    )


def check_code(spec: RCodeSpec, bound: int = DEFAULT_BOUND, q: int = 2) -> ConstraintReport:
    """Structural verdicts plus, when the code fits the bound, brute-force cross-checks."""
    rev = is_reversible_structural(spec)
    rc = is_reverse_complement(spec)
    k = rank_of_code(spec)
    try:
        words = enumerate_code(spec, bound)
    except EnumerationBoundError as exc:
        return ConstraintReport(spec.n, -1, rev, rc, None, k, None, None, notes=[str(exc)])
    report = report_for_words(words, rank=k, q=q)
    bf = report.brute_force
    report.reversible, report.reverse_complement = rev, rc
    for name, verdict in (("reversible", rev), ("reverse_complement", rc)):
        if verdict.holds != bf[name].holds:
            report.notes.append(f"structural and brute-force {name} verdicts disagree")
    d1, d2 = report.component_distances
    report.notes.append(f"d(C1)={d1}, d(C2)={d2}, d(C)={report.min_distance} (measured)")
    return report
