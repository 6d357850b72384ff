"""DNA correspondence for codewords over R.

Each R1 element is one base (0 -> A, 1 -> G, u -> T, 1+u -> C).  An element of
R becomes the pair of bases of its Gray image (a, a+b).  A codeword of length
n becomes a DNA string of length 2n: the bases of all a_i followed by the bases
of all a_i + b_i.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .ring import R1_ONE, R1_ONE_PLUS_U, R1_U, R1_ZERO, R1Element, RElement, gray_inverse, gray_map
from .words import CodeWords, unit_planes_weight

BASES = "ATGC"
WCC = {"A": "T", "T": "A", "G": "C", "C": "G"}

_BASE_OF = {R1_ZERO: "A", R1_ONE: "G", R1_U: "T", R1_ONE_PLUS_U: "C"}
_R1_OF = {b: x for x, b in _BASE_OF.items()}
_DIGIT = {"A": 0, "T": 1, "G": 2, "C": 3}


def _check_dna(s: str) -> None:
    bad = set(s) - set(BASES)
    if bad:
        raise ValueError(f"not a DNA string: unexpected {''.join(sorted(bad))!r}")


def base_of_r1(x: R1Element) -> str:
    return _BASE_OF[x]


def r1_of_base(base: str) -> R1Element:
    try:
        return _R1_OF[base]
    except KeyError:
        raise ValueError(f"not a DNA base: {base!r}") from None


def zeta(x: RElement) -> str:
    """The DNA double pair of a ring element."""
    first, second = gray_map(x)
    return base_of_r1(first) + base_of_r1(second)


def zeta_inverse(pair: str) -> RElement:
    if len(pair) != 2:
        raise ValueError(f"DNA pair must have length 2, got {pair!r}")
    return gray_inverse((r1_of_base(pair[0]), r1_of_base(pair[1])))


def phi(word: Sequence[RElement]) -> str:
    pairs = [gray_map(c) for c in word]
    return "".join(base_of_r1(a) for a, _ in pairs) + "".join(base_of_r1(s) for _, s in pairs)


def phi_inverse(s: str) -> tuple[RElement, ...]:
    if len(s) % 2:
        raise ValueError(f"DNA string of odd length {len(s)} has no preimage")
    _check_dna(s)
    n = len(s) // 2
    return tuple(gray_inverse((r1_of_base(s[i]), r1_of_base(s[n + i]))) for i in range(n))


def reverse(s):
    return s[::-1]


def complement_dna(s: str) -> str:
    _check_dna(s)
    return "".join(WCC[b] for b in s)


def reverse_complement(s: str) -> str:
    return complement_dna(s)[::-1]


def gc_count(s: str) -> int:
    return sum(1 for b in s if b in "GC")


def gc_weight(word: Sequence[RElement]) -> int:
    """Number of G and C bases in phi(word)."""
    return gc_count(phi(word))


def gc_weight_via_u(word: Sequence[RElement]) -> int:
    """Hamming weight of u times the Gray image of ``word`` (2n R1 symbols)."""
    gray = [x for c in word for x in gray_map(c)]
    return sum(1 for x in gray if not (R1_U * x).is_zero())


def gc_weights(words: CodeWords):
    """Vectorized G/C counts over a packed R word set."""
    return unit_planes_weight(words.packed, words.n)


def g_c_counts(s: str) -> tuple[int, int]:
    return s.count("G"), s.count("C")


MAX_DECIMAL_LENGTH = 31


def quaternary_decimal(s: str) -> int:
    """Read a DNA string as a base-4 number (A=0, T=1, G=2, C=3), first base most significant."""
    if len(s) > MAX_DECIMAL_LENGTH:
        raise OverflowError(f"DNA string of length {len(s)} exceeds {MAX_DECIMAL_LENGTH} bases")
    _check_dna(s)
    value = 0
    for b in s:
        value = 4 * value + _DIGIT[b]
    return value


def decimal_to_dna(value: int, length: int) -> str:
    if value < 0 or value >= 4**length:
        raise ValueError(f"{value} does not fit in {length} bases")
    out = []
    for _ in range(length):
        value, d = divmod(value, 4)
        out.append(BASES[d])
    return "".join(reversed(out))


def to_fasta(words: Iterable[Sequence[RElement]]) -> str:
    lines = []
    for i, w in enumerate(words):
        s = phi(w)
        lines.append(f">cw{i} gc={gc_count(s)}")
        lines.append(s)
    return "\n".join(lines) + "\n" if lines else ""


def to_decimal_lines(words: Iterable[Sequence[RElement]]) -> str:
    return "".join(f"{quaternary_decimal(phi(w))}\n" for w in words)
