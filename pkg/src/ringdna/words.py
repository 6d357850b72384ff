"""Packed codewords and F2-linear spans.

A word over R1 of length n is packed as ``w0 | w1 << n`` where the word is
w0 + u*w1 and bit i of w0, w1 belongs to coordinate i.  A word over R is packed
through its CRT components c = v*c1 + (1+v)*c2 as ``c1 | c2 << 2n``, four
n-bit planes in all.  Ring addition is XOR in both layouts, and the maps the
package cares about become plane operations: reversal reverses every plane,
sigma swaps c1 and c2, the complement toggles the u-planes.

Sets of words are numpy arrays (uint64 while 4n <= 64, Python ints otherwise).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

from .ring import R1_ELEMENTS, R1Element, RElement, crt_join, crt_split

DEFAULT_BOUND = 1 << 20
# direct binary search stays fast while the needles fit in cache
_CACHE_FRIENDLY = 1 << 18


class EnumerationBoundError(ValueError):
    pass


# ----------------------------------------------------------------- packing


def pack_r1(word: Sequence[R1Element]) -> int:
    n = len(word)
    w0 = w1 = 0
    for i, c in enumerate(word):
        w0 |= c.c0 << i
        w1 |= c.c1 << i
    return w0 | (w1 << n)


def unpack_r1(x: int, n: int) -> tuple[R1Element, ...]:
    return tuple(
        R1_ELEMENTS[(((x >> i) & 1) << 1) | ((x >> (n + i)) & 1)] for i in range(n)
    )


def pack_r(word: Sequence[RElement]) -> int:
    n = len(word)
    parts = [crt_split(c) for c in word]
    x1 = pack_r1([p[0] for p in parts])
    x2 = pack_r1([p[1] for p in parts])
    return x1 | (x2 << (2 * n))


def unpack_r(x: int, n: int) -> tuple[RElement, ...]:
    mask = (1 << (2 * n)) - 1
    c1 = unpack_r1(x & mask, n)
    c2 = unpack_r1(x >> (2 * n), n)
    return tuple(crt_join(a, b) for a, b in zip(c1, c2))


def planes(ring: str) -> int:
    return 4 if ring == "R" else 2


def pack(word, ring: str) -> int:
    return pack_r(word) if ring == "R" else pack_r1(word)


def unpack(x: int, n: int, ring: str):
    return unpack_r(x, n) if ring == "R" else unpack_r1(x, n)


def _dtype(n: int, ring: str):
    return np.uint64 if planes(ring) * n <= 64 else object


def as_array(values: Iterable[int], n: int, ring: str) -> np.ndarray:
    dt = _dtype(n, ring)
    vals = list(values)
    if dt is object:
        arr = np.empty(len(vals), dtype=object)
        arr[:] = vals
        return arr
    return np.array(vals, dtype=np.uint64)


def _c(value: int, arr: np.ndarray):
    return np.uint64(value) if arr.dtype == np.uint64 else value


def _popcount(arr: np.ndarray) -> np.ndarray:
    if arr.dtype == np.uint64:
        return np.bitwise_count(arr).astype(np.int64)
    return np.array([int(x).bit_count() for x in arr], dtype=np.int64)


# ------------------------------------------------------- plane operations


def reverse_packed(arr: np.ndarray, n: int, ring: str) -> np.ndarray:
    """Coordinate reversal (x_0..x_{n-1}) -> (x_{n-1}..x_0) on every word."""
    # one bit per plane moves at a time
    lane = sum(1 << (k * n) for k in range(planes(ring)))
    lane_c = _c(lane, arr)
    out = np.zeros_like(arr) if arr.dtype == np.uint64 else as_array([0] * len(arr), n, ring)
    for i in range(n):
        out |= ((arr >> _c(i, arr)) & lane_c) << _c(n - 1 - i, arr)
    return out


def rotate_packed(arr: np.ndarray, n: int, ring: str) -> np.ndarray:
    """Cyclic shift (c_0..c_{n-1}) -> (c_{n-1}, c_0, ..., c_{n-2})."""
    low = sum(((1 << (n - 1)) - 1) << (k * n) for k in range(planes(ring)))
    top = sum(1 << (k * n + n - 1) for k in range(planes(ring)))
    return ((arr & _c(low, arr)) << _c(1, arr)) | ((arr & _c(top, arr)) >> _c(n - 1, arr))


def sigma_packed(arr: np.ndarray, n: int) -> np.ndarray:
    """Coordinatewise sigma on R words: swap the v and (1+v) components."""
    half = 2 * n
    mask = _c((1 << half) - 1, arr)
    return ((arr & mask) << _c(half, arr)) | (arr >> _c(half, arr))


def all_u_packed(n: int, ring: str) -> int:
    """The word (u, u, ..., u)."""
    ones = (1 << n) - 1
    if ring == "R1":
        return ones << n
    return (ones << n) | (ones << (3 * n))


def complement_packed(arr: np.ndarray, n: int, ring: str) -> np.ndarray:
    """Add u to every coordinate."""
    return arr ^ _c(all_u_packed(n, ring), arr)


def support_packed(arr: np.ndarray, n: int, ring: str) -> np.ndarray:
    """Bitmask of nonzero coordinates."""
    mask = _c((1 << n) - 1, arr)
    out = arr & mask
    for k in range(1, planes(ring)):
        out = out | ((arr >> _c(k * n, arr)) & mask)
    return out


def hamming_weight_packed(arr: np.ndarray, n: int, ring: str) -> np.ndarray:
    return _popcount(support_packed(arr, n, ring))


def unit_planes_weight(arr: np.ndarray, n: int) -> np.ndarray:
    """Popcount of the c1 and c2 unit planes of R words (G/C positions of Phi)."""
    mask = _c((1 << n) - 1, arr)
    return _popcount(arr & mask) + _popcount((arr >> _c(2 * n, arr)) & mask)


def g_and_c_counts(arr: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Per R word, the number of G (element 1) and C (element 1+u) bases under Phi."""
    mask = _c((1 << n) - 1, arr)
    g = c = 0
    for shift in (0, 2 * n):
        w0 = (arr >> _c(shift, arr)) & mask
        w1 = (arr >> _c(shift + n, arr)) & mask
        g = g + _popcount(w0 & ~w1 & mask)
        c = c + _popcount(w0 & w1)
    return g, c


def coordinate_index(arr: np.ndarray, n: int, ring: str, i: int) -> np.ndarray:
    """Element index of coordinate i of every packed word (uint64 arrays)."""
    one = np.uint64(1)
    if ring == "R1":
        return (((arr >> np.uint64(i)) & one) << one) | ((arr >> np.uint64(n + i)) & one)
    c1_0 = (arr >> np.uint64(i)) & one
    c1_1 = (arr >> np.uint64(n + i)) & one
    a0 = (arr >> np.uint64(2 * n + i)) & one
    a1 = (arr >> np.uint64(3 * n + i)) & one
    return (a0 << np.uint64(3)) | (a1 << np.uint64(2)) | ((a0 ^ c1_0) << one) | (a1 ^ c1_1)


def order_keys(arr: np.ndarray, n: int, ring: str) -> np.ndarray:
    """Integer keys whose order is the lexicographic order of words by element index."""
    if ring == "R1":
        if arr.dtype != np.uint64:
            return np.array([_key_r1(int(x), n) for x in arr], dtype=object)
        keys = np.zeros_like(arr)
        for i in range(n):
            keys |= coordinate_index(arr, n, "R1", i) << np.uint64(2 * (n - 1 - i))
        return keys
    if arr.dtype != np.uint64:
        return np.array([_key_r(int(x), n) for x in arr], dtype=object)
    keys = np.zeros_like(arr)
    for i in range(n):
        keys |= coordinate_index(arr, n, "R", i) << np.uint64(4 * (n - 1 - i))
    return keys


def _key_r1(x: int, n: int) -> int:
    k = 0
    for i in range(n):
        idx = (((x >> i) & 1) << 1) | ((x >> (n + i)) & 1)
        k = (k << 2) | idx
    return k


def _key_r(x: int, n: int) -> int:
    k = 0
    for c in unpack_r(x, n):
        k = (k << 4) | c.index
    return k


# ---------------------------------------------------------- F2 linear algebra


def echelon(vectors: Iterable[int]) -> list[int]:
    """Reduced F2 basis of the span of ``vectors``."""
    basis: list[int] = []
    for v in vectors:
        v = int(v)
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return basis


def rank(vectors: Iterable[int]) -> int:
    return len(echelon(vectors))


def in_span(v: int, basis: Sequence[int]) -> bool:
    """Membership test against a basis produced by ``echelon``."""
    for b in basis:
        v = min(v, v ^ b)
    return v == 0


def span_array(basis: Sequence[int], n: int, ring: str, bound: int = DEFAULT_BOUND) -> np.ndarray:
    """All 2^len(basis) F2-combinations of independent ``basis`` vectors."""
    size = 1 << len(basis)
    if size > bound:
        raise EnumerationBoundError(
            f"code has {size} words, above the enumeration bound {bound}"
        )
    arr = as_array([0], n, ring)
    for b in basis:
        arr = np.concatenate([arr, arr ^ _c(int(b), arr)])
    return arr


# ------------------------------------------------------------------ sets


class CodeWords:
    """A finite set of words of length n over R or R1, stored packed."""

    def __init__(self, packed: np.ndarray, n: int, ring: str = "R"):
        if ring not in ("R", "R1"):
            raise ValueError(f"unknown ring {ring!r}")
        self.n = n
        self.ring = ring
        self.packed = np.unique(packed)

    @classmethod
    def from_words(cls, words: Iterable[Sequence], n: int | None = None, ring: str | None = None):
        words = [tuple(w) for w in words]
        if ring is None:
            ring = "R1" if words and words[0] and isinstance(words[0][0], R1Element) else "R"
        if n is None:
            if not words:
                raise ValueError("length of an empty word set must be given")
            n = len(words[0])
        for w in words:
            if len(w) != n:
                raise ValueError(f"word {w} does not have length {n}")
        return cls(as_array([pack(w, ring) for w in words], n, ring), n, ring)

    @classmethod
    def from_basis(cls, basis: Sequence[int], n: int, ring: str = "R", bound: int = DEFAULT_BOUND):
        return cls(span_array(echelon(basis), n, ring, bound), n, ring)

    def __len__(self) -> int:
        return len(self.packed)

    def contains_packed(self, x: int) -> bool:
        i = np.searchsorted(self.packed, _c(x, self.packed))
        return bool(i < len(self.packed) and self.packed[i] == _c(x, self.packed))

    def __contains__(self, word) -> bool:
        if isinstance(word, (int, np.integer)):
            return self.contains_packed(int(word))
        if len(word) != self.n:
            return False
        return self.contains_packed(pack(word, self.ring))

    def isin(self, arr: np.ndarray) -> np.ndarray:
        """Vectorized membership of packed words."""
        if self.packed.dtype == np.uint64:
            # packed is sorted by np.unique
            if len(self.packed) == 0:
                return np.zeros(len(arr), dtype=bool)
            if len(arr) <= _CACHE_FRIENDLY:
                idx = np.searchsorted(self.packed, arr)
                np.minimum(idx, len(self.packed) - 1, out=idx)
                return self.packed[idx] == arr
            # sorted needles keep the binary searches cache friendly
            order = np.argsort(arr, kind="stable")
            needles = arr[order]
            idx = np.searchsorted(self.packed, needles)
            np.minimum(idx, len(self.packed) - 1, out=idx)
            out = np.empty(len(arr), dtype=bool)
            out[order] = self.packed[idx] == needles
            return out
        members = set(int(x) for x in self.packed)
        return np.array([int(x) in members for x in arr], dtype=bool)

    def ordered_packed(self) -> np.ndarray:
        keys = order_keys(self.packed, self.n, self.ring)
        return self.packed[np.argsort(keys, kind="stable")]

    def least(self, arr: np.ndarray) -> int:
        """The lexicographically least packed word among ``arr`` (nonempty)."""
        if arr.dtype != np.uint64:
            keys = order_keys(arr, self.n, self.ring)
            return int(arr[int(np.argmin(keys))])
        # narrow the candidates one coordinate at a time
        cand = np.unique(arr)
        for i in range(self.n):
            if len(cand) == 1:
                break
            idx = coordinate_index(cand, self.n, self.ring, i)
            cand = cand[idx == idx.min()]
        return int(cand[0])

    def words(self) -> list[tuple]:
        return [unpack(int(x), self.n, self.ring) for x in self.ordered_packed()]

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.words())

    def unpack(self, x: int) -> tuple:
        return unpack(int(x), self.n, self.ring)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CodeWords)
            and (self.n, self.ring) == (other.n, other.ring)
            and len(self) == len(other)
            and bool(np.all(self.packed == other.packed))
        )

    def __repr__(self) -> str:
        return f"CodeWords(n={self.n}, ring={self.ring}, size={len(self)})"


def product_r(c1: CodeWords, c2: CodeWords, bound: int = DEFAULT_BOUND) -> CodeWords:
    """{v*w1 + (1+v)*w2 : w1 in c1, w2 in c2} for R1 word sets of equal length."""
    if c1.n != c2.n or c1.ring != "R1" or c2.ring != "R1":
        raise ValueError("components must be R1 word sets of the same length")
    n = c1.n
    size = len(c1) * len(c2)
    if size > bound:
        raise EnumerationBoundError(f"code has {size} words, above the enumeration bound {bound}")
    dt = _dtype(n, "R")
    a = c1.packed.astype(dt)
    b = c2.packed.astype(dt)
    shift = np.uint64(2 * n) if dt is np.uint64 else 2 * n
    arr = (a[:, None] | (b[None, :] << shift)).ravel()
    return CodeWords(arr, n, "R")


def components(words: CodeWords) -> tuple[CodeWords, CodeWords]:
    """Project an R word set onto its v and (1+v) components."""
    n = words.n
    mask = _c((1 << (2 * n)) - 1, words.packed)
    low = words.packed & mask
    high = words.packed >> _c(2 * n, words.packed)
    return CodeWords(low, n, "R1"), CodeWords(high, n, "R1")
