"""Braid words in B_n: parsing, closure data and the rewriting moves.

Letters are ``(i, e)`` pairs meaning sigma_i^e.  Words are kept flat;
syllable structure is recomputed on demand.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BraidSyntaxError, IndexOutOfRange, ParameterOutOfRange, ShapeMismatch

__all__ = [
    "BraidWord",
    "ClosureShape",
    "parse",
    "interval",
    "closure_shape",
    "reflect",
    "reverse",
    "free_reduce",
    "destabilize_reduce",
    "cyclic_rotate",
    "positive_word",
    "alternating_exponents",
]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ParameterOutOfRange("a braid needs at least one strand")
        cleaned = []
        for i, e in self.letters:
            i, e = int(i), int(e)
            if not 1 <= i <= self.strands - 1:
                raise IndexOutOfRange(f"generator s{i} not in B{self.strands}")
            if e:
                cleaned.append((i, e))
        object.__setattr__(self, "letters", tuple(cleaned))

    @classmethod
    def from_signed(cls, strands: int, signed: Iterable[int]) -> "BraidWord":
        """Build from a flat list like ``[1, -2, 1]``."""
        return cls(strands, tuple((abs(g), 1 if g > 0 else -1) for g in signed))

    def signed(self) -> list[int]:
        """Flatten to unit letters, ``i`` for sigma_i and ``-i`` for its inverse."""
        out = []
        for i, e in self.letters:
            out.extend([i if e > 0 else -i] * abs(e))
        return out

    @property
    def writhe(self) -> int:
        return sum(e for _, e in self.letters)

    @property
    def crossings(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def syllables(self) -> list[tuple[int, int]]:
        """Maximal powers sigma_i^e after merging equal adjacent generators."""
        return list(free_reduce(self).letters)

    @property
    def rank(self) -> int:
        """Number of sigma_1 sigma_2 pairs for a B_3 word, read cyclically."""
        syl = _cyclic_syllables(self)
        if not syl:
            return 0
        if len(syl) == 1:
            return 1
        return len(syl) // 2

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        n = max(self.strands, other.strands)
        return BraidWord(n, self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        if k < 0:
            return inverse(self) ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def __str__(self) -> str:
        items = []
        for i, e in self.letters:
            items.append(f"s{i}" if e == 1 else f"s{i}^{e}")
        return f"B{self.strands}:" + ("" if not items else " " + " ".join(items))


@dataclass(frozen=True)
class ClosureShape:
    writhe: int
    permutation: tuple[int, ...]
    components: int


def interval(a: int, b: int, strands: int | None = None) -> BraidWord:
    """The word [a,b]: ascending s_a..s_{b-1}, descending s_{a-1}..s_b, [a,a] = 1."""
    n = strands if strands is not None else max(a, b, 1)
    if a < b:
        letters = tuple((i, 1) for i in range(a, b))
    elif a > b:
        letters = tuple((i, 1) for i in range(a - 1, b - 1, -1))
    else:
        letters = ()
    return BraidWord(n, letters)


_HEADER_RE = re.compile(r"\s*B\s*(\d+)\s*:(.*)\Z", re.S)
_ITEM_RE = re.compile(
    r"(?:s(?P<gen>\d+)|\[\s*(?P<a>\d+)\s*,\s*(?P<b>\d+)\s*\])(?:\^(?P<exp>[+-]?\d+))?"
)


def parse(text: str) -> BraidWord:
    """Parse ``"B3: s1^3 s2 [1,3]^2"``; see the README for the grammar."""
    m = _HEADER_RE.match(text)
    if not m:
        raise BraidSyntaxError(f"expected 'B<n>:' prefix in {text!r}")
    n = int(m.group(1))
    if n < 1:
        raise BraidSyntaxError("strand count must be positive")
    body = m.group(2)
    letters: list[tuple[int, int]] = []
    for tok in body.split():
        im = _ITEM_RE.fullmatch(tok)
        if not im:
            raise BraidSyntaxError(f"bad braid item {tok!r}")
        k = int(im.group("exp")) if im.group("exp") is not None else 1
        if im.group("gen") is not None:
            g = int(im.group("gen"))
            if not 1 <= g <= n - 1:
                raise IndexOutOfRange(f"generator s{g} not in B{n}")
            letters.append((g, k))
        else:
            a, b = int(im.group("a")), int(im.group("b"))
            if max(a, b) > n or min(a, b) < 1:
                raise IndexOutOfRange(f"interval [{a},{b}] not in B{n}")
            block = interval(a, b, n)
            if k >= 0:
                letters.extend(block.letters * k)
            else:
                letters.extend(inverse(block).letters * (-k))
    return BraidWord(n, tuple(letters))


def inverse(b: BraidWord) -> BraidWord:
    return BraidWord(b.strands, tuple((i, -e) for i, e in reversed(b.letters)))


def closure_shape(b: BraidWord) -> ClosureShape:
    perm = list(range(b.strands))
    # perm[p] = final position of the strand starting at p
    pos_of = list(range(b.strands))  # position -> starting strand
    for i, e in b.letters:
        if e % 2:
            pos_of[i - 1], pos_of[i] = pos_of[i], pos_of[i - 1]
    for p, s in enumerate(pos_of):
        perm[s] = p
    seen = [False] * b.strands
    cycles = 0
    for s in range(b.strands):
        if not seen[s]:
            cycles += 1
            while not seen[s]:
                seen[s] = True
                s = perm[s]
    return ClosureShape(b.writhe, tuple(p + 1 for p in perm), cycles)


def reflect(b: BraidWord) -> BraidWord:
    n = b.strands
    return BraidWord(n, tuple((n - i, e) for i, e in b.letters))


def free_reduce(b: BraidWord) -> BraidWord:
    out: list[list[int]] = []
    for i, e in b.letters:
        if out and out[-1][0] == i:
            out[-1][1] += e
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([i, e])
    return BraidWord(b.strands, tuple((i, e) for i, e in out))


def _cyclic_syllables(b: BraidWord) -> list[tuple[int, int]]:
    syl = list(free_reduce(b).letters)
    while len(syl) > 1 and syl[0][0] == syl[-1][0]:
        i, e = syl.pop()
        e0 = syl[0][1] + e
        if e0:
            syl[0] = (i, e0)
        else:
            syl.pop(0)
    return syl


def cyclic_rotate(b: BraidWord, k: int) -> BraidWord:
    """Move the first k unit letters to the end (a conjugation)."""
    flat = b.signed()
    if not flat:
        return b
    k %= len(flat)
    return BraidWord.from_signed(b.strands, flat[k:] + flat[:k])


def alternating_exponents(b: BraidWord) -> list[int]:
    """Exponents e_1..e_{2r} of a word sigma_1^e1 sigma_2^e2 ... in B_3.

    The word must alternate sigma_1, sigma_2 starting with sigma_1, end
    with sigma_2 and have all exponents positive.
    """
    if b.strands != 3:
        raise ShapeMismatch("alternating shape is defined in B_3 only")
    letters = free_reduce(b).letters
    if not letters or len(letters) % 2:
        raise ShapeMismatch(f"{b} is not of the form prod s1^a s2^b")
    for k, (i, e) in enumerate(letters):
        if i != (1 if k % 2 == 0 else 2) or e < 1:
            raise ShapeMismatch(f"{b} is not a positive alternating word")
    return [e for _, e in letters]


def positive_word(exponents: Sequence[int]) -> BraidWord:
    """sigma_1^e1 sigma_2^e2 sigma_1^e3 ... in B_3."""
    return BraidWord(3, tuple((1 if k % 2 == 0 else 2, e) for k, e in enumerate(exponents)))


def reverse(b: BraidWord) -> BraidWord:
    e = alternating_exponents(b)
    r = len(e) // 2
    if r < 2:
        raise ShapeMismatch("reverse needs rank at least two")
    # 1-indexed: e_1, e_{2r}, then for j = 2..r: e_{2r-2j+3}, e_{2r-2j+2}
    out = [e[0], e[2 * r - 1]]
    for j in range(2, r + 1):
        out += [e[2 * r - 2 * j + 2], e[2 * r - 2 * j + 1]]
    return positive_word(out)


def destabilize_reduce(gamma: BraidWord, m_plus_x: int, rho: int) -> BraidWord:
    """Rewrite gamma [1,m+x]^rho (in B_{m+x}) as gamma [rho,1]^x [1,m]^rho in B_m."""
    m = gamma.strands
    x = m_plus_x - m
    if not (1 <= rho <= m and m_plus_x >= 2 and x >= 0):
        raise ParameterOutOfRange(f"need 1 <= rho <= m, m+x >= 2, x >= 0 (m={m}, m+x={m_plus_x}, rho={rho})")
    tail = interval(rho, 1, m) ** x * interval(1, m, m) ** rho
    return BraidWord(m, gamma.letters + tail.letters)
