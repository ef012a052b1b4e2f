"""Block decomposition of V* for positive 3-braids, condensing, and the sign conjecture checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .alexfam import A, L_sum, R_sum, prod_decompose
from .braidword import BraidWord, _cyclic_syllables
from .errors import GapOverlap, NotCondensed, PreconditionViolated, ShapeMismatch
from .jones3 import rank2_vstar, split_vstar, vstar_positive
from .polyhalf import HalfLaurent, ZERO, coeff_vector, eps, is_ac, tpow

__all__ = [
    "BlockDecomp",
    "jform_M",
    "jform_sequences",
    "rank2_blocks",
    "general_blocks",
    "condense",
    "CondenseStep",
    "is_condensed",
    "ConjectureReport",
    "conjecture_check",
    "condensed_words",
]


@dataclass(frozen=True)
class BlockDecomp:
    exps: tuple[int, ...]
    B1: HalfLaurent
    gap_multiplier: int
    B2: HalfLaurent

    @property
    def w_star(self) -> int:
        return sum(self.exps[1:])

    @property
    def gap_start(self) -> int:
        return self.w_star + 1

    @property
    def gap_index(self) -> int:
        return self.exps[0] + 1 - self.w_star

    def gap(self) -> HalfLaurent:
        return A(self.gap_index).shift(self.gap_start) * (eps(self.w_star) * self.gap_multiplier)

    def reconstruct(self) -> HalfLaurent:
        return self.B1 + self.gap() + self.B2.shift(self.exps[0] + 2)


def _jform_sums(e: Sequence[int]) -> dict[int, int]:
    """m_j for odd j: sums over k_1 < ... < k_j, k_i of parity i+1, of e_{k_1}...e_{k_j}."""
    n = len(e)
    # positions are 1-indexed; a j-form starts at an even position

    @lru_cache(maxsize=None)
    def total(start: int, length: int, want_even: bool) -> int:
        if length == 0:
            return 1
        acc = 0
        for k in range(start, n + 1):
            if (k % 2 == 0) == want_even:
                acc += e[k - 1] * total(k + 1, length - 1, not want_even)
        return acc

    r = n // 2
    return {2 * k - 1: total(1, 2 * k - 1, True) for k in range(1, r + 1)}


def jform_sequences(n: int, j: int) -> list[tuple[int, ...]]:
    """Index sequences k_1 < ... < k_j in 1..n with k_i of the parity of i + 1."""
    out: list[tuple[int, ...]] = []

    def rec(start: int, prefix: list[int]):
        if len(prefix) == j:
            out.append(tuple(prefix))
            return
        parity = len(prefix) % 2  # 0 -> even position wanted
        for k in range(start, n + 1):
            if k % 2 == (0 if parity == 0 else 1):
                prefix.append(k)
                rec(k + 1, prefix)
                prefix.pop()

    rec(1, [])
    return out


def jform_M(exps: Sequence[int]) -> tuple[dict[int, int], int]:
    """(j-form sums m_j, M) with M = sum_k (-1)^k m_{2k-1}."""
    e = list(exps)
    if len(e) < 2 or len(e) % 2 or any(x < 1 for x in e):
        raise ShapeMismatch("jform_M needs an even-length list of positive exponents")
    m = _jform_sums(e)
    M = sum(eps(k) * m[2 * k - 1] for k in range(1, len(e) // 2 + 1))
    return m, M


def rank2_blocks(a: int, b: int, c: int, d: int) -> BlockDecomp:
    """Closed-form blocks of V* for s1^a s2^b s1^c s2^d with a >= b + c + d."""
    ws = b + c + d
    if min(a, b, c, d) < 1 or a < ws:
        raise PreconditionViolated("rank2_blocks needs positive exponents with a >= b+c+d")
    base1, base2, _ = rank2_vstar(a, b, c, d)
    dec = prod_decompose(a, [b, c, d])
    B1 = (
        base1
        + L_sum(b - 2).shift(2) * eps(a + c + d)
        + A(c + d).shift(b + 1) * (b * eps(a))
        + L_sum(d - 2).shift(2) * eps(a + b + c)
        + A(b + c).shift(d + 1) * (d * eps(a))
        + dec.f.shift(3)
        + tpow(ws, eps(a + 1) * b * c * d)
    )
    B2 = (
        base2
        + R_sum(b - 2) * eps(c + d)
        + R_sum(d - 2) * eps(b + c)
        + HalfLaurent({0: eps(1 + ws) * b * c * d})
        + dec.g.shift(1)
    )
    return BlockDecomp((a, b, c, d), B1, b * c * d - b - d, B2)


def general_blocks(exps: Sequence[int]) -> BlockDecomp:
    """Blocks of V* for any rank >= 2 word with e_1 >= e_2 + ... + e_2r."""
    e = tuple(int(x) for x in exps)
    if len(e) < 4 or len(e) % 2 or min(e) < 1:
        raise PreconditionViolated("general_blocks needs rank >= 2 and positive exponents")
    ws = sum(e[1:])
    if e[0] < ws:
        raise PreconditionViolated("general_blocks needs e_1 >= e_2 + ... + e_2r")
    _, M = jform_M(e)
    vs = vstar_positive(e)
    gap = A(e[0] + 1 - ws).shift(ws + 1) * (eps(ws) * M)
    rest = vs - gap
    B1 = rest.restrict(None, ws)
    window = rest.restrict(ws + 1, e[0] + 1)
    if not window.is_zero():
        raise GapOverlap(f"blocks leak into the gap window for {list(e)}: {window}")
    B2 = rest.restrict(e[0] + 2, None).shift(-(e[0] + 2))
    return BlockDecomp(e, B1, M, B2)


# condensing


@dataclass(frozen=True)
class CondenseStep:
    case: str
    before: tuple[int, ...]
    after: tuple[int, ...]
    twists: int


def _cyc_exps(b: BraidWord) -> list[list[int]]:
    """Cyclic syllables as [generator, exponent] of a positive B_3 word."""
    if b.strands != 3:
        raise ShapeMismatch("condense works in B_3")
    syl = _cyclic_syllables(b)
    if any(e < 1 for _, e in syl):
        raise ShapeMismatch(f"{b} is not a positive word")
    return [[i, e] for i, e in syl]


def _merge(syl: list[list[int]]) -> list[list[int]]:
    """Drop zero exponents and merge equal neighbours cyclically."""
    changed = True
    while changed:
        changed = False
        syl = [s for s in syl if s[1] != 0]
        out: list[list[int]] = []
        for s in syl:
            if out and out[-1][0] == s[0]:
                out[-1][1] += s[1]
                changed = True
            else:
                out.append(list(s))
        if len(out) > 1 and out[0][0] == out[-1][0]:
            out[0][1] += out.pop()[1]
            changed = True
        syl = out
    return syl


def _word_of(syl: list[list[int]]) -> BraidWord:
    if not syl:
        return BraidWord(3, ())
    k = next((j for j, s in enumerate(syl) if s[0] == 1), 0)
    rot = syl[k:] + syl[:k]
    if rot[0][0] != 1:
        # only sigma_2 present; reflect, which keeps the closure
        rot = [[3 - g, e] for g, e in rot]
    return BraidWord(3, tuple((g, e) for g, e in rot))


def _exps_of(syl) -> tuple[int, ...]:
    return tuple(e for _, e in _word_of(syl).letters)


def _is_condensed_syl(syl) -> bool:
    n = len(syl)
    if n < 4:
        return True
    ones = [k for k in range(n) if syl[k][1] == 1]
    if not ones:
        return True
    if len(ones) > 1:
        return False
    k = ones[0]
    return syl[k - 1][1] >= 3 and syl[(k + 1) % n][1] >= 3


def is_condensed(b: BraidWord) -> bool:
    return _is_condensed_syl(_cyc_exps(b))


def condense(b: BraidWord) -> tuple[int, BraidWord, list[CondenseStep]]:
    """Rewrite a positive B_3 word as [1,3]^(3a) gamma with gamma condensed.

    Returns (a, gamma, steps); every step keeps the closure unchanged.
    """
    syl = _merge(_cyc_exps(b))
    a = 0
    steps: list[CondenseStep] = []
    while len(syl) >= 4 and not _is_condensed_syl(syl):
        n = len(syl)
        before = _exps_of(syl)
        ones = [k for k in range(n) if syl[k][1] == 1]
        pair = next((k for k in ones if syl[(k + 1) % n][1] == 1), None)
        if pair is not None:
            # ... s_i^p s_j^q s_i s_j  ->  s_i^(p) s_i s_j s_i^q ... merged
            k = (pair + 1) % n
            rot = syl[k + 1:] + syl[:k + 1]
            # rot ends with (.., x^q, s_i^1, s_j^1)
            q = rot[-3][1]
            head = rot[:-3]
            new = head + [[rot[-2][0], 1], [rot[-1][0], 1], [rot[-2][0], q]]
            syl = _merge(new)
            steps.append(CondenseStep("adjacent-trivial", before, _exps_of(syl), 0))
            continue
        near_two = None
        for k in ones:
            if syl[(k + 1) % n][1] == 2:
                near_two = (k, 1)
                break
            if syl[k - 1][1] == 2:
                near_two = (k, -1)
                break
        if near_two is not None:
            k, side = near_two
            if side == 1:
                # s_i^p s_j s_i^2 s_j^q = Delta^2 s_i^(p-2) s_j^(q-1)
                prev, nxt, far = (k - 1) % n, (k + 1) % n, (k + 2) % n
                syl[prev][1] -= 2
                syl[far][1] -= 1
                drop = {k, nxt}
            else:
                # s_j^p s_i^2 s_j s_i^q = Delta^2 s_j^(p-1) s_i^(q-2)
                prev, far_back, nxt = (k - 1) % n, (k - 2) % n, (k + 1) % n
                syl[far_back][1] -= 1
                syl[nxt][1] -= 2
                drop = {k, prev}
            syl = _merge([s for j, s in enumerate(syl) if j not in drop])
            a += 1
            steps.append(CondenseStep("trivial-next-to-two", before, _exps_of(syl), 1))
            continue
        # two or more trivial syllables, all neighbours >= 3: slide one forward
        def gap_to_next(k):
            return min((j - k) % n for j in ones if j != k)

        k = min(ones, key=gap_to_next)
        prev, nxt, far = (k - 1) % n, (k + 1) % n, (k + 2) % n
        # s_i^p s_j s_i^q s_j^u -> s_i^(p-1) s_j^q s_i s_j^(u+1)
        q = syl[nxt][1]
        syl[prev][1] -= 1
        syl[k][1] = q
        syl[nxt][1] = 1
        syl[far][1] += 1
        syl = _merge(syl)
        steps.append(CondenseStep("slide-trivial", before, _exps_of(syl), 0))
    return a, _word_of(syl), steps


# conjecture checks


@dataclass
class ConjectureReport:
    exps: tuple[int, ...]
    writhe: int
    rank: int
    vstarstar: HalfLaurent
    claims: dict[str, bool | None] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(v is not False for v in self.claims.values())


def conjecture_check(b: BraidWord) -> ConjectureReport:
    """Test the sign, degree, leading-coefficient and support claims on V**."""
    syl = _cyc_exps(b)
    if len(syl) < 4 or not _is_condensed_syl(syl):
        raise NotCondensed(f"{b} is not a condensed word of rank >= 2")
    exps = _exps_of(syl)
    w = sum(exps)
    r = len(exps) // 2
    vs = vstar_positive(exps)
    vss = split_vstar(vs, w)
    if vss is None or vss.is_zero():
        report = ConjectureReport(exps, w, r, vss if vss is not None else ZERO)
        report.claims = {"signs": False, "no_trivial_degree": None, "one_trivial_degree": None, "support": False}
        return report
    lo, vec = coeff_vector(vss)
    deg = lo + len(vec) - 1
    signs = all(c == 0 or (c > 0) == (eps(r + 1 + (lo + j) + w) > 0) for j, c in enumerate(vec))
    n_trivial = sum(1 for e in exps if e == 1)
    claims: dict[str, bool | None] = {"signs": signs and is_ac(vss)}
    if n_trivial == 0:
        claims["no_trivial_degree"] = deg == w - r - 1 and vss.leading_coeff() == 1
        claims["one_trivial_degree"] = None
    else:
        claims["no_trivial_degree"] = None
        claims["one_trivial_degree"] = deg == w - r - 2 and vss.leading_coeff() == -1
    claims["support"] = lo == w - 2 - deg and all(c != 0 for c in vec)
    report = ConjectureReport(exps, w, r, vss, claims)
    return report


def _dihedral_key(e: tuple[int, ...]) -> tuple[int, ...]:
    n = len(e)
    rev = e[::-1]
    return min(min(s[k:] + s[:k] for k in range(n)) for s in (e, rev))


def condensed_words(max_writhe: int, min_rank: int = 2) -> Iterator[tuple[int, ...]]:
    """Condensed exponent sequences of rank >= min_rank and writhe <= max_writhe, one per dihedral class."""
    seen: set[tuple[int, ...]] = set()

    def compositions(left: int, parts: int, prefix: list[int], ones: int):
        if parts == 0:
            yield tuple(prefix)
            return
        for v in range(1, left - (parts - 1) + 1):
            if v == 1 and ones:
                continue
            prefix.append(v)
            yield from compositions(left - v, parts - 1, prefix, ones + (v == 1))
            prefix.pop()

    r = min_rank
    while 2 * r <= max_writhe:
        n = 2 * r
        for e in compositions(max_writhe, n, [], 0):
            if 1 in e:
                k = e.index(1)
                if e[k - 1] < 3 or e[(k + 1) % n] < 3:
                    continue
            key = _dihedral_key(e)
            if key not in seen:
                seen.add(key)
                yield key
        r += 1
