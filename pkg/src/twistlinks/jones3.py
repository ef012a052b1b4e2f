"""Closed-form Jones, Alexander and HOMFLY expressions for 2- and 3-braid links.

Conventions: V(T(2,2)) = -t^(1/2) - t^(5/2); V* is V with the factor
t^((w-2)/2) removed, and V* = eps_w (1 + t^2) + t^2 V** for positive words.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .alexfam import A, L_sum, R_sum
from .braidword import BraidWord, alternating_exponents, interval
from .errors import NotDivisible, PreconditionViolated, ShapeMismatch
from .oracle import (
    TwoVarPoly,
    conway,
    homfly_skein,
    kauffman_jones,
    specialize,
    torus_two_strand,
)
from .polyhalf import G, ONE, ZERO, HalfLaurent, exact_div, eps, tpow

__all__ = [
    "VStarPair",
    "jones_2braid",
    "alexander_2braid",
    "jones_3braid",
    "jones_torus3",
    "syllable_step_jones",
    "vstar",
    "vstar_positive",
    "vstarstar_rank1",
    "split_vstar",
    "rank2_vstar",
    "homfly_fulltwists",
    "jones_fulltwists",
    "jones_xy_fulltwists",
    "jones_2tier_tlink",
    "rank1_fulltwist_blocks",
]

ONE_T2 = HalfLaurent({0: 1, 4: 1})  # 1 + t^2
_ONE_PLUS_T = HalfLaurent({0: 1, 2: 1})
_UNKNOT_PAIR = HalfLaurent({1: -1, -1: -1})  # -(t^(1/2) + t^(-1/2))


@dataclass(frozen=True)
class VStarPair:
    shift: Fraction
    vstar: HalfLaurent
    vstarstar: HalfLaurent | None

    def jones(self) -> HalfLaurent:
        return self.vstar.shift(self.shift)


def _half(n: int) -> Fraction:
    return Fraction(n, 2)


def split_vstar(vstar_poly: HalfLaurent, w: int) -> HalfLaurent | None:
    """V** with V* = eps_w (1+t^2) + t^2 V**, or None when V* has no such form."""
    rest = vstar_poly - ONE_T2 * eps(w)
    if rest.is_zero():
        return ZERO
    if rest.has_half_exponents() or rest.min_half < 4:
        return None
    return rest.shift(-2)


def _to_vstar(v: HalfLaurent, w: int) -> HalfLaurent:
    out = v.shift(_half(2 - w))
    if out.has_half_exponents():
        raise ArithmeticError(f"half-integer residue after removing t^((w-2)/2): {out}")
    return out


def jones_2braid(w: int) -> HalfLaurent:
    """Jones polynomial of T(2, w) for any integer w."""
    return (ONE * eps(w) + A(w - 1).shift(2)).shift(_half(w - 1)) * -1


def alexander_2braid(w: int) -> HalfLaurent:
    return A(w).shift(_half(1 - w))


def jones_3braid(b: BraidWord, max_crossings: int | None = None) -> HalfLaurent:
    """Jones polynomial of a 3-braid closure from its writhe and Alexander polynomial."""
    if b.strands != 3:
        raise ShapeMismatch("jones_3braid needs a word in B_3")
    w = b.writhe
    delta = specialize(conway(b, max_crossings), "alexander")
    inner = tpow(w + 1) + G * eps(w) - (G * delta).shift(_half(w))
    return inner.shift(_half(w - 2))


def jones_torus3(m: int) -> HalfLaurent:
    """Jones polynomial of T(3, m), m >= 1."""
    if m < 1:
        raise PreconditionViolated("jones_torus3 needs m >= 1")
    tail = tpow(m + 1, 2) if m % 3 == 0 else tpow(m + 1, -1)
    return (ONE_T2 + tail).shift(m - 1)


def syllable_step_jones(beta: BraidWord, i: int, e: int, max_crossings: int | None = None) -> HalfLaurent:
    """V(beta s_i^e) from V(beta s_i) and V(beta) by the two-term syllable recursion."""
    with_one = beta * BraidWord(beta.strands, ((i, 1),))
    v1 = kauffman_jones(with_one, max_crossings)
    v0 = kauffman_jones(beta, max_crossings)
    return A(e).shift(_half(e - 1)) * v1 + A(e - 1).shift(_half(e + 2)) * v0


# fast Jones for positive 3-braids


def _cyclic_key(exps: tuple[int, ...]) -> tuple[int, ...]:
    n = len(exps)
    return min(exps[k:] + exps[:k] for k in range(n)) if n else exps


@lru_cache(maxsize=200_000)
def _jones_positive_cyclic(exps: tuple[int, ...]) -> HalfLaurent:
    """Jones of the closure of an alternating positive B_3 word given cyclically.

    ``exps`` alternates sigma_1, sigma_2 exponents; odd rotations amount to a
    braid reflection, which does not change the closure.
    """
    n = len(exps)
    if n == 0:
        return _UNKNOT_PAIR * _UNKNOT_PAIR
    if n == 1:
        return _UNKNOT_PAIR * jones_2braid(exps[0])
    if n == 2:
        return jones_2braid(exps[0]) * jones_2braid(exps[1])
    if all(e == 1 for e in exps):
        return jones_torus3(n // 2)
    k = max(range(n), key=lambda j: (exps[j], -j))
    e = exps[k]
    # rotate so the chosen syllable is last
    rot = exps[k + 1:] + exps[:k + 1]
    with_one = rot[:-1] + (1,)
    head = rot[:-1]
    merged = (head[0] + head[-1],) + head[1:-1]
    v1 = _jones_positive_cyclic(_cyclic_key(with_one))
    v0 = _jones_positive_cyclic(_cyclic_key(merged))
    return A(e).shift(_half(e - 1)) * v1 + A(e - 1).shift(_half(e + 2)) * v0


def jones_positive(exps: Sequence[int]) -> HalfLaurent:
    """Jones polynomial of the closure of s1^e1 s2^e2 ... (all e_i >= 1)."""
    exps = tuple(int(e) for e in exps)
    if any(e < 1 for e in exps) or len(exps) % 2:
        raise ShapeMismatch("need an even number of positive exponents")
    return _jones_positive_cyclic(_cyclic_key(exps))


def vstar_positive(exps: Sequence[int]) -> HalfLaurent:
    """V* of a positive alternating word via the memoized syllable recursion."""
    return _to_vstar(jones_positive(exps), sum(exps))


def vstarstar_rank1(a: int, b: int) -> HalfLaurent:
    """Closed form of V** for s1^a s2^b, a, b >= 1."""
    w = a + b
    lo, hi = min(a, b), max(a, b)
    if lo == 1 and hi == 2:
        return ZERO
    if lo == 1 and hi == 1:
        return -ONE
    if lo == 1:
        return A(w - 3).shift(1) * -1
    return (
        ONE * eps(w)
        + A(a - 2).shift(1) * eps(b)
        + A(b - 2).shift(1) * eps(a)
        + (A(a - 1) * A(b - 1)).shift(2)
    )


def vstar(b: BraidWord, method: str = "eq11", max_crossings: int | None = None) -> VStarPair:
    """V* and V** of a positive alternating B_3 word.

    ``method`` is "eq11" (writhe plus Conway oracle) or "recursion" (the
    syllable recursion, usable far beyond the oracle's crossing limit).
    """
    exps = alternating_exponents(b)
    w = sum(exps)
    if method == "eq11":
        v = jones_3braid(b, max_crossings)
    elif method == "recursion":
        v = jones_positive(exps)
    else:
        raise ValueError(f"unknown method {method!r}")
    vs = _to_vstar(v, w)
    vss = split_vstar(vs, w)
    if len(exps) == 2 and vss != vstarstar_rank1(*exps):
        raise ArithmeticError(f"rank-one V** mismatch for {exps}")
    return VStarPair(_half(w - 2), vs, vss)


def rank2_vstar(a: int, b: int, c: int, d: int) -> tuple[HalfLaurent, HalfLaurent, HalfLaurent]:
    """(B1, B2, Q) with V* = B1 + t^(a+2) B2 + Q for s1^a s2^b s1^c s2^d."""
    if min(a, b, c, d) < 1:
        raise PreconditionViolated("rank2_vstar needs positive exponents")
    w = a + b + c + d
    AbAd = A(b) * A(d)
    b1 = (
        ONE_T2 * eps(w)
        + tpow(b + d + 1, eps(a + c))
        + AbAd.shift(c + 2) * eps(a)
        + AbAd.shift(2) * (2 * eps(a + c - 1))
    )
    b2 = (
        tpow(c - 1, eps(b + d))
        + A(b) * A(c) * eps(d)
        + AbAd * eps(c)
        + A(c) * A(d) * eps(b)
    )
    q = (
        (A(a) * A(b)).shift(2) * eps(c + d)
        + (A(a) * A(d)).shift(2) * eps(b + c)
        + (A(a) * A(b) * A(c) * A(d)).shift(3)
    )
    return b1, b2, q


def _torus_homfly(w: int) -> TwoVarPoly:
    return torus_two_strand(w)[1]


def _vpow(k: int) -> TwoVarPoly:
    return TwoVarPoly.mono(k, 0)


def homfly_fulltwists(a: int, gamma: BraidWord, max_crossings: int | None = None) -> TwoVarPoly:
    """HOMFLY of the closure of [1,3]^(3a) gamma from P(gamma) and torus terms."""
    if a == 0:
        raise PreconditionViolated("homfly_fulltwists needs a != 0")
    if gamma.strands != 3:
        raise ShapeMismatch("gamma must be a word in B_3")
    p = homfly_skein(gamma, max_crossings)
    w = gamma.writhe
    if a > 0:
        out = _vpow(6 * a) * p
        for j in range(1, a + 1):
            out = out + _vpow(6 * a - 6 * j) * _torus_homfly(w + 6 * j - 1)
            out = out - _vpow(6 + 6 * a - 6 * j) * _torus_homfly(w + 6 * j - 5)
        return out
    n = -a
    out = _vpow(-6 * n) * p
    for j in range(1, n + 1):
        out = out + _vpow(6 * j - 6 * n) * _torus_homfly(w - 6 * j + 1)
        out = out - _vpow(6 * j - 6 * n - 6) * _torus_homfly(w - 6 * j + 5)
    return out


def jones_fulltwists(a: int, gamma: BraidWord, max_crossings: int | None = None) -> tuple[Fraction, HalfLaurent, HalfLaurent]:
    """(shift, first block, B2) with V([1,3]^(3a) gamma) = t^shift (first + t^(3a) B2)."""
    if gamma.strands != 3:
        raise ShapeMismatch("gamma must be a word in B_3")
    wg = gamma.writhe
    vg = kauffman_jones(gamma, max_crossings)
    first = ONE_T2 * eps(wg)
    b2 = vg.shift(_half(2 - wg)) + ONE_T2 * eps(wg + 1)
    return _half(6 * a + wg - 2), first, b2


_ONE_PLUS_T_SQ = _ONE_PLUS_T * _ONE_PLUS_T


def jones_xy_fulltwists(x: int, y: int, z: int) -> VStarPair:
    """V* of the closure of [1,3]^z s1^x s2^y for x, y, z >= 0."""
    if min(x, y, z) < 0:
        raise PreconditionViolated("jones_xy_fulltwists needs x, y, z >= 0")
    a, res = divmod(z, 3)
    w = x + y + 2 * z
    first = ONE_T2 * eps(x + y)
    if res == 0:
        inner = (
            ONE * eps(x + y + 1)
            + A(x - 1) * eps(y)
            + A(y - 1) * eps(x)
            + (A(x - 1) * A(y - 1)).shift(2)
        )
        vs = first + inner.shift(3 * a + 2)
    elif res == 1:
        vs = first - A(x + y - 1).shift(3 * a + 3)
    else:
        num = tpow(x + y) + (G * eps(x - 1)).shift(y) + (G * eps(y - 1)).shift(x) + tpow(2, eps(x + y))
        try:
            q = exact_div(num, _ONE_PLUS_T_SQ)
        except NotDivisible as exc:  # pragma: no cover - would mean a transcription error
            raise ArithmeticError("closed form not divisible by (1+t)^2") from exc
        vs = first + q.shift(3 * a + 3)
    return VStarPair(_half(w - 2), vs, split_vstar(vs, w))


def jones_2tier_tlink(x: int, s: int) -> HalfLaurent:
    """Jones polynomial of T((2,x),(3,s)); x = 0 gives the torus link T(3,s)."""
    if x < 0 or s < 1:
        raise PreconditionViolated("need x >= 0 and s >= 1")
    a, res = divmod(s, 3)
    base = ONE_T2 * eps(x)
    if res == 0:
        return (base + (ONE * eps(x) + tpow(x)).shift(3 * a + 1)).shift(_half(6 * a + x - 2))
    if res == 1:
        return (base - A(x - 1).shift(3 * a + 3)).shift(_half(6 * a + x))
    return (base - A(x + 1).shift(3 * a + 3)).shift(_half(6 * a + x + 2))


def rank1_fulltwist_blocks(x: int, y: int, z: int) -> tuple[HalfLaurent, HalfLaurent]:
    """(first block, B2) with V* = first + t^(z+2) B2 for [1,3]^z s1^x s2^y, x >= y >= 3."""
    if not (x >= y >= 3 and z >= 3 and z % 3 == 0):
        raise PreconditionViolated("need x >= y >= 3 and z a positive multiple of 3")
    first = ONE_T2 * eps(x + y)
    b2 = (
        L_sum(y - 2) * eps(x)
        + tpow(y - 1, eps(x + 1) * (y - 1))
        + A(x - y - 1).shift(y) * (eps(y) * y)
        + tpow(x - 1, eps(y + 1) * (y - 1))
        + R_sum(y - 2).shift(x)
    )
    return first, b2


def full_twist_word(a: int) -> BraidWord:
    """[1,3]^(3a) for any integer a."""
    return interval(1, 3, 3) ** (3 * a)
