"""T-links T((r1,s1),...,(rk,sk)): braids, duality, braid index and classification at braid index <= 3."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from .braidword import BraidWord, free_reduce, interval
from .errors import (
    BraidIndexTooLarge,
    NotRepresentable,
    ParameterOutOfRange,
    PreconditionViolated,
    ShapeMismatch,
    TLinkSyntaxError,
)
from .jones3 import jones_2braid, jones_xy_fulltwists
from .polyhalf import HalfLaurent

__all__ = [
    "TLink",
    "CanonicalForm3",
    "TwoBraidLink",
    "parse_tlink",
    "parse_canonical",
    "normalize",
    "to_braid",
    "dual",
    "braid_index",
    "max_tiers_check",
    "symmetry_family",
    "canonical_xyz",
    "canonical_form",
    "xyz_shape",
    "tier_reduce",
    "equal_links",
    "closed_form_jones",
    "torus_detect",
    "representative_forms",
]


@dataclass(frozen=True, order=True)
class TLink:
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(r), int(s)) for r, s in self.pairs)
        if not pairs:
            raise ParameterOutOfRange("a T-link needs at least one tier")
        if pairs[0][0] < 2:
            raise ParameterOutOfRange("T-links need r_1 >= 2")
        for (r1, _), (r2, _) in zip(pairs, pairs[1:]):
            if r2 < r1:
                raise ParameterOutOfRange("T-link r values must be non-decreasing")
        if any(s < 1 for _, s in pairs):
            raise ParameterOutOfRange("T-link s values must be positive")
        object.__setattr__(self, "pairs", pairs)

    @property
    def tiers(self) -> int:
        return len(self.pairs)

    @property
    def r(self) -> list[int]:
        return [r for r, _ in self.pairs]

    @property
    def s(self) -> list[int]:
        return [s for _, s in self.pairs]

    def __str__(self) -> str:
        return "T(" + ",".join(f"({r},{s})" for r, s in self.pairs) + ")"


@dataclass(frozen=True, order=True)
class CanonicalForm3:
    x: int
    y: int
    z: int

    def __post_init__(self):
        if not (self.x >= self.y >= 0 and self.z >= 3 and self.z % 3 == 0):
            raise ParameterOutOfRange(f"not a canonical triple: {(self.x, self.y, self.z)}")

    def braid(self) -> BraidWord:
        return xyz_braid(self.x, self.y, self.z)

    def __str__(self) -> str:
        return f"beta({self.x},{self.y},{self.z})"


@dataclass(frozen=True, order=True)
class TwoBraidLink:
    """The closure of sigma_1^n in B_2, i.e. T(2, n); n = 1 is the unknot."""

    n: int

    def __str__(self) -> str:
        return f"T(2,{self.n})"


_TLINK_RE = re.compile(r"\s*T\s*\((.*)\)\s*\Z", re.S)
_PAIR_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")
_LIST_RE = re.compile(r"\s*\(\s*\d+\s*,\s*\d+\s*\)(?:\s*,\s*\(\s*\d+\s*,\s*\d+\s*\))*\s*")
_PLAIN_RE = re.compile(r"\s*(\d+)\s*,\s*(\d+)\s*\Z")
_CANON_RE = re.compile(r"\s*beta\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*\Z")


def parse_tlink(text: str) -> TLink:
    """Parse ``T((2,4),(3,4))``; ``T(p,q)`` is accepted as the one-tier torus link."""
    m = _TLINK_RE.match(text)
    if not m:
        raise TLinkSyntaxError(f"expected T(...) in {text!r}")
    body = m.group(1)
    plain = _PLAIN_RE.match(body)
    if plain:
        pairs = [(int(plain.group(1)), int(plain.group(2)))]
    elif _LIST_RE.fullmatch(body):
        pairs = [(int(r), int(s)) for r, s in _PAIR_RE.findall(body)]
    else:
        raise TLinkSyntaxError(f"bad tier list in {text!r}")
    try:
        return TLink(tuple(pairs))
    except ParameterOutOfRange as exc:
        raise TLinkSyntaxError(str(exc)) from exc


def parse_canonical(text: str) -> CanonicalForm3:
    m = _CANON_RE.match(text)
    if not m:
        raise TLinkSyntaxError(f"expected beta(x,y,z) in {text!r}")
    return CanonicalForm3(int(m.group(1)), int(m.group(2)), int(m.group(3)))


def to_braid(L: TLink) -> BraidWord:
    n = L.pairs[-1][0]
    letters: list[tuple[int, int]] = []
    for r, s in L.pairs:
        letters.extend(interval(1, r, n).letters * s)
    return BraidWord(n, tuple(letters))


def normalize(L: TLink) -> TLink:
    """Merge equal r values and absorb a final tier with s_k = 1 into the one before.

    A one-tier T((r,1)) is the unknot and normalizes to T((2,1)).
    """
    pairs: list[list[int]] = []
    for r, s in L.pairs:
        if pairs and pairs[-1][0] == r:
            pairs[-1][1] += s
        else:
            pairs.append([r, s])
    while pairs[-1][1] == 1:
        if len(pairs) == 1:
            return TLink(((2, 1),))
        pairs.pop()
        pairs[-1][1] += 1
    return TLink(tuple((r, s) for r, s in pairs))


def _is_unknot(L: TLink) -> bool:
    return L.tiers == 1 and L.pairs[0][1] == 1


def _require_normalized(L: TLink) -> None:
    if normalize(L) != L:
        raise PreconditionViolated(f"{L} is not tier-normalized; call normalize first")


def dual(L: TLink) -> TLink:
    _require_normalized(L)
    if _is_unknot(L):
        return L
    r, s, k = L.r, L.s, L.tiers
    rr = [0] + r
    rbar = [sum(s[k - i:]) for i in range(1, k + 1)]
    sbar = [rr[k + 1 - i] - rr[k - i] for i in range(1, k + 1)]
    return TLink(tuple(zip(rbar, sbar)))


def braid_index(L: TLink) -> tuple[int, int, int]:
    """(b, i0, j0) from the r / r-bar comparison rule."""
    _require_normalized(L)
    if _is_unknot(L):
        return 1, 1, 1
    k = L.tiers
    r = [0] + L.r
    rbar = [0] + dual(L).r
    i0 = min(i for i in range(1, k + 1) if r[i] >= rbar[k - i])
    j0 = min(j for j in range(1, k + 1) if rbar[j] >= r[k - j])
    b = min(r[i0], rbar[j0])
    if r[i0] == rbar[k - i0]:
        expected_j0, expected_b = k - i0, r[i0]
    else:
        expected_j0 = 1 + k - i0
        expected_b = min(r[i0], rbar[1 + k - i0])
    if (j0, b) != (expected_j0, expected_b) or any(r[i] < i + 1 for i in range(1, k + 1)):
        raise ArithmeticError(f"braid index refinements fail for {L}")
    return b, i0, j0


def max_tiers_check(L: TLink, b: int | None = None) -> bool:
    """True iff k <= 2b - 2, with the equality shape checked when k = 2b - 2.

    ``b`` overrides the computed braid index (used to exercise the checker).
    """
    _require_normalized(L)
    if b is None:
        b, i0, j0 = braid_index(L)
    else:
        _, i0, j0 = braid_index(L)
    k = L.tiers
    if k > 2 * b - 2 and not _is_unknot(L):
        return False
    if k == 2 * b - 2:
        r, rbar = L.r, dual(L).r
        if i0 != b - 1 or j0 != b - 1:
            return False
        return all(r[i - 1] == i + 1 == rbar[i - 1] for i in range(1, b))
    return True


# symmetry families


def _swap_last(L: TLink) -> TLink | None:
    pairs = list(L.pairs)
    r_k, s_k = pairs[-1]
    prev = pairs[-2][0] if len(pairs) > 1 else 0
    if s_k != r_k and r_k % s_k == 0 and prev <= s_k <= r_k and s_k >= 2:
        pairs[-1] = (s_k, r_k)
        return normalize(TLink(tuple(pairs)))
    return None


def _two_tier_moves(L: TLink) -> list[TLink]:
    if L.tiers != 2:
        return []
    (m, y), (n, rho) = L.pairs
    if rho != m:
        return []
    out = []
    S = n + y
    delta = n % m
    for lam in range(1, (S - delta - 1) // m + 1):
        n2 = lam * m + delta
        y2 = S - n2
        if n2 >= m and y2 >= 1:
            out.append(normalize(TLink(((m, y2), (n2, m)))))
    if y >= m:
        out.append(normalize(TLink(((m, n), (y, m)))))
    return out


def symmetry_family(L: TLink) -> list[TLink]:
    """All T-link parameterizations reachable by the last-tier swap and the
    T((m,y),(n,m)) family moves, sorted."""
    L = normalize(L)
    start_moves = _two_tier_moves(L) + ([x] if (x := _swap_last(L)) else [])
    if not start_moves:
        raise ShapeMismatch(f"{L} admits none of the symmetry moves")
    seen = {L}
    todo = [L]
    while todo:
        cur = todo.pop()
        nxt = _two_tier_moves(cur)
        sw = _swap_last(cur)
        if sw is not None:
            nxt.append(sw)
        for c in nxt:
            if c not in seen:
                seen.add(c)
                todo.append(c)
    return sorted(seen)


# canonical forms


def xyz_braid(x: int, y: int, z: int) -> BraidWord:
    """sigma_1^x sigma_2^y [1,3]^z in B_3."""
    return BraidWord(3, ((1, x), (2, y)) + interval(1, 3, 3).letters * z)


def canonical_xyz(x: int, y: int, z: int) -> CanonicalForm3:
    if min(x, y, z) < 0:
        raise ParameterOutOfRange("x, y, z must be non-negative")
    res = z % 3
    if res == 1:
        x, y, z = 1 + x + y, 1, z - 1
    elif res == 2:
        if x >= 1 and y >= 1:
            x, y, z = x - 1, y - 1, z + 1
        else:
            x, y, z = 3 + max(x, y), 1, z - 2
    if z == 0:
        raise NotRepresentable("the closure has braid index below 3 or is split/composite (z = 0)")
    if x < y:
        x, y = y, x
    return CanonicalForm3(x, y, z)


def xyz_shape(b: BraidWord) -> tuple[int, int, int]:
    """Read (x, y, z) off a word sigma_1^x sigma_2^y [1,3]^z, taking z maximal."""
    if b.strands != 3:
        raise ShapeMismatch("need a word in B_3")
    flat = free_reduce(b).signed()
    if any(g < 0 for g in flat):
        raise ShapeMismatch(f"{b} is not positive")
    for z in range(len(flat) // 2, -1, -1):
        tail = flat[len(flat) - 2 * z:] if z else []
        if tail != [1, 2] * z:
            continue
        head = flat[:len(flat) - 2 * z]
        x = 0
        while x < len(head) and head[x] == 1:
            x += 1
        if all(g == 2 for g in head[x:]):
            return x, len(head) - x, z
    raise ShapeMismatch(f"{b} is not of the form s1^x s2^y [1,3]^z")


def canonical_form(b: BraidWord) -> CanonicalForm3:
    return canonical_xyz(*xyz_shape(b))


def torus_detect(c: CanonicalForm3 | TwoBraidLink) -> tuple[int, int] | None:
    if isinstance(c, TwoBraidLink):
        return (2, c.n)
    if (c.x, c.y) == (0, 0):
        return (3, c.z)
    if (c.x, c.y) == (1, 1):
        return (3, c.z + 1)
    if (c.x, c.y) == (3, 1):
        return (3, c.z + 2)
    return None


# reduction of index <= 3 T-links

Route = Callable[[TLink], tuple[int, int, int] | None]


def _two_tier(L: TLink):
    (m, y), (n, rho) = L.pairs
    if m == 2 and n == 3:
        return (y, 0, rho)
    if m == 2 and rho == 3:
        return (y, 0, n)
    if m == 3 and rho == 3:
        if n % 3 == 0 or y % 3 == 0:
            return (0, 0, n + y)
        base = y - y % 3 + n - n % 3
        pair = {n % 3, y % 3}
        if pair == {1}:
            return (2, 2, base)
        if pair == {1, 2}:
            return (5, 1, base)
        return (2, 0, base + 3)
    if m == 3 and rho == 2:
        return (n - 3, 0, y + 2)
    if m > 3 and y == 1 and rho == 2:
        return (n - m, 0, m)
    return None


def _three_tier(L: TLink):
    (r1, s1), (r2, s2), (r3, s3) = L.pairs
    if r1 == 2 and r2 == 3 and s3 == 2:
        res = s2 % 3
        if res == 0:
            return (s1 + r3, 1, s2)
        if res == 1:
            return (s1, r3 - 3, s2 + 2)
        return (s1 + 1, r3 - 2, s2 + 1)
    if r1 == 3 and s2 == 1 and s3 == 2:
        d = r3 - r2
        a1, a2 = s1 % 3, r2 % 3
        if a1 == 0:
            return (d, 0, s1 + r2)
        if a1 == 2:
            return (d + 2, 0, s1 + r2 - 1)
        if a2 == 0:
            return (d + 1, 1, s1 + r2 - 1)
        if a2 == 1:
            return (d + 2, 2, s1 + r2 - 2)
        return (d + 5, 1, s1 + r2 - 3)
    return None


_FOUR_TIER = {
    (0, 0): lambda s1, D, z: (s1, D, z),
    (0, 1): lambda s1, D, z: (s1 + 1, D + 1, z - 1),
    (0, 2): lambda s1, D, z: (s1 + D + 3, 1, z - 2),
    (1, 0): lambda s1, D, z: (s1 + 1, D + 1, z - 1),
    (1, 1): lambda s1, D, z: (s1 + 2, D + 2, z - 2),
    (1, 2): lambda s1, D, z: (s1 + D + 5, 1, z - 3),
    (2, 0): lambda s1, D, z: (s1 + D + 3, 1, z - 2),
    (2, 1): lambda s1, D, z: (s1 + D + 5, 1, z - 3),
    (2, 2): lambda s1, D, z: (s1 + D + 2, 0, z - 1),
}


def _four_tier(L: TLink):
    (r1, s1), (r2, s2), (r3, s3), (r4, s4) = L.pairs
    if (r1, r2, s3, s4) != (2, 3, 1, 2):
        return None
    return _FOUR_TIER[(s2 % 3, r3 % 3)](s1, r4 - r3, s2 + r3)


_ROUTES: dict[int, Route] = {2: _two_tier, 3: _three_tier, 4: _four_tier}


def tier_reduce(L: TLink) -> CanonicalForm3 | TwoBraidLink:
    """Canonical description of a T-link of braid index at most 3."""
    L = normalize(L)
    b, _, _ = braid_index(L)
    if b > 3:
        raise BraidIndexTooLarge(f"{L} has braid index {b}")
    if b == 1:
        return TwoBraidLink(1)
    k = L.tiers
    if b == 2:
        if k == 1:
            r, s = L.pairs[0]
            return TwoBraidLink(s if r == 2 else r)
        (_, y), (n, _) = L.pairs
        return TwoBraidLink(n + y)
    if k == 1:
        r, s = L.pairs[0]
        return canonical_xyz(0, 0, s if r == 3 else r)
    route = _ROUTES.get(k)
    if route is not None:
        for cand in (L, dual(L)):
            xyz = route(cand)
            if xyz is not None:
                return canonical_xyz(*xyz)
    raise ShapeMismatch(f"no reduction route for the index-3 T-link {L}")


def _as_class(obj) -> CanonicalForm3 | TwoBraidLink:
    if isinstance(obj, (CanonicalForm3, TwoBraidLink)):
        return obj
    if isinstance(obj, TLink):
        return tier_reduce(obj)
    if isinstance(obj, BraidWord):
        return canonical_form(obj)
    raise TypeError(f"cannot classify {obj!r}")


def closed_form_jones(obj) -> HalfLaurent:
    c = _as_class(obj)
    if isinstance(c, TwoBraidLink):
        return jones_2braid(c.n)
    return jones_xy_fulltwists(c.x, c.y, c.z).jones()


def _family_equal(a: TLink, b: TLink) -> bool | None:
    """True when one T-link lies in the other's symmetry family; None when undecided."""
    a, b = normalize(a), normalize(b)
    for L, other in ((a, b), (b, a)):
        try:
            if other in symmetry_family(L):
                return True
        except ShapeMismatch:
            continue
    return None


def equal_links(a, b, cross_check: bool = True) -> bool:
    """Link equality for braid index <= 3; larger index only through symmetry families."""
    if isinstance(a, TLink) and isinstance(b, TLink):
        ba, bb = braid_index(normalize(a))[0], braid_index(normalize(b))[0]
        if ba != bb:
            return False
        if ba > 3:
            if _family_equal(a, b):
                return True
            raise BraidIndexTooLarge(f"cannot decide {a} = {b} above braid index 3")
    ca, cb = _as_class(a), _as_class(b)
    same = ca == cb
    if cross_check and same != (closed_form_jones(ca) == closed_form_jones(cb)):
        raise ArithmeticError(f"canonical and Jones comparisons disagree for {ca}, {cb}")
    return same


# T-link forms of a canonical class


def _class_forms(x: int, y: int, z: int) -> list[TLink]:
    if x == y == 0:
        return [TLink(((3, z),))]
    if y == 0:
        return [TLink(((2, x), (3, z)))]
    if x == y == 1:
        return [TLink(((3, z + 1),))]
    out = []
    if (x, y) == (3, 1):
        out.append(TLink(((3, z + 2),)))
    if y == 1:
        out.append(TLink(((2, x - 1), (3, z + 1))))
        return out
    if x == y == 2:
        out.append(TLink(((3, z - 2), (4, 3))))
    out.append(TLink(((2, x - 1), (3, z - 1), (2 + y, 2))))
    return out


def _tl(*pairs) -> TLink | None:
    try:
        return TLink(tuple(pairs))
    except ParameterOutOfRange:
        return None


def _duplicate_forms(x: int, y: int, z: int) -> list[TLink]:
    out: list[TLink | None] = []
    mult3 = lambda lo, hi: [v for v in range(lo, hi + 1) if v % 3 == 0]
    # two-tier T((3, .), (., 3)) families
    if (x, y) == (0, 0):
        out += [_tl((3, v), (z - v, 3)) for v in mult3(3, z - 6)]
    elif (x, y) == (1, 1):
        out += [_tl((3, 1 + v), (z - v, 3)) for v in mult3(0, z - 6)]
        out += [_tl((3, v), (1 + z - v, 3)) for v in mult3(3, z - 3)]
    elif (x, y) == (3, 1):
        out += [_tl((3, 2 + v), (z - v, 3)) for v in mult3(0, z - 6)]
        out += [_tl((3, v), (2 + z - v, 3)) for v in mult3(3, z - 3)]
    elif (x, y) == (2, 2):
        out += [_tl((3, 1 + v), (1 + z - v, 3)) for v in mult3(0, z - 3)]
    elif (x, y) == (5, 1):
        out += [_tl((3, 2 + v), (1 + z - v, 3)) for v in mult3(0, z - 3)]
        out += [_tl((3, 1 + v), (2 + z - v, 3)) for v in mult3(0, z - 3)]
    elif (x, y) == (2, 0):
        out += [_tl((3, v - 1), (2 + z - v, 3)) for v in mult3(3, z - 3)]
    # three-tier forms with r_1 = s_3
    if x >= 2 and y >= 2:
        for p, q in {(x, y), (y, x)}:
            out.append(_tl((2, p), (3, z - 2), (3 + q, 2)))
            out.append(_tl((2, q), (z, 1), (p + z, 2)))
            out.append(_tl((2, p - 1), (3, z - 1), (2 + q, 2)))
            out.append(_tl((2, q - 1), (z + 1, 1), (p + z, 2)))
    # three-tier forms with r_1 != s_3
    if y == 2 and x >= 3:
        for r2 in range(4, z + 2):
            if r2 % 3 == 1:
                out.append(_tl((2, x - 2), (3, r2 - 3), (z + 5 - r2, 3)))
                out.append(_tl((3, z + 2 - r2), (r2, 1), (x + r2 - 2, 2)))
    return [L for L in out if L is not None]


def representative_forms(c: CanonicalForm3) -> list[TLink]:
    """Known T-link parameterizations of the class c, each confirmed by tier_reduce."""
    forms: set[TLink] = set()
    for L in _class_forms(c.x, c.y, c.z) + _duplicate_forms(c.x, c.y, c.z):
        L = normalize(L)
        for cand in (L, dual(L)):
            if tier_reduce(cand) != c:
                raise ArithmeticError(f"{cand} does not reduce to {c}")
            forms.add(cand)
    return sorted(forms, key=lambda L: (L.tiers, L.pairs))
