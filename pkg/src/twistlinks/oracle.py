"""Brute-force link invariants of braid closures.

Two independent routes are provided: the Kauffman bracket state sum for
the Jones polynomial, and a skein tree for the HOMFLY polynomial (and the
Conway polynomial as its v = 1 shadow).  Everything else in the package is
tested against these.
"""

from __future__ import annotations

from typing import Mapping

import numpy as np

from .braidword import BraidWord, closure_shape
from .errors import CrossingLimitExceeded, ZeroPolynomial
from .polyhalf import ONE, ZERO, HalfLaurent, exact_div, tpow

__all__ = [
    "DEFAULT_CROSSING_LIMIT",
    "TwoVarPoly",
    "kauffman_jones",
    "bracket_state_counts",
    "homfly_skein",
    "conway",
    "torus_two_strand",
    "specialize",
    "mfw_bound",
    "DELTA",
]

DEFAULT_CROSSING_LIMIT = 16


class TwoVarPoly:
    """Laurent polynomial in v and z with integer coefficients."""

    __slots__ = ("_terms", "_key")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        items = sorted((k, c) for k, c in (terms or {}).items() if c)
        self._terms = dict(items)
        self._key = tuple(items)

    @classmethod
    def mono(cls, v: int = 0, z: int = 0, coeff: int = 1) -> "TwoVarPoly":
        return cls({(v, z): coeff})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = TwoVarPoly.mono(coeff=other) if other else TwoVarPoly()
        if not isinstance(other, TwoVarPoly):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __add__(self, other: "TwoVarPoly") -> "TwoVarPoly":
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return TwoVarPoly(acc)

    def __neg__(self) -> "TwoVarPoly":
        return TwoVarPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "TwoVarPoly") -> "TwoVarPoly":
        return self + (-other)

    def __mul__(self, other) -> "TwoVarPoly":
        if isinstance(other, int):
            return TwoVarPoly({k: c * other for k, c in self._terms.items()})
        acc: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                acc[k] = acc.get(k, 0) + c1 * c2
        return TwoVarPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TwoVarPoly":
        out = TwoVarPoly.mono()
        for _ in range(n):
            out = out * self
        return out

    def shift(self, dv: int = 0, dz: int = 0) -> "TwoVarPoly":
        return TwoVarPoly({(a + dv, b + dz): c for (a, b), c in self._terms.items()})

    def mirror(self) -> "TwoVarPoly":
        """P(-1/v, z), the polynomial of the mirror image."""
        return TwoVarPoly({(-a, b): c * (-1 if a % 2 else 1) for (a, b), c in self._terms.items()})

    def v_degrees(self) -> tuple[int, int]:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no v-degree")
        vs = [a for a, _ in self._terms]
        return min(vs), max(vs)

    def at_v1(self) -> "TwoVarPoly":
        acc: dict[tuple[int, int], int] = {}
        for (_, b), c in self._terms.items():
            acc[(0, b)] = acc.get((0, b), 0) + c
        return TwoVarPoly(acc)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in self._terms.items():
            mono = "*".join(
                s for s in (
                    "" if a == 0 else ("v" if a == 1 else f"v^{a}"),
                    "" if b == 0 else ("z" if b == 1 else f"z^{b}"),
                ) if s
            )
            body = mono if mono and abs(c) == 1 else (f"{abs(c)}*{mono}" if mono else str(abs(c)))
            sign = "-" if c < 0 else "+"
            parts.append(("-" if c < 0 else "") + body if not parts else f"{sign} {body}")
        return " ".join(parts)

    __repr__ = __str__


ONE2 = TwoVarPoly.mono()
ZERO2 = TwoVarPoly()
DELTA = TwoVarPoly({(-1, -1): 1, (1, -1): -1})
_VZ = TwoVarPoly.mono(1, 1)
_V2 = TwoVarPoly.mono(2, 0)
_VM2 = TwoVarPoly.mono(-2, 0)
_MVMZ = TwoVarPoly.mono(-1, 1, -1)
_Z = TwoVarPoly.mono(0, 1)


def _check_limit(b: BraidWord, limit: int | None) -> None:
    lim = DEFAULT_CROSSING_LIMIT if limit is None else limit
    if b.crossings > lim:
        raise CrossingLimitExceeded(f"{b.crossings} crossings exceeds the limit {lim}")


# Kauffman bracket

# For a positive letter the A-smoothing keeps the strands vertical (incoming
# end joined to the outgoing end below it).  With t = A^-4 this is the choice
# giving V(s1^2) = -t^(1/2) - t^(5/2) and V(s1^3) = t + t^3 - t^4.
_POSITIVE_A_IS_HORIZONTAL = False


def _diagram(b: BraidWord):
    """Node pairs for each crossing's two smoothings, plus the node count.

    Returns (crossings, n_nodes) where each crossing entry is
    (horizontal_pairs, vertical_pairs, sign).
    """
    n = b.strands
    seg = list(range(n))
    nxt = n
    raw = []
    for g in b.signed():
        p, q = abs(g) - 1, abs(g)
        a, bb = seg[p], seg[q]
        c, d = nxt, nxt + 1
        nxt += 2
        seg[p], seg[q] = c, d
        raw.append((((a, bb), (c, d)), ((a, c), (bb, d)), 1 if g > 0 else -1))
    # glue the bottom ends back to the top
    parent = list(range(nxt))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in range(n):
        ra, rb = find(seg[p]), find(p)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    roots = sorted({find(x) for x in range(nxt)})
    index = {r: i for i, r in enumerate(roots)}
    ren = lambda x: index[find(x)]  # noqa: E731
    out = []
    for horiz, vert, sign in raw:
        out.append((
            tuple((ren(u), ren(v)) for u, v in horiz),
            tuple((ren(u), ren(v)) for u, v in vert),
            sign,
        ))
    return out, len(roots)


def _a_pairs(crossing):
    horiz, vert, sign = crossing
    if (sign > 0) == _POSITIVE_A_IS_HORIZONTAL:
        return horiz, vert
    return vert, horiz


def bracket_state_counts(b: BraidWord, vectorized: bool = True) -> dict[tuple[int, int], int]:
    """Map (number of A-smoothings, loop count) -> number of states."""
    crossings, n_nodes = _diagram(b)
    c = len(crossings)
    if c == 0:
        return {(0, n_nodes): 1}
    if vectorized:
        return _counts_numpy(crossings, n_nodes)
    return _counts_python(crossings, n_nodes)


def _counts_python(crossings, n_nodes):
    c = len(crossings)
    counts: dict[tuple[int, int], int] = {}
    for state in range(1 << c):
        parent = list(range(n_nodes))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        loops = n_nodes
        for k, cr in enumerate(crossings):
            a_pairs, b_pairs = _a_pairs(cr)
            for u, v in (a_pairs if state >> k & 1 else b_pairs):
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    loops -= 1
        key = (bin(state).count("1"), loops)
        counts[key] = counts.get(key, 0) + 1
    return counts


def _counts_numpy(crossings, n_nodes):
    c = len(crossings)
    states = np.arange(1 << c, dtype=np.int64)
    masks = [((states >> k) & 1).astype(bool) for k in range(c)]
    dtype = np.int16 if n_nodes < 32000 else np.int32
    label = np.repeat(np.arange(n_nodes, dtype=dtype)[:, None], states.size, axis=1)
    edges = []
    for k, cr in enumerate(crossings):
        a_pairs, b_pairs = _a_pairs(cr)
        for u, v in a_pairs:
            edges.append((u, v, masks[k]))
        for u, v in b_pairs:
            edges.append((u, v, ~masks[k]))
    while True:
        changed = False
        for u, v, m in edges:
            lu, lv = label[u], label[v]
            lo = np.minimum(lu, lv)
            upd = m & (lo != np.maximum(lu, lv))
            if upd.any():
                changed = True
                lu[upd] = lo[upd]
                lv[upd] = lo[upd]
        if not changed:
            break
    loops = (label == np.arange(n_nodes, dtype=dtype)[:, None]).sum(axis=0)
    n_a = np.zeros(states.size, dtype=np.int64)
    for m in masks:
        n_a += m
    key = n_a * (n_nodes + 1) + loops
    uniq, cnt = np.unique(key, return_counts=True)
    return {(int(k // (n_nodes + 1)), int(k % (n_nodes + 1))): int(v) for k, v in zip(uniq, cnt)}


_D_POLY = {2: -1, -2: -1}  # -A^2 - A^-2


def _amul(p: dict[int, int], q: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for a, x in p.items():
        for b, y in q.items():
            out[a + b] = out.get(a + b, 0) + x * y
    return {k: v for k, v in out.items() if v}


def kauffman_jones(b: BraidWord, max_crossings: int | None = None, vectorized: bool = True) -> HalfLaurent:
    """Jones polynomial of the closure of b from the full bracket state sum."""
    _check_limit(b, max_crossings)
    counts = bracket_state_counts(b, vectorized=vectorized)
    c = b.crossings
    max_loops = max(l for _, l in counts)
    dpow = [{0: 1}]
    for _ in range(max_loops):
        dpow.append(_amul(dpow[-1], _D_POLY))
    bracket: dict[int, int] = {}
    for (n_a, loops), cnt in counts.items():
        shift = n_a - (c - n_a)
        for k, v in dpow[loops - 1].items():
            bracket[k + shift] = bracket.get(k + shift, 0) + cnt * v
    w = b.writhe
    sign = -1 if w % 2 else 1
    out: dict[int, int] = {}
    for k, v in bracket.items():
        if not v:
            continue
        a_exp = k - 3 * w
        if a_exp % 2:
            raise ArithmeticError("odd A-exponent in normalized bracket")
        out[-a_exp // 2] = out.get(-a_exp // 2, 0) + sign * v
    return HalfLaurent(out)


# HOMFLY skein tree


def _cyc_reduce(word: tuple[int, ...]) -> tuple[int, ...]:
    out: list[int] = []
    for g in word:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    while len(out) >= 2 and out[0] == -out[-1]:
        out.pop()
        out.pop(0)
    return tuple(out)


def _canonical_key(n: int, word: tuple[int, ...]) -> tuple:
    if not word:
        return (n, ())
    best = min(word[k:] + word[:k] for k in range(len(word)))
    return (n, best)


def _first_bad_crossing(n: int, word: tuple[int, ...]) -> int | None:
    """Index of the first crossing met as an undercrossing, or None if descending.

    Components are traversed from strand positions at the top of the word in
    increasing order.  For a positive letter the strand entering on the left
    passes over.
    """
    L = len(word)
    perm = list(range(n))
    for g in word:
        i = abs(g) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    # perm[pos] = start strand now at pos; invert to follow strands
    final_pos = [0] * n
    for pos, s in enumerate(perm):
        final_pos[s] = pos
    seen_cross = [False] * L
    done_start = [False] * n
    for start in range(n):
        if done_start[start]:
            continue
        pos = start
        while True:
            done_start[pos] = True
            for k, g in enumerate(word):
                i = abs(g) - 1
                if pos == i or pos == i + 1:
                    over = (pos == i) == (g > 0)
                    if not seen_cross[k]:
                        seen_cross[k] = True
                        if not over:
                            return k
                    pos = i + 1 if pos == i else i
            if pos == start:
                break
    return None


class _Skein:
    """Memoized skein evaluator; ``conway`` selects the v = 1 specialization."""

    def __init__(self, conway_mode: bool):
        self.conway = conway_mode
        self.memo: dict[tuple, TwoVarPoly] = {}
        if conway_mode:
            self.delta = ZERO2
            self.pos = (_Z, ONE2)  # P+ = z P0 + P-
            self.neg = (-_Z, ONE2)  # P- = -z P0 + P+
        else:
            self.delta = DELTA
            self.pos = (_VZ, _V2)
            self.neg = (_MVMZ, _VM2)

    def unlink(self, k: int) -> TwoVarPoly:
        return self.delta ** (k - 1)

    def eval(self, n: int, word: tuple[int, ...]) -> TwoVarPoly:
        word = _cyc_reduce(word)
        key = _canonical_key(n, word)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        res = self._eval(n, word)
        self.memo[key] = res
        return res

    def _eval(self, n: int, word: tuple[int, ...]) -> TwoVarPoly:
        if n == 1:
            return ONE2
        present = {abs(g) for g in word}
        for i in range(1, n):
            if i not in present:
                left = tuple(g for g in word if abs(g) < i)
                right = tuple((abs(g) - i) * (1 if g > 0 else -1) for g in word if abs(g) > i)
                return self.delta * self.eval(i, left) * self.eval(n - i, right)
        top = [k for k, g in enumerate(word) if abs(g) == n - 1]
        if len(top) == 1:
            k = top[0]
            return self.eval(n - 1, word[:k] + word[k + 1:])
        bottom = [k for k, g in enumerate(word) if abs(g) == 1]
        if len(bottom) == 1:
            k = bottom[0]
            rest = word[:k] + word[k + 1:]
            return self.eval(n - 1, tuple((abs(g) - 1) * (1 if g > 0 else -1) for g in rest))
        k = _first_bad_crossing(n, word)
        if k is None:
            comps = closure_shape(BraidWord.from_signed(n, word)).components
            return self.unlink(comps)
        switched = word[:k] + (-word[k],) + word[k + 1:]
        smoothed = word[:k] + word[k + 1:]
        c0, c1 = self.pos if word[k] > 0 else self.neg
        # the switched word is evaluated with the same base points, so the
        # descending prefix strictly grows
        return c0 * self.eval(n, smoothed) + c1 * self._eval_same(n, switched)

    def _eval_same(self, n: int, word: tuple[int, ...]) -> TwoVarPoly:
        reduced = _cyc_reduce(word)
        if reduced != word:
            return self.eval(n, reduced)
        key = _canonical_key(n, word)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        res = self._eval(n, word)
        self.memo[key] = res
        return res


_EVALUATORS = {False: _Skein(False), True: _Skein(True)}


def _homfly_cached(n: int, word: tuple[int, ...], conway_mode: bool) -> TwoVarPoly:
    return _EVALUATORS[conway_mode].eval(n, word)


def homfly_skein(b: BraidWord, max_crossings: int | None = None) -> TwoVarPoly:
    """HOMFLY polynomial P(v, z) of the closure, with P(unknot) = 1."""
    _check_limit(b, max_crossings)
    return _homfly_cached(b.strands, tuple(b.signed()), False)


def conway(b: BraidWord, max_crossings: int | None = None) -> TwoVarPoly:
    """Conway polynomial of the closure, as a TwoVarPoly with v-degree 0."""
    _check_limit(b, max_crossings)
    return _homfly_cached(b.strands, tuple(b.signed()), True)


def torus_two_strand(e: int) -> tuple[TwoVarPoly, TwoVarPoly]:
    """(Conway, HOMFLY) of the closure of s1^e in B_2."""
    if e < 0:
        cw, hf = torus_two_strand(-e)
        cw_m = TwoVarPoly({(a, b): c * (-1 if b % 2 else 1) for (a, b), c in cw.terms.items()})
        return cw_m, hf.mirror()
    if e == 0:
        return ZERO2, DELTA
    c_prev, c_cur = ZERO2, ONE2
    p_prev, p_cur = DELTA, ONE2
    for _ in range(e - 1):
        c_prev, c_cur = c_cur, _Z * c_cur + c_prev
        p_prev, p_cur = p_cur, _VZ * p_cur + _V2 * p_prev
    return c_cur, p_cur


_ZSUB = HalfLaurent({1: 1, -1: -1})  # t^(1/2) - t^(-1/2)


def specialize(p: TwoVarPoly, target: str) -> HalfLaurent:
    """Substitute z = t^(1/2) - t^(-1/2) and v = t (jones) or v = 1 (alexander)."""
    if target not in ("jones", "alexander"):
        raise ValueError(f"unknown target {target!r}")
    if p.is_zero():
        return ZERO
    zmin = min(b for _, b in p.terms)
    lift = max(0, -zmin)
    zpows = [ONE]
    acc = ZERO
    for (a, b), c in p.terms.items():
        k = b + lift
        while len(zpows) <= k:
            zpows.append(zpows[-1] * _ZSUB)
        vfac = tpow(a) if target == "jones" else ONE
        acc = acc + vfac * zpows[k] * c
    if lift:
        acc = exact_div(acc, _ZSUB ** lift)
    return acc


def mfw_bound(p: TwoVarPoly) -> int:
    """Morton-Franks-Williams lower bound (v-breadth)/2 + 1 on the braid index."""
    lo, hi = p.v_degrees()
    return (hi - lo) // 2 + 1
