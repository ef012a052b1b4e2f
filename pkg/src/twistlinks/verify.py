"""Verification suites: identities, closed forms against the oracles, classification, conjecture scan.

Every check returns a plain dict so reports serialize deterministically.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from . import alexfam, jones3
from .alexfam import A, L_sum, R_sum, prod_decompose, product_as_sum, product_partition
from .blocks import condensed_words, conjecture_check, general_blocks, jform_M, rank2_blocks
from .braidword import BraidWord, parse, positive_word
from .census import census_classes
from .errors import NotRepresentable, TwistLinksError
from .oracle import conway, homfly_skein, kauffman_jones, mfw_bound, specialize
from .polyhalf import ONE, T, HalfLaurent, eps, exact_div, tpow
from .tlink import (
    TLink,
    braid_index,
    canonical_xyz,
    closed_form_jones,
    dual,
    max_tiers_check,
    normalize,
    representative_forms,
    tier_reduce,
    to_braid,
)

MAX_PAYLOAD = 20
SUITES = ("identities", "closed-forms", "classification", "conjecture")


class _Check:
    def __init__(self, name: str):
        self.name = name
        self.count = 0
        self.failures: list = []
        self.n_failed = 0

    def record(self, ok: bool, payload) -> None:
        self.count += 1
        if not ok:
            self.n_failed += 1
            if len(self.failures) < MAX_PAYLOAD:
                self.failures.append(payload)

    def result(self) -> dict:
        return {
            "name": self.name,
            "passed": self.n_failed == 0,
            "count": self.count,
            "failed": self.n_failed,
            "failures": self.failures,
        }


def _s(p) -> str:
    return str(p)


# identities


def check_eq_shift(bound: int = 15) -> dict:
    c = _Check("A_w = t^z A_{w-z} + eps_{w-z} A_z")
    for w in range(-bound, bound + 1):
        for z in range(-bound, bound + 1):
            c.record(A(w) == A(w - z).shift(z) + A(z) * eps(w - z), [w, z])
    return c.result()


def check_eq_index_sum(bound: int = 10) -> dict:
    c = _Check("A_{w+z-1} = A_w A_z + t A_{w-1} A_{z-1}")
    for w in range(-bound, bound + 1):
        for z in range(-bound, bound + 1):
            c.record(A(w + z - 1) == A(w) * A(z) + (A(w - 1) * A(z - 1)).shift(1), [w, z])
    return c.result()


def check_definition(bound: int = 15) -> dict:
    c = _Check("(t+1) A_w = t^w + eps_{w-1}")
    for w in range(-bound, bound + 1):
        num = tpow(w) + ONE * eps(w - 1)
        c.record(exact_div(num, T + 1) == A(w), [w])
    return c.result()


def check_product_tables(bound: int = 12) -> dict:
    c = _Check("A_x A_y coefficient table and three-run split")
    for x in range(bound + 1):
        for y in range(x + 1):
            prod = A(x) * A(y)
            parts = product_partition(x, y)
            supports = [set(p.terms) for p in parts]
            disjoint = all(not (supports[i] & supports[j]) for i in range(3) for j in range(i + 1, 3))
            c.record(product_as_sum(x, y) == prod and sum(parts, HalfLaurent()) == prod and disjoint, [x, y])
    return c.result()


def check_lr(bound: int = 15) -> dict:
    c = _Check("L(b) = A_{b+1} + t L(b-1), R(b) = A_{b+1} - R(b-1)")
    for b in range(bound + 1):
        ok = L_sum(b) == A(b + 1) + L_sum(b - 1).shift(1) and R_sum(b) == A(b + 1) - R_sum(b - 1)
        c.record(ok, [b])
    return c.result()


def _prod_cases(x0_max: int = 12, x_max: int = 5):
    for m in (1, 2, 3):
        for xs in itertools.product(range(1, x_max + 1), repeat=m):
            for x0 in range(1, x0_max + 1):
                if x0 + m - 1 >= sum(xs):
                    yield x0, list(xs)


def check_prod_decompose() -> dict:
    c = _Check("product decomposition reconstruction and bounds")
    g_seen: dict[tuple, HalfLaurent] = {}
    f_seen: dict[tuple, HalfLaurent] = {}
    for x0, xs in _prod_cases():
        dec = prod_decompose(x0, xs)
        direct = A(x0)
        for x in xs:
            direct = direct * A(x)
        ok = dec.reconstruct() == direct
        ok = ok and dec.lam == eps(len(xs) + sum(xs)) * _prod(xs)
        if not (dec.f.is_zero() and dec.g.is_zero()):
            ok = ok and not alexfam._check_hypotheses(dec.f, dec.lam, dec.d, dec.middle_index, dec.g)
        key = tuple(xs)
        ok = ok and g_seen.setdefault(key, dec.g) == dec.g
        ok = ok and f_seen.setdefault(key + (x0 % 2,), dec.f) == dec.f
        c.record(ok, [x0, xs])
    return c.result()


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def check_partition_shift() -> dict:
    c = _Check("t^k A_s three-window partition")
    for k in range(0, 7):
        for s in range(1, 9):
            for g1 in range(max(k, 1), 11):
                for b2 in range(g1, 13):
                    parts = alexfam.partition_shift_terms(k, s, g1, b2)
                    c.record(sum(parts, HalfLaurent()) == A(s).shift(k), [k, s, g1, b2])
    return c.result()


# closed forms against the oracles


def _both(b: BraidWord, want: HalfLaurent, limit: int) -> bool:
    return kauffman_jones(b, limit) == want and specialize(homfly_skein(b, limit), "jones") == want


def check_two_braid(limit: int = 14) -> dict:
    c = _Check("T(2,w) Jones and Alexander closed forms")
    for w in range(-limit, limit + 1):
        b = BraidWord(2, ((1, w),))
        ok = _both(b, jones3.jones_2braid(w), limit)
        ok = ok and specialize(conway(b, limit), "alexander") == jones3.alexander_2braid(w)
        c.record(ok, [w])
    return c.result()


def check_torus3(limit: int = 14) -> dict:
    c = _Check("T(3,m) closed form")
    for m in range(1, limit // 2 + 1):
        c.record(_both(parse(f"B3: [1,3]^{m}"), jones3.jones_torus3(m), limit), [m])
    return c.result()


def _positive_words(limit: int, max_rank: int = 3, max_exp: int = 5):
    for r in range(1, max_rank + 1):
        for exps in itertools.product(range(1, max_exp + 1), repeat=2 * r):
            if sum(exps) <= limit and exps == min(exps[k:] + exps[:k] for k in range(0, 2 * r, 2)):
                yield list(exps)


def check_three_braid(limit: int = 14) -> dict:
    c = _Check("3-braid Jones via Alexander, syllable recursion and V** split")
    for exps in _positive_words(limit):
        b = positive_word(exps)
        want = kauffman_jones(b, limit)
        pair = jones3.vstar(b, "eq11", limit)
        ok = pair.jones() == want and jones3.jones_positive(exps) == want
        ok = ok and specialize(homfly_skein(b, limit), "jones") == want
        if len(exps) == 4:
            b1, b2, q = jones3.rank2_vstar(*exps)
            ok = ok and b1 + b2.shift(exps[0] + 2) + q == pair.vstar
        c.record(ok, exps)
    for word in ("B3: s1^2 s2^-1 s1 s2^-2", "B3: s1^-3 s2 s1^-1 s2^2", "B3: s1 s2^-1 s1 s2^-1 s1 s2^-1"):
        b = parse(word)
        c.record(jones3.jones_3braid(b, limit) == kauffman_jones(b, limit), word)
    return c.result()


def check_syllable_step(limit: int = 14) -> dict:
    c = _Check("syllable recursion step")
    for word in ("B3: s1^2 s2", "B3: s1 s2^-1 s1", "B4: s1 s2 s3 s1", "B3: s2^3 s1^2"):
        beta = parse(word)
        for i in range(1, beta.strands):
            for e in range(-3, 5):
                whole = beta * BraidWord(beta.strands, ((i, e),))
                if whole.crossings <= limit:
                    c.record(jones3.syllable_step_jones(beta, i, e, limit) == kauffman_jones(whole, limit), [word, i, e])
    return c.result()


def check_full_twists(limit: int = 14) -> dict:
    c = _Check("full-twist HOMFLY and Jones forms")
    gammas = ("B3: s1^2 s2", "B3: s1 s2^-1", "B3: s1^3 s2^2", "B3: s1^-2 s2^-1", "B3: s2")
    for a in (-1, 1):
        for word in gammas:
            g = parse(word)
            whole = jones3.full_twist_word(a) * g
            if whole.crossings > limit:
                continue
            ok = jones3.homfly_fulltwists(a, g, limit) == homfly_skein(whole, limit)
            sh, first, b2 = jones3.jones_fulltwists(a, g, limit)
            ok = ok and (first + b2.shift(3 * a)).shift(sh) == kauffman_jones(whole, limit)
            c.record(ok, [a, word])
    return c.result()


def check_xy_forms(limit: int = 14) -> dict:
    c = _Check("[1,3]^z s1^x s2^y and two-tier closed forms")
    for x in range(0, 9):
        for y in range(0, 9):
            for z in range(0, 8):
                b = BraidWord(3, ((1, x), (2, y))) * parse(f"B3: [1,3]^{z}")
                if b.crossings > limit:
                    continue
                want = kauffman_jones(b, limit)
                ok = jones3.jones_xy_fulltwists(x, y, z).jones() == want
                if y == 0 and z >= 1:
                    ok = ok and jones3.jones_2tier_tlink(x, z) == want
                c.record(ok, [x, y, z])
    for x in range(3, 10):
        for y in range(3, x + 1):
            for z in (3, 6):
                first, b2 = jones3.rank1_fulltwist_blocks(x, y, z)
                c.record(first + b2.shift(z + 2) == jones3.jones_xy_fulltwists(x, y, z).vstar, ["blocks", x, y, z])
    return c.result()


def tlink_grid(k_max: int = 4, r_max: int = 8, s_max: int = 8) -> list[TLink]:
    seen: set[TLink] = set()
    out = []
    for k in range(1, k_max + 1):
        for rs in itertools.combinations(range(2, r_max + 1), k):
            for ss in itertools.product(range(1, s_max + 1), repeat=k):
                L = normalize(TLink(tuple(zip(rs, ss))))
                if L not in seen:
                    seen.add(L)
                    out.append(L)
    return out


def check_tlinks(limit: int = 14) -> dict:
    c = _Check("T-link reduction, duality and braid index against the oracles")
    for L in tlink_grid():
        br = to_braid(L)
        if br.crossings > limit:
            continue
        b = braid_index(L)[0]
        hom = homfly_skein(br, limit)
        ok = mfw_bound(hom) == b and max_tiers_check(L)
        v = kauffman_jones(br, limit)
        ok = ok and specialize(hom, "jones") == v
        d = dual(L)
        if to_braid(d).crossings <= limit:
            ok = ok and kauffman_jones(to_braid(d), limit) == v
        if b <= 3:
            ok = ok and closed_form_jones(tier_reduce(L)) == v
        c.record(ok, str(L))
    return c.result()


def _block_shape_ok(bd) -> bool:
    ws = bd.w_star
    if bd.B1.max_degree > ws:
        return False
    return bd.B2.is_zero() or bd.B2.max_degree <= ws - 3


def check_blocks() -> dict:
    c = _Check("block decompositions (rank 2 closed form and general gap)")
    for a in range(3, 13):
        for b, cc, d in itertools.product(range(1, 4), repeat=3):
            if a < b + cc + d:
                continue
            exps = (a, b, cc, d)
            bd = rank2_blocks(*exps)
            gb = general_blocks(exps)
            ok = bd.reconstruct() == jones3.vstar_positive(exps)
            ok = ok and (gb.B1, gb.B2, gb.gap_multiplier) == (bd.B1, bd.B2, bd.gap_multiplier)
            ok = ok and bd.gap_multiplier == jform_M(exps)[1] and _block_shape_ok(bd)
            if a + 2 <= 12:
                nxt = rank2_blocks(a + 2, b, cc, d)
                ok = ok and nxt.B1 == bd.B1 and nxt.B2 == bd.B2
            if a + 1 <= 12:
                ok = ok and rank2_blocks(a + 1, b, cc, d).B2 == bd.B2
            c.record(ok, list(exps))
    for rest in itertools.product(range(1, 4), repeat=5):
        ws = sum(rest)
        found = {}
        for a in (ws, ws + 1, ws + 2):
            exps = (a,) + rest
            gb = general_blocks(exps)
            found[a] = gb
            ok = gb.reconstruct() == jones3.vstar_positive(exps)
            ok = ok and gb.gap_multiplier == jform_M(exps)[1] and _block_shape_ok(gb)
            c.record(ok, list(exps))
        c.record(found[ws].B1 == found[ws + 2].B1 and found[ws].B2 == found[ws + 1].B2 == found[ws + 2].B2,
                 ["e1 dependence", *rest])
    return c.result()


# classification


def check_jones_vs_canonical(x_max: int = 8, y_max: int = 8, z_max: int = 12) -> dict:
    c = _Check("Jones equality iff canonical equality")
    by_jones: dict[HalfLaurent, set] = {}
    by_canon: dict = {}
    for x in range(x_max + 1):
        for y in range(y_max + 1):
            for z in range(z_max + 1):
                try:
                    canon = canonical_xyz(x, y, z)
                except NotRepresentable:
                    continue
                j = jones3.jones_xy_fulltwists(x, y, z).jones()
                by_jones.setdefault(j, set()).add(canon)
                by_canon.setdefault(canon, set()).add(j)
    for j, cs in sorted(by_jones.items(), key=lambda kv: sorted(kv[1])):
        c.record(len(cs) == 1, sorted(str(x) for x in cs))
    for canon, js in sorted(by_canon.items()):
        c.record(len(js) == 1, str(canon))
    return c.result()


def check_duplicate_forms(x_max: int = 8, y_max: int = 8, z_max: int = 12) -> dict:
    c = _Check("duplicate T-link families reduce to one canonical class")
    for canon in census_classes(x_max, y_max, z_max):
        try:
            forms = representative_forms(canon)
            ok = all(braid_index(L)[0] == 3 and max_tiers_check(L) for L in forms)
        except (TwistLinksError, ArithmeticError) as exc:
            ok, forms = False, [repr(exc)]
        c.record(ok, str(canon))
    groups: dict[tuple, set] = {}
    for s1 in range(1, 6):
        for s2 in range(1, 7):
            for r3 in range(4, 10):
                for r4 in range(r3 + 1, r3 + 6):
                    L = TLink(((2, s1), (3, s2), (r3, 1), (r4, 2)))
                    key = (frozenset((s1, r4 - r3)), frozenset((s2 % 3, r3 % 3)), s2 + r3)
                    groups.setdefault(key, set()).add(tier_reduce(L))
    for key, cs in sorted(groups.items(), key=lambda kv: (sorted(kv[0][0]), sorted(kv[0][1]), kv[0][2])):
        c.record(len(cs) == 1, [sorted(key[0]), sorted(key[1]), key[2]])
    return c.result()


def check_conjecture(max_writhe: int = 20) -> dict:
    c = _Check("V** sign, degree and support claims on condensed words")
    for exps in condensed_words(max_writhe):
        rep = conjecture_check(positive_word(exps))
        c.record(rep.holds, {"exps": list(exps), "writhe": rep.writhe, "rank": rep.rank,
                             "vstarstar": str(rep.vstarstar), "claims": rep.claims})
    return c.result()


_SUITE_CHECKS: dict[str, list[tuple[Callable, str]]] = {
    "identities": [
        (check_definition, "range"),
        (check_eq_shift, "range"),
        (check_eq_index_sum, "range10"),
        (check_product_tables, "none"),
        (check_lr, "range"),
        (check_prod_decompose, "none"),
        (check_partition_shift, "none"),
    ],
    "closed-forms": [
        (check_two_braid, "limit"),
        (check_torus3, "limit"),
        (check_three_braid, "limit"),
        (check_syllable_step, "limit"),
        (check_full_twists, "limit"),
        (check_xy_forms, "limit"),
        (check_tlinks, "limit"),
        (check_blocks, "none"),
    ],
    "classification": [
        (check_jones_vs_canonical, "bounds"),
        (check_duplicate_forms, "bounds"),
    ],
    "conjecture": [
        (check_conjecture, "writhe"),
    ],
}


def _run_one(job) -> dict:
    fn, kind, opts = job
    if kind == "range":
        return fn(opts["range"])
    if kind == "range10":
        return fn(min(opts["range"], 10))
    if kind == "limit":
        return fn(opts["max_crossings"])
    if kind == "bounds":
        return fn(*opts["bounds"])
    if kind == "writhe":
        return fn(opts["max_writhe"])
    return fn()


def run_verify(suite: str, max_crossings: int = 14, bounds=(8, 8, 12), range_: int = 15,
               max_writhe: int = 20, workers: int = 1) -> dict:
    """Run one suite (or "all"); returns the report dict with an ``exit_code``."""
    names = SUITES if suite == "all" else (suite,)
    for n in names:
        if n not in _SUITE_CHECKS:
            raise ValueError(f"unknown suite {n!r}")
    opts = {"max_crossings": max_crossings, "bounds": tuple(bounds), "range": range_, "max_writhe": max_writhe}
    jobs = [(fn, kind, opts) for n in names for fn, kind in _SUITE_CHECKS[n]]
    owners = [n for n in names for _ in _SUITE_CHECKS[n]]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    report = {"suites": {}}
    for n in names:
        report["suites"][n] = [r for r, o in zip(results, owners) if o == n]
    hard_fail = any(not r["passed"] for n in names if n != "conjecture" for r in report["suites"][n])
    soft_fail = any(not r["passed"] for r in report["suites"].get("conjecture", []))
    report["passed"] = not (hard_fail or soft_fail)
    report["exit_code"] = 2 if hard_fail else (3 if soft_fail else 0)
    return report
