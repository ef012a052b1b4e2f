import random
from fractions import Fraction

import pytest

from twistlinks.alexfam import A
from twistlinks.braidword import BraidWord, closure_shape, interval, parse, positive_word
from twistlinks.errors import PreconditionViolated, ShapeMismatch
from twistlinks.jones3 import (
    ONE_T2,
    full_twist_word,
    homfly_fulltwists,
    jones_2braid,
    jones_2tier_tlink,
    jones_3braid,
    jones_fulltwists,
    jones_positive,
    jones_torus3,
    jones_xy_fulltwists,
    rank1_fulltwist_blocks,
    rank2_vstar,
    split_vstar,
    syllable_step_jones,
    vstar,
    vstar_positive,
    vstarstar_rank1,
    alexander_2braid,
)
from twistlinks.oracle import DELTA, TwoVarPoly, homfly_skein, kauffman_jones, specialize, torus_two_strand
from twistlinks.polyhalf import ONE, ZERO, HalfLaurent, coeff_vector, eps, tpow
from twistlinks.tlink import xyz_braid

P = HalfLaurent.parse
V6 = TwoVarPoly.mono(6)


def test_jones_2braid():
    assert jones_2braid(1) == ONE
    assert jones_2braid(2) == kauffman_jones(parse("B2: s1^2"))
    assert jones_2braid(3) == P("t + t^3 - t^4")
    for w in range(-8, 9):
        b = BraidWord.from_signed(2, [1 if w > 0 else -1] * abs(w))
        assert jones_2braid(w) == kauffman_jones(b)


def test_alexander_2braid():
    assert alexander_2braid(1) == ONE
    assert alexander_2braid(2) == specialize(homfly_skein(parse("B2: s1^2")), "alexander")
    assert alexander_2braid(3) == P("t^-1 - 1 + t")


def test_jones_3braid():
    assert jones_3braid(parse("B3: s1 s2")) == ONE
    assert jones_3braid(parse("B3: [1,3]^2")) == jones_2braid(3)
    assert jones_3braid(parse("B3: s1^3 s2 s1^3 s2")) == P("t^3 + t^5 - t^8")
    rng = random.Random(2)
    for _ in range(30):
        b = BraidWord.from_signed(3, [rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(0, 11))])
        assert jones_3braid(b) == kauffman_jones(b)


def test_jones_torus3():
    assert jones_torus3(3) == P("t^2 + t^4 + 2*t^6")
    assert jones_torus3(4) == (1 + tpow(2) - tpow(5)).shift(3)
    assert jones_torus3(4) == P("t^3 + t^5 - t^8")
    assert jones_torus3(2) == jones_2braid(3)
    with pytest.raises(PreconditionViolated):
        jones_torus3(0)
    for m in range(1, 6):
        assert jones_torus3(m) == kauffman_jones(interval(1, 3) ** m)


def test_syllable_step():
    beta = parse("B3: s1 s2^-1 s1^2")
    assert syllable_step_jones(beta, 2, 1) == kauffman_jones(beta * parse("B3: s2"))
    assert syllable_step_jones(beta, 2, 0) == kauffman_jones(beta)
    assert syllable_step_jones(BraidWord(2), 1, 3) == P("t + t^3 - t^4")
    for e in range(-3, 6):
        b = beta * BraidWord(3, ((1, e),))
        assert syllable_step_jones(beta, 1, e) == kauffman_jones(b)


def test_vstar_rank1_closed_forms():
    assert vstar(parse("B3: s1 s2")).vstarstar == -ONE
    assert vstar(parse("B3: s1^2 s2")).vstarstar == ZERO
    assert vstar(parse("B3: s1^5 s2")).vstarstar == -A(3).shift(1)
    for a in range(1, 8):
        for b in range(1, 8):
            vs = vstar(positive_word([a, b]))
            assert vs.vstarstar == vstarstar_rank1(a, b)
            assert vs.jones() == kauffman_jones(positive_word([a, b]))


def test_vstar_10_152():
    vs = vstar(parse("B3: s1^3 s2^2 s1^2 s2^3"))
    assert vs.shift == Fraction(4)
    assert vs.vstarstar == P("t - 2*t^2 + 2*t^3 - 3*t^4 + 2*t^5 - 2*t^6 + t^7")
    assert vstar(parse("B3: s1^3 s2^2 s1^2 s2^3"), method="recursion") == vs


def test_vstar_shape_guard():
    with pytest.raises(ShapeMismatch):
        vstar(parse("B3: s1 s2^-1"))


def _exps_grid(max_w):
    out = []
    for r in (1, 2, 3):
        def rec(prefix):
            if len(prefix) == 2 * r:
                out.append(tuple(prefix))
                return
            for e in range(1, max_w - sum(prefix) - (2 * r - len(prefix) - 1) + 1):
                rec(prefix + [e])
        rec([])
    return out


def test_vstarstar_symmetry():
    for exps in _exps_grid(16):
        w = sum(exps)
        vs = split_vstar(vstar_positive(exps), w)
        assert vs is not None
        if vs.is_zero():
            continue
        for j, c in vs.terms.items():
            assert vs.terms.get(2 * (w - 2) - j) == eps(w) * c


def test_recursion_matches_eq11():
    for exps in _exps_grid(11):
        assert jones_positive(exps) == jones_3braid(positive_word(list(exps)))


def test_rank2_examples():
    def total(a, b, c, d):
        b1, b2, q = rank2_vstar(a, b, c, d)
        return b1 + b2.shift(a + 2) + q

    assert total(3, 1, 3, 1) == 1 + tpow(2) - tpow(5)
    assert total(5, 1, 3, 1) == 1 + tpow(2) - tpow(6)
    assert total(1, 1, 1, 1) == 1 + tpow(2) - tpow(3)


def test_rank2_grid():
    for a in range(1, 7):
        for b in range(1, 4):
            for c in range(1, 4):
                for d in range(1, 4):
                    b1, b2, q = rank2_vstar(a, b, c, d)
                    assert b1 + b2.shift(a + 2) + q == vstar_positive([a, b, c, d])
                    b1n, b2n, _ = rank2_vstar(a + 2, b, c, d)
                    assert b1n == b1 and b2n == b2
    with pytest.raises(PreconditionViolated):
        rank2_vstar(0, 1, 1, 1)


def test_homfly_fulltwists_examples():
    p7, p3, p5, p1 = (torus_two_strand(e)[1] for e in (7, 3, 5, 1))
    g = parse("B3: s2 s1")
    assert homfly_fulltwists(1, g) == V6 + p7 - V6 * p3
    assert homfly_fulltwists(1, g) == homfly_skein(full_twist_word(1) * g)
    assert homfly_fulltwists(1, BraidWord(3)) == V6 * DELTA * DELTA + p5 - V6 * p1
    assert homfly_fulltwists(-1, interval(1, 3) ** 3) == DELTA * DELTA


def test_homfly_fulltwists_grid():
    rng = random.Random(4)
    for a in (-2, -1, 1, 2):
        for _ in range(4):
            g = BraidWord.from_signed(3, [rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(0, 5))])
            assert homfly_fulltwists(a, g) == homfly_skein(full_twist_word(a) * g, max_crossings=30)


def test_jones_fulltwists_examples():
    assert jones_fulltwists(1, parse("B3: s2 s1"))[2] == -tpow(2)
    assert jones_fulltwists(-3, parse("B3: s1^9 s2"))[2] == -A(7).shift(3)
    assert jones_fulltwists(1, parse("B3: s1^3 s2"))[2] == -tpow(3)


def test_jones_fulltwists_reconstruction():
    rng = random.Random(8)
    for a in range(-3, 4):
        for _ in range(3):
            g = BraidWord.from_signed(3, [rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(0, 8))])
            shift, first, b2 = jones_fulltwists(a, g)
            assert first == eps(closure_shape(g).writhe) * ONE_T2
            v = (first + b2.shift(3 * a)).shift(shift)
            word = full_twist_word(a) * g
            if word.crossings <= 16:
                assert v == kauffman_jones(word)
            else:
                assert v == jones_3braid(word, max_crossings=30)


def test_xy_fulltwists_examples():
    assert jones_xy_fulltwists(2, 2, 3).vstar == ONE_T2 + ONE_T2.shift(5)
    assert jones_xy_fulltwists(0, 0, 4).vstar == 1 + tpow(2) - tpow(5)
    assert jones_xy_fulltwists(1, 1, 2).vstar == 1 + tpow(2) + 2 * tpow(4)


def test_xy_fulltwists_oracle():
    for z in range(0, 5):
        for x in range(0, 5):
            for y in range(0, 5):
                b = xyz_braid(x, y, z)
                if b.crossings > 14:
                    continue
                assert jones_xy_fulltwists(x, y, z).jones() == kauffman_jones(b)


def test_2tier_tlink():
    assert jones_2tier_tlink(0, 3) == (1 + tpow(2) + 2 * tpow(4)).shift(2)
    assert jones_2tier_tlink(4, 3) == (ONE_T2 + (1 + tpow(4)).shift(4)).shift(4)
    assert jones_2tier_tlink(4, 3) == kauffman_jones(interval(1, 2) ** 4 * interval(1, 3) ** 3)
    assert jones_2tier_tlink(1, 4) == jones_xy_fulltwists(1, 0, 4).jones()
    for x in range(0, 6):
        for s in range(1, 4):
            b = interval(1, 2) ** x * interval(1, 3) ** s if x else interval(1, 3) ** s
            assert jones_2tier_tlink(x, s) == kauffman_jones(b)


def test_rank1_fulltwist_blocks():
    first, b2 = rank1_fulltwist_blocks(3, 3, 3)
    assert b2 == P("1 - 2*t + t^2 - 2*t^3 + t^4")
    assert [abs(c) for c in coeff_vector(b2)[1]] == [1, 2, 1, 2, 1]
    for x in range(3, 9):
        for y in range(3, x + 1):
            for z in (3, 6, 9):
                first, b2 = rank1_fulltwist_blocks(x, y, z)
                assert first + b2.shift(z + 2) == jones_xy_fulltwists(x, y, z).vstar
    assert rank1_fulltwist_blocks(4, 3, 6)[1] == rank1_fulltwist_blocks(4, 3, 3)[1]
    with pytest.raises(PreconditionViolated):
        rank1_fulltwist_blocks(2, 3, 3)
