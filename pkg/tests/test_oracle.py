import random

import pytest

from twistlinks.braidword import BraidWord, cyclic_rotate, free_reduce, interval, parse, reflect
from twistlinks.errors import CrossingLimitExceeded, ZeroPolynomial
from twistlinks.oracle import (
    DELTA,
    TwoVarPoly,
    conway,
    homfly_skein,
    kauffman_jones,
    mfw_bound,
    specialize,
    torus_two_strand,
)
from twistlinks.polyhalf import ONE, HalfLaurent, invert_variable

P = HalfLaurent.parse


def poly2(pairs):
    return TwoVarPoly(dict(pairs))


HOPF_P = poly2({(1, 1): 1, (1, -1): 1, (3, -1): -1})
Z = poly2({(0, 1): 1})


def random_word(rng, n, length):
    gens = [g for i in range(1, n) for g in (i, -i)]
    return BraidWord.from_signed(n, [rng.choice(gens) for _ in range(length)])


def test_kauffman_examples():
    assert kauffman_jones(BraidWord(1)) == ONE
    assert kauffman_jones(parse("B2: s1^2")) == P("-t^(1/2) - t^(5/2)")
    assert kauffman_jones(parse("B3: s1^3 s2 s1^3 s2")) == P("t^3 + t^5 - t^8")


def test_crossing_limit():
    with pytest.raises(CrossingLimitExceeded):
        kauffman_jones(parse("B2: s1^9"), max_crossings=8)
    with pytest.raises(CrossingLimitExceeded):
        homfly_skein(parse("B2: s1^9"), max_crossings=8)


def test_vectorized_matches_plain():
    rng = random.Random(3)
    for _ in range(10):
        b = random_word(rng, 4, rng.randint(0, 9))
        assert kauffman_jones(b, vectorized=True) == kauffman_jones(b, vectorized=False)


def test_homfly_examples():
    assert homfly_skein(BraidWord(2)) == DELTA
    assert homfly_skein(parse("B2: s1^2")) == HOPF_P
    assert specialize(homfly_skein(parse("B2: s1^3")), "jones") == P("t + t^3 - t^4")


def test_conway_examples():
    assert conway(BraidWord(1)) == poly2({(0, 0): 1})
    assert conway(parse("B2: s1^2")) == Z
    assert conway(parse("B2: s1^3")) == poly2({(0, 0): 1, (0, 2): 1})


def test_torus_two_strand():
    c0, p0 = torus_two_strand(0)
    assert c0.is_zero() and p0 == DELTA
    assert torus_two_strand(3)[0] == conway(parse("B2: s1^3"))
    assert torus_two_strand(2)[1] == homfly_skein(parse("B2: s1^2"))
    for e in range(0, 9):
        c, p = torus_two_strand(e)
        b = parse(f"B2: s1^{e}") if e else BraidWord(2)
        assert c == conway(b) and p == homfly_skein(b)


def test_specialize():
    assert specialize(HOPF_P, "alexander") == P("-t^(-1/2) + t^(1/2)")
    assert specialize(poly2({(0, 0): 1}), "jones") == ONE
    assert specialize(poly2({(0, 0): 1}), "alexander") == ONE


def test_mfw_bound():
    assert mfw_bound(poly2({(0, 0): 1})) == 1
    assert mfw_bound(HOPF_P) == 2
    assert mfw_bound(homfly_skein(interval(1, 2) ** 4 * interval(1, 3) ** 4)) == 3
    with pytest.raises(ZeroPolynomial):
        mfw_bound(TwoVarPoly())


# Values frozen from the state-sum and skein oracles; the two agree on each.
FROZEN = [
    (
        "B3: s1^2 s2^-1 s1 s2^-2",
        "-t^-3 + 2*t^-2 - 2*t^-1 + 3 - 2*t + 2*t^2 - t^3",
        {(-2, 0): -1, (-2, 2): -1, (0, 0): 3, (0, 2): 3, (0, 4): 1, (2, 0): -1, (2, 2): -1},
        {(0, 0): 1, (0, 2): 1, (0, 4): 1},
    ),
    (
        "B4: s1 s2^-1 s3 s2 s1^-1 s3^2",
        "1 + t + t^2 + t^3",
        {(0, -2): 1, (0, 0): 1, (2, -2): -2, (2, 0): -1, (4, -2): 1},
        {},
    ),
    (
        "B3: s1^3 s2 s1^-1 s2 s1^2 s2^2",
        "t^3 + t^6 - t^7 + t^8 - t^9 + t^10 - t^11",
        {(6, 0): 3, (6, 2): 9, (6, 4): 6, (6, 6): 1, (8, 0): -1, (8, 2): -1, (10, 0): -1, (10, 2): -1},
        {(0, 0): 1, (0, 2): 7, (0, 4): 6, (0, 6): 1},
    ),
    (
        "B3: s1^-1 s2 s1^-1 s2",
        "t^-2 - t^-1 + 1 - t + t^2",
        {(-2, 0): 1, (0, 0): -1, (0, 2): -1, (2, 0): 1},
        {(0, 0): 1, (0, 2): -1},
    ),
]


@pytest.mark.parametrize("word,jones,homfly,conw", FROZEN)
def test_frozen_values(word, jones, homfly, conw):
    b = parse(word)
    assert kauffman_jones(b) == P(jones)
    assert homfly_skein(b) == poly2(homfly)
    assert conway(b) == poly2(conw)


def test_frozen_four_strand_positive():
    b = parse("B4: s1^2 s2^2 s3^2 s1")
    assert kauffman_jones(b) == P("t^2 + 3*t^4 - t^5 + 3*t^6 - 2*t^7 + t^8 - t^9")
    assert conway(b) == poly2({(0, 2): 1, (0, 4): 1})


def test_skein_residual():
    rng = random.Random(11)
    vz = poly2({(1, 1): 1})
    v2 = poly2({(2, 0): 1})
    for _ in range(25):
        n = rng.randint(2, 4)
        flat = random_word(rng, n, rng.randint(1, 9)).signed()
        k = rng.randrange(len(flat))
        i = abs(flat[k])
        pre, post = flat[:k], flat[k + 1:]
        plus = BraidWord.from_signed(n, pre + [i] + post)
        zero = BraidWord.from_signed(n, pre + post)
        minus = BraidWord.from_signed(n, pre + [-i] + post)
        assert homfly_skein(plus) == vz * homfly_skein(zero) + v2 * homfly_skein(minus)


def test_homfly_specializes_to_kauffman():
    rng = random.Random(5)
    for _ in range(40):
        b = random_word(rng, rng.randint(2, 4), rng.randint(0, 12))
        assert specialize(homfly_skein(b), "jones") == kauffman_jones(b)
        assert specialize(conway(b), "alexander") == specialize(homfly_skein(b), "alexander")


def test_moves_preserve_jones():
    rng = random.Random(9)
    for _ in range(25):
        b = random_word(rng, rng.randint(2, 4), rng.randint(1, 12))
        v = kauffman_jones(b)
        assert kauffman_jones(reflect(b)) == v
        assert kauffman_jones(free_reduce(b)) == v
        assert kauffman_jones(cyclic_rotate(b, rng.randint(0, b.crossings))) == v


def test_mirror():
    rng = random.Random(13)
    for _ in range(20):
        b = random_word(rng, 3, rng.randint(1, 10))
        m = BraidWord.from_signed(3, [-g for g in b.signed()])
        assert kauffman_jones(m) == invert_variable(kauffman_jones(b))


def test_syllable_recursions_in_homfly():
    rng = random.Random(17)
    vz = poly2({(1, 1): 1})
    v2 = poly2({(2, 0): 1})
    for _ in range(15):
        beta = random_word(rng, 3, rng.randint(0, 6))
        i = rng.choice([1, 2])
        for e in range(2, 6):
            lhs = homfly_skein(beta * parse(f"B3: s{i}^{e}"))
            rhs = vz * homfly_skein(beta * parse(f"B3: s{i}^{e - 1}")) + v2 * homfly_skein(beta * parse(f"B3: s{i}^{e - 2}"))
            assert lhs == rhs
