import random

import pytest

from twistlinks.braidword import free_reduce, interval, parse
from twistlinks.errors import (
    BraidIndexTooLarge,
    NotRepresentable,
    ParameterOutOfRange,
    PreconditionViolated,
    ShapeMismatch,
    TLinkSyntaxError,
)
from twistlinks.jones3 import jones_xy_fulltwists
from twistlinks.oracle import homfly_skein, kauffman_jones, mfw_bound, specialize
from twistlinks.tlink import (
    CanonicalForm3,
    TLink,
    TwoBraidLink,
    braid_index,
    canonical_form,
    canonical_xyz,
    closed_form_jones,
    dual,
    equal_links,
    max_tiers_check,
    normalize,
    parse_canonical,
    parse_tlink,
    representative_forms,
    symmetry_family,
    tier_reduce,
    to_braid,
    torus_detect,
    xyz_braid,
    xyz_shape,
)

T_ = parse_tlink


def test_parse_and_render():
    L = T_("T((2,4),(3,4))")
    assert L.pairs == ((2, 4), (3, 4)) and str(L) == "T((2,4),(3,4))"
    assert T_("T(3,5)") == TLink(((3, 5),))
    assert T_(" T( (2, 1) , (5,2) ) ") == TLink(((2, 1), (5, 2)))
    for bad in ["T((2,4)", "T((2,4),)", "(2,4)", "T((1,3))", "T((3,2),(2,2))", "T((2,0))"]:
        with pytest.raises(TLinkSyntaxError):
            T_(bad)
    assert parse_canonical("beta(5,1,3)") == CanonicalForm3(5, 1, 3)
    assert str(CanonicalForm3(5, 1, 3)) == "beta(5,1,3)"
    with pytest.raises(ParameterOutOfRange):
        CanonicalForm3(1, 2, 3)
    with pytest.raises(ParameterOutOfRange):
        CanonicalForm3(2, 1, 4)


def test_to_braid():
    assert free_reduce(to_braid(T_("T((2,3))"))) == parse("B2: s1^3")
    assert to_braid(T_("T((2,4),(3,4))")).signed() == parse("B3: [1,2]^4 [1,3]^4").signed()
    assert to_braid(T_("T((2,2),(3,2),(5,2))")).signed() == parse("B5: [1,2]^2 [1,3]^2 [1,5]^2").signed()


def test_normalize():
    assert normalize(T_("T((2,3),(2,2),(4,3))")) == T_("T((2,5),(4,3))")
    assert normalize(T_("T((2,3),(3,1))")) == T_("T((2,4))")
    assert normalize(T_("T((5,1))")) == T_("T((2,1))")
    with pytest.raises(PreconditionViolated):
        dual(T_("T((2,3),(3,1))"))


def test_dual_examples():
    assert dual(T_("T((2,3),(3,2))")) == T_("T((2,1),(5,2))")
    assert dual(T_("T((2,4),(3,4))")) == T_("T((4,1),(8,2))")


def _random_tlinks(n, seed=1):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        k = rng.randint(1, 4)
        rs = sorted(rng.sample(range(2, 9), k))
        L = normalize(TLink(tuple((r, rng.randint(1, 5)) for r in rs)))
        out.append(L)
    return out


def test_dual_involution():
    for L in _random_tlinks(200):
        assert dual(dual(L)) == L


def test_dual_preserves_jones():
    for L in _random_tlinks(60, seed=2):
        a, b = to_braid(L), to_braid(dual(L))
        if max(a.crossings, b.crossings) <= 14:
            assert kauffman_jones(a) == kauffman_jones(b)


def test_braid_index_examples():
    for y in range(1, 6):
        for n in range(3, 8):
            assert braid_index(T_(f"T((2,{y}),({n},2))"))[0] == 2
    assert braid_index(T_("T((2,4),(3,4))")) == (3, 2, 1)
    assert braid_index(T_("T((7,9))"))[0] == 7


def test_braid_index_matches_mfw():
    for L in _random_tlinks(80, seed=3):
        b = to_braid(L)
        if b.crossings <= 14:
            assert mfw_bound(homfly_skein(b)) == braid_index(L)[0]


def test_max_tiers_check():
    assert max_tiers_check(T_("T((2,4),(3,4))"))
    L = T_("T((2,2),(3,2),(4,1),(5,2))")
    assert L.tiers == 4 and braid_index(L)[0] == 3
    assert max_tiers_check(L)
    assert not max_tiers_check(L, b=2)


def test_symmetry_family_s37():
    fam = {str(L) for L in symmetry_family(T_("T((7,27),(10,7))"))}
    first = {"T((7,27),(10,7))", "T((7,20),(17,7))", "T((7,13),(24,7))", "T((7,6),(31,7))"}
    swapped = {"T((7,10),(27,7))", "T((7,17),(20,7))", "T((7,24),(13,7))", "T((7,3),(34,7))"}
    assert first <= fam and "T((7,10),(27,7))" in fam
    assert fam == first | swapped
    assert not first & swapped
    with pytest.raises(ShapeMismatch):
        symmetry_family(T_("T((2,3),(3,2),(5,2))"))


def test_symmetry_family_preserves_jones():
    for seed in ["T((2,3),(5,2))", "T((3,4),(7,3))", "T((2,5),(3,2))"]:
        fam = symmetry_family(T_(seed))
        values = {specialize(homfly_skein(to_braid(L), max_crossings=40), "jones") for L in fam}
        assert len(values) == 1


def test_tier_reduce_examples():
    assert tier_reduce(T_("T((3,3),(11,2))")) == tier_reduce(T_("T((2,8),(3,5))")) == CanonicalForm3(11, 1, 3)
    assert tier_reduce(T_("T((2,2),(3,2),(5,2))")) == CanonicalForm3(3, 3, 3)
    for y in (3, 6):
        for n in range(4, 8):
            c = tier_reduce(T_(f"T((3,{y}),({n},3))"))
            assert torus_detect(c) == (3, n + y)
    assert tier_reduce(T_("T((2,5),(9,2))")) == TwoBraidLink(14)
    with pytest.raises(BraidIndexTooLarge):
        tier_reduce(T_("T((7,9))"))


def test_tier_reduce_matches_oracle():
    for L in _random_tlinks(150, seed=4):
        if braid_index(L)[0] > 3:
            continue
        b = to_braid(L)
        if b.crossings <= 14:
            assert closed_form_jones(tier_reduce(L)) == kauffman_jones(b)


def test_canonical_form():
    assert canonical_form(xyz_braid(4, 0, 4)) == CanonicalForm3(5, 1, 3)
    assert canonical_form(xyz_braid(8, 0, 5)) == CanonicalForm3(11, 1, 3)
    assert canonical_form(xyz_braid(0, 0, 6)) == CanonicalForm3(0, 0, 6)
    assert canonical_xyz(1, 4, 3) == CanonicalForm3(4, 1, 3)
    with pytest.raises(NotRepresentable):
        canonical_xyz(2, 2, 0)
    assert xyz_shape(xyz_braid(3, 2, 7)) == (3, 2, 7)


def test_canonical_form_preserves_jones():
    for x in range(0, 6):
        for y in range(0, 6):
            for z in range(1, 6):
                try:
                    c = canonical_xyz(x, y, z)
                except NotRepresentable:
                    continue
                assert jones_xy_fulltwists(c.x, c.y, c.z).jones() == jones_xy_fulltwists(x, y, z).jones()


def test_equal_links():
    for y in range(1, 5):
        for rho in (2, 5):
            assert equal_links(T_(f"T((2,{2 + y}),(3,{rho - 1}))"), T_(f"T((2,{y}),(3,{rho}))"))
    assert equal_links(T_("T((7,27),(10,7))"), T_("T((7,6),(31,7))"))
    assert not equal_links(T_("T((2,4),(3,4))"), T_("T((2,6),(3,4))"))
    assert not equal_links(T_("T((7,27),(10,7))"), T_("T((2,4),(3,4))"))
    with pytest.raises(BraidIndexTooLarge):
        equal_links(T_("T((7,27),(10,7))"), T_("T((7,9))"))
    assert tier_reduce(T_("T((2,6),(3,4))")) == CanonicalForm3(7, 1, 3)


def test_torus_detect():
    assert torus_detect(CanonicalForm3(0, 0, 6)) == (3, 6)
    assert torus_detect(CanonicalForm3(1, 1, 3)) == (3, 4)
    assert torus_detect(CanonicalForm3(3, 1, 3)) == (3, 5)
    assert torus_detect(CanonicalForm3(2, 2, 3)) is None
    assert tier_reduce(T_("T((3,1),(4,3))")) == CanonicalForm3(2, 2, 3)


def test_representative_forms():
    for c in [CanonicalForm3(5, 1, 3), CanonicalForm3(2, 2, 3), CanonicalForm3(4, 0, 6)]:
        forms = representative_forms(c)
        assert forms
        for L in forms:
            assert tier_reduce(L) == c
            assert braid_index(L)[0] == 3


def test_closed_form_on_braid_word_closures():
    assert closed_form_jones(TwoBraidLink(3)) == kauffman_jones(parse("B2: s1^3"))
    assert closed_form_jones(CanonicalForm3(0, 0, 3)) == kauffman_jones(interval(1, 3) ** 3)
