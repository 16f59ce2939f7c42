import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mst3sz.field import BinaryField, make_params
from mst3sz.group import (
    ALL_NONZERO,
    ANY,
    NON_CENTRAL,
    CurvePoint,
    GroupElement,
    SuzukiGroup,
)

import oracle

P3 = make_params(3)
G3 = SuzukiGroup(P3)
E = G3.identity()


def rand_el(rng, g=G3):
    return g.random_element(rng)


def test_element_requires_nonzero_a():
    with pytest.raises(ValueError):
        GroupElement(0, 1, 1)


def test_identity_laws():
    assert G3.mul(E, E) == E
    assert G3.inv(E) == E
    rng = random.Random(1)
    for _ in range(100):
        g = rand_el(rng)
        assert G3.mul(E, g) == g
        assert G3.mul(g, E) == g


def test_mul_examples():
    # central elements multiply by adding c
    for c1 in range(8):
        for c2 in range(8):
            assert G3.mul(GroupElement(1, 0, c1), GroupElement(1, 0, c2)) == \
                GroupElement(1, 0, c1 ^ c2)
    assert G3.mul(GroupElement(1, 1, 0), GroupElement(1, 1, 0)) == GroupElement(1, 0, 1)


def test_mul_matches_oracle():
    rng = random.Random(2)
    for n in (3, 9, 65):
        p = make_params(n)
        g = SuzukiGroup(p)
        for _ in range(100):
            g1, g2 = rand_el(rng, g), rand_el(rng, g)
            got = g.mul(g1, g2)
            assert (got.a, got.b, got.c) == oracle.gmul(p, oracle.as_tuple(g1), oracle.as_tuple(g2))


def test_inverse_examples():
    for c in range(8):
        z = GroupElement(1, 0, c)
        assert G3.inv(z) == z  # central elements are involutions
    rng = random.Random(3)
    for _ in range(100):
        g = rand_el(rng)
        assert G3.mul(g, G3.inv(g)) == E
        assert G3.mul(G3.inv(g), g) == E


def test_inverse_laws_all_448():
    for g in G3.elements():
        assert G3.mul(g, G3.inv(g)) == E
        assert G3.mul(G3.inv(g), g) == E
        assert G3.mul(g, E) == g == G3.mul(E, g)


def test_enumeration_counts():
    els = list(G3.elements())
    assert len(els) == 448
    assert sum(G3.in_center(g) for g in els) == 8


def test_unipotent_closure_and_associativity_exhaustive():
    us = [GroupElement(1, b, c) for b in range(8) for c in range(8)]
    prods = {}
    for x in us:
        for y in us:
            p = G3.mul(x, y)
            assert p.a == 1  # closure in the (1,b,c) subgroup
            prods[x, y] = p
    for x in us:
        for y in us:
            xy = prods[x, y]
            for z in us:
                assert G3.mul(xy, z) == G3.mul(x, prods[y, z])


def test_associativity_random_full_group():
    rng = random.Random(4)
    for _ in range(100_000):
        g1, g2, g3 = rand_el(rng), rand_el(rng), rand_el(rng)
        assert G3.mul(G3.mul(g1, g2), g3) == G3.mul(g1, G3.mul(g2, g3))


def test_apply_point_examples():
    rng = random.Random(5)
    for _ in range(50):
        p = CurvePoint(P3.random_element(rng), P3.random_element(rng))
        assert G3.apply_point(E, p) == p
    for b in range(8):
        for c in range(8):
            g = GroupElement(1, b, c)
            assert G3.apply_point(g, CurvePoint(0, 0)) == CurvePoint(b, c)


def test_action_composition_random():
    rng = random.Random(6)
    pts = [CurvePoint(P3.random_element(rng), P3.random_element(rng)) for _ in range(5)]
    for _ in range(2000):
        g1, g2 = rand_el(rng), rand_el(rng)
        g12 = G3.mul(g1, g2)
        for p in pts:
            assert G3.apply_point(g2, G3.apply_point(g1, p)) == G3.apply_point(g12, p)


def test_on_curve_base_field():
    assert G3.on_curve(CurvePoint(0, 0))
    assert G3.on_curve(CurvePoint(1, 1))
    for x in range(8):
        for y in range(8):
            assert G3.on_curve(CurvePoint(x, y))  # x^q = x over GF(q)


def test_on_curve_extension_field():
    # GF(64) contains GF(8) as the fixed field of y -> y^8
    ext = BinaryField(6, 0b1000011)
    mod = ext.modulus

    def frob3(v):  # y^(2^3) by three schoolbook squarings
        for _ in range(3):
            v = oracle.mul(v, v, mod)
        return v

    subfield = [y for y in range(64) if frob3(y) == y]
    assert len(subfield) == 8
    inside = max(subfield)
    outside = next(y for y in range(64) if y not in subfield)
    assert G3.on_curve(CurvePoint(0, inside), field=ext)
    assert not G3.on_curve(CurvePoint(0, outside), field=ext)


def test_in_center():
    assert G3.in_center(E)
    assert G3.in_center(GroupElement(1, 0, 5))
    assert not G3.in_center(GroupElement(1, 1, 0))
    assert not G3.in_center(GroupElement(2, 0, 0))


def test_f1_f2_examples():
    g = GroupElement(3, 5, 7)
    assert G3.f1(g) == GroupElement(1, 3, 5)
    assert G3.f2(g) == GroupElement(1, 0, 5)
    assert G3.f1(E) == GroupElement(1, 1, 0)
    assert G3.f1(GroupElement(1, 0, 4)) == GroupElement(1, 1, 0)
    assert G3.f2(E) == E
    for b in range(8):
        assert G3.f2(GroupElement(1, b, 3)) == GroupElement(1, 0, b)


def test_f1_is_not_a_homomorphism():
    g1 = GroupElement(2, 0, 0)
    g2 = GroupElement(4, 0, 0)
    assert G3.f1(G3.mul(g1, g2)) != G3.mul(G3.f1(g1), G3.f1(g2))


def test_f2_homomorphism_on_unipotents():
    us = [GroupElement(1, b, c) for b in range(8) for c in range(8)]
    for u1 in us:
        for u2 in us:
            prod = G3.mul(u1, u2)
            assert G3.f2(prod) == G3.mul(G3.f2(u1), G3.f2(u2))
            assert prod.b == u1.b ^ u2.b  # b-coordinates add


def test_stats():
    st3 = G3.stats()
    assert st3.group_order == 448
    assert st3.center_order == 8
    assert st3.full_aut_order == 65 * 64 * 7 == 29120
    assert st3.genus == 14
    assert st3.rational_places == 65


def test_stats_formulas_other_widths():
    for n in (5, 9):
        p = make_params(n)
        st_ = SuzukiGroup(p).stats()
        assert st_.group_order == p.q**2 * (p.q - 1)
        assert st_.genus == p.q0 * (p.q - 1)
        assert st_.rational_places == p.q**2 + 1


def test_random_element_constraints():
    rng = random.Random(7)
    for _ in range(500):
        g = G3.random_element(rng, NON_CENTRAL)
        assert not (g.a == 1 and g.b == 0)
        g = G3.random_element(rng, ALL_NONZERO)
        assert g.a != 0 and g.b != 0 and g.c != 0
    with pytest.raises(ValueError):
        G3.random_element(rng, "bogus")


def test_random_element_uniformity_chi2():
    # 448 cells, 50 draws per cell expected; threshold ~ p < 1e-3 for df=447
    rng = random.Random(8)
    draws = 448 * 50
    counts = {}
    for _ in range(draws):
        g = G3.random_element(rng, ANY)
        counts[g] = counts.get(g, 0) + 1
    assert len(counts) == 448
    expected = draws / 448
    chi2 = sum((c - expected) ** 2 / expected for c in counts.values())
    assert chi2 < 545, chi2


@given(st.integers(1, 511), st.integers(0, 511), st.integers(0, 511))
def test_inverse_hypothesis(a, b, c):
    p = make_params(9)
    g = SuzukiGroup(p)
    el = GroupElement(a, b, c)
    assert g.mul(el, g.inv(el)) == g.identity()
