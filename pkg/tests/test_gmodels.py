import random
from fractions import Fraction

import pytest

from sl2tensor import nilhecke as nh
from sl2tensor.gmodels import (G1Element, G2Element, G3Element, check_corner,
                               check_g1, check_membership, gen_g2, gen_g3,
                               g1_phi_slotmap, mult_map, require_witness, yi)
from sl2tensor.polynomials import XRING
from sl2tensor.slotmaps import SlotMap


def rand_poly(rng, n, deg=3, terms=2):
    positions = list(range(n)) + [4]
    p = XRING.zero()
    for _ in range(terms):
        exps = [0] * 5
        for _ in range(rng.randint(0, deg)):
            exps[rng.choice(positions)] += 1
        p = p + XRING.monomial(tuple(exps), Fraction(rng.choice((-2, -1, 1, 2))))
    return p


def rand_flag_map(rng, n, deg=2):
    coeffs = {w: rand_poly(rng, n, deg) for w in nh.flag_words(n)
              if rng.random() < 0.7}
    if not coeffs:
        return SlotMap.zero(n)
    return SlotMap(n, nh.NilHeckeElement(n, coeffs))


def test_yi_is_xi_minus_y():
    assert yi(2) == nh.xvar(2) - nh.yvar()


def test_g1_membership_and_witness():
    theta = nh.yvar() ** 2
    phi = theta + yi(1) * (nh.xvar(1) + XRING.one())
    g = G1Element(theta, phi)
    r = check_g1(g)
    assert r.ok
    assert r.witness == nh.xvar(1) + XRING.one()
    bad = G1Element(theta, phi + XRING.one())
    assert not check_g1(bad).ok


def test_g1_variable_constraints():
    with pytest.raises(ValueError):
        G1Element(nh.xvar(1), XRING.one())  # theta must live in k[y]
    with pytest.raises(ValueError):
        G1Element(nh.yvar(), nh.xvar(2))  # phi must live in k[x1, y]


def test_g1_phi_slotmap_multiplies():
    g = G1Element(nh.yvar(), nh.yvar() + yi(1))
    m = g1_phi_slotmap(g)
    v = nh.xvar(1) ** 2
    assert m.eval_at(v) == g.phi * v


def test_simplest_g2_is_member():
    g = gen_g2(XRING.one(), XRING.zero(), SlotMap.zero(2))
    assert g.e1 == XRING.one() and g.e2 == XRING.one()
    r = check_membership(g)
    assert r.ok
    assert r.witness.e_prime.is_zero()


def test_generated_g2_members_and_perturbations():
    rng = random.Random(23)
    for _ in range(15):
        g = gen_g2(rand_poly(rng, 1), rand_poly(rng, 1), rand_flag_map(rng, 2))
        assert check_membership(g).ok
        # breaking any single component must be detected
        bad1 = G2Element(g.e1 + XRING.one(), g.e2, g.xi)
        bad2 = G2Element(g.e1, g.e2 + yi(1), g.xi)
        bad3 = G2Element(g.e1, g.e2, g.xi + mult_map(XRING.one(), 2))
        assert not check_membership(bad1).ok
        assert not check_membership(bad2).ok
        assert not check_membership(bad3).ok


def test_g2_witness_determined_by_element():
    rng = random.Random(29)
    e2, ep = rand_poly(rng, 1), rand_poly(rng, 1)
    xi_p = rand_flag_map(rng, 2)
    g = gen_g2(e2, ep, xi_p)
    w = check_membership(g).witness
    assert w.e_prime == ep
    assert w.xi_prime == xi_p


def test_generated_g3_members_and_perturbations():
    rng = random.Random(31)
    for _ in range(8):
        g = gen_g3(rand_poly(rng, 2), rand_poly(rng, 2), rand_poly(rng, 2),
                   rand_flag_map(rng, 3))
        assert check_membership(g).ok
        bad1 = G3Element(g.ee1 + XRING.one(), g.ee2, g.ee3, g.chi)
        bad2 = G3Element(g.ee1, g.ee2, g.ee3 + yi(2), g.chi)
        bad3 = G3Element(g.ee1, g.ee2, g.ee3,
                         g.chi + mult_map(XRING.one(), 3))
        assert not check_membership(bad1).ok
        assert not check_membership(bad2).ok
        assert not check_membership(bad3).ok


def test_g3_witness_round_trip():
    rng = random.Random(37)
    ee3, eebar, eedp = (rand_poly(rng, 2) for _ in range(3))
    chipp = rand_flag_map(rng, 3)
    g = gen_g3(ee3, eebar, eedp, chipp)
    w = check_membership(g).witness
    assert w.ee_bar == eebar
    assert w.ee_dprime == eedp
    assert w.chipp == chipp
    assert gen_g3(g.ee3, w.ee_bar, w.ee_dprime, w.chipp) == g


def test_g4_membership_and_perturbation():
    from sl2tensor.product import d21_222
    from sl2tensor.gmodels import G4Element
    rng = random.Random(41)
    outer = gen_g2(rand_poly(rng, 1, 2), rand_poly(rng, 1, 2),
                   rand_flag_map(rng, 2, 1))
    inner = gen_g3(rand_poly(rng, 2, 2), rand_poly(rng, 2, 2),
                   rand_poly(rng, 2, 2), rand_flag_map(rng, 3, 1))
    g = d21_222(outer, inner)
    assert check_membership(g).ok
    bad = G4Element(g.eee1 + XRING.one(), g.eee2, g.eee3, g.eee4, g.psi)
    assert not check_membership(bad).ok


def test_check_corner():
    w = nh.xvar(1) + nh.yvar()
    v = yi(1) * yi(2) * w
    r = check_corner(v, 2)
    assert r.ok and r.witness == w
    assert not check_corner(yi(1) * w, 2).ok
    assert check_corner(XRING.zero(), 3).ok


def test_require_witness_raises_on_nonmember():
    bad = G2Element(XRING.one(), XRING.zero(), SlotMap.zero(2))
    with pytest.raises(Exception):
        require_witness(bad)


def test_membership_result_reports_violations():
    bad = G2Element(XRING.one(), XRING.zero(), SlotMap.zero(2))
    r = check_membership(bad)
    assert not r.ok
    assert r.violations and any("divide" in v for v in r.violations)
