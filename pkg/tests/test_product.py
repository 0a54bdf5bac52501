import pytest

from sl2tensor import nilhecke as nh
from sl2tensor import product as pr
from sl2tensor.gmodels import (G1Element, check_membership, gen_g2, gen_g3,
                               mult_map, yi)
from sl2tensor.polynomials import XRING
from sl2tensor.slotmaps import SlotMap

X1, Y = nh.xvar(1), nh.yvar()
ONE = XRING.one()


def small_g1():
    return G1Element(Y, Y + yi(1))


def small_g2():
    return gen_g2(X1, ONE, SlotMap(2, nh.tau(1, 2)))


def small_g3():
    return gen_g3(nh.xvar(2), X1, Y, SlotMap(3, nh.tau(2, 3)))


def small_g4():
    return pr.d21_222(small_g2(), small_g3())


def corner(power, j):
    n = power + j - 1
    v = ONE
    for i in range(1, n + 1):
        v = v * yi(i)
    return pr.Ent(power, 1, j, v)


def test_ent_validation():
    with pytest.raises(ValueError):
        pr.Ent(2, 3, 1, ONE)
    with pytest.raises(TypeError):
        pr.Ent(2, 1, 1, small_g2())  # first row wants polynomials
    with pytest.raises(TypeError):
        pr.Ent(2, 2, 1, small_g3())  # (2,1) at power 2 wants a G_2
    assert pr.Ent(2, 1, 2, ONE).nslots() == 3
    assert pr.Ent(3, 2, 1, small_g3()).nslots() == 3


def test_entry_membership_dispatch():
    assert pr.entry_membership(corner(2, 1)).ok
    assert not pr.entry_membership(pr.Ent(2, 1, 1, ONE)).ok
    assert pr.entry_membership(pr.Ent(2, 2, 1, small_g2())).ok


def test_xtilde_components():
    ent = pr.Ent(1, 1, 1, yi(1))
    assert pr.xtilde(ent).value == nh.xvar(1) * yi(1)
    g = small_g1()
    out = pr.xtilde(pr.Ent(1, 2, 1, g)).value
    assert out.theta == Y * g.theta and out.phi == X1 * g.phi
    assert check_membership(out).ok
    with pytest.raises(ValueError):
        pr.xtilde(corner(2, 1))


def test_hecke_relations_on_all_components():
    entries = [corner(2, 1), corner(2, 2),
               pr.Ent(2, 2, 1, small_g2()), pr.Ent(2, 2, 2, small_g3())]
    for ent in entries:
        v = ent.value
        assert pr.etildex(pr.tautilde(ent)).value - pr.tautilde(pr.xtildeE(ent)).value == v
        assert pr.tautilde(pr.etildex(ent)).value - pr.xtildeE(pr.tautilde(ent)).value == v
        assert pr.tautilde(pr.tautilde(ent)).value.is_zero()


def test_braid_routes_g3():
    r1, r2, expected = pr.braid_routes_g3(small_g3())
    assert r1[-1].value == r2[-1].value == expected
    for step in r1 + r2:
        assert pr.entry_membership(step).ok


def test_braid_routes_g4():
    r1, r2, expected = pr.braid_routes_g4(small_g4())
    assert r1[-1].value == r2[-1].value == expected


def test_scalar_actions():
    theta = Y ** 2
    ent = corner(2, 1)
    assert pr.act_scalar_right(ent, theta).value == ent.value * theta
    assert pr.act_scalar_left(ent, theta).value == ent.value * theta
    g = pr.Ent(2, 2, 1, small_g2())
    out = pr.act_scalar_right(g, theta).value
    assert out.e1 == small_g2().e1 * theta
    assert check_membership(out).ok
    with pytest.raises(ValueError):
        pr.act_scalar_right(ent, X1)  # scalars live in k[y]
    with pytest.raises(ValueError):
        pr.act_scalar_right(corner(2, 2), theta)  # wrong column


def test_g1op_actions():
    p = small_g1()
    ent = pr.Ent(2, 2, 2, small_g3())
    right = pr.act_g1op_right(ent, p).value
    left = pr.act_g1op_left(ent, p).value
    assert check_membership(right).ok and check_membership(left).ok
    assert right.ee3 == p.theta * small_g3().ee3
    assert left.ee3 == p.theta * small_g3().ee3
    with pytest.raises(ValueError):
        pr.act_g1op_right(corner(2, 1), p)


def test_corner_actions_move_between_columns():
    e = X1 + Y
    ent = corner(2, 1)
    out = pr.act_corner_right(ent, e)
    assert (out.i, out.j) == (1, 2)
    assert pr.entry_membership(out).ok
    g = pr.Ent(2, 2, 1, small_g2())
    out2 = pr.act_corner_right(g, e)
    assert (out2.i, out2.j) == (2, 2)
    assert pr.entry_membership(out2).ok
    back = pr.act_corner_left(out2, ONE)
    assert (back.i, back.j) == (1, 2)
    assert pr.entry_membership(back).ok
    with pytest.raises(ValueError):
        pr.act_corner_right(ent, nh.xvar(2))  # corner generators use (x1, y)


def test_corner_left_is_evaluation():
    g = small_g2()
    ent = pr.Ent(2, 2, 1, g)
    e = X1 - Y
    out = pr.act_corner_left(ent, e)
    assert out.value == g.xi.eval_at(yi(1) * e)


def test_pairing_diagrams_land_in_membership():
    g2, g3, g1 = small_g2(), small_g3(), small_g1()
    assert check_membership(pr.d21_211(g2, X1)).ok
    assert check_membership(pr.d12_211(g1, nh.xvar(2) + Y)).ok
    assert check_membership(pr.d12_221(g2, g2)).ok
    assert check_membership(pr.d21_221(g3, g1)).ok
    assert check_membership(pr.d21_212(g2, X1 * Y)).ok
    assert check_membership(pr.d12_212(g1, nh.xvar(3))).ok
    assert check_membership(pr.d12_222(g3, g2)).ok
    assert check_membership(pr.d21_222(g2, g3)).ok


def test_pairings_agree_with_column_actions():
    g2, g3, g1 = small_g2(), small_g3(), small_g1()
    assert pr.d21_211(g2, X1) == pr.act_corner_right(pr.Ent(2, 2, 1, g2), X1).value
    assert pr.d21_221(g3, g1) == pr.act_g1op_right(pr.Ent(2, 2, 2, g3), g1).value


def test_tau_commutes_with_scalars_fixed_case():
    theta = Y + ONE
    ent = pr.Ent(2, 2, 1, small_g2())
    assert pr.tautilde(pr.act_scalar_right(ent, theta)) == \
        pr.act_scalar_right(pr.tautilde(ent), theta)


def test_crossing_collapses_difference():
    # on the (2,1) corner, tau-tilde is the divided difference
    v = yi(1) * yi(2) * (nh.xvar(1) - nh.xvar(2))
    ent = pr.Ent(2, 1, 1, v)
    out = pr.tautilde(ent).value
    assert out == nh.tau(1, 2).act(v)
    assert pr.entry_membership(pr.tautilde(ent)).ok
