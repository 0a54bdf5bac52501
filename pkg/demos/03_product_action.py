"""The product action on the 2x2 grid of components.

Entries carry (power, row, column); xtilde/tautilde and the generator
actions move them around the grid, and the nil Hecke relations hold on
the nose on every component.
"""

from sl2tensor import nilhecke as nh
from sl2tensor import product as pr
from sl2tensor.gmodels import gen_g2, gen_g3, yi
from sl2tensor.slotmaps import SlotMap

x1, y, one = nh.xvar(1), nh.yvar(), nh.XRING.one()

# a corner entry at power 2 and the two translates of the grid
v = yi(1) * yi(2) * x1
ent = pr.Ent(2, 1, 1, v)
print("entry          :", ent.value.render(), "at", (ent.power, ent.i, ent.j))
print("tautilde       :", pr.tautilde(ent).value.render())
print("xtildeE        :", pr.xtildeE(ent).value.render())
print("etildex        :", pr.etildex(ent).value.render())

# both nil Hecke relations, exactly
lhs1 = pr.etildex(pr.tautilde(ent)).value - pr.tautilde(pr.xtildeE(ent)).value
lhs2 = pr.tautilde(pr.etildex(ent)).value - pr.xtildeE(pr.tautilde(ent)).value
print("eX tau - tau xE == id:", lhs1 == v)
print("tau eX - xE tau == id:", lhs2 == v)
print("tautilde^2 == 0      :", pr.tautilde(pr.tautilde(ent)).value.is_zero())

# the same relations on a G2 entry in the lower row
g2 = gen_g2(x1, one, SlotMap(2, nh.tau(1, 2)))
gent = pr.Ent(2, 2, 1, g2)
glhs = pr.etildex(pr.tautilde(gent)).value - pr.tautilde(pr.xtildeE(gent)).value
print("relation on a G2 row :", glhs == g2)

# braid route at power 3: two reduced words, one endpoint
g3 = gen_g3(nh.xvar(2), x1, y, SlotMap(3, nh.tau(2, 3)))
r1, r2, expected = pr.braid_routes_g3(g3)
print("\nbraid route lengths  :", len(r1), "and", len(r2))
print("endpoints agree      :", r1[-1].value == r2[-1].value == expected)

# generator actions move entries between columns
out = pr.act_corner_right(ent, x1 + y)
print("\ncorner action        : column", ent.j, "->", out.j,
      "| still in its space:", pr.entry_membership(out).ok)
back = pr.act_corner_left(pr.Ent(2, 2, 1, g2), x1 - y)
print("corner action (left) : row 2 -> row", back.i,
      "| value:", back.value.render())
