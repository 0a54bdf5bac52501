"""Divisibility by the corner factors and membership witnesses.

A polynomial is divisible by prod_i (x_i - y) exactly when it dies under
every substitution x_i -> y; the membership checks turn each such
divisibility condition into explicit cofactor data (a witness).
"""

from sl2tensor import nilhecke as nh
from sl2tensor.gmodels import check_corner, check_g2, check_g3, gen_g2, gen_g3, yi
from sl2tensor.slotmaps import SlotMap

x1, x2, y = nh.xvar(1), nh.xvar(2), nh.yvar()


def vanishes_at_corner(v, n):
    return all(v.substitute(f"x{i}", y).is_zero() for i in range(1, n + 1))


# at two slots: (x1-y)(x2-y)*f dies under both substitutions, x1*f does not
f = x1 + x2 ** 2
killed = yi(1) * yi(2) * f
kept = x1 * f
print("multiple of (x1-y)(x2-y) vanishes:", vanishes_at_corner(killed, 2))
print("arbitrary polynomial vanishes:    ", vanishes_at_corner(kept, 2))
r = check_corner(killed, 2)
print("witness recovers the cofactor:    ", r.ok and r.witness == f)

# a G2 element from its generating data, and its witness recovered back
g = gen_g2(x1 ** 2, nh.XRING.one(), SlotMap(2, nh.tau(1, 2)))
res = check_g2(g)
print("\nG2 membership:", res.ok)
w = res.witness
print("  e'  =", w.e_prime.render())
print("  xi' =", w.xi_prime.op.render())
assert gen_g2(g.e2, w.e_prime, w.xi_prime) == g

# same story one slot up
g3 = gen_g3(x2 * y, x1, y ** 2, SlotMap(3, nh.tau(2, 3)))
res3 = check_g3(g3)
print("\nG3 membership:", res3.ok)
w3 = res3.witness
print("  ee_bar  =", w3.ee_bar.render())
print("  ee''    =", w3.ee_dprime.render())
print("  chi''   =", w3.chipp.op.render())
assert gen_g3(g3.ee3, w3.ee_bar, w3.ee_dprime, w3.chipp) == g3

# perturbing one coordinate breaks exactly one divisibility condition
bad = type(g3)(g3.ee1, g3.ee2 + yi(1) * yi(2), g3.ee3, g3.chi)
res_bad = check_g3(bad)
print("\nperturbed element ok:", res_bad.ok)
print("violation:", res_bad.violations[0])
