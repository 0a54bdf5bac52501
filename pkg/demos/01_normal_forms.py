"""Normal forms in the nil affine Hecke algebra on n slots.

Every element is stored as a sum p_w * tau_w with the polynomial
coefficients on the left, so products straighten automatically.
"""

from sl2tensor import nilhecke as nh
from sl2tensor.textform import parse

x1, x2 = nh.xvar(1), nh.xvar(2)
t1 = nh.tau(1, 2)

print("tau1 * x1      =", (t1 * nh.from_poly(x1, 2)).render())
print("x1 * tau1      =", (nh.from_poly(x1, 2) * t1).render())
print("tau1 * tau1    =", (t1 * t1).render())
print("tau1*x1^2      =", (t1 * nh.from_poly(x1 ** 2, 2)).render())

s1 = nh.s_elem(1, 2)
d1 = nh.delta(1, 2)
print("s1             =", s1.render())
print("s1 * s1        =", (s1 * s1).render())
print("delta1         =", d1.render())
print("delta1^2 == delta1:", (d1 * d1) == d1)

# the action on polynomials: tau_i is the divided difference
v = x1 ** 3 * x2
print("tau1 . x1^3*x2 =", t1.act(v).render())
print("s1 . x1^3*x2   =", s1.act(v).render(), "(the slot swap)")

# braid relation at three slots
a = nh.tau(1, 3) * nh.tau(2, 3) * nh.tau(1, 3)
b = nh.tau(2, 3) * nh.tau(1, 3) * nh.tau(2, 3)
print("braid holds at n=3:", a == b)

# text round trip
h = parse("(x2 - y) * tau1 + 1", 2)
print("parsed         =", h.render())
assert parse(h.render(), 2) == h
