"""The explicit comparison at power one of each factor.

Three bimodule pictures of the same object (R with e^2 = omega*e, the
tensor square Bs1, and the twisted diagonals Q1, Q2), the dictionary
between their matrix algebras T0 and C0, and the degreewise tensor-square
cross-check.
"""

from sl2tensor.comparison import (OMEGA, Q2Element, RElement, Y1, Y2,
                                  build_C0, build_E_modules, build_T0,
                                  gamma, gamma_prime, hecke_maps, hilbert,
                                  phi_map, verify_comparison)
from sl2tensor.matrixalg import tensor_over
from sl2tensor.polynomials import YRING

e = RElement.e()
print("gamma(e)        =", gamma(e).render())
print("gamma'(e)       =", gamma_prime(e).render())
print("e^2 == omega*e  :", (e * e - RElement(YRING.zero(), OMEGA)).is_zero())

# the nil Hecke relation on the twisted diagonal, with +Id
xE, Ex = hecke_maps()
q = Q2Element(Y1 ** 2, Y2 ** 2)
print("\nq               =", q.render())
print("t21(q)          =", q.t21().render())
print("Ex t21 - t21 xE :", (Ex(q.t21()) - xE(q).t21()).render(), "(= q)")

# the two matrix algebras and the dictionary between them
T0, C0 = build_T0(), build_C0()
Phi = phi_map(T0, C0)
print("\ndim T0 by degree:", dict(hilbert("T0", 6)))
print("dim C0 by degree:", dict(hilbert("C0", 6)))
checks = sum(Phi.apply(a * b) == Phi.apply(a) * Phi.apply(b)
             for a in T0.basis_elements() for b in T0.basis_elements())
print("Phi multiplicative on basis pairs:", checks, "of",
      len(T0.basis_elements()) ** 2)

# the tensor square has the graded dimensions of Q2
M, N = build_E_modules(C0)
T = tensor_over(M, N, 10)
print("\ntensor square dims:", [T.dim(d) for d in range(0, 11, 2)])
print("Q2 dims           :", [dim for _, dim in hilbert("Q2", 10)])

print("\nfull verification at degree bound 8:")
for rep in verify_comparison(8):
    print(f"  [{rep['status'].upper():4s}] {rep['check']}")
