"""Exact computer algebra for a tensor 2-product of sl2 2-representations.

Layers, bottom up:

* ``polynomials`` -- sparse exact-rational polynomial arithmetic.
* ``nilhecke``    -- the nil affine Hecke algebra in normal form, its action
  on polynomials by divided differences, and the flag-word canonicalization
  used by everything above it.
* ``slotmaps``    -- operators E -> E^n[y] (one-slot-in, n-slots-out maps),
  slot insertion, composition via evaluation, and operator recovery.
* ``gmodels``     -- the bimodules G_n with their divisibility membership
  conditions, witness extraction and generation.
* ``product``     -- the grid of components at each power and the product
  action (x-tilde, tau-tilde, tau-tilde_1/2) with its Hecke and braid
  relations.
* ``matrixalg``   -- generalized 2x2 matrix algebras, graded modules over
  them, tensor products over the algebra, induced endomorphisms.
* ``comparison``  -- the fully explicit rank-one case on both sides and the
  machine check that they agree.
* ``textform``    -- the shared expression grammar (parse/render).
* ``suites``      -- randomized verification suites behind the CLI.
"""

from .polynomials import Polynomial, Ring, NotDivisible, XRING, YRING

__version__ = "0.1.0"
