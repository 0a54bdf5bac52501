"""The product action on the tensor-square bimodule and its powers.

The n-th power of the product bimodule is a 2x2 matrix of components

    [ y1..yn E^n[y]      y1..y(n+1) E^(n+1)[y] ]
    [ G_n                G_(n+1)               ]

An entry is carried around as ``Ent(power, i, j, value)``: ``i = 1`` rows
hold corner polynomials (divisible by the product of the y's), ``i = 2``
rows hold G-elements.  The maps implemented here, each given componentwise:

* ``xtilde`` on first-power entries; ``xtildeE`` / ``etildex`` (the two
  one-sided dot maps) on second-power entries;
* ``tautilde`` on second-power entries, ``tau1`` / ``tau2`` on third-power
  entries (the crossing acting in the bottom resp. top pair of factors);
* the generator actions of the product algebra: scalars in k[y], the
  degree-zero pairs (theta, phi), and the corner generators y1*e acting
  from either side;
* the composite diagrams pairing a lower G with a corner or another G,
  used to manufacture G_3 and G_4 elements.

Slot bookkeeping (slot 1 = innermost/rightmost factor; an operator
prefixed by k E's acts on slots shifted up by k) fixes which tau_i / x_i
realizes each symbol; e.g. on third-power entries tau-tilde_1 acts on the
(1,1) corner by tau_1 and on the (1,2) corner by tau_2.

The Hecke identities  etildex . tautilde - tautilde . xtildeE = Id  and
tautilde . etildex - xtildeE . tautilde = Id, the vanishing of
tautilde^2, and the braid identity tau1 tau2 tau1 = tau2 tau1 tau2
(with the closed end forms built from the witnesses) are exercised by the
verification suites.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .polynomials import Polynomial, XRING
from . import nilhecke as nh
from .slotmaps import SlotMap, mult_map, apply_to_slot, compose_insertion
from .gmodels import (G1Element, G2Element, G3Element, G4Element,
                      check_membership, check_corner, require_witness, yi)

__all__ = [
    "Ent", "xtilde", "xtildeE", "etildex", "tautilde", "tau1", "tau2",
    "act_scalar_right", "act_scalar_left", "act_g1op_right", "act_g1op_left",
    "act_corner_right", "act_corner_left",
    "d21_212", "d12_212", "d21_222", "d12_222", "d21_211", "d12_211", "d12_221",
    "entry_membership", "braid_routes_g3", "braid_routes_g4",
]

Value = Union[Polynomial, G1Element, G2Element, G3Element, G4Element]


@dataclass(frozen=True)
class Ent:
    """One matrix entry of the power-``power`` product bimodule."""
    power: int
    i: int
    j: int
    value: Value

    def __post_init__(self):
        if self.i not in (1, 2) or self.j not in (1, 2):
            raise ValueError("matrix position out of range")
        if self.i == 1 and not isinstance(self.value, Polynomial):
            raise TypeError("first-row entries are polynomials")
        expected = {1: {1: G1Element, 2: G2Element},
                    2: {1: G2Element, 2: G3Element},
                    3: {1: G3Element, 2: G4Element}}
        if self.i == 2 and not isinstance(self.value, expected[self.power][self.j]):
            raise TypeError(f"entry (2,{self.j}) at power {self.power} has wrong type")

    def nslots(self) -> int:
        """Number of tensor slots of the underlying corner/operator."""
        return self.power + self.j - 1


def entry_membership(ent: Ent):
    """Membership of the entry: corner divisibility or G-model conditions."""
    if ent.i == 1:
        return check_corner(ent.value, ent.nslots())
    return check_membership(ent.value)


def _same(ent: Ent, value: Value) -> Ent:
    return Ent(ent.power, ent.i, ent.j, value)


# ---------------------------------------------------------------------------
# x-tilde and tau-tilde
# ---------------------------------------------------------------------------

def xtilde(ent: Ent) -> Ent:
    """The dot on the product bimodule (first power)."""
    if ent.power != 1:
        raise ValueError("xtilde acts on first-power entries")
    v = ent.value
    if (ent.i, ent.j) == (1, 1):
        return _same(ent, nh.xvar(1) * v)
    if (ent.i, ent.j) == (1, 2):
        return _same(ent, nh.xvar(2) * v)
    if (ent.i, ent.j) == (2, 1):
        return _same(ent, G1Element(nh.yvar() * v.theta, nh.xvar(1) * v.phi))
    return _same(ent, G2Element(nh.yvar() * v.e1, nh.xvar(1) * v.e2,
                                v.xi.scale(nh.xvar(2))))


def xtildeE(ent: Ent) -> Ent:
    """Dot on the left tensor factor of the square."""
    if ent.power != 2:
        raise ValueError("xtildeE acts on second-power entries")
    v = ent.value
    if (ent.i, ent.j) == (1, 1):
        return _same(ent, nh.xvar(2) * v)
    if (ent.i, ent.j) == (1, 2):
        return _same(ent, nh.xvar(3) * v)
    if (ent.i, ent.j) == (2, 1):
        return _same(ent, G2Element(nh.yvar() * v.e1, nh.xvar(1) * v.e2,
                                    v.xi.scale(nh.xvar(2))))
    return _same(ent, G3Element(nh.yvar() * v.ee1, nh.xvar(2) * v.ee2,
                                nh.xvar(2) * v.ee3, v.chi.scale(nh.xvar(3))))


def etildex(ent: Ent) -> Ent:
    """Dot on the right tensor factor of the square."""
    if ent.power != 2:
        raise ValueError("etildex acts on second-power entries")
    v = ent.value
    if (ent.i, ent.j) == (1, 1):
        return _same(ent, nh.xvar(1) * v)
    if (ent.i, ent.j) == (1, 2):
        return _same(ent, nh.xvar(2) * v)
    if (ent.i, ent.j) == (2, 1):
        return _same(ent, G2Element(nh.xvar(1) * v.e1, nh.yvar() * v.e2,
                                    v.xi.scale(nh.xvar(1))))
    return _same(ent, G3Element(nh.xvar(2) * v.ee1, nh.yvar() * v.ee2,
                                nh.xvar(1) * v.ee3, v.chi.scale(nh.xvar(2))))


def tautilde(ent: Ent) -> Ent:
    """The crossing on the square of the product bimodule."""
    if ent.power != 2:
        raise ValueError("tautilde acts on second-power entries")
    v = ent.value
    if (ent.i, ent.j) == (1, 1):
        return _same(ent, nh.tau(1, 2).act(v))
    if (ent.i, ent.j) == (1, 2):
        return _same(ent, nh.tau(2, 3).act(v))
    if (ent.i, ent.j) == (2, 1):
        w = require_witness(v)
        return _same(ent, G2Element(w.e_prime, w.e_prime,
                                    v.xi.compose_left(nh.tau(1, 2))))
    w = require_witness(v)
    return _same(ent, G3Element(w.ee_prime, w.ee_prime, nh.tau(1, 2).act(v.ee3),
                                v.chi.compose_left(nh.tau(2, 3))))


def tau1(ent: Ent) -> Ent:
    """Crossing in the bottom pair of factors of the cube."""
    if ent.power != 3:
        raise ValueError("tau1 acts on third-power entries")
    v = ent.value
    if (ent.i, ent.j) == (1, 1):
        return _same(ent, nh.tau(1, 3).act(v))
    if (ent.i, ent.j) == (1, 2):
        return _same(ent, nh.tau(2, 4).act(v))
    if (ent.i, ent.j) == (2, 1):
        w = require_witness(v)
        return _same(ent, G3Element(nh.tau(1, 2).act(v.ee1),
                                    -w.ee_dprime, -w.ee_dprime,
                                    v.chi.compose_left(nh.tau(1, 3))))
    w = require_witness(v)
    return _same(ent, G4Element(nh.tau(2, 3).act(v.eee1), w.d2, w.d2,
                                nh.tau(1, 3).act(v.eee4),
                                v.psi.compose_left(nh.tau(2, 4))))


def tau2(ent: Ent) -> Ent:
    """Crossing in the top pair of factors of the cube."""
    if ent.power != 3:
        raise ValueError("tau2 acts on third-power entries")
    v = ent.value
    if (ent.i, ent.j) == (1, 1):
        return _same(ent, nh.tau(2, 3).act(v))
    if (ent.i, ent.j) == (1, 2):
        return _same(ent, nh.tau(3, 4).act(v))
    if (ent.i, ent.j) == (2, 1):
        w = require_witness(v)
        return _same(ent, G3Element(w.ee_prime, w.ee_prime,
                                    nh.tau(1, 2).act(v.ee3),
                                    v.chi.compose_left(nh.tau(2, 3))))
    w = require_witness(v)
    return _same(ent, G4Element(w.d4, w.d4, nh.tau(2, 3).act(v.eee3),
                                nh.tau(2, 3).act(v.eee4),
                                v.psi.compose_left(nh.tau(3, 4))))


# ---------------------------------------------------------------------------
# generator actions on the square
# ---------------------------------------------------------------------------

def _ypoly(theta: Polynomial) -> Polynomial:
    for nm in ("x1", "x2", "x3", "x4"):
        if theta.uses_var(nm):
            raise ValueError("scalar generators are polynomials in y alone")
    return theta


def act_scalar_right(ent: Ent, theta: Polynomial) -> Ent:
    """Right action of a scalar in k[y] (first-column entries)."""
    theta = _ypoly(theta)
    v = ent.value
    if (ent.i, ent.j) == (1, 1):
        return _same(ent, v * theta)
    if (ent.i, ent.j) == (2, 1):
        return _same(ent, G2Element(v.e1 * theta, v.e2 * theta, v.xi.scale(theta)))
    raise ValueError("right scalar action lives on the first column")


def act_scalar_left(ent: Ent, theta: Polynomial) -> Ent:
    """Left action of a scalar in k[y] (first-row entries)."""
    theta = _ypoly(theta)
    if ent.i != 1:
        raise ValueError("left scalar action lives on the first row")
    return _same(ent, ent.value * theta)


def act_g1op_right(ent: Ent, g: G1Element) -> Ent:
    """Right action of a degree-zero pair (theta, phi) (second column)."""
    v = ent.value
    if (ent.i, ent.j) == (1, 2):
        return _same(ent, v * g.phi)
    if (ent.i, ent.j) == (2, 2):
        return _same(ent, G3Element(g.phi * v.ee1, g.phi * v.ee2,
                                    g.theta * v.ee3, v.chi.scale(g.phi)))
    raise ValueError("right pair action lives on the second column")


def act_g1op_left(ent: Ent, g: G1Element) -> Ent:
    """Left action of a degree-zero pair (theta, phi) (second row)."""
    v = ent.value
    if (ent.i, ent.j) == (2, 1):
        return _same(ent, G2Element(g.theta * v.e1, g.theta * v.e2,
                                    v.xi.source_mul(g.phi)))
    if (ent.i, ent.j) == (2, 2):
        return _same(ent, G3Element(g.theta * v.ee1, g.theta * v.ee2,
                                    g.theta * v.ee3, v.chi.source_mul(g.phi)))
    raise ValueError("left pair action lives on the second row")


def _corner_gen(e: Polynomial) -> Polynomial:
    """The generator y1*e of the corner bimodule, e given in (x1, y)."""
    for nm in ("x2", "x3", "x4"):
        if e.uses_var(nm):
            raise ValueError("corner generators are polynomials in (x1, y)")
    return yi(1) * e


def act_corner_right(ent: Ent, e: Polynomial) -> Ent:
    """Right action of the corner generator y1*e: first column -> second."""
    gen = _corner_gen(e)
    v = ent.value
    if (ent.i, ent.j) == (1, 1):
        moved = v.remap_positions({0: 1, 1: 2})
        return Ent(ent.power, 1, 2, moved * gen)
    if (ent.i, ent.j) == (2, 1):
        return Ent(ent.power, 2, 2, G3Element(
            v.e1.remap_positions({0: 1}) * gen,
            v.e2.remap_positions({0: 1}) * gen,
            XRING.zero(),
            v.xi.tensor_low(gen, 1)))
    raise ValueError("right corner action lives on the first column")


def act_corner_left(ent: Ent, e: Polynomial) -> Ent:
    """Left action of the corner generator y1*e: second row -> first."""
    gen = _corner_gen(e)
    v = ent.value
    if (ent.i, ent.j) == (2, 1):
        return Ent(ent.power, 1, 1, v.xi.eval_at(gen))
    if (ent.i, ent.j) == (2, 2):
        return Ent(ent.power, 1, 2, v.chi.eval_at(gen))
    raise ValueError("left corner action lives on the second row")


# ---------------------------------------------------------------------------
# composite diagrams
# ---------------------------------------------------------------------------

def d21_211(g: G2Element, e: Polynomial) -> G3Element:
    """Pair a G_2 with a corner generator y1*e from below."""
    return act_corner_right(Ent(2, 2, 1, g), e).value


def d12_211(g: G1Element, ee: Polynomial) -> G3Element:
    """Pair a degree-zero pair with a doubly divisible corner element."""
    Y = yi(1) * yi(2) * ee
    return G3Element(g.theta * Y, XRING.zero(), XRING.zero(),
                     SlotMap(3, nh.from_poly(g.phi.remap_positions({0: 2}) * Y, 3)))


def d12_221(outer: G2Element, inner: G2Element) -> G3Element:
    """Insert a G_2 into a G_2 (outer applied inside inner's output)."""
    return G3Element(
        outer.xi.eval_at(inner.e1),
        inner.e2.remap_positions({0: 1}) * outer.e1,
        inner.e2.remap_positions({0: 1}) * outer.e2,
        compose_insertion(outer.xi, inner.xi))


def d21_221(g: G3Element, p: G1Element) -> G3Element:
    """Pair a G_3 with a degree-zero pair from below (= right pair action)."""
    return act_g1op_right(Ent(2, 2, 2, g), p).value


def d21_212(g: G2Element, ee: Polynomial) -> G4Element:
    """Pair a G_2 with a doubly divisible corner element from below."""
    Y = yi(1) * yi(2) * ee
    return G4Element(
        g.e1.remap_positions({0: 2}) * Y,
        g.e2.remap_positions({0: 2}) * Y,
        XRING.zero(), XRING.zero(),
        g.xi.tensor_low(Y, 2))


def d12_212(g: G1Element, eee: Polynomial) -> G4Element:
    """Pair a degree-zero pair with a triply divisible corner element."""
    Y = yi(1) * yi(2) * yi(3) * eee
    return G4Element(g.theta * Y, XRING.zero(), XRING.zero(), XRING.zero(),
                     SlotMap(4, nh.from_poly(g.phi.remap_positions({0: 3}) * Y, 4)))


def d12_222(outer: G3Element, inner: G2Element) -> G4Element:
    """Insert a G_3 into a G_2."""
    e2_high = inner.e2.remap_positions({0: 2})
    return G4Element(
        outer.chi.eval_at(inner.e1),
        e2_high * outer.ee1, e2_high * outer.ee2, e2_high * outer.ee3,
        compose_insertion(outer.chi, inner.xi))


def d21_222(outer: G2Element, inner: G3Element) -> G4Element:
    """Insert a G_2 into a G_3."""
    ee3_high = inner.ee3.remap_positions({0: 1, 1: 2})
    return G4Element(
        apply_to_slot(outer.xi, inner.ee1, 1, 2),
        apply_to_slot(outer.xi, inner.ee2, 1, 2),
        ee3_high * outer.e1, ee3_high * outer.e2,
        compose_insertion(outer.xi, inner.chi))


# ---------------------------------------------------------------------------
# braid routes with their closed forms
# ---------------------------------------------------------------------------

def braid_routes_g3(g: G3Element):
    """Both braid routes on a (2,1) third-power entry plus expected forms.

    Returns (route121, route212, expected) where each route is the list of
    the three successive images and expected is the common end form
    computed directly from the witnesses of g.
    """
    ent = Ent(3, 2, 1, g)
    w = require_witness(g)
    r1 = [tau1(ent)]
    r1.append(tau2(r1[-1]))
    r1.append(tau1(r1[-1]))
    r2 = [tau2(ent)]
    r2.append(tau1(r2[-1]))
    r2.append(tau2(r2[-1]))
    tbar = nh.tau(1, 2).act(w.ee_bar)
    expected = G3Element(-tbar, -tbar, -tbar,
                         g.chi.compose_left(nh.tau(1, 3) * nh.tau(2, 3) * nh.tau(1, 3)))
    return r1, r2, expected


def braid_routes_g4(g: G4Element):
    """Both braid routes on a (2,2) third-power entry plus expected forms."""
    ent = Ent(3, 2, 2, g)
    w = require_witness(g)
    r1 = [tau1(ent)]
    r1.append(tau2(r1[-1]))
    r1.append(tau1(r1[-1]))
    r2 = [tau2(ent)]
    r2.append(tau1(r2[-1]))
    r2.append(tau2(r2[-1]))
    tbar = nh.tau(2, 3).act(w.eee_bar)
    t121 = (nh.tau(1, 3) * nh.tau(2, 3) * nh.tau(1, 3)).act(g.eee4)
    expected = G4Element(tbar, tbar, tbar, t121,
                         g.psi.compose_left(nh.tau(2, 4) * nh.tau(3, 4) * nh.tau(2, 4)))
    return r1, r2, expected
