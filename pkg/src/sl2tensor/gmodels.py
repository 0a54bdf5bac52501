"""The bimodules G_n: tuples of polynomials plus one operator, cut out by
divisibility conditions.

Throughout, y_i denotes the polynomial x_i - y, and "divisible by y_i"
for an operator means divisibility of its canonical (flag-word) form,
which the slotmaps layer makes coefficientwise.  An element of G_n is

    G_1:  (theta, phi)            theta in k[y], phi in k[x1, y]
    G_2:  (e1, e2, xi)            e's in E[y] = k[x1, y], xi: E -> E^2[y]
    G_3:  (ee1, ee2, ee3, chi)    ee's in E^2[y], chi: E -> E^3[y]
    G_4:  (eee1..eee4, psi)       eee's in E^3[y], psi: E -> E^4[y]

subject to, writing m(e) for the multiplication operator and delta_i =
tau_i y_i for the dot-slide idempotents:

* G_1:  phi - theta  divisible by y_1 (witness phi1).
* G_2:  e1 - e2 = y1 e',   xi = m(e1) + y2 xi1 = delta_1 m(e2) + y1 xi2,
  and equivalently in tau-form  xi1 = tau_1 m(e2) + y1 xi',
  with  xi2 = m(e') + y2 xi'  tying the two forms together.
* G_3:  ee1 - ee2 = y2 ee',  ee3 - ee2 = y1 ee'',  delta(ee3) - ee1 = y1 ee''',
  chi = m(ee1) + y3 chi1 = delta_2 m(ee2) + y2 chi2
      = delta_1 delta_2 m(ee3) + y1 chi3,
  tau-form  chi1 = tau_2 m(ee2) + y2 chi1' ,  chi1' = tau_1 tau_2 m(ee3) + y1 chi'',
  plus a unique eebar with  tau(ee3) - ee' = y1 eebar  and
  ee''' - ee'' = y2 eebar, and the derived consistency identities below.
* G_4:  six polynomial relations (witnesses eee^(1)..eee^(6)):
      eee3 - eee4 = y1 eee^(1),        eee2 - eee3 = y2 eee^(2),
      delta_1(eee4) - eee2 = y1 eee^(3),   eee1 - eee2 = y3 eee^(4),
      eee1 - delta_2(eee3) = y2 eee^(5),
      eee1 - delta_1 delta_2 (eee4) = y1 eee^(6),
  four operator peelings psi1..psi4 against m(eee1), delta_3 m(eee2),
  delta_2 delta_3 m(eee3), delta_1 delta_2 delta_3 m(eee4), and a unique
  eeebar with  eee^(5) - eee^(2) = y3 eeebar  and
  eee^(4) - tauE(eee3) = y2 eeebar.  (The adjacent differences carry one
  y each; each step of distance two costs one delta; the corner relation
  tying eee1 to eee4 costs two.)

``check_membership`` verifies every condition, extracts every witness (all
witnesses are unique because multiplication by y_i is injective), and on
failure reports the first violated condition by name.  ``gen_g2`` /
``gen_g3`` produce elements from free parameters; they hit all of G_2 /
G_3 and their outputs are re-checked in the suites.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polynomials import Polynomial, XRING, NotDivisible
from . import nilhecke as nh
from .nilhecke import NilHeckeElement
from .slotmaps import SlotMap, mult_map

__all__ = [
    "G1Element", "G2Element", "G3Element", "G4Element",
    "G2Witness", "G3Witness", "G4Witness",
    "MembershipResult", "check_membership", "check_corner",
    "gen_g2", "gen_g3",
    "yi", "g1_phi_slotmap",
]


def yi(i: int) -> Polynomial:
    """The polynomial y_i = x_i - y."""
    return nh.xvar(i) - nh.yvar()


def _only_vars(p: Polynomial, allowed: tuple[str, ...], what: str):
    for name in ("x1", "x2", "x3", "x4", "y"):
        if name not in allowed and p.uses_var(name):
            raise ValueError(f"{what} must live in k[{', '.join(allowed)}]")


class _Componentwise:
    """Componentwise abelian-group structure shared by the tuple classes."""

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        cls = type(self)
        return cls(*(a + b for a, b in zip(self._parts(), other._parts())))

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        cls = type(self)
        return cls(*(a - b for a, b in zip(self._parts(), other._parts())))

    def __neg__(self):
        cls = type(self)
        return cls(*(-a for a in self._parts()))

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self._parts())

    def _parts(self):
        return tuple(getattr(self, f) for f in self.__dataclass_fields__)


@dataclass(frozen=True)
class G1Element(_Componentwise):
    theta: Polynomial  # in k[y]
    phi: Polynomial    # in k[x1, y], acting by multiplication

    def __post_init__(self):
        _only_vars(self.theta, ("y",), "theta")
        _only_vars(self.phi, ("x1", "y"), "phi")


@dataclass(frozen=True)
class G2Element(_Componentwise):
    e1: Polynomial
    e2: Polynomial
    xi: SlotMap

    def __post_init__(self):
        _only_vars(self.e1, ("x1", "y"), "e1")
        _only_vars(self.e2, ("x1", "y"), "e2")
        if self.xi.n != 2:
            raise ValueError("xi must map into two slots")


@dataclass(frozen=True)
class G3Element(_Componentwise):
    ee1: Polynomial
    ee2: Polynomial
    ee3: Polynomial
    chi: SlotMap

    def __post_init__(self):
        for nm in ("ee1", "ee2", "ee3"):
            _only_vars(getattr(self, nm), ("x1", "x2", "y"), nm)
        if self.chi.n != 3:
            raise ValueError("chi must map into three slots")


@dataclass(frozen=True)
class G4Element(_Componentwise):
    eee1: Polynomial
    eee2: Polynomial
    eee3: Polynomial
    eee4: Polynomial
    psi: SlotMap

    def __post_init__(self):
        for nm in ("eee1", "eee2", "eee3", "eee4"):
            _only_vars(getattr(self, nm), ("x1", "x2", "x3", "y"), nm)
        if self.psi.n != 4:
            raise ValueError("psi must map into four slots")


@dataclass(frozen=True)
class G2Witness:
    e_prime: Polynomial
    xi1: SlotMap
    xi2: SlotMap
    xi_prime: SlotMap


@dataclass(frozen=True)
class G3Witness:
    ee_prime: Polynomial    # (ee1 - ee2)/y2
    ee_dprime: Polynomial   # (ee3 - ee2)/y1
    ee_tprime: Polynomial   # (delta(ee3) - ee1)/y1
    ee_bar: Polynomial
    chi1: SlotMap
    chi2: SlotMap
    chi3: SlotMap
    chi1p: SlotMap
    chi2p: SlotMap
    chipp: SlotMap


@dataclass(frozen=True)
class G4Witness:
    d1: Polynomial  # (eee3 - eee4)/y1
    d2: Polynomial  # (eee2 - eee3)/y2
    d3: Polynomial  # (Edelta(eee4) - eee2)/y1
    d4: Polynomial  # (eee1 - eee2)/y3
    d5: Polynomial  # (eee1 - deltaE(eee3))/y2
    d6: Polynomial  # (eee1 - Edelta deltaE(eee4))/y1
    eee_bar: Polynomial
    psi1: SlotMap
    psi2: SlotMap
    psi3: SlotMap
    psi4: SlotMap


class MembershipResult:
    """Outcome of a membership check: ok flag, witnesses, or violations."""

    def __init__(self, ok: bool, witness=None, violations=None):
        self.ok = ok
        self.witness = witness
        self.violations = violations or []

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "MembershipResult(ok)"
        return f"MembershipResult(violations={self.violations!r})"


def _fail(*violations: str) -> MembershipResult:
    return MembershipResult(False, violations=list(violations))


def _div_poly(p: Polynomial, i: int, name: str):
    """(quotient, None) or (None, violation string) for p / y_i."""
    try:
        return p.exact_divide(yi(i)), None
    except NotDivisible:
        return None, f"(x{i} - y) does not divide {name}"


def _div_map(m: SlotMap, i: int, name: str):
    try:
        return m.divide_y(i), None
    except NotDivisible:
        return None, f"(x{i} - y) does not divide {name}"


def g1_phi_slotmap(g: G1Element) -> SlotMap:
    """phi as a one-slot operator (multiplication by phi(x1, y))."""
    return SlotMap(1, nh.from_poly(g.phi, 1))


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------

def check_g1(g: G1Element) -> MembershipResult:
    q, bad = _div_poly(g.phi - g.theta, 1, "phi - theta")
    if bad:
        return _fail(bad)
    return MembershipResult(True, witness=q)


def check_g2(g: G2Element) -> MembershipResult:
    e_prime, bad = _div_poly(g.e1 - g.e2, 1, "e1 - e2")
    if bad:
        return _fail(bad)
    xi1, bad = _div_map(g.xi - mult_map(g.e1, 2), 2, "xi - m(e1)")
    if bad:
        return _fail(bad)
    delta1 = nh.delta(1, 2)
    xi2, bad = _div_map(g.xi - mult_map(g.e2, 2).compose_left(delta1), 1,
                        "xi - delta_1 m(e2)")
    if bad:
        return _fail(bad)
    xi_prime, bad = _div_map(xi1 - mult_map(g.e2, 2).compose_left(nh.tau(1, 2)), 1,
                             "xi1 - tau_1 m(e2)")
    if bad:
        return _fail(bad)
    if xi2 != mult_map(e_prime, 2) + xi_prime.times_y(2):
        return _fail("xi2 != m(e') + y2 xi'")
    return MembershipResult(True, witness=G2Witness(e_prime, xi1, xi2, xi_prime))


def check_g3(g: G3Element) -> MembershipResult:
    ee_prime, bad = _div_poly(g.ee1 - g.ee2, 2, "ee1 - ee2")
    if bad:
        return _fail(bad)
    ee_dprime, bad = _div_poly(g.ee3 - g.ee2, 1, "ee3 - ee2")
    if bad:
        return _fail(bad)
    delta_ee3 = nh.delta(1, 2).act(g.ee3)
    ee_tprime, bad = _div_poly(delta_ee3 - g.ee1, 1, "delta(ee3) - ee1")
    if bad:
        return _fail(bad)
    tau_ee3 = nh.tau(1, 2).act(g.ee3)
    ee_bar, bad = _div_poly(tau_ee3 - ee_prime, 1, "tau(ee3) - ee'")
    if bad:
        return _fail(bad)
    ee_bar2, bad = _div_poly(ee_tprime - ee_dprime, 2, "ee''' - ee''")
    if bad:
        return _fail(bad)
    if ee_bar != ee_bar2:
        return _fail("the two eebar equations disagree")

    m1, m2, m3 = mult_map(g.ee1, 3), mult_map(g.ee2, 3), mult_map(g.ee3, 3)
    t1, t2 = nh.tau(1, 3), nh.tau(2, 3)
    d1, d2 = nh.delta(1, 3), nh.delta(2, 3)

    chi1, bad = _div_map(g.chi - m1, 3, "chi - m(ee1)")
    if bad:
        return _fail(bad)
    chi2, bad = _div_map(g.chi - m2.compose_left(d2), 2, "chi - delta_2 m(ee2)")
    if bad:
        return _fail(bad)
    chi3, bad = _div_map(g.chi - m3.compose_left(d1 * d2), 1,
                         "chi - delta_1 delta_2 m(ee3)")
    if bad:
        return _fail(bad)
    chi1p, bad = _div_map(chi1 - m2.compose_left(t2), 2, "chi1 - tau_2 m(ee2)")
    if bad:
        return _fail(bad)
    chipp, bad = _div_map(chi1p - m3.compose_left(t1 * t2), 1,
                          "chi1' - tau_1 tau_2 m(ee3)")
    if bad:
        return _fail(bad)
    chi2p = -mult_map(ee_bar, 3) + chipp.times_y(3)
    checks = [
        (chi2 == m3.compose_left(d2).compose_left(t1) + chi2p.times_y(1),
         "chi2 != tau_1 delta_2 m(ee3) + y1 chi2'"),
        (chi3 == -mult_map(ee_dprime, 3).compose_left(d2) + chi2p.times_y(2),
         "chi3 != -delta_2 m(ee'') + y2 chi2'"),
        (chi2 == mult_map(ee_prime, 3) + chi1p.times_y(3),
         "chi2 != m(ee') + y3 chi1'"),
        (chi1 == -mult_map(yi(1) * ee_dprime, 3).compose_left(t2)
         + m3.compose_left(d1 * t2) + chipp.times_y(1).times_y(2),
         "chi1 != -tau_2 m(y1 ee'') + delta_1 tau_2 m(ee3) + y1 y2 chi''"),
    ]
    bad = [msg for okc, msg in checks if not okc]
    if bad:
        return _fail(*bad)
    return MembershipResult(True, witness=G3Witness(
        ee_prime, ee_dprime, ee_tprime, ee_bar,
        chi1, chi2, chi3, chi1p, chi2p, chipp))


def check_g4(g: G4Element) -> MembershipResult:
    d1, bad = _div_poly(g.eee3 - g.eee4, 1, "eee3 - eee4")
    if bad:
        return _fail(bad)
    d2, bad = _div_poly(g.eee2 - g.eee3, 2, "eee2 - eee3")
    if bad:
        return _fail(bad)
    d3, bad = _div_poly(nh.delta(1, 3).act(g.eee4) - g.eee2, 1,
                        "Edelta(eee4) - eee2")
    if bad:
        return _fail(bad)
    d4, bad = _div_poly(g.eee1 - g.eee2, 3, "eee1 - eee2")
    if bad:
        return _fail(bad)
    d5, bad = _div_poly(g.eee1 - nh.delta(2, 3).act(g.eee3), 2,
                        "eee1 - deltaE(eee3)")
    if bad:
        return _fail(bad)
    dd = (nh.delta(1, 3) * nh.delta(2, 3)).act(g.eee4)
    d6, bad = _div_poly(g.eee1 - dd, 1, "eee1 - Edelta deltaE(eee4)")
    if bad:
        return _fail(bad)
    eee_bar, bad = _div_poly(d5 - d2, 3, "eee^(5) - eee^(2)")
    if bad:
        return _fail(bad)
    eee_bar2, bad = _div_poly(d4 - nh.tau(2, 3).act(g.eee3), 2,
                              "eee^(4) - tauE(eee3)")
    if bad:
        return _fail(bad)
    if eee_bar != eee_bar2:
        return _fail("the two eeebar equations disagree")

    m = [mult_map(v, 4) for v in (g.eee1, g.eee2, g.eee3, g.eee4)]
    dl = [nh.delta(i, 4) for i in (1, 2, 3)]
    psi1, bad = _div_map(g.psi - m[0], 4, "psi - m(eee1)")
    if bad:
        return _fail(bad)
    psi2, bad = _div_map(g.psi - m[1].compose_left(dl[2]), 3,
                         "psi - delta_3 m(eee2)")
    if bad:
        return _fail(bad)
    psi3, bad = _div_map(g.psi - m[2].compose_left(dl[1] * dl[2]), 2,
                         "psi - delta_2 delta_3 m(eee3)")
    if bad:
        return _fail(bad)
    psi4, bad = _div_map(g.psi - m[3].compose_left(dl[0] * dl[1] * dl[2]), 1,
                         "psi - delta_1 delta_2 delta_3 m(eee4)")
    if bad:
        return _fail(bad)
    return MembershipResult(True, witness=G4Witness(
        d1, d2, d3, d4, d5, d6, eee_bar, psi1, psi2, psi3, psi4))


def check_corner(v: Polynomial, nslots: int) -> MembershipResult:
    """Membership for the polynomial corners: divisibility by y_1 .. y_n."""
    q = v
    for i in range(1, nslots + 1):
        q, bad = _div_poly(q, i, f"the corner element (after y_1..y_{i-1})")
        if bad:
            return _fail(bad)
    return MembershipResult(True, witness=q)


def check_membership(g) -> MembershipResult:
    if isinstance(g, G1Element):
        return check_g1(g)
    if isinstance(g, G2Element):
        return check_g2(g)
    if isinstance(g, G3Element):
        return check_g3(g)
    if isinstance(g, G4Element):
        return check_g4(g)
    raise TypeError(f"not a G-element: {g!r}")


def require_witness(g):
    """check_membership, raising on violation (for maps that need witnesses)."""
    res = check_membership(g)
    if not res.ok:
        raise ValueError(f"not a member: {res.violations}")
    return res.witness


# ---------------------------------------------------------------------------
# generation
# ---------------------------------------------------------------------------

def gen_g2(e2: Polynomial, e_prime: Polynomial, xi_prime: SlotMap) -> G2Element:
    """Build a G_2 element from the free parameters (e2, e', xi')."""
    e1 = e2 + yi(1) * e_prime
    xi1 = mult_map(e2, 2).compose_left(nh.tau(1, 2)) + xi_prime.times_y(1)
    xi = mult_map(e1, 2) + xi1.times_y(2)
    return G2Element(e1, e2, xi)


def gen_g3(ee3: Polynomial, ee_bar: Polynomial, ee_dprime: Polynomial,
           chipp: SlotMap) -> G3Element:
    """Build a G_3 element from the free parameters (ee3, eebar, ee'', chi'')."""
    ee_prime = nh.tau(1, 2).act(ee3) - yi(1) * ee_bar
    ee2 = ee3 - yi(1) * ee_dprime
    ee1 = ee2 + yi(2) * ee_prime
    m3 = mult_map(ee3, 3)
    chi1p = m3.compose_left(nh.tau(1, 3) * nh.tau(2, 3)) + chipp.times_y(1)
    chi1 = mult_map(ee2, 3).compose_left(nh.tau(2, 3)) + chi1p.times_y(2)
    chi = mult_map(ee1, 3) + chi1.times_y(3)
    return G3Element(ee1, ee2, ee3, chi)
