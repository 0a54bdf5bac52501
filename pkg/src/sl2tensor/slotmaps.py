"""Operators E -> E^n[y]: one slot in, n slots out.

A SlotMap of arity n eats a polynomial f(x, y) in a single slot and returns
act(op, f(x_n)) in slots x_1..x_n -- the incoming slot is the TOP slot n,
and op is an element of 0H_n[y].  Two elements of 0H_n[y] give the same
map precisely when they agree after dropping all tau_w with w not a flag
word (see nilhecke.flag_words), so a SlotMap always stores that canonical
projection.  On canonical representatives, divisibility of the map by
y_i = x_i - y is simply coefficientwise divisibility, which is what the
G-model membership conditions consume.

The two nontrivial operations:

* ``apply_to_slot(m, v, j, b)`` inserts the map into slot j of a
  polynomial v living in slots x_1..x_b: write v = sum_k x_j^k v_k with
  v_k free of x_j, send x_j^k to act(m.op, x_a^k) relocated to slots
  j..j+a-1, and shift the slots of v_k above j up by a-1.

* ``compose_insertion(outer, inner)`` is the composite
  E --inner--> E^b[y] --outer in slot 1--> E^{a+b-1}[y], produced by
  evaluating on x^k for k = 0..K and recovering the unique canonical
  operator with ``recover_operator`` (an exact triangular solve against
  act(tau_{c_j}, x_n^k) = (-1)^j h_{k-j}(x_{n-j},..,x_n), followed by a
  residual check on the remaining evaluations).
"""

from __future__ import annotations

import itertools

from .polynomials import Polynomial, XRING, NotDivisible
from . import nilhecke as nh
from .nilhecke import NilHeckeElement

__all__ = [
    "SlotMap", "mult_map", "apply_to_slot", "compose_insertion",
    "recover_operator", "complete_homogeneous", "InvariantViolation",
]


class InvariantViolation(AssertionError):
    """An internal identity the construction guarantees failed to hold."""


def complete_homogeneous(m: int, positions: list[int]) -> Polynomial:
    """h_m in the variables at the given 0-based ring positions.

    h_0 = 1, h_m = 0 for m < 0.
    """
    if m < 0:
        return XRING.zero()
    terms = {}
    nv = XRING.nvars
    for combo in itertools.combinations_with_replacement(positions, m):
        e = [0] * nv
        for p in combo:
            e[p] += 1
        terms[tuple(e)] = terms.get(tuple(e), 0) + 1
    from fractions import Fraction
    return Polynomial(XRING, {e: Fraction(c) for e, c in terms.items()})


class SlotMap:
    """A map E -> E^n[y], stored as the flag-word canonical op in 0H_n[y]."""

    __slots__ = ("n", "op")

    def __init__(self, n: int, op: NilHeckeElement):
        if op.n != n:
            raise ValueError("op arity mismatch")
        self.n = n
        self.op = op.project_flags()

    # -- construction ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "SlotMap":
        return cls(n, NilHeckeElement.zero(n))

    # -- evaluation ---------------------------------------------------------

    def eval_at(self, f: Polynomial) -> Polynomial:
        """Apply to f(x, y) given in the variables (x1, y)."""
        for j in range(2, 5):
            if f.uses_var(f"x{j}"):
                raise ValueError("source polynomial must use only x1 and y")
        if self.n > 1:
            f = f.remap_positions({0: self.n - 1})
        return self.op.act(f)

    # -- linear structure ----------------------------------------------------

    def __add__(self, other: "SlotMap") -> "SlotMap":
        if self.n != other.n:
            raise ValueError("mixed arities")
        return SlotMap(self.n, self.op + other.op)

    def __sub__(self, other: "SlotMap") -> "SlotMap":
        return self + (-other)

    def __neg__(self) -> "SlotMap":
        return SlotMap(self.n, -self.op)

    def scale(self, p: Polynomial) -> "SlotMap":
        """Multiply the output by a polynomial in slots 1..n and y."""
        return SlotMap(self.n, self.op.scale(p))

    def compose_left(self, h: NilHeckeElement) -> "SlotMap":
        """Post-compose with h acting on E^n[y]."""
        return SlotMap(self.n, h * self.op)

    def source_mul(self, p: Polynomial) -> "SlotMap":
        """Pre-compose with multiplication by p(x, y) on the source slot.

        p is given in the variables (x1, y) and lands on x_n.
        """
        for j in range(2, 5):
            if p.uses_var(f"x{j}"):
                raise ValueError("source polynomial must use only x1 and y")
        if self.n > 1:
            p = p.remap_positions({0: self.n - 1})
        return SlotMap(self.n, self.op.mul_poly(p))

    def tensor_low(self, p: Polynomial, k: int) -> "SlotMap":
        """Shift up k slots and multiply by p(x_1..x_k, y) in the freed ones.

        This is the composite "first this map, then tensor with p from
        below"; since the shifted op only touches slots above k, the
        multiplication is plain scaling.
        """
        for j in range(k + 1, 5):
            if p.uses_var(f"x{j}"):
                raise ValueError("low factor uses slots that are not free")
        return SlotMap(self.n + k, self.op.shift(k).scale(p))

    def __eq__(self, other):
        return isinstance(other, SlotMap) and self.n == other.n and self.op == other.op

    def __hash__(self):
        return hash((self.n, self.op))

    def is_zero(self) -> bool:
        return self.op.is_zero()

    # -- divisibility: the G-model membership workhorse ----------------------

    def divide_y(self, i: int) -> "SlotMap":
        """Exact left division by y_i = x_i - y; raises NotDivisible."""
        return SlotMap(self.n, self.op.left_divide_exact(i))

    def try_divide_y(self, i: int):
        try:
            return self.divide_y(i)
        except NotDivisible:
            return None

    def times_y(self, i: int) -> "SlotMap":
        return self.scale(nh.xvar(i) - nh.yvar())

    def max_coeff_degree(self) -> int:
        return self.op.max_coeff_degree()

    def render(self) -> str:
        return self.op.render()

    __str__ = render

    def __repr__(self):
        return f"SlotMap[{self.n}]({self.render()})"


def mult_map(e: Polynomial, n: int) -> SlotMap:
    """m(e): f |-> e(x_1..x_{n-1}, y) * f(x_n), i.e. "tensor with e below"."""
    for j in range(n, 5):
        if e.uses_var(f"x{j}"):
            raise ValueError(f"m(e) at arity {n} needs e free of x{j}")
    return SlotMap(n, NilHeckeElement.from_poly(e, n))


def apply_to_slot(m: SlotMap, v: Polynomial, j: int, b: int) -> Polynomial:
    """Insert the map m into slot j of v, where v lives in slots 1..b.

    Returns a polynomial in slots 1..(b + m.n - 1).
    """
    a = m.n
    if not 1 <= j <= b:
        raise ValueError("slot index out of range")
    if b + a - 1 > 4:
        raise ValueError("resulting arity beyond 4")
    for t in range(b + 1, 5):
        if v.uses_var(f"x{t}"):
            raise ValueError(f"input uses x{t} beyond its declared {b} slots")
    up = {p: p + a - 1 for p in range(j, b)}          # incoming slots above j
    into = {p: p + j - 1 for p in range(a)}           # map output into j..j+a-1
    out = XRING.zero()
    for k, vk in v.coeffs_in_var(f"x{j}").items():
        rk = m.op.act(nh.xvar(a) ** k)
        if j > 1:
            rk = rk.remap_positions(into)
        out = out + rk * vk.remap_positions(up)
    return out


def recover_operator(evaluations: list[tuple[int, Polynomial]], n: int):
    """Rebuild the canonical SlotMap from its values on powers of the source.

    evaluations: pairs (k, act(h, x_n^k)) for k = 0, 1, 2, ... (consecutive
    from 0, at least n of them).  Solves the triangular system given by
    act(tau_{c_j}, x_n^k) = (-1)^j h_{k-j}(x_{n-j}, .., x_n) for the flag
    coefficients, then checks the remaining evaluations; returns None (no
    solution) if they are inconsistent with any canonical operator.
    """
    ev = sorted(evaluations)
    if [k for k, _ in ev] != list(range(len(ev))):
        raise ValueError("need consecutive evaluation degrees starting at 0")
    if len(ev) < n:
        raise ValueError(f"need at least {n} evaluations")
    results = [r for _, r in ev]
    positions = list(range(n))  # 0-based ring positions of x_1..x_n
    sign = lambda j: 1 if j % 2 == 0 else -1
    coeffs: list[Polynomial] = []
    for j in range(n):
        acc = results[j]
        for i in range(j):
            acc = acc - sign(i) * coeffs[i] * complete_homogeneous(j - i, positions[n - 1 - i:])
        coeffs.append(sign(j) * acc)
    for k in range(n, len(results)):
        acc = XRING.zero()
        for i in range(n):
            acc = acc + sign(i) * coeffs[i] * complete_homogeneous(k - i, positions[n - 1 - i:])
        if acc != results[k]:
            return None
    out = NilHeckeElement.zero(n)
    for j in range(n):
        out = out + NilHeckeElement(n, {nh.flag_perm(n, j): XRING.one()}).scale(coeffs[j])
    return SlotMap(n, out)


def compose_insertion(outer: SlotMap, inner: SlotMap) -> SlotMap:
    """The composite E -> E^b[y] -> E^{a+b-1}[y], outer applied to slot 1.

    Computed by evaluation and recovery; the recovery failing would mean
    the composite is not a one-slot operator at all, which the calculus
    guarantees cannot happen, so that is raised as an InvariantViolation.
    """
    m = outer.n + inner.n - 1
    if m > 4:
        raise ValueError("composite arity beyond 4")
    # m evaluations pin the flag coefficients; two more act as the residual
    # consistency check (evaluation cost grows quickly with the power, so
    # probing all the way up to the coefficient degree would be wasteful).
    K = m + 1
    evals = []
    for k in range(K + 1):
        vk = inner.op.act(nh.xvar(inner.n) ** k)
        evals.append((k, apply_to_slot(outer, vk, 1, inner.n)))
    got = recover_operator(evals, m)
    if got is None:
        raise InvariantViolation("insertion composite failed operator recovery")
    return got
