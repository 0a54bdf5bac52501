"""Sparse multivariate polynomials over the rationals.

Everything downstream works in one of two fixed polynomial rings:

* the engine ring  k[x1, x2, x3, x4, y]   (operators on tensor powers), and
* the comparison ring  k[y1, y2]          (the Soergel-bimodule side).

Coefficients are ``fractions.Fraction`` throughout -- all arithmetic is
exact, there are no tolerances anywhere.  A polynomial is a dict mapping
exponent tuples to nonzero coefficients; instances are treated as immutable.

The only mildly nonstandard operations are ``swap`` (exchange two adjacent
variables), ``demazure`` (the divided difference (f - swap(f)) / (x_i -
x_{i+1}), which is always an exact division), and ``exact_divide``
(multivariate long division by a single divisor that either succeeds with
remainder zero or raises ``NotDivisible``).

>>> x1, x2 = XRING.var("x1"), XRING.var("x2")
>>> (x1**2).demazure(1) == x1 + x2
True
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "NotDivisible",
    "Polynomial",
    "Ring",
    "XRING",
    "YRING",
]

Exps = tuple  # exponent tuple, one entry per ring variable


class NotDivisible(ArithmeticError):
    """Raised by exact_divide when the division leaves a remainder."""


class Ring:
    """A fixed list of variable names, plus which adjacent pairs may swap."""

    def __init__(self, names: tuple[str, ...], adjacent_pairs: int):
        self.names = names
        self.nvars = len(names)
        # swap(i)/demazure(i) are defined for 1 <= i <= adjacent_pairs
        self.adjacent_pairs = adjacent_pairs
        self._index = {nm: k for k, nm in enumerate(names)}
        self._zero_exps = (0,) * self.nvars

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return Polynomial(self, {})
        return Polynomial(self, {self._zero_exps: c})

    def var(self, name: str) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self._index[name]] = 1
        return Polynomial(self, {tuple(exps): Fraction(1)})

    def monomial(self, exps: Iterable[int], coeff=1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("wrong exponent tuple length")
        coeff = Fraction(coeff)
        if coeff == 0:
            return self.zero()
        return Polynomial(self, {exps: coeff})

    def index_of(self, name: str) -> int:
        return self._index[name]

    def __repr__(self):
        return f"Ring{self.names}"


def _grlex_key(exps: Exps):
    # graded lex: compare total degree first, then the exponent tuple itself
    # (so x1 beats x2 at the same degree).
    return (sum(exps), exps)


class Polynomial:
    """Immutable sparse polynomial over Fraction in a fixed Ring."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Exps, Fraction]):
        self.ring = ring
        self.terms = dict(terms)
        self._hash = None

    # -- basic queries ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree (sum of exponents); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def graded_degree(self) -> int:
        """Degree in the convention deg(x_i) = deg(y) = 2.

        Only meaningful for homogeneous polynomials; raises otherwise.
        """
        if not self.terms:
            return -1
        degs = {sum(e) for e in self.terms}
        if len(degs) != 1:
            raise ValueError("not homogeneous: " + str(self))
        return 2 * degs.pop()

    def constant_term(self) -> Fraction:
        return self.terms.get(self.ring._zero_exps, Fraction(0))

    def uses_var(self, name: str) -> bool:
        k = self.ring.index_of(name)
        return any(e[k] for e in self.terms)

    def max_exponent(self, name: str) -> int:
        k = self.ring.index_of(name)
        return max((e[k] for e in self.terms), default=0)

    def leading(self) -> tuple[Exps, Fraction]:
        """Leading (monomial, coefficient) in graded-lex order."""
        m = max(self.terms, key=_grlex_key)
        return m, self.terms[m]

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(i + j for i, j in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring:
                raise ValueError("mixed rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((id(self.ring), frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- the operations the algebra layer needs --------------------------

    def swap(self, i: int) -> "Polynomial":
        """Exchange the i-th and (i+1)-st ring variables (1-based)."""
        if not 1 <= i <= self.ring.adjacent_pairs:
            raise ValueError(f"swap({i}) undefined in {self.ring}")
        a, b = i - 1, i
        out = {}
        for e, c in self.terms.items():
            if e[a] != e[b]:
                le = list(e)
                le[a], le[b] = le[b], le[a]
                e = tuple(le)
            out[e] = c
        return Polynomial(self.ring, out)

    def demazure(self, i: int) -> "Polynomial":
        """Divided difference (f - swap_i(f)) / (v_i - v_{i+1}).

        The numerator is antisymmetric in the two variables, hence always
        exactly divisible.
        """
        diff = self - self.swap(i)
        if diff.is_zero():
            return self.ring.zero()
        denom = self.ring.var(self.ring.names[i - 1]) - self.ring.var(self.ring.names[i])
        return diff.exact_divide(denom)

    def exact_divide(self, divisor: "Polynomial") -> "Polynomial":
        """Return self / divisor, raising NotDivisible on any remainder.

        Single-divisor long division in graded-lex order.  If self is a
        multiple of divisor, every intermediate remainder is too, so its
        leading monomial stays divisible by the divisor's; the first failure
        of that property proves non-divisibility.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        lm, lc = divisor.leading()
        q: dict = {}
        r = self
        while not r.is_zero():
            rm, rc = r.leading()
            qe = tuple(i - j for i, j in zip(rm, lm))
            if any(k < 0 for k in qe):
                raise NotDivisible(f"({self}) not divisible by ({divisor})")
            qc = rc / lc
            q[qe] = q.get(qe, 0) + qc
            r = r - Polynomial(self.ring, {qe: qc}) * divisor
        return Polynomial(self.ring, {e: c for e, c in q.items() if c})

    def try_divide(self, divisor: "Polynomial"):
        """exact_divide, but returns None instead of raising."""
        try:
            return self.exact_divide(divisor)
        except NotDivisible:
            return None

    def substitute(self, name: str, value: "Polynomial") -> "Polynomial":
        """Substitute a polynomial for the named variable."""
        k = self.ring.index_of(name)
        # group by exponent of the substituted variable, Horner-style
        by_pow: dict[int, dict] = {}
        for e, c in self.terms.items():
            le = list(e)
            p = le[k]
            le[k] = 0
            by_pow.setdefault(p, {})[tuple(le)] = c
        if not by_pow:
            return self
        out = self.ring.zero()
        for p in range(max(by_pow), -1, -1):
            out = out * value + Polynomial(self.ring, by_pow.get(p, {}))
        return out

    def remap_positions(self, move: Mapping[int, int]) -> "Polynomial":
        """Relabel variables by position (0-based): exponent at p moves to move[p].

        Positions not mentioned stay put.  It is an error for two source
        positions to land on the same target, or for a moved exponent to
        collide with a nonzero unmoved one.
        """
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(e)
            for p, v in enumerate(e):
                if not v:
                    continue
                t = move.get(p, p)
                if ne[t]:
                    raise ValueError("remap collision")
                ne[t] = v
            out[tuple(ne)] = c
        return Polynomial(self.ring, out)

    def coeffs_in_var(self, name: str) -> dict[int, "Polynomial"]:
        """Write self = sum_k v^k * c_k with c_k free of v; return {k: c_k}."""
        k = self.ring.index_of(name)
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            le = list(e)
            p = le[k]
            le[k] = 0
            out.setdefault(p, {})[tuple(le)] = c
        return {p: Polynomial(self.ring, t) for p, t in out.items()}

    # -- printing ---------------------------------------------------------

    def render_parts(self):
        """The rendered terms as (sign, body) pairs, graded-lex descending."""
        parts = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[e]
            factors = []
            for name, p in zip(self.ring.names, e):
                if p == 1:
                    factors.append(name)
                elif p > 1:
                    factors.append(f"{name}^{p}")
            mono = "*".join(factors)
            ac = abs(c)
            if mono and ac == 1:
                body = mono
            elif mono:
                body = f"{_frac(ac)}*{mono}"
            else:
                body = _frac(ac)
            parts.append(("-" if c < 0 else "+", body))
        return parts

    def render(self) -> str:
        """Canonical string, graded-lex descending.  '0' for zero."""
        if not self.terms:
            return "0"
        return _join_signed(self.render_parts())

    __str__ = render

    def __repr__(self):
        return f"Poly({self.render()})"


def _frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _join_signed(parts) -> str:
    sign0, body0 = parts[0]
    s = ("-" if sign0 == "-" else "") + body0
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


# the two rings everything lives in
XRING = Ring(("x1", "x2", "x3", "x4", "y"), adjacent_pairs=3)
YRING = Ring(("y1", "y2"), adjacent_pairs=1)
