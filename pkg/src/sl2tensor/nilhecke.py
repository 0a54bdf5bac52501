"""The nil affine Hecke algebra 0H_n in normal form.

Generators x_1..x_n (commuting) and tau_1..tau_{n-1} with

    tau_i^2 = 0,
    tau_i tau_{i+1} tau_i = tau_{i+1} tau_i tau_{i+1},
    tau_i tau_j = tau_j tau_i                  (|i - j| > 1),
    tau_i x_j = x_j tau_i                      (j - i not in {0, 1}),
    tau_i x_i = x_{i+1} tau_i + 1,
    x_i tau_i = tau_i x_{i+1} + 1.

Every element has a unique normal form  sum_w p_w tau_w  with polynomial
coefficients written on the LEFT of the tau-word, w ranging over S_n.  A
central scalar y is allowed in the coefficients throughout (so elements
really live in 0H_n[y], coefficients in k[x_1..x_n, y]).

Moving a polynomial left through tau_i is the straightening rule

    tau_i . p = swap_i(p) . tau_i + demazure_i(p),

an immediate consequence of the two mixed relations above; it is validated
in the test suite against an oracle that only knows the two-term relations
and pushes tau_i past one variable at a time.

tau_w tau_i collapses to tau_{w s_i} when the length goes up and to 0 when
it goes down; acting on polynomials, tau_w is the composite of divided
differences along the lexicographically least reduced word of w.

Elements also know how to project onto the "flag words"

    flags(n) = { c_j = s_{n-j} ... s_{n-1} : j = 0..n-1 },

the minimal-length representatives of S_n / S_{n-1}.  The span of the
non-flag tau_w is exactly the kernel of h |-> (act(h, x_n^k))_k, so this
projection is the canonical representative of h as an operator in one slot;
the slotmaps layer builds on that.

>>> multiply(tau(1, 2), x(1, 2)).render()
'x2*tau1 + 1'
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .polynomials import Polynomial, XRING, NotDivisible

__all__ = [
    "NilHeckeElement",
    "x", "tau", "s_elem", "delta", "from_poly", "zero", "one",
    "multiply", "straighten", "xvar", "yvar",
    "identity_perm", "compose_perms", "inverse_perm", "perm_length",
    "lex_least_word", "all_perms", "flag_words", "flag_perm",
]

Perm = tuple  # one-line notation, 1-based values: w[j-1] = w(j)

# Deliberate-fault switch used by the verification driver to prove the
# property suites can detect a wrong convention: when set, straightening
# drops the divided-difference correction term (tau_i p = swap_i(p) tau_i).
DROP_STRAIGHTEN_UNIT = False


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------

def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def compose_perms(u: Perm, v: Perm) -> Perm:
    """(uv)(j) = u(v(j))."""
    return tuple(u[v[j] - 1] for j in range(len(v)))


def inverse_perm(w: Perm) -> Perm:
    inv = [0] * len(w)
    for j, im in enumerate(w):
        inv[im - 1] = j + 1
    return tuple(inv)


def perm_length(w: Perm) -> int:
    """Number of inversions = Coxeter length."""
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def right_mul_simple(w: Perm, i: int) -> Perm:
    """w s_i: exchange positions i, i+1 (1-based)."""
    lw = list(w)
    lw[i - 1], lw[i] = lw[i], lw[i - 1]
    return tuple(lw)


def left_mul_simple(i: int, w: Perm) -> Perm:
    """s_i w: exchange the values i, i+1 wherever they occur."""
    return tuple(i + 1 if a == i else i if a == i + 1 else a for a in w)


def lex_least_word(w: Perm) -> tuple[int, ...]:
    """The lexicographically least reduced word of w.

    Greedy: a reduced word can start with i iff i is a left descent, so the
    lex-least one starts with the smallest left descent; recurse.
    """
    word = []
    n = len(w)
    while True:
        inv = inverse_perm(w)
        for i in range(1, n):
            if inv[i - 1] > inv[i]:
                word.append(i)
                w = left_mul_simple(i, w)
                break
        else:
            return tuple(word)


def all_perms(n: int):
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def flag_perm(n: int, j: int) -> Perm:
    """c_j = s_{n-j} ... s_{n-1}: the cycle n -> n-j, i -> i+1 for n-j <= i < n."""
    if not 0 <= j < n:
        raise ValueError("flag index out of range")
    w = list(range(1, n + 1))
    for pos in range(n - j, n):
        w[pos - 1] = pos + 1
    w[n - 1] = n - j
    return tuple(w)


def flag_words(n: int) -> list[Perm]:
    return [flag_perm(n, j) for j in range(n)]


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

_XVARS = [None] + [XRING.var(f"x{i}") for i in range(1, 5)]
_Y = XRING.var("y")


def xvar(i: int) -> Polynomial:
    """The polynomial x_i."""
    return _XVARS[i]


def yvar() -> Polynomial:
    return _Y


class NilHeckeElement:
    """An element of 0H_n[y] in normal form: {perm: left coefficient}."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: dict):
        self.n = n
        self.coeffs = {w: p for w, p in coeffs.items() if not p.is_zero()}

    # -- construction ----------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "NilHeckeElement":
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> "NilHeckeElement":
        return cls(n, {identity_perm(n): XRING.one()})

    @classmethod
    def from_poly(cls, p: Polynomial, n: int) -> "NilHeckeElement":
        for j in range(n + 1, 5):
            if p.uses_var(f"x{j}"):
                raise ValueError(f"coefficient uses x{j} beyond arity {n}")
        return cls(n, {identity_perm(n): p})

    def is_zero(self) -> bool:
        return not self.coeffs

    # -- ring structure ---------------------------------------------------

    def __add__(self, other: "NilHeckeElement") -> "NilHeckeElement":
        if self.n != other.n:
            raise ValueError("mixed arities")
        out = dict(self.coeffs)
        for w, p in other.coeffs.items():
            q = out.get(w)
            out[w] = p if q is None else q + p
        return NilHeckeElement(self.n, out)

    def __neg__(self):
        return NilHeckeElement(self.n, {w: -p for w, p in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, p: Polynomial) -> "NilHeckeElement":
        """Left multiplication by a polynomial (just scales coefficients)."""
        return NilHeckeElement(self.n, {w: p * q for w, q in self.coeffs.items()})

    def __eq__(self, other):
        return (isinstance(other, NilHeckeElement)
                and self.n == other.n and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def _tau_left(self, i: int) -> "NilHeckeElement":
        """tau_i * self, one straightening step per term."""
        out: dict = {}
        def add(w, p):
            if p.is_zero():
                return
            q = out.get(w)
            s = p if q is None else q + p
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        for w, p in self.coeffs.items():
            # tau_i p tau_w = swap_i(p) tau_i tau_w + demazure_i(p) tau_w
            if not DROP_STRAIGHTEN_UNIT:
                add(w, p.demazure(i))
            wi = inverse_perm(w)
            if wi[i - 1] < wi[i]:  # length of s_i w goes up
                add(left_mul_simple(i, w), p.swap(i))
        return NilHeckeElement(self.n, out)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return self.mul_poly(other)
        if self.n != other.n:
            raise ValueError("mixed arities")
        total = NilHeckeElement.zero(self.n)
        for w, p in self.coeffs.items():
            piece = other
            for i in reversed(lex_least_word(w)):
                piece = piece._tau_left(i)
            total = total + piece.scale(p)
        return total

    def mul_poly(self, p: Polynomial) -> "NilHeckeElement":
        """self * p (p treated as an element; straightens through taus)."""
        return self * NilHeckeElement.from_poly(p, self.n)

    # -- action on polynomials --------------------------------------------

    def act(self, v: Polynomial) -> Polynomial:
        """Apply to a polynomial: sum_w p_w * demazure_w(v)."""
        total = XRING.zero()
        for w, p in self.coeffs.items():
            u = v
            for i in reversed(lex_least_word(w)):
                u = u.demazure(i)
            total = total + p * u
        return total

    # -- slot bookkeeping ---------------------------------------------------

    def shift(self, k: int) -> "NilHeckeElement":
        """Embed 0H_n -> 0H_{n+k}: x_i -> x_{i+k}, tau_i -> tau_{i+k}.

        Frees the bottom k slots; the element no longer touches them.
        """
        if k == 0:
            return self
        m = self.n + k
        if m > 4:
            raise ValueError("arity beyond 4")
        move = {p: p + k for p in range(self.n)}  # x-positions are 0-based
        out = {}
        for w, p in self.coeffs.items():
            nw = tuple(range(1, k + 1)) + tuple(a + k for a in w)
            out[nw] = p.remap_positions(move)
        return NilHeckeElement(m, out)

    def project_flags(self) -> "NilHeckeElement":
        """Drop every tau_w with w not a flag word of S_n.

        The dropped span is exactly the kernel of acting on polynomials in
        x_n alone, so this is the canonical representative of the element
        as a one-slot-in operator.
        """
        keep = set(flag_words(self.n))
        return NilHeckeElement(self.n, {w: p for w, p in self.coeffs.items() if w in keep})

    def is_flag_supported(self) -> bool:
        keep = set(flag_words(self.n))
        return all(w in keep for w in self.coeffs)

    def left_divide_exact(self, i: int) -> "NilHeckeElement":
        """Divide every coefficient by y_i = (x_i - y); NotDivisible if any fails."""
        d = xvar(i) - _Y
        return NilHeckeElement(self.n, {w: p.exact_divide(d) for w, p in self.coeffs.items()})

    def max_coeff_degree(self) -> int:
        return max((p.degree() for p in self.coeffs.values()), default=-1)

    # -- printing -----------------------------------------------------------

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        items = sorted(self.coeffs.items(),
                       key=lambda wp: (perm_length(wp[0]), lex_least_word(wp[0])),
                       reverse=True)
        parts = []
        for w, p in items:
            word = "*".join(f"tau{i}" for i in lex_least_word(w))
            if not word:
                parts.extend(p.render_parts())
                continue
            if len(p.terms) == 1:
                ((e, c),) = p.terms.items()
                mono = XRING.monomial(e, abs(c))
                mr = mono.render()
                body = word if mr == "1" else f"{mr}*{word}"
                parts.append(("-" if c < 0 else "+", body))
            else:
                parts.append(("+", f"({p.render()})*{word}"))
        sign0, body0 = parts[0]
        s = ("-" if sign0 == "-" else "") + body0
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    __str__ = render

    def __repr__(self):
        return f"NilHecke[{self.n}]({self.render()})"


# ---------------------------------------------------------------------------
# generator shorthands
# ---------------------------------------------------------------------------

def zero(n: int) -> NilHeckeElement:
    return NilHeckeElement.zero(n)


def one(n: int) -> NilHeckeElement:
    return NilHeckeElement.one(n)


def from_poly(p: Polynomial, n: int) -> NilHeckeElement:
    return NilHeckeElement.from_poly(p, n)


def x(i: int, n: int) -> NilHeckeElement:
    if not 1 <= i <= n:
        raise ValueError(f"x{i} undefined at arity {n}")
    return NilHeckeElement.from_poly(xvar(i), n)


def tau(i: int, n: int) -> NilHeckeElement:
    if not 1 <= i <= n - 1:
        raise ValueError(f"tau{i} undefined at arity {n}")
    w = right_mul_simple(identity_perm(n), i)
    return NilHeckeElement(n, {w: XRING.one()})


def s_elem(i: int, n: int) -> NilHeckeElement:
    """s_i = tau_i (x_i - x_{i+1}) - 1; acts on polynomials as swap_i."""
    return multiply(tau(i, n), from_poly(xvar(i) - xvar(i + 1), n)) - one(n)


def delta(i: int, n: int) -> NilHeckeElement:
    """delta_i = tau_i (x_i - y); an idempotent (the dot-slide projector)."""
    return multiply(tau(i, n), from_poly(xvar(i) - _Y, n))


def multiply(a: NilHeckeElement, b: NilHeckeElement) -> NilHeckeElement:
    return a * b


def straighten(i: int, p: Polynomial, n: int) -> NilHeckeElement:
    """Normal form of tau_i * p: swap_i(p) tau_i + demazure_i(p)."""
    return tau(i, n).scale(p.swap(i)) + from_poly(p.demazure(i), n)
