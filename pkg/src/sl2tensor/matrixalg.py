"""Generalized 2x2 matrix algebras over k[y1,y2] and their tensor calculus.

A generalized matrix algebra is assembled from two algebras A, D, two
bimodules B (an (A,D)-bimodule) and C (a (D,A)-bimodule), and two
structure maps

    gamma1: B (x)_D C -> A,        gamma2: C (x)_A B -> D,

multiplied with the customary matrix formulas.  Every component here is
a graded free module over P2 = k[y1, y2] (deg y_i = 2) with finitely
many basis symbols in fixed degrees, and every product or action is a
P2-bilinear table on basis symbols.  That covers all the concrete
algebras this package compares (P2, omega*P2, Q1, Q2, B_{s1}, R, and
the matrix algebras T0, C0), and it makes every check finite per degree.

For a right module M = (M1 M2) and a left module N = (N1; N2) the
tensor product over the matrix algebra is computed degreewise from

    (M1 (x)_A N1  (+)  M2 (x)_D N2) / (I_B + I_C),

where I_B is spanned by m (x) b.n - m.b (x) n and I_C likewise.  Since
A here is always P2 itself and D is a P2-algebra, the inner tensors are
taken over P2 and the D-balancing relations m.d (x) n - m (x) d.n are
imposed alongside I_B and I_C.  Ranks are computed by Gaussian
elimination over Fraction, so all dimensions are exact.

An endomorphism F of N restricts to maps F1, F2 of the components; if F
is fully linear, diag(Id (x) F1, Id (x) F2) preserves the relation
subspace and descends to M (x) N.  ``induced_endomorphism`` verifies the
component linearity, verifies the preservation degreewise (it does not
assume it), and returns the induced matrices on the quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomials import Polynomial, Ring, YRING

__all__ = [
    "GradedFreeComponent", "BilinearTable", "GenMatAlgebra", "GenMatElement",
    "RightGenMatModule", "LeftGenMatModule", "TensorQuotient",
    "tensor_over", "induced_endomorphism", "InducedEndomorphism",
    "Vec", "vec_add", "vec_sub", "vec_scale", "vec_is_zero",
]


# A Vec is a finitely supported map basis symbol -> P2 coefficient.
Vec = dict

def _clean(v: Vec) -> Vec:
    return {s: p for s, p in v.items() if not p.is_zero()}

def vec_add(u: Vec, v: Vec) -> Vec:
    out = dict(u)
    for s, p in v.items():
        out[s] = out.get(s, YRING.zero()) + p
    return _clean(out)

def vec_sub(u: Vec, v: Vec) -> Vec:
    out = dict(u)
    for s, p in v.items():
        out[s] = out.get(s, YRING.zero()) - p
    return _clean(out)

def vec_scale(p: Polynomial, v: Vec) -> Vec:
    return _clean({s: p * q for s, q in v.items()})

def vec_is_zero(v: Vec) -> bool:
    return not _clean(v)


def monomials_of_degree(d: int):
    """P2 monomials of graded degree d (deg y_i = 2), as exponent pairs."""
    if d < 0 or d % 2:
        return []
    m = d // 2
    return [(i, m - i) for i in range(m + 1)]


class GradedFreeComponent:
    """A graded free P2-module with named basis symbols in fixed degrees."""

    def __init__(self, name: str, symbols: dict):
        self.name = name
        self.symbols = dict(symbols)  # symbol -> degree

    def basis_vec(self, sym: str) -> Vec:
        if sym not in self.symbols:
            raise KeyError(f"{self.name} has no basis symbol {sym!r}")
        return {sym: YRING.one()}

    def zero(self) -> Vec:
        return {}

    def dim(self, d: int) -> int:
        return sum(len(monomials_of_degree(d - dg)) for dg in self.symbols.values())

    def graded_basis(self, d: int):
        """k-basis of the degree-d piece: (symbol, monomial exponents)."""
        out = []
        for sym, dg in self.symbols.items():
            for mono in monomials_of_degree(d - dg):
                out.append((sym, mono))
        return out

    def degree_of(self, v: Vec):
        """Degree of a homogeneous vector, or None for 0."""
        degs = set()
        for s, p in _clean(v).items():
            degs.add(self.symbols[s] + p.graded_degree())
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous vector in {self.name}")
        return degs.pop()

    def __repr__(self):
        return f"GradedFreeComponent({self.name}, {self.symbols})"


class BilinearTable:
    """A P2-bilinear map given on pairs of basis symbols."""

    def __init__(self, source_a: GradedFreeComponent, source_b: GradedFreeComponent,
                 target: GradedFreeComponent, table: dict):
        self.source_a = source_a
        self.source_b = source_b
        self.target = target
        self.table = {}
        for (sa, sb), val in table.items():
            if sa not in source_a.symbols or sb not in source_b.symbols:
                raise KeyError(f"table entry ({sa},{sb}) not in bases")
            self.table[(sa, sb)] = _clean(val)
        for sa in source_a.symbols:
            for sb in source_b.symbols:
                if (sa, sb) not in self.table:
                    raise ValueError(f"table not total: missing ({sa},{sb})")
                want = source_a.symbols[sa] + source_b.symbols[sb]
                got = target.degree_of(self.table[(sa, sb)])
                if got is not None and got != want:
                    raise ValueError(
                        f"table entry ({sa},{sb}) has degree {got}, expected {want}")

    def apply(self, u: Vec, v: Vec) -> Vec:
        out = {}
        for sa, p in u.items():
            for sb, q in v.items():
                for st, r in self.table[(sa, sb)].items():
                    out[st] = out.get(st, YRING.zero()) + p * q * r
        return _clean(out)


@dataclass(frozen=True)
class GenMatElement:
    """An element (a b; c d) of a generalized matrix algebra."""
    alg: "GenMatAlgebra"
    a: Vec
    b: Vec
    c: Vec
    d: Vec

    def __add__(self, other):
        self._check(other)
        return GenMatElement(self.alg, vec_add(self.a, other.a), vec_add(self.b, other.b),
                             vec_add(self.c, other.c), vec_add(self.d, other.d))

    def __sub__(self, other):
        self._check(other)
        return GenMatElement(self.alg, vec_sub(self.a, other.a), vec_sub(self.b, other.b),
                             vec_sub(self.c, other.c), vec_sub(self.d, other.d))

    def __mul__(self, other):
        self._check(other)
        g = self.alg
        return GenMatElement(
            g,
            vec_add(g.mul_aa.apply(self.a, other.a), g.gamma1.apply(self.b, other.c)),
            vec_add(g.act_ab.apply(self.a, other.b), g.act_bd.apply(self.b, other.d)),
            vec_add(g.act_ca.apply(self.c, other.a), g.act_dc_right(self.d, other.c)),
            vec_add(g.mul_dd.apply(self.d, other.d), g.gamma2.apply(self.c, other.b)),
        )

    def _check(self, other):
        if not isinstance(other, GenMatElement) or other.alg is not self.alg:
            raise ValueError("algebra mismatch")

    def __eq__(self, other):
        return (isinstance(other, GenMatElement) and other.alg is self.alg
                and _clean(self.a) == _clean(other.a) and _clean(self.b) == _clean(other.b)
                and _clean(self.c) == _clean(other.c) and _clean(self.d) == _clean(other.d))

    def is_zero(self):
        return all(vec_is_zero(v) for v in (self.a, self.b, self.c, self.d))

    def render(self) -> str:
        def part(v, name):
            return " + ".join(f"({p.render()})*{s}" for s, p in sorted(v.items())) or "0"
        return (f"[{part(self.a,'a')} | {part(self.b,'b')} ; "
                f"{part(self.c,'c')} | {part(self.d,'d')}]")


class GenMatAlgebra:
    """Four graded free components with the eight structure tables.

    Tables: mul_aa, mul_dd (algebra products), act_ab (A acting on B from
    the left), act_bd (D on B from the right), act_dc (D on C from the
    left), act_ca (A on C from the right), gamma1: B x C -> A and
    gamma2: C x B -> D.
    """

    def __init__(self, name, A, B, C, D, *, mul_aa, act_ab, act_bd, act_dc,
                 act_ca, mul_dd, gamma1, gamma2, unit_a, unit_d):
        self.name = name
        self.A, self.B, self.C, self.D = A, B, C, D
        self.mul_aa = BilinearTable(A, A, A, mul_aa)
        self.act_ab = BilinearTable(A, B, B, act_ab)
        self.act_bd = BilinearTable(B, D, B, act_bd)
        self.act_dc = BilinearTable(D, C, C, act_dc)
        self.act_ca = BilinearTable(C, A, C, act_ca)
        self.mul_dd = BilinearTable(D, D, D, mul_dd)
        self.gamma1 = BilinearTable(B, C, A, gamma1)
        self.gamma2 = BilinearTable(C, B, D, gamma2)
        self.unit_a = unit_a
        self.unit_d = unit_d

    def act_dc_right(self, d: Vec, c: Vec) -> Vec:
        # matrix product puts the D factor on the left of C
        return self.act_dc.apply(d, c)

    def zero(self) -> GenMatElement:
        return GenMatElement(self, {}, {}, {}, {})

    def element(self, a=None, b=None, c=None, d=None) -> GenMatElement:
        return GenMatElement(self, a or {}, b or {}, c or {}, d or {})

    def one(self) -> GenMatElement:
        return self.element(a=self.A.basis_vec(self.unit_a),
                            d=self.D.basis_vec(self.unit_d))

    def e11(self) -> GenMatElement:
        return self.element(a=self.A.basis_vec(self.unit_a))

    def e22(self) -> GenMatElement:
        return self.element(d=self.D.basis_vec(self.unit_d))

    def basis_elements(self):
        """All single-symbol matrix elements, for associativity sweeps."""
        out = []
        for sym in self.A.symbols:
            out.append(self.element(a=self.A.basis_vec(sym)))
        for sym in self.B.symbols:
            out.append(self.element(b=self.B.basis_vec(sym)))
        for sym in self.C.symbols:
            out.append(self.element(c=self.C.basis_vec(sym)))
        for sym in self.D.symbols:
            out.append(self.element(d=self.D.basis_vec(sym)))
        return out

    def check_associativity(self):
        """(xy)z == x(yz) on all basis triples; returns violations."""
        bad = []
        basis = self.basis_elements()
        one = self.one()
        for x in basis:
            if x * one != x or one * x != x:
                bad.append(f"{self.name}: unit fails on {x.render()}")
        for x in basis:
            for y in basis:
                xy = x * y
                for z in basis:
                    if (xy) * z != x * (y * z):
                        bad.append(f"{self.name}: associativity fails on "
                                   f"{x.render()}, {y.render()}, {z.render()}")
        return bad

    def dim(self, d: int) -> int:
        return sum(comp.dim(d) for comp in (self.A, self.B, self.C, self.D))


class RightGenMatModule:
    """A right module (M1 M2): tables for the corner actions and the
    connecting maps alpha: M1 x B -> M2 and beta: M2 x C -> M1."""

    def __init__(self, name, alg: GenMatAlgebra, M1, M2, *, act_m1a, act_m2d,
                 alpha, beta):
        self.name = name
        self.alg = alg
        self.M1, self.M2 = M1, M2
        self.act_m1a = BilinearTable(M1, alg.A, M1, act_m1a)
        self.act_m2d = BilinearTable(M2, alg.D, M2, act_m2d)
        self.alpha = BilinearTable(M1, alg.B, M2, alpha)
        self.beta = BilinearTable(M2, alg.C, M1, beta)

    def check_module(self):
        """Compatibility of alpha, beta with gamma1, gamma2 on basis triples."""
        bad = []
        g = self.alg
        for m1 in self.M1.symbols:
            mv = self.M1.basis_vec(m1)
            for b in g.B.symbols:
                bv = g.B.basis_vec(b)
                for c in g.C.symbols:
                    cv = g.C.basis_vec(c)
                    lhs = self.beta.apply(self.alpha.apply(mv, bv), cv)
                    rhs = self.act_m1a.apply(mv, g.gamma1.apply(bv, cv))
                    if lhs != rhs:
                        bad.append(f"{self.name}: gamma1 square fails at ({m1},{b},{c})")
        for m2 in self.M2.symbols:
            mv = self.M2.basis_vec(m2)
            for c in g.C.symbols:
                cv = g.C.basis_vec(c)
                for b in g.B.symbols:
                    bv = g.B.basis_vec(b)
                    lhs = self.alpha.apply(self.beta.apply(mv, cv), bv)
                    rhs = self.act_m2d.apply(mv, g.gamma2.apply(cv, bv))
                    if lhs != rhs:
                        bad.append(f"{self.name}: gamma2 square fails at ({m2},{c},{b})")
        return bad


class LeftGenMatModule:
    """A left module (N1; N2): corner actions plus nu_b: B x N2 -> N1 and
    nu_c: C x N1 -> N2."""

    def __init__(self, name, alg: GenMatAlgebra, N1, N2, *, act_an, act_dn,
                 nu_b, nu_c):
        self.name = name
        self.alg = alg
        self.N1, self.N2 = N1, N2
        self.act_an = BilinearTable(alg.A, N1, N1, act_an)
        self.act_dn = BilinearTable(alg.D, N2, N2, act_dn)
        self.nu_b = BilinearTable(alg.B, N2, N1, nu_b)
        self.nu_c = BilinearTable(alg.C, N1, N2, nu_c)

    def check_module(self):
        bad = []
        g = self.alg
        for b in g.B.symbols:
            bv = g.B.basis_vec(b)
            for c in g.C.symbols:
                cv = g.C.basis_vec(c)
                for n1 in self.N1.symbols:
                    nv = self.N1.basis_vec(n1)
                    lhs = self.nu_b.apply(bv, self.nu_c.apply(cv, nv))
                    rhs = self.act_an.apply(g.gamma1.apply(bv, cv), nv)
                    if lhs != rhs:
                        bad.append(f"{self.name}: gamma1 square fails at ({b},{c},{n1})")
                for n2 in self.N2.symbols:
                    nv = self.N2.basis_vec(n2)
                    lhs = self.nu_c.apply(cv, self.nu_b.apply(bv, nv))
                    rhs = self.act_dn.apply(g.gamma2.apply(cv, bv), nv)
                    if lhs != rhs:
                        bad.append(f"{self.name}: gamma2 square fails at ({c},{b},{n2})")
        return bad

    @classmethod
    def zero_module(cls, alg: GenMatAlgebra):
        empty = GradedFreeComponent("0", {})
        return cls("zero", alg, empty, empty, act_an={}, act_dn={}, nu_b={}, nu_c={})


# ---------------------------------------------------------------------------
# tensor product over the matrix algebra, degree by degree
# ---------------------------------------------------------------------------

def _expand_pair(comp, mvec: Vec, nvec: Vec, extra: Polynomial):
    """Coordinates of (mvec (x) nvec) * extra in the monomial-resolved basis.

    The tensor is over P2, so all polynomial coefficients merge into one
    monomial factor per basis pair: column keys are (comp, msym, nsym, mono).
    """
    out = {}
    for ms, p in mvec.items():
        for ns, q in nvec.items():
            prod = p * q * extra
            for exps, coeff in prod.terms.items():
                key = (comp, ms, ns, exps)
                out[key] = out.get(key, Fraction(0)) + coeff
    return {k: v for k, v in out.items() if v}


def _row_reduce(rows, columns):
    """Gaussian elimination over Fraction.

    rows: list of dicts column -> Fraction.  Returns (pivots, reduced)
    where pivots maps a pivot column to its normalized reduced row.
    """
    order = {c: i for i, c in enumerate(columns)}
    pivots = {}
    for row in rows:
        row = dict(row)
        while row:
            piv = min(row, key=lambda c: order[c])
            if piv in pivots:
                fac = row[piv]
                for c, v in pivots[piv].items():
                    row[c] = row.get(c, Fraction(0)) - fac * v
                row = {c: v for c, v in row.items() if v}
            else:
                inv = row[piv]
                pivots[piv] = {c: v / inv for c, v in row.items()}
                break
    # back-substitute so each pivot row is fully reduced against the others
    for piv in sorted(pivots, key=lambda c: order[c], reverse=True):
        row = pivots[piv]
        for other_piv in list(row):
            if other_piv != piv and other_piv in pivots:
                fac = row[other_piv]
                for c, v in pivots[other_piv].items():
                    row[c] = row.get(c, Fraction(0)) - fac * v
        pivots[piv] = {c: v for c, v in row.items() if v}
    return pivots


def _reduce_vector(vec, pivots):
    vec = dict(vec)
    for piv, prow in pivots.items():
        if piv in vec:
            fac = vec[piv]
            for c, v in prow.items():
                vec[c] = vec.get(c, Fraction(0)) - fac * v
    return {c: v for c, v in vec.items() if v}


class TensorQuotient:
    """Degreewise bases of (M1 (x) N1 (+) M2 (x) N2)/(I_B + I_C)."""

    def __init__(self, M: RightGenMatModule, N: LeftGenMatModule, degree_bound: int):
        self.M, self.N, self.degree_bound = M, N, degree_bound
        self._degrees = {}
        for d in range(0, degree_bound + 1):
            self._degrees[d] = self._compute_degree(d)

    def _ambient_basis(self, d: int):
        cols = []
        for ms, mdeg in self.M.M1.symbols.items():
            for ns, ndeg in self.N.N1.symbols.items():
                for mono in monomials_of_degree(d - mdeg - ndeg):
                    cols.append((1, ms, ns, mono))
        for ms, mdeg in self.M.M2.symbols.items():
            for ns, ndeg in self.N.N2.symbols.items():
                for mono in monomials_of_degree(d - mdeg - ndeg):
                    cols.append((2, ms, ns, mono))
        return cols

    def _relation_rows(self, d: int):
        M, N, g = self.M, self.N, self.M.alg
        rows = []
        # D-balancing inside M2 (x)_D N2
        for ms, mdeg in M.M2.symbols.items():
            mv = M.M2.basis_vec(ms)
            for ds, ddeg in g.D.symbols.items():
                dv = g.D.basis_vec(ds)
                for ns, ndeg in N.N2.symbols.items():
                    nv = N.N2.basis_vec(ns)
                    for mono in monomials_of_degree(d - mdeg - ddeg - ndeg):
                        extra = YRING.monomial(mono)
                        lhs = _expand_pair(2, M.act_m2d.apply(mv, dv), nv, extra)
                        rhs = _expand_pair(2, mv, N.act_dn.apply(dv, nv), extra)
                        row = _diff(lhs, rhs)
                        if row:
                            rows.append(row)
        # I_B: m (x) b.n - m.b (x) n   (m in M1, n in N2)
        for ms, mdeg in M.M1.symbols.items():
            mv = M.M1.basis_vec(ms)
            for bs, bdeg in g.B.symbols.items():
                bv = g.B.basis_vec(bs)
                for ns, ndeg in N.N2.symbols.items():
                    nv = N.N2.basis_vec(ns)
                    for mono in monomials_of_degree(d - mdeg - bdeg - ndeg):
                        extra = YRING.monomial(mono)
                        lhs = _expand_pair(1, mv, N.nu_b.apply(bv, nv), extra)
                        rhs = _expand_pair(2, M.alpha.apply(mv, bv), nv, extra)
                        row = _diff(lhs, rhs)
                        if row:
                            rows.append(row)
        # I_C: m (x) c.n - m.c (x) n   (m in M2, n in N1)
        for ms, mdeg in M.M2.symbols.items():
            mv = M.M2.basis_vec(ms)
            for cs, cdeg in g.C.symbols.items():
                cv = g.C.basis_vec(cs)
                for ns, ndeg in N.N1.symbols.items():
                    nv = N.N1.basis_vec(ns)
                    for mono in monomials_of_degree(d - mdeg - cdeg - ndeg):
                        extra = YRING.monomial(mono)
                        lhs = _expand_pair(2, mv, N.nu_c.apply(cv, nv), extra)
                        rhs = _expand_pair(1, M.beta.apply(mv, cv), nv, extra)
                        row = _diff(lhs, rhs)
                        if row:
                            rows.append(row)
        return rows

    def _compute_degree(self, d: int):
        cols = self._ambient_basis(d)
        pivots = _row_reduce(self._relation_rows(d), cols)
        reps = [c for c in cols if c not in pivots]
        return {"columns": cols, "pivots": pivots, "reps": reps}

    def dim(self, d: int) -> int:
        if d not in self._degrees:
            raise ValueError(f"degree {d} beyond bound {self.degree_bound}")
        return len(self._degrees[d]["reps"])

    def graded_dims(self):
        return [(d, self.dim(d)) for d in range(0, self.degree_bound + 1)]

    def representative_basis(self, d: int):
        return list(self._degrees[d]["reps"])

    def reduce(self, d: int, vector):
        """Coordinates of an ambient vector on the representative basis."""
        data = self._degrees[d]
        red = _reduce_vector(vector, data["pivots"])
        for c in red:
            if c in data["pivots"]:
                raise AssertionError("reduction left a pivot column")
        return red


def _diff(lhs, rhs):
    out = dict(lhs)
    for k, v in rhs.items():
        out[k] = out.get(k, Fraction(0)) - v
    return {k: v for k, v in out.items() if v}


def tensor_over(M: RightGenMatModule, N: LeftGenMatModule,
                degree_bound: int = 12) -> TensorQuotient:
    """The degreewise tensor product M (x)_R N up to the degree bound."""
    return TensorQuotient(M, N, degree_bound)


# ---------------------------------------------------------------------------
# induced endomorphisms on the tensor quotient
# ---------------------------------------------------------------------------

class ComponentMap:
    """A P2-linear, degree-homogeneous map of graded free components."""

    def __init__(self, source: GradedFreeComponent, target: GradedFreeComponent,
                 table: dict, shift: int = 0):
        self.source, self.target, self.shift = source, target, shift
        self.table = {s: _clean(v) for s, v in table.items()}
        for s in source.symbols:
            if s not in self.table:
                raise ValueError(f"map not total: missing {s}")
            got = target.degree_of(self.table[s])
            if got is not None and got != source.symbols[s] + shift:
                raise ValueError(f"map entry {s} breaks the degree shift")

    def apply(self, v: Vec) -> Vec:
        out = {}
        for s, p in v.items():
            for t, q in self.table[s].items():
                out[t] = out.get(t, YRING.zero()) + p * q
        return _clean(out)

    def compose(self, inner: "ComponentMap") -> "ComponentMap":
        table = {s: self.apply(inner.table[s]) for s in inner.source.symbols}
        return ComponentMap(inner.source, self.target, table,
                            self.shift + inner.shift)


class InducedEndomorphism:
    """diag(Id (x) F1, Id (x) F2) descended to the tensor quotient."""

    def __init__(self, T: TensorQuotient, F1: ComponentMap, F2: ComponentMap,
                 matrices: dict):
        self.T, self.F1, self.F2 = T, F1, F2
        self.shift = F1.shift
        self.matrices = matrices  # degree -> {rep_col -> {rep_col' -> Fraction}}

    def matrix(self, d: int):
        return self.matrices[d]

    def compose(self, other: "InducedEndomorphism") -> dict:
        """Matrices of self after other, degree by degree."""
        out = {}
        for d, m_other in other.matrices.items():
            d2 = d + other.shift
            if d2 not in self.matrices:
                continue
            m_self = self.matrices[d2]
            comp = {}
            for col, mid in m_other.items():
                acc = {}
                for midcol, v in mid.items():
                    for target, w in m_self.get(midcol, {}).items():
                        acc[target] = acc.get(target, Fraction(0)) + v * w
                comp[col] = {k: v for k, v in acc.items() if v}
            out[d] = comp
        return out

    def same_matrices(self, other_matrices: dict) -> bool:
        keys = set(self.matrices) & set(other_matrices)
        return all(self.matrices[d] == other_matrices[d] for d in keys)

    def is_identity(self) -> bool:
        for d, m in self.matrices.items():
            for col, image in m.items():
                if image != {col: Fraction(1)}:
                    return False
        return True


def induced_endomorphism(T: TensorQuotient, F1: ComponentMap, F2: ComponentMap):
    """Verify F = (F1, F2) is a module endomorphism and descend it.

    Returns (InducedEndomorphism, []) on success or (None, violations).
    Verification is in two stages: F must commute with the connecting
    actions of the left module on basis elements, and the diagonal map
    must carry each degree's relation subspace into the target degree's
    relation subspace (checked by reduction, not assumed).
    """
    M, N = T.M, T.N
    g = M.alg
    bad = []
    if F1.shift != F2.shift:
        return None, ["component maps have different degree shifts"]
    # stage 1: linearity over the connecting structure
    for ds in g.D.symbols:
        dv = g.D.basis_vec(ds)
        for ns in N.N2.symbols:
            nv = N.N2.basis_vec(ns)
            if F2.apply(N.act_dn.apply(dv, nv)) != N.act_dn.apply(dv, F2.apply(nv)):
                bad.append(f"F2 not D-linear at ({ds},{ns})")
    for bs in g.B.symbols:
        bv = g.B.basis_vec(bs)
        for ns in N.N2.symbols:
            nv = N.N2.basis_vec(ns)
            if F1.apply(N.nu_b.apply(bv, nv)) != N.nu_b.apply(bv, F2.apply(nv)):
                bad.append(f"F does not commute with the B-connection at ({bs},{ns})")
    for cs in g.C.symbols:
        cv = g.C.basis_vec(cs)
        for ns in N.N1.symbols:
            nv = N.N1.basis_vec(ns)
            if F2.apply(N.nu_c.apply(cv, nv)) != N.nu_c.apply(cv, F1.apply(nv)):
                bad.append(f"F does not commute with the C-connection at ({cs},{ns})")
    if bad:
        return None, bad
    # stage 2: descent, verified degreewise
    shift = F1.shift
    matrices = {}
    lo = max(0, -shift)
    hi = min(T.degree_bound, T.degree_bound - shift)
    for d in range(lo, hi + 1):
        target_d = d + shift
        # every relation must map into the target degree's relation span:
        # its image reduces to zero modulo the pivots there
        for row in T._relation_rows(d):
            img = _apply_diag(row, F1, F2)
            if _reduce_vector(img, T._degrees[target_d]["pivots"]):
                bad.append(f"relation at degree {d} not preserved")
                break
        if bad:
            break
        mat = {}
        for rep in T._degrees[d]["reps"]:
            img = _apply_diag({rep: Fraction(1)}, F1, F2)
            mat[rep] = T.reduce(target_d, img)
        matrices[d] = mat
    if bad:
        return None, bad
    return InducedEndomorphism(T, F1, F2, matrices), []


def _apply_diag(vector, F1: ComponentMap, F2: ComponentMap):
    """Apply diag(Id (x) F1, Id (x) F2) to a monomial-resolved vector."""
    out = {}
    for (comp, ms, ns, mono), coeff in vector.items():
        F = F1 if comp == 1 else F2
        nimg = F.apply({ns: YRING.monomial(mono, coeff)})
        for ns2, p in nimg.items():
            for exps, c2 in p.terms.items():
                key = (comp, ms, ns2, exps)
                out[key] = out.get(key, Fraction(0)) + c2
    return {k: v for k, v in out.items() if v}
