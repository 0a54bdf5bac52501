from fractions import Fraction

from sl2tensor import comparison as cp
from sl2tensor.comparison import (Q1Element, Y1, Y2, build_C0, build_E_modules,
                                  build_T0, central_on_N, hilbert,
                                  identity_on_N, xtilde_on_N)
from sl2tensor.matrixalg import (ComponentMap, LeftGenMatModule,
                                 RightGenMatModule, induced_endomorphism,
                                 tensor_over)
from sl2tensor.polynomials import YRING


def even_dims(pairs, bound):
    return [dim for d, dim in pairs if d <= bound]


def test_t0_is_associative_with_unit():
    assert build_T0().check_associativity() == []


def test_c0_is_associative_with_unit():
    assert build_C0().check_associativity() == []


def test_diagonal_idempotents():
    alg = build_C0()
    e11, e22, one = alg.e11(), alg.e22(), alg.one()
    assert e11 + e22 == one
    assert e11 * e11 == e11
    assert e22 * e22 == e22
    assert (e11 * e22).is_zero()
    assert (e22 * e11).is_zero()


def test_algebra_dims_match_hilbert():
    t0, c0 = build_T0(), build_C0()
    for d, dim in hilbert("T0", 8):
        assert t0.dim(d) == dim
    for d, dim in hilbert("C0", 8):
        assert c0.dim(d) == dim
    assert [dim for _, dim in hilbert("T0", 8)] == [3, 8, 13, 18, 23]


def test_module_squares_commute():
    M, N = build_E_modules()
    assert M.check_module() == []
    assert N.check_module() == []


def test_tensor_dims_are_q2():
    M, N = build_E_modules()
    T = tensor_over(M, N, 10)
    got = [(d, dim) for d, dim in T.graded_dims() if d % 2 == 0]
    assert got == hilbert("Q2", 10)
    assert all(dim == 0 for d, dim in T.graded_dims() if d % 2 == 1)


def test_zero_module_tensors_to_zero():
    alg = build_C0()
    M, _ = build_E_modules(alg)
    T = tensor_over(M, LeftGenMatModule.zero_module(alg), 6)
    assert all(dim == 0 for _, dim in T.graded_dims())


def regular_row1(alg):
    return RightGenMatModule("row1", alg, alg.A, alg.B,
                             act_m1a=alg.mul_aa.table, act_m2d=alg.act_bd.table,
                             alpha=alg.act_ab.table, beta=alg.gamma1.table)


def regular_row2(alg):
    return RightGenMatModule("row2", alg, alg.C, alg.D,
                             act_m1a=alg.act_ca.table, act_m2d=alg.mul_dd.table,
                             alpha=alg.gamma2.table, beta=alg.act_dc.table)


def test_regular_rows_tensor_to_column_components():
    # e11 * C0 (x) N picks out the first column entry, e22 * C0 the second
    alg = build_C0()
    _, N = build_E_modules(alg)
    row1, row2 = regular_row1(alg), regular_row2(alg)
    assert row1.check_module() == []
    assert row2.check_module() == []
    t1 = tensor_over(row1, N, 8)
    t2 = tensor_over(row2, N, 8)
    assert [dim for d, dim in t1.graded_dims() if d % 2 == 0] == [0, 1, 2, 3, 4]
    assert [dim for d, dim in t2.graded_dims() if d % 2 == 0] == [1, 3, 5, 7, 9]


def test_identity_descends_to_identity():
    M, N = build_E_modules()
    T = tensor_over(M, N, 8)
    endo, bad = induced_endomorphism(T, *identity_on_N(N))
    assert bad == [] and endo.is_identity()


def test_xtilde_descends_and_is_functorial():
    M, N = build_E_modules()
    T = tensor_over(M, N, 10)
    x, bad = induced_endomorphism(T, *xtilde_on_N(N))
    assert bad == []
    assert not x.is_identity()
    assert any(m for m in x.matrices.values())
    F1, F2 = xtilde_on_N(N)
    sq, bad2 = induced_endomorphism(T, F1.compose(F1), F2.compose(F2))
    assert bad2 == []
    assert sq.same_matrices(x.compose(x))


def test_central_multiplications_commute():
    M, N = build_E_modules()
    T = tensor_over(M, N, 10)
    f = Y1 + Y2
    g = Y1 * Y2
    ef, _ = induced_endomorphism(T, *central_on_N(N, f))
    eg, _ = induced_endomorphism(T, *central_on_N(N, g))
    efg, _ = induced_endomorphism(T, *central_on_N(N, f * g))
    assert efg.same_matrices(ef.compose(eg))
    assert efg.same_matrices(eg.compose(ef))


def test_non_module_map_is_rejected():
    _, N = build_E_modules()
    T = tensor_over(build_E_modules()[0], N, 6)
    V = {"v1": Q1Element.one(), "v2": Q1Element(Y1 - Y2, YRING.zero())}
    mult = Q1Element(Y1, Y2)  # not central, so not a left-module map
    F1 = ComponentMap(N.N1, N.N1, {"n": {"n": Y1}}, shift=2)
    F2 = ComponentMap(N.N2, N.N2,
                      {vs: cp._q1_vec(mult * V[vs]) for vs in V}, shift=2)
    endo, bad = induced_endomorphism(T, F1, F2)
    assert endo is None and bad


def test_reduce_returns_coordinates():
    M, N = build_E_modules()
    T = tensor_over(M, N, 6)
    d = 4
    reps = T.representative_basis(d)
    assert len(reps) == T.dim(d)
    for rep in reps:
        assert T.reduce(d, {rep: Fraction(1)}) == {rep: Fraction(1)}
