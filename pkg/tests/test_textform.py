import random

import pytest

from sl2tensor import nilhecke as nh
from sl2tensor.textform import ParseError, infer_arity, parse


def test_pinned_renderings():
    assert parse("tau1 * x1", 2).render() == "x2*tau1 + 1"
    assert parse("x1 * tau1", 2) == nh.from_poly(nh.xvar(1), 2) * nh.tau(1, 2)
    assert parse("s1", 2).render() == "(-x1 + x2)*tau1 + 1"
    assert parse("delta1", 2).render() == "(x2 - y)*tau1 + 1"


def test_renders_from_straightening():
    assert (nh.tau(1, 2) * nh.from_poly(nh.xvar(1), 2)).render() == "x2*tau1 + 1"
    assert (nh.from_poly(nh.xvar(1), 2) * nh.tau(1, 2)).render() == "x1*tau1"
    assert (nh.tau(1, 2) * nh.from_poly(nh.xvar(2), 2)).render() == "x1*tau1 - 1"
    assert nh.s_elem(1, 2).render() == "(-x1 + x2)*tau1 + 1"
    assert nh.delta(1, 2).render() == "(x2 - y)*tau1 + 1"
    assert (nh.tau(1, 2) * nh.tau(1, 2)).render() == "0"
    assert (nh.s_elem(1, 2) * nh.s_elem(1, 2)).render() == "1"


def test_infer_arity():
    assert infer_arity("tau1 * x1") == 2
    assert infer_arity("x3") == 3
    assert infer_arity("y + 1") == 1
    assert infer_arity("s2 * delta1") == 3


def test_parse_respects_precedence_and_parens():
    assert parse("2 + 3 * x1", 1) == nh.from_poly(
        nh.xvar(1) * 3 + nh.XRING.one() * 2, 1)
    assert parse("(1 + x1)^2", 1) == nh.from_poly(
        (nh.xvar(1) + nh.XRING.one()) ** 2, 1)
    assert parse("-x1 + x2", 2) == nh.from_poly(nh.xvar(2) - nh.xvar(1), 2)
    assert parse("2 * x1 ^ 2", 1) == nh.from_poly(nh.xvar(1) ** 2 * 2, 1)


def test_parse_halves():
    from fractions import Fraction
    assert parse("1/2 * y", 1) == nh.from_poly(nh.yvar() * Fraction(1, 2), 1)
    assert parse("y^2 - 1/3", 1) == nh.from_poly(
        nh.yvar() ** 2 - nh.XRING.one() * Fraction(1, 3), 1)


def test_named_generators_parse_to_their_elements():
    assert parse("s1", 2) == nh.s_elem(1, 2)
    assert parse("delta2", 3) == nh.delta(2, 3)
    assert parse("tau2 * tau1", 3) == nh.tau(2, 3) * nh.tau(1, 3)


def test_roundtrip_random_elements():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(1, 3)
        h = nh.zero(n)
        for _ in range(rng.randint(1, 4)):
            term = nh.one(n)
            for _ in range(rng.randint(1, 4)):
                kind = rng.random()
                if kind < 0.4 and n > 1:
                    term = term * nh.tau(rng.randint(1, n - 1), n)
                elif kind < 0.7:
                    term = term * nh.from_poly(
                        nh.xvar(rng.randint(1, n)) + nh.XRING.one() * rng.randint(-2, 2), n)
                else:
                    term = term * nh.from_poly(nh.yvar() ** rng.randint(0, 2), n)
            h = h + term
        assert parse(h.render(), h.n) == h


def test_parse_errors():
    with pytest.raises(ParseError):
        parse("zz1", 2)
    with pytest.raises(ParseError):
        parse("x1 +", 2)
    with pytest.raises(ParseError):
        parse("(x1", 2)
    with pytest.raises(ParseError):
        parse("x1 $ x2", 2)
    with pytest.raises(ParseError):
        parse("x3", 2)  # index beyond the arity
    with pytest.raises(ParseError):
        parse("tau2", 2)
    with pytest.raises(ParseError):
        parse("", 2)
