import pytest

from sl2tensor import comparison as cp
from sl2tensor.comparison import (OMEGA, Bs1Element, Q1Element, Q2Element,
                                  RElement, Y1, Y2, build_C0, build_T0,
                                  gamma, gamma_prime, hecke_maps, hilbert,
                                  phi_map, sigma, sigma_gamma_prime, tau_B,
                                  tau_R, verify_comparison,
                                  verify_weights_grading_nilpotence)
from sl2tensor.polynomials import YRING

ONE = YRING.one()


def test_gamma_generator_relation():
    ge = gamma(RElement.e())
    assert (ge * ge - Bs1Element.from_scalar(OMEGA) * ge).is_zero()
    assert (gamma(RElement.one()) - Bs1Element.one()).is_zero()
    assert gamma_prime(RElement.e()) == Q1Element(OMEGA, YRING.zero())


def test_gamma_maps_are_multiplicative():
    r = RElement(Y1 ** 2, Y2)
    s = RElement(Y1 * Y2, ONE)
    assert (gamma(r * s) - gamma(r) * gamma(s)).is_zero()
    assert gamma_prime(r * s) == gamma_prime(r) * gamma_prime(s)


def test_coords_are_inverse_to_building():
    q1 = Q1Element(Y1 * Y2 + OMEGA * Y1 ** 2, Y1 * Y2)
    phi, c2 = q1.coords()
    assert Q1Element(phi + OMEGA * c2, phi) == q1
    q2 = Q2Element(Y1 ** 3, Y1 ** 3 - OMEGA * Y2)
    e2, d2 = q2.coords()
    assert Q2Element(e2 + OMEGA * d2, e2) == q2
    with pytest.raises(ValueError):
        Q2Element(Y1, Y1 + ONE)


def test_sigma_is_a_right_module_map_for_the_swapped_action():
    q = Q1Element(Y1 * Y2 + OMEGA, Y1 * Y2)
    p = Q1Element(Y2 + OMEGA * Y1, Y2)
    assert sigma(q * p) == sigma(q).act_q1op(p)


def test_hecke_identities_on_q2():
    xE, Ex = hecke_maps()
    samples = [Q2Element(ONE, ONE), Q2Element(OMEGA, YRING.zero()),
               Q2Element(Y1 ** 2, Y2 ** 2), Q2Element(Y1 * OMEGA, YRING.zero())]
    for q in samples:
        assert Ex(q.t21()) - xE(q).t21() == q
        assert Ex(q).t21() - xE(q.t21()) == q
        assert q.t21().t21().is_zero()


def test_tau_translate_intertwined():
    for r in [RElement(Y1 ** 2 * Y2, Y1 + Y2), RElement.e(),
              RElement(YRING.zero(), Y1 * Y2)]:
        image = RElement.scalar(tau_R(r))
        assert sigma_gamma_prime(r).t21() == sigma_gamma_prime(image)
        assert (tau_B(gamma(r)) - gamma(image)).is_zero()


def test_dictionary_is_multiplicative_and_unital():
    T0, C0 = build_T0(), build_C0()
    Phi = phi_map(T0, C0)
    assert Phi.apply(T0.one()) == C0.one()
    basis = T0.basis_elements()
    for x in basis:
        for y in basis:
            assert Phi.apply(x * y) == Phi.apply(x) * Phi.apply(y)


def test_hilbert_closed_forms():
    for m in range(5):
        d = 2 * m
        assert hilbert("P2", d)[-1] == (d, m + 1)
        assert hilbert("omegaP2", d)[-1] == (d, m)
        for name in ("Q1", "Q2", "Bs1", "R"):
            assert hilbert(name, d)[-1] == (d, 2 * m + 1)
        for name in ("T0", "C0"):
            assert hilbert(name, d)[-1] == (d, 5 * m + 3)
    with pytest.raises(KeyError):
        hilbert("nope", 4)


def test_verify_comparison_passes():
    reports = verify_comparison(8)
    assert [r["check"] for r in reports] == [
        "translation-maps-bijective", "dictionary-multiplicative-bijective",
        "x-translate-intertwined", "tau-translate-intertwined",
        "hecke-relation-on-Q2", "tensor-square-dimensions"]
    assert all(r["status"] == "pass" for r in reports)
    assert all(r["degree_bound"] == 8 for r in reports)


def test_verify_weights_passes():
    reports = verify_weights_grading_nilpotence(8)
    assert [r["check"] for r in reports] == [
        "weight-idempotents", "weight-arrows", "grading-degrees",
        "translate-nilpotence"]
    assert all(r["status"] == "pass" for r in reports)


def test_swapped_orientation_flips_the_sign():
    q = Q2Element(Y1, Y2)
    cp.SWAP_ORIENTATION = True
    try:
        xE, Ex = hecke_maps()
        assert Ex(q.t21()) - xE(q).t21() == -q
        bad = [r for r in verify_comparison(4) if r["status"] == "fail"]
        assert any(r["check"] == "hecke-relation-on-Q2" for r in bad)
    finally:
        cp.SWAP_ORIENTATION = False


def test_flipped_action_breaks_the_translation_maps():
    cp.FLIP_Q2_ACTION = True
    try:
        q = Q1Element(Y1 * Y2 + OMEGA, Y1 * Y2)
        p = Q1Element(Y2 + OMEGA * Y1, Y2)
        assert sigma(q * p) != sigma(q).act_q1op(p)
        bad = [r for r in verify_comparison(4) if r["status"] == "fail"]
        assert any(r["check"] == "translation-maps-bijective" for r in bad)
    finally:
        cp.FLIP_Q2_ACTION = False
