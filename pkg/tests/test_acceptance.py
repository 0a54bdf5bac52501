"""The acceptance battery: ten go/no-go checks, one line of output each.

Every check is exact (Fraction arithmetic, no tolerances) and carries a
wall-clock budget.  The criterion lines are printed in the terminal
summary; see conftest.py.
"""

import json
import time

from conftest import record

from sl2tensor import comparison as cpn
from sl2tensor.cli import main
from sl2tensor.matrixalg import tensor_over
from sl2tensor.suites import PROPERTIES, SuiteConfig, run_property

SEED = 0


def run_props(ids, budget, label, number, cases=None, max_degree=6,
              degree_bound=12):
    """Run the named properties, record one criterion line, assert clean."""
    cfg = SuiteConfig(seed=SEED, cases=cases, max_degree=max_degree,
                      degree_bound=degree_bound)
    t0 = time.perf_counter()
    reports = [run_property(PROPERTIES[pid], cfg) for pid in ids]
    elapsed = time.perf_counter() - t0
    bad = [r for r in reports if r["failed"]]
    total = sum(r["cases"] for r in reports)
    ok = not bad and elapsed <= budget
    verdict = "PASS" if ok else "FAIL"
    record(f"criterion {number:02d} {verdict} ({elapsed:.1f}s/{budget}s): "
           f"{label}; {total} cases over {len(reports)} properties")
    assert not bad, bad[0]["first_counterexample"]
    assert elapsed <= budget, f"budget exceeded: {elapsed:.1f}s > {budget}s"


def test_criterion_01_relations_and_action():
    run_props(["relations-defining", "involutions-idempotents", "act-morphism"],
              60, "defining relations and the polynomial action morphism",
              1, cases=200, max_degree=8)


def test_criterion_02_kernel_lemma():
    run_props(["kernel-divisible-vanishes", "kernel-vanishing-divides"],
              30, "flag kernel: divisibility <=> flag projection vanishes",
              2, cases=100)


def test_criterion_03_membership_witnesses():
    run_props(["g2-forms-witnesses", "g3-forms-witnesses"],
              60, "divisibility forms determine unique witnesses",
              3, cases=100)


def test_criterion_04_closure():
    ids = [pid for pid in PROPERTIES if pid.startswith("closure-")]
    assert len(ids) == 20
    run_props(ids, 120, "every structure map lands back in its target space",
              4, cases=100)


def test_criterion_05_hecke():
    run_props(["hecke-corner-low", "hecke-corner-high", "hecke-g2", "hecke-g3"],
              120, "both nil Hecke relations and square-zero on all components",
              5, cases=100)


def test_criterion_06_braid():
    run_props(["braid-g3", "braid-g4"],
              180, "braid routes agree with the closed-form end values",
              6, cases=None)  # property defaults: 100 and 50


def test_criterion_07_tau_equivariance():
    ids = [pid for pid in PROPERTIES if pid.startswith("tau-commutes-")]
    assert len(ids) == 6
    run_props(ids, 120, "the crossing commutes with every generator action",
              7, cases=100)


def test_criterion_08_comparison():
    t0 = time.perf_counter()
    reports = cpn.verify_comparison(12)
    M, N = cpn.build_E_modules()
    T = tensor_over(M, N, 12)
    dims = [(d, dim) for d, dim in T.graded_dims() if d % 2 == 0]
    elapsed = time.perf_counter() - t0
    bad = [r for r in reports if r["status"] != "pass"]
    ok = not bad and dims == cpn.hilbert("Q2", 12) and elapsed <= 120
    record(f"criterion 08 {'PASS' if ok else 'FAIL'} ({elapsed:.1f}s/120s): "
           f"all {len(reports)} comparison checks at degree bound 12, "
           "tensor square has the dimensions of Q2")
    assert not bad, bad[0]
    assert dims == cpn.hilbert("Q2", 12)
    assert elapsed <= 120


def test_criterion_09_weights():
    t0 = time.perf_counter()
    reports = cpn.verify_weights_grading_nilpotence(12)
    elapsed = time.perf_counter() - t0
    bad = [r for r in reports if r["status"] != "pass"]
    ok = not bad and elapsed <= 30
    record(f"criterion 09 {'PASS' if ok else 'FAIL'} ({elapsed:.1f}s/30s): "
           "weight idempotents, grading degrees, nilpotent translate")
    assert not bad, bad[0]
    assert elapsed <= 30


def test_criterion_10_cli(capsys):
    t0 = time.perf_counter()
    args = ["verify", "--suite", "nilhecke", "--cases", "10",
            "--max-degree", "3", "--seed", "7", "--format", "json"]
    code1 = main(list(args))
    out1 = capsys.readouterr().out
    code2 = main(list(args))
    out2 = capsys.readouterr().out
    deterministic = code1 == code2 == 0 and out1 == out2
    json.loads(out1)  # well-formed

    caught = {}
    for knob, suite in [("drop-straighten-unit", "nilhecke"),
                        ("swap-orientation", "l1l1"),
                        ("flip-q2-action", "l1l1")]:
        code = main(["verify", "--suite", suite, "--cases", "5",
                     "--max-degree", "2", "--degree-bound", "6",
                     "--mutate", knob])
        capsys.readouterr()
        caught[knob] = (code == 1)
    clean = main(["verify", "--suite", "all", "--cases", "3",
                  "--max-degree", "2", "--degree-bound", "4"])
    capsys.readouterr()
    elapsed = time.perf_counter() - t0
    ok = deterministic and all(caught.values()) and clean == 0
    record(f"criterion 10 {'PASS' if ok else 'FAIL'} ({elapsed:.1f}s): "
           "CLI reports are byte-identical for equal seeds and every "
           "deliberate fault is caught with exit 1")
    assert deterministic
    assert all(caught.values()), caught
    assert clean == 0
