import json

from sl2tensor import comparison as cp
from sl2tensor import nilhecke as nh
from sl2tensor.suites import (PROPERTIES, SUITE_NAMES, SuiteConfig, report_ok,
                              run_suite, suite_properties)

FAST = SuiteConfig(seed=3, cases=5, max_degree=2, degree_bound=4)


def test_property_registry():
    assert SUITE_NAMES == ("nilhecke", "gmodels", "l1l1")
    for pid, prop in PROPERTIES.items():
        assert prop.id == pid
    everything = suite_properties("all")
    assert {p.id for p in everything} == set(PROPERTIES)
    for name in SUITE_NAMES:
        assert suite_properties(name)
    total = sum(len(suite_properties(n)) for n in SUITE_NAMES)
    assert total == len(PROPERTIES) == len(everything)


def test_report_schema_and_determinism():
    r1 = run_suite("nilhecke", FAST)
    r2 = run_suite("nilhecke", FAST)
    assert json.dumps(r1, sort_keys=True) == json.dumps(r2, sort_keys=True)
    assert r1["suite"] == "nilhecke"
    assert r1["config"] == {"seed": 3, "cases": 5, "max_degree": 2,
                            "degree_bound": 4}
    for p in r1["properties"]:
        assert set(p) == {"id", "component", "cases", "passed", "failed",
                          "first_counterexample"}
        assert p["passed"] + p["failed"] == p["cases"]
    assert report_ok(r1)


def test_all_suites_pass_fast_config():
    for name in SUITE_NAMES:
        assert report_ok(run_suite(name, FAST)), name


def test_fixed_properties_ignore_case_override():
    r = run_suite("nilhecke", FAST)
    by_id = {p["id"]: p for p in r["properties"]}
    assert by_id["relations-defining"]["cases"] > 5
    assert by_id["act-morphism"]["cases"] == 5


def test_drop_straighten_unit_caught():
    nh.DROP_STRAIGHTEN_UNIT = True
    try:
        r = run_suite("nilhecke", FAST)
    finally:
        nh.DROP_STRAIGHTEN_UNIT = False
    bad = [p for p in r["properties"] if p["failed"]]
    assert any(p["id"] == "relations-defining" for p in bad)
    assert all("case" in p["first_counterexample"] for p in bad)
    # and the restore is clean
    assert report_ok(run_suite("nilhecke", FAST))


def test_swap_orientation_caught():
    cp.SWAP_ORIENTATION = True
    try:
        r = run_suite("l1l1", FAST)
    finally:
        cp.SWAP_ORIENTATION = False
    bad = {p["id"] for p in r["properties"] if p["failed"]}
    assert "comparison-checks" in bad
    assert report_ok(run_suite("l1l1", FAST))


def test_flip_q2_action_caught():
    cp.FLIP_Q2_ACTION = True
    try:
        r = run_suite("l1l1", FAST)
    finally:
        cp.FLIP_Q2_ACTION = False
    bad = {p["id"] for p in r["properties"] if p["failed"]}
    assert "comparison-checks" in bad
    assert report_ok(run_suite("l1l1", FAST))


def test_seed_changes_cases_not_verdict():
    a = run_suite("nilhecke", SuiteConfig(seed=1, cases=5, max_degree=2))
    b = run_suite("nilhecke", SuiteConfig(seed=2, cases=5, max_degree=2))
    assert report_ok(a) and report_ok(b)
