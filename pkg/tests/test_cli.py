import json
import random

import pytest

from sl2tensor import nilhecke as nh
from sl2tensor.cli import main
from sl2tensor.textform import parse


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_normal_form_pinned(capsys):
    assert run(capsys, "normal-form", "tau1 * x1") == (0, "x2*tau1 + 1\n", "")
    assert run(capsys, "normal-form", "s1 * s1") == (0, "1\n", "")
    assert run(capsys, "normal-form", "tau1 * tau1") == (0, "0\n", "")


def test_act_pinned(capsys):
    assert run(capsys, "act", "tau1", "--on", "x1^2", "--n", "2") == \
        (0, "x1 + x2\n", "")
    assert run(capsys, "act", "delta1", "--on", "1", "--n", "2") == (0, "1\n", "")
    assert run(capsys, "act", "x1", "--on", "y", "--n", "1") == (0, "x1*y\n", "")


def test_hilbert_pinned(capsys):
    assert run(capsys, "hilbert", "--component", "Q1", "--max-degree", "4") == \
        (0, "0:1 2:3 4:5\n", "")
    assert run(capsys, "hilbert", "--component", "omegaP2", "--max-degree", "4") == \
        (0, "0:0 2:1 4:2\n", "")
    assert run(capsys, "hilbert", "--component", "P2", "--max-degree", "0") == \
        (0, "0:1\n", "")


def test_normal_form_roundtrips_random_elements(capsys):
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(1, 3)
        h = nh.one(n)
        for _ in range(rng.randint(1, 5)):
            kind = rng.random()
            if kind < 0.4 and n > 1:
                h = h * nh.tau(rng.randint(1, n - 1), n)
            elif kind < 0.6 and n > 1:
                h = h * nh.s_elem(rng.randint(1, n - 1), n)
            elif kind < 0.8:
                h = h * nh.from_poly(nh.xvar(rng.randint(1, n)) +
                                     nh.XRING.one() * rng.randint(-2, 2), n)
            else:
                h = h + nh.from_poly(nh.yvar(), n)
        code, out, err = run(capsys, "normal-form", "--n", str(n), "--", h.render())
        assert code == 0 and err == ""
        assert parse(out.strip(), n) == h


def test_verify_text_format(capsys):
    code, out, err = run(capsys, "verify", "--suite", "nilhecke", "--cases", "3",
                         "--max-degree", "2")
    assert code == 0
    assert "[PASS]" in out and "[FAIL]" not in out
    assert out.rstrip().endswith("0 failing") or "failing" in out.rstrip().splitlines()[-1]


def test_verify_json_is_deterministic(capsys):
    args = ("verify", "--suite", "nilhecke", "--cases", "3", "--max-degree", "2",
            "--seed", "5", "--format", "json")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    report = json.loads(out1)
    assert report["suite"] == "nilhecke"
    assert report["config"]["seed"] == 5


@pytest.mark.parametrize("knob,suite", [
    ("drop-straighten-unit", "nilhecke"),
    ("swap-orientation", "l1l1"),
    ("flip-q2-action", "l1l1"),
])
def test_mutations_are_caught(capsys, knob, suite):
    code, out, err = run(capsys, "verify", "--suite", suite, "--cases", "5",
                         "--max-degree", "2", "--degree-bound", "4",
                         "--mutate", knob)
    assert code == 1
    assert "[FAIL]" in out
    # the knob is restored afterwards
    code2, _, _ = run(capsys, "verify", "--suite", suite, "--cases", "5",
                      "--max-degree", "2", "--degree-bound", "4")
    assert code2 == 0


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "normal-form", "zz1")[0] == 2
    assert run(capsys, "act", "tau1", "--on", "tau1", "--n", "2")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["hilbert", "--component", "bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_parse_error_message_goes_to_stderr(capsys):
    code, out, err = run(capsys, "normal-form", "x1 +")
    assert code == 2 and out == "" and err


def test_act_arity_mismatch(capsys):
    code, out, err = run(capsys, "act", "tau3", "--on", "x1", "--n", "2")
    assert code == 2 and err
