import io
import json
import subprocess
import sys
import time

import pytest

from ffoc.cli import run_command
from ffoc.cobweb import mobius_recurrence, parse_matrix_csv, zeta_matrix


def run(*argv):
    err = io.StringIO()
    code, out = run_command(list(argv), err=err)
    return code, out, err.getvalue()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("fib", "10"), "55"),
        (("binom", "5", "2"), "15"),
        (("ffact", "6"), "240"),
        (("falling", "5", "2"), "15"),
    ],
)
def test_numbers(argv, expected):
    assert run(*argv)[:2] == (0, expected)


def test_number_json():
    code, out, _ = run("binom", "6", "3", "--format", "json")
    assert code == 0 and json.loads(out) == {"binom": "60"}


def test_verify_report():
    code, out, _ = run("verify", "--families", "all", "--upto", "8")
    assert code == 1
    entries = json.loads(out)
    assert {"family": "abel", "n": 2, "source_pair": ["paper-listing", "closed-form"],
            "lhs": "x^2 + a*x", "rhs": "x^2 - a*x", "diff": "2*a*x"} in entries
    assert set(entries[0]) == {"family", "n", "source_pair", "lhs", "rhs", "diff"}
    assert run("verify", "--families", "all", "--upto", "8")[1] == out


def test_verify_exit_zero_when_clean():
    code, out, _ = run("verify", "--families", "bernoulli", "--upto", "7")
    assert (code, json.loads(out)) == (0, [])


def test_verify_csv():
    code, out, _ = run("verify", "--families", "abel", "--upto", "2", "--format", "csv")
    assert code == 1
    assert "abel,2,paper-listing/closed-form,x^2 + a*x,x^2 - a*x,2*a*x" in out.splitlines()


def test_family_tables():
    code, out, _ = run("family", "bernoulli", "--upto", "3")
    assert code == 0
    assert out.splitlines() == ["0: 1", "1: x + 1", "2: x^2 + x + 1/2", "3: x^3 + 2*x^2 + x + 1/3"]
    code, out, _ = run("family", "basic:abel:a", "--upto", "3", "--format", "csv")
    assert out.splitlines()[-1] == "3,x^3 - 4*a*x^2 + 2*a^2*x"
    code, out, _ = run("basic", "abel", "--upto", "3", "--param", "a=2", "--format", "json")
    assert json.loads(out)[3] == {"n": 3, "poly": "x^3 - 8*x^2 + 8*x"}
    code, out, _ = run("family", "laguerre-alpha", "--upto", "2", "--alpha", "1")
    assert out.splitlines()[-1] == "2: x^2 - 2*x + 2"


def test_sheffer_command():
    series = "series:[1,-1/2,1/6]"
    code, out, _ = run("sheffer", "dF", series, "--upto", "2", "--trunc", "2")
    assert code == 0
    code2, out2, _ = run("family", f"sheffer:dF:{series}", "--upto", "2", "--trunc", "2")
    assert (code2, out2) == (code, out)
    code, out, _ = run("family", "sheffer:abel:a=1:nablaF", "--upto", "2")
    assert code == 2  # nablaF is not invertible


def test_matrix_commands():
    code, out, _ = run("zeta", "--size", "4", "--format", "csv")
    assert (code, out) == (0, "1,1,1,1\n0,1,1,1\n0,0,1,0\n0,0,0,1")
    code, out, _ = run("mobius", "--size", "17", "--style", "paper", "--method", "invert")
    assert out.splitlines()[1].strip() == "1 -1 -1 1 1 1 -2 -2 -2 -2 -2 8 8 8 8 8"
    code, out, _ = run("mobius", "--size", "5", "--format", "json", "--method", "closed")
    doc = json.loads(out)
    assert doc["kind"] == "mobius" and doc["entries"][0] == ["1", "-1", "0", "0", "0"]


@pytest.mark.parametrize("method", ["closed", "recurrence", "invert"])
def test_matrix_csv_roundtrip(method):
    _, out, _ = run("mobius", "--size", "40", "--format", "csv", "--method", method)
    assert parse_matrix_csv(out) == mobius_recurrence(40)
    _, out, _ = run("zeta", "--size", "40", "--format", "csv", "--style", "paper")
    assert parse_matrix_csv(out) == zeta_matrix(40)


def test_chain_commands():
    assert run("chains", "--root", "8")[:2] == (0, "65520")
    assert run("chains", "--from-level", "2", "--to-level", "4")[:2] == (0, "6")
    assert run("chains", "--subposets", "2", "3")[:2] == (0, "15")


@pytest.mark.parametrize(
    "argv",
    [
        ("frobnicate",),
        ("fib",),
        ("fib", "-3"),
        ("binom", "2", "5"),
        ("basic", "bogus"),
        ("family", "basic:series:[x]"),
        ("chains", "--root", "9"),
        ("chains", "--from-level", "3"),
        ("family", "abel", "--param", "b=1"),
        ("family", "abel", "--upto", "20", "--trunc", "10"),
        ("zeta", "--size", "0"),
        ("verify", "--families", "chebyshev"),
    ],
)
def test_usage_errors(argv):
    code, out, err = run(*argv)
    assert code == 2 and out == "" and err.startswith("ffoc: error:")


def test_module_entry_point_exit_codes():
    def sh(*args):
        return subprocess.run([sys.executable, "-m", "ffoc", *args], capture_output=True, text=True)

    r = sh("fib", "10")
    assert (r.returncode, r.stdout) == (0, "55\n")
    r = sh("verify", "--upto", "8")
    assert r.returncode == 1 and json.loads(r.stdout)
    r = sh("mobius", "--method", "nope")
    assert r.returncode == 2 and r.stderr


def test_default_commands_are_quick():
    for argv in (("verify",), ("zeta",), ("mobius",), ("chains", "--root", "8"),
                 ("family", "hermite"), ("basic", "laguerre")):
        t0 = time.perf_counter()
        code, _, _ = run(*argv)
        assert code in (0, 1)
        assert time.perf_counter() - t0 < 10
