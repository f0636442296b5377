"""CLI behavior tests; SCFF_BIN points at the built binary."""

import os
import subprocess

BIN = os.environ.get("SCFF_BIN", "./build/scff")


def run(*args, expect=0):
    p = subprocess.run([BIN, *args], capture_output=True, text=True)
    assert p.returncode == expect, (p.returncode, p.stderr)
    return p.stdout


def test_invariants():
    out = run("invariants", "--q", "5", "--A", "t^2")
    kv = dict(line.split("\t", 1) for line in out.strip().splitlines())
    assert kv["I"] == "1"
    assert kv["genus"] == "2"
    assert kv["R"] == "4"
    assert kv["signature"] == "(1,1;1,1;1,1)"
    assert kv["basis_denominator"] == "1"


def test_exact_row():
    out = run("exact", "--q", "5", "--A", "t^2").split()
    assert out[2] == "2"          # genus
    assert out[4] == "48"         # h
    assert out[5] == "12"         # h'


def test_classno_small():
    out = run("classno", "--q", "5", "--A", "t^2", "--trunc", "829").split()
    assert out[2] == "2"          # g
    assert out[5] == "5"          # lambda
    assert out[-1] == "12"        # hprime_est


def test_census_small():
    out = run("census", "--q", "5", "--A", "t^2", "--trunc", "205").split()
    assert out[2] == "205"
    s, i, r = map(int, out[-3:])
    assert s + i + r == 205 and r == 2


def test_census_lambda():
    out = run("census", "--q", "5", "--A", "t^2", "--lambda", "3").split()
    assert int(out[2]) == 55


def test_psig():
    out = run("psig", "--q", "5", "--A", "t^2", "--P", "t").split()
    assert out[3] == "inert"
    out = run("psig", "--q", "5", "--A", "t^2", "--P", "t+1").split()
    assert out[3] == "split" and out[4] == "(1,1;1,1;1,1)"


def test_classify_params():
    out = run("classify-params", "--q", "7")
    rows = [tuple(map(int, line.split("\t"))) for line in out.strip().splitlines()]
    assert len(rows) == 6
    assert all(c == 6 for c, _, _ in rows)


def test_canon_roundtrip():
    out = run("canon", "--q", "5", "--A", "t^10+2t^5+3").split()
    assert out[1] == "t^2+2t+3"
    assert out[2] == "frobenius_power"


def test_survey_spot():
    out = run("survey", "--q", "7", "--deg-a", "2", "--trunc", "140", "--threads", "2")
    rows = {line.split("\t")[1]: line.split("\t") for line in out.strip().splitlines()}
    assert rows["t^2+4"][2] == "9"


def test_large_index():
    out = run("large-index", "--q", "7", "--deg-a", "3", "--threads", "2")
    rows = {line.split("\t")[1]: line.split("\t") for line in out.strip().splitlines()}
    assert rows["t^3+5"][2] == "3"
    assert "R=3:h'=3:normform=1" in rows["t^3+5"][5]
    assert rows["2t^3+5"][5] == "R=3:h'=1:normform=1"


def test_usage_errors():
    p = subprocess.run([BIN, "exact"], capture_output=True, text=True)
    assert p.returncode != 0
    p = subprocess.run([BIN, "exact", "--q", "5", "--A", "3"], capture_output=True, text=True)
    assert p.returncode == 1  # constant A is a domain error
    p = subprocess.run([BIN, "census", "--q", "5", "--A", "t", "--trunc", "5", "--lambda", "2"],
                       capture_output=True, text=True)
    assert p.returncode != 0  # mutually exclusive


def test_help_everywhere():
    for cmd in ["invariants", "psig", "census", "classno", "exact", "survey",
                "search-h1", "large-index", "classify-params", "canon"]:
        p = subprocess.run([BIN, cmd, "--help"], capture_output=True, text=True)
        assert p.returncode == 0
        assert cmd in p.stdout or p.stdout
