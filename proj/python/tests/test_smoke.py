import json

import pytest

import jordanian


def test_suite_names():
    assert "ybe" in jordanian.suite_names()
    assert jordanian.suite_names() == sorted(jordanian.suite_names())


def test_unitarity_report():
    report = jordanian.run_suite("unitarity")
    assert len(report) == 2
    assert all(c["status"] == "pass" for c in report)


def test_ybe_at_numeric_point():
    report = jordanian.run_suite("ybe", at="h=1,s=2,lambda=3,mu=5,nu=7")
    assert all(c["status"] == "pass" for c in report)


def test_coloured_r_entries():
    r = jordanian.coloured_r()
    assert r[0][1] == "h + lambda*s"
    assert r[0][3] == "h^2 + h*mu*s - h*lambda*s - lambda*mu*s^2"
    assert jordanian.coloured_r(at="lambda=0,mu=0")[0][3] == "h^2"


def test_emit_matches_entries():
    m = json.loads(jordanian.emit("r-matrix"))
    assert m["entries"] == jordanian.coloured_r()
    assert jordanian.emit("r-matrix", format="latex").startswith("\\begin{pmatrix}")


def test_simplify():
    assert jordanian.simplify("(h+mu*s)^2/(2*h)") == "(1/2*h^2 + h*mu*s + 1/2*mu^2*s^2)/h"


def test_errors():
    with pytest.raises(ValueError):
        jordanian.run_suite("nope")
    with pytest.raises(jordanian.JordanianError):
        jordanian.simplify("1/(h - h)")
    with pytest.raises(ValueError):
        jordanian.emit("r-matrix", format="html")
