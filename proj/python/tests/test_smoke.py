import json
import pathlib

import pytest

import pocka

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def test_normal_form_and_equivalence():
    u = pocka.Universe(["x", "y"], ["0", "1"])
    assert pocka.normal_form("x == 1 & y == 0", u) == ["{x:1,y:0}"]
    assert len(pocka.normal_form("!(x == 1)", u)) == 3
    assert not pocka.obs_equiv("x == 0 \\/ !(x == 0)", "top", u)
    assert pocka.obs_equiv("x == 0 & x == 1", "bot", u)
    assert pocka.obs_leq("x == 1 & y == 0", "x == 1", u)


def test_round_trip():
    text = "x := 1 + y := 0 ; (x == 1 || y := x)*"
    assert pocka.format_term(pocka.format_term(text)) == pocka.format_term(text)
    assert pocka.format_pomset("[x:=1] ; ([y:=1] || <{x:1}>)") == "[x:=1] ; ([y:=1] || <{x:1}>)"


def test_semantics_and_membership():
    u = pocka.Universe(["x"], ["0", "1"])
    b = pocka.Bounds(pad_bound=0)
    assert pocka.sem("0", u, b) == []
    assert "<{x:1}>" in pocka.sem("x == 1 ; x == 1", u, b)
    assert pocka.member("<{x:0}>", "<{x:0}> ; <{x:0}>", u, b)
    assert json.loads(b.to_json())["pad_bound"] == 0


def test_guarded():
    ok = pocka.check_guarded("<{x:1}> ; [x:=2] ; <{x:2}>", derive=True)
    assert ok["guarded"] and "derivation" in ok
    bad = pocka.check_guarded("<{x:0}> ; [x:=1] ; <{x:2}>")
    assert not bad["guarded"]
    assert "A5" in {v["property"] for v in bad["violations"]}
    assert "shape=box" in pocka.to_dot("<{x:1}>")
    assert len(pocka.enumerate_guarded(pocka.Universe(["x"], ["0", "1"]), 3)) > 0


def test_litmus():
    spec = (DATA / "store_buffering.lit").read_text()
    r = pocka.litmus(spec, pocka.Bounds(pad_bound=0))
    assert r["p_universal"] and r["guarded_witnesses"] == []
    s = pocka.litmus(spec, pocka.Bounds(pad_bound=0), swap=True)
    assert s["guarded_witnesses"]


def test_errors():
    with pytest.raises(pocka.UsageError):
        pocka.format_term("x := ")
    with pytest.raises(ValueError):
        pocka.normal_form("z == 1", pocka.Universe(["x"], ["0"]))
