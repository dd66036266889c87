import json
from pathlib import Path

import pytest

import lpadecomp as lp

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def load(name):
    return lp.Graph.load(FIXTURES / f"{name}.json")


def test_graph_roundtrip():
    g = load("graph_c")
    assert g.vertices == ["p", "u", "w"]
    assert g.bundles == [("a", "p", "u", "omega"), ("b", "p", "w", "1")]
    assert g.kind("p") == "infinite-emitter"
    assert lp.Graph.from_json(g.to_json()) == g


def test_bad_input_raises():
    with pytest.raises(lp.InputError, match="multiplicity must be positive"):
        load("bad_zero")
    with pytest.raises(ValueError):
        lp.Graph.from_json("{")


def test_lattice_enumeration():
    g = load("graph_c")
    assert lp.hereditary_saturated_sets(g) == [[], ["u"], ["w"], ["u", "w"], ["p", "u", "w"]]
    assert lp.breaking_vertices(g, ["u"]) == ["p"]
    assert len(lp.pairs(g)) == 6
    assert "digraph hasse" in lp.hasse_dot(g)


def test_clopen_verdicts():
    a, b = load("graph_a"), load("graph_b")
    assert lp.is_clopen(a, ["v"]) == {"clopen": False, "failing": "cond_i", "cycle": "u:e", "vertex": None}
    assert lp.is_clopen(b, ["v"])["vertex"] == "u"
    with pytest.raises(lp.ContractError):
        lp.is_clopen(a, ["u"], ["v"])


def test_counterexample():
    g = load("graph_c")
    d = lp.decompose(g)
    assert d["decomposable"]
    assert d["witness"] == (["u"], ["p"])
    assert d["complement"] == (["w"], [])
    assert lp.naive_check(g, ["u"], ["w"]) == "p"
    assert lp.compatible_split(g) == (["u"], ["w"])
    assert lp.compatible_split(load("graph_a")) is None


def test_report_and_selfcheck():
    g = load("graph_c")
    rep = lp.analyze(g)
    assert rep["schema"] == lp.REPORT_SCHEMA
    assert rep["decomposition"]["routes_agree"]
    assert json.dumps(rep) == json.dumps(lp.analyze(g))
    assert all(ok for _, ok, _ in lp.selfcheck(g))


def test_algebra():
    A = lp.Algebra(load("graph_a"))
    assert A.parse("e* e - u").is_zero()
    assert A.parse("e f").degrees() == [2]
    assert A.parse("e") * A.parse("f") == A.parse("e f")
    assert str(A.parse("u - f f*")) == str(A.parse("e e*"))

    C = lp.Algebra(load("graph_c"))
    vh = C.parse("vh(p)", H=["u"])
    assert C.in_ideal(vh, ["u"], ["p"])
    assert not C.in_ideal(C.parse("w"), ["u"], ["p"])
    f1, f2 = C.split(C.parse("p"), ["u"], ["p"])
    assert f1 == vh
    assert f1 + f2 == C.parse("p")
    assert (f1 * f2).is_zero()

    F5 = lp.Algebra(load("graph_a"), field="p:5")
    assert F5.parse("5 u").is_zero()
    with pytest.raises(lp.InputError, match="column"):
        A.parse("u +")
