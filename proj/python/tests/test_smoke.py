"""Smoke tests for the python bindings against the built extension module."""

import json
import os

import pytest

import contactgeo
from contactgeo import Manifold

COORDS = ["x", "y", "z"]


def test_example_classifies_sasakian():
    m = Manifold.example("+1", "6", "0")
    c = m.classify()
    assert c["is_contact"] and c["is_k_contact"] and c["is_sasakian"]
    assert c["eta_einstein"] == {"a": "-2", "b": "4"}
    assert c["kappa_mu"] == {"kappa": "1", "mu": "indeterminate"}
    assert c["d_homothetically_fixed"]


def test_verify_reports_every_identity_as_passing():
    rep = Manifold.example().verify()
    assert rep["all_hold"]
    names = [c["identity"] for c in rep["checks"]]
    assert "package.ricci_reeb_reeb_trace" in names
    assert names == sorted(names)


def test_soliton_verdicts():
    m = Manifold.example("+1", "6", "0")
    good = m.soliton()
    assert good["is_soliton"] and not good["potential_is_killing"]
    assert good["lie_phi_vanishes"]
    assert good["soliton_class"] == "expanding"
    bad = m.soliton(lambda_="1", mu="0")
    assert not bad["is_soliton"]
    assert bad["residual"]  # nonzero components are reported


def test_timelike_example_is_killing():
    m = Manifold.example("-1", "-2", "-4")
    v = m.soliton()
    assert v["is_soliton"] and v["potential_is_killing"]
    assert v["soliton_class"] == "shrinking"


def test_gradient_soliton():
    m = Manifold.example("+1", "6", "0")
    assert m.gradient_soliton("0", "2", "-4")["is_soliton"]
    assert not m.gradient_soliton("0", "2", "-3")["is_soliton"]


def test_curvature_values():
    cur = Manifold.example().curvature()
    assert cur["metric_determinant"] == "1/64"
    assert cur["scalar_curvature"] == "-2"
    assert cur["ricci"][1][1] == "-1/2"


def test_deform_keeps_the_fixed_coefficient():
    m = Manifold.example("+1", "6", "0")
    d = m.deform("3/2")
    c = d.classify()
    assert c["is_sasakian"]
    assert c["eta_einstein"]["a"] == "-2"


def test_theorems_verified_on_the_example():
    reports = Manifold.example("+1", "6", "0").theorems()
    by_id = {r["id"]: r for r in reports if "overall" in r}
    assert by_id["sasakian_soliton_eta_einstein"]["overall"] == "verified"
    assert by_id["soliton_killing_or_d_fixed"]["overall"] == "verified"
    assert by_id["nullity_branch_identities"]["overall"] == "verified"


def test_json_round_trip():
    m = Manifold.example("+1", "6", "0")
    again = Manifold.from_json(m.to_json())
    assert again.to_json() == m.to_json()
    assert again.coordinates == COORDS
    assert again.epsilon == 1
    assert again.dimension == 3


def test_fixture_file_loads_when_available():
    fixtures = os.environ.get("CONTACTGEO_FIXTURES")
    if not fixtures:
        pytest.skip("CONTACTGEO_FIXTURES not set")
    m = Manifold.from_file(os.path.join(fixtures, "example_sasakian_r3.json"))
    assert m.classify()["is_sasakian"]
    doc = json.loads(m.to_json())
    assert doc["soliton"]["lambda"] == "6"


def test_bad_documents_raise():
    m = Manifold.example()
    doc = json.loads(m.to_json())
    doc["metric"][0][0] = "sin(x)"
    with pytest.raises(contactgeo.ParseError):
        Manifold.from_json(json.dumps(doc))
    doc["metric"][0][0] = "1"
    with pytest.raises(contactgeo.InvariantViolation):
        Manifold.from_json(json.dumps(doc))


def test_expression_helpers():
    assert contactgeo.simplify("(y^2-1)/(y-1)", COORDS) == "y + 1"
    assert contactgeo.diff("y^2/4 + 1/4", "y", COORDS) == "1/2*y"
    assert contactgeo.evaluate("y/2", {"x": "0", "y": "3", "z": "0"}, COORDS) == "3/2"
    assert contactgeo.expr_equal("y*(1/y)", "1", COORDS)
    assert not contactgeo.expr_equal("y", "y+1", COORDS)
    with pytest.raises(contactgeo.UnknownVariableError):
        contactgeo.diff("x", "w", COORDS)
