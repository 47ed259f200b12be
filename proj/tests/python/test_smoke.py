"""Smoke tests for the python bindings."""

import pytest

import nsimplex as ns


def test_face_enumeration():
    faces = ns.enumerate_faces(3, 2)
    assert faces == ["0**", "1**", "*0*", "*1*", "**0", "**1"]
    assert ns.absolutely_incoming_faces(3, 3) == ["0**", "*1*", "**0"]
    assert ns.classify_subface("***", "0**") == "incoming"
    assert ns.face_order("1**", 3) == 0


def test_identity_solves_the_equation():
    r = ns.RMap.identity(3, 2)
    ok, counterexample = ns.verify(r)
    assert ok and counterexample is None
    ok, _ = ns.verify(r, mode="composition")
    assert ok


def test_electric_pipeline():
    cs = ns.ResidueColorSet.make(5, 2, 2)
    assert cs.elements == [2, 7, 12, 17, 22]
    r = ns.electric_rmap(cs)
    assert r.is_bijective()
    assert r.apply([0, 1, 0]) == [0, 1, 0]
    ok, _ = ns.verify(r)
    assert ok

    chars = ns.characters(cs)
    assert len(chars) == 20
    c1, c2 = ns.electric_cocycles(cs, chars[1])
    ok, _ = ns.check_cocycle(r, c1)
    assert ok
    verdicts = ns.nontriviality(cs, chars[1])
    assert verdicts["c1"]["is_coboundary"] is False
    assert len(verdicts["c1"]["witnesses"]) == 25


def test_propagation_and_restriction_shape():
    r = ns.RMap.identity(3, 2)
    result = ns.propagate(r, 4, [0, 1, 0, 1, 0, 1])
    assert result["incoming"] == [0, 1, 0, 1, 0, 1]
    assert len(result["colors"]) == 24


def test_quantum_checks():
    cs = ns.ResidueColorSet.make(2, 3)
    r = ns.electric_rmap(cs)
    ok, _ = ns.check_qte(ns.permutation_operator(r))
    assert ok
    c1, _ = ns.electric_cocycles(cs, ns.characters(cs)[1])
    ok, _ = ns.check_qte(ns.twisted_operator(r, c1))
    assert ok

    broken = ns.twisted_operator(r, c1)
    c1[0, 0, 0] = c1[0, 0, 0] + 1
    ok, witness = ns.check_qte(ns.twisted_operator(r, c1))
    assert not ok and witness is not None


def test_homology_rows():
    rows = ns.homology(ns.RMap.identity(3, 1), 4)
    assert [row["betti"] for row in rows[:-1]] == [1, 1]
    assert all(row["dim"] == 1 for row in rows)


def test_format_errors_surface_as_exceptions():
    with pytest.raises(ns.FormatError):
        ns.RMap.parse("not an rmap")


def test_reference_pipelines():
    ok, report = ns.run_reference_pipelines()
    assert ok, report
