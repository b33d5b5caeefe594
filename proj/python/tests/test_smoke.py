"""Smoke tests for the python bindings."""

from fractions import Fraction

import pytest

import uusc


def test_instance_and_validation():
    inst = uusc.Instance(n=6, p=2, k=4, sets=[[0, 1, 2, 3], [2, 3, 4]])
    assert uusc.validate(inst) == []
    bad = uusc.Instance(n=4, p=2, k=3, sets=[[0, 1, 2, 3]])
    assert uusc.validate(bad) != []


def test_solvers_agree_on_demo_instance():
    inst = uusc.Instance(n=6, p=2, k=4, sets=[[0, 1, 2, 3], [2, 3, 4]])
    assert len(uusc.greedy(inst)["cover"]) == 2
    assert len(uusc.solve_a1(inst)["cover"]) == 2
    a2 = uusc.solve_a2(inst)
    assert len(a2["cover"]) == 2
    assert a2["report"]["objective_trace"] == [4]
    assert len(uusc.exact_min_cover(inst)) == 2


def test_seed_a2_rejects_bad_packing():
    inst = uusc.Instance(n=8, p=2, k=4, sets=[[0, 1, 2, 3], [2, 3, 4, 5]])
    with pytest.raises(ValueError):
        uusc.seed_a2(inst, [[0, 1, 2, 3], [2, 3, 4, 5]])


def test_tight_family_regression():
    fam = uusc.gen_tight(1)
    assert fam["instance"].n == 144
    assert len(fam["opt_cover"]) == 36
    assert len(fam["apx_packing"]) == 26
    res = uusc.seed_a2(fam["instance"], fam["apx_packing"], t=2)
    assert len(res["cover"]) == 50
    assert res["report"]["iterations"] == 0
    assert Fraction(50, 36) == Fraction(25, 18)


def test_generators():
    a = uusc.gen_random(2, 4, 12, 1.0, 7)
    b = uusc.gen_random(2, 4, 12, 1.0, 7)
    assert a.sets == b.sets
    k22 = uusc.gen_biclique(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])
    assert k22.n == 4
    assert k22.sets == [[0, 1, 2, 3]]


def test_theory():
    assert uusc.rho(2, 4) == "3/2"
    assert uusc.rho(3, 5) == "7/5"
    rows = uusc.verify_theory(pmax=4, kmax=5)
    assert all(r["ok"] for r in rows)
    assert {r["value"] for r in rows if "case" in r} == {"35/24", "7/5"}


def test_transform_lemma1():
    inst = uusc.Instance(n=5, p=2, k=4, sets=[[0, 1, 2], [2, 3, 4]])
    res = uusc.transform_lemma1(inst, apx=[[0, 1, 2]], sol=[[0, 1], [2, 3, 4]], t=2)
    assert res["instance"].n == 6
    assert sorted(map(sorted, res["sol"])) == [[0, 1, 5], [2, 3, 4]]
    assert all(len(s) != 2 for s in res["sol"])
