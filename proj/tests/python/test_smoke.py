import json
from fractions import Fraction

import pytest

import jacdecomp


def test_version_and_orders():
    assert jacdecomp.__version__ == "0.1.0"
    assert jacdecomp.group_order("S:4") == 24
    assert jacdecomp.group_order("Q8") == 8
    assert jacdecomp.subgroup_count("A:5") == 59


def test_character_table_s3():
    t = jacdecomp.character_table("S:3")
    assert t["order"] == 6
    assert t["degrees"] == [1, 1, 2]
    assert t["rows"][2] == ["2", "-1", "0"]
    assert sum(d * d for d in t["degrees"]) == t["order"]


def test_central_idempotents_sum_to_one():
    data = jacdecomp.idempotents("S:3")
    total = {}
    for orbit in data["orbits"]:
        for idx, coeff in orbit["central_idempotent"].items():
            total[idx] = total.get(idx, Fraction(0)) + Fraction(coeff)
    assert {k: v for k, v in total.items() if v} == {0: Fraction(1)}


def test_decompose_s4():
    report = jacdecomp.decompose("S:4")
    assert report["formula"] == (
        "JX ~ JY x P(X_{A4}/Y) x P(X_{D4}/Y)^2 x P(X_{S3}/Y)^3 x P(X_{Z}/X_{D4})^3"
    )
    assert [f["n"] for f in report["factors"]] == [1, 2, 3, 3]


def test_prym_exponents_and_lattice():
    assert jacdecomp.prym_exponents("S:4", "Z", "D4") == [0, 0, 0, 0, 1]
    assert jacdecomp.isotypical_ranks("Q8") == [1, 1, 1, 1, 4]


def test_errors():
    with pytest.raises(jacdecomp.UsageError):
        jacdecomp.group_order("X:3")
    with pytest.raises(jacdecomp.BoundExceeded):
        jacdecomp.group_order("S:9")


def test_run_json(tmp_path):
    code, out, err = jacdecomp.run("decompose", "Q8", cache_dir=str(tmp_path), use_cache=True)
    assert code == 0, err
    report = json.loads(out)
    assert report["schema_version"] == 1
    assert len(report["factors"]) == 5
    code, _, _ = jacdecomp.run("chartable", "S:9")
    assert code == 3
