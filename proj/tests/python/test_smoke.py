import json

import pytest

import ckpsolve

EXAMPLE = json.dumps(
    {
        "kind": "ckp",
        "c": "10",
        "items": [
            {"id": 0, "re": "7", "im": "7", "value": "10"},
            {"id": 1, "re": "3", "im": "0", "value": "4"},
            {"id": 2, "re": "0", "im": "3", "value": "4"},
        ],
    }
)


def test_rational_round_trip():
    assert ckpsolve.rational("10/4") == "5/2"
    assert ckpsolve.rational(7) == "7"
    with pytest.raises(ValueError):
        ckpsolve.rational("3.5")


def test_parse_and_regions():
    inst = ckpsolve.parse_instance(EXAMPLE)
    assert inst.n == 3
    assert inst.kind == "ckp"
    assert ckpsolve.classify_region(inst, 0) == "D2"
    assert ckpsolve.classify_region(inst, 1) == "D1"
    assert ckpsolve.is_feasible(inst, [1, 2])
    assert not ckpsolve.is_feasible(inst, [0, 1])
    back = ckpsolve.parse_instance(ckpsolve.serialize_instance(inst))
    assert back.items == inst.items


def test_solvers_agree_with_the_example():
    inst = ckpsolve.parse_instance(EXAMPLE)
    oracle = ckpsolve.brute_force_opt(inst)
    assert oracle["value"] == "10"
    for run in (ckpsolve.alg_a(inst, "1/2"), ckpsolve.alg_b(inst, "1/2")):
        assert run["selected"] == [0]
        assert run["value"] == "10"


def test_one_dimensional_solvers():
    dp = ckpsolve.dp_exact(["2", "3", "4"], ["3", "4", "5"], "25")
    assert dp["selected"] == [0, 1]
    assert dp["value"] == "7"
    approx = ckpsolve.fptas(["2", "3", "4"], ["3", "4", "5"], "25", "1/10")
    assert approx["value"] == "7"
    mono = ckpsolve.monotone_fptas(["2", "3", "4"], ["3", "4", "5"], "25", "1/2")
    assert mono["value"] == "7"


def test_mechanism_payments():
    inst = ckpsolve.parse_instance(EXAMPLE)
    outcome = ckpsolve.run_mechanism(inst, "1/2")
    assert outcome["selected"] == [0]
    assert outcome["payments"][0] == 9
    assert outcome["payments"][1] == 0
    assert ckpsolve.critical_value(0, inst, "1/2") == 9
    assert ckpsolve.verify_ic(inst, "1/2") == []


def test_reduction():
    reduced = ckpsolve.reduce_equipartition([1, 2, 3, 4])
    assert reduced["beta_sq"] == "5/3"
    assert reduced["c_sq"] == "40"
    assert reduced["m"] == 2
    assert reduced["answer"] is True
    assert ckpsolve.equipartition_brute([1, 2, 3, 4]) is True
    assert ckpsolve.equipartition_brute([1, 1, 1, 5]) is False
    inst = reduced["instance"]
    assert inst.symbolic_imaginary
    with pytest.raises(ValueError):
        ckpsolve.alg_a(inst, "1/2")


def test_verify_monotone():
    inst = ckpsolve.parse_instance(EXAMPLE)
    grid = [{"agent": 0, "re": "7", "im": "7", "value": 11}]
    assert ckpsolve.verify_monotone("alg-b", inst, "1/2", grid) == []


def test_split_subset():
    t, rest = ckpsolve.split_subset(["4", "4", "2"], "100", "71/10")
    assert t == [0]
    assert rest == [1, 2]


def test_generator_determinism():
    a = ckpsolve.generate_instance(7, 5, "ckp", "d2-heavy")
    b = ckpsolve.generate_instance(7, 5, "ckp", "d2-heavy")
    assert ckpsolve.serialize_instance(a) == ckpsolve.serialize_instance(b)
    assert any(ckpsolve.classify_region(a, k) == "D2" for k in range(a.n))
