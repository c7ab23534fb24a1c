from fractions import Fraction

import pytest

import satdiv


def frac(*values):
    return [Fraction(v) for v in values]


def test_instance_roundtrip():
    inst = satdiv.Instance([["1/2", "1/2"], [Fraction(1, 4), 0]])
    assert inst.agents == 2
    assert inst.projects == 2
    assert not inst.tight
    assert inst.rows == [frac("1/2", "1/2"), frac("1/4", 0)]


def test_errors_carry_kind():
    with pytest.raises(satdiv.SatdivError) as exc:
        satdiv.Instance([["3/5", "3/5"]])
    assert exc.value.kind == "RowMassExceeded"
    with pytest.raises(satdiv.SatdivError):
        satdiv.Instance([[0.5, 0.5]])
    with pytest.raises(satdiv.SatdivError) as exc:
        satdiv.fixture("instance9")
    assert exc.value.kind == "UnknownFixture"


def test_instance1():
    inst = satdiv.fixture("instance1")
    assert satdiv.satisfied(["0.3", "0.6", "0.1"], inst, 2) == [0, 1, 3]
    count, x = satdiv.max_satisfied(inst, 2)
    assert count == 3
    assert sum(x) <= 1
    assert len(satdiv.satisfied(x, inst, 2)) == 3
    assert satdiv.all_agents_sat(inst, 2) is None
    assert satdiv.min_budget(inst, 1)[0] == Fraction(1, 10)


def test_min_budget_and_dictator():
    budget, x = satdiv.min_budget(satdiv.builtin("abo_m3_eps1-3"), 2)
    assert budget == Fraction(4, 3)
    assert sum(x) == budget
    agent, count, _ = satdiv.dictator(satdiv.builtin("tight_dictator_m5"), 3)
    assert agent == 0
    assert count == 3
    assert satdiv.builtin("nothing") is None


def test_constructive():
    mat1 = satdiv.fixture("mat1")
    x = satdiv.three_agent(mat1)
    assert sum(x) <= 1
    assert satdiv.satisfied(x, mat1, 3) == [0, 1, 2]
    two = satdiv.Instance([["0.4", "0.3", "0.2", "0.1"], ["0.1", "0.2", "0.3", "0.4"]])
    y = satdiv.two_agent_four(two)
    assert sum(y) == 1
    assert satdiv.satisfied(y, two, 3) == [0, 1]


def test_utilitarian():
    pairs, x = satdiv.utilitarian(satdiv.fixture("instance1"))
    assert pairs == 8
    assert sum(x) <= 1


def test_verify_tables():
    rows = satdiv.verify("tables")
    assert rows
    assert all(r["passed"] for r in rows)
