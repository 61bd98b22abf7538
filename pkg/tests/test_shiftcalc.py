import pytest

from qkflag import shiftcalc, weyl
from qkflag.kclasses import ShiftModuleElem, ShiftOp, one_minus_shift


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_full_chain(n):
    reports = shiftcalc.verify_all(n)
    assert reports and all(r.ok for r in reports), [r.to_json() for r in reports if not r.ok]


@pytest.mark.parametrize("k", range(1, 7))
def test_telescoping(k):
    for jp in range(k):
        assert shiftcalc.verify_telescoping(k, jp).ok


@pytest.mark.parametrize("n", range(1, 7))
def test_eh_recurrence(n):
    assert shiftcalc.verify_EH_recurrence(n).ok
    assert shiftcalc.verify_triangular_solution(n).ok


def test_report_json_shape():
    r = shiftcalc.verify_telescoping(2, 0)
    data = r.to_json()
    assert set(data) >= {"identity", "level", "status"}
    assert data["status"] == "pass" and "counterexample" not in data


def test_shift_operators_commute():
    n = 3
    a = one_minus_shift(1, n)
    b = one_minus_shift(2, n) * one_minus_shift(3, n)
    assert a * b == b * a
    w = weyl.simple(2, 4)
    x = ShiftModuleElem.schubert(w)
    assert x.apply(a).apply(b) == x.apply(b).apply(a)


def test_shift_then_twist_commute():
    n = 2
    x = ShiftModuleElem.schubert(weyl.simple(1, 3), (1, 0), (1, 0, 0))
    assert x.shift((0, 1)).twist((1, 1, 0)) == x.twist((1, 1, 0)).shift((0, 1))
    assert x.apply(ShiftOp.identity(n)) == x
