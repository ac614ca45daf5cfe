from pathlib import Path

import pytest

import splitegh

DATA = Path(__file__).resolve().parents[2] / "data"


def text(name):
    return (DATA / name).read_text()


def test_hilbert():
    assert splitegh.hilbert(text("pure_powers_222.prob")) == [1, 3, 3, 1, 0]
    assert splitegh.hilbert(text("five_vars.prob"), 4) == [1, 5, 8, 3, 0]


def test_egh():
    doc = splitegh.egh(text("five_vars.prob"))
    assert doc["schema"] == 1
    assert doc["verified"] is True
    assert doc["hilbert"][:5] == [1, 5, 8, 3, 0]
    assert "x1*x4*x5" in doc["generators"]


def test_lpp_and_kk():
    assert splitegh.lpp([1, 4, 4, 1, 0], [2, 2, 2, 2])[-2:] == ["x1*x2", "x1*x3"]
    assert splitegh.kk_check([1, 3, 7]) == "bound violated at d=1: 7 > 3"
    assert splitegh.macaulay_upper(8, 2) == 5
    with pytest.raises(splitegh.NotRealizableError):
        splitegh.lpp([1, 3, 7], [2, 2, 2])


def test_reduce():
    assert splitegh.reduce(text("three_vars.prob"), "x1^3 + x1^2*x2") == "x1*x2*x3"


def test_errors():
    with pytest.raises(splitegh.ParseError):
        splitegh.hilbert("vars: 2\nideal:\nx1^2 +\n", 3)
    code, out, _ = splitegh.run(["kk", "--hilbert", "1,3,7"])
    assert code == 1
    assert out == "bound violated at d=1: 7 > 3\n"
