import pytest

import wtrees


def test_count():
    assert wtrees.count("1,2,4|2,5") == 4
    assert wtrees.count("6,1,1,1|3,3,3") == 3
    assert wtrees.count("1|1/2,1/2") == 1
    assert wtrees.count("1,1,1,1|2,2") == 0


def test_enumerate_trees():
    classes = wtrees.enumerate_trees("1,2,4|2,5")
    assert len(classes) == 4
    codes = [c["code"] for c in classes]
    assert codes == sorted(codes) and len(set(codes)) == 4
    for c in classes:
        assert c["automorphismOrder"] >= 1
        assert len(c["vertices"]) == 5
        assert len(c["edges"]) == 4
        assert set(c["rotation"]) == {str(i) for i in range(5)}


def test_census():
    assert wtrees.census("6,1,1,1|3,3,3") == {"total": 3, "byOrder": {1: 2, 3: 1}}


def test_qpoly_text():
    assert wtrees.qpoly_text(2) == "x1^2 - 2*x2"
    assert wtrees.qpoly_text(3) == "x1^3 - 3*x1*x2 + 3*x3"


def test_system():
    assert wtrees.system_text("1,2,4|2,5").splitlines() == [
        "2*x1 + x2 - 2*y1 - 5 = 0",
        "2*x1^2 + x2^2 - 2*y1^2 - 5 = 0",
        "2*x1^3 + x2^3 - 2*y1^3 - 5 = 0",
    ]
    doc = wtrees.system("1,2,4|2,5")
    assert doc["equationCount"] == 3
    assert doc["bezoutBound"] == 6
    assert [u["name"] for u in doc["unknowns"]] == ["x1", "x2", "y1"]
    assert doc["equivalenceVerified"] is True


def test_solve():
    doc = wtrees.solve("1,2,4|2,5")
    assert doc["count"] == 4
    for sol in doc["solutions"]:
        assert len(sol["point"]) == 3
        assert all(len(coord) == 2 for coord in sol["point"])
        assert sol["residual"] <= 1e-10


def test_sweep():
    doc = wtrees.sweep(4)
    assert doc["typesChecked"] == 39  # p(1)^2 + ... + p(4)^2
    assert doc["mismatches"] == 0
    for row in doc["rows"]:
        assert row["status"] == "ok"
        assert isinstance(row["formula"], int)
        assert row["formula"] == row["enumerated"]


def test_errors():
    with pytest.raises(ValueError):
        wtrees.count("not a type")
    with pytest.raises(ValueError):
        wtrees.count("1,2|4")  # sums differ
    with pytest.raises(RuntimeError):
        wtrees.enumerate_trees("1,2,3|1,2,3", budget=5)
    with pytest.raises(RuntimeError):
        wtrees.solve("1,2,4|2,5", starts=10, tol=0.0)
