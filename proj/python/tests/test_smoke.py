import os

import pytest

import skewlat

DATA = os.environ.get(
    "SKEWLAT_TEST_DATA_DIR",
    os.path.join(os.path.dirname(__file__), "..", "..", "tests", "data"),
)


def test_construct_and_validate():
    s = skewlat.SkewLattice([[0, 0, 0], [0, 1, 2], [0, 1, 2]], [[0, 1, 2], [1, 1, 1], [2, 2, 2]])
    assert len(s) == 3
    assert s.meet(1, 2) == 2
    assert s == skewlat.fixed("3R0")
    assert skewlat.violations([[0]], [[0]]) == []
    assert "idempotency of meet at x=0" in skewlat.violations([[1, 0], [0, 1]], [[0, 1], [1, 1]])


def test_invalid_tables_raise():
    with pytest.raises(skewlat.SkewlatError):
        skewlat.SkewLattice([[1, 0], [0, 1]], [[0, 1], [1, 1]])
    with pytest.raises(ValueError):
        skewlat.fixed("nothing")


def test_files():
    s = skewlat.read_algebra(os.path.join(DATA, "3R0.skl"))
    assert skewlat.parse_algebra(skewlat.to_text(s)) == s
    assert skewlat.d_classes(s) == [[0], [1, 2]]


def test_classify_and_holds():
    flags = skewlat.classify(skewlat.fixed("3R0"))
    assert flags["strongly_distributive"] and not flags["co_strongly_distributive"]
    r = skewlat.holds(skewlat.fixed("3R0"), "strong2")
    assert not r["holds"]
    assert r["counterexample"] == {"x": 0, "y": 1, "z": 2}
    assert (r["lhs"], r["rhs"]) == (2, 1)
    assert skewlat.holds(skewlat.fixed("3R0"), "x ^ x = x")["holds"]


def test_solutions():
    s = skewlat.fixed("3R0")
    w = skewlat.braid_check(s, "strong")
    assert w is not None and list(w["triple"]) == [0, 1, 2]
    assert skewlat.braid_check(s, "update") is None
    rep = skewlat.solution_report(skewlat.rectangular(1, 3), "strong")
    assert rep["braid"] and rep["power_class"] == "involutive"
    assert len(skewlat.map_kinds()) == 8


def test_enumerate():
    assert [skewlat.enumerate(n)["census"] for n in range(1, 5)] == [1, 3, 7, 21]
    r = skewlat.enumerate(3, satisfy=["strongly_distributive"], falsify=["co_strongly_distributive"])
    assert any(skewlat.isomorphic(w, skewlat.fixed("3R0")) for w in r["witnesses"])


def test_theorems():
    rows = skewlat.run_theorems(3)
    assert rows and all(row["passed"] for row in rows)
