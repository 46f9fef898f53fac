import os
import pathlib

import pytest

import qhpp

DATA = pathlib.Path(os.environ.get("QHPP_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))


def read(name):
    return (DATA / name).read_text()


def test_parse():
    p, q = qhpp.parse("dx/dt = x*y^4 + x^3\ndy/dt = y^5")
    assert p == "x*y^4 + x^3"
    assert q == "y^5"


def test_parse_error():
    with pytest.raises(qhpp.ParseError):
        qhpp.parse(read("malformed.txt"))


def test_analyze_system14():
    status, report = qhpp.analyze(read("system14.txt"), oracle=False)
    assert status == 0
    assert report["weights"]["minimal"] == {"s1": 2, "s2": 1, "d": 4}
    assert report["target_class"]["class"] == "H2"
    assert report["family"]["name"] == "X_011"


def test_status_codes():
    assert qhpp.analyze(read("common_factor.txt"), oracle=False)[0] == 4
    assert qhpp.analyze(read("not_qh.txt"), oracle=False)[0] == 3


def test_catalog_and_census():
    families = qhpp.catalog()["families"]
    assert len(families) == 15
    weights = {f["name"]: (f["weight"]["s1"], f["weight"]["s2"], f["weight"]["d"]) for f in families}
    assert weights["X_132"] == (5, 2, 9)
    counts = qhpp.census()["counts"]
    assert (counts["a14>1"], counts["a14<1"], counts["a14=1"], counts["total"]) == (24, 14, 14, 52)
    with pytest.raises(qhpp.PreconditionError):
        qhpp.catalog(4)


def test_streamlines():
    text = read("center.txt")
    assert qhpp.streamlines_csv(text, n=0) == "t,x,y\n"
    csv = qhpp.streamlines_csv(text, n=4)
    assert csv.startswith("t,x,y\n")
    assert csv.count("\n\n") == 3
    with pytest.raises(qhpp.BadWindowError):
        qhpp.streamlines_csv(text, window="1:0,0:1")
