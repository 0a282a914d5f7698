from fractions import Fraction
from pathlib import Path

import pytest

import superkit as sk

DATA = Path(__file__).resolve().parents[2] / "data"


def test_family_and_check():
    g = sk.family("gl:1:1")
    assert (g.even_dim, g.odd_dim) == (2, 2)
    report = sk.check(g)
    assert report["valid"] and report["quasireductive"]
    assert report["center"] == [[1, 0, 0, 1]]


def test_round_trip_and_parse_error():
    g = sk.family("osp1:2")
    assert sk.parse_algebra(g.to_text()) == g
    with pytest.raises(sk.ParseError, match="line 3"):
        sk.load_algebra(str(DATA / "malformed.alg"))


def test_bracket_exact():
    g = sk.family("gl:1:1")
    assert g.bracket("E12=1", "E21=1") == [1, 0, 0, 1]
    assert g.bracket([0, Fraction(1, 2), 0, 0], "E21=1")[0] == Fraction(1, 2)


def test_classify():
    out = sk.classify(sk.family("product:osp1:1,osp1:1"))
    assert [f["outcome"] for f in out["factors"]] == ["osp", "osp"]
    assert out["certified_zero"] and out["witness"] is None
    g = sk.family("sl:2:1")
    w = sk.classify(g)["witness"]
    assert w is not None and sk.in_g1ss(g, w) and any(w)


def test_ghost_and_djokovic():
    assert sk.ghost(sk.family("osp1:1"))["verdict"] == "Semisimple"
    gl = sk.ghost(sk.family("gl:1:1"))
    assert gl["verdict"] == "NotSemisimple" and gl["epsilon"] == 0
    d = sk.djokovic(2)
    assert d["ok"] and d["epsilon"] == 3


def test_ds():
    g = sk.family("gl:1:1")
    assert sk.ds(g, "E12=1,E21=1")["even"] == 0
    assert sk.ds(g, None, "defining") == {"even": 1, "odd": 1, "fixed_dim": 2}
    assert sk.ds_tensor(g, "E12=1,E21=1", "defining", "induced")["ok"]
    with pytest.raises(sk.NotInG1ss):
        sk.ds(sk.family("osp1:1"), "a1=1")


def test_splitting():
    r = sk.witness_splitting("circle_x_dxi")
    assert r["verified"] and r["f_text"] == "x*xi"
    assert sk.witness_splitting((DATA / "circle_x_dxi.sc").read_text())["verified"]
    assert sk.witness_splitting_dual(sk.family("gl:1:1"))["verified"]
    with pytest.raises(sk.Vanishing):
        sk.witness_splitting("dual_numbers_vanishing")


def test_verify_filter():
    (r,) = sk.verify_all("splitting")
    assert r["pass"] and r["key"] == "splitting"
    (c,) = sk.verify_all("construction", corrupt=True)
    assert not c["pass"]
