import pytest

import xgroup


def test_construct_and_classify():
    g = xgroup.construct("metacyclic", m=7, n=3, u=2)
    assert g.order == 21
    assert xgroup.provenance(g)["intended_case"] == "2.1.1"
    tc = xgroup.classify(g)
    assert tc["label"] == "2.1.1"
    assert tc["confirmation"] == "brute"
    assert "=> case 2.1.1" in xgroup.explain(g)


def test_fingerprint_of_q8():
    q8 = xgroup.construct("two_group", kind="quaternion", order=8)
    assert xgroup.fingerprint(q8)["element_order_multiset"] == {"1": 1, "2": 1, "4": 6}


def test_check_sym5_gives_witness():
    s5 = xgroup.construct("sym_alt", n=5, alternating=False)
    for method in ("brute", "recursive"):
        v = xgroup.check(s5, method)
        assert v["verdict"] == "NotX"
        assert v["witness_verified"] is True
        assert set(v["witness"]) == {"a", "b", "x"}


def test_document_round_trip():
    g = xgroup.construct("matrix_group", kind="SL2", q=3)
    doc = xgroup.document(g)
    h = xgroup.load(doc)
    assert h.order == 24
    assert xgroup.document(h) == doc
    assert xgroup.classify(h)["label"] == "3.2.1"


def test_errors_carry_their_kind():
    with pytest.raises(xgroup.XGroupError) as info:
        xgroup.construct("affine", p=11, complement="sl2_3_dot2")
    assert info.value.args[0] == "ConstraintViolation"
    assert "mod 8" in info.value.args[1]
    with pytest.raises(xgroup.XGroupError) as info:
        xgroup.load({"degree": 3, "generators": [[0, 0, 1]]})
    assert info.value.args[0] == "InvalidPermutation"


def test_tower_and_corpus():
    rep = xgroup.tower("prufer_metacyclic", 7, d=3, depth=2)
    assert rep["ok"] is True
    assert [lvl["order"] for lvl in rep["levels"]] == [21, 147]
    s = xgroup.corpus("negative")
    assert s["mismatches"] == 0
    assert xgroup.corpus("empty")["entries_total"] == 0
