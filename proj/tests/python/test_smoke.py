import json

import pytest

import dblcat


def test_fixtures_validate():
    for name in ["TERMINAL", "WALKING_ARROW_SQ", "POS2_QUIN"]:
        assert dblcat.DoubleCategory(name).validate() == []
    report = dblcat.DoubleCategory("MUTANT_INTERCHANGE").validate()
    assert {v["family"] for v in report} == {"interchange"}


def test_composition_and_boundaries():
    d = dblcat.DoubleCategory("POS2_QUIN")
    assert d.compose_v("const0P", "id_P") == "const0P"
    s = "(id_P,id_P,id_P,id_P,id_P<=id_P)"
    assert d.hcomp(s, s) == s
    assert d.boundary(s) == {"top": "id_P", "left": "id_P", "right": "id_P", "bottom": "id_P"}
    assert d.paste([[s, s], [s, s]]) == s
    with pytest.raises(dblcat.DblcatError, match="NotComposable"):
        d.compose_v("const0", "const0P")


def test_companions_and_conjoints():
    d = dblcat.DoubleCategory("POS2_QUIN")
    assert all(dblcat.companions(d, f) for f in d.v_arrows)
    (c,) = dblcat.conjoints(d, "const0")
    assert c["g"] == "!"
    w = dblcat.DoubleCategory("WALKING_ARROW_SQ")
    assert dblcat.conjoints(w, "u") == []


def test_quin_and_documents():
    q = dblcat.quin("POS2")
    p = dblcat.DoubleCategory("POS2_QUIN")
    assert len(q.squares) == len(p.squares)
    text = p.to_json()
    assert dblcat.canonical(text) == text
    assert dblcat.DoubleCategory(text).squares == p.squares
    assert dblcat.fixture("TERMINAL")["kind"] == "double_category"
    assert json.loads(p.str_2category())["kind"] == "two_category"


def test_pseudofunctors():
    for name, coherent in dblcat.psfunctor_fixtures():
        assert (dblcat.check_psfunctor(name) == []) == coherent


def test_cli():
    code, out, err = dblcat.run_cli(["validate", "--fixture", "TERMINAL"])
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = dblcat.run_cli(["validate", "-"], "{")
    assert code == 2 and out == ""
