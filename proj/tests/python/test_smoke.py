import json

import pytest

import codo


def test_theorem2_pair_commutes():
    pair = codo.build_theorem2(n=1, alpha0="1", alpha2="2", beta="3")
    assert pair["l"].order == 2
    assert pair["m"].order == 4
    assert codo.commutes(pair["l"], pair["m"])
    assert codo.commutator_defect(pair["l"], pair["m"]) is None
    assert "C1^2" in pair["constants"]
    assert pair["window_orders"] is None  # polynomial ring: no truncation


def test_theorem2_rejects_bad_slope():
    with pytest.raises(codo.CodoError):
        codo.build_theorem2(n=1, alpha0="1", alpha2="2", beta="3", gamma="2")


def test_theorem3_pair_commutes_within_window():
    pair = codo.build_theorem3(n=1, g2="4")
    assert pair["m"].order == 4
    assert codo.commutes(pair["l"], pair["m"])
    assert pair["window_orders"] >= 12


def test_render_parse_round_trip():
    pair = codo.build_theorem2(n=1, alpha0="1", alpha2="2", beta="3")
    doc = pair["m"].render()
    again = codo.parse_operator(doc)
    assert again == pair["m"]
    assert json.loads(doc)["format-version"] == "1"


def test_find_relation_reports_curve():
    pair = codo.build_theorem2(n=1, alpha0="0", alpha2="2", beta="3", mu1="1", mu2="2")
    rel = codo.find_relation(pair["l"], pair["m"], degz=4)
    assert rel["unique"]
    assert "w^2" in rel["relation"]
    # alpha0 = 0 degenerates the curve: it splits and its branch locus is not
    # squarefree
    assert rel["reducible"]
    assert len(rel["factors"]) == 2
    assert not rel["nonsingular"]


def test_find_relation_generic_is_irreducible():
    pair = codo.build_theorem2(n=1, alpha0="1", alpha2="2", beta="3", mu1="1", mu2="2")
    rel = codo.find_relation(pair["l"], pair["m"], degz=4)
    assert rel["unique"]
    assert not rel["reducible"]
    assert rel["nonsingular"]
