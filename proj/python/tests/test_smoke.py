import json

import pytest

import opalg


def test_preset_names_cover_the_corpus():
    names = opalg.preset_names()
    assert "matrix2" in names
    assert any(n.startswith("fun_h_") for n in names)


def test_analyze_pointwise():
    report = opalg.analyze(opalg.preset("pointwise3"))
    assert report["semisimple"] is True
    assert report["simple"] is False
    assert report["operator_algebras"]["E_dim"] == 3
    assert report["minimal_ideal_dims"] == [1, 1, 1]


def test_radical_of_dual_numbers():
    report = opalg.radical(opalg.preset("dual_numbers"))
    assert report["radical_dim"] == 1
    assert report["radical"] == [["0", "1"]]


def test_decompose_matrix_sum():
    report = opalg.decompose(opalg.preset("fun_h_C2_e_M2"))
    assert report["summand_count"] == 2
    assert [s["dim"] for s in report["summands"]] == [4, 4]


def test_classify_round_trip():
    report = opalg.classify(opalg.preset("fun_h_S3_S2_F"))
    assert report["H_order"] == 2
    assert all(report["verification"].values())


def test_check_ideal_accepts_strings_and_dicts():
    doc = opalg.preset("pointwise2")
    report = opalg.check_ideal(json.dumps(doc), [["1", "0"]])
    assert report["agree"] and report["submodule_test"]
    assert opalg.check_ideal(doc, [["1", "1"]])["definition_test"] is False


def test_ideal_lattice_over_f2_is_thread_independent():
    doc = opalg.preset("group_algebra_V4", "F2")
    assert opalg.analyze(doc, threads=1) == opalg.analyze(doc, threads=4, seed=5)


def test_canonical_is_idempotent():
    text = opalg.canonical(opalg.preset("sl2", "F5"))
    assert opalg.canonical(text) == text


def test_errors_map_to_python_exceptions():
    with pytest.raises(opalg.ValidationError):
        opalg.preset("sl2", "F2")
    with pytest.raises(ValueError):
        opalg.analyze("{not json")
    with pytest.raises(opalg.FieldGuardError):
        opalg.preset("pointwise1", "F2147483659")
    with pytest.raises(opalg.ValidationError):
        opalg.classify(opalg.preset("pointwise3"))
