import json

import pytest

import divlat


def test_version():
    assert divlat.__version__ == "0.1.0"


def test_a2_lattice_hand_values():
    lat = divlat.lattice(divlat.gen_a(2))
    assert lat["basis"] == ["V-_1", "V0_1"]
    assert lat["I"] == [[0, -1], [1, 0]]
    assert lat["S"] == [[1, 0], [-1, 1]]
    assert lat["M_desc"] == [[0, -1], [1, 1]]
    assert lat["rho_S"] == [[0, 1], [-1, 1]]


def test_invariants_e6_and_depth1():
    inv = divlat.invariants(divlat.gen_e6())
    assert (inv["d"], inv["r"], inv["mu"], inv["genus"], inv["boundary_components"]) == (3, 1, 6, 3, 1)
    inv = divlat.invariants(divlat.gen_depth1())
    assert (inv["mu"], inv["genus"], inv["boundary_components"]) == (10, 4, 3)


def test_round_trip_text():
    for n in range(1, 8):
        d = divlat.gen_a(n)
        text = divlat.write_divide(d)
        assert divlat.parse_divide(text) == d
        assert divlat.validate(text) == []


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        divlat.parse_divide("{")
    with pytest.raises(divlat.DivideError):
        divlat.parse_divide('{"name": "x", "mode": "map"}')


def test_validate_reports_slot_reuse():
    text = divlat.write_divide(divlat.gen_a(2)).replace('["p1", 3], ["t2", 0]', '["p1", 0], ["t2", 0]')
    diags = divlat.validate(text)
    assert any("slot used twice" in d for d in diags)


def test_seifert_and_variation_helpers():
    I = [[0, -1], [1, 0]]
    assert divlat.seifert_matrix(I) == [[1, 0], [-1, 1]]
    assert divlat.adapted_vectors(I) == [[1, 0], [1, 1]]
    assert divlat.pl_variation([1, 1], I) == [0, -1]
    assert divlat.pl_variation([2, 1], I) == [-1, -1]


def test_char_poly_and_order():
    coeffs, order = divlat.char_poly_and_order([[0, -1], [1, 1]])
    assert coeffs == [1, -1, 1]
    assert order == 6
    coeffs, order = divlat.char_poly_and_order([[1, 1], [0, 1]], 10)
    assert order is None


def test_big_integers_cross_the_boundary():
    big = 10**30
    coeffs, _ = divlat.char_poly_and_order([[big, 0], [0, 1]], 1)
    assert coeffs == [1, -(big + 1), big]


def test_ingest_polyline_matches_generator():
    d = divlat.ingest_polyline(
        [([(-23, -24), (3, 2), (1, 4), (-3, 0), (1, -4), (3, -2), (-13, 14)], False)],
        10,
        (-1, 0),
        "+",
        name="E6",
    )
    assert d == divlat.gen_e6()
    with pytest.raises(divlat.DivideError):
        divlat.ingest_polyline([([(-20, 0), (20, 0)], False)], 10, (0, 0), "+")


def test_report_dict():
    rep = divlat.report(divlat.gen_e6())
    assert rep["verdict"] == "pass"
    assert len(rep["euler"]["arrows"]) == 9
    assert rep["input"]["name"] == "E6"
    assert json.loads(divlat.report_json(divlat.gen_e6())) == rep


def test_report_vertex_order():
    d = divlat.gen_e6()
    ids = [v["id"] for v in divlat.report(d)["ag"]["vertices"]]
    ids[2], ids[3] = ids[3], ids[2]
    rep = divlat.report(d, ids)
    assert rep["verdict"] == "pass"
    assert [v["id"] for v in rep["ag"]["vertices"]] == ids
