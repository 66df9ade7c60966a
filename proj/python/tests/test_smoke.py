import json
import math

import pytest

import hyperspec as hs


def test_hyperstar_matches_closed_form():
    for m in (3, 4, 5):
        for k in (2, 5, 12):
            r = hs.spectral_radius(hs.hyperstar(m, k))
            assert r.residual <= 1e-9
            assert abs(r.lambda1 - hs.hyperstar_radius(m, k)) <= 1e-9


def test_known_hyperstar_values():
    assert hs.hyperstar_radius(3, 3) == pytest.approx(1.5)
    assert hs.hyperstar_radius(3, 5) == pytest.approx((1 + math.sqrt(41)) / 4)


def test_json_round_trip_and_validation():
    h = hs.hypertree_Td(3, 4, {3: 2})
    assert (h.m, h.n, h.k) == (3, 13, 6)
    g = hs.Hypergraph.from_json(h.to_json())
    assert g == h
    assert json.loads(h.to_json())["edges"] == [list(e) for e in h.edges]
    report = hs.validate(h)
    assert report["valid"] and report["connected"]
    assert hs.diameter(h) == 4


def test_nonlinear_input_is_diagnosed_not_built():
    text = '{"m":3,"n":4,"edges":[[0,1,2],[1,2,3]]}'
    with pytest.raises(hs.HyperspecError) as info:
        hs.Hypergraph.from_json(text)
    assert info.value.code == "linearity"
    lenient = hs.Hypergraph.from_json(text, lenient=True)
    report = hs.validate(lenient)
    assert not report["linear"]
    assert report["violations"][0]["edges"] == [0, 1]


def test_tricyclic_example():
    h = hs.Hypergraph(4, 14, [[0, 1, 2, 3], [3, 4, 5, 6], [6, 7, 8, 9], [9, 10, 11, 0], [6, 12, 13, 0]])
    c = hs.classify_cyclicity(h)
    assert c["classification"] == "tricyclic-type-I"
    assert sorted(len(x["edges"]) for x in hs.loose_cycles(h)) == [3, 3, 4]


def test_loose_cycle_spectrum():
    for l in (3, 4, 5):
        formula = sorted(hs.loose_cycle_spectrum_formula(4, l))
        numeric = hs.full_spectrum(hs.loose_cycle(4, l))
        assert len(formula) == len(numeric)
        assert all(abs(a - b) <= 1e-8 for a, b in zip(formula, numeric))


def test_char_poly_is_exact():
    h = hs.loose_cycle(3, 3)
    coeffs = hs.char_poly(h)
    assert coeffs[-1] == 1
    assert all(isinstance(c, int) for c in coeffs)
    assert hs.char_poly_radius(h) == pytest.approx(hs.loose_cycle_radius(3), abs=1e-9)


def test_polynomial_roots_match_eigensolver():
    for k in range(9, 13):
        root = hs.t2c_char_poly(3, k)
        lam = hs.spectral_radius(hs.tricyclic_T2C(3, [k - 9, 0, 0, 0, 0, 0, 0])).lambda1
        assert abs(root["radius"] - lam) <= 1e-9
    bc = hs.bc_char_poly(3, 10)
    assert bc["bounds"]["lower"] < abs(bc["root"]) < bc["bounds"]["upper"]


def test_quotient_shares_radius():
    h = hs.hypertree_Td(3, 5, {3: 4})
    part = hs.coarsest_equitable_refinement(h, [list(range(h.n))])
    assert hs.is_equitable(h, part)
    scaled, denominator = hs.quotient_matrix(h, part)
    assert denominator == 2 and len(scaled) == len(part)
    assert max(hs.quotient_eigenvalues(h, part)) == pytest.approx(hs.spectral_radius(h).lambda1, abs=1e-9)


def test_release_increases_radius():
    h = hs.loose_path(3, 4)
    out, at = hs.release_edge_at_max(h, 1)
    assert out.k == h.k and out.n == h.n
    assert hs.spectral_radius(out).lambda1 > hs.spectral_radius(h).lambda1 + 1e-9


def test_enumeration_counts():
    assert len(hs.enumerate_class("hypertree", 2, 8)) == 47
    assert len(hs.enumerate_class("hypertree", 3, 4)) == 3
    with pytest.raises(hs.HyperspecError):
        hs.enumerate_class("hypertree", 3, 13)


def test_verify_exit_codes():
    ids = {t["id"] for t in hs.registry()}
    assert "REMARK_BT" in ids
    ok = hs.verify("REMARK_BT", m=3, k=6, k_to=12)
    assert ok["status"] == "pass" and ok["exit_code"] == 0
    vacuous = hs.verify("TOP7_TREES", k=20)
    assert vacuous["exit_code"] == 2
    failed = hs.verify("BC_TOP", tol=1.0)
    assert failed["exit_code"] == 1
    assert failed["counter_instance"]["hypergraph"]["m"] == 3
    with pytest.raises(hs.HyperspecError):
        hs.verify("NOT_A_THEOREM")
