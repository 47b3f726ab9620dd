"""Smoke tests for the Python bindings."""

import trizero as tz


def test_field_arithmetic():
    f = tz.Field(5)
    assert f.size == 32
    w = f.generator
    assert f.pow(w, 31) == 1
    x = f.parse_element("w^7")
    assert f.mul(x, f.inv(x)) == 1
    assert f.pow(f.cube_root(x), 3) == x
    assert f.format_element(x) == "w^7"


def test_build_and_enumerate():
    f = tz.Field(5)
    code = tz.build_extended_augmented(f, 1)
    assert (code.n, code.k) == (32, 16)
    wd = tz.weight_distribution(code)
    assert wd == {0: 1, 8: 620, 12: 13888, 16: 36518, 20: 13888, 24: 620,
                  32: 1}
    assert tz.predicted_wd_extended(5, 1) == wd
    assert tz.weight_distribution(tz.dual(code)) == wd


def test_shorten_and_tables():
    f = tz.Field(5)
    ce = tz.build_ce(f, 1)
    assert (ce.n, ce.k) == (31, 15)
    st = tz.shorten(ce, [0])
    assert (st.n, st.k) == (30, 14)
    assert tz.weight_distribution(st) == tz.predicted_wd_shortened(5, 1)


def test_counts():
    f = tz.Field(5)
    w = [f.gen_pow(k) for k in range(10)]
    assert tz.n_of_triple(f, w[1], w[2], w[3]) == 1
    assert tz.n_of_triple(f, w[1], w[2], w[3], brute_force=True) == 1
    assert tz.nbar_of_quad(f, w[1], w[3], w[6], w[7]) == 1
    assert tz.combined_n_t4(f, w[1], w[3], w[6], w[7]) == 6
    assert tz.kloosterman(f, 0) == -1


def test_designs_and_duals():
    f = tz.Field(5)
    code = tz.build_extended_augmented(f, 1)
    check = tz.verify_design(code, 8, t=3)
    assert check["is_design"] and check["lambda"] == 7
    assert tz.predicted_lambda_min_weight(5) == 7
    assert tz.predicted_dual_low_weights(5, 1)[8] == 620
    report = tz.dual_low_weight_report(10, 2)
    assert report["values"][6] == 59361280
    assert len(report["discrepancies"]) == 1
