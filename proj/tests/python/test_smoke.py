import pytest

import abel_lab as al

SYM = ("-1", "1")
T6_IV = ("-1/2*r3", "1/2*r3")
T6_PLUS_1 = [0, 0, 18, 0, -48, 0, 32]


def test_flow_coefficients():
    assert al.poincare_coeffs([1], [1], (0, 1), 6)[2:] == ["1", "2", "7/2", "41/6", "53/4"]


def test_center_table():
    table = al.center_table([-1, 0, 1], [0, -1, 0, 1], SYM, 8)
    assert table["4,1"] == "-8/15"
    assert al.center_table([1, 0, -2, 0, 1], [0, 0, -1, 0, 1], SYM, 8, param="delta") == {}


def test_moments_and_melnikov():
    assert al.moment([-1, 0, 1], [0, -1, 0, 1], SYM, 1) == "8/15"
    assert al.melnikov([0, -1, 1], [0, 2, -3, 1], (0, 1))["D6"] == "-1/280"


def test_composition():
    w = al.cc_check([1, 0, -2, 0, 1], [0, 0, -1, 0, 1], SYM)
    assert w["W"] == ["0", "0", "1"]
    assert al.cc_check([0, 0, 1], [0, -1, 0, 1], SYM) is None


def test_factors_and_report():
    degrees = [len(f) - 1 for f in al.right_factors(T6_PLUS_1, T6_IV, D=3)]
    assert degrees == [2, 3, 6]
    report = al.structure_report(T6_PLUS_1, T6_IV, D=3)
    assert report["tag"] == "chebyshev-like" and report["pattern"] == [2, 3]


def test_zspace():
    assert len(al.zspace(T6_PLUS_1, T6_IV, 6, D=3)) == 4
    assert al.z_dim_formula(6) == 4
    with pytest.raises(al.ComputeError):
        al.zspace(T6_PLUS_1, T6_IV, 6, imax=0, D=3)


def test_trig():
    P, Q = {"cos": {"3": 1}}, {"sin": {"2": 1}}
    assert al.trig_moment(P, Q, 3, 2) == "3/4"
    assert al.non_cc_certificate(P, Q) == (3, 2, "3/4")
    assert al.non_cc_certificate({"cos": {"2": 1}}, {"cos": {"4": 1}}) is None


def test_errors_name_fields():
    with pytest.raises(al.InputError, match="P.coeffs"):
        al.moment([1, "x"], [0], SYM, 0)
    with pytest.raises(al.DomainError):
        al.cc_check([0, 0, 0, 1], [0, 0, 1], SYM)


def test_criterion():
    result = al.run_criterion("A9", 7)
    assert result["passed"], result["detail"]
