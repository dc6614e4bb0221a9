from fractions import Fraction

import pytest

import weylcheb


def test_group_orders():
    assert [weylcheb.group_order(a) for a in ("a1", "a2", "c2", "g2")] == [2, 6, 8, 12]
    odd = [e for e in weylcheb.weyl_elements("g2") if e["det"] == -1]
    assert len(odd) == 6
    assert all(len(e["word"]) % 2 == 1 for e in odd)


def test_second_kind_table_entries():
    assert weylcheb.second_kind_poly("g2", [2, 0]) == "x^2 - x - y - 1"
    assert weylcheb.second_kind_poly("g2", [2, 0], format="latex") == "x^{2}-x-y-1"
    assert weylcheb.recurrence_poly("g2", [1, 1]) == "-x^2 + x*y + y + 1"
    assert weylcheb.recurrence_poly("g2", [-2, 1]) == "-1"
    table = weylcheb.polynomial_table("g2", max_m=3, max_n=3)
    assert len(table) == 16
    assert table[(0, 0)] == "1"


def test_first_kind():
    assert weylcheb.first_kind_poly("a1", [3]) == "x^3 - 3*x"
    assert weylcheb.first_kind_poly("g2", [1, 0]) == "x"


def test_laurent_outputs():
    x, y = weylcheb.variables("g2")
    assert len(x) == 7 and x[(0, 0)] == 1
    assert y[(0, 0)] == 2 and sum(y.values()) == 14
    singular = weylcheb.phi_asym("g2", [1, 1])
    assert len(singular) == 12
    assert singular[(1, 1)] == Fraction(1)
    assert weylcheb.phi_sym("g2", [0, 0]) == {(0, 0): 12}


def test_generating_function():
    gf = weylcheb.closed_form_gf("g2")
    assert gf["P1"] == ["1", "-x + 1", "y + 1", "-x^2 + 2*y + 1", "y + 1", "-x + 1", "1"]
    assert len(gf["K"]) == 19


def test_numeric_checks():
    report = weylcheb.verify_ratio("g2", [2, 2], samples=50)
    assert report["passed"] and report["max_abs_error"] < 1e-8
    assert weylcheb.dimension_check("g2", [1, 1]) == (64, 64)
    assert weylcheb.dimension_check("g2", [8, 8]) == (531441, 531441)


def test_bad_arguments():
    with pytest.raises(ValueError):
        weylcheb.group_order("e8")
    with pytest.raises(ValueError):
        weylcheb.second_kind_poly("g2", [1])
