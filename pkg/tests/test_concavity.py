import json
import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from chromlc.chromatic import blowup_eval, chromatic_polynomial, count_colorings_bruteforce
from chromlc.concavity import (
    LogConcavityReport,
    SeymourReport,
    asymptotic_ratio_report,
    linear_factor_check,
    logcc_check,
    logcc_scan,
    modified_example_check,
    modified_example_sides,
    proof_algebra_sweep,
    quadratic_factor_check,
    seymour_report,
    seymour_upper6,
    threshold_q0,
)
from chromlc.errors import InvalidParameterError, PreconditionError
from chromlc.graph import add_universal_vertices, seymour_H, seymour_base
from chromlc.polynomial import Polynomial

K3 = Polynomial([0, 2, -3, 1])
C4 = Polynomial([0, -3, 6, -4, 1])
CUBE = Polynomial([0, 0, 0, 1])


def test_logcc_check_examples():
    assert logcc_check(K3, 3)       # P(2) = 0
    assert logcc_check(K3, 4)       # 6 * 60 = 360 <= 576
    assert logcc_check(C4, 3)       # 2 * 84 = 168 <= 324


def test_logcc_check_detects_failure():
    # q^2 (q - 10)^2 dips to zero at q = 10
    p = Polynomial([0, 0, 100, -20, 1])
    assert not logcc_check(p, 10)


def test_threshold():
    assert threshold_q0(2) == 21
    assert threshold_q0(0) == 1
    assert threshold_q0(1) == math.ceil(math.sqrt(2) * 6.908 + 1) == 11


def test_scan_examples():
    rep = logcc_scan(K3, 0, 50, 2)
    assert rep.violations == [] and rep.threshold_q0 == 21
    rep = logcc_scan(CUBE, 1, 10, 0)
    assert rep.violations == [] and rep.threshold_q0 == 1
    assert logcc_scan(C4, 0, 50, 2, 6.907).violations == []


def test_scan_reports_below_threshold_violation():
    # edgeless on 2 vertices: P(-1) P(1) = 1 > P(0)^2 = 0
    rep = logcc_scan(Polynomial([0, 0, 1]), 0, 5, 0)
    assert rep.violations == [0]
    assert rep.contradictions == []


def test_scan_bad_range():
    with pytest.raises(InvalidParameterError):
        logcc_scan(K3, 5, 4, 2)


def test_scan_json_round_trip():
    rep = logcc_scan(C4, 0, 30, 2, chromatic_number=2)
    again = LogConcavityReport.from_dict(json.loads(json.dumps(rep.to_dict())))
    assert again == rep


# -- factor inequalities -------------------------------------------------------------

def test_linear_examples():
    assert linear_factor_check(0.0, 1, 6.907, 12.0)
    assert linear_factor_check(6.9, 1, 6.907, 10.77)
    with pytest.raises(PreconditionError):
        linear_factor_check(0.0, 1, 6.907, 5.0)
    with pytest.raises(PreconditionError):
        linear_factor_check(7.0, 1, 6.907, 12.0)


def test_quadratic_examples():
    assert quadratic_factor_check(0.0, 0.0, 1, 6.907, 11.0)
    # 58 * 90 = 5220 <= 73^2 = 5329
    assert quadratic_factor_check(3.0, 3.0, 1, 6.907, 11.0)
    with pytest.raises(PreconditionError):
        quadratic_factor_check(6.0, 6.0, 1, 6.907, 11.0)
    with pytest.raises(PreconditionError):
        quadratic_factor_check(0.0, 0.0, 1, 6.907, 10.0)


@given(
    st.integers(1, 40),
    st.floats(-1, 1),
    st.floats(0, 2 * math.pi),
    st.floats(1e-9, 50),
)
@settings(max_examples=300)
def test_factor_checks_hold_under_hypotheses(delta, frac, theta, eps):
    R = Fraction(6.907) * delta
    radius = float(R)
    q = math.sqrt(2) * radius + 1 + eps
    assume((Fraction(q) - 1) ** 2 > 2 * R**2)
    alpha = frac * radius
    assume(abs(Fraction(alpha)) <= R)
    assert linear_factor_check(alpha, delta, 6.907, q)
    a, b = abs(frac) * radius * math.cos(theta), abs(frac) * radius * math.sin(theta)
    assume(Fraction(a) ** 2 + Fraction(b) ** 2 <= R**2)
    assert quadratic_factor_check(a, b, delta, 6.907, q)


def test_sweep_small():
    res = proof_algebra_sweep(500, 3)
    assert res.passed and res.samples == 500
    assert proof_algebra_sweep(200, 9) == proof_algebra_sweep(200, 9)


# -- Seymour ---------------------------------------------------------------------------

def test_upper_bound_at_one():
    # 77760 + 13440 + 17280 + 12960 + 1440
    assert seymour_upper6(1) == 122880


def test_seymour_row_one():
    (row,) = seymour_report(1, 1).rows
    h1 = seymour_H(1)
    assert (row.p5, row.p6, row.p7) == tuple(count_colorings_bruteforce(h1, q) for q in (5, 6, 7))
    assert (row.p5, row.p6, row.p7) == (1620, 7680, 26250)
    assert row.lb5 == 27 and row.lb7 == 217 and row.ub6 == 122880
    assert row.bounds_hold == (True, True, True)
    assert not row.inequality_holds
    assert row.max_degree == 4 and row.stated_max_degree == 0


def test_seymour_rows_match_polynomial_for_small_n():
    p = chromatic_polynomial(seymour_H(2))
    (row,) = seymour_report(2, 2).rows
    assert (row.p5, row.p6, row.p7) == (p(5), p(6), p(7))


def test_seymour_first_crossing():
    # exact scan: P5 P7 > P6^2 first at n = 28 and from then on
    rep = seymour_report(20, 40)
    assert rep.first_holds == 28
    assert rep.n_star == 28
    assert rep.all_bounds_hold


def test_seymour_report_serialisation():
    rep = seymour_report(1, 5)
    again = SeymourReport.from_dict(json.loads(rep.to_json()))
    assert again.rows == rep.rows and again.n_star == rep.n_star
    lines = rep.to_csv().splitlines()
    assert lines[0].startswith("n,p5,p6,p7")
    assert len(lines) == 6


def test_seymour_invalid_range():
    with pytest.raises(InvalidParameterError):
        seymour_report(0, 3)
    with pytest.raises(InvalidParameterError):
        seymour_report(4, 3)


# -- modified example -----------------------------------------------------------------

def test_modified_examples():
    assert modified_example_check(6, 5)
    lhs, rhs = modified_example_sides(6, 5)
    assert lhs == blowup_eval(seymour_base(), 6, 5)
    lhs, rhs = modified_example_sides(7, 10)
    assert lhs == rhs == math.prod(range(4, 11)) * blowup_eval(seymour_base(), 7, 3)


def test_modified_small_case_bruteforce():
    g = add_universal_vertices(seymour_H(1), 2)
    assert count_colorings_bruteforce(g, 5) == 5 * 4 * count_colorings_bruteforce(seymour_H(1), 3)


def test_modified_invalid():
    with pytest.raises(InvalidParameterError):
        modified_example_check(5, 10)
    with pytest.raises(InvalidParameterError):
        modified_example_check(7, 6)


def test_ratio_report():
    rep = asymptotic_ratio_report(100)
    first, last = rep["rows"][0], rep["rows"][-1]
    assert first.n == 7 and first.ratio == Fraction(14, 48)
    assert last.n == 100 and last.ratio == Fraction(9407, 9999)
    assert float(last.ratio) == pytest.approx(0.9408, abs=1e-4)
    assert rep["monotone"] and rep["all_within"]
    with pytest.raises(InvalidParameterError):
        asymptotic_ratio_report(6)
