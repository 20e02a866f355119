"""Tests for the verification checks, including synthetic failures."""

import pytest

from alexpoly.braid import BraidWord
from alexpoly.curve import CurveComponent, CurveData, Singularity
from alexpoly.linkpoly import MarkedLink
from alexpoly.ring import LaurentPoly, normalize, parse_poly
from alexpoly.verify import (
    CheckResult,
    check_cf_ledger,
    check_cyclotomic,
    check_infinity,
    check_l1_bounds,
    check_local,
    cyclotomic_text,
    derive_transverse,
    generic_infinity_delta,
    run_verification,
)


def P(text):
    return parse_poly(text)


def line():
    return CurveComponent("L", 1, 0)


def transverse_point(colour, degree):
    link = MarkedLink(BraidWord(2, (1, 1)), {0: 0, 1: colour},
                      marked=0, degree=degree)
    return Singularity(link, on_L=True)


def node(a, b):
    return Singularity(MarkedLink(BraidWord(2, (1, 1)), {0: a, 1: b}),
                       on_L=False)


def cusp(colour):
    return Singularity(MarkedLink(BraidWord(2, (1, 1, 1)), {0: colour}),
                       on_L=False)


def two_lines_curve():
    return CurveData(
        (line(), CurveComponent("A", 1, 0), CurveComponent("B", 1, 0)),
        (node(1, 2), transverse_point(1, 2), transverse_point(2, 2)))


def cuspidal_cubic_curve():
    return CurveData(
        (line(), CurveComponent("cubic", 3, 0)),
        (cusp(1), transverse_point(1, 3), transverse_point(1, 3),
         transverse_point(1, 3)))


def sextic_curve():
    sings = tuple(cusp(1) for _ in range(6)) + \
        tuple(transverse_point(1, 6) for _ in range(6))
    return CurveData((line(), CurveComponent("sextic", 6, 4)), sings)


# ---------------------------------------------------------------------------
# helpers


def test_generic_infinity_values():
    assert generic_infinity_delta(1) == LaurentPoly.one(1)
    assert generic_infinity_delta(2) == P("t - 1")
    assert generic_infinity_delta(3) == normalize(P("t - 1") * P("t^3 - 1"))
    with pytest.raises(ValueError):
        generic_infinity_delta(0)


def test_derive_transverse():
    assert derive_transverse(two_lines_curve())
    assert derive_transverse(cuspidal_cubic_curve())
    # missing one crossing: only d - 1 points on the line
    partial = CurveData(
        (line(), CurveComponent("C", 2, 0)),
        (transverse_point(1, 2),))
    assert not derive_transverse(partial)
    # tangency: 2-component but the local invariant is not 1 - t
    tangent = Singularity(
        MarkedLink(BraidWord(2, (1, 1, 1, 1)), {0: 0, 1: 1},
                   marked=0, degree=2), on_L=True)
    curved = CurveData(
        (line(), CurveComponent("C", 2, 0)),
        (tangent, transverse_point(1, 2)))
    assert not derive_transverse(curved)


def test_cyclotomic_text():
    assert cyclotomic_text({}) == "1"
    assert cyclotomic_text({1: 2, 6: 1}) == "Phi_1^2 * Phi_6"


# ---------------------------------------------------------------------------
# individual checks


def test_check_infinity_pass_and_witness():
    res = check_infinity(P("t - 1"), generic_infinity_delta(3))
    assert res.status == "pass"
    assert res.witness == "t^3 - 1"


def test_check_infinity_fail():
    res = check_infinity(P("t^2 + t + 1"), generic_infinity_delta(2))
    assert res.status == "fail"
    assert res.witness is None


def test_check_infinity_zero_cases():
    zero = LaurentPoly.zero(1)
    assert check_infinity(zero, zero).status == "pass"
    assert check_infinity(zero, P("t - 1")).status == "fail"
    assert check_infinity(P("t - 1"), zero).status == "pass"


def test_check_local_two_lines():
    res = check_local(P("t - 1"), two_lines_curve())
    assert res.status == "pass"
    assert res.witness == "t^3 - 3*t^2 + 3*t - 1"


def test_check_local_fail():
    res = check_local(P("t^2 + t + 1"), two_lines_curve())
    assert res.status == "fail"


def test_check_local_irreducible_extras():
    res = check_local(LaurentPoly.one(1), cuspidal_cubic_curve())
    assert res.status == "pass"
    assert "irreducible extras" in res.detail
    # a (t - 1) factor violates coprimality even though it divides
    res = check_local(P("t - 1"), cuspidal_cubic_curve())
    assert res.status == "fail"
    assert "1 - t" in res.detail


def test_check_l1_bounds():
    # two components force at least one (1 - t) factor
    assert check_l1_bounds(P("t - 1"), two_lines_curve(), True).status == "pass"
    assert check_l1_bounds(P("t^2 + 1"), two_lines_curve(), True).status == "fail"
    # transverse line caps the multiplicity at d - 1
    high = normalize(P("t - 1") ** 2)
    assert check_l1_bounds(high, two_lines_curve(), True).status == "fail"
    assert check_l1_bounds(high, two_lines_curve(), False).status == "pass"
    # zero invariant fails only under transversality
    zero = LaurentPoly.zero(1)
    assert check_l1_bounds(zero, two_lines_curve(), True).status == "fail"
    assert check_l1_bounds(zero, two_lines_curve(), False).status == "pass"
    # irreducible curves need multiplicity exactly 0
    assert check_l1_bounds(P("t - 1"), cuspidal_cubic_curve(), False).status == "fail"
    assert check_l1_bounds(LaurentPoly.one(1),
                           cuspidal_cubic_curve(), True).status == "pass"


def test_check_cf_ledger_pass():
    res = check_cf_ledger(LaurentPoly.one(1), cuspidal_cubic_curve())
    assert res.status == "pass"
    rows = {row["phi"]: row for row in res.ledger}
    # boundary strips to Phi_6 with budget row for Phi_1
    assert rows[6]["in_boundary"] == 1
    assert rows[6]["in_invariant"] == 0
    assert rows[1]["budget"] == 2
    assert all(row["ok"] for row in res.ledger)


def test_check_cf_ledger_squared_divisibility_fail():
    # t^2 - t + 1 divides the boundary once, so its square cannot
    res = check_cf_ledger(P("t^2 - t + 1"), cuspidal_cubic_curve())
    assert res.status == "fail"
    rows = {row["phi"]: row for row in res.ledger}
    assert rows[6]["in_invariant"] == 1
    assert not rows[6]["ok"]


def test_check_cf_ledger_budget_fail():
    # invariant (t-1)^3 on the two-lines curve: 2a = 6 > b + e = 4 + 1
    res = check_cf_ledger(normalize(P("t - 1") ** 3), two_lines_curve())
    assert res.status == "fail"
    assert "budget" in res.detail


def test_check_cf_ledger_zero_fail():
    assert check_cf_ledger(LaurentPoly.zero(1), two_lines_curve()).status == "fail"


def test_check_cyclotomic():
    assert check_cyclotomic(P("t^2 - t + 1")).status == "pass"
    assert check_cyclotomic(P("t^2 - t + 1")).witness == "Phi_6"
    assert check_cyclotomic(LaurentPoly.one(1)).status == "pass"
    assert check_cyclotomic(P("t^2 + t + 2")).status == "fail"
    assert check_cyclotomic(LaurentPoly.zero(1)).status == "fail"


# ---------------------------------------------------------------------------
# the full report


def test_run_verification_two_lines():
    report = run_verification(two_lines_curve(), P("t - 1"))
    assert report.ok
    names = [c.name for c in report.checks]
    assert names == ["infinity", "local", "l1-bounds", "cf-ledger", "cyclotomic"]
    text = report.to_text()
    assert "overall: pass" in text
    obj = report.to_json()
    assert obj["ok"] is True
    assert len(obj["checks"]) == 5


def test_run_verification_sextic():
    report = run_verification(sextic_curve(), P("t^2 - t + 1"))
    assert report.ok, report.to_text()


def test_run_verification_detects_wrong_invariant():
    report = run_verification(two_lines_curve(), P("t^2 + t + 1"))
    assert not report.ok
    assert "overall: fail" in report.to_text()
