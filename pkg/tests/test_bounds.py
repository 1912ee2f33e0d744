from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bettilab import bounds
from bettilab.diagram import BettiDiagram, herzog_kuhl
from bettilab.reports import BoundReport

SQUARE = BettiDiagram({(0, 0): 1, (1, 2): 3, (2, 3): 2})  # (x, y)^2


def test_mu_bounds_fixtures(cycle7, caviglia):
    lo, up = bounds.mu_bounds(cycle7, 2, 4)
    assert (lo.lhs, lo.rhs, up.lhs, up.rhs) == (5, 7, 7, 15) and lo.holds and up.holds
    lo, up = bounds.mu_bounds(caviglia, 2, 2)
    assert (lo.lhs, lo.rhs, up.rhs) == (2, 3, 10)
    lo, up = bounds.mu_bounds(SQUARE, 2, 2)
    assert lo.lhs == lo.rhs == up.rhs == 3


def test_mu_bounds_errors(cycle7, quartic):
    with pytest.raises(ValueError, match="concentrated"):
        bounds.mu_bounds(cycle7, 3, 2)
    with pytest.raises(ValueError, match="exceeds pdim"):
        bounds.mu_bounds(cycle7, 2, 6)
    with pytest.raises(ValueError):
        bounds.mu_bounds(quartic, 3, 1)


def test_beta_c_lower_fixtures(cycle7, caviglia):
    assert bounds.beta_c_lower(cycle7, 2, 4).lhs == Fraction(5, 2)
    assert bounds.beta_c_lower(cycle7, 2, 4).rhs == 7
    r = bounds.beta_c_lower(caviglia, 2, 2)
    assert (r.lhs, r.rhs) == (1, 5)
    r = bounds.beta_c_lower(SQUARE, 2, 2)
    assert r.lhs == r.rhs == 2


def test_linear_bounds_values():
    assert bounds.linear_bounds(2, 2, 2, 1).C_t == 3
    assert bounds.linear_bounds(2, 2, 2, 2).C_t == 2
    b = bounds.linear_bounds(2, 5, 4, 1)
    assert (b.lower, b.hk_lower, b.best_lower) == (10, 5, 10)
    for d in range(1, 6):
        for p in range(2, 7):
            b = bounds.linear_bounds(d, p, p, p)
            assert b.C_t == comb(d + p - 2, p - 1) and b.hk_lower == 1
    assert bounds.linear_bounds(2, 5, 3, 4).lower == 0
    with pytest.raises(ValueError):
        bounds.linear_bounds(2, 3, 2, 4)


def test_large_binomials_exact():
    b = bounds.linear_bounds(64, 64, 64, 32)
    assert b.C_t == comb(94, 31) * comb(127, 32)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(2, 6))
def test_pure_linear_cm_is_extremal(d, p):
    dseq = (0,) + tuple(d + i - 1 for i in range(1, p + 1))
    D = herzog_kuhl(dseq).to_diagram()
    for t in range(1, p + 1):
        assert D.betti_number(t) == bounds.linear_bounds(d, p, p, t).C_t
    rep = bounds.is_extremal(D, d)
    assert rep.extremal and rep.consistent


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(2, 5), st.data())
def test_perturbing_one_column_breaks_all_equalities(d, p, data):
    dseq = (0,) + tuple(d + i - 1 for i in range(1, p + 1))
    entries = herzog_kuhl(dseq).to_diagram().entries
    t = data.draw(st.integers(1, p))
    key = (t, d + t - 1)
    entries[key] = entries[key] - Fraction(1, 2)
    rep = bounds.is_extremal(BettiDiagram(entries), d)
    assert t not in rep.hits


def test_is_extremal_needs_linear_resolution(cycle7):
    with pytest.raises(ValueError):
        bounds.is_extremal(cycle7, 2)


def test_small_p_quartic(quartic):
    reps = bounds.betti_upper_small_p(3, 3, (0, 3, 7, 8), quartic.betti_numbers())
    assert [(r.lhs, r.rhs) for r in reps] == [(4, 15), (2, 6)]


def test_small_p_caviglia(caviglia):
    b = bounds.small_p_bounds(2, 4, (0, 2, 4, 5, 6))
    assert (b[2].branch, b[2].bound) == ("closed", 20)
    assert (b[3].branch, b[3].threshold, b[3].bound) == ("dbar", 4, 16)
    assert b[3].at_start == 15  # the closed branch value, kept for auditing
    assert (b[4].branch, b[4].bound) == ("dbar", 5)
    reps = bounds.betti_upper_small_p(2, 4, (0, 2, 4, 5, 6), caviglia.betti_numbers())
    assert all(r.holds for r in reps)
    assert [r.rhs for r in reps] == [20, 16, 5]


def test_small_p_capped_values_are_conditional(caviglia):
    reps = bounds.betti_upper_small_p(2, 4, (0, 2, 4, 5, 6), caviglia.betti_numbers(), dim_le_2=True)
    capped = [r for r in reps if r.name.endswith("capped")]
    assert len(capped) == 3 and all(r.conditional for r in capped)
    cap = (3 * 2 - 2) * 4
    assert capped[0].rhs == bounds.eval_f(cap + 2, 2, 4, 2)


def test_small_p_rejects():
    with pytest.raises(ValueError):
        bounds.small_p_bounds(2, 5, (0, 2, 3, 4, 5, 6))
    with pytest.raises(ValueError):
        bounds.small_p_bounds(2, 3, (0, 2, 2, 3))


def test_general_examples(cycle7):
    r = bounds.betti_upper_general(2, 5, 2, 4, 14)
    assert (r.inputs["at_start"], r.inputs["at_dbar"], r.rhs, r.holds) == (40, 35, 40, True)
    r = bounds.betti_upper_general(3, 6, 2, 4)
    assert r.inputs["at_start"] == r.inputs["at_dbar"] and r.conditional
    r = bounds.betti_upper_general(2, 5, 5, 7, 1)
    assert r.rhs == 8 and r.holds
    with pytest.raises(ValueError):
        bounds.betti_upper_general(2, 5, 2, 2)
    reps = bounds.betti_upper_reports(cycle7, 2)
    assert len(reps) == 4 and all(r.holds for r in reps)


def test_eval_f_start_matches_closed_form():
    for d in range(1, 6):
        for p in range(2, 7):
            for j in range(2, p + 1):
                closed = Fraction(d, j - 1) * comb(d + j - 2, j - 2) * comb(d + p - 1, p - j)
                assert bounds.eval_f(d + j - 1, d, p, j) == closed


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6), st.integers(2, 7), st.data())
def test_eval_f_maximized_at_endpoint(d, p, data):
    j = data.draw(st.integers(2, p))
    lo = d + j - 1
    hi = data.draw(st.integers(lo, lo + 15))
    values = [bounds.eval_f(x, d, p, j) for x in range(lo, hi + 1)]
    assert max(values) == max(values[0], values[-1])


def test_ths():
    reps = bounds.ths_check(3, (7, 6, 6, 6), (8, 8), 5)
    assert all(r.holds for r in reps)
    assert [(r.lhs, r.rhs) for r in reps] == [(8, 8), (7, 8), (5, 6), (4, 7)]
    assert all(r.holds for r in bounds.ths_check(2, (3, 3, 3), (4,), 2))
    reps = bounds.ths_check(3, (6, 6, 6), (6,), 4)
    assert not reps[0].holds
    with pytest.raises(ValueError):
        bounds.ths_check(3, (6, 6), (7,), 4)


def test_ths_from_quartic(quartic):
    reps = bounds.ths_from_diagram(quartic, 3)
    assert all(r.holds for r in reps) and reps[-1].lhs == 4


def test_sdall():
    assert bounds.sdall_bound(4, 4, 0, 3, 0) == 8
    assert bounds.sdall_bound(3, 4, 5, 2, 3) == 5
    for d in range(2, 7):
        # f of degree d + 1, beginning degree 2d - 2 of the saturation over J
        assert bounds.sdall_bound(4, d + 1, 0, 3, 2 * d - 2) == 2 * d - 2
    rep = bounds.sdall_report(4, 4, 0, 3, 0)
    assert rep.conditional and not rep.failed and "conditional" in rep.note
    with pytest.raises(ValueError):
        bounds.sdall_bound(4, 4, 0, 5, 0)


def test_linear_condition_reports(cycle7):
    reps = bounds.linear_condition_reports(SQUARE, 2, 2)
    assert all(r.holds for r in reps)
    assert {r.name for r in reps} >= {"linear_upper_Ct", "linear_lower", "herzog_kuhl_lower"}
    assert all(r.holds for r in bounds.linear_condition_reports(cycle7, 2, 4))


@settings(max_examples=100, deadline=None)
@given(st.fractions(), st.fractions())
def test_report_holds_iff_comparison(a, b):
    r = BoundReport.le("x", a, b)
    assert r.holds == (a <= b) and r.failed == (a > b)
