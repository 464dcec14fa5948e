from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from qcipoincare.series import (EQUAL, FAILS, INCONCLUSIVE, SKIPPED, STRICT, TruncatedSeries, binomial_series,
                                check_inert, check_qci_formulas, check_theorem_A, check_theorem_B,
                                cmp_coefficientwise, equality_result, estimate_cx_curv, inequality_result,
                                one_minus_t, one_minus_t2, one_plus_t, poincare_balance)

D = 10
coeffs = st.lists(st.integers(-20, 20), min_size=D + 1, max_size=D + 1)
units = coeffs.map(lambda c: [1] + c[1:])


@settings(max_examples=60)
@given(coeffs, coeffs, coeffs)
def test_ring_laws(a, b, c):
    a, b, c = (TruncatedSeries.from_list(x) for x in (a, b, c))
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60)
@given(units, coeffs)
def test_inverse_and_division(u, b):
    u, b = TruncatedSeries.from_list(u), TruncatedSeries.from_list(b)
    assert u * u.inverse() == TruncatedSeries.one(D)
    assert (b / u) * u == b


@settings(max_examples=30)
@given(st.integers(0, 12))
def test_binomial_series_matches_powers(n):
    assert binomial_series(n, D) == one_plus_t(D) ** n


def test_geometric_inverses():
    assert list(one_minus_t2(D) ** -1) == [1 - i % 2 for i in range(D + 1)]
    assert list(one_minus_t(D) ** -3) == [comb(i + 2, 2) for i in range(D + 1)]


def test_truncation_rules():
    s = TruncatedSeries.from_list([1, 2, 3])
    assert s.truncate(1) == TruncatedSeries.from_list([1, 2])
    with pytest.raises(ValueError):
        s.truncate(5)
    with pytest.raises(ZeroDivisionError):
        TruncatedSeries.from_list([2, 1]).inverse()
    assert TruncatedSeries.from_list([1, 1], 4).coeffs == (1, 1, 0, 0, 0)


def test_cap_flag_propagates():
    s = TruncatedSeries.from_list([1, 1], 3, cap_sensitive=True)
    assert (s * one_plus_t(3)).cap_sensitive and (s ** 2).cap_sensitive


@settings(max_examples=60)
@given(coeffs, coeffs)
def test_cmp_is_consistent(a, b):
    sa, sb = TruncatedSeries.from_list(a), TruncatedSeries.from_list(b)
    rel, w = cmp_coefficientwise(sa, sb)
    if rel == "equal":
        assert a == b
    elif rel == "strict":
        assert all(x <= y for x, y in zip(a, b)) and a[w] < b[w]
    else:
        assert a[w] > b[w]


def test_cmp_rejects_mismatched_orders():
    with pytest.raises(ValueError):
        cmp_coefficientwise(TruncatedSeries.one(2), TruncatedSeries.one(3))


def test_verdicts():
    one, two = TruncatedSeries.one(3), TruncatedSeries.from_list([1, 1], 3)
    assert inequality_result("a", one, one).verdict == EQUAL
    assert inequality_result("a", one, two).verdict == STRICT
    assert inequality_result("a", two, one).verdict == FAILS
    assert equality_result("a", one, two).verdict == FAILS
    capped = TruncatedSeries.from_list([1], 3, cap_sensitive=True)
    assert inequality_result("a", capped, two).verdict == INCONCLUSIVE


def test_koszul_base_comparison_on_ideal_x2():
    # k over F[x,y] with I = (x^2): P^E = (1+t)^2/(1-t^2)
    pq = binomial_series(2, D)
    pe = pq * one_minus_t2(D) ** -1
    r1, r2 = check_theorem_B(pe, pq, 1, shamash=True, nagata=False)
    assert r1.verdict == EQUAL and r2.verdict == STRICT


def test_inert_and_grade_factor():
    # x^2 in F[x]/(x^3), M = k: all four series are 1/(1-t) and grade is 0
    ones = one_minus_t(D) ** -1
    pe = ones * one_minus_t2(D) ** -1
    assert check_inert(ones, ones, ones, ones, expect_equality=True).verdict == EQUAL
    r = check_theorem_A(pmq=ones, pmr=ones, pkq=ones, pkr=ones, pme=pe, grade=0, m=1)
    assert r.verdict == EQUAL and r.details["orientation"] == "both"


def test_grade_factor_reports_orientation():
    # c.i. of grade one: P^Q = (1+t)^2, P^R = (1+t)^2/(1-t^2)
    pq = binomial_series(2, D)
    pr = pq * one_minus_t2(D) ** -1
    r = check_theorem_A(pmq=pq, pmr=pr, pkq=pq, pkr=pr, pme=pr, grade=1, m=0)
    assert r.verdict == EQUAL
    assert r.details["orientation"] == "P_M^Q = P_M^R*(1-t^2)^grade"


def test_poincare_balance_of_polynomial_ring():
    # P_k over a polynomial ring in e variables is (1+t)^e; edim e, depth e
    for e in range(5):
        assert poincare_balance(binomial_series(e, D), e, e) == TruncatedSeries.one(D)


def test_qci_formulas_skip_residue_identity_when_edim_drops():
    # x in F[x]/(x^2): R = k, P_k^Q = 1/(1-t), P_k^R = 1
    pkq = one_minus_t(D) ** -1
    out = check_qci_formulas(n=1, m=1, grade=0, depth_q=0, depth_r=0, edim_q=1, edim_r=0, pkq=pkq,
                             pkr=TruncatedSeries.one(D), pre=one_minus_t2(D) ** -1, modules={}, nagata=True)
    verdicts = {r.name: r.verdict for r in out}
    assert verdicts["qci-residue-field"] == SKIPPED
    assert verdicts["qci-balance[k]"] == EQUAL
    assert verdicts["qci-ring-over-koszul"] == EQUAL
    assert verdicts["qci-grade"] == EQUAL


@pytest.mark.parametrize("betti,cx,curv", [([1] * 13, 1, 1.0), ([1, 2, 1] + [0] * 10, 0, 0.0),
                                           ([i + 1 for i in range(13)], 2, None)])
def test_cx_curv_estimates(betti, cx, curv):
    got = estimate_cx_curv(TruncatedSeries.from_list(betti))
    assert got["cx"] == cx and got["heuristic"]
    if curv is not None:
        assert got["curv"] == curv


def test_cx_window_validation():
    with pytest.raises(ValueError):
        estimate_cx_curv(TruncatedSeries.one(4), (0, 4))
