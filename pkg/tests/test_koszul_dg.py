from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from qcipoincare.exterior import subsets
from qcipoincare.graded_algebra import NonMinimalGeneratorsError, parse_ideal, parse_ring
from qcipoincare.koszul_dg import (GammaAlgebra, _compositions, build_koszul, build_tate_two_step, gamma_hilbert,
                                   koszul_homology, lucas_binomial, qci_certificate_A, qci_certificate_B)
from qcipoincare.series import TruncatedSeries, one_minus_t2

P = 101


def certify(ring_vars, base, gens, hmax=8, dmax=24):
    Q = parse_ring(P, ring_vars, base)
    ideal = parse_ideal(Q, gens)
    E = build_koszul(Q, ideal)
    H = koszul_homology(E, ideal.n, dmax, R=Q.quotient(ideal.gens))
    T = build_tate_two_step(E, H, hmax + 1)
    return E, H, T, qci_certificate_A(H), qci_certificate_B(T, hmax, dmax)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 400), st.integers(0, 400), st.sampled_from([2, 3, 5, 7, 101]))
def test_lucas_matches_comb(n, k, p):
    assert lucas_binomial(n, k, p) == comb(n, k) % p


@pytest.mark.parametrize("m,w", [(0, 0), (1, 5), (2, 3), (3, 4)])
def test_compositions_count(m, w):
    got = list(_compositions(m, w))
    assert len(got) == len(set(got)) == (comb(m + w - 1, w) if m else int(w == 0))
    assert all(sum(h) == w for h in got)


@pytest.mark.parametrize("n", range(9))
def test_gamma_hilbert_inverts_exterior_factor(n):
    assert gamma_hilbert(n, 16) * one_minus_t2(16) ** n == TruncatedSeries.one(16)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=3, max_size=3), st.lists(st.integers(0, 4), min_size=3, max_size=3),
       st.lists(st.integers(0, 4), min_size=3, max_size=3), st.sampled_from([2, 3, 101]))
def test_divided_powers_associative(a, b, c, p):
    G = GammaAlgebra(3, p)
    c1, ab = G.product(tuple(a), tuple(b))
    c2, abc = G.product(ab, tuple(c))
    c3, bc = G.product(tuple(b), tuple(c))
    c4, abc2 = G.product(tuple(a), bc)
    assert abc == abc2 and c1 * c2 % p == c3 * c4 % p


def test_chi_lowers_exponents():
    G = GammaAlgebra(2, P)
    m = G.chi_matrix(0, 2)
    assert m.shape == (len(G.basis(1)), len(G.basis(2)))
    assert m.sum() == sum(1 for h in G.basis(2) if h[0])


def test_koszul_differential_and_products():
    Q = parse_ring(P, ["x", "y", "z"])
    E = build_koszul(Q, parse_ideal(Q, ["x^2", "y*z", "x*z"]))
    assert E.check_d_squared() and E.check_leibniz()
    assert [len(b) for b in E.bases] == [comb(3, i) for i in range(4)]
    e1, e2 = E.basis_element((0,)), E.basis_element((1,))
    # graded commutativity of odd generators
    assert E.mul(e1, e2) == {(0, 1): Q.one()}
    assert E.mul(e2, e1) == {(0, 1): Q.scale(-1, Q.one())}
    assert E.mul(e1, e1) == {}


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_leibniz_on_random_elements(data):
    Q = parse_ring(P, ["x", "y"], ["x^3", "y^3"])
    E = build_koszul(Q, parse_ideal(Q, ["x^2", "x*y", "y^2"]))

    def element(i):
        total = data.draw(st.integers(2 * i, 2 * i + 3))
        out = {}
        for s in subsets(3, i):
            deg = total - E.twist(s)
            coeffs = data.draw(st.lists(st.integers(0, P - 1), min_size=Q.dim(deg), max_size=Q.dim(deg)))
            poly = {m: c for m, c in zip(Q.basis(deg), coeffs) if c}
            if poly:
                e = Q.element(poly, deg)
                if not e.is_zero():
                    out[s] = e
        return out

    i, j = data.draw(st.integers(0, 3)), data.draw(st.integers(0, 3))
    x, y = element(i), element(j)
    lhs = E.d(E.mul(x, y))
    rhs = E.mul(E.d(x), y)
    sign = -1 if i % 2 else 1
    for u, c in E.mul(x, E.d(y)).items():
        c = Q.scale(sign, c)
        rhs[u] = Q.add(rhs[u], c) if u in rhs else c
    rhs = {u: c for u, c in rhs.items() if not c.is_zero()}
    assert lhs == rhs


def test_non_minimal_generators_rejected():
    Q = parse_ring(P, ["x", "y"])
    ideal = parse_ideal(Q, ["x", "x*y"])
    with pytest.raises(NonMinimalGeneratorsError):
        build_koszul(Q, ideal)
    assert build_koszul(Q, ideal, minimize=True).n == 1


@pytest.mark.parametrize("a,b", [(a, b) for b in range(2, 7) for a in range(1, b)])
def test_power_family_is_qci_with_one_cycle(a, b):
    _, H, T, A, B = certify(["x"], [f"x^{b}"], [f"x^{a}"], hmax=6, dmax=6 * b)
    assert A.verdict and B.verdict
    assert H.m == 1 and H.h1_twists == [b]
    assert [T.rank(i) for i in range(7)] == [1] * 7


def test_complete_intersection_has_no_h1():
    _, H, T, A, B = certify(["x", "y"], [], ["x^2", "y^2"])
    assert A.verdict and B.verdict and H.m == 0
    assert [T.rank(i) for i in range(4)] == [1, 2, 1, 0]


def test_two_cycles_over_artinian_ring():
    _, H, T, A, B = certify(["x", "y"], ["x^2", "y^2"], ["x", "y"], hmax=6, dmax=12)
    assert A.verdict and B.verdict and H.m == 2
    assert [T.rank(i) for i in range(7)] == [i + 1 for i in range(7)]
    assert T.check_d_squared(12) and T.is_minimal()


@pytest.mark.parametrize("base,gens", [([], ["x^2", "x*y"]), ([], ["x^2", "y^2", "x*y"])])
def test_not_qci(base, gens):
    _, H, _, A, B = certify(["x", "y", "z"], base, gens, hmax=5, dmax=12)
    assert not A.verdict and not B.verdict


def test_linear_form_in_hypersurface():
    _, H, _, A, B = certify(["x", "y"], ["x*y"], ["x"], hmax=6, dmax=12)
    assert A.verdict and B.verdict and H.m == 1
