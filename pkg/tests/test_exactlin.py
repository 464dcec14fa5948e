import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qcipoincare.exactlin import (Echelon, PrimeField, intersect, is_prime, kernel_basis, matmul, rank, rref,
                                  solve)

P = 101


def slow_rank(rows, p):
    """Textbook elimination on Python ints; the oracle for ``rank``."""
    m = [[x % p for x in r] for r in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        r += 1
    return r


def matrices(max_rows=7, max_cols=7, p=P):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(0, p - 1), min_size=c, max_size=c), min_size=r, max_size=r)))


def test_is_prime():
    assert [q for q in range(30) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_field_rejects_composite():
    with pytest.raises(ValueError):
        PrimeField(100)


def test_inverse():
    F = PrimeField(P)
    assert all(a * F.inv(a) % P == 1 for a in range(1, P))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_matches_oracle(rows):
    assert rank(np.array(rows), P) == slow_rank(rows, P)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(rows):
    a = np.array(rows)
    k = kernel_basis(a, P)
    assert k.shape == (a.shape[1], a.shape[1] - rank(a, P))
    assert not matmul(a, k, P).any()
    assert rank(k.T, P) == k.shape[1]


@settings(max_examples=40, deadline=None)
@given(matrices(), st.integers(0, 2**32))
def test_solve_roundtrip(rows, seed):
    a = np.array(rows)
    x = np.random.default_rng(seed).integers(0, P, a.shape[1])
    b = matmul(a, x.reshape(-1, 1), P).ravel()
    y = solve(a, b, P)
    assert y is not None
    assert np.array_equal(matmul(a, y.reshape(-1, 1), P).ravel(), b)


def test_solve_inconsistent():
    assert solve(np.array([[1, 0], [1, 0]]), [0, 1], P) is None


def test_rref_is_reduced():
    r, red, piv = rref(np.array([[2, 4, 6], [1, 2, 4], [0, 0, 0]]), P)
    assert r == 2 and piv == [0, 2]
    assert np.array_equal(red, [[1, 2, 0], [0, 0, 1]])


@pytest.mark.parametrize("p", [2, 101, 32749, 2147483629])
def test_matmul_exact_for_large_inner(p):
    rng = np.random.default_rng(p)
    a = rng.integers(0, p, (3, 400), dtype=np.int64)
    b = rng.integers(0, p, (400, 2), dtype=np.int64)
    expect = [[sum(int(a[i, k]) * int(b[k, j]) for k in range(400)) % p for j in range(2)] for i in range(3)]
    assert matmul(a, b, p).tolist() == expect


def test_matmul_reduces_negative_inputs():
    assert matmul(np.array([[-1]]), np.array([[-1]]), P).tolist() == [[1]]


@settings(max_examples=40, deadline=None)
@given(matrices(5, 6), matrices(5, 6))
def test_intersection_dimension(a_rows, b_rows):
    n = min(len(a_rows[0]), len(b_rows[0]))
    a = np.array(a_rows)[:, :n]
    b = np.array(b_rows)[:, :n]
    both = intersect(a, b, P)
    expect = rank(a, P) + rank(b, P) - rank(np.concatenate([a, b]), P)
    assert both.shape[0] == expect
    ea, eb = Echelon.from_rows(a, n, P), Echelon.from_rows(b, n, P)
    assert all(ea.contains(v) and eb.contains(v) for v in both)


@settings(max_examples=40, deadline=None)
@given(matrices(6, 5))
def test_echelon_incremental_equals_batch(rows):
    a = np.array(rows)
    e = Echelon(a.shape[1], P)
    kept = e.extend(a)
    assert e.dim == len(kept) == rank(a, P)
    assert rank(a[kept], P) == len(kept)
    q, free = e.quotient_map()
    assert q.shape[0] == a.shape[1] - e.dim
    assert not matmul(q, a.T, P).any()


def test_echelon_zero_dimensional():
    e = Echelon(0, P)
    e.add_span(np.zeros((3, 0), dtype=np.int64))
    assert e.extend(np.zeros((2, 0), dtype=np.int64)) == [] and e.dim == 0
