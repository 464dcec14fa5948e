from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from qcipoincare.acceptance import random_module
from qcipoincare.graded_algebra import PresentedModule, free_dim, parse_ideal, parse_module, parse_ring
from qcipoincare.resolution import (depth, grade, minimal_free_resolution, oracle_resolution, poincare_series,
                                    resolution_key, tensor_k_homology)

P = 101


def test_residue_field_over_polynomial_ring():
    Q = parse_ring(P, ["x", "y", "z"])
    F = minimal_free_resolution(PresentedModule.residue_field(Q), 4, 8)
    assert F.ranks()[:5] == [1, 3, 3, 1, 0]
    # the Koszul complex is linear: F_i lives in degree i
    assert F.twists[:4] == [[0], [1, 1, 1], [2, 2, 2], [3]]
    assert F.betti().graded == {(i, i): comb(3, i) for i in range(4)}


def test_residue_field_over_dual_numbers():
    Q = parse_ring(P, ["x"], ["x^2"])
    F = minimal_free_resolution(PresentedModule.residue_field(Q), 10, 20)
    assert F.ranks() == [1] * 11
    assert F.complete and not F.cap_sensitive


def test_residue_field_over_hypersurface_quadric():
    Q = parse_ring(P, ["x", "y"], ["x*y"])
    # a hypersurface: betti numbers 1, 2, 2, 2, ...
    assert list(poincare_series(PresentedModule.residue_field(Q), None, 8, 20)) == [1] + [2] * 8


def test_non_koszul_growth():
    Q = parse_ring(P, ["x", "y"], ["x^2", "x*y", "y^2"])
    assert list(poincare_series(PresentedModule.residue_field(Q), None, 6, 12)) == [2 ** i for i in range(7)]


def test_module_with_linear_and_quadratic_relations():
    Q = parse_ring(P, ["x", "y"])
    F = minimal_free_resolution(parse_module(Q, [0], [["x^2", "x*y"]]), 3, 10)
    assert F.ranks()[:4] == [1, 2, 1, 0]
    assert F.twists[1] == [2, 2] and F.twists[2] == [3]


def test_d_squared_exactness_and_minimality():
    Q = parse_ring(P, ["x", "y"], ["x^3", "y^2"])
    F = minimal_free_resolution(parse_module(Q, [0, 1], [["x^2", "y^2"], ["y", "x"]]), 6, 20)
    assert F.check_d_squared()
    assert F.entries_in_m() and F.minimal
    assert F.exactness_defects() == []


def test_clipped_artinian_window_is_flagged():
    Q = parse_ring(P, ["x"], ["x^6"])
    k = PresentedModule.residue_field(Q)
    F = minimal_free_resolution(k, 12, 20, ceiling=20)
    assert F.cap_sensitive
    G = minimal_free_resolution(k, 12, 20)  # the cap grows on its own
    assert not G.cap_sensitive and G.ranks() == [1] * 13


def test_oracle_is_not_minimal_but_agrees():
    Q = parse_ring(P, ["x", "y"], ["x^2"])
    k = PresentedModule.residue_field(Q)
    O = oracle_resolution(k, 5, 16)
    F = minimal_free_resolution(k, 5, 16)
    assert sum(O.ranks()) > sum(F.ranks()[:6])
    assert O.check_d_squared()
    assert tensor_k_homology(O, 5) == F.ranks()[:6]


@settings(max_examples=12, deadline=None)
@given(st.integers(0, 500))
def test_oracle_equivalence_random(seed):
    M = random_module(seed)
    F = minimal_free_resolution(M, 5, 16)
    assert tensor_k_homology(oracle_resolution(M, 5, 16), 5) == F.ranks()[:6]


@settings(max_examples=12, deadline=None)
@given(st.integers(0, 500))
def test_euler_characteristic(seed):
    """Σ (-1)^i dim (F_i)_d = dim M_d in degrees the resolution has fully reached."""
    M = random_module(seed)
    hmax, dmax = 6, 16
    F = minimal_free_resolution(M, hmax, dmax)
    ring = M.ring
    # F_{hmax+1} starts in degree >= hmax + min twist, so lower degrees are exact
    top = min(t for t in M.cover_twists) + hmax
    for d in range(top + 1):
        chi = sum((-1) ** i * free_dim(ring, F.twists[i], d) for i in range(hmax + 1))
        assert chi == M.dim(d)


def test_depth_and_grade():
    Q = parse_ring(P, ["x", "y", "z"])
    assert depth(Q, 10) == 3
    assert depth(parse_ring(P, ["x", "y"], ["x^2"]), 10) == 1
    assert depth(parse_ring(P, ["x"], ["x^3"]), 10) == 0
    assert grade(parse_ideal(Q, ["x*y", "x*z"]), 10) == 1
    assert grade(parse_ideal(Q, ["x", "y^2"]), 10) == 2


def test_cache_roundtrip(tmp_path):
    Q = parse_ring(P, ["x", "y"], ["x*y"])
    k = PresentedModule.residue_field(Q)
    first = minimal_free_resolution(k, 5, 14, cache_dir=str(tmp_path))
    assert list(tmp_path.iterdir())
    second = minimal_free_resolution(k, 5, 14, cache_dir=str(tmp_path))
    assert first.twists == second.twists
    assert second.check_d_squared()
    assert resolution_key(k, 5, 14) != resolution_key(k, 6, 14)


def test_rejects_bad_caps():
    Q = parse_ring(P, ["x"])
    with pytest.raises(ValueError):
        minimal_free_resolution(PresentedModule.residue_field(Q), -1, 4)
    with pytest.raises(ValueError):
        minimal_free_resolution(PresentedModule.free(Q, [5]), 2, 4)
