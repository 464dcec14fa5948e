import pytest
from hypothesis import given, settings, strategies as st

from qcipoincare.e_resolution import (HypothesisError, build_UE, check_lemma_equality, koszul_dg_structure,
                                      minimal_e_resolution, q_rank_identity, solve_dg_structure, ue_rank)
from qcipoincare.graded_algebra import PresentedModule, parse_ideal, parse_module, parse_ring
from qcipoincare.harness import generate_instance
from qcipoincare.koszul_dg import build_koszul
from qcipoincare.resolution import minimal_free_resolution, tensor_k_homology

P = 101


def koszul(vars_, base, gens):
    Q = parse_ring(P, vars_, base)
    return Q, build_koszul(Q, parse_ideal(Q, gens))


def test_residue_field_over_koszul_on_a_variable():
    Q, E = koszul(["x", "y"], [], ["x"])
    U = minimal_e_resolution(PresentedModule.residue_field(Q), E, 6, 12)
    assert U.betti() == [1, 1, 0, 0, 0, 0, 0]
    assert U.minimal and U.check_d_squared()
    assert q_rank_identity(U)


def test_ring_over_koszul_in_the_worked_instance():
    Q, E = koszul(["x"], ["x^3"], ["x^2"])
    R = PresentedModule.cyclic(Q, [{(2,): 1}], name="R")
    U = minimal_e_resolution(R, E, 8, 30)
    assert U.betti() == [1, 0, 1, 0, 1, 0, 1, 0, 1]
    assert U.minimal


@pytest.mark.parametrize("vars_,base,gens,expect", [
    (["x"], ["x^3"], ["x^2"], [1, 1, 2, 2, 3, 3, 4]),
    (["x", "y"], [], ["x^2"], [1, 2, 2, 2, 2, 2, 2]),
])
def test_lemma_equality(vars_, base, gens, expect):
    Q, E = koszul(vars_, base, gens)
    got = check_lemma_equality(PresentedModule.residue_field(Q), E, 6, 24)
    assert got.holds and list(got.e_side) == expect


def test_e_equality_hypothesis_enforced():
    Q, E = koszul(["x", "y"], [], ["x"])
    with pytest.raises(HypothesisError):
        check_lemma_equality(PresentedModule.residue_field(Q), E, 4, 10)


def test_module_must_be_killed_by_the_ideal():
    Q, E = koszul(["x", "y"], [], ["x^2"])
    with pytest.raises(HypothesisError):
        minimal_e_resolution(parse_module(Q, [0], [["y"]]), E, 3, 8)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 300))
def test_q_complex_of_e_resolution_computes_tor_over_q(seed):
    """U is a semifree E-resolution, hence a free Q-complex quasi-isomorphic to M."""
    inst = generate_instance("random-homogeneous", seed)
    E = build_koszul(inst.ring, inst.ideal_obj())
    for spec in inst.modules:
        M = inst.module(spec)
        if not M.is_killed_by(E.f):
            continue
        U = minimal_e_resolution(M, E, 5, 16)
        cx = U.as_free_complex()
        assert U.minimal and cx.check_d_squared(16)
        assert cx.exactness_defects() == []
        assert tensor_k_homology(cx, 4) == minimal_free_resolution(M, 4, 16).ranks()[:5]


def test_koszul_structure_is_a_dg_structure():
    _, E = koszul(["x", "y"], [], ["x^2", "y^2"])
    S = koszul_dg_structure(E)
    assert S.verify(10)


def test_solved_structure_gives_exact_ue():
    Q, E = koszul(["x", "y"], [], ["x^2"])
    F = minimal_free_resolution(PresentedModule.residue_field(Q), 4, 12)
    sigma = solve_dg_structure(F, E)
    assert sigma is not None and sigma.verify(12)
    U = build_UE(sigma, E, 4, 12)
    assert U.is_resolution
    assert [U.complex.rank(i) for i in range(5)] == [ue_rank(E, F, i) for i in range(5)]


def test_restricted_e_resolution_as_dg_structure():
    Q, E = koszul(["x"], ["x^3"], ["x^2"])
    U = minimal_e_resolution(PresentedModule.residue_field(Q), E, 5, 20)
    S = U.to_dg_structure()
    assert S.check_homotopy(20) == [] and S.check_exterior(20) == []
