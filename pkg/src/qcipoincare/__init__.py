"""Koszul homology, quasi-complete-intersection certificates and Poincaré series over F_p.

All arithmetic is exact over a prime field; nothing here uses floating point
except the BLAS fast path of ``matmul``, which is exact by a size bound.
"""

from .exactlin import Echelon, PrimeField, kernel_basis, matmul, rank, rref, solve
from .graded_algebra import (
    GradedQuotientRing,
    HomogeneousIdeal,
    NonMinimalGeneratorsError,
    NotAnRModuleError,
    PresentedModule,
    check_nagata_condition,
    check_shamash_condition,
    edim,
    minimize_generators,
    parse_ideal,
    parse_module,
    parse_ring,
)
from .resolution import (
    FreeComplex,
    depth,
    grade,
    minimal_free_resolution,
    oracle_resolution,
    poincare_series,
    tensor_k_homology,
)
from .koszul_dg import (
    GammaAlgebra,
    KoszulAlgebra,
    TateComplex,
    build_koszul,
    build_tate_two_step,
    gamma_hilbert,
    koszul_homology,
    qci_certificate_A,
    qci_certificate_B,
)
from .e_resolution import (
    DgStructure,
    HypothesisError,
    SemifreeDgModule,
    build_UE,
    check_lemma_equality,
    minimal_e_resolution,
    solve_dg_structure,
)
from .series import TruncatedSeries, cmp_coefficientwise, estimate_cx_curv
from .harness import Instance, emit_report, generate_instance, parse_instance, parse_report, run_battery

__version__ = "0.1.0"

__all__ = [
    "DgStructure", "Echelon", "FreeComplex", "GammaAlgebra", "GradedQuotientRing", "HomogeneousIdeal",
    "HypothesisError", "Instance", "KoszulAlgebra", "NonMinimalGeneratorsError", "NotAnRModuleError",
    "PresentedModule", "PrimeField", "SemifreeDgModule", "TateComplex", "TruncatedSeries", "build_UE",
    "build_koszul", "build_tate_two_step", "check_lemma_equality", "check_nagata_condition",
    "check_shamash_condition", "cmp_coefficientwise", "depth", "edim", "emit_report", "estimate_cx_curv",
    "gamma_hilbert", "generate_instance", "grade", "kernel_basis", "koszul_homology", "matmul",
    "minimal_e_resolution", "minimal_free_resolution", "minimize_generators", "oracle_resolution",
    "parse_ideal", "parse_instance", "parse_module", "parse_report", "parse_ring", "poincare_series",
    "qci_certificate_A", "qci_certificate_B", "rank", "rref", "run_battery", "solve", "solve_dg_structure",
    "tensor_k_homology",
]
