"""Walk through x^2 in F_101[x]/(x^3) by hand, then let the battery confirm it.

Run with ``python3 demos/worked_instance.py``.
"""

from qcipoincare import (PresentedModule, build_koszul, build_tate_two_step, koszul_homology,
                         minimal_e_resolution, minimal_free_resolution, parse_ideal, parse_ring,
                         qci_certificate_A, qci_certificate_B)
from pathlib import Path

from qcipoincare.harness import emit_report, parse_instance, run_battery

HMAX, DMAX = 8, 30

Q = parse_ring(101, ["x"], ["x^3"])
I = parse_ideal(Q, ["x^2"])
E = build_koszul(Q, I)

# %% Koszul homology. H_1 is spanned by x*e, a free module over R = F[x]/(x^2).
H = koszul_homology(E, HMAX, DMAX)
for (i, d), dim in sorted(H.dims.items()):
    if dim:
        print(f"dim H_{i}(E)_{d} = {dim}")

# %% Both certificates should agree: one exterior generator, none in homological degree 2.
a = qci_certificate_A(H)
b = qci_certificate_B(build_tate_two_step(E, H, HMAX), HMAX, DMAX)
print("certificate A:", a.verdict, a.report)
print("certificate B:", b.verdict, b.report)

# %% Betti numbers of k over Q and over the Koszul algebra.
k = PresentedModule.residue_field(Q)
print("betti of k over Q :", minimal_free_resolution(k, HMAX, DMAX).ranks())
print("betti of k over E :", minimal_e_resolution(k, E, HMAX, DMAX).betti())

# %% The full battery on the same instance, read from the shipped text file.
inst = parse_instance((Path(__file__).resolve().parents[1] / "docs" / "worked_instance.txt").read_text())
report = run_battery(inst, hmax=HMAX)
print(emit_report(report, "text", include_timing=False))
