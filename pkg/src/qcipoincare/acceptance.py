"""The acceptance battery: eleven exact checks, one line of output each.

Every check is exact over F_101; there is no tolerance anywhere.  Run it with
``python -m qcipoincare selftest`` or through ``tests/test_acceptance.py``.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from math import comb

import numpy as np

from .graded_algebra import PresentedModule, check_shamash_condition, edim, parse_ideal, parse_module, parse_ring
from .harness import emit_report, generate_instance, parse_instance, run_battery
from .koszul_dg import (build_koszul, build_tate_two_step, gamma_hilbert, koszul_homology, qci_certificate_A,
                        qci_certificate_B)
from .e_resolution import build_UE, minimal_e_resolution, solve_dg_structure
from .resolution import grade, minimal_free_resolution, oracle_resolution, tensor_k_homology
from .series import (EQUAL, FAILS, INCONCLUSIVE, TruncatedSeries, check_theorem_A, one_minus_t, one_minus_t2,
                     one_plus_t)

P = 101
RANDOM_CERT_SEEDS = range(25)
SWEEP_SEEDS = range(100, 150)
ORACLE_SEEDS = range(20)

WORKED_INSTANCE = """\
char: 101
vars: x:1
base_relations: [x^3]
ideal: [x^2]
module k:
  twists: [0]
  relations:
    [x]
"""


@dataclass
class Outcome:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        flag = "PASS" if self.ok else "FAIL"
        return f"criterion {self.number:2d} [{flag}] {self.title}: {self.detail} ({self.seconds:.1f}s)"


def _series(cx, hmax: int) -> TruncatedSeries:
    return TruncatedSeries.from_list(cx.ranks()[: hmax + 1], hmax, cap_sensitive=cx.cap_sensitive)


def _pq(module, hmax, dmax, ring=None) -> TruncatedSeries:
    return _series(minimal_free_resolution(module, hmax, dmax, ring=ring), hmax)


# ---- 1 ----------------------------------------------------------------------------------


def criterion_1() -> tuple[bool, str]:
    Q = parse_ring(P, ["x", "y", "z"])
    ideal = parse_ideal(Q, ["x", "y", "z"])
    betti = _pq(PresentedModule.residue_field(Q), 4, 8).coeffs
    g = grade(ideal, 8)
    ok = list(betti[:4]) == [comb(3, i) for i in range(4)] and betti[4] == 0 and g == 3
    return ok, f"betti={list(betti[:4])}, grade={g}"


# ---- 2 ----------------------------------------------------------------------------------


def criterion_2() -> tuple[bool, str]:
    Q = parse_ring(P, ["x", "y"])
    R = Q.quotient(parse_ideal(Q, ["x*y"]).gens)
    M = parse_module(Q, [0], [["x"]])
    hmax = 20
    pq = _pq(M, hmax, 40)
    pr = _pq(M.over(R), hmax, 40, ring=R)
    ok = (pq == one_plus_t(hmax) and all(c == 1 for c in pr) and not pr.cap_sensitive
          and pq == pr * one_minus_t2(hmax))
    return ok, f"P^Q={pq}, P^R all ones to t^{hmax}: {all(c == 1 for c in pr)}"


# ---- 3 and 4 ----------------------------------------------------------------------------


def _koszul_vs_base(gen: str, hmax: int = 12, dmax: int = 30):
    Q = parse_ring(P, ["x", "y"])
    E = build_koszul(Q, parse_ideal(Q, [gen]))
    k = PresentedModule.residue_field(Q)
    pe = minimal_e_resolution(k, E, hmax, dmax).poincare_series()
    pq = _pq(k, hmax, dmax)
    return pe, pq


def criterion_3() -> tuple[bool, str]:
    hmax = 12
    pe, pq = _koszul_vs_base("x^2", hmax)
    closed = one_plus_t(hmax) ** 2 * one_minus_t2(hmax) ** (-1)
    ok = pe == closed and pe == pq * one_minus_t2(hmax) ** (-1) and not pe.cap_sensitive
    return ok, f"P^E[k]={pe}"


def criterion_4() -> tuple[bool, str]:
    hmax = 12
    pe, pq = _koszul_vs_base("x", hmax)
    ok = pe == one_plus_t(hmax) and pq == pe * one_plus_t(hmax) and not pe.cap_sensitive
    return ok, f"P^E[k]={pe}, P^Q[k]={pq}"


# ---- 5, 7, 8 ----------------------------------------------------------------------------


@dataclass
class Certified:
    label: str
    agree: bool
    qci: bool
    n: int
    m: int
    edim_q: int
    edim_r: int
    pre: TruncatedSeries | None = None
    pkq: TruncatedSeries | None = None
    pkr: TruncatedSeries | None = None


def _certify(label: str, ideal, hmax: int = 12, dmax: int = 30) -> Certified:
    Q = ideal.ring
    R = Q.quotient(ideal.gens)
    E = build_koszul(Q, ideal)
    H = koszul_homology(E, ideal.n, dmax, R=R)
    a = qci_certificate_A(H)
    b = qci_certificate_B(build_tate_two_step(E, H, hmax + 1), hmax, dmax)
    out = Certified(label, a.verdict == b.verdict, a.verdict, ideal.n, H.m, edim(Q), edim(R))
    if a.verdict and b.verdict:
        r_mod = PresentedModule.cyclic(Q, ideal.gens, name="R")
        out.pre = minimal_e_resolution(r_mod, E, hmax, dmax).poincare_series()
        k = PresentedModule.residue_field(Q)
        out.pkq = _pq(k, hmax, dmax)
        out.pkr = _pq(k.over(R), hmax, dmax, ring=R)
    return out


_CERT_CACHE: list | None = None


def certified_instances() -> list[Certified]:
    """The power family x^a in F[x]/(x^b) and the seeded random instances, certified once."""
    global _CERT_CACHE
    if _CERT_CACHE is None:
        out = []
        for b in range(2, 7):
            for a in range(1, b):
                Q = parse_ring(P, ["x"], [f"x^{b}"])
                out.append(_certify(f"x^{a} in x^{b}", parse_ideal(Q, [f"x^{a}"])))
        for seed in RANDOM_CERT_SEEDS:
            inst = generate_instance("random-homogeneous", seed)
            out.append(_certify(f"random seed {seed}", inst.ideal_obj()))
        _CERT_CACHE = out
    return _CERT_CACHE


def criterion_5() -> tuple[bool, str]:
    cs = certified_instances()
    bad = [c.label for c in cs if not c.agree]
    nq = sum(c.qci for c in cs)
    return not bad, f"{len(cs)} instances, {nq} q.c.i., {len(cs) - nq} not; disagreements: {bad or 'none'}"


def criterion_7() -> tuple[bool, str]:
    cs = [c for c in certified_instances() if c.qci]
    bad = [c.label for c in cs if c.pre != one_minus_t2(c.pre.order) ** (-c.m) or c.pre.cap_sensitive]
    return not bad, f"P_R^E = 1/(1-t^2)^m on {len(cs) - len(bad)}/{len(cs)} certified instances"


def criterion_8() -> tuple[bool, str]:
    """The residue-field identity, with the edim correction where a generator is linear.

    Literal form P_k^Q = P_k^R (1-t²)^(n-m) on every instance with edim R = edim Q.
    On instances where edim drops the literal form cannot hold (x in F[x]/(x^2)
    gives R = k); there the identity multiplied by (1-t)^(edim Q - edim R) is
    checked, and the literal form is recorded as differing.
    """
    cs = [c for c in certified_instances() if c.qci]
    literal_bad, corrected_bad, dropped = [], [], 0
    for c in cs:
        D = c.pkq.order
        rhs = c.pkr * one_minus_t2(D) ** (c.n - c.m)
        lhs = c.pkq * one_minus_t(D) ** (c.edim_q - c.edim_r)
        if lhs != rhs or c.pkq.cap_sensitive or c.pkr.cap_sensitive:
            corrected_bad.append(c.label)
        if c.edim_q == c.edim_r:
            if c.pkq != rhs:
                literal_bad.append(c.label)
        else:
            dropped += 1
    ok = not literal_bad and not corrected_bad
    return ok, (f"literal form on {len(cs) - dropped} instances with edim preserved, "
                f"edim-corrected form on all {len(cs)} ({dropped} with a linear generator); "
                f"failures: {literal_bad + corrected_bad or 'none'}")


# ---- 6 ----------------------------------------------------------------------------------


def _grade_factor_case(Q, gens, hmax: int, dmax: int):
    ideal = parse_ideal(Q, gens)
    R = Q.quotient(ideal.gens)
    E = build_koszul(Q, ideal)
    H = koszul_homology(E, ideal.n, dmax, R=R)
    cert = qci_certificate_A(H).verdict
    k = PresentedModule.residue_field(Q)
    pkq = _pq(k, hmax, dmax)
    pkr = _pq(k.over(R), hmax, dmax, ring=R)
    pke = minimal_e_resolution(k, E, hmax, dmax).poincare_series()
    r = check_theorem_A(pmq=pkq, pmr=pkr, pkq=pkq, pkr=pkr, pme=pke, grade=grade(ideal, dmax), m=H.m)
    return cert and check_shamash_condition(ideal, k), r


def criterion_6() -> tuple[bool, str]:
    Q = parse_ring(P, ["x"], ["x^3"])
    cert1, r1 = _grade_factor_case(Q, ["x^2"], 20, 30)
    Q2 = parse_ring(P, ["x", "y"], ["x^3"])
    cert2, r2 = _grade_factor_case(Q2, ["x^2", "y^2"], 10, 30)
    ok = (cert1 and cert2 and r1.verdict == EQUAL and r1.details["orientation"] == "both"
          and r2.verdict == EQUAL and r2.details["grade"] >= 1)
    return ok, (f"x^2 in F[x]/(x^3): {r1.verdict}, orientation {r1.details['orientation']}; "
                f"(x^2, y^2) in F[x,y]/(x^3), grade {r2.details['grade']}: {r2.verdict}, "
                f"valid orientation {r2.details['orientation']}")


# ---- 9 ----------------------------------------------------------------------------------


def criterion_9() -> tuple[bool, str]:
    kinds: dict = {}
    bad = []
    total = 0
    for seed in SWEEP_SEEDS:
        inst = generate_instance("random-homogeneous", seed)
        rep = run_battery(inst, hmax=6, dmax=18, checks=["theorem-B", "large", "inert", "qci"])
        v = rep.certificate["verdict"]
        kinds[v] = kinds.get(v, 0) + 1
        for r in rep.results:
            total += 1
            if r.verdict in (FAILS, INCONCLUSIVE):
                bad.append((seed, r.name, r.verdict))
    mixed = len(kinds) == 3
    summary = ", ".join(f"{v}: {c}" for v, c in sorted(kinds.items()))
    return not bad and mixed, f"{len(SWEEP_SEEDS)} instances ({summary}), {total} checks, failures: {bad or 'none'}"


# ---- 10 ---------------------------------------------------------------------------------


def random_module(seed: int) -> PresentedModule:
    """A module with one or two generators over the ring of a random instance."""
    rng = np.random.default_rng(10_000 + seed)
    inst = generate_instance("random-homogeneous", seed)
    ring = inst.ring.quotient(inst.ideal_obj().gens) if rng.integers(0, 2) else inst.ring
    mons = [m for d in (1, 2) for m in ring.monomials(d)]
    ngens = int(rng.integers(1, 3))
    twists = sorted(int(t) for t in rng.integers(0, 2, ngens))
    ncols = int(rng.integers(1, 3))
    rows = [[] for _ in range(ngens)]
    for _ in range(ncols):
        deg = int(rng.integers(1, 3)) + max(twists)
        for i, tw in enumerate(twists):
            mdeg = deg - tw
            terms = [m for m in mons if sum(m) == mdeg]
            picks = rng.choice(len(terms), size=min(2, len(terms)), replace=False) if terms else []
            poly = {terms[int(j)]: int(rng.integers(1, P)) for j in picks}
            rows[i].append(poly if rng.integers(0, 3) else {})
    # a column that is zero in every row carries no relation
    keep = [c for c in range(ncols) if any(rows[i][c] for i in range(ngens))]
    rows = [[rows[i][c] for c in keep] for i in range(ngens)]
    return PresentedModule(ring, twists, rows, name=f"M{seed}")


def criterion_10() -> tuple[bool, str]:
    hmax, dmax = 8, 20
    bad = []
    for seed in ORACLE_SEEDS:
        M = random_module(seed)
        minimal = minimal_free_resolution(M, hmax, dmax)
        oracle = oracle_resolution(M, hmax, dmax)
        if minimal.ranks()[: hmax + 1] != tensor_k_homology(oracle, hmax):
            bad.append(seed)
    return not bad, f"{len(ORACLE_SEEDS)} modules, i <= {hmax}; mismatches: {bad or 'none'}"


# ---- 11 ---------------------------------------------------------------------------------


def criterion_11() -> tuple[bool, str]:
    problems = []
    # Koszul and Tate complexes on the certified family and a few random instances
    cases = [(parse_ring(P, ["x"], [f"x^{b}"]), [f"x^{a}"]) for b in range(2, 6) for a in range(1, b)]
    for seed in range(10):
        inst = generate_instance("random-homogeneous", seed)
        cases.append((inst.ring, inst.ideal))
    for Q, gens in cases:
        ideal = parse_ideal(Q, gens)
        E = build_koszul(Q, ideal)
        if not (E.check_d_squared() and E.check_leibniz()):
            problems.append(f"koszul {gens}")
        H = koszul_homology(E, ideal.n, 20, R=Q.quotient(ideal.gens))
        T = build_tate_two_step(E, H, 7)
        if not T.check_d_squared(20):
            problems.append(f"tate d^2 {gens}")
        if T.is_minimal() and not T.complex.entries_in_m():
            problems.append(f"tate minimality {gens}")
    # minimal resolutions and semifree E-resolutions
    Q = parse_ring(P, ["x", "y"])
    E = build_koszul(Q, parse_ideal(Q, ["x^2"]))
    k = PresentedModule.residue_field(Q)
    F = minimal_free_resolution(k, 4, 12)
    if not (F.check_d_squared() and F.entries_in_m()):
        problems.append("free resolution of k")
    U = minimal_e_resolution(k, E, 6, 16)
    if not U.check_d_squared():
        problems.append("E-resolution d^2")
    if U.minimal and any(c.deg == 0 for ent in U.differential_entries().values() for s, c in ent.items() if not s):
        problems.append("E-resolution minimality")
    # U_E(F) from a solved dg structure
    sigma = solve_dg_structure(F, E)
    if sigma is None or not sigma.verify(12):
        problems.append("dg structure")
    else:
        ue = build_UE(sigma, E, 4, 12)
        if ue.d_squared_defects or ue.homology_defects:
            problems.append("U_E complex")
    # divided powers against the exterior side
    for n in range(9):
        if gamma_hilbert(n, 16) * one_minus_t2(16) ** n != TruncatedSeries.one(16):
            problems.append(f"gamma {n}")
    # determinism of the machine report
    inst = parse_instance(WORKED_INSTANCE)
    texts = {emit_report(run_battery(parse_instance(inst.to_text()), hmax=8), "machine", include_timing=False)
             for _ in range(2)}
    if len(texts) != 1:
        problems.append("machine report differs between runs")
    return not problems, f"problems: {problems or 'none'}"


CRITERIA = {
    1: ("Koszul complex on x,y,z", criterion_1),
    2: ("hypersurface xy with M = Q/(x)", criterion_2),
    3: ("Koszul vs base, I = (x^2), M = k", criterion_3),
    4: ("Koszul vs base, I = (x), M = k", criterion_4),
    5: ("q.c.i. certificates agree", criterion_5),
    6: ("inertness and grade factor", criterion_6),
    7: ("R over the Koszul algebra", criterion_7),
    8: ("residue field over a q.c.i.", criterion_8),
    9: ("random inequality sweep", criterion_9),
    10: ("oracle equivalence", criterion_10),
    11: ("structural invariants", criterion_11),
}


def run_criterion(number: int) -> Outcome:
    title, fn = CRITERIA[number]
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failure, reported on the line
        ok, detail = False, f"raised {type(exc).__name__}: {exc}"
    return Outcome(number, title, bool(ok), detail, time.perf_counter() - start)


def run_all(only=None, out=sys.stdout) -> bool:
    numbers = sorted(only) if only else sorted(CRITERIA)
    results = []
    for num in numbers:
        res = run_criterion(num)
        results.append(res)
        print(res.line(), file=out, flush=True)
    passed = sum(r.ok for r in results)
    print(f"{passed}/{len(results)} criteria pass", file=out)
    return passed == len(results)


__all__ = ["CRITERIA", "Outcome", "certified_instances", "random_module", "run_all", "run_criterion"]
