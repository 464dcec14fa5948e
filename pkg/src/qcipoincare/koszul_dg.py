"""The Koszul dg algebra on a minimal generating set, its homology, the
two-step Tate complex and the divided power algebra.

Elements of the Koszul algebra E are dictionaries ``{S: Elem}`` mapping a
sorted index tuple ``S`` (the exterior monomial e_S) to its ring coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb

import numpy as np

from .exactlin import Echelon, kernel_basis, matmul, rank, solve
from .exterior import boundary_terms, koszul_maps, subsets, wedge
from .graded_algebra import (
    GradedMap,
    GradedQuotientRing,
    HomogeneousIdeal,
    NonMinimalGeneratorsError,
    elems_to_vector,
    free_dim,
    free_m_span,
    minimize_generators,
    vector_to_elems,
)
from .poly import format_poly
from .resolution import FreeComplex
from .series import TruncatedSeries


def lucas_binomial(n: int, k: int, p: int) -> int:
    """C(n, k) mod p digit by digit."""
    if k < 0 or k > n:
        return 0
    out = 1
    while n or k:
        a, b = n % p, k % p
        if b > a:
            return 0
        out = out * comb(a, b) % p
        n //= p
        k //= p
    return out


class KoszulAlgebra:
    """E = Q<e_1..e_n | d e_i = f_i> on a minimal generating set of I."""

    def __init__(self, ring: GradedQuotientRing, ideal: HomogeneousIdeal):
        self.ring = ring
        self.ideal = ideal
        self.f = ideal.elems
        self.n = ideal.n
        self.bases, self.twists, self.maps = koszul_maps(ring, self.f)
        self.index = [{s: r for r, s in enumerate(b)} for b in self.bases]

    def twist(self, s: tuple) -> int:
        return sum(self.f[i].deg for i in s)

    @cached_property
    def complex(self) -> FreeComplex:
        return FreeComplex(self.ring, self.twists, self.maps, self.n, 0)

    def dim(self, i: int, d: int) -> int:
        if not 0 <= i <= self.n:
            return 0
        return free_dim(self.ring, self.twists[i], d)

    def diff_at(self, i: int, d: int) -> np.ndarray:
        if i <= 0 or i > self.n:
            return np.zeros((self.dim(i - 1, d), self.dim(i, d)), dtype=np.int64)
        return self.maps[i].at(d)

    # element arithmetic ----------------------------------------------------------------

    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for s, a in x.items():
            for t, b in y.items():
                sg, u = wedge(s, t)
                if not sg:
                    continue
                c = self.ring.scale(sg, self.ring.multiply(a, b))
                out[u] = self.ring.add(out[u], c) if u in out else c
        return {u: c for u, c in out.items() if not c.is_zero()}

    def d(self, x: dict) -> dict:
        out: dict = {}
        for s, a in x.items():
            for sg, i, rest in boundary_terms(s):
                c = self.ring.scale(sg, self.ring.multiply(self.f[i], a))
                out[rest] = self.ring.add(out[rest], c) if rest in out else c
        return {u: c for u, c in out.items() if not c.is_zero()}

    def to_vector(self, x: dict, i: int, d: int) -> np.ndarray:
        comps = {self.index[i][s]: e for s, e in x.items()}
        return elems_to_vector(self.ring, self.twists[i], d, comps)

    def from_vector(self, v, i: int, d: int) -> dict:
        return {self.bases[i][r]: e for r, e in vector_to_elems(self.ring, self.twists[i], d, v).items()}

    def basis_element(self, s: tuple) -> dict:
        return {tuple(s): self.ring.one()}

    def format(self, x: dict) -> str:
        if not x:
            return "0"
        parts = []
        for s in sorted(x):
            mono = "*".join(f"e{i + 1}" for i in s) or "1"
            parts.append(f"({self.ring.format(x[s])})*{mono}")
        return " + ".join(parts)

    # invariants ------------------------------------------------------------------------

    def check_d_squared(self) -> bool:
        for i in range(2, self.n + 1):
            for s in self.bases[i]:
                if self.d(self.d(self.basis_element(s))):
                    return False
        return True

    def check_leibniz(self) -> bool:
        p = self.ring.p
        for i in range(self.n + 1):
            for s in self.bases[i]:
                for j in range(self.n + 1):
                    for t in self.bases[j]:
                        es, et = self.basis_element(s), self.basis_element(t)
                        lhs = self.d(self.mul(es, et))
                        rhs = self.mul(self.d(es), et)
                        sign = -1 if len(s) % 2 else 1
                        for u, c in self.mul(es, self.d(et)).items():
                            c = self.ring.scale(sign, c)
                            rhs[u] = self.ring.add(rhs[u], c) if u in rhs else c
                        rhs = {u: c for u, c in rhs.items() if not c.is_zero()}
                        if set(lhs) != set(rhs) or any(not np.array_equal(lhs[u].vec % p, rhs[u].vec % p) for u in lhs):
                            return False
        return True


def build_koszul(ring: GradedQuotientRing, ideal: HomogeneousIdeal, minimize: bool = False) -> KoszulAlgebra:
    ok, witness = ideal.minimality
    if not ok:
        if not minimize:
            raise NonMinimalGeneratorsError(witness, format_poly(ideal.gens[witness], ring.names))
        ideal = minimize_generators(ideal)
    return KoszulAlgebra(ring, ideal)


# ---- homology ---------------------------------------------------------------------------


@dataclass
class KoszulHomology:
    E: KoszulAlgebra
    R: GradedQuotientRing
    hcap: int
    dcap: int
    dims: dict  # (i, d) -> dim H_i(E)_d
    reps: dict  # (i, d) -> rows: cycle representatives of a basis
    boundaries: dict  # (i, d) -> Echelon of boundaries
    cycles: dict  # (i, d) -> rows spanning cycles
    h1_gens: list  # (degree, E-element) minimal generators of H_1
    h1_relations: list  # (degree, R-coefficient vector) minimal relations among them
    products: dict = field(default_factory=dict)  # (a, b) -> coefficients in the H_2 basis
    cap_sensitive: bool = False

    @property
    def m(self) -> int:
        return len(self.h1_gens)

    @property
    def h1_twists(self) -> list[int]:
        return [d for d, _ in self.h1_gens]

    def dim(self, i: int, d: int) -> int:
        return self.dims.get((i, d), 0)

    def top_nonzero(self) -> int:
        return max((i for (i, _), v in self.dims.items() if v), default=0)


def _homology_window(E: KoszulAlgebra, dcap: int) -> int:
    top = E.ring.top_degree(limit=dcap)
    if top is None:
        return dcap
    return min(dcap, top + sum(f.deg for f in E.f))


def koszul_homology(E: KoszulAlgebra, hcap: int, dcap: int, R: GradedQuotientRing | None = None) -> KoszulHomology:
    ring = E.ring
    p = ring.p
    R = R if R is not None else ring.quotient(E.ideal.gens)
    D = _homology_window(E, dcap)
    dims, reps, bds, cyc = {}, {}, {}, {}
    for i in range(0, min(E.n, hcap) + 1):
        for d in range(D + 1):
            n = E.dim(i, d)
            if n == 0:
                continue
            z = kernel_basis(E.diff_at(i, d), p).T if i > 0 else np.eye(n, dtype=np.int64)
            b = Echelon(n, p)
            if i < E.n:
                b.add_span(E.diff_at(i + 1, d).T)
            basis = Echelon(n, p)
            basis.add_span(b.rows)
            chosen = [v for v in z if basis.add(v)]
            cyc[(i, d)] = z
            bds[(i, d)] = b
            if chosen:
                dims[(i, d)] = len(chosen)
                reps[(i, d)] = np.array(chosen)

    # minimal generators of H_1 as a module
    gens = []
    if E.n >= 1:
        zs = {d: cyc[(1, d)] for (i, d) in cyc if i == 1}
        for d in range(D + 1):
            if (1, d) not in cyc:
                continue
            n = E.dim(1, d)
            ech = Echelon(n, p)
            ech.add_span(bds[(1, d)].rows)
            ech.add_span(free_m_span(ring, E.twists[1], zs, d))
            for v in cyc[(1, d)]:
                if ech.add(v):
                    gens.append((d, E.from_vector(v, 1, d)))

    open_ended = ring.top_degree(limit=dcap) is None
    H = KoszulHomology(E, R, hcap, dcap, dims, reps, bds, cyc, gens, [], cap_sensitive=open_ended)
    H.h1_relations = _h1_relations(H, D)
    if E.n >= 2 and hcap >= 2:
        H.products = _product_table(H)
    return H


def _r_multiples(H: KoszulHomology, x: dict, i: int, a: int) -> np.ndarray:
    """Rows: u * x for the degree-``a`` basis monomials u of R, in E_i coordinates."""
    E = H.E
    ring = E.ring
    rows = []
    deg = a + _elem_degree(E, x)
    for mono in H.R.basis(a):
        u = ring.element({mono: 1}, deg=a)
        rows.append(E.to_vector(E.mul({(): u}, x), i, deg))
    if not rows:
        return np.zeros((0, E.dim(i, deg)), dtype=np.int64)
    return np.array(rows)


def _elem_degree(E: KoszulAlgebra, x: dict) -> int:
    s, c = next(iter(x.items()))
    return E.twist(s) + c.deg


def _h1_relations(H: KoszulHomology, D: int) -> list:
    """Minimal R-relations among the chosen H_1 generators, degree by degree."""
    E = H.E
    R = H.R
    p = R.p
    if not H.h1_gens:
        return []
    twists = H.h1_twists
    kers: dict = {}
    rels = []
    for d in range(min(twists), D + 1):
        n = free_dim(R, twists, d)
        if n == 0 or (1, d) not in H.boundaries:
            continue
        cols = []
        for c, z in H.h1_gens:
            if d - c < 0 or R.dim(d - c) == 0:
                continue
            cols.append(_r_multiples(H, z, 1, d - c))
        img = np.concatenate(cols) if cols else np.zeros((0, E.dim(1, d)), dtype=np.int64)
        q, _ = H.boundaries[(1, d)].quotient_map()
        mat = matmul(q, img.T, p)
        k = kernel_basis(mat, p).T
        kers[d] = k
        if k.shape[0] == 0:
            continue
        ech = Echelon(n, p)
        ech.add_span(free_m_span(R, twists, kers, d))
        for v in k:
            if ech.add(v):
                rels.append((d, v))
    return rels


def _coords_in_basis(H: KoszulHomology, i: int, d: int, v) -> np.ndarray:
    """Coordinates of the class of cycle ``v`` in the chosen H_i basis."""
    p = H.E.ring.p
    reps = H.reps.get((i, d))
    if reps is None:
        return np.zeros(0, dtype=np.int64)
    b = H.boundaries[(i, d)]
    q, _ = b.quotient_map()
    a = matmul(q, reps.T, p)
    x = solve(a, matmul(q, v, p), p)
    if x is None:
        raise ArithmeticError("product is not a cycle class")
    return x


def _product_table(H: KoszulHomology) -> dict:
    E = H.E
    out = {}
    for a in range(H.m):
        for b in range(a + 1, H.m):
            ca, za = H.h1_gens[a]
            cb, zb = H.h1_gens[b]
            d = ca + cb
            if d > H.dcap:
                continue
            prod = E.mul(za, zb)
            v = E.to_vector(prod, 2, d) if prod else np.zeros(E.dim(2, d), dtype=np.int64)
            out[(a, b)] = _coords_in_basis(H, 2, d, v).tolist()
    return out


# ---- q.c.i. certificates ----------------------------------------------------------------


@dataclass
class Certificate:
    verdict: bool
    report: dict
    up_to: tuple  # (hmax, dmax) the verdict is valid for


def _lambda_dim(R: GradedQuotientRing, twists: list[int], i: int, d: int) -> int:
    return sum(R.dim(d - sum(twists[j] for j in t)) for t in combinations(range(len(twists)), i))


def qci_certificate_A(H: KoszulHomology) -> Certificate:
    """H_1(E) free over R and the exterior algebra on it maps isomorphically onto H(E)."""
    E, R = H.E, H.R
    p = R.p
    D = _homology_window(E, H.dcap)
    tw = H.h1_twists
    report: dict = {"m": H.m, "h1_twists": tw, "h1_relations": len(H.h1_relations)}
    free_ok = not H.h1_relations
    for d in range(D + 1):
        if H.dim(1, d) != _lambda_dim(R, tw, 1, d):
            free_ok = False
            report.setdefault("h1_hilbert_mismatch", []).append(d)
    report["h1_free"] = free_ok
    wedge_ok = True
    for i in range(2, min(E.n, H.hcap) + 1):
        for d in range(D + 1):
            want = _lambda_dim(R, tw, i, d)
            if H.dim(i, d) != want:
                wedge_ok = False
                report.setdefault("wedge_dim_mismatch", []).append([i, d, H.dim(i, d), want])
                continue
            if not want:
                continue
            # the products q * z_T together with boundaries must reach every cycle
            span = Echelon(E.dim(i, d), p)
            span.add_span(H.boundaries[(i, d)].rows)
            for t in combinations(range(H.m), i):
                ct = sum(tw[j] for j in t)
                if d - ct < 0:
                    continue
                zt = H.h1_gens[t[0]][1]
                for j in t[1:]:
                    zt = E.mul(zt, H.h1_gens[j][1])
                if zt:
                    span.add_span(_r_multiples(H, zt, i, d - ct))
            if any(not span.contains(z) for z in H.cycles[(i, d)]):
                wedge_ok = False
                report.setdefault("wedge_span_failure", []).append([i, d])
    report["wedge_iso"] = wedge_ok
    return Certificate(free_ok and wedge_ok, report, (min(E.n, H.hcap), H.dcap))


def _compositions(m: int, w: int):
    if m == 0:
        if w == 0:
            yield ()
        return
    for a in range(w, -1, -1):
        for rest in _compositions(m - 1, w - a):
            yield (a,) + rest


class TateComplex:
    """Q<X_1, X_2>: exterior e_1..e_n and divided powers y_1..y_m with d y_j = z_j."""

    def __init__(self, E: KoszulAlgebra, cycles: list, hmax: int):
        self.E = E
        self.ring = E.ring
        self.z = [z for _, z in cycles]
        self.ytw = [c for c, _ in cycles]
        self.m = len(cycles)
        self.hmax = hmax
        self.bases = []
        for i in range(hmax + 1):
            b = []
            for w in range(i // 2 + 1):
                k = i - 2 * w
                if k > E.n:
                    continue
                for h in _compositions(self.m, w):
                    for s in subsets(E.n, k):
                        b.append((s, h))
            self.bases.append(b)
        self.twists = [[E.twist(s) + sum(a * c for a, c in zip(h, self.ytw)) for s, h in b] for b in self.bases]
        self.maps: list = [None]
        for i in range(1, hmax + 1):
            idx = {key: r for r, key in enumerate(self.bases[i - 1])}
            entries: dict = {}
            for c, (s, h) in enumerate(self.bases[i]):
                for sg, j, rest in boundary_terms(s):
                    entries[(idx[(rest, h)], c)] = self.ring.scale(sg, E.f[j])
                sign = -1 if len(s) % 2 else 1
                for j in range(self.m):
                    if h[j] == 0:
                        continue
                    lower = h[:j] + (h[j] - 1,) + h[j + 1:]
                    for t, coeff in self.z[j].items():
                        sg, u = wedge(s, t)
                        if not sg:
                            continue
                        key = (idx[(u, lower)], c)
                        val = self.ring.scale(sign * sg, coeff)
                        entries[key] = self.ring.add(entries[key], val) if key in entries else val
            self.maps.append(GradedMap(self.ring, self.twists[i], self.twists[i - 1], entries))

    @cached_property
    def complex(self) -> FreeComplex:
        return FreeComplex(self.ring, self.twists, self.maps, self.hmax, 0)

    def rank(self, i: int) -> int:
        return len(self.bases[i])

    def check_d_squared(self, dmax: int) -> bool:
        return self.complex.check_d_squared(dmax)

    def is_minimal(self) -> bool:
        return self.complex.entries_in_m()


def build_tate_two_step(E: KoszulAlgebra, H: KoszulHomology, hmax: int) -> TateComplex:
    return TateComplex(E, H.h1_gens, hmax)


def qci_certificate_B(F: TateComplex, hmax: int, dmax: int) -> Certificate:
    """Is the two-step Tate complex the minimal free resolution of R (through the caps)?"""
    ring = F.ring
    p = ring.p
    R = ring.quotient(F.E.ideal.gens)
    cx = F.complex
    report: dict = {"minimal": F.is_minimal(), "ranks": [F.rank(i) for i in range(F.hmax + 1)]}
    top = ring.top_degree(limit=dmax)
    bad = []
    for d in range(dmax + 1):
        h0 = cx.dim(0, d) - (rank(cx.diff_at(1, d), p) if F.hmax >= 1 and cx.dim(1, d) else 0)
        if h0 != R.dim(d):
            bad.append((0, d))
    upto = min(hmax, F.hmax - 1)
    for i in range(1, upto + 1):
        hi = dmax if top is None else min(dmax, max(F.twists[i] + [0]) + top)
        for d in range(hi + 1):
            if cx.homology_dim(i, d):
                bad.append((i, d))
    report["homology_defects"] = bad
    ok = report["minimal"] and not bad
    return Certificate(ok, report, (upto, dmax))


# ---- divided powers ---------------------------------------------------------------------


class GammaAlgebra:
    """Free divided power algebra on n variables of homological degree 2."""

    def __init__(self, n: int, p: int):
        self.n = n
        self.p = p

    def basis(self, j: int) -> list:
        """Exponent vectors H with |H| = j (homological degree 2j)."""
        return list(_compositions(self.n, j))

    def product(self, h1: tuple, h2: tuple) -> tuple[int, tuple]:
        c = 1
        for a, b in zip(h1, h2):
            c = c * lucas_binomial(a + b, a, self.p) % self.p
        return c, tuple(a + b for a, b in zip(h1, h2))

    def chi_matrix(self, i: int, j: int) -> np.ndarray:
        """Action of chi_i: Gamma_{2j} -> Gamma_{2j-2} (lower the i-th exponent)."""
        src, tgt = self.basis(j), self.basis(j - 1)
        idx = {h: r for r, h in enumerate(tgt)}
        out = np.zeros((len(tgt), len(src)), dtype=np.int64)
        for c, h in enumerate(src):
            if h[i]:
                out[idx[h[:i] + (h[i] - 1,) + h[i + 1:]], c] = 1
        return out


def gamma_hilbert(n: int, D: int) -> TruncatedSeries:
    """Hilbert series of Gamma on n variables through t^D, by counting basis monomials."""
    g = GammaAlgebra(n, 2)
    return TruncatedSeries.from_list([len(g.basis(k // 2)) if k % 2 == 0 else 0 for k in range(D + 1)], D)
