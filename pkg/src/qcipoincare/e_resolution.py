"""Semifree resolutions over the Koszul dg algebra E, dg E-structures on
Q-free resolutions, and the complex U_E(F) = E ⊗ Γ ⊗ F.

A semifree E-module U = E ⊗_Q V is stored by its generators u_a (homological
degree h_a, internal degree deg_a) and the boundaries ∂u_a, each an element of
U written as ``{(S, b): coefficient in Q}``.  As a complex of free Q-modules, U
has basis e_S u_a and

    ∂(e_S u_a) = ∂(e_S) u_a + (-1)^|S| e_S ∂(u_a).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exactlin import Echelon, kernel_basis, matmul, solve
from .exterior import boundary_terms, subsets, wedge
from .graded_algebra import (
    GradedMap,
    GradedQuotientRing,
    PresentedModule,
    check_shamash_condition,
    elems_to_vector,
    free_dim,
    free_m_span,
    free_scalar_action,
    minimal_generators,
    vector_to_elems,
)
from .koszul_dg import KoszulAlgebra, _compositions, gamma_hilbert
from .resolution import FreeComplex, minimal_free_resolution, syzygy_reach
from .series import TruncatedSeries


class HypothesisError(ValueError):
    pass


def module_over_q(module: PresentedModule, E: KoszulAlgebra) -> PresentedModule:
    """Present ``module`` over Q, adding I * cover to the relations when it lives over a quotient."""
    Q = E.ring
    if module.ring is Q:
        return module
    rows = module.relation_rows()
    ncov = len(module.cover_twists)
    for j in range(ncov):
        for f in E.ideal.gens:
            for i in range(ncov):
                rows[i].append(dict(f) if i == j else {})
    return PresentedModule(Q, module.cover_twists, rows, name=module.name)


# ---- semifree modules -------------------------------------------------------------------


@dataclass
class SemifreeDgModule:
    E: KoszulAlgebra
    module: PresentedModule
    gens: list  # (homological degree, internal degree)
    boundary: list  # per generator: {(S, b): Elem}
    augmentation: list  # vectors into the cover, one per homological-degree-0 generator
    hmax: int
    dmax: int
    cap_sensitive: bool = False
    complete: bool = False
    notes: list = field(default_factory=list)

    @property
    def ring(self) -> GradedQuotientRing:
        return self.E.ring

    def betti(self) -> list[int]:
        out = [0] * (self.hmax + 1)
        for h, _ in self.gens:
            out[h] += 1
        return out

    def poincare_series(self) -> TruncatedSeries:
        return TruncatedSeries.from_list(self.betti(), self.hmax, cap_sensitive=self.cap_sensitive)

    @property
    def minimal(self) -> bool:
        """Every e_∅-coefficient of every boundary has positive internal degree."""
        return all(c.deg > 0 for bd in self.boundary for (s, _), c in bd.items() if not s)

    def differential_entries(self) -> dict:
        """(b, a) -> E-element {S: Elem}: the coefficient of u_b in ∂u_a."""
        out: dict = {}
        for a, bd in enumerate(self.boundary):
            for (s, b), c in bd.items():
                out.setdefault((b, a), {})[s] = c
        return out

    # the underlying Q-complex -----------------------------------------------------------

    def q_basis(self, j: int, upto: int | None = None) -> list:
        """Pairs (S, a) with |S| + h_a = j, using generators of degree <= ``upto``."""
        upto = self.hmax if upto is None else upto
        out = []
        for a, (h, _) in enumerate(self.gens):
            if h > upto or h > j or j - h > self.E.n:
                continue
            out.extend((s, a) for s in subsets(self.E.n, j - h))
        return out

    def q_twists(self, basis) -> list[int]:
        return [self.E.twist(s) + self.gens[a][1] for s, a in basis]

    def q_differential(self, j: int, upto: int | None = None) -> GradedMap:
        return _u_differential(self.E, self.gens, self.boundary, j, upto if upto is not None else self.hmax)

    def as_free_complex(self, top: int | None = None) -> FreeComplex:
        """U as a complex of free Q-modules through homological degree ``top`` (default hmax)."""
        top = self.hmax if top is None else top
        ring = self.ring
        twists = [self.q_twists(self.q_basis(j)) for j in range(top + 1)]
        diffs = [None] + [self.q_differential(j) for j in range(1, top + 1)]
        aug = _augmentation_map(ring, self.module.cover_twists, self.gens, self.augmentation, self.q_basis(0))
        return FreeComplex(ring, twists, diffs, top, self.dmax, module=self.module, augmentation=aug,
                           cap_sensitive=self.cap_sensitive)

    def e_action(self, i: int, j: int) -> GradedMap:
        """Left multiplication by e_i from U_j to U_{j+1} (source twists raised by deg f_i)."""
        src = self.q_basis(j)
        tgt = self.q_basis(j + 1)
        idx = {key: r for r, key in enumerate(tgt)}
        c = self.E.f[i].deg
        entries = {}
        for col, (s, a) in enumerate(src):
            sg, u = wedge((i,), s)
            if sg:
                entries[(idx[(u, a)], col)] = self.ring.scale(sg, self.ring.one())
        return GradedMap(self.ring, [t + c for t in self.q_twists(src)], self.q_twists(tgt), entries)

    def to_dg_structure(self) -> "DgStructure":
        """U restricted to Q, with e_i acting by left multiplication."""
        cx = self.as_free_complex()
        sig = [[self.e_action(i, j) for j in range(self.hmax)] for i in range(self.E.n)]
        return DgStructure(cx, self.E, sig)

    def check_d_squared(self, dmax: int | None = None) -> bool:
        return self.as_free_complex().check_d_squared(self.dmax if dmax is None else dmax)


def _u_basis(E: KoszulAlgebra, gens, j: int, upto: int) -> list:
    out = []
    for a, (h, _) in enumerate(gens):
        if h <= upto and h <= j and j - h <= E.n:
            out.extend((s, a) for s in subsets(E.n, j - h))
    return out


def _u_differential(E: KoszulAlgebra, gens, boundary, j: int, upto: int) -> GradedMap:
    ring = E.ring
    src = _u_basis(E, gens, j, upto)
    tgt = _u_basis(E, gens, j - 1, upto)
    idx = {key: r for r, key in enumerate(tgt)}
    entries: dict = {}

    def put(key, val):
        entries[key] = ring.add(entries[key], val) if key in entries else val

    for col, (s, a) in enumerate(src):
        for sg, i, rest in boundary_terms(s):
            put((idx[(rest, a)], col), ring.scale(sg, E.f[i]))
        sign = -1 if len(s) % 2 else 1
        for (t, b), c in boundary[a].items():
            sg, u = wedge(s, t)
            if sg:
                put((idx[(u, b)], col), ring.scale(sign * sg, c))
    tw = lambda basis: [E.twist(s) + gens[a][1] for s, a in basis]  # noqa: E731
    return GradedMap(ring, tw(src), tw(tgt), entries)


def _augmentation_map(ring, cover_twists, gens, aug_vectors, basis0) -> GradedMap:
    entries = {}
    src = []
    for col, (s, a) in enumerate(basis0):
        d = gens[a][1]
        src.append(d)
        for i, e in vector_to_elems(ring, cover_twists, d, aug_vectors[a]).items():
            entries[(i, col)] = e
    return GradedMap(ring, src, cover_twists, entries)


def minimal_e_resolution(module: PresentedModule, E: KoszulAlgebra, hmax: int, dmax: int,
                         ceiling: int | None = None) -> SemifreeDgModule:
    """Minimal semifree resolution of an R-module over E by killing cycles.

    At homological degree i the cycles of U_{i-1} are computed per internal
    degree, and new generators are chosen on a complement of
    boundaries + m * cycles, which keeps the result minimal.
    """
    module = module_over_q(module, E)
    if not module.is_killed_by(E.f):
        raise HypothesisError(f"module {module.name} is not killed by the ideal")
    ceiling = dmax + 20 if ceiling is None else ceiling
    res = _e_resolve(module, E, hmax, dmax)
    while res.cap_sensitive and dmax + 10 <= ceiling:
        dmax += 10
        res = _e_resolve(module, E, hmax, dmax)
        res.notes.append(f"internal-degree cap raised to {dmax}")
    return res


def _e_resolve(module: PresentedModule, E: KoszulAlgebra, hmax: int, dmax: int) -> SemifreeDgModule:
    ring = E.ring
    p = ring.p
    top = ring.top_degree(limit=dmax)
    complete = top is not None
    g0 = minimal_generators(module, min(dmax, max(module.cover_twists, default=0)))
    gens = [(0, d) for d in g0.degrees]
    boundary: list = [{} for _ in gens]
    aug = list(g0.vectors)
    cap_sensitive = g0.cap_sensitive
    lo_twist = min(module.cover_twists, default=0)
    reach = syzygy_reach(ring, *(f.deg for f in E.f), *(d - lo_twist for d in module.relation_degrees))
    if top is None and max(module.relation_degrees, default=0) > dmax:
        cap_sensitive = True
    for i in range(1, hmax + 1):
        src_basis = _u_basis(E, gens, i - 1, i - 1)
        if not src_basis:
            continue
        twists = [E.twist(s) + gens[a][1] for s, a in src_basis]
        if i == 1:
            amap = _augmentation_map(ring, module.cover_twists, gens, aug, src_basis)
            phi = lambda d, amap=amap: matmul(module.quotient_map(d), amap.at(d), p)  # noqa: E731
        else:
            phi = _u_differential(E, gens, boundary, i - 1, i - 1).at
        bmap = _u_differential(E, gens, boundary, i, i - 1)
        hi = dmax
        if top is not None:
            hi = min(dmax, max(twists) + top)
            if max(twists) + top > dmax:
                complete = False
                cap_sensitive = True
        cycles: dict = {}
        fresh = []
        for d in range(min(twists), hi + 1):
            n = free_dim(ring, twists, d)
            if n == 0:
                continue
            mat = phi(d)
            z = kernel_basis(mat, p).T if mat.shape[0] else np.eye(n, dtype=np.int64)
            cycles[d] = z
            if z.shape[0] == 0:
                continue
            ech = Echelon(n, p)
            if bmap.src:
                ech.add_span(bmap.at(d).T)
            ech.add_span(free_m_span(ring, twists, cycles, d))
            for v in z:
                if ech.add(v):
                    fresh.append((d, v))
        if top is None and (any(d >= dmax - 1 for d, _ in fresh) or (i > 1 and max(twists) + reach > dmax)):
            cap_sensitive = True
        for d, v in fresh:
            gens.append((i, d))
            boundary.append({src_basis[r]: e for r, e in vector_to_elems(ring, twists, d, v).items()})
            aug.append(None)
    return SemifreeDgModule(E, module, gens, boundary, aug, hmax, dmax, cap_sensitive, complete)


def e_poincare_series(module: PresentedModule, E: KoszulAlgebra, hmax: int, dmax: int) -> TruncatedSeries:
    if all(module.dim(d) == 0 for d in range(dmax + 1)):
        return TruncatedSeries.zero(hmax)
    return minimal_e_resolution(module, E, hmax, dmax).poincare_series()


# ---- dg E-structures on Q-resolutions ----------------------------------------------------


@dataclass
class DgStructure:
    """A Q-free complex F with degree +1 maps sigma[i][j]: F_j -> F_{j+1} (the e_i-actions)."""

    complex: FreeComplex
    E: KoszulAlgebra
    sigma: list

    def levels(self) -> int:
        return min((len(s) for s in self.sigma), default=0)

    def sigma_at(self, i: int, j: int, d: int) -> np.ndarray:
        """Matrix of sigma_i from (F_j)_d to (F_{j+1})_{d + deg f_i}."""
        c = self.E.f[i].deg
        cx = self.complex
        if j < 0 or j >= len(self.sigma[i]):
            return np.zeros((cx.dim(j + 1, d + c), cx.dim(j, d)), dtype=np.int64)
        return self.sigma[i][j].at(d + c)

    def check_homotopy(self, dmax: int) -> list:
        """Bidegrees (i, j, d) where sigma_i ∂ + ∂ sigma_i != f_i."""
        cx, E, p = self.complex, self.E, self.E.ring.p
        bad = []
        for i in range(E.n):
            c = E.f[i].deg
            for j in range(self.levels()):
                for d in range(dmax + 1):
                    if cx.dim(j, d) == 0:
                        continue
                    lhs = matmul(cx.diff_at(j + 1, d + c), self.sigma_at(i, j, d), p)
                    if j > 0:
                        lhs = (lhs + matmul(self.sigma_at(i, j - 1, d), cx.diff_at(j, d), p)) % p
                    want = free_scalar_action(E.ring, cx.twists[j], E.f[i], d)
                    if not np.array_equal(lhs % p, want % p):
                        bad.append((i, j, d))
        return bad

    def check_exterior(self, dmax: int) -> list:
        """Bidegrees (i, k, j, d) where sigma_i sigma_k + sigma_k sigma_i != 0 (or sigma_i^2 != 0)."""
        cx, E, p = self.complex, self.E, self.E.ring.p
        bad = []
        for i in range(E.n):
            for k in range(i, E.n):
                ci, ck = E.f[i].deg, E.f[k].deg
                for j in range(self.levels() - 1):
                    for d in range(dmax + 1):
                        if cx.dim(j, d) == 0:
                            continue
                        a = matmul(self.sigma_at(i, j + 1, d + ck), self.sigma_at(k, j, d), p)
                        if i != k:
                            a = (a + matmul(self.sigma_at(k, j + 1, d + ci), self.sigma_at(i, j, d), p)) % p
                        if a.any():
                            bad.append((i, k, j, d))
        return bad

    def verify(self, dmax: int) -> bool:
        return not self.check_homotopy(dmax) and not self.check_exterior(dmax)


def koszul_dg_structure(E: KoszulAlgebra) -> DgStructure:
    """E itself as a Q-complex with e_i acting by left multiplication."""
    ring = E.ring
    sig = []
    for i in range(E.n):
        c = E.f[i].deg
        maps = []
        for j in range(E.n):
            idx = {s: r for r, s in enumerate(E.bases[j + 1])}
            entries = {}
            for col, s in enumerate(E.bases[j]):
                sg, u = wedge((i,), s)
                if sg:
                    entries[(idx[u], col)] = ring.scale(sg, ring.one())
            maps.append(GradedMap(ring, [t + c for t in E.twists[j]], E.twists[j + 1], entries))
        sig.append(maps)
    return DgStructure(E.complex, E, sig)


def solve_dg_structure(F: FreeComplex, E: KoszulAlgebra, attempts: int = 5, seed: int = 0) -> DgStructure | None:
    """Best-effort search for e_i-actions on F making it a dg E-module.

    Level by level, once sigma is fixed on F_{j-1}, both the homotopy
    condition on F_j and the exterior relations on F_{j-1} are linear in the
    values of sigma on F_j.  A random point of each affine solution space is
    taken; a dead end triggers a fresh attempt.  ``None`` proves nothing.
    """
    rng = np.random.default_rng(seed)
    for _ in range(max(1, attempts)):
        got = _solve_once(F, E, rng)
        if got is not None:
            return got
    return None


def _solve_once(F: FreeComplex, E: KoszulAlgebra, rng) -> DgStructure | None:
    ring = E.ring
    p = ring.p
    n = E.n
    cs = [f.deg for f in E.f]
    top = min(F.hmax, len(F.twists) - 1)
    sigma: list = [[] for _ in range(n)]
    # values[i][j][b]: sigma_i(u_b) for generator b of F_j, as a vector of F_{j+1}
    values: list = [[] for _ in range(n)]
    for j in range(top):
        tw, tw1 = F.twists[j], F.twists[j + 1]
        blocks = [(i, b) for i in range(n) for b in range(len(tw))]
        sizes = [free_dim(ring, tw1, tw[b] + cs[i]) for i, b in blocks]
        off = np.concatenate([[0], np.cumsum(sizes, dtype=np.int64)]).astype(int)
        ncols = int(off[-1])
        rows, rhs = [], []
        for k, (i, b) in enumerate(blocks):
            d = tw[b] + cs[i]
            m = F.diff_at(j + 1, d)
            block = np.zeros((m.shape[0], ncols), dtype=np.int64)
            block[:, off[k]:off[k + 1]] = m
            want = elems_to_vector(ring, tw, d, {b: E.f[i]})
            if j > 0:
                unit = elems_to_vector(ring, tw, tw[b], {b: ring.one()})
                dub = matmul(F.diff_at(j, tw[b]), unit, p)
                want = (want - matmul(sigma[i][j - 1].at(d), dub, p)) % p
            rows.append(block)
            rhs.append(want)
        if j > 0:
            tw0 = F.twists[j - 1]
            pos = {blk: k for k, blk in enumerate(blocks)}
            for i in range(n):
                for k2 in range(i, n):
                    for a in range(len(tw0)):
                        d = tw0[a] + cs[i] + cs[k2]
                        block = np.zeros((free_dim(ring, tw1, d), ncols), dtype=np.int64)
                        pairs = [(i, k2)] if i == k2 else [(i, k2), (k2, i)]
                        for outer, inner in pairs:
                            # sigma_outer applied to sigma_inner(u_a) = sum_b q_b u_b
                            v = values[inner][j - 1][a]
                            for b, q in vector_to_elems(ring, tw, tw0[a] + cs[inner], v).items():
                                kk = pos[(outer, b)]
                                act = free_scalar_action(ring, tw1, q, tw[b] + cs[outer])
                                block[:, off[kk]:off[kk + 1]] = (block[:, off[kk]:off[kk + 1]] + act) % p
                        rows.append(block)
                        rhs.append(np.zeros(block.shape[0], dtype=np.int64))
        mat = np.concatenate(rows) if rows else np.zeros((0, ncols), dtype=np.int64)
        r = np.concatenate(rhs) if rhs else np.zeros(0, dtype=np.int64)
        x = solve(mat, r, p) if mat.shape[0] else np.zeros(ncols, dtype=np.int64)
        if x is None:
            return None
        ker = kernel_basis(mat, p) if mat.shape[0] else np.eye(ncols, dtype=np.int64)
        if ker.shape[1]:
            x = (x + matmul(ker, rng.integers(0, p, ker.shape[1]), p)) % p
        for i in range(n):
            entries = {}
            vals = []
            for b in range(len(tw)):
                k = blocks.index((i, b))
                v = x[off[k]:off[k + 1]]
                vals.append(v)
                for r2, e in vector_to_elems(ring, tw1, tw[b] + cs[i], v).items():
                    entries[(r2, b)] = e
            values[i].append(vals)
            sigma[i].append(GradedMap(ring, [t + cs[i] for t in tw], tw1, entries))
    return DgStructure(F, E, sigma)


# ---- U_E(F) -----------------------------------------------------------------------------


@dataclass
class UEComplex:
    E: KoszulAlgebra
    structure: DgStructure
    bases: list  # per homological degree: (S, H, b)
    complex: FreeComplex
    d_squared_defects: list
    homology_defects: list

    @property
    def is_resolution(self) -> bool:
        return not self.d_squared_defects and not self.homology_defects


def ue_rank(E: KoszulAlgebra, F: FreeComplex, i: int) -> int:
    """Σ_{a+2b+c=i} C(n,a) * #Γ-monomials of weight b * rank F_c."""
    total = 0
    for b in range(i // 2 + 1):
        gam = len(list(_compositions(E.n, b)))
        for a in range(min(E.n, i - 2 * b) + 1):
            total += len(subsets(E.n, a)) * gam * F.rank(i - 2 * b - a)
    return total


def build_UE(structure: DgStructure, E: KoszulAlgebra, hmax: int, dmax: int) -> UEComplex:
    """U_E(F) through homological degree ``hmax`` with its four-term differential.

    ∂(e_S y^H f) = ∂(e_S) y^H f + (-1)^|S| e_S y^H ∂f
                   + Σ_i e_i e_S χ_i(y^H) f - Σ_i (-1)^|S| e_S χ_i(y^H) σ_i(f).
    """
    F = structure.complex
    ring = E.ring
    n = E.n
    cs = [f.deg for f in E.f]
    top = min(hmax, len(F.twists) - 1, structure.levels() + 1)
    bases = []
    for i in range(top + 1):
        b = []
        for w in range(i // 2 + 1):
            for a in range(min(n, i - 2 * w) + 1):
                c = i - 2 * w - a
                if c >= len(F.twists):
                    continue
                for h in _compositions(n, w):
                    for s in subsets(n, a):
                        for g in range(len(F.twists[c])):
                            b.append((s, h, c, g))
        bases.append(b)

    def twist(key):
        s, h, c, g = key
        return E.twist(s) + sum(x * y for x, y in zip(h, cs)) + F.twists[c][g]

    twists = [[twist(k) for k in b] for b in bases]
    maps: list = [None]
    for i in range(1, top + 1):
        idx = {k: r for r, k in enumerate(bases[i - 1])}
        entries: dict = {}

        def put(key, val):
            entries[key] = ring.add(entries[key], val) if key in entries else val

        for col, (s, h, c, g) in enumerate(bases[i]):
            sign = -1 if len(s) % 2 else 1
            for sg, j, rest in boundary_terms(s):
                put((idx[(rest, h, c, g)], col), ring.scale(sg, E.f[j]))
            if c > 0:
                for r, q in F.differentials[c].column(g).items():
                    put((idx[(s, h, c - 1, r)], col), ring.scale(sign, q))
            for j in range(n):
                if h[j] == 0:
                    continue
                lower = h[:j] + (h[j] - 1,) + h[j + 1:]
                sg, u = wedge((j,), s)
                if sg:
                    put((idx[(u, lower, c, g)], col), ring.scale(sg, ring.one()))
                for r, q in structure.sigma[j][c].column(g).items():
                    put((idx[(s, lower, c + 1, r)], col), ring.scale(-sign, q))
        maps.append(GradedMap(ring, twists[i], twists[i - 1], entries))

    aug_entries = {}
    if F.augmentation is not None:
        idx0 = {k: r for r, k in enumerate(bases[0])}
        for g in range(len(F.twists[0])):
            for r, q in F.augmentation.column(g).items():
                aug_entries[(r, idx0[((), (0,) * n, 0, g)])] = q
    aug = GradedMap(ring, twists[0], F.module.cover_twists, aug_entries) if F.module is not None else None
    cx = FreeComplex(ring, twists, maps, top, dmax, module=F.module, augmentation=aug)
    d2 = _d_squared_defects(cx, dmax)
    window = dmax
    qtop = ring.top_degree(limit=dmax)
    if qtop is not None:
        window = min(dmax, max((t for ts in twists for t in ts), default=0) + qtop)
    hom = cx.exactness_defects(window) if not d2 else []
    return UEComplex(E, structure, bases, cx, d2, hom)


def _d_squared_defects(cx: FreeComplex, dmax: int) -> list:
    p = cx.ring.p
    bad = []
    for i in range(2, len(cx.twists)):
        for d in range(dmax + 1):
            a, b = cx.diff_at(i - 1, d), cx.diff_at(i, d)
            if a.size and b.size and matmul(a, b, p).any():
                bad.append((i, d))
    if cx.augmentation is not None and cx.module is not None and len(cx.twists) > 1:
        for d in range(dmax + 1):
            eps = matmul(cx.module.quotient_map(d), cx.augmentation.at(d), p)
            b = cx.diff_at(1, d)
            if eps.size and b.size and matmul(eps, b, p).any():
                bad.append((0, d))
    return bad


# ---- Tor^E versus Tor^Q ⊗ Γ --------------------------------------------------------------


@dataclass
class LemmaCheck:
    holds: bool
    e_side: TruncatedSeries
    q_side: TruncatedSeries


def check_lemma_equality(module: PresentedModule, E: KoszulAlgebra, hmax: int, dmax: int) -> LemmaCheck:
    """P_M^E == P_M^Q * Hilb(Γ on n variables), both sides built independently."""
    module = module_over_q(module, E)
    if not check_shamash_condition(E.ideal, module):
        raise HypothesisError("hypothesis I ⊆ m·ann(M) not satisfied")
    pe = minimal_e_resolution(module, E, hmax, dmax).poincare_series()
    fq = minimal_free_resolution(module, hmax, dmax)
    pq = TruncatedSeries.from_list(fq.ranks(), hmax, cap_sensitive=fq.cap_sensitive)
    rhs = pq * gamma_hilbert(E.n, hmax)
    return LemmaCheck(pe.coeffs == rhs.coeffs, pe, rhs)


def q_rank_identity(U: SemifreeDgModule) -> bool:
    """For one exterior variable: rank_Q U_i = β_i + β_{i-1}."""
    b = U.betti()
    return all(len(U.q_basis(i)) == b[i] + (b[i - 1] if i else 0) for i in range(U.hmax + 1))


__all__ = [
    "DgStructure", "HypothesisError", "LemmaCheck", "SemifreeDgModule", "UEComplex", "build_UE",
    "check_lemma_equality", "e_poincare_series", "koszul_dg_structure", "minimal_e_resolution",
    "module_over_q", "q_rank_identity", "solve_dg_structure", "ue_rank",
]
