"""Minimal graded free resolutions, Betti numbers, depth and grade.

Syzygies are computed one internal degree at a time: the kernel of the last
differential in degree ``d``, modulo ``m`` times the kernel in lower degrees,
gives the new generators of degree ``d``.  No Gröbner machinery is involved.
"""

from __future__ import annotations

import hashlib
import os
import tempfile
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from .exactlin import Echelon, kernel_basis, matmul, rank
from .exterior import koszul_maps
from .graded_algebra import (
    Elem,
    GradedMap,
    GradedQuotientRing,
    HomogeneousIdeal,
    PresentedModule,
    free_dim,
    free_m_span,
    minimal_generators,
    vector_to_elems,
)
from .poly import format_poly, parse_poly, poly_degree
from .series import TruncatedSeries

CACHE_ENV = "QCIPOINCARE_CACHE"


class CapExhausted(RuntimeError):
    pass


@dataclass
class BettiTable:
    graded: dict  # (i, d) -> beta_{i,d}
    hmax: int

    @property
    def totals(self) -> list[int]:
        out = [0] * (self.hmax + 1)
        for (i, _), b in self.graded.items():
            if i <= self.hmax:
                out[i] += b
        return out

    def __getitem__(self, i: int) -> int:
        return self.totals[i]

    def table(self) -> str:
        degs = sorted({d - i for (i, d) in self.graded})
        lines = ["      " + " ".join(f"{i:>4}" for i in range(self.hmax + 1))]
        for r in degs:
            row = [self.graded.get((i, i + r), 0) for i in range(self.hmax + 1)]
            lines.append(f"{r:>4}: " + " ".join(f"{b:>4}" if b else "   ." for b in row))
        lines.append("total " + " ".join(f"{b:>4}" for b in self.totals))
        return "\n".join(lines)


@dataclass
class FreeComplex:
    """F_hmax -> ... -> F_0 of graded free modules over ``ring``.

    ``differentials[i]`` maps F_i to F_{i-1}; index 0 holds ``None``.  When
    the complex resolves a module, ``augmentation`` maps F_0 onto the cover of
    that module.
    """

    ring: GradedQuotientRing
    twists: list
    differentials: list
    hmax: int
    dmax: int
    minimal: bool = False
    module: PresentedModule | None = None
    augmentation: GradedMap | None = None
    cap_sensitive: bool = False
    complete: bool = False  # every generator in the truncation is provably found
    notes: list = field(default_factory=list)

    def rank(self, i: int) -> int:
        return len(self.twists[i]) if 0 <= i < len(self.twists) else 0

    def ranks(self) -> list[int]:
        return [self.rank(i) for i in range(self.hmax + 1)]

    def betti(self) -> BettiTable:
        g = defaultdict(int)
        for i, ts in enumerate(self.twists[: self.hmax + 1]):
            for t in ts:
                g[(i, t)] += 1
        return BettiTable(dict(g), self.hmax)

    def dim(self, i: int, d: int) -> int:
        if not 0 <= i < len(self.twists):
            return 0
        return free_dim(self.ring, self.twists[i], d)

    def diff_at(self, i: int, d: int) -> np.ndarray:
        """Matrix of d_i in internal degree d (shape dim F_{i-1,d} x dim F_{i,d})."""
        if i <= 0 or i >= len(self.twists):
            return np.zeros((self.dim(i - 1, d), self.dim(i, d)), dtype=np.int64)
        return self.differentials[i].at(d)

    def homology_dim(self, i: int, d: int) -> int:
        n = self.dim(i, d)
        if n == 0:
            return 0
        r_out = rank(self.diff_at(i, d), self.ring.p) if i > 0 else 0
        r_in = rank(self.diff_at(i + 1, d), self.ring.p) if i + 1 < len(self.twists) else 0
        return n - r_out - r_in

    def check_d_squared(self, dmax: int | None = None) -> bool:
        dmax = self.dmax if dmax is None else dmax
        p = self.ring.p
        for i in range(2, len(self.twists)):
            for d in range(dmax + 1):
                a, b = self.diff_at(i - 1, d), self.diff_at(i, d)
                if a.size and b.size and matmul(a, b, p).any():
                    return False
        if self.augmentation is not None and self.module is not None and len(self.twists) > 1:
            for d in range(dmax + 1):
                eps = matmul(self.module.quotient_map(d), self.augmentation.at(d), p)
                b = self.diff_at(1, d)
                if eps.size and b.size and matmul(eps, b, p).any():
                    return False
        return True

    def entries_in_m(self) -> bool:
        return all(dm.entries_positive() for dm in self.differentials[1:] if dm is not None)

    def exactness_defects(self, dmax: int | None = None) -> list:
        """Bidegrees (i, d) with H_i != 0 for 1 <= i < hmax, plus H_0 vs the module."""
        dmax = self.dmax if dmax is None else dmax
        bad = []
        top = min(self.hmax, len(self.twists) - 1)
        for i in range(1, top):
            for d in range(dmax + 1):
                if self.homology_dim(i, d):
                    bad.append((i, d))
        if self.module is not None and self.augmentation is not None:
            p = self.ring.p
            for d in range(dmax + 1):
                eps = matmul(self.module.quotient_map(d), self.augmentation.at(d), p)
                img = rank(eps, p) if eps.size else 0
                if img != self.module.dim(d):
                    bad.append((0, d))
                    continue
                ker = self.dim(0, d) - img
                b = rank(self.diff_at(1, d), p) if self.rank(1) else 0
                if ker != b:
                    bad.append((0, d))
        return bad


# ---- kernel generators ------------------------------------------------------------------


def _kernel_generators(ring, twists, phi_at, lo, hi):
    """New generators of ker(phi) degree by degree in ``[lo, hi]``.

    ``phi_at(d)`` gives the matrix of the map in degree ``d``.  Returns a list of
    ``(degree, vector)``.
    """
    p = ring.p
    kers: dict[int, np.ndarray] = {}
    out = []
    for d in range(lo, hi + 1):
        n = free_dim(ring, twists, d)
        if n == 0:
            kers[d] = np.zeros((0, 0), dtype=np.int64)
            continue
        k = kernel_basis(phi_at(d), p).T
        kers[d] = k
        if k.shape[0] == 0:
            continue
        ech = Echelon(n, p)
        ech.add_span(free_m_span(ring, twists, kers, d))
        for v in k:
            if ech.add(v):
                out.append((d, v))
    return out


def _map_from_vectors(ring, src_gens, tgt_twists) -> GradedMap:
    entries = {}
    src = []
    for j, (d, v) in enumerate(src_gens):
        src.append(d)
        for i, e in vector_to_elems(ring, tgt_twists, d, v).items():
            entries[(i, j)] = e
    return GradedMap(ring, src, tgt_twists, entries)


def _windows(ring: GradedQuotientRing, dmax: int):
    top = ring.top_degree(limit=dmax)
    return top


def syzygy_reach(ring: GradedQuotientRing, *extra: int) -> int:
    """Heuristic widest degree jump between consecutive resolution steps.

    The largest degree among the ring relations, the variables and ``extra``.
    On a non-artinian ring a step whose search window is narrower than this
    above its source twists is treated as cap-sensitive.
    """
    degs = [poly_degree(g, ring.degrees) for g in ring.j_gens] + list(ring.degrees) + list(extra)
    return max(degs, default=1)


def minimal_free_resolution(module: PresentedModule, hmax: int, dmax: int, ring: GradedQuotientRing | None = None,
                            ceiling: int | None = None, cache_dir: str | None = None) -> FreeComplex:
    """Minimal resolution of ``module`` over ``ring`` (default: the module's ring).

    Truncated at homological degree ``hmax`` and internal degree ``dmax``.  For
    artinian rings the per-step degree window is provably sufficient and the
    result is marked ``complete``; otherwise a generator within two degrees of
    the cap marks it ``cap_sensitive`` and the cap grows by 10 up to ``ceiling``.
    """
    if ring is not None and ring is not module.ring:
        module = module.over(ring)
    ring = module.ring
    if hmax < 0:
        raise ValueError("hmax must be non-negative")
    if module.cover_twists and dmax < max(module.cover_twists):
        raise ValueError("dmax must be at least the largest cover twist")
    ceiling = dmax + 20 if ceiling is None else ceiling
    cache_dir = cache_dir if cache_dir is not None else os.environ.get(CACHE_ENV)
    key = None
    if cache_dir:
        key = resolution_key(module, hmax, dmax)
        got = load_cached(cache_dir, key, module, hmax, dmax)
        if got is not None:
            return got
    res = _resolve(module, hmax, dmax)
    while res.cap_sensitive and dmax + 10 <= ceiling:
        dmax += 10
        res = _resolve(module, hmax, dmax)
        res.notes.append(f"internal-degree cap raised to {dmax}")
    if cache_dir and key is not None:
        store_cached(cache_dir, key, res)
    return res


def _resolve(module: PresentedModule, hmax: int, dmax: int) -> FreeComplex:
    ring = module.ring
    p = ring.p
    top = _windows(ring, dmax)
    cap_sensitive = False
    complete = top is not None
    lo_twist = min(module.cover_twists, default=0)
    reach = syzygy_reach(ring, *(d - lo_twist for d in module.relation_degrees))
    if top is None and max(module.relation_degrees, default=0) > dmax:
        cap_sensitive = True

    gens = minimal_generators(module, min(dmax, max(module.cover_twists, default=0)))
    f0 = list(zip(gens.degrees, gens.vectors))
    aug = _map_from_vectors(ring, f0, module.cover_twists)
    twists = [[d for d, _ in f0]]
    diffs: list = [None]

    def phi0(d):
        return matmul(module.quotient_map(d), aug.at(d), p)

    phi = phi0
    for i in range(1, hmax + 1):
        cur = twists[-1]
        if not cur:
            twists.append([])
            diffs.append(GradedMap(ring, [], cur, {}))
            continue
        lo = min(cur)
        hi = dmax
        if top is not None:
            hi = min(dmax, max(cur) + top)
            if max(cur) + top > dmax:
                # the provable window is clipped: generators may be missing
                complete = False
                cap_sensitive = True
        new = _kernel_generators(ring, cur, phi, lo, hi)
        if top is None and (any(d >= dmax - 1 for d, _ in new) or (i > 1 and max(cur) + reach > dmax)):
            cap_sensitive = True
        dm = _map_from_vectors(ring, new, cur)
        twists.append([d for d, _ in new])
        diffs.append(dm)
        phi = dm.at
    res = FreeComplex(ring, twists, diffs, hmax, dmax, module=module, augmentation=aug,
                      cap_sensitive=cap_sensitive or gens.cap_sensitive, complete=complete)
    res.minimal = res.entries_in_m()
    return res


def resolution_key(module: PresentedModule, hmax: int, dmax: int) -> str:
    text = "\n".join([module.ring.content_key(), module.content_key(), f"hmax={hmax}", f"dmax={dmax}",
                      f"p={module.ring.p}"])
    return hashlib.sha256(text.encode()).hexdigest()


# ---- oracle -----------------------------------------------------------------------------


def oracle_resolution(module: PresentedModule, hmax: int, dmax: int) -> FreeComplex:
    """A deliberately non-minimal resolution built by killing cycles.

    At each step the cycles of the last module are killed degree by degree
    modulo the boundaries of generators already adjoined.  At every step one
    extra generator is drawn from those boundaries (in the lowest degree where
    they are nonzero), so the result is generally not minimal.  Built one step past
    ``hmax`` so that the homology of ``F ⊗ k`` is defined through ``hmax``.
    """
    ring = module.ring
    p = ring.p
    top = ring.top_degree(limit=dmax)
    gens = minimal_generators(module, min(dmax, max(module.cover_twists, default=0)))
    f0 = list(zip(gens.degrees, gens.vectors))
    aug = _map_from_vectors(ring, f0, module.cover_twists)
    twists = [[d for d, _ in f0]]
    diffs: list = [None]
    prev_at = lambda d: matmul(module.quotient_map(d), aug.at(d), p)  # noqa: E731
    for i in range(1, hmax + 2):
        cur = twists[-1]
        adjoined: list = []
        padded = False
        if cur:
            hi = dmax if top is None else min(dmax, max(cur) + top)
            for d in range(min(cur), hi + 1):
                n = free_dim(ring, cur, d)
                if n == 0:
                    continue
                cycles = kernel_basis(prev_at(d), p).T
                if cycles.shape[0] == 0:
                    continue
                bd = Echelon(n, p)
                if adjoined:
                    partial = _map_from_vectors(ring, adjoined, cur)
                    bd.add_span(partial.at(d).T)
                extra = bd.rows[0].copy() if bd.dim and not padded else None
                fresh = [(d, z) for z in cycles if bd.add(z)]
                if extra is not None:
                    adjoined.append((d, extra))
                    padded = True
                adjoined.extend(fresh)
        dm = _map_from_vectors(ring, adjoined, cur)
        twists.append([d for d, _ in adjoined])
        diffs.append(dm)
        prev_at = dm.at
    return FreeComplex(ring, twists, diffs, hmax + 1, dmax, minimal=False, module=module, augmentation=aug)


def tensor_k_homology(cx: FreeComplex, hmax: int) -> list[int]:
    """Ranks of H_i(F ⊗ k) for i <= hmax, using the constant parts of the differentials."""
    p = cx.ring.p

    def const(i):
        r, c = cx.rank(i - 1), cx.rank(i)
        m = np.zeros((r, c), dtype=np.int64)
        if 0 < i < len(cx.twists):
            for (a, b), e in cx.differentials[i].entries.items():
                if e.deg == 0:
                    m[a, b] = int(e.vec[0]) % p
        return m

    out = []
    for i in range(hmax + 1):
        r_out = rank(const(i), p) if i > 0 and cx.rank(i) and cx.rank(i - 1) else 0
        r_in = rank(const(i + 1), p) if cx.rank(i + 1) and cx.rank(i) else 0
        out.append(cx.rank(i) - r_out - r_in)
    return out


# ---- series and numeric invariants ------------------------------------------------------


def poincare_series(module: PresentedModule, ring: GradedQuotientRing | None, hmax: int, dmax: int,
                    **kw) -> TruncatedSeries:
    res = minimal_free_resolution(module, hmax, dmax, ring=ring, **kw)
    return TruncatedSeries.from_list(res.betti().totals, hmax, cap_sensitive=res.cap_sensitive)


def koszul_homology_dims(ring: GradedQuotientRing, elems: list[Elem], dcap: int) -> dict:
    """dim H_i(K(elems; ring))_d for all i and d <= dcap (nonzero entries only)."""
    _, twists, maps = koszul_maps(ring, elems)
    n = len(elems)
    p = ring.p
    out = {}
    for i in range(n + 1):
        for d in range(dcap + 1):
            dim = free_dim(ring, twists[i], d)
            if dim == 0:
                continue
            r_out = rank(maps[i].at(d), p) if i > 0 else 0
            r_in = rank(maps[i + 1].at(d), p) if i < n else 0
            h = dim - r_out - r_in
            if h:
                out[(i, d)] = h
    return out


def _koszul_dcap(ring: GradedQuotientRing, elems, dcap: int) -> int:
    top = ring.top_degree(limit=dcap)
    if top is not None:
        return min(dcap, top + sum(f.deg for f in elems))
    return dcap


def depth(ring: GradedQuotientRing, dcap: int = 40) -> int:
    """e minus the top nonvanishing homological degree of the Koszul complex on the variables."""
    xs = [ring.var(i) for i in range(ring.nvars)]
    h = koszul_homology_dims(ring, xs, _koszul_dcap(ring, xs, dcap))
    top = max((i for i, _ in h), default=0)
    return ring.nvars - top


def grade(ideal: HomogeneousIdeal, dcap: int = 40) -> int:
    """n minus the top nonvanishing Koszul homology degree on the ideal generators."""
    ring = ideal.ring
    h = koszul_homology_dims(ring, ideal.elems, _koszul_dcap(ring, ideal.elems, dcap))
    top = max((i for i, _ in h), default=0)
    return ideal.n - top


# ---- disk cache -------------------------------------------------------------------------


def _fmt(ring, e: Elem | None) -> str:
    if e is None:
        return "0"
    return format_poly(ring.to_poly(e), ring.names)


def dump_complex(res: FreeComplex) -> str:
    ring = res.ring
    lines = [f"# resolution over {ring.describe()}", f"module: {res.module.content_key() if res.module else '-'}",
             f"hmax: {res.hmax}", f"dmax: {res.dmax}", f"char: {ring.p}",
             f"cap_sensitive: {int(res.cap_sensitive)}", f"complete: {int(res.complete)}",
             f"minimal: {int(res.minimal)}"]
    maps = [res.augmentation] + list(res.differentials[1:])
    tgts = [res.module.cover_twists] + res.twists[:-1]
    for i, (dm, tgt) in enumerate(zip(maps, tgts)):
        lines.append(f"step {i}")
        lines.append("twists: " + ", ".join(str(t) for t in res.twists[i]))
        for r in range(len(tgt)):
            row = [_fmt(ring, dm.entries.get((r, c))) for c in range(len(res.twists[i]))]
            lines.append("[" + ", ".join(row) + "]")
    for n in res.notes:
        lines.append(f"note: {n}")
    return "\n".join(lines) + "\n"


def load_complex(text: str, module: PresentedModule) -> FreeComplex:
    ring = module.ring
    head, steps, notes = {}, [], []
    for line in text.splitlines():
        if not line or line.startswith("#"):
            continue
        if line.startswith("step "):
            steps.append({"twists": [], "rows": []})
        elif line.startswith("twists:"):
            body = line.split(":", 1)[1].strip()
            steps[-1]["twists"] = [int(t) for t in body.split(",")] if body else []
        elif line.startswith("["):
            body = line.strip()[1:-1]
            steps[-1]["rows"].append([s.strip() for s in body.split(",")] if body else [])
        elif line.startswith("note:"):
            notes.append(line.split(":", 1)[1].strip())
        else:
            k, v = line.split(":", 1)
            head[k.strip()] = v.strip()
    twists = [s["twists"] for s in steps]
    tgts = [module.cover_twists] + twists[:-1]
    maps = []
    for s, tgt in zip(steps, tgts):
        entries = {}
        for r, row in enumerate(s["rows"]):
            for c, txt in enumerate(row):
                if txt != "0":
                    entries[(r, c)] = ring.element(parse_poly(txt, ring.names)[0], deg=s["twists"][c] - tgt[r])
        maps.append(GradedMap(ring, s["twists"], tgt, entries))
    return FreeComplex(ring, twists, [None] + maps[1:], int(head["hmax"]), int(head["dmax"]),
                       minimal=bool(int(head["minimal"])), module=module, augmentation=maps[0],
                       cap_sensitive=bool(int(head["cap_sensitive"])), complete=bool(int(head["complete"])),
                       notes=notes)


def load_cached(cache_dir: str, key: str, module: PresentedModule, hmax: int, dmax: int):
    path = os.path.join(cache_dir, key)
    if not os.path.exists(path):
        return None
    with open(path, encoding="utf-8") as fh:
        return load_complex(fh.read(), module)


def store_cached(cache_dir: str, key: str, res: FreeComplex) -> None:
    os.makedirs(cache_dir, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, prefix=".tmp-")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        fh.write(dump_complex(res))
    os.replace(tmp, os.path.join(cache_dir, key))
