"""Standard-graded quotient rings k[x_1..x_e]/J and finitely presented modules.

Everything is computed one internal degree at a time.  The degree-``d`` piece
of the ring has as basis the monomials that are *not* leading monomials of
``J_d`` when ``J_d`` is row reduced with its columns in descending
graded-lex order, so normal forms are reproducible.

The irrelevant ideal (all elements of positive degree) plays the role of the
maximal ideal of a local ring.
"""

from __future__ import annotations

import threading
import warnings
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .exactlin import Echelon, PrimeField, intersect, kernel_basis, matmul
from .poly import Poly, format_poly, is_homogeneous, parse_poly, poly_degree, weighted_degree


class CapWarning(UserWarning):
    """Generators may exist beyond the internal-degree cap."""


class NotAnRModuleError(ValueError):
    pass


class NonMinimalGeneratorsError(ValueError):
    def __init__(self, index: int, gen: str):
        super().__init__(f"generator {index} ({gen}) is redundant: it lies in m*I plus the earlier generators")
        self.index = index


class Elem:
    """A homogeneous ring element: degree plus coordinates in the degree basis."""

    __slots__ = ("deg", "vec")

    def __init__(self, deg: int, vec):
        self.deg = int(deg)
        self.vec = np.asarray(vec, dtype=np.int64)

    @property
    def key(self):
        return (self.deg, self.vec.tobytes())

    def is_zero(self) -> bool:
        return not self.vec.any()

    def __eq__(self, other):
        return isinstance(other, Elem) and self.deg == other.deg and np.array_equal(self.vec, other.vec)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"Elem(deg={self.deg}, vec={self.vec.tolist()})"


@dataclass
class _Degree:
    monos: list
    index: dict
    basis_idx: list
    proj: np.ndarray  # monomial coordinates -> basis coordinates (n_mono x dim)


class GradedQuotientRing:
    """``k[vars]/J`` graded by positive variable degrees."""

    def __init__(self, field: PrimeField, vars, j_gens=()):
        self.field = field
        self.vars = [(str(n), int(d)) for n, d in vars]
        if not self.vars and j_gens:
            raise ValueError("relations given for a ring without variables")
        if any(d <= 0 for _, d in self.vars):
            raise ValueError("variable degrees must be positive")
        self.names = [n for n, _ in self.vars]
        self.degrees = [d for _, d in self.vars]
        gens = []
        for g in j_gens:
            g = {tuple(k): int(v) % field.p for k, v in g.items() if int(v) % field.p}
            if not g:
                continue
            if not is_homogeneous(g, self.degrees):
                raise ValueError(f"relation {format_poly(g, self.names)} is not homogeneous")
            if poly_degree(g, self.degrees) < 1:
                raise ValueError("relations must have positive degree")
            gens.append(g)
        self.j_gens = gens
        self._deg: dict[int, _Degree] = {}
        self._mult: dict = {}
        self._prod: dict = {}
        self._lock = threading.RLock()

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def __repr__(self):
        rels = ", ".join(format_poly(g, self.names) for g in self.j_gens)
        return f"GradedQuotientRing(F_{self.p}[{', '.join(self.names)}]/({rels}))"

    def describe(self) -> str:
        vs = ", ".join(self.names)
        if not self.j_gens:
            return f"F_{self.p}[{vs}]"
        rels = ", ".join(format_poly(g, self.names, self.p) for g in self.j_gens)
        return f"F_{self.p}[{vs}]/({rels})"

    # ---- monomials and degree pieces -------------------------------------------------

    def monomials(self, d: int) -> list:
        """Monomials of weighted degree ``d`` in descending lex order."""
        if d < 0:
            return []
        out = []

        def rec(i, rem, acc):
            if i == self.nvars:
                if rem == 0:
                    out.append(tuple(acc))
                return
            w = self.degrees[i]
            for e in range(rem // w, -1, -1):
                acc.append(e)
                rec(i + 1, rem - e * w, acc)
                acc.pop()

        rec(0, d, [])
        return out

    def _data(self, d: int) -> _Degree:
        got = self._deg.get(d)
        if got is not None:
            return got
        with self._lock:
            got = self._deg.get(d)
            if got is not None:
                return got
            monos = self.monomials(d)
            index = {m: i for i, m in enumerate(monos)}
            n = len(monos)
            blocks = []
            for g in self.j_gens:
                s = poly_degree(g, self.degrees)
                if s > d:
                    continue
                us = self.monomials(d - s)
                rows = np.zeros((len(us), n), dtype=np.int64)
                ar = np.arange(len(us))
                for e, c in g.items():
                    idx = [index[tuple(a + b for a, b in zip(u, e))] for u in us]
                    rows[ar, idx] = (rows[ar, idx] + c) % self.p
                blocks.append(rows)
            if blocks:
                ech = Echelon(n, self.p)
                ech.add_span(np.concatenate(blocks))
                q, free = ech.quotient_map()
            else:
                q, free = np.eye(n, dtype=np.int64), list(range(n))
            got = _Degree(monos, index, free, np.ascontiguousarray(q.T))
            self._deg[d] = got
            return got

    def dim(self, d: int) -> int:
        if d < 0:
            return 0
        return len(self._data(d).basis_idx)

    def basis(self, d: int) -> list:
        if d < 0:
            return []
        data = self._data(d)
        return [data.monos[i] for i in data.basis_idx]

    def hilbert_function(self, D: int) -> list[int]:
        return [self.dim(d) for d in range(D + 1)]

    def top_degree(self, limit: int = 200):
        """Largest ``d`` with nonzero degree piece if the ring is artinian, else ``None``.

        Decided once ``max(var degree)`` consecutive pieces vanish, searching up to ``limit``.
        """
        if self.nvars == 0:
            return 0
        w = max(self.degrees)
        top, run = 0, 0
        for d in range(limit + 1):
            if self.dim(d):
                top, run = d, 0
            else:
                run += 1
                if run >= w:
                    return top
        return None

    # ---- elements ------------------------------------------------------------------

    def element(self, poly: Poly, deg: int | None = None) -> Elem:
        poly = {tuple(k): int(v) for k, v in poly.items() if int(v) % self.p}
        if poly:
            d = poly_degree(poly, self.degrees)
            if deg is not None and d != deg:
                raise ValueError(f"expected degree {deg}, got {d}")
        else:
            if deg is None:
                raise ValueError("degree of the zero element must be given")
            d = deg
        data = self._data(d)
        v = np.zeros(len(data.monos), dtype=np.int64)
        for e, c in poly.items():
            v[data.index[e]] = (v[data.index[e]] + c) % self.p
        return Elem(d, matmul(v, data.proj, self.p) if len(data.monos) else np.zeros(0, dtype=np.int64))

    def parse(self, text: str) -> Elem:
        return self.element(parse_poly(text, self.names)[0])

    def zero(self, d: int) -> Elem:
        return Elem(d, np.zeros(self.dim(d), dtype=np.int64))

    def one(self) -> Elem:
        return Elem(0, np.ones(1, dtype=np.int64))

    def var(self, i: int) -> Elem:
        e = [0] * self.nvars
        e[i] = 1
        return self.element({tuple(e): 1})

    def basis_element(self, d: int, i: int) -> Elem:
        v = np.zeros(self.dim(d), dtype=np.int64)
        v[i] = 1
        return Elem(d, v)

    def to_poly(self, x: Elem) -> Poly:
        monos = self.basis(x.deg)
        return {monos[i]: int(c) for i, c in enumerate(x.vec) if c}

    def format(self, x: Elem) -> str:
        return format_poly(self.to_poly(x), self.names, self.p)

    def add(self, x: Elem, y: Elem) -> Elem:
        if x.deg != y.deg:
            raise ValueError("adding elements of different degrees")
        return Elem(x.deg, (x.vec + y.vec) % self.p)

    def scale(self, c: int, x: Elem) -> Elem:
        return Elem(x.deg, (x.vec * (c % self.p)) % self.p)

    def _prod_index(self, u: tuple, s: int, a: int):
        key = (u, a)
        got = self._prod.get(key)
        if got is None:
            target = self._data(a + s).index
            got = np.array([target[tuple(x + y for x, y in zip(u, v))] for v in self.basis(a)], dtype=np.int64)
            self._prod[key] = got
        return got

    def mult_matrix(self, x: Elem, a: int) -> np.ndarray:
        """Matrix of multiplication by ``x``: (piece a) -> (piece a + deg x)."""
        key = (x.key, a)
        got = self._mult.get(key)
        if got is not None:
            return got
        s = x.deg
        da, dt = self.dim(a), self.dim(a + s)
        out = np.zeros((dt, da), dtype=np.int64)
        if da and dt and x.vec.any():
            proj = self._data(a + s).proj
            monos = self.basis(s)
            for i in np.flatnonzero(x.vec):
                idx = self._prod_index(monos[i], s, a)
                out = (out + int(x.vec[i]) * proj[idx].T) % self.p
        self._mult[key] = out
        return out

    def multiply(self, x: Elem, y: Elem) -> Elem:
        return Elem(x.deg + y.deg, matmul(self.mult_matrix(x, y.deg), y.vec, self.p))

    def lift_to(self, x: Elem, other: "GradedQuotientRing") -> Elem:
        """Reinterpret the normal-form polynomial of ``x`` in another ring on the same variables."""
        return other.element(self.to_poly(x), deg=x.deg)

    def quotient(self, gens) -> "GradedQuotientRing":
        return GradedQuotientRing(self.field, self.vars, list(self.j_gens) + [dict(g) for g in gens])

    def content_key(self) -> str:
        rels = sorted(format_poly(g, self.names, self.p) for g in self.j_gens)
        vs = ",".join(f"{n}:{d}" for n, d in self.vars)
        return f"p={self.p};vars={vs};rels={rels}"


def degree_basis(ring: GradedQuotientRing, d: int) -> list:
    return ring.basis(d)


def multiply(ring: GradedQuotientRing, f: Elem, g: Elem) -> Elem:
    return ring.multiply(f, g)


# ---- free modules and homogeneous maps --------------------------------------------------


def free_offsets(ring: GradedQuotientRing, twists, d: int) -> np.ndarray:
    """Offsets of the summands of a graded free module in degree ``d`` (length len+1)."""
    dims = [ring.dim(d - t) for t in twists]
    return np.concatenate([[0], np.cumsum(dims, dtype=np.int64)]).astype(np.int64)


def free_dim(ring: GradedQuotientRing, twists, d: int) -> int:
    return int(sum(ring.dim(d - t) for t in twists))


def free_scalar_action(ring: GradedQuotientRing, twists, x: Elem, d: int) -> np.ndarray:
    """Multiplication by ``x`` on a free module: degree d -> degree d + deg x."""
    src = free_offsets(ring, twists, d)
    tgt = free_offsets(ring, twists, d + x.deg)
    out = np.zeros((int(tgt[-1]), int(src[-1])), dtype=np.int64)
    for j, t in enumerate(twists):
        if src[j + 1] > src[j] and tgt[j + 1] > tgt[j]:
            out[tgt[j]:tgt[j + 1], src[j]:src[j + 1]] = ring.mult_matrix(x, d - t)
    return out


def free_m_span(ring: GradedQuotientRing, twists, vectors_by_degree, d: int) -> np.ndarray:
    """Rows spanning ``(m * N)_d`` where ``N_e`` is spanned by ``vectors_by_degree[e]``."""
    rows = []
    for i, w in enumerate(ring.degrees):
        prev = vectors_by_degree.get(d - w)
        if prev is None or len(prev) == 0:
            continue
        act = free_scalar_action(ring, twists, ring.var(i), d - w)
        rows.append(matmul(prev, act.T, ring.p))
    if not rows:
        return np.zeros((0, free_dim(ring, twists, d)), dtype=np.int64)
    return np.concatenate(rows)


class GradedMap:
    """Homogeneous matrix between graded free modules.

    ``entries[(i, j)]`` maps source generator ``j`` to target generator ``i`` and
    has degree ``src[j] - tgt[i]``.
    """

    def __init__(self, ring: GradedQuotientRing, src, tgt, entries=None, shift: int = 0):
        self.ring = ring
        self.src = list(src)
        self.tgt = list(tgt)
        self.shift = shift
        self.entries = {}
        for (i, j), e in (entries or {}).items():
            if e.deg != self.src[j] - self.tgt[i]:
                raise ValueError(f"entry ({i},{j}) has degree {e.deg}, expected {self.src[j] - self.tgt[i]}")
            if not e.is_zero():
                self.entries[(i, j)] = e
        self._at: dict[int, np.ndarray] = {}

    def at(self, d: int) -> np.ndarray:
        got = self._at.get(d)
        if got is not None:
            return got
        so = free_offsets(self.ring, self.src, d)
        to = free_offsets(self.ring, self.tgt, d)
        out = np.zeros((int(to[-1]), int(so[-1])), dtype=np.int64)
        for (i, j), e in self.entries.items():
            if so[j + 1] > so[j] and to[i + 1] > to[i]:
                out[to[i]:to[i + 1], so[j]:so[j + 1]] = self.ring.mult_matrix(e, d - self.src[j])
        self._at[d] = out
        return out

    def column(self, j: int) -> dict:
        return {i: e for (i, jj), e in self.entries.items() if jj == j}

    def entries_positive(self) -> bool:
        """Every nonzero entry lies in the irrelevant ideal."""
        return all(e.deg > 0 for e in self.entries.values())


def vector_to_elems(ring: GradedQuotientRing, twists, d: int, vec) -> dict:
    """Split a degree-``d`` free-module vector into its nonzero ring-element components."""
    off = free_offsets(ring, twists, d)
    out = {}
    for i, t in enumerate(twists):
        part = np.asarray(vec[off[i]:off[i + 1]], dtype=np.int64)
        if part.any():
            out[i] = Elem(d - t, part)
    return out


def elems_to_vector(ring: GradedQuotientRing, twists, d: int, comps: dict) -> np.ndarray:
    off = free_offsets(ring, twists, d)
    v = np.zeros(int(off[-1]), dtype=np.int64)
    for i, e in comps.items():
        v[off[i]:off[i + 1]] = e.vec
    return v


# ---- ideals and modules ----------------------------------------------------------------


class HomogeneousIdeal:
    def __init__(self, ring: GradedQuotientRing, gens):
        self.ring = ring
        self.gens: list[Poly] = []
        for g in gens:
            g = {tuple(k): int(v) for k, v in g.items() if int(v) % ring.p}
            if not g:
                raise ValueError("ideal generators must be nonzero")
            if not is_homogeneous(g, ring.degrees):
                raise ValueError(f"generator {format_poly(g, ring.names)} is not homogeneous")
            if poly_degree(g, ring.degrees) < 1:
                raise ValueError("ideal generators must have positive degree")
            self.gens.append(g)

    @property
    def n(self) -> int:
        return len(self.gens)

    @cached_property
    def elems(self) -> list[Elem]:
        return [self.ring.element(g) for g in self.gens]

    @property
    def degrees(self) -> list[int]:
        return [e.deg for e in self.elems]

    @cached_property
    def minimality(self) -> tuple[bool, int | None]:
        return check_minimality(self)

    @property
    def minimal(self) -> bool:
        return self.minimality[0]

    def describe(self) -> str:
        return "(" + ", ".join(format_poly(g, self.ring.names, self.ring.p) for g in self.gens) + ")"


def ideal_span(ring: GradedQuotientRing, elems, d: int, below: bool = False) -> np.ndarray:
    """Rows spanning ``(elems)_d``; with ``below`` only generators of degree < d contribute."""
    rows = [np.zeros((0, ring.dim(d)), dtype=np.int64)]
    for f in elems:
        if f.deg > d or (below and f.deg == d):
            continue
        rows.append(ring.mult_matrix(f, d - f.deg).T)
    return np.concatenate(rows)


def m_squared_span(ring: GradedQuotientRing, d: int) -> np.ndarray:
    rows = [np.zeros((0, ring.dim(d)), dtype=np.int64)]
    for a in range(1, d):
        for i in range(ring.dim(a)):
            rows.append(ring.mult_matrix(ring.basis_element(a, i), d - a).T)
    return np.concatenate(rows)


def check_minimality(ideal: HomogeneousIdeal) -> tuple[bool, int | None]:
    """Are the generators independent in I/mI?  On failure return the first redundant index."""
    ring = ideal.ring
    elems = ideal.elems
    for d in sorted(set(e.deg for e in elems)):
        ech = Echelon(ring.dim(d), ring.p)
        ech.add_span(ideal_span(ring, elems, d, below=True))
        for i, f in enumerate(elems):
            if f.deg == d and not ech.add(f.vec):
                return False, i
    return True, None


def minimize_generators(ideal: HomogeneousIdeal) -> HomogeneousIdeal:
    """Greedy minimal subset, scanning degrees upward and keeping generators in order."""
    ring = ideal.ring
    elems = ideal.elems
    keep: list[int] = []
    for d in sorted(set(e.deg for e in elems)):
        ech = Echelon(ring.dim(d), ring.p)
        ech.add_span(ideal_span(ring, [elems[i] for i in keep], d, below=True))
        for i, f in enumerate(elems):
            if f.deg == d and ech.add(f.vec):
                keep.append(i)
    keep.sort()
    return HomogeneousIdeal(ring, [ideal.gens[i] for i in keep])


def quotient_ring(ring: GradedQuotientRing, ideal: HomogeneousIdeal) -> GradedQuotientRing:
    return ring.quotient(ideal.gens)


def edim(ring: GradedQuotientRing) -> int:
    """dim_k m/m^2."""
    if ring.nvars == 0:
        return 0
    total = 0
    for d in range(1, max(ring.degrees) + 1):
        sq = m_squared_span(ring, d)
        total += ring.dim(d) - (Echelon.from_rows(sq, ring.dim(d), ring.p).dim if sq.shape[0] else 0)
    return total


@dataclass
class Generators:
    degrees: list[int]
    vectors: list[np.ndarray]  # each in coordinates of the cover in its degree
    cap_sensitive: bool = False


class PresentedModule:
    """coker(relations): a graded module with a free cover and homogeneous relation matrix.

    ``relations`` has one row per cover generator; each column is one relation.
    """

    def __init__(self, ring: GradedQuotientRing, cover_twists, relations=(), name: str = "M"):
        self.ring = ring
        self.name = name
        self.cover_twists = [int(t) for t in cover_twists]
        rows = [list(r) for r in relations]
        ncov = len(self.cover_twists)
        if rows and len(rows) != ncov:
            raise ValueError(f"relation matrix has {len(rows)} rows but the cover has {ncov} generators")
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("relation rows have different lengths")
        self.relation_polys: list[list[Poly]] = [[dict(rows[i][j]) for i in range(ncov)] for j in range(ncols)]
        self.relation_degrees: list[int] = []
        kept = []
        for j, col in enumerate(self.relation_polys):
            degs = set()
            for i, g in enumerate(col):
                g = {k: v for k, v in g.items() if v % ring.p}
                if not g:
                    continue
                if not is_homogeneous(g, ring.degrees):
                    raise ValueError(f"relation column {j} entry {i} is not homogeneous")
                degs.add(poly_degree(g, ring.degrees) + self.cover_twists[i])
            if len(degs) > 1:
                raise ValueError(f"relation column {j} is not homogeneous against the twists")
            if degs:
                kept.append(col)
                self.relation_degrees.append(degs.pop())
        self.relation_polys = kept
        entries = {}
        for j, col in enumerate(kept):
            for i, g in enumerate(col):
                g = {k: v for k, v in g.items() if v % ring.p}
                if g:
                    e = ring.element(g)
                    if not e.is_zero():
                        entries[(i, j)] = e
        self.relations = GradedMap(ring, self.relation_degrees, self.cover_twists, entries)
        self._span: dict[int, Echelon] = {}

    # constructors -------------------------------------------------------------------

    @classmethod
    def residue_field(cls, ring: GradedQuotientRing, name: str = "k") -> "PresentedModule":
        row = []
        for i in range(ring.nvars):
            e = [0] * ring.nvars
            e[i] = 1
            row.append({tuple(e): 1})
        return cls(ring, [0], [row] if row else [], name=name)

    @classmethod
    def free(cls, ring: GradedQuotientRing, twists, name: str = "F") -> "PresentedModule":
        return cls(ring, twists, [[] for _ in twists], name=name)

    @classmethod
    def cyclic(cls, ring: GradedQuotientRing, polys, name: str = "M") -> "PresentedModule":
        """``ring/(polys)`` as a module."""
        return cls(ring, [0], [[dict(g) for g in polys]], name=name)

    def over(self, ring: GradedQuotientRing) -> "PresentedModule":
        rows = [[col[i] for col in self.relation_polys] for i in range(len(self.cover_twists))]
        return PresentedModule(ring, self.cover_twists, rows, name=self.name)

    def relation_rows(self) -> list[list[Poly]]:
        return [[col[i] for col in self.relation_polys] for i in range(len(self.cover_twists))]

    def content_key(self) -> str:
        cols = [[format_poly(g, self.ring.names, self.ring.p) for g in col] for col in self.relation_polys]
        return f"twists={self.cover_twists};relations={cols}"

    # degree-wise data -----------------------------------------------------------------

    def cover_dim(self, d: int) -> int:
        return free_dim(self.ring, self.cover_twists, d)

    def relation_span(self, d: int) -> Echelon:
        got = self._span.get(d)
        if got is None:
            n = self.cover_dim(d)
            got = Echelon(n, self.ring.p)
            if self.relations.entries:
                got.add_span(self.relations.at(d).T)
            self._span[d] = got
        return got

    def dim(self, d: int) -> int:
        return self.cover_dim(d) - self.relation_span(d).dim

    def hilbert_function(self, D: int) -> list[int]:
        return [self.dim(d) for d in range(D + 1)]

    def quotient_map(self, d: int) -> np.ndarray:
        """cover_d -> M_d in the normal-form coordinates."""
        return self.relation_span(d).quotient_map()[0]

    def is_killed_by(self, elems) -> bool:
        """Does every element kill every cover generator modulo the relations?"""
        for f in elems:
            for j, t in enumerate(self.cover_twists):
                d = t + f.deg
                v = np.zeros(self.cover_dim(d), dtype=np.int64)
                off = free_offsets(self.ring, self.cover_twists, d)
                v[off[j]:off[j + 1]] = f.vec
                if not self.relation_span(d).contains(v):
                    return False
        return True


def minimal_generators(module: PresentedModule, cap: int) -> Generators:
    """Homogeneous lifts whose images form a basis of M/mM, degree by degree up to ``cap``."""
    ring = module.ring
    twists = module.cover_twists
    degs, vecs = [], []
    cap_sensitive = False
    lo = min(twists, default=0)
    full_prev: dict[int, np.ndarray] = {}
    for d in range(lo, cap + 1):
        n = module.cover_dim(d)
        full_prev[d] = np.eye(n, dtype=np.int64)
        if n == 0:
            continue
        ech = Echelon(n, ring.p)
        ech.add_span(module.relation_span(d).rows)
        ech.add_span(free_m_span(ring, twists, full_prev, d))
        for v in np.eye(n, dtype=np.int64):
            if ech.add(v):
                degs.append(d)
                vecs.append(v)
                if d == cap and cap < max(twists):
                    cap_sensitive = True
    if cap_sensitive:
        warnings.warn(f"module {module.name}: generators found at the cap {cap}; more may exist above it", CapWarning)
    return Generators(degs, vecs, cap_sensitive)


def annihilator_degree(module: PresentedModule, d: int) -> np.ndarray:
    """Rows: a basis of ann_Q(M)_d in the degree-d basis of the ring."""
    ring = module.ring
    nd = ring.dim(d)
    if nd == 0:
        return np.zeros((0, 0), dtype=np.int64)
    blocks = []
    for j, t in enumerate(module.cover_twists):
        D = d + t
        off = free_offsets(ring, module.cover_twists, D)
        emb = np.zeros((int(off[-1]), nd), dtype=np.int64)
        emb[off[j]:off[j + 1], :] = np.eye(nd, dtype=np.int64)
        blocks.append(matmul(module.quotient_map(D), emb, ring.p))
    if not blocks:
        return np.eye(nd, dtype=np.int64)
    return kernel_basis(np.concatenate(blocks), ring.p).T


def check_shamash_condition(ideal: HomogeneousIdeal, module: PresentedModule) -> bool:
    """Is I contained in m * ann_Q(M)?  Raises if M is not killed by I."""
    ring = ideal.ring
    if not module.is_killed_by(ideal.elems):
        raise NotAnRModuleError(f"module {module.name} is not an R-module: I*M != 0")
    for f in ideal.elems:
        s = f.deg
        ech = Echelon(ring.dim(s), ring.p)
        for j in range(1, s + 1):
            ann = annihilator_degree(module, s - j)
            for a in ann:
                ech.add_span(ring.mult_matrix(Elem(s - j, a), j).T)
        if not ech.contains(f.vec):
            return False
    return True


def check_nagata_condition(ideal: HomogeneousIdeal) -> bool:
    """Is I ∩ m^2 contained in m*I?  Checked in every generator degree."""
    ring = ideal.ring
    p = ring.p
    for d in sorted(set(ideal.degrees)):
        n = ring.dim(d)
        i_d = Echelon.from_rows(ideal_span(ring, ideal.elems, d), n, p)
        mi_d = Echelon.from_rows(ideal_span(ring, ideal.elems, d, below=True), n, p)
        sq = m_squared_span(ring, d)
        if i_d.dim == 0 or sq.shape[0] == 0:
            continue
        meet = intersect(i_d.rows, sq, p)
        if any(not mi_d.contains(v) for v in meet):
            return False
    return True


def parse_ring(p: int, vars, relations=()) -> GradedQuotientRing:
    """Convenience: ``parse_ring(101, ["x", "y"], ["x*y"])``."""
    vs = [(v, 1) if isinstance(v, str) else tuple(v) for v in vars]
    names = [n for n, _ in vs]
    rels = [parse_poly(r, names)[0] for r in relations]
    return GradedQuotientRing(PrimeField(p), vs, rels)


def parse_ideal(ring: GradedQuotientRing, gens) -> HomogeneousIdeal:
    return HomogeneousIdeal(ring, [parse_poly(g, ring.names)[0] for g in gens])


def parse_module(ring: GradedQuotientRing, twists, rows, name: str = "M") -> PresentedModule:
    return PresentedModule(ring, twists, [[parse_poly(g, ring.names)[0] for g in r] for r in rows], name=name)


__all__ = [
    "CapWarning", "Elem", "GradedMap", "GradedQuotientRing", "Generators", "HomogeneousIdeal",
    "NonMinimalGeneratorsError", "NotAnRModuleError", "PresentedModule", "annihilator_degree",
    "check_minimality", "check_nagata_condition", "check_shamash_condition", "degree_basis", "edim",
    "elems_to_vector", "free_dim", "free_m_span", "free_offsets", "free_scalar_action", "ideal_span",
    "minimal_generators", "minimize_generators", "multiply", "parse_ideal", "parse_module", "parse_ring",
    "quotient_ring", "vector_to_elems", "weighted_degree",
]
