"""Exact linear algebra over a prime field F_p.

Matrices are plain ``numpy`` int64 arrays holding canonical representatives
in ``[0, p)``.  Every routine is deterministic: the same input always gives
the same reduced form, pivots and kernel basis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_INT64_MAX = np.iinfo(np.int64).max


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int = 101

    def __post_init__(self):
        if not isinstance(self.p, int) or not (2 <= self.p < 2**31):
            raise ValueError(f"characteristic must be an integer in [2, 2^31), got {self.p!r}")
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, self.p - 2, self.p)

    def matrix(self, rows) -> np.ndarray:
        """Build a canonical F_p matrix from nested integer lists."""
        a = np.array(rows, dtype=object)
        if a.size == 0:
            return np.zeros(a.shape if a.ndim == 2 else (0, 0), dtype=np.int64)
        return np.array([[int(x) % self.p for x in row] for row in a], dtype=np.int64).reshape(a.shape)

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.zeros((rows, cols), dtype=np.int64)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)


_FLOAT_EXACT = 2 ** 53


def _as_mat(m) -> np.ndarray:
    a = np.asarray(m, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1) if a.size else np.zeros((0, 0), dtype=np.int64)
    return a


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Product of two F_p matrices, exact for every p < 2^31."""
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    inner = a.shape[-1]
    if inner * (p - 1) ** 2 < _FLOAT_EXACT:
        # every partial sum is an integer below 2^53, so BLAS in float64 is exact
        return np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64) % p
    chunk = max(1, _INT64_MAX // max(1, (p - 1) ** 2))
    if inner <= chunk:
        return (a @ b) % p
    out = np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.int64)
    for s in range(0, inner, chunk):
        out = (out + (a[..., s:s + chunk] @ b[s:s + chunk]) % p) % p
    return out


def rref(m, p: int) -> tuple[int, np.ndarray, list[int]]:
    """Reduced row echelon form.

    Returns ``(rank, reduced, pivot_cols)``; ``reduced`` keeps only the
    ``rank`` nonzero rows.
    """
    a = _as_mat(m) % p
    a = a.copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        piv = int(a[r, c])
        if piv != 1:
            a[r, c:] = (a[r, c:] * pow(piv, p - 2, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size * 4 > rows:
            a[:, c:] = (a[:, c:] - np.outer(col, a[r, c:])) % p
        elif hit.size:
            a[hit, c:] = (a[hit, c:] - np.outer(col[hit], a[r, c:])) % p
        pivots.append(c)
        r += 1
    return r, a[:r], pivots


def rank(m, p: int) -> int:
    a = _as_mat(m)
    if a.size == 0:
        return 0
    return rref(a, p)[0]


def kernel_basis(m, p: int) -> np.ndarray:
    """Right kernel of ``m``; the columns of the result form a basis."""
    a = _as_mat(m)
    cols = a.shape[1]
    r, red, piv = rref(a, p)
    free = [c for c in range(cols) if c not in set(piv)]
    out = np.zeros((cols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        out[f, j] = 1
        for i, pc in enumerate(piv):
            out[pc, j] = (-red[i, f]) % p
    return out


def solve(m, b, p: int):
    """Return some ``x`` with ``m @ x == b`` (mod p), or ``None``."""
    a = _as_mat(m)
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"dimension mismatch: matrix has {a.shape[0]} rows, vector has {b.shape[0]}")
    cols = a.shape[1]
    aug = np.concatenate([a % p, (b % p).reshape(-1, 1)], axis=1)
    r, red, piv = rref(aug, p)
    if piv and piv[-1] == cols:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for i, pc in enumerate(piv):
        x[pc] = red[i, cols]
    return x


class Echelon:
    """Incrementally grown subspace of F_p^n kept in reduced row echelon form.

    ``add`` reports whether a vector enlarged the span, which is how generators
    are picked greedily in a fixed order.
    """

    def __init__(self, n: int, p: int):
        self.n = n
        self.p = p
        self.rows = np.zeros((0, n), dtype=np.int64)
        self.pivots: list[int] = []

    @classmethod
    def from_rows(cls, rows, n: int, p: int) -> "Echelon":
        e = cls(n, p)
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, n)
        if rows.shape[0]:
            r, red, piv = rref(rows, p)
            e.rows, e.pivots = red, list(piv)
        return e

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64) % self.p
        if not self.pivots:
            return v
        coeffs = v[..., self.pivots]
        return (v - matmul(coeffs, self.rows, self.p)) % self.p

    def contains(self, v) -> bool:
        return not self.reduce(v).any()

    def add(self, v) -> bool:
        w = self.reduce(v)
        nz = np.flatnonzero(w)
        if nz.size == 0:
            return False
        c = int(nz[0])
        w = (w * pow(int(w[c]), self.p - 2, self.p)) % self.p
        if self.pivots:
            col = self.rows[:, c].copy()
            self.rows = (self.rows - np.outer(col, w) % self.p) % self.p
        pos = int(np.searchsorted(self.pivots, c))
        self.rows = np.insert(self.rows, pos, w, axis=0)
        self.pivots.insert(pos, c)
        return True

    def extend(self, vecs) -> list[int]:
        """Add rows of ``vecs`` in order; return indices of those kept."""
        kept = []
        if self.n == 0:
            return kept
        for i, v in enumerate(np.asarray(vecs, dtype=np.int64).reshape(-1, self.n)):
            if self.add(v):
                kept.append(i)
        return kept

    def add_span(self, vecs) -> None:
        if self.n == 0:
            return
        vecs = np.asarray(vecs, dtype=np.int64).reshape(-1, self.n)
        if vecs.shape[0] == 0:
            return
        if self.pivots:
            vecs = np.concatenate([self.rows, vecs])
        r, red, piv = rref(vecs, self.p)
        self.rows, self.pivots = red, list(piv)

    def quotient_map(self) -> tuple[np.ndarray, list[int]]:
        """Matrix of F_p^n -> F_p^n / span in coordinates of the non-pivot columns."""
        free = [c for c in range(self.n) if c not in set(self.pivots)]
        q = np.zeros((len(free), self.n), dtype=np.int64)
        for j, f in enumerate(free):
            q[j, f] = 1
        if self.pivots:
            # a pivot coordinate e_c equals minus the rest of its row modulo the span
            for i, c in enumerate(self.pivots):
                q[:, c] = (-self.rows[i, free]) % self.p
        return q, free


def intersect(a, b, p: int) -> np.ndarray:
    """Row basis of rowspace(a) ∩ rowspace(b)."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros((0, a.shape[1] if a.ndim == 2 else b.shape[1]), dtype=np.int64)
    k = kernel_basis(np.concatenate([a, (-b) % p]).T, p)
    vecs = matmul(k[: a.shape[0]].T, a, p)
    if vecs.shape[0] == 0:
        return vecs
    r, red, _ = rref(vecs, p)
    return red
