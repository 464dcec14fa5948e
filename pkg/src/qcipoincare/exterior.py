"""Sign bookkeeping for exterior monomials e_S, S a sorted tuple of indices."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .graded_algebra import Elem, GradedMap, GradedQuotientRing


@lru_cache(maxsize=None)
def subsets(n: int, k: int) -> tuple:
    return tuple(combinations(range(n), k))


def wedge_sign(s: tuple, t: tuple) -> int:
    """Sign of e_S * e_T = sign * e_{S ∪ T}; 0 when S and T meet."""
    if set(s) & set(t):
        return 0
    inversions = sum(1 for a in s for b in t if a > b)
    return -1 if inversions % 2 else 1


def wedge(s: tuple, t: tuple):
    sg = wedge_sign(s, t)
    if sg == 0:
        return 0, None
    return sg, tuple(sorted(s + t))


def boundary_terms(s: tuple):
    """Yield (sign, i, S minus i) for d(e_S) = sum sign * f_i e_{S\\i}."""
    for pos, i in enumerate(s):
        yield (-1 if pos % 2 else 1), i, s[:pos] + s[pos + 1:]


def koszul_maps(ring: GradedQuotientRing, elems: list[Elem]) -> tuple[list[list[tuple]], list[list[int]], list[GradedMap]]:
    """Koszul complex on ``elems`` as graded free modules.

    Returns ``(bases, twists, maps)`` where ``maps[i]`` is the differential
    from homological degree ``i`` to ``i-1`` (``maps[0]`` is ``None``).
    """
    n = len(elems)
    degs = [f.deg for f in elems]
    bases = [list(subsets(n, i)) for i in range(n + 1)]
    twists = [[sum(degs[j] for j in s) for s in b] for b in bases]
    maps: list = [None]
    for i in range(1, n + 1):
        idx = {s: r for r, s in enumerate(bases[i - 1])}
        entries = {}
        for c, s in enumerate(bases[i]):
            for sg, j, rest in boundary_terms(s):
                entries[(idx[rest], c)] = ring.scale(sg, elems[j])
        maps.append(GradedMap(ring, twists[i], twists[i - 1], entries))
    return bases, twists, maps
