"""Sparse integer polynomials: ``{exponent tuple: coefficient}`` dictionaries.

Only what the instance grammar needs: integer coefficients, ``*``, ``^``,
``+`` and ``-``.  Parsing errors carry the 1-based column of the offending
token so callers can point at it.
"""

from __future__ import annotations

import re

Poly = dict  # exponent tuple -> int

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^]))")


class PolynomialSyntaxError(ValueError):
    def __init__(self, msg: str, col: int):
        super().__init__(f"column {col}: {msg}")
        self.col = col
        self.msg = msg


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character {text[pos:].lstrip()[:1]!r}",
                                        len(text) - len(text[pos:].lstrip()) + 1)
        kind = m.lastgroup
        start = m.start(kind) + 1
        out.append((kind, m.group(kind), start))
        pos = m.end()
    return out


def parse_poly(text: str, names: list[str]) -> tuple[Poly, list[tuple[tuple, int]]]:
    """Parse ``text`` over variables ``names``.

    Returns the polynomial and, for diagnostics, a list of
    ``(exponents, column)`` for every term as written.
    """
    index = {n: i for i, n in enumerate(names)}
    toks = _tokens(text)
    if not toks:
        raise PolynomialSyntaxError("empty polynomial", 1)
    poly: Poly = {}
    terms = []
    i = 0
    n = len(names)

    def peek():
        return toks[i] if i < len(toks) else (None, None, len(text) + 1)

    first = True
    while i < len(toks):
        sign = 1
        kind, val, col = peek()
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise PolynomialSyntaxError(f"expected '+' or '-', got {val!r}", col)
        first = False
        term_col = peek()[2]
        coeff = 1
        exps = [0] * n
        expect_factor = True
        while True:
            kind, val, col = peek()
            if kind == "num":
                coeff *= int(val)
                i += 1
            elif kind == "name":
                if val not in index:
                    raise PolynomialSyntaxError(f"unknown variable {val!r}", col)
                i += 1
                e = 1
                if peek()[0] == "op" and peek()[1] == "^":
                    i += 1
                    k2, v2, c2 = peek()
                    if k2 != "num":
                        raise PolynomialSyntaxError("expected integer exponent after '^'", c2)
                    e = int(v2)
                    i += 1
                exps[index[val]] += e
            else:
                raise PolynomialSyntaxError("expected a coefficient or variable", col)
            expect_factor = False
            if peek()[0] == "op" and peek()[1] == "*":
                i += 1
                expect_factor = True
                continue
            break
        if expect_factor:
            raise PolynomialSyntaxError("dangling '*'", peek()[2])
        key = tuple(exps)
        poly[key] = poly.get(key, 0) + sign * coeff
        terms.append((key, term_col))
    return {k: v for k, v in poly.items() if v != 0}, terms


def weighted_degree(exps: tuple, degrees: list[int]) -> int:
    return sum(e * w for e, w in zip(exps, degrees))


def is_homogeneous(poly: Poly, degrees: list[int]) -> bool:
    return len({weighted_degree(e, degrees) for e in poly}) <= 1


def poly_degree(poly: Poly, degrees: list[int]):
    """Degree of a homogeneous polynomial, ``None`` for zero."""
    ds = {weighted_degree(e, degrees) for e in poly}
    if not ds:
        return None
    if len(ds) > 1:
        raise ValueError("polynomial is not homogeneous")
    return ds.pop()


def format_poly(poly: Poly, names: list[str], p: int | None = None) -> str:
    """Render in the instance grammar; terms in descending lex order.

    With ``p`` given, coefficients are shown as symmetric residues.
    """
    if not poly:
        return "0"
    parts = []
    for exps in sorted(poly, reverse=True):
        c = poly[exps]
        if p is not None:
            c %= p
            if c > p // 2:
                c -= p
        if c == 0:
            continue
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        body = "*".join(([str(mag)] if mag != 1 or not factors else []) + factors)
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, body in parts[1:]:
        out += f" {s} {body}"
    return out


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            k = tuple(x + y for x, y in zip(ea, eb))
            out[k] = out.get(k, 0) + ca * cb
    return {k: v for k, v in out.items() if v != 0}
