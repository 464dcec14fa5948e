"""Instance files, the verification battery, instance generators and reports.

Instance grammar (line oriented, ``#`` starts a comment)::

    char: 101
    vars: x:1, y:1
    base_relations: [x^3]
    ideal: [x^2]
    module k:
      twists: [0]
      relations:
        [x]

Optional ``hmax:``, ``dmax:`` and ``checks:`` lines set defaults that the
command line can override.
"""

from __future__ import annotations

import hashlib
import json
import re
import time
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .e_resolution import minimal_e_resolution
from .exactlin import PrimeField, is_prime
from .graded_algebra import (
    GradedQuotientRing,
    HomogeneousIdeal,
    NonMinimalGeneratorsError,
    PresentedModule,
    check_nagata_condition,
    check_shamash_condition,
    edim,
    minimize_generators,
)
from .koszul_dg import (
    build_koszul,
    build_tate_two_step,
    koszul_homology,
    qci_certificate_A,
    qci_certificate_B,
)
from .poly import PolynomialSyntaxError, format_poly, parse_poly, poly_degree, poly_mul
from .resolution import depth, grade, minimal_free_resolution, tensor_k_homology
from .series import (
    EQUAL,
    FAILS,
    INCONCLUSIVE,
    TruncatedSeries,
    binomial_series,
    check_inert,
    check_large_ineq,
    check_qci_formulas,
    check_theorem_A,
    check_theorem_B,
    estimate_cx_curv,
    inequality_result,
    equality_result,
    one_minus_t2,
    skipped,
)

DEFAULT_HMAX = 12
DEFAULT_DMAX = 40
CHECK_GROUPS = ("theorem-B", "large", "inert", "classical", "qci", "theorem-A", "cx-curv")


class InstanceError(ValueError):
    """Input problem with a position: kind is syntax, inhomogeneous or characteristic."""

    def __init__(self, kind: str, message: str, line: int, col: int = 1):
        super().__init__(f"line {line}, column {col}: {kind} error: {message}")
        self.kind = kind
        self.line = line
        self.col = col


class CertificateDisagreement(RuntimeError):
    pass


# ---- instances --------------------------------------------------------------------------


@dataclass
class ModuleSpec:
    name: str
    twists: list
    rows: list  # one list of polynomial strings per cover generator


@dataclass
class Instance:
    char: int
    vars: list  # (name, degree)
    base_relations: list = field(default_factory=list)
    ideal: list = field(default_factory=list)
    modules: list = field(default_factory=list)
    hmax: int | None = None
    dmax: int | None = None
    checks: list | None = None

    @property
    def names(self) -> list[str]:
        return [v for v, _ in self.vars]

    @property
    def n(self) -> int:
        return len(self.ideal)

    @cached_property
    def ring(self) -> GradedQuotientRing:
        rels = [parse_poly(r, self.names)[0] for r in self.base_relations]
        return GradedQuotientRing(PrimeField(self.char), self.vars, rels)

    def ideal_obj(self) -> HomogeneousIdeal:
        return HomogeneousIdeal(self.ring, [parse_poly(g, self.names)[0] for g in self.ideal])

    def module(self, spec: ModuleSpec) -> PresentedModule:
        rows = [[parse_poly(g, self.names)[0] for g in r] for r in spec.rows]
        if not rows or all(not r for r in rows):
            rows = [[] for _ in spec.twists]
        return PresentedModule(self.ring, spec.twists, rows, name=spec.name)

    def to_text(self) -> str:
        lines = [f"char: {self.char}", "vars: " + ", ".join(f"{v}:{d}" for v, d in self.vars)]
        if self.base_relations:
            lines.append("base_relations: [" + ", ".join(self.base_relations) + "]")
        lines.append("ideal: [" + ", ".join(self.ideal) + "]")
        if self.hmax is not None:
            lines.append(f"hmax: {self.hmax}")
        if self.dmax is not None:
            lines.append(f"dmax: {self.dmax}")
        if self.checks is not None:
            lines.append("checks: " + ",".join(self.checks))
        for m in self.modules:
            lines.append(f"module {m.name}:")
            lines.append("  twists: [" + ", ".join(str(t) for t in m.twists) + "]")
            lines.append("  relations:")
            for r in m.rows:
                lines.append("    [" + ", ".join(r) + "]")
        return "\n".join(lines) + "\n"

    def canonical(self) -> str:
        """Echo with every polynomial normalised, the basis of the content hash."""
        names = self.names
        norm = lambda g: format_poly(parse_poly(g, names)[0], names, self.char)  # noqa: E731
        copy = Instance(self.char, list(self.vars), [norm(g) for g in self.base_relations],
                        [norm(g) for g in self.ideal],
                        [ModuleSpec(m.name, list(m.twists), [[norm(g) for g in r] for r in m.rows])
                         for m in self.modules])
        return copy.to_text()

    def content_hash(self) -> str:
        return hashlib.sha256(self.canonical().encode()).hexdigest()


_KEY = re.compile(r"^(char|vars|base_relations|ideal|hmax|dmax|checks)\s*:(.*)$")
_MODULE = re.compile(r"^module\s+([A-Za-z_][A-Za-z_0-9]*)\s*:\s*$")


def _split_list(text: str, line: int, col0: int) -> list[tuple[str, int]]:
    """``[a, b]`` -> [(a, column), (b, column)]; columns are 1-based in the original line."""
    s = text.strip()
    lead = len(text) - len(text.lstrip())
    if not (s.startswith("[") and s.endswith("]")):
        raise InstanceError("syntax", "expected a bracketed list", line, col0 + lead)
    body = s[1:-1]
    if not body.strip():
        return []
    out = []
    pos = 0
    for part in body.split(","):
        if not part.strip():
            raise InstanceError("syntax", "empty list entry", line, col0 + lead + 1 + pos)
        out.append((part, col0 + lead + 1 + pos))
        pos += len(part) + 1
    return out


def _check_poly(text: str, col: int, line: int, names, degrees, p: int, what: str):
    try:
        poly, terms = parse_poly(text, names)
    except PolynomialSyntaxError as e:
        raise InstanceError("syntax", e.msg, line, col + e.col - 1) from None
    live = [(e, c) for e, c in terms if poly.get(e, 0) % p]
    if live:
        first = sum(a * w for a, w in zip(live[0][0], degrees))
        for e, c in live:
            if sum(a * w for a, w in zip(e, degrees)) != first:
                raise InstanceError("inhomogeneous", f"{what} {text.strip()!r} is not homogeneous", line,
                                    col + c - 1)
    return poly


def parse_instance(text: str) -> Instance:
    char = None
    vars_: list = []
    base: list = []
    ideal: list = []
    modules: list[ModuleSpec] = []
    hmax = dmax = None
    checks = None
    current: ModuleSpec | None = None
    expecting_rows = False
    pending: list = []  # (kind, text, col, line) validated once vars and char are known

    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        indent = len(line) - len(line.lstrip())
        m = _MODULE.match(stripped)
        if m:
            if any(x.name == m.group(1) for x in modules):
                raise InstanceError("syntax", f"module {m.group(1)!r} declared twice", ln, indent + 8)
            current = ModuleSpec(m.group(1), [], [])
            modules.append(current)
            expecting_rows = False
            continue
        if current is not None and stripped.startswith("twists:"):
            col = indent + len("twists:") + 1
            try:
                current.twists = [int(t) for t, _ in _split_list(stripped[7:], ln, col)]
            except ValueError:
                raise InstanceError("syntax", "twists must be integers", ln, col) from None
            expecting_rows = False
            continue
        if current is not None and stripped.startswith("relations:"):
            expecting_rows = True
            rest = stripped[len("relations:"):].strip()
            if rest:
                raise InstanceError("syntax", "relation rows go on their own lines", ln, indent + 11)
            continue
        if current is not None and expecting_rows and stripped.startswith("["):
            entries = _split_list(stripped, ln, indent + 1)
            current.rows.append([t.strip() for t, _ in entries])
            pending.extend(("module relation", t, c, ln) for t, c in entries)
            continue
        k = _KEY.match(stripped)
        if not k:
            raise InstanceError("syntax", f"unrecognised line {stripped[:30]!r}", ln, indent + 1)
        key, val = k.group(1), k.group(2)
        vcol = indent + len(key) + 2
        scol = vcol + len(val) - len(val.lstrip())  # first character of a scalar value
        current = None
        expecting_rows = False
        if key == "char":
            try:
                char = int(val)
            except ValueError:
                raise InstanceError("syntax", "characteristic must be an integer", ln, scol) from None
            if not is_prime(char) or char >= 2 ** 31:
                raise InstanceError("characteristic", f"{char} is not a prime below 2^31", ln, scol)
        elif key == "vars":
            pos = 0
            for part in val.split(","):
                item = part.strip()
                col = vcol + pos + len(part) - len(part.lstrip())
                pos += len(part) + 1
                mm = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*)(?:\s*:\s*(\d+))?", item)
                if not mm:
                    raise InstanceError("syntax", f"bad variable declaration {item!r}", ln, col)
                deg = int(mm.group(2)) if mm.group(2) else 1
                if deg < 1:
                    raise InstanceError("syntax", "variable degrees must be positive", ln, col)
                if any(v == mm.group(1) for v, _ in vars_):
                    raise InstanceError("syntax", f"variable {mm.group(1)!r} declared twice", ln, col)
                vars_.append((mm.group(1), deg))
        elif key in ("base_relations", "ideal"):
            entries = _split_list(val, ln, vcol)
            target = base if key == "base_relations" else ideal
            target.extend(t.strip() for t, _ in entries)
            what = "base relation" if key == "base_relations" else "ideal generator"
            pending.extend((what, t, c, ln) for t, c in entries)
        elif key in ("hmax", "dmax"):
            try:
                v = int(val)
            except ValueError:
                raise InstanceError("syntax", f"{key} must be an integer", ln, scol) from None
            if v < 0:
                raise InstanceError("syntax", f"{key} must be non-negative", ln, scol)
            hmax, dmax = (v, dmax) if key == "hmax" else (hmax, v)
        elif key == "checks":
            checks = _parse_checks(val.strip(), ln, scol)

    if char is None:
        raise InstanceError("syntax", "missing 'char:' line", 1)
    if not vars_:
        raise InstanceError("syntax", "missing 'vars:' line", 1)
    names = [v for v, _ in vars_]
    degrees = [d for _, d in vars_]
    for what, t, c, ln in pending:
        poly = _check_poly(t, c, ln, names, degrees, char, what)
        if what != "module relation" and not {e: v for e, v in poly.items() if v % char}:
            raise InstanceError("syntax", f"{what} is zero", ln, c)
        if what == "ideal generator" and poly_degree({e: v for e, v in poly.items() if v % char}, degrees) < 1:
            raise InstanceError("syntax", "ideal generators must have positive degree", ln, c)
    inst = Instance(char, vars_, base, ideal, modules, hmax, dmax, checks)
    for spec in modules:
        if spec.rows and len(spec.rows) != len(spec.twists):
            raise InstanceError("syntax", f"module {spec.name}: {len(spec.rows)} relation rows for "
                                f"{len(spec.twists)} cover generators", 1)
        try:
            inst.module(spec)
        except ValueError as e:
            raise InstanceError("inhomogeneous", f"module {spec.name}: {e}", 1) from None
    return inst


def _parse_checks(val: str, line: int = 0, col: int = 1) -> list[str]:
    if val in ("all", ""):
        return list(CHECK_GROUPS) if val == "all" else []
    if val == "none":
        return []
    out = [c.strip() for c in val.split(",") if c.strip()]
    for c in out:
        if c not in CHECK_GROUPS:
            raise InstanceError("syntax", f"unknown check {c!r}; choose from {', '.join(CHECK_GROUPS)}", line, col)
    return out


# ---- reports ----------------------------------------------------------------------------


@dataclass
class Report:
    instance: str
    content_hash: str
    hmax: int
    dmax: int
    checks_selected: list
    certificate: dict = field(default_factory=dict)
    invariants: dict = field(default_factory=dict)
    series: dict = field(default_factory=dict)  # name -> TruncatedSeries
    results: list = field(default_factory=list)  # CheckResult
    estimates: dict = field(default_factory=dict)
    cap_flags: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    timing: dict = field(default_factory=dict)

    def exit_code(self) -> int:
        verdicts = [r.verdict for r in self.results]
        if FAILS in verdicts:
            return 1
        if INCONCLUSIVE in verdicts or self.cap_flags:
            return 2
        return 0


def emit_report(report: Report, fmt: str = "text", include_timing: bool = True) -> str:
    if fmt == "machine":
        doc = {
            "instance": report.instance,
            "content_hash": report.content_hash,
            "window": {"hmax": report.hmax, "dmax": report.dmax},
            "checks_selected": report.checks_selected,
            "certificate": report.certificate,
            "invariants": report.invariants,
            "series": {k: {"coeffs": list(s.coeffs), "cap_sensitive": s.cap_sensitive}
                       for k, s in report.series.items()},
            "results": [r.to_dict() for r in report.results],
            "estimates": report.estimates,
            "cap_flags": report.cap_flags,
            "notes": report.notes,
            "exit_code": report.exit_code(),
        }
        if include_timing:
            doc["timing"] = report.timing
        return json.dumps(doc, sort_keys=True, indent=1, default=_json_default) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    out = [f"instance {report.content_hash[:16]}  window hmax={report.hmax} dmax={report.dmax}"]
    out += ["  " + ln for ln in report.instance.strip().splitlines()]
    if report.certificate:
        c = report.certificate
        out.append(f"verdict: {c.get('verdict')}  (certificate A: {c.get('A')}, certificate B: {c.get('B')})")
    if report.invariants:
        out.append("invariants: " + ", ".join(f"{k}={v}" for k, v in sorted(report.invariants.items())))
    if report.series:
        out.append("series:")
        width = max(len(k) for k in report.series)
        for k in sorted(report.series):
            s = report.series[k]
            out.append(f"  {k:<{width}}  {s}" + ("  [cap-sensitive]" if s.cap_sensitive else ""))
    if report.results:
        out.append("checks:")
        width = max(len(r.name) for r in report.results)
        for r in report.results:
            extra = f"  (witness t^{r.witness})" if r.witness is not None and r.verdict != EQUAL else ""
            if r.details.get("reason"):
                extra += f"  ({r.details['reason']})"
            if r.details.get("orientation"):
                extra += f"  orientation: {r.details['orientation']}"
            out.append(f"  {r.name:<{width}}  {r.verdict}{extra}")
    if report.estimates:
        out.append("heuristic estimates (not determined by a truncation):")
        for k in sorted(report.estimates):
            e = report.estimates[k]
            out.append(f"  {k}: cx~{e['cx']} curv~{e['curv']} over i in {e['window']}")
    for n in report.notes:
        out.append(f"note: {n}")
    if report.cap_flags:
        out.append("cap-sensitive: " + ", ".join(report.cap_flags))
    if include_timing and report.timing:
        out.append("timing: " + ", ".join(f"{k}={v:.2f}s" for k, v in sorted(report.timing.items())))
    return "\n".join(out) + "\n"


def _json_default(o):
    if isinstance(o, (np.integer,)):
        return int(o)
    if isinstance(o, tuple):
        return list(o)
    raise TypeError(f"cannot serialise {type(o).__name__}")


def parse_report(text: str) -> dict:
    """Inverse of the machine format: series come back as TruncatedSeries."""
    doc = json.loads(text)
    doc["series"] = {k: TruncatedSeries(tuple(v["coeffs"]), v["cap_sensitive"]) for k, v in doc["series"].items()}
    return doc


# ---- the battery ------------------------------------------------------------------------


def _series_from(cx, hmax: int) -> TruncatedSeries:
    return TruncatedSeries.from_list(cx.ranks()[: hmax + 1], hmax, cap_sensitive=cx.cap_sensitive)


def run_battery(inst: Instance, hmax: int | None = None, dmax: int | None = None, checks: list | None = None,
                cache_dir: str | None = None, minimize: bool = False) -> Report:
    hmax = hmax if hmax is not None else (inst.hmax if inst.hmax is not None else DEFAULT_HMAX)
    dmax = dmax if dmax is not None else (inst.dmax if inst.dmax is not None else DEFAULT_DMAX)
    selected = list(checks) if checks is not None else (inst.checks if inst.checks is not None else list(CHECK_GROUPS))
    rep = Report(inst.canonical(), inst.content_hash(), hmax, dmax, selected)
    if not selected:
        return rep
    clock = [time.perf_counter()]

    def tick(stage):
        now = time.perf_counter()
        rep.timing[stage] = now - clock[0]
        clock[0] = now

    Q = inst.ring
    ideal = inst.ideal_obj()
    ok, bad = ideal.minimality
    if not ok:
        if not minimize:
            raise NonMinimalGeneratorsError(bad, format_poly(ideal.gens[bad], Q.names))
        ideal = minimize_generators(ideal)
        rep.notes.append("ideal generators minimised to " + ideal.describe())
    R = Q.quotient(ideal.gens)
    n = ideal.n
    # below twice the top degree of the defining data, even first syzygies are cut off
    data = [poly_degree(g, Q.degrees) for g in Q.j_gens] + ideal.degrees
    data += [d for spec in inst.modules for d in inst.module(spec).relation_degrees]
    floor = 2 * max(data, default=1)
    if dmax < floor:
        rep.notes.append(f"dmax raised from {dmax} to {floor} to cover the defining relations")
        dmax = floor
        rep.dmax = dmax

    E = build_koszul(Q, ideal)
    H = koszul_homology(E, n, dmax, R=R)
    cert_a = qci_certificate_A(H)
    tate = build_tate_two_step(E, H, hmax + 1)
    cert_b = qci_certificate_B(tate, hmax, dmax)
    if cert_a.verdict != cert_b.verdict:
        raise CertificateDisagreement(f"certificate A says {cert_a.verdict}, B says {cert_b.verdict}: "
                                      f"{cert_a.report} / {cert_b.report}")
    qci = cert_a.verdict
    m = H.m
    if qci and m == 0:
        verdict = "c.i. (hence q.c.i.)"
    elif qci:
        verdict = "q.c.i., not c.i."
    else:
        verdict = "not q.c.i."
    rep.certificate = {"verdict": verdict, "A": cert_a.verdict, "B": cert_b.verdict, "n": n, "m": m,
                       "h1_twists": H.h1_twists, "valid_through": {"hmax": hmax, "dmax": dmax},
                       "tate_ranks": [tate.rank(i) for i in range(hmax + 1)]}
    rep.invariants = {
        "koszul_d2": E.check_d_squared(), "koszul_leibniz": E.check_leibniz(),
        "tate_d2": tate.check_d_squared(dmax), "tate_minimal": tate.is_minimal(),
        "grade": grade(ideal, dmax), "depth_Q": depth(Q, dmax), "depth_R": depth(R, dmax),
        "edim_Q": edim(Q), "edim_R": edim(R), "nagata": check_nagata_condition(ideal),
    }
    if H.cap_sensitive and not qci:
        rep.notes.append("Koszul homology of a non-artinian ring is computed through the degree cap only")
    tick("certificates")

    def sq(module, ring):
        cx = minimal_free_resolution(module, hmax, dmax, ring=ring, cache_dir=cache_dir)
        return _series_from(cx, hmax)

    def se(module):
        U = minimal_e_resolution(module, E, hmax, dmax)
        rep.invariants.setdefault("e_resolutions_minimal", True)
        rep.invariants["e_resolutions_minimal"] &= U.minimal
        return U.poincare_series()

    k = PresentedModule.residue_field(Q)
    r_mod = PresentedModule.cyclic(Q, ideal.gens, name="R")
    modules = [("k", k)]
    bad_modules = {}
    for spec in inst.modules:
        mod = inst.module(spec)
        if not mod.is_killed_by(ideal.elems):
            bad_modules[spec.name] = "not an R-module (I*M != 0)"
            continue
        if spec.name != "k":
            modules.append((spec.name, mod))
    S = rep.series
    S["P^Q[k]"] = sq(k, Q)
    S["P^R[k]"] = sq(k.over(R), R)
    S["P^Q[R]"] = sq(r_mod, Q)
    S["P^E[R]"] = se(r_mod)
    S["P^Q[E]"] = TruncatedSeries.from_list(tensor_k_homology(E.complex, hmax), hmax)
    shamash = {}
    for name, mod in modules:
        if name != "k":
            S[f"P^Q[{name}]"] = sq(mod, Q)
            S[f"P^R[{name}]"] = sq(mod.over(R), R)
        S[f"P^E[{name}]"] = se(mod)
        shamash[name] = check_shamash_condition(ideal, mod)
    tick("resolutions")

    res = rep.results
    inv = rep.invariants
    for name, reason in bad_modules.items():
        res.append(skipped(f"module[{name}]", reason))
    for name, _ in modules:
        pq, pr, pe = S[f"P^Q[{name}]"], S[f"P^R[{name}]"], S[f"P^E[{name}]"]
        tag = f"[{name}]"
        if "theorem-B" in selected:
            for r in check_theorem_B(pe, pq, n, shamash[name], inv["nagata"]):
                r.name += tag
                res.append(r)
        if "large" in selected:
            res.append(check_large_ineq(f"large(Q,E){tag}", pq, pe, S["P^Q[E]"]))
            res.append(check_large_ineq(f"large(E,R){tag}", pe, pr, S["P^E[R]"]))
            res.append(check_large_ineq(f"large(Q,R){tag}", pq, pr, S["P^Q[R]"]))
        if "inert" in selected:
            r = check_inert(pr, pq, S["P^R[k]"], S["P^Q[k]"], expect_equality=qci and shamash[name])
            r.name += tag
            res.append(r)
        if "classical" in selected:
            if qci and m == 0:
                D = pq.order
                res.append(inequality_result(f"ci-ring-vs-base{tag}", pr, pq * one_minus_t2(D) ** (-n),
                                             expect_equality=shamash[name]))
                res.append(inequality_result(f"ci-base-vs-ring{tag}", pq, pr * binomial_series(n, D),
                                             expect_equality=inv["nagata"]))
                res.append(equality_result(f"ci-koszul-equals-ring{tag}", pe, pr))
            else:
                res.append(skipped(f"classical{tag}", "ideal is not generated by a regular sequence"))
        if "theorem-A" in selected:
            if not qci:
                res.append(skipped(f"theorem-A{tag}", "map is not q.c.i."))
            elif not shamash[name]:
                res.append(skipped(f"theorem-A{tag}", "I is not contained in m*ann(M)"))
            else:
                r = check_theorem_A(pmq=pq, pmr=pr, pkq=S["P^Q[k]"], pkr=S["P^R[k]"], pme=pe,
                                    grade=inv["grade"], m=m)
                r.name += tag
                res.append(r)
        if "cx-curv" in selected and hmax >= 2:
            for ring_name, s in (("Q", pq), ("R", pr)):
                rep.estimates[f"{ring_name}[{name}]"] = estimate_cx_curv(s)
    if "qci" in selected:
        if qci:
            res.extend(check_qci_formulas(
                n=n, m=m, grade=inv["grade"], depth_q=inv["depth_Q"], depth_r=inv["depth_R"],
                edim_q=inv["edim_Q"], edim_r=inv["edim_R"], pkq=S["P^Q[k]"], pkr=S["P^R[k]"], pre=S["P^E[R]"],
                modules={name: (S[f"P^Q[{name}]"], S[f"P^R[{name}]"]) for name, _ in modules if name != "k"},
                nagata=inv["nagata"]))
        else:
            res.append(skipped("qci", "map is not q.c.i."))
    for name, s in sorted(S.items()):
        if s.cap_sensitive:
            rep.cap_flags.append(name)
    tick("checks")
    rep.timing = {k2: round(v, 3) for k2, v in rep.timing.items()}
    return rep


# ---- generators -------------------------------------------------------------------------

FAMILIES = ("regular-sequence", "power-in-hypersurface", "random-homogeneous")
_NAMES = "xyzwuv"


def _random_form(rng, nvars: int, deg: int, p: int) -> dict:
    monos = GradedQuotientRing(PrimeField(p), [(_NAMES[i], 1) for i in range(nvars)]).monomials(deg)
    while True:
        coeffs = rng.integers(-3, 4, len(monos))
        if coeffs.any():
            return {m: int(c) for m, c in zip(monos, coeffs) if c}


def _fmt(poly, nvars, p):
    return format_poly(poly, list(_NAMES[:nvars]), p)


def generate_instance(family: str, seed: int = 0, p: int = 101, **params) -> Instance:
    """Deterministic in (family, seed, params)."""
    rng = np.random.default_rng(seed)
    if family == "power-in-hypersurface":
        a, b = int(params.get("a", 2)), int(params.get("b", 3))
        if not 1 <= a < b:
            raise ValueError("need 1 <= a < b")
        return Instance(p, [("x", 1)], [f"x^{b}"], [f"x^{a}"], [ModuleSpec("k", [0], [["x"]])])
    if family == "regular-sequence":
        n = int(params.get("n", 2))
        e = int(params.get("vars", n + 1))
        maxdeg = int(params.get("maxdeg", 2))
        if n > e:
            raise ValueError("a regular sequence cannot be longer than the number of variables")
        for _ in range(100):
            gens = [_fmt(_random_form(rng, e, int(rng.integers(1, maxdeg + 1)), p), e, p) for _ in range(n)]
            inst = Instance(p, [(_NAMES[i], 1) for i in range(e)], [], gens,
                            [ModuleSpec("k", [0], [list(_NAMES[:e])])])
            ideal = inst.ideal_obj()
            if ideal.minimal and grade(ideal, 4 * maxdeg * n) == n:
                return inst
        raise RuntimeError("no regular sequence found")
    if family == "random-homogeneous":
        return _random_homogeneous(rng, p, params)
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def _random_homogeneous(rng, p: int, params) -> Instance:
    """Mixed templates: generic forms, exact zero divisors, powers in hypersurfaces."""
    nvars = int(params.get("vars", 2))
    maxdeg = int(params.get("maxdeg", 2))
    count = int(params.get("count", 2))
    templates = ["generic", "zero-divisor", "power", "artinian", "artinian", "monomial"]
    template = params.get("template") or templates[int(rng.integers(0, len(templates)))]
    names = list(_NAMES[:nvars])
    vars_ = [(v, 1) for v in names]
    base: list = []
    if template == "zero-divisor":
        l1, l2 = _random_form(rng, nvars, 1, p), _random_form(rng, nvars, 1, p)
        base = [_fmt(poly_mul(l1, l2), nvars, p)]
        gens = [_fmt(l1, nvars, p)]
    elif template == "power":
        a = int(rng.integers(1, 3))
        b = a + int(rng.integers(1, 3))
        l1 = _random_form(rng, nvars, 1, p)

        def pw(f, k):
            out = {tuple([0] * nvars): 1}
            for _ in range(k):
                out = poly_mul(out, f)
            return out

        base = [_fmt(pw(l1, b), nvars, p)]
        gens = [_fmt(pw(l1, a), nvars, p)]
    elif template == "monomial":
        monos = GradedQuotientRing(PrimeField(p), vars_).monomials(2)
        pick = rng.choice(len(monos), size=min(2, len(monos)), replace=False)
        gens = [_fmt({monos[int(i)]: 1}, nvars, p) for i in sorted(pick)]
    else:
        low = 1
        if template == "artinian":
            base = [f"{v}^{int(rng.integers(2, 4))}" for v in names]
            low = min(2, maxdeg)
        elif rng.integers(0, 2):
            base = [_fmt(_random_form(rng, nvars, int(rng.integers(2, maxdeg + 2)), p), nvars, p)]
        k = int(rng.integers(1, count + 1))
        gens = [_fmt(_random_form(rng, nvars, int(rng.integers(low, maxdeg + 1)), p), nvars, p) for _ in range(k)]
    inst = Instance(p, vars_, base, gens, [ModuleSpec("k", [0], [names])])
    ideal = inst.ideal_obj()
    elems = ideal.elems
    keep = [g for g, e in zip(ideal.gens, elems) if not e.is_zero()]
    if len(keep) != len(ideal.gens) or not ideal.minimal:
        ideal = minimize_generators(HomogeneousIdeal(inst.ring, keep)) if keep else HomogeneousIdeal(inst.ring, [])
    inst.ideal = [format_poly(g, names, p) for g in ideal.gens]
    # a second module: a cyclic quotient killed by I
    extra = _random_form(rng, nvars, 1, p)
    inst.modules.append(ModuleSpec("M", [0], [inst.ideal + [_fmt(extra, nvars, p)]]))
    return inst
