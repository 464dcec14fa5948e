"""Integer power series truncated at t^D, exact arithmetic only."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple
    cap_sensitive: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        """Truncation order D: coefficients c_0..c_D are known."""
        return len(self.coeffs) - 1

    @classmethod
    def from_list(cls, coeffs, D: int | None = None, cap_sensitive: bool = False) -> "TruncatedSeries":
        coeffs = list(coeffs)
        if D is not None:
            coeffs = (coeffs + [0] * (D + 1))[: D + 1]
        return cls(tuple(coeffs), cap_sensitive)

    @classmethod
    def one(cls, D: int) -> "TruncatedSeries":
        return cls.from_list([1], D)

    @classmethod
    def zero(cls, D: int) -> "TruncatedSeries":
        return cls.from_list([0], D)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def _align(self, other):
        if isinstance(other, int):
            other = TruncatedSeries.from_list([other], self.order)
        D = min(self.order, other.order)
        return D, self.coeffs[: D + 1], other.coeffs[: D + 1], self.cap_sensitive or other.cap_sensitive

    def truncate(self, D: int) -> "TruncatedSeries":
        if D > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: D + 1], self.cap_sensitive)

    def __add__(self, other):
        D, a, b, cs = self._align(other)
        return TruncatedSeries(tuple(x + y for x, y in zip(a, b)), cs)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.cap_sensitive)

    def __sub__(self, other):
        return self + (-other if isinstance(other, TruncatedSeries) else -other)

    def __mul__(self, other):
        D, a, b, cs = self._align(other)
        out = [0] * (D + 1)
        for i, x in enumerate(a):
            if x:
                for j in range(D + 1 - i):
                    out[i + j] += x * b[j]
        return TruncatedSeries(tuple(out), cs)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ZeroDivisionError("constant term is not a unit in Z[[t]]")
        D = self.order
        inv = [0] * (D + 1)
        inv[0] = c0
        for k in range(1, D + 1):
            s = sum(self.coeffs[j] * inv[k - j] for j in range(1, k + 1))
            inv[k] = -c0 * s
        return TruncatedSeries(tuple(inv), self.cap_sensitive)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries.from_list([other], self.order)
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = TruncatedSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return TruncatedSeries(out.coeffs, self.cap_sensitive)

    def __str__(self):
        return ",".join(str(c) for c in self.coeffs)


def poly_series(coeffs, D: int) -> TruncatedSeries:
    return TruncatedSeries.from_list(coeffs, D)


def one_plus_t(D: int) -> TruncatedSeries:
    return poly_series([1, 1], D)


def one_minus_t(D: int) -> TruncatedSeries:
    return poly_series([1, -1], D)


def one_minus_t2(D: int) -> TruncatedSeries:
    return poly_series([1, 0, -1], D)


def binomial_series(n: int, D: int) -> TruncatedSeries:
    """(1+t)^n by binomial coefficients (independent of series multiplication)."""
    return poly_series([comb(n, i) for i in range(n + 1)], D)


# ---- comparisons and verdicts -----------------------------------------------------------

EQUAL = "holds-with-equality"
STRICT = "holds-strictly"
FAILS = "fails"
INCONCLUSIVE = "inconclusive-cap"
SKIPPED = "skipped: hypothesis"


def cmp_coefficientwise(a: TruncatedSeries, b: TruncatedSeries) -> tuple[str, int | None]:
    """Classify ``a`` against ``b``: ("equal" | "strict" | "incomparable", witness index).

    The witness is the first index where the coefficients differ (for
    "strict") or where ``a`` exceeds ``b`` (for "incomparable").
    """
    if a.order != b.order:
        raise ValueError(f"truncation orders differ: {a.order} vs {b.order}")
    first = None
    for i, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if x > y:
            return "incomparable", i
        if x != y and first is None:
            first = i
    return ("equal", None) if first is None else ("strict", first)


@dataclass
class CheckResult:
    name: str
    verdict: str
    witness: int | None = None
    lhs: TruncatedSeries | None = None
    rhs: TruncatedSeries | None = None
    expected_equality: bool = False
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict in (EQUAL, STRICT, SKIPPED)

    def to_dict(self) -> dict:
        out = {"name": self.name, "verdict": self.verdict, "witness": self.witness,
               "expected_equality": self.expected_equality}
        if self.lhs is not None:
            out["lhs"] = list(self.lhs.coeffs)
        if self.rhs is not None:
            out["rhs"] = list(self.rhs.coeffs)
        if self.details:
            out["details"] = self.details
        return out


def _common(*series: TruncatedSeries) -> list[TruncatedSeries]:
    D = min(s.order for s in series)
    return [s.truncate(D) for s in series]


def inequality_result(name: str, lhs: TruncatedSeries, rhs: TruncatedSeries, expect_equality: bool = False,
                      **details) -> CheckResult:
    """Verdict on lhs ≼ rhs; a strict result fails when equality is expected."""
    lhs, rhs = _common(lhs, rhs)
    rel, w = cmp_coefficientwise(lhs, rhs)
    if lhs.cap_sensitive or rhs.cap_sensitive:
        verdict = INCONCLUSIVE
    elif rel == "equal":
        verdict = EQUAL
    elif rel == "strict" and not expect_equality:
        verdict = STRICT
    else:
        verdict = FAILS
    return CheckResult(name, verdict, w, lhs, rhs, expect_equality, dict(details))


def equality_result(name: str, lhs: TruncatedSeries, rhs: TruncatedSeries, **details) -> CheckResult:
    return inequality_result(name, lhs, rhs, expect_equality=True, **details)


def skipped(name: str, reason: str) -> CheckResult:
    return CheckResult(name, SKIPPED, details={"reason": reason})


# ---- the formula battery ----------------------------------------------------------------


def check_theorem_B(pe: TruncatedSeries, pq: TruncatedSeries, n: int, shamash: bool,
                    nagata: bool) -> list[CheckResult]:
    """P^E ≼ P^Q/(1-t²)^n and P^Q ≼ P^E(1+t)^n, with the equality cases."""
    pe, pq = _common(pe, pq)
    D = pe.order
    r1 = inequality_result("koszul-vs-base", pe, pq * one_minus_t2(D) ** (-n), expect_equality=shamash)
    r2 = inequality_result("base-vs-koszul", pq, pe * binomial_series(n, D), expect_equality=nagata)
    return [r1, r2]


def check_large_ineq(name: str, pa: TruncatedSeries, pb: TruncatedSeries, pba: TruncatedSeries) -> CheckResult:
    """P_M^A ≼ P_M^B · P_B^A; equality is evidence that A -> B is large."""
    return inequality_result(name, pa, pb * pba)


def check_inert(pmr: TruncatedSeries, pmq: TruncatedSeries, pkr: TruncatedSeries, pkq: TruncatedSeries,
                expect_equality: bool = False) -> CheckResult:
    """P_M^R · P_k^Q ≼ P_M^Q · P_k^R; equality means M is inert."""
    return inequality_result("inert", pmr * pkq, pmq * pkr, expect_equality=expect_equality)


def poincare_balance(p: TruncatedSeries, edim: int, depth: int) -> TruncatedSeries:
    """P · (1-t)^edim / (1-t²)^depth."""
    D = p.order
    return p * one_minus_t(D) ** edim * one_minus_t2(D) ** (-depth)


def check_qci_formulas(*, n: int, m: int, grade: int, depth_q: int, depth_r: int, edim_q: int, edim_r: int,
                       pkq: TruncatedSeries, pkr: TruncatedSeries, pre: TruncatedSeries,
                       modules: dict, nagata: bool) -> list[CheckResult]:
    """Identities for a certified q.c.i. map.

    ``modules`` maps a name to ``(P_M^Q, P_M^R)``.  The residue-field identity
    with the factor (1-t²)^{n-m} alone needs edim R = edim Q; when the
    embedding dimension drops it is reported as skipped and the balance
    identity (which carries the (1-t)^edim factors) is checked instead.
    """
    out = []
    pkq, pkr, pre = _common(pkq, pkr, pre)
    D = pkq.order
    if edim_q == edim_r:
        out.append(equality_result("qci-residue-field", pkq, pkr * one_minus_t2(D) ** (n - m)))
    else:
        out.append(skipped("qci-residue-field", f"edim drops from {edim_q} to {edim_r}"))
    out.append(equality_result("qci-ring-over-koszul", pre, one_minus_t2(D) ** (-m)))
    out.append(equality_result("qci-balance[k]", poincare_balance(pkr, edim_r, depth_r),
                               poincare_balance(pkq, edim_q, depth_q)))
    g = EQUAL if grade == n - m == depth_q - depth_r else FAILS
    out.append(CheckResult("qci-grade", g, details={"grade": grade, "n-m": n - m, "depth_q-depth_r": depth_q - depth_r}))
    for name, (pmq, pmr) in modules.items():
        pmq, pmr = _common(pmq, pmr)
        Dm = pmq.order
        if nagata:
            out.append(equality_result(f"qci-balance[{name}]", poincare_balance(pmr, edim_r, depth_r),
                                       poincare_balance(pmq, edim_q, depth_q)))
        bound = binomial_series(n - m, Dm) * one_minus_t(Dm) ** (-m) * pmr if n >= m else None
        if bound is not None:
            out.append(inequality_result(f"qci-general-bound[{name}]", pmq, bound, expect_equality=nagata))
    return out


def check_theorem_A(*, pmq: TruncatedSeries, pmr: TruncatedSeries, pkq: TruncatedSeries, pkr: TruncatedSeries,
                    pme: TruncatedSeries, grade: int, m: int) -> CheckResult:
    """Inertness, the grade factor in both orientations, and P^E = P^R/(1-t²)^m."""
    pmq, pmr, pkq, pkr, pme = _common(pmq, pmr, pkq, pkr, pme)
    D = pmq.order
    g = one_minus_t2(D) ** grade
    inert = check_inert(pmr, pmq, pkr, pkq, expect_equality=True)
    q_side = pmq.coeffs == (pmr * g).coeffs
    r_side = pmr.coeffs == (pmq * g).coeffs
    orientation = {(True, True): "both", (True, False): "P_M^Q = P_M^R*(1-t^2)^grade",
                   (False, True): "P_M^R = P_M^Q*(1-t^2)^grade", (False, False): "neither"}[(q_side, r_side)]
    remark = pme.coeffs == (pmr * one_minus_t2(D) ** (-m)).coeffs
    details = {"orientation": orientation, "grade": grade, "koszul-equals-ring-over-factor": remark,
               "inert": inert.verdict}
    if any(s.cap_sensitive for s in (pmq, pmr, pkq, pkr, pme)):
        verdict = INCONCLUSIVE
    elif inert.verdict == EQUAL and remark and orientation != "neither":
        verdict = EQUAL
    else:
        verdict = FAILS
    return CheckResult("inert-grade-factor", verdict, inert.witness, inert.lhs, inert.rhs, True, details)


def estimate_cx_curv(series: TruncatedSeries, window: tuple[int, int] | None = None) -> dict:
    """Heuristic complexity and curvature from the Betti numbers in ``window``.

    Complexity: 1 + least-squares slope of log β_i against log i (rounded),
    or 0 when the window is all zero.  Curvature: max of β_i^(1/i).
    """
    lo, hi = window if window is not None else (max(1, series.order // 2), series.order)
    if not 1 <= lo <= hi <= series.order:
        raise ValueError("window must lie inside the truncation and start at 1 or later")
    betti = [series[i] for i in range(lo, hi + 1)]
    pts = [(i, b) for i, b in zip(range(lo, hi + 1), betti) if b > 0]
    if not pts:
        return {"cx": 0, "curv": 0.0, "window": [lo, hi], "heuristic": True}
    if len(pts) == 1:
        slope = 0.0
    else:
        xs = np.log([i for i, _ in pts])
        ys = np.log([b for _, b in pts])
        slope = float(np.polyfit(xs, ys, 1)[0])
    curv = max(b ** (1.0 / i) for i, b in pts)
    return {"cx": 1 + int(round(slope)), "curv": round(curv, 6), "window": [lo, hi], "heuristic": True}
