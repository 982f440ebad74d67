"""Identity checks. Each returns a :class:`CheckReport`.

Every check builds the two (or three) sides of a generating-series identity
by independent routes and compares them exactly at a fixed t-order.
"""

from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Sequence

from . import core_quotient as cq
from .partitions import (
    YoungDiagram,
    enumerate_diagrams,
    iarrobino_series,
    theorem2_statistic,
    theorem3_term,
)
from .qt_algebra import ONE, Mismatch, QPoly, TSeries, expand_product, series_eq
from .quiver_fixed import (
    FramingData,
    alternate_tiebreak,
    census,
    character_series,
    component_d_plus,
    mu_from_omega,
    poincare_bm,
    poincare_fixed,
    quiver_dim,
)

DEFAULT_MAX_ORDER = 24


class BudgetExceeded(ValueError):
    pass


def max_order() -> int:
    raw = os.environ.get("QTQ_MAX_ORDER")
    return int(raw) if raw else DEFAULT_MAX_ORDER


def _budget(order: int) -> None:
    if order < 0:
        raise ValueError("order must be nonnegative")
    cap = max_order()
    if order > cap:
        raise BudgetExceeded(f"order {order} exceeds the cap {cap} (set QTQ_MAX_ORDER to raise it)")


@dataclass
class CheckReport:
    check_name: str
    parameters: dict[str, Any]
    order: int
    status: str
    first_mismatch: Mismatch | None = None
    elapsed_millis: int = 0
    series: dict[str, Any] = field(default_factory=dict)
    note: str = ""

    def __post_init__(self):
        assert (self.status == "fail") == (self.first_mismatch is not None or bool(self.note)), self

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {
            "checkName": self.check_name,
            "parameters": self.parameters,
            "order": self.order,
            "status": self.status,
            "firstMismatch": self.first_mismatch.to_json() if self.first_mismatch else None,
            "elapsedMillis": self.elapsed_millis,
        }
        if self.note:
            out["note"] = self.note
        if self.series:
            out["series"] = self.series
        return out


def _compare(name: str, params: dict, order: int, started: float,
             sides: Sequence[tuple[str, TSeries]], emit: Sequence[str] = ()) -> CheckReport:
    """Compare consecutive sides pairwise; the first disagreement is reported."""
    mismatch = None
    for (ln, lhs), (rn, rhs) in zip(sides, sides[1:]):
        ok, mm = series_eq(lhs, rhs)
        if not ok:
            mismatch = mm
            params = dict(params, mismatchBetween=[ln, rn])
            break
    series = {n: s.to_json() for n, s in sides if n in emit}
    return CheckReport(name, params, order, "fail" if mismatch else "pass", mismatch,
                       int((time.perf_counter() - started) * 1000), series)


# ---------------------------------------------------------------- products

def theorem1_rhs(alpha: int, beta: int, order: int) -> TSeries:
    m = alpha + beta
    factors = [(0, i, -1) for i in range(1, order + 1) if i % m]
    factors += [(1, m * i, -1) for i in range(1, order // m + 1)]
    return expand_product(factors, order)


def theorem3_rhs(order: int) -> TSeries:
    factors = []
    for i in range(1, order + 1):
        factors += [(0, 2 * i - 1, -1), (1, 2 * i, -1)]
    return expand_product(factors, order)


def cores_rhs(m: int, order: int) -> TSeries:
    factors = []
    for i in range(1, order + 1):
        factors += [(0, m * i, 1)] * m
        factors.append((0, i, -1))
    return expand_product(factors, order)


def lemma35_rhs(m: int, lam: Sequence[int], order: int) -> TSeries:
    factors = []
    for i in range(1, order // m + 1):
        factors += [(i, m * i, -1)] * (m - 1)
        factors.append((i + 1, m * i, -1))
    start = TSeries.monomial(order, cq.n_of_lambda(lam, m))
    return expand_product(factors, order, start=start)


def level_one_character(m: int, order: int) -> TSeries:
    """Product over parts not divisible by ``m`` of ``1 / (1 - x**i)``."""
    return expand_product([(0, i, -1) for i in range(1, order + 1) if i % m], order)


# ---------------------------------------------------------------- left sides

def statistic_series(alpha: int, beta: int, order: int) -> TSeries:
    coeffs = []
    for n in range(order + 1):
        c: dict[int, int] = {}
        for Y in enumerate_diagrams(n):
            k = theorem2_statistic(Y, alpha, beta)
            c[k] = c.get(k, 0) + 1
        coeffs.append(QPoly(c))
    return TSeries(order, tuple(coeffs))


def quiver_route_series(alpha: int, beta: int, order: int) -> TSeries:
    """Sum over colour vectors of ``q**(-d_plus) * P_BM(v) * t**|v|`` for the Hilbert scheme."""
    framing = FramingData.hilbert(alpha, beta)
    coeffs = []
    for n in range(order + 1):
        total = QPoly()
        for v in census(framing, n):
            total = total + poincare_bm(v, framing).shift(-component_d_plus(v, framing))
        coeffs.append(total)
    return TSeries(order, tuple(coeffs))


def theorem3_lhs(order: int) -> TSeries:
    coeffs = [QPoly() for _ in range(order + 1)]
    for n in range(order + 1):
        for lam in enumerate_diagrams(n):
            poly, e = theorem3_term(lam)
            if e <= order:
                coeffs[e] = coeffs[e] + poly
    return TSeries(order, tuple(coeffs))


def core_series(m: int, order: int) -> TSeries:
    counts = [0] * (order + 1)
    for Y in cq.enumerate_cores(m, order):
        counts[Y.size] += 1
    return TSeries.from_list(counts, order)


def lattice_series(m: int, order: int) -> TSeries:
    """Sum of ``t**n(lam)`` over the zero-sum lattice, enumerated in a box."""
    # n(lam) >= (m/2)|lam|^2 - (m-1) sqrt(m) |lam|, which bounds |lam| for n <= order
    bound = ((m - 1) * math.sqrt(m) + math.sqrt((m - 1) ** 2 * m + 2 * m * order)) / m
    B = int(bound) + 1
    counts = [0] * (order + 1)
    for head in product(range(-B, B + 1), repeat=m - 1):
        lam = head + (-sum(head),)
        n = cq.n_of_lambda(lam, m)
        if n <= order:
            counts[n] += 1
    return TSeries.from_list(counts, order)


def lemma35_lhs(m: int, lam: Sequence[int], order: int, alpha: int = 1) -> TSeries:
    framing = FramingData.hilbert(alpha, m - alpha)
    lam = tuple(lam)
    coeffs = [QPoly() for _ in range(order + 1)]
    for n in range(order + 1):
        for v in census(framing, n):
            if tuple(v[(k + 1) % m] - v[k] for k in range(m)) == lam:
                coeffs[n] = coeffs[n] + poincare_bm(v, framing)
    return TSeries(order, tuple(coeffs))


# ---------------------------------------------------------------- checks

def check_theorem1(alpha: int, beta: int, order: int = 18) -> CheckReport:
    started = time.perf_counter()
    _budget(order)
    params = {"alpha": alpha, "beta": beta}
    sides = [
        ("statistic", statistic_series(alpha, beta, order)),
        ("quiver", quiver_route_series(alpha, beta, order)),
        ("product", theorem1_rhs(alpha, beta, order)),
    ]
    return _compare("theorem1", params, order, started, sides)


def check_theorem3(order: int = 20) -> CheckReport:
    started = time.perf_counter()
    _budget(order)
    sides = [
        ("binomials", theorem3_lhs(order)),
        ("product", theorem3_rhs(order)),
        ("theorem1-product", theorem1_rhs(1, 1, order)),
    ]
    return _compare("theorem3", {}, order, started, sides)


def check_cores(m: int, order: int = 24) -> CheckReport:
    started = time.perf_counter()
    _budget(order)
    sides = [
        ("cores", core_series(m, order)),
        ("lattice", lattice_series(m, order)),
        ("product", cores_rhs(m, order)),
    ]
    return _compare("cores", {"m": m}, order, started, sides)


def check_important_lemma(m: int, lam: Sequence[int], order: int = 12, alpha: int = 1) -> CheckReport:
    started = time.perf_counter()
    _budget(order)
    lam = tuple(lam)
    params = {"m": m, "lambda": list(lam), "alpha": alpha}
    sides = [("quiver", lemma35_lhs(m, lam, order, alpha)), ("product", lemma35_rhs(m, lam, order))]
    return _compare("lemma35", params, order, started, sides)


def _theorem_fixed_failures(framing: FramingData, n_max: int) -> str:
    hilbert = framing.r == 1 and framing.w[0] == 1
    for n in range(n_max + 1):
        for v, recs in census(framing, n).items():
            dp = {r.d_plus for r in recs}
            if len(dp) != 1:
                return f"d_plus takes values {sorted(dp)} on colour {v}"
            d = dp.pop()
            for r in recs:
                if 2 * r.d_plus != r.n_invariant:
                    return f"2*d_plus != invariant count at {r.point.to_json()}"
                if r.bm_cell != r.d_plus + r.fixed_cell:
                    return f"cell split fails at {r.point.to_json()}"
            if hilbert and recs[0].n_invariant != quiver_dim(v):
                return f"invariant count {recs[0].n_invariant} != quiver_dim{v}"
            if poincare_bm(v, framing) != poincare_fixed(v, framing).shift(d):
                return f"P_BM != q^{d} P_fixed on colour {v}"
    return ""


def check_theorem_fixed(m: int, alpha: int, beta: int, n_max: int = 10,
                        w: Sequence[int] | None = None) -> CheckReport:
    """Cell split, constancy of d_plus and ``P_BM = q**d_plus * P_fixed`` per colour."""
    started = time.perf_counter()
    _budget(n_max)
    if alpha + beta != m:
        raise ValueError(f"alpha + beta must equal m={m}")
    if w is None:
        w = (1,) + (0,) * (m - 1)
    framing = FramingData.from_w(tuple(w), alpha, beta)
    note = _theorem_fixed_failures(framing, n_max)
    params = {"m": m, "alpha": alpha, "beta": beta, "w": list(w), "r": framing.r}
    return CheckReport("fixed", params, n_max, "fail" if note else "pass", None,
                       int((time.perf_counter() - started) * 1000), note=note)


def check_character(r: int, omega: Sequence[int], alpha: int, beta: int, order: int = 10) -> CheckReport:
    started = time.perf_counter()
    _budget(order)
    m = alpha + beta
    omega = tuple(omega)
    params = {"r": r, "omega": list(omega), "alpha": alpha, "beta": beta, "mu": list(mu_from_omega(omega, m, alpha))}
    chi = character_series(r, omega, alpha, beta, order)
    sides = [("character", chi), ("alternate-tiebreak", character_series(r, omega, alpha, beta, order, alternate_tiebreak))]
    if r == 1:
        sides.append(("level-one-product", level_one_character(m, order)))
        if m == 2:
            sides.append(("iarrobino", iarrobino_series(order)))
    report = _compare("character", params, order, started, sides, emit=("character",))
    if report.passed:
        if chi[0] != ONE:
            report.status, report.note = "fail", "constant term is not 1"
        elif not all(c == QPoly() or (set(c.coeffs) == {0} and c[0] > 0) for c in chi.coeffs):
            report.status, report.note = "fail", "coefficients are not nonnegative integers"
    return report


REGISTRY: dict[str, Callable[..., CheckReport]] = {
    "theorem1": check_theorem1,
    "theorem3": check_theorem3,
    "cores": check_cores,
    "lemma35": check_important_lemma,
    "fixed": check_theorem_fixed,
    "character": check_character,
}


def lemma35_lambdas(m: int, max_n: int) -> list[tuple[int, ...]]:
    return cq.lattice_points(m, max_n)


def default_battery() -> list[tuple[str, dict]]:
    """The checks run by ``qtq all``: every identity in scope, desk-scale orders."""
    jobs: list[tuple[str, dict]] = []
    for a, b in [(1, 1), (1, 2), (2, 1), (2, 3), (1, 4)]:
        jobs.append(("theorem1", {"alpha": a, "beta": b, "order": 18}))
    jobs.append(("theorem3", {"order": 20}))
    for m in (2, 3, 4, 5):
        jobs.append(("cores", {"m": m, "order": 24}))
    for m in (2, 3):
        for lam in lemma35_lambdas(m, 6):
            jobs.append(("lemma35", {"m": m, "lam": lam, "order": 12}))
    for m, n_max in ((2, 10), (3, 9)):
        for a in range(1, m):
            if math.gcd(a, m - a) == 1:
                jobs.append(("fixed", {"m": m, "alpha": a, "beta": m - a, "n_max": n_max}))
    for m in (2, 3):
        for a in range(1, m):
            for w in product(range(3), repeat=m):
                if sum(w) == 2:
                    jobs.append(("fixed", {"m": m, "alpha": a, "beta": m - a, "n_max": 8, "w": w}))
    jobs.append(("character", {"r": 1, "omega": (0,), "alpha": 1, "beta": 1, "order": 12}))
    jobs.append(("character", {"r": 1, "omega": (0,), "alpha": 1, "beta": 2, "order": 10}))
    jobs.append(("character", {"r": 2, "omega": (0, 1), "alpha": 1, "beta": 1, "order": 6}))
    jobs.append(("character", {"r": 2, "omega": (0, 0), "alpha": 1, "beta": 1, "order": 6}))
    return jobs


def run_job(job: tuple[str, dict]) -> CheckReport:
    name, kwargs = job
    return REGISTRY[name](**kwargs)
