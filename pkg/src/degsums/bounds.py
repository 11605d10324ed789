"""Exact bound checks and exhaustive inequality scans for degree sums.

For a connected classical group with connected center, of dimension d and
rank r over F_q, the sum S of its irreducible character degrees satisfies

    q^((d-r)/2) (q-1)^r  <=  S  <=  (q+1)^((d+r)/2)

(lower bound via the Gelfand-Graev character; the upper bound sharpening
Kowalski's (q+1)^((d+r)/2) * (1 + 2r|W|/(q-1))), and conjecturally

    S <= q^((d-r)/2) (q+1)^r.

Everything here is exact: counts are big integers, Kowalski's factor is kept
as a Fraction and compared by cross-multiplication, and the supporting
binomial-sum inequalities are scanned cell by cell over integer ranges.

The connected orthogonal similitude groups have no exact degree-sum formula;
their rows use the surrogate (q-1) * (full orthogonal sum), an upper estimate
for S, so only the upper-bound comparisons are meaningful and the lower and
conjectured comparisons are reported as not evaluable.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .groups import Family, GroupDescriptor, GroupSpec, descriptor
from .qpoly import gaussian_binomial_exact
from .sums import SumKind, degree_sum, kernel_even, kernel_odd

PASS = "pass"
FAIL = "fail"
NOT_EVALUABLE = "not-evaluable"


@dataclass(frozen=True)
class BoundValues:
    lower: int
    conj_upper: int
    refined_upper: int
    kowalski_upper: Fraction


def bound_values(desc: GroupDescriptor, q: int) -> BoundValues:
    """Lower, conjectured upper, refined upper, and Kowalski upper bounds."""
    if not desc.applicable:
        raise DomainError(f"inapplicable: center not connected ({desc.family} is excluded from bounds)")
    if q < 2:
        raise DomainError(f"bounds require q >= 2, got {q}")
    d, r, w = desc.d, desc.r, desc.weyl_order
    half = (d - r) // 2
    lower = q**half * (q - 1) ** r
    conj_upper = q**half * (q + 1) ** r
    refined_upper = (q + 1) ** ((d + r) // 2)
    kowalski_upper = refined_upper * (1 + Fraction(2 * r * w, q - 1))
    return BoundValues(lower, conj_upper, refined_upper, kowalski_upper)


@dataclass(frozen=True)
class BoundsRow:
    spec: GroupSpec
    d: int
    r: int
    weyl_order: int
    sum_value: int
    sum_kind: str  # "exact" | "surrogate"
    lower: int
    conj_upper: int
    refined_upper: int
    kowalski_upper: Fraction
    pass_lower: str
    pass_conj: str
    pass_refined: str
    pass_kowalski: str

    @property
    def ok(self) -> bool:
        return FAIL not in (self.pass_lower, self.pass_conj, self.pass_refined, self.pass_kowalski)

    def to_csv_row(self) -> list:
        return [
            str(self.spec.family), str(self.spec.n), str(self.spec.q),
            str(self.d), str(self.r), str(self.weyl_order),
            str(self.sum_value), self.sum_kind,
            str(self.lower), str(self.conj_upper), str(self.refined_upper),
            str(self.kowalski_upper.numerator), str(self.kowalski_upper.denominator),
            self.pass_lower, self.pass_conj, self.pass_refined, self.pass_kowalski,
        ]

    def to_json_dict(self) -> dict:
        return {
            "family": str(self.spec.family),
            "n": self.spec.n,
            "q": self.spec.q,
            "d": self.d,
            "r": self.r,
            "weyl": str(self.weyl_order),
            "sum": str(self.sum_value),
            "sum_kind": self.sum_kind,
            "lower": str(self.lower),
            "conj_upper": str(self.conj_upper),
            "refined_upper": str(self.refined_upper),
            "kowalski_num": str(self.kowalski_upper.numerator),
            "kowalski_den": str(self.kowalski_upper.denominator),
            "pass_lower": self.pass_lower,
            "pass_conj": self.pass_conj,
            "pass_refined": self.pass_refined,
            "pass_kowalski": self.pass_kowalski,
        }


BOUNDS_CSV_HEADER = [
    "family", "n", "q", "d", "r", "weyl", "sum", "sum_kind",
    "lower", "conj_upper", "refined_upper", "kowalski_num", "kowalski_den",
    "pass_lower", "pass_conj", "pass_refined", "pass_kowalski",
]

_EXACT_SUM_FAMILIES = (Family.GL, Family.U, Family.GSP, Family.SO_ODD)
_SURROGATE_FAMILIES = {
    Family.GO_PLUS_CONN: Family.O_PLUS,
    Family.GO_MINUS_CONN: Family.O_MINUS,
}
#: families check_bounds accepts for any q >= 2 (the others need odd q)
_ANY_Q_FAMILIES = (Family.GL, Family.U)


def check_bounds(spec: GroupSpec) -> BoundsRow:
    """Evaluate the degree sum (or its surrogate) against all four bounds."""
    fam = spec.family
    if fam not in _EXACT_SUM_FAMILIES and fam not in _SURROGATE_FAMILIES:
        desc = descriptor(fam, spec.n)
        if not desc.applicable:
            raise DomainError(f"inapplicable: center not connected ({fam} is excluded from bounds)")
        raise DomainError(f"no bounds row defined for family {fam}")  # pragma: no cover
    if fam not in _ANY_Q_FAMILIES and spec.q % 2 == 0:
        raise DomainError(
            f"bounds for {fam} require odd q (the degree-sum formulas assume odd characteristic); got q = {spec.q}"
        )
    desc = descriptor(fam, spec.n)
    bv = bound_values(desc, spec.q)
    if fam in _SURROGATE_FAMILIES:
        host = GroupSpec(_SURROGATE_FAMILIES[fam], spec.n, spec.q)
        sum_value = (spec.q - 1) * degree_sum(host, SumKind.ALL).value
        sum_kind = "surrogate"
        pass_lower = NOT_EVALUABLE
        pass_conj = NOT_EVALUABLE
    else:
        sum_value = degree_sum(spec, SumKind.ALL).value
        sum_kind = "exact"
        pass_lower = PASS if bv.lower <= sum_value else FAIL
        pass_conj = PASS if sum_value <= bv.conj_upper else FAIL
    pass_refined = PASS if sum_value <= bv.refined_upper else FAIL
    pass_kowalski = PASS if bv.refined_upper <= bv.kowalski_upper else FAIL
    return BoundsRow(
        spec=spec, d=desc.d, r=desc.r, weyl_order=desc.weyl_order,
        sum_value=sum_value, sum_kind=sum_kind,
        lower=bv.lower, conj_upper=bv.conj_upper,
        refined_upper=bv.refined_upper, kowalski_upper=bv.kowalski_upper,
        pass_lower=pass_lower, pass_conj=pass_conj,
        pass_refined=pass_refined, pass_kowalski=pass_kowalski,
    )


def bounds_table(families, n_values, q_values) -> list:
    """BoundsRows for the cross product, in (family, n, q) order."""
    return [
        check_bounds(GroupSpec(fam, n, q))
        for fam in families
        for n in n_values
        for q in q_values
    ]


# --- inequality scans ---------------------------------------------------------

SCAN_LEMMAS = ("binomineq", "even_dim", "odd_dim")


@dataclass(frozen=True)
class ScanResult:
    lemma: str
    m_max: int
    q_max: int
    cells: int
    violations: tuple  # (m, k, q) for binomineq, (m, q) otherwise

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "m_max": self.m_max,
            "q_max": self.q_max,
            "cells": self.cells,
            "violations": [list(v) for v in self.violations],
        }


def _scan_binomineq_m(m: int, q_max: int):
    """C(m,k)_q <= q^(k(m-k)-m+1) (q+1)^(m-1) for 1 <= k <= m, 2 <= q <= q_max.

    The exponent may be negative; multiply it onto the left side so every
    comparison stays in integers.
    """
    violations = []
    cells = 0
    for k in range(1, m + 1):
        e = k * (m - k) - m + 1
        for q in range(2, q_max + 1):
            cells += 1
            lhs = gaussian_binomial_exact(m, k, q)
            rhs = (q + 1) ** (m - 1)
            if e >= 0:
                rhs *= q**e
            else:
                lhs *= q ** (-e)
            if lhs > rhs:
                violations.append((m, k, q))
    return cells, violations


def _scan_even_dim_m(m: int, q_max: int):
    """sum_k q^(2k(m-k)) C(m,k)_{q^2} <= 2(q+1)^(m^2-1) (m odd) or (q+1)^(m^2)."""
    poly = kernel_even(m)
    violations = []
    cells = 0
    for q in range(2, q_max + 1):
        cells += 1
        lhs = poly.eval_at(q)
        rhs = 2 * (q + 1) ** (m * m - 1) if m % 2 == 1 else (q + 1) ** (m * m)
        if lhs > rhs:
            violations.append((m, q))
    return cells, violations


def _scan_odd_dim_m(m: int, q_max: int):
    """sum_k q^(2k(m-k+1)) C(m,k)_{q^2} <= (q+1)^(m^2+m)."""
    poly = kernel_odd(m)
    violations = []
    cells = 0
    for q in range(2, q_max + 1):
        cells += 1
        lhs = poly.eval_at(q)
        rhs = (q + 1) ** (m * m + m)
        if lhs > rhs:
            violations.append((m, q))
    return cells, violations


_SCANNERS = {
    "binomineq": _scan_binomineq_m,
    "even_dim": _scan_even_dim_m,
    "odd_dim": _scan_odd_dim_m,
}


def _scan_worker(args):
    lemma, m, q_max = args
    return _SCANNERS[lemma](m, q_max)


def scan_inequalities(lemma: str, m_max: int, q_max: int, jobs: int | None = None) -> ScanResult:
    """Exhaustively check one inequality lemma over 1 <= m <= m_max, 2 <= q <= q_max."""
    if lemma not in _SCANNERS:
        raise DomainError(f"unknown lemma {lemma!r}; expected one of: " + ", ".join(SCAN_LEMMAS))
    if m_max < 1:
        raise DomainError(f"m_max must be >= 1, got {m_max}")
    if q_max < 2:
        raise DomainError(f"q_max must be >= 2, got {q_max}")
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs < 1:
        raise DomainError(f"jobs must be >= 1, got {jobs}")
    tasks = [(lemma, m, q_max) for m in range(1, m_max + 1)]
    cells = 0
    violations = []
    if jobs == 1 or len(tasks) < 2:
        results = map(_scan_worker, tasks)
        for c, v in results:
            cells += c
            violations.extend(v)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for c, v in pool.map(_scan_worker, tasks):
                cells += c
                violations.extend(v)
    violations.sort()
    return ScanResult(lemma=lemma, m_max=m_max, q_max=q_max, cells=cells, violations=tuple(violations))
