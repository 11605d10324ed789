"""Closed-form character-degree sums for the classical families.

Every supported (family, kind) pair has an exact formula in q.  The three
binomial-sum kernels are implemented once and shared:

    kernel_gl(n)   = sum_k q^(k(n-k)) * C(n,k)_q      (real sum for GL(n,q))
    kernel_even(m) = kernel_gl(m) with q -> q^2        (even orthogonal / symplectic)
    kernel_odd(m)  = sum_k q^(2k(m-k+1)) * C(m,k)_{q^2}  (odd orthogonal)

so coincidences between families (e.g. the SO^± real sum being the GL real
sum evaluated at q^2) are structural rather than accidental agreement.

Halved formulas (the full GSp sum, and the symplectic indicator-split sums
for delta = +/-1) are computed as doubled integer polynomials and halved with
an exact integrality check.  The doubled GSp polynomial always halves to
integer coefficients; the delta-split symplectic sums do not, so they carry
no polynomial and are only defined pointwise, for q = 1 (mod 4).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import DomainError
from .groups import Family, GroupSpec
from .qpoly import QPoly, gaussian_binomial_poly, render_qpoly


class SumKind(str, Enum):
    ALL = "all"
    REAL_VALUED = "real_valued"
    FS_SIGNED = "fs_signed"    # sum of indicator-weighted degrees
    FS_PLUS = "fs_plus"        # degrees of characters with indicator +1
    FS_MINUS = "fs_minus"      # degrees of characters with indicator -1

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


def parse_sum_kind(text: str) -> SumKind:
    try:
        return SumKind(text.strip().lower())
    except ValueError:
        raise DomainError(
            f"unknown sum kind {text!r}; expected one of: "
            + ", ".join(k.value for k in SumKind)
        ) from None


@dataclass(frozen=True)
class SumResult:
    spec: GroupSpec
    kind: SumKind
    value: int
    poly: QPoly | None
    source_citation: str

    def to_json_dict(self) -> dict:
        return {
            "family": str(self.spec.family),
            "n": self.spec.n,
            "q": self.spec.q,
            "kind": self.kind.value,
            "value": str(self.value),
            "poly": render_qpoly(self.poly) if self.poly is not None else None,
            "source_citation": self.source_citation,
        }


# --- shared kernels -----------------------------------------------------------


@lru_cache(maxsize=None)
def kernel_gl(n: int) -> QPoly:
    """sum_k q^(k(n-k)) * C(n,k)_q: the involution count of GL(n,q)."""
    out = QPoly.const(0)
    for k in range(n + 1):
        out = out + gaussian_binomial_poly(n, k).shift(k * (n - k))
    return out


@lru_cache(maxsize=None)
def kernel_even(m: int) -> QPoly:
    """sum_k q^(2k(m-k)) * C(m,k)_{q^2}: kernel_gl evaluated at q^2."""
    return kernel_gl(m).stretch(2)


@lru_cache(maxsize=None)
def kernel_odd(m: int) -> QPoly:
    """sum_k q^(2k(m-k+1)) * C(m,k)_{q^2}."""
    out = QPoly.const(0)
    for k in range(m + 1):
        out = out + gaussian_binomial_poly(m, k).stretch(2).shift(2 * k * (m - k + 1))
    return out


def _alt_product(n: int, odd_sign: int) -> QPoly:
    """prod over i = 1..n of (q^i + odd_sign) for odd i, q^i for even i."""
    out = QPoly.const(1)
    for i in range(1, n + 1):
        term = QPoly.monomial(i)
        if i % 2 == 1:
            term = term + odd_sign
        out = out * term
    return out


def _sp_all_poly(n: int) -> QPoly:
    out = QPoly.monomial(n * (n + 1) // 2)
    for i in range(1, n + 1):
        out = out * (QPoly.monomial(i) + 1)
    return out


def _gsp_all_poly(n: int) -> QPoly:
    bracket = QPoly.const(1)
    twisted = QPoly.const(1)
    for i in range(1, n + 1):
        bracket = bracket * (QPoly.monomial(i) + 1)
        twisted = twisted * (QPoly.monomial(i) + (1 if i % 2 == 0 else -1))
    doubled = QPoly.monomial(n * (n + 1) // 2) * (QPoly.monomial(1) - 1) * (bracket + twisted)
    return doubled.halve_exact()


def _o_even_all_poly(m: int, sign: int) -> QPoly:
    # sign = +1 for the split family (factor q^m - 1), -1 for non-split
    tail = QPoly.monomial(m - 1) * (QPoly.monomial(m) - sign) * kernel_even(m - 1)
    return kernel_even(m) + tail


def _go_plus_real_poly(n: int) -> QPoly:
    skew = QPoly.monomial(n * (n - 1) // 2, 2)
    for i in range(1, n):
        skew = skew * (QPoly.monomial(i) + 1)
    return _o_even_all_poly(n, 1) + skew


_CITATIONS = {
    (Family.GL, SumKind.REAL_VALUED):
        "Frobenius-Schur involution count of GL(n,q): sum of q^(k(n-k)) C(n,k)_q",
    (Family.GL, SumKind.ALL):
        "product formula: factors q^i - 1 for odd i, q^i for even i",
    (Family.U, SumKind.ALL):
        "product formula: factors q^i + 1 for odd i, q^i for even i",
    (Family.SP, SumKind.ALL):
        "Gow's symplectic degree-sum product q^(n(n+1)/2) prod(q^i + 1)",
    (Family.SP, SumKind.FS_SIGNED):
        "indicator-weighted sum = involution count of Sp(2n,q), a Gaussian binomial sum in q^2",
    (Family.SP, SumKind.FS_PLUS):
        "half of (all-degree sum + signed sum); requires q = 1 (mod 4)",
    (Family.SP, SumKind.FS_MINUS):
        "half of (all-degree sum - signed sum); requires q = 1 (mod 4)",
    (Family.GSP, SumKind.REAL_VALUED):
        "involution count of GSp(2n,q): signed symplectic sum plus full symplectic sum",
    (Family.GSP, SumKind.ALL):
        "half of q^(n(n+1)/2)(q-1)[prod(q^i+1) + prod(q^i+(-1)^i)]",
    (Family.O_ODD, SumKind.ALL):
        "involution count of O(2m+1,q): twice the odd-kernel Gaussian binomial sum",
    (Family.SO_ODD, SumKind.ALL):
        "half the O(2m+1,q) degree sum: the odd-kernel Gaussian binomial sum",
    (Family.O_PLUS, SumKind.ALL):
        "even-kernel sum plus q^(m-1)(q^m - 1) times the (m-1) even-kernel sum",
    (Family.O_MINUS, SumKind.ALL):
        "even-kernel sum plus q^(m-1)(q^m + 1) times the (m-1) even-kernel sum",
    (Family.SO_PLUS, SumKind.REAL_VALUED):
        "even-kernel Gaussian binomial sum (GL real sum evaluated at q^2)",
    (Family.SO_MINUS, SumKind.REAL_VALUED):
        "even-kernel Gaussian binomial sum (GL real sum evaluated at q^2)",
    (Family.GO_PLUS, SumKind.REAL_VALUED):
        "O^+ degree sum plus the skew-involution class size 2 q^(n(n-1)/2) prod(q^i+1)",
    (Family.GO_MINUS, SumKind.REAL_VALUED):
        "O^- degree sum; the non-split group has no skew involutions",
}


def _no_formula(family: Family, kind: SumKind) -> DomainError:
    return DomainError(f"no formula in scope for family {family} with kind {kind.value}")


def degree_sum_poly(family: Family, n: int, kind: SumKind) -> QPoly:
    """The degree-sum formula as an integer polynomial in q."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    key = (family, kind)
    if key not in _CITATIONS:
        raise _no_formula(family, kind)
    if key == (Family.GL, SumKind.REAL_VALUED):
        return kernel_gl(n)
    if key == (Family.GL, SumKind.ALL):
        return _alt_product(n, -1)
    if key == (Family.U, SumKind.ALL):
        return _alt_product(n, 1)
    if key == (Family.SP, SumKind.ALL):
        return _sp_all_poly(n)
    if key == (Family.SP, SumKind.FS_SIGNED):
        return kernel_even(n)
    if kind in (SumKind.FS_PLUS, SumKind.FS_MINUS):
        # (all +/- signed)/2 has non-integer coefficients (already for n = 1);
        # these sums exist only pointwise, at q = 1 (mod 4)
        raise DomainError(
            "the delta-split symplectic sums have no integer-coefficient "
            "polynomial in q; evaluate degree_sum at a specific q = 1 (mod 4)"
        )
    if key == (Family.GSP, SumKind.REAL_VALUED):
        return kernel_even(n) + _sp_all_poly(n)
    if key == (Family.GSP, SumKind.ALL):
        return _gsp_all_poly(n)
    if key == (Family.O_ODD, SumKind.ALL):
        return 2 * kernel_odd(n)
    if key == (Family.SO_ODD, SumKind.ALL):
        return kernel_odd(n)
    if key == (Family.O_PLUS, SumKind.ALL):
        return _o_even_all_poly(n, 1)
    if key == (Family.O_MINUS, SumKind.ALL):
        return _o_even_all_poly(n, -1)
    if key in ((Family.SO_PLUS, SumKind.REAL_VALUED), (Family.SO_MINUS, SumKind.REAL_VALUED)):
        return kernel_even(n)
    if key == (Family.GO_PLUS, SumKind.REAL_VALUED):
        return _go_plus_real_poly(n)
    if key == (Family.GO_MINUS, SumKind.REAL_VALUED):
        return _o_even_all_poly(n, -1)
    raise _no_formula(family, kind)  # pragma: no cover - table is exhaustive


def degree_sum(spec: GroupSpec, kind: SumKind) -> SumResult:
    """Exact degree-sum value for the group, with its polynomial when one exists."""
    key = (spec.family, kind)
    if key not in _CITATIONS:
        raise _no_formula(spec.family, kind)
    if kind in (SumKind.FS_PLUS, SumKind.FS_MINUS):
        if spec.family != Family.SP:
            raise _no_formula(spec.family, kind)
        if spec.q % 4 != 1:
            raise DomainError(
                f"the delta-split symplectic sums are defined only for "
                f"q = 1 (mod 4); got q = {spec.q}"
            )
        delta = 1 if kind == SumKind.FS_PLUS else -1
        total = _sp_all_poly(spec.n).eval_at(spec.q)
        signed = kernel_even(spec.n).eval_at(spec.q)
        doubled = total + delta * signed
        if doubled % 2 != 0:
            raise DomainError("halved symplectic sum is not an integer")  # unreachable for odd q
        return SumResult(spec, kind, doubled // 2, None, _CITATIONS[key])
    poly = degree_sum_poly(spec.family, spec.n, kind)
    return SumResult(spec, kind, poly.eval_at(spec.q), poly, _CITATIONS[key])
