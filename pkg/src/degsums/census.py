"""Census reports and the formula-vs-enumeration verifier.

A census enumerates a group exhaustively (see `enumeration`) and reports the
order, the involutions g^2 = I bucketed by similitude sign mu and fixed-space
dimension j = dim ker(g - I), and the twisted square-root counts
|{g : g^2 = c * mu(g) * I}| for c = +1, -1.

`verify_counts` then compares the census against everything the closed forms
predict: the group order, the matching character-degree sum (real involutions
count real characters, weighted by the Frobenius-Schur indicator where signs
occur), and the per-bucket involution class sizes obtained from centralizer
orders of the +/-1 eigenspace decompositions.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError
from .enumeration import build_config, census_tally, cols_to_matrix, iter_column_tuples
from .fp import MatrixFp
from .groups import Family, GroupSpec, group_order_formula
from .qpoly import gaussian_binomial_exact


@dataclass(frozen=True)
class InvolutionBucket:
    mu: int    # similitude sign: +1 or -1
    j: int     # dimension of the fixed space ker(g - I)
    count: int


@dataclass(frozen=True)
class CensusQuery:
    spec: GroupSpec
    twist_constants: tuple = (1, -1)


@dataclass(frozen=True)
class CensusReport:
    spec: GroupSpec
    order: int
    buckets: tuple  # InvolutionBucket, sorted by (mu descending, j ascending)
    twisted: dict = field(default_factory=dict)  # {+1: count, -1: count}

    @property
    def involution_total(self) -> int:
        return sum(b.count for b in self.buckets)

    def bucket_total(self, mu: int) -> int:
        return sum(b.count for b in self.buckets if b.mu == mu)

    def to_json_dict(self) -> dict:
        out = {
            "family": str(self.spec.family),
            "n": self.spec.n,
            "p": self.spec.q,
            "order": str(self.order),
            "involutions": {
                "total": str(self.involution_total),
                "buckets": [
                    {"mu": b.mu, "j": b.j, "count": str(b.count)} for b in self.buckets
                ],
            },
        }
        if self.twisted:
            out["twisted"] = {
                ("+1" if c == 1 else "-1"): str(v) for c, v in sorted(self.twisted.items(), reverse=True)
            }
        return out


def run_census(query: CensusQuery | GroupSpec, jobs: int | None = None) -> CensusReport:
    if isinstance(query, GroupSpec):
        query = CensusQuery(query)
    tally = census_tally(query.spec, jobs=jobs)
    buckets = tuple(
        InvolutionBucket(mu, j, tally.buckets[(mu, j)])
        for mu, j in sorted(tally.buckets, key=lambda k: (-k[0], k[1]))
    )
    twisted = {}
    for c in query.twist_constants:
        if c == 1:
            twisted[1] = tally.tw_plus
        elif c == -1:
            twisted[-1] = tally.tw_minus
        else:
            raise DomainError(f"twist constant must be +1 or -1, got {c}")
    return CensusReport(spec=query.spec, order=tally.order, buckets=buckets, twisted=twisted)


def enumerate_group(spec: GroupSpec):
    """Yield every group element as a MatrixFp in standard coordinates."""
    cfg = build_config(spec)
    for _, cols in iter_column_tuples(spec):
        yield cols_to_matrix(cfg, cols)


# --- involution class sizes from centralizer orders --------------------------


def _order_gl(m: int, q: int) -> int:
    out = 1
    for i in range(m):
        out *= q**m - q**i
    return out


def _order_sp(k: int, q: int) -> int:
    out = q ** (k * k)
    for i in range(1, k + 1):
        out *= q ** (2 * i) - 1
    return out


def _order_o(d: int, eps: int, q: int) -> int:
    """Order of the full orthogonal group on a d-dimensional space.

    For even d the type eps is +1 (split) or -1 (non-split); for odd d the
    order does not depend on the discriminant and eps is ignored.
    """
    if d == 0:
        return 1
    if d % 2 == 1:
        m = (d - 1) // 2
        out = 2 * q ** (m * m)
        for i in range(1, m + 1):
            out *= q ** (2 * i) - 1
        return out
    k = d // 2
    out = 2 * q ** (k * (k - 1)) * (q**k - eps)
    for i in range(1, k):
        out *= q ** (2 * i) - 1
    return out


def _orth_inv_count(dim: int, eps_v: int, j: int, q: int) -> int:
    """Number of involutions with j-dimensional fixed space in O(V).

    An involution is determined by its fixed space F (a nondegenerate
    j-dimensional subspace, acting as -1 on the complement), so the count is
    a sum of |O(V)| / (|O(F)| * |O(F_perp)|) over the possible types of F.
    """
    if j == 0 or j == dim:
        return 1
    total = _order_o(dim, eps_v, q)
    if dim % 2 == 1:
        # complement parity decides which side carries the free sign
        if j % 2 == 0:
            return sum(total // (_order_o(j, e, q) * _order_o(dim - j, 0, q)) for e in (1, -1))
        return sum(total // (_order_o(j, 0, q) * _order_o(dim - j, e, q)) for e in (1, -1))
    if j % 2 == 0:
        # types multiply: eps(F) * eps(F_perp) = eps(V)
        return sum(total // (_order_o(j, e, q) * _order_o(dim - j, e * eps_v, q)) for e in (1, -1))
    # both parts odd-dimensional: two discriminant classes of equal size
    return 2 * total // (_order_o(j, 0, q) * _order_o(dim - j, 0, q))


_ORTH_SIGN = {
    Family.O_ODD: 0, Family.SO_ODD: 0,
    Family.O_PLUS: 1, Family.SO_PLUS: 1, Family.GO_PLUS: 1, Family.GO_PLUS_CONN: 1,
    Family.O_MINUS: -1, Family.SO_MINUS: -1, Family.GO_MINUS: -1, Family.GO_MINUS_CONN: -1,
}


def expected_buckets(spec: GroupSpec) -> dict:
    """Predicted involution counts {(mu, j): count} from class-size formulas."""
    fam, n, q = spec.family, spec.n, spec.q
    dim = spec.matrix_dim
    if fam == Family.U:
        raise DomainError("no involution class-size table for the unitary family here")
    if fam == Family.GL:
        return {
            (1, j): q ** (j * (n - j)) * gaussian_binomial_exact(n, j, q)
            for j in range(n + 1)
        }
    if fam in (Family.SP, Family.GSP):
        out = {
            (1, 2 * k): _order_sp(n, q) // (_order_sp(k, q) * _order_sp(n - k, q))
            for k in range(n + 1)
        }
        if fam == Family.GSP:
            # g^2 = I with mu(g) = -1 forces both eigenspaces Lagrangian
            out[(-1, n)] = _order_sp(n, q) // _order_gl(n, q)
        return {k: v for k, v in sorted(out.items()) if v}
    eps_v = _ORTH_SIGN[fam]
    det_one = fam in (Family.SO_ODD, Family.SO_PLUS, Family.SO_MINUS,
                      Family.GO_PLUS_CONN, Family.GO_MINUS_CONN)
    out = {}
    for j in range(dim + 1):
        if det_one and (dim - j) % 2 == 1:
            continue  # det of the involution is (-1)^(dim-j)
        out[(1, j)] = _orth_inv_count(dim, eps_v, j, q)
    if fam in (Family.GO_PLUS, Family.GO_PLUS_CONN):
        # mu = -1 involutions exist only in the split case; both eigenspaces
        # are then maximal isotropic and det = (-1)^n = mu^n automatically
        out[(-1, n)] = _order_o(dim, 1, q) // _order_gl(n, q)
    return out


def wall_class_size(spec: GroupSpec, mu: int, j: int) -> int:
    """Involution class size for similitude sign mu and fixed-space dim j."""
    if mu not in (1, -1):
        raise DomainError(f"mu must be +1 or -1, got {mu}")
    return expected_buckets(spec).get((mu, j), 0)


# --- verification ------------------------------------------------------------


@dataclass(frozen=True)
class ClaimResult:
    name: str
    expected: object
    actual: object
    ok: bool
    note: str = ""

    def to_json_dict(self) -> dict:
        d = {
            "name": self.name,
            "expected": _jsonify(self.expected),
            "actual": _jsonify(self.actual),
            "ok": self.ok,
        }
        if self.note:
            d["note"] = self.note
        return d


def _jsonify(v):
    if isinstance(v, int):
        return str(v)
    if isinstance(v, dict):
        return {f"mu={k[0]},j={k[1]}": str(c) for k, c in sorted(v.items(), key=lambda kv: (-kv[0][0], kv[0][1]))}
    return v


@dataclass(frozen=True)
class VerificationRecord:
    spec: GroupSpec
    report: CensusReport
    claims: tuple

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.claims)

    def to_json_dict(self) -> dict:
        return {
            "family": str(self.spec.family),
            "n": self.spec.n,
            "p": self.spec.q,
            "ok": self.ok,
            "claims": [c.to_json_dict() for c in self.claims],
        }


#: Which degree sum the involution count must equal, per family.
_FS_SUM_KIND = {
    Family.GL: "real_valued",
    Family.SP: "fs_signed",
    Family.GSP: "real_valued",
    Family.O_ODD: "all",
    Family.SO_ODD: "all",
    Family.O_PLUS: "all",
    Family.O_MINUS: "all",
    Family.SO_PLUS: "real_valued",
    Family.SO_MINUS: "real_valued",
    Family.GO_PLUS: "real_valued",
    Family.GO_MINUS: "real_valued",
}


def verify_counts(spec: GroupSpec, jobs: int | None = None) -> VerificationRecord:
    """Run a census and check every count the closed forms predict."""
    from .sums import SumKind, degree_sum

    report = run_census(CensusQuery(spec), jobs=jobs)
    claims = []

    claims.append(ClaimResult(
        name="order equals closed-form order",
        expected=group_order_formula(spec),
        actual=report.order,
        ok=group_order_formula(spec) == report.order,
    ))

    kind_tag = _FS_SUM_KIND.get(spec.family)
    if kind_tag is not None:
        want = degree_sum(spec, SumKind(kind_tag)).value
        claims.append(ClaimResult(
            name=f"involution count equals {kind_tag} degree sum",
            expected=want,
            actual=report.involution_total,
            ok=want == report.involution_total,
        ))

    exp_buckets = expected_buckets(spec)
    got_buckets = {(b.mu, b.j): b.count for b in report.buckets}
    claims.append(ClaimResult(
        name="involution buckets equal class-size table",
        expected=exp_buckets,
        actual=got_buckets,
        ok=exp_buckets == got_buckets,
    ))

    if spec.family == Family.GSP:
        sp_spec = GroupSpec(Family.SP, spec.n, spec.q)
        fs = degree_sum(sp_spec, SumKind.FS_SIGNED).value
        claims.append(ClaimResult(
            name="mu=+1 involutions equal signed symplectic degree sum",
            expected=fs,
            actual=report.bucket_total(1),
            ok=fs == report.bucket_total(1),
        ))
        sp_all = degree_sum(sp_spec, SumKind.ALL).value
        claims.append(ClaimResult(
            name="mu=-1 involutions equal full symplectic degree sum",
            expected=sp_all,
            actual=report.bucket_total(-1),
            ok=sp_all == report.bucket_total(-1),
        ))
        gsp_all = degree_sum(spec, SumKind.ALL).value
        claims.append(ClaimResult(
            name="count of g^2 = -mu(g)I equals full degree sum",
            expected=gsp_all,
            actual=report.twisted[-1],
            ok=gsp_all == report.twisted[-1],
            note="externally sourced identity, verified here numerically",
        ))

    if spec.family == Family.GO_PLUS:
        skew = _order_o(spec.matrix_dim, 1, spec.q) // _order_gl(spec.n, spec.q)
        claims.append(ClaimResult(
            name="mu=-1 involutions equal split isotropic-pair class size",
            expected=skew,
            actual=report.bucket_total(-1),
            ok=skew == report.bucket_total(-1),
        ))
    if spec.family == Family.GO_MINUS:
        claims.append(ClaimResult(
            name="no mu=-1 involutions in the non-split case",
            expected=0,
            actual=report.bucket_total(-1),
            ok=report.bucket_total(-1) == 0,
        ))

    return VerificationRecord(spec=spec, report=report, claims=tuple(claims))
