"""Finite classical group families: parameters, bilinear forms, orders.

A GroupSpec names a group by family tag, rank parameter n, and field size q:

    gl / u                GL(n, q), U(n, q^2)            matrix dim n
    sp / gsp              Sp(2n, q), GSp(2n, q)          matrix dim 2n
    o_odd / so_odd        O(2n+1, q), SO(2n+1, q)        matrix dim 2n+1
    o_plus / o_minus      O^+(2n, q), O^-(2n, q)         matrix dim 2n
    so_plus / so_minus    SO^+(2n, q), SO^-(2n, q)
    go_plus / go_minus    GO^+(2n, q), GO^-(2n, q)       similitude groups
    go_plus_conn / go_minus_conn
                          GO^{+,o}(2n, q), GO^{-,o}(2n, q): similitudes g
                          with det(g) = mu(g)^n, the connected similitude kernel

Similitude groups consist of g with g^T B g = mu(g) B for some mu(g) in F_q^x;
isometry groups fix mu = 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError
from .fp import MAX_DIM, MatrixFp, require_odd_prime, smallest_nonsquare


class Family(str, Enum):
    GL = "gl"
    U = "u"
    SP = "sp"
    GSP = "gsp"
    O_ODD = "o_odd"
    SO_ODD = "so_odd"
    O_PLUS = "o_plus"
    O_MINUS = "o_minus"
    SO_PLUS = "so_plus"
    SO_MINUS = "so_minus"
    GO_PLUS = "go_plus"
    GO_MINUS = "go_minus"
    GO_PLUS_CONN = "go_plus_conn"
    GO_MINUS_CONN = "go_minus_conn"

    def __str__(self) -> str:  # keep CLI/JSON output as the bare tag
        return self.value


#: Families defined by a bilinear form (everything except GL and U).
FORM_FAMILIES = frozenset(f for f in Family if f not in (Family.GL, Family.U))

#: Families whose members satisfy g^T B g = mu B with mu ranging over F_q^x.
SIMILITUDE_FAMILIES = frozenset(
    {Family.GSP, Family.GO_PLUS, Family.GO_MINUS, Family.GO_PLUS_CONN, Family.GO_MINUS_CONN}
)

#: Subgroups cut out of a parent by a determinant condition.
DET_ONE_FAMILIES = frozenset({Family.SO_ODD, Family.SO_PLUS, Family.SO_MINUS})
DET_MU_POW_FAMILIES = frozenset({Family.GO_PLUS_CONN, Family.GO_MINUS_CONN})

_SYMPLECTIC = frozenset({Family.SP, Family.GSP})
_ODD_ORTH = frozenset({Family.O_ODD, Family.SO_ODD})
_EVEN_PLUS = frozenset({Family.O_PLUS, Family.SO_PLUS, Family.GO_PLUS, Family.GO_PLUS_CONN})
_EVEN_MINUS = frozenset({Family.O_MINUS, Family.SO_MINUS, Family.GO_MINUS, Family.GO_MINUS_CONN})


def parse_family(tag: str) -> Family:
    try:
        return Family(tag)
    except ValueError:
        raise DomainError(f"unknown family tag {tag!r}") from None


@dataclass(frozen=True)
class GroupSpec:
    """A classical group: family tag, rank parameter n >= 1, field size q."""

    family: Family
    n: int
    q: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")
        if self.q < 2:
            raise DomainError(f"q must be >= 2, got {self.q}")

    @property
    def matrix_dim(self) -> int:
        return matrix_dim(self.family, self.n)


def matrix_dim(family: Family, n: int) -> int:
    if family in (Family.GL, Family.U):
        return n
    if family in _ODD_ORTH:
        return 2 * n + 1
    return 2 * n


@dataclass(frozen=True)
class FormSpec:
    """A bilinear form: kind ('symplectic' or 'symmetric') plus Gram matrix."""

    kind: str
    gram: MatrixFp


def standard_form(family: Family, n: int, p: int) -> FormSpec:
    """The standard Gram matrix used throughout for the given form family.

    symplectic:          [[0, I], [-I, 0]]
    symmetric split:     [[0, I], [I, 0]]
    symmetric non-split: split part of dimension 2n-2, plus diag(1, -delta)
                         with delta the smallest non-square mod p
    symmetric odd-dim:   identity of size 2n+1

    GL and U carry no form; dimensions above 8 are out of scope.
    """
    require_odd_prime(p)
    if family not in FORM_FAMILIES:
        raise DomainError(f"family {family} has no associated bilinear form")
    dim = matrix_dim(family, n)
    if dim > MAX_DIM:
        raise DomainError(f"matrix dimension {dim} exceeds supported maximum {MAX_DIM}")
    if family in _SYMPLECTIC:
        rows = [[0] * dim for _ in range(dim)]
        for i in range(n):
            rows[i][n + i] = 1
            rows[n + i][i] = -1
        return FormSpec("symplectic", MatrixFp(rows, p))
    if family in _ODD_ORTH:
        return FormSpec("symmetric", MatrixFp.identity(dim, p))
    rows = [[0] * dim for _ in range(dim)]
    if family in _EVEN_PLUS:
        for i in range(n):
            rows[i][n + i] = 1
            rows[n + i][i] = 1
    else:
        m = n - 1
        for i in range(m):
            rows[i][m + i] = 1
            rows[m + i][i] = 1
        delta = smallest_nonsquare(p).value
        rows[2 * m][2 * m] = 1
        rows[2 * m + 1][2 * m + 1] = -delta % p
    return FormSpec("symmetric", MatrixFp(rows, p))


def _prod(terms) -> int:
    out = 1
    for t in terms:
        out *= t
    return out


def group_order_formula(spec: GroupSpec) -> int:
    """|G| as an exact integer from the classical order formulas.

    Meaningful when q is a prime power (odd for the orthogonal and similitude
    families); the arithmetic itself is defined for any integer q >= 2.
    """
    fam, n, q = spec.family, spec.n, spec.q
    if fam == Family.GL:
        return q ** (n * (n - 1) // 2) * _prod(q**i - 1 for i in range(1, n + 1))
    if fam == Family.U:
        return q ** (n * (n - 1) // 2) * _prod(q**i - (-1) ** i for i in range(1, n + 1))
    if fam == Family.SP:
        return q ** (n * n) * _prod(q ** (2 * i) - 1 for i in range(1, n + 1))
    if fam == Family.GSP:
        return (q - 1) * group_order_formula(GroupSpec(Family.SP, n, q))
    if fam in _ODD_ORTH:
        full = 2 * q ** (n * n) * _prod(q ** (2 * i) - 1 for i in range(1, n + 1))
        return full // 2 if fam == Family.SO_ODD else full
    # even-dimensional orthogonal: |O^eps(2n,q)| = 2 q^(n(n-1)) (q^n - eps) prod(q^2i - 1)
    eps = 1 if fam in _EVEN_PLUS else -1
    full = (
        2
        * q ** (n * (n - 1))
        * (q**n - eps)
        * _prod(q ** (2 * i) - 1 for i in range(1, n))
    )
    if fam in (Family.O_PLUS, Family.O_MINUS):
        return full
    if fam in (Family.SO_PLUS, Family.SO_MINUS):
        return full // 2
    if fam in (Family.GO_PLUS, Family.GO_MINUS):
        return (q - 1) * full
    # connected similitude kernel: index 2 in GO^eps
    return (q - 1) * full // 2


@dataclass(frozen=True)
class GroupDescriptor:
    """Algebraic-group data used by the bound formulas.

    d = dimension, r = rank of the ambient algebraic group, weyl_order = |W|.
    applicable marks the families the bound hypotheses cover (connected
    reductive with connected center).
    """

    family: Family
    n: int
    d: int
    r: int
    weyl_order: int
    applicable: bool


def descriptor(family: Family, n: int) -> GroupDescriptor:
    fact = math.factorial(n)
    if family in (Family.GL, Family.U):
        return GroupDescriptor(family, n, n * n, n, fact, True)
    if family == Family.GSP:
        return GroupDescriptor(family, n, 2 * n * n + n + 1, n + 1, 2**n * fact, True)
    if family == Family.SP:
        return GroupDescriptor(family, n, 2 * n * n + n, n, 2**n * fact, False)
    if family == Family.SO_ODD:
        return GroupDescriptor(family, n, 2 * n * n + n, n, 2**n * fact, True)
    if family == Family.O_ODD:
        return GroupDescriptor(family, n, 2 * n * n + n, n, 2**n * fact, False)
    weyl_d = 2 ** (n - 1) * fact
    if family in DET_MU_POW_FAMILIES:
        return GroupDescriptor(family, n, 2 * n * n - n + 1, n + 1, weyl_d, True)
    # O^eps, SO^eps, GO^eps: data of the (dis)connected type-D group
    return GroupDescriptor(family, n, 2 * n * n - n, n, weyl_d, False)


def is_member(g: MatrixFp, spec: GroupSpec, form: FormSpec | None = None):
    """Membership test; returns (member, mu) with mu the similitude factor.

    mu is reported as a canonical residue in [0, p); isometry groups give
    mu = 1, GL gives mu = 1 by convention, non-members give (False, None).
    The form must come from standard_form for the same family, n, p.
    """
    fam, n, p = spec.family, spec.n, spec.q
    if g.p != p:
        raise DomainError(f"matrix modulus {g.p} does not match spec q={p}")
    if g.n != spec.matrix_dim:
        raise DomainError(f"matrix dimension {g.n} does not match spec dimension {spec.matrix_dim}")
    if fam == Family.U:
        raise DomainError("unitary membership requires extension-field arithmetic, out of scope")
    if fam == Family.GL:
        return (True, 1) if g.rank() == g.n else (False, None)
    if form is None:
        raise DomainError(f"family {fam} requires the form from standard_form")
    gram = form.gram
    lhs = g.transpose() @ gram @ g
    # mu is forced by any position where the Gram matrix is nonzero
    mu = None
    for i in range(g.n):
        for j in range(g.n):
            if gram.rows[i][j]:
                mu = (lhs.rows[i][j] * pow(gram.rows[i][j], p - 2, p)) % p
                break
        if mu is not None:
            break
    if mu is None or mu == 0:
        return (False, None)
    if lhs != gram.scalar_mul(mu):
        return (False, None)
    if fam in SIMILITUDE_FAMILIES:
        if fam in DET_MU_POW_FAMILIES and g.det() != pow(mu, n, p):
            return (False, None)
        return (True, mu)
    if mu != 1:
        return (False, None)
    if fam in DET_ONE_FAMILIES and g.det() != 1:
        return (False, None)
    return (True, 1)
