"""Exact arithmetic in prime fields F_p and on small matrices over them.

Elements carry their modulus, so mixing moduli is caught immediately instead
of silently coercing.  Matrices are immutable, stored as canonical residues,
and sized for the small dimensions (at most 8) the rest of the package needs.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

MAX_DIM = 8


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def require_odd_prime(p: int) -> None:
    if not is_prime(p) or p == 2:
        raise DomainError(f"modulus must be an odd prime, got {p}")


@dataclass(frozen=True)
class FpElement:
    """A residue in F_p.  Binary operations require equal moduli."""

    value: int
    p: int

    def __post_init__(self) -> None:
        require_odd_prime(self.p)
        object.__setattr__(self, "value", self.value % self.p)

    def _check(self, other: "FpElement") -> None:
        if not isinstance(other, FpElement):
            raise DomainError(f"expected FpElement, got {type(other).__name__}")
        if other.p != self.p:
            raise DomainError(f"modulus mismatch: {self.p} vs {other.p}")

    def __add__(self, other: "FpElement") -> "FpElement":
        self._check(other)
        return FpElement((self.value + other.value) % self.p, self.p)

    def __sub__(self, other: "FpElement") -> "FpElement":
        self._check(other)
        return FpElement((self.value - other.value) % self.p, self.p)

    def __mul__(self, other: "FpElement") -> "FpElement":
        self._check(other)
        return FpElement((self.value * other.value) % self.p, self.p)

    def __neg__(self) -> "FpElement":
        return FpElement(-self.value % self.p, self.p)

    def __bool__(self) -> bool:
        return self.value != 0

    def inverse(self) -> "FpElement":
        if self.value == 0:
            raise DomainError(f"0 has no inverse mod {self.p}")
        # Fermat: a^(p-2) = a^-1 for prime p
        return FpElement(pow(self.value, self.p - 2, self.p), self.p)


def field_inv(a: FpElement) -> FpElement:
    """Multiplicative inverse in F_p; inverting zero is a domain error."""
    return a.inverse()


def smallest_nonsquare(p: int) -> FpElement:
    """The least positive non-square residue mod p (p an odd prime).

    Exists for every odd prime because exactly (p-1)/2 nonzero residues are
    squares.  Euler's criterion decides squareness exactly.
    """
    require_odd_prime(p)
    for a in range(2, p):
        if pow(a, (p - 1) // 2, p) != 1:
            return FpElement(a, p)
    raise AssertionError(f"no non-square found mod {p}")  # unreachable for odd primes


class MatrixFp:
    """An immutable n x n matrix over F_p, 1 <= n <= 8, stored as residues."""

    __slots__ = ("rows", "n", "p")

    def __init__(self, rows, p: int):
        require_odd_prime(p)
        rows = tuple(tuple(int(v) % p for v in row) for row in rows)
        n = len(rows)
        if not 1 <= n <= MAX_DIM:
            raise DomainError(f"matrix dimension must be in 1..{MAX_DIM}, got {n}")
        if any(len(row) != n for row in rows):
            raise DomainError("matrix must be square")
        self.rows = rows
        self.n = n
        self.p = p

    @classmethod
    def identity(cls, n: int, p: int) -> "MatrixFp":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), p)

    @classmethod
    def from_diag(cls, diag, p: int) -> "MatrixFp":
        n = len(diag)
        return cls(tuple(tuple(diag[i] if i == j else 0 for j in range(n)) for i in range(n)), p)

    def _check(self, other: "MatrixFp") -> None:
        if not isinstance(other, MatrixFp):
            raise DomainError(f"expected MatrixFp, got {type(other).__name__}")
        if other.p != self.p:
            raise DomainError(f"modulus mismatch: {self.p} vs {other.p}")
        if other.n != self.n:
            raise DomainError(f"dimension mismatch: {self.n} vs {other.n}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatrixFp)
            and self.p == other.p
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.p))

    def __repr__(self) -> str:
        return f"MatrixFp({list(map(list, self.rows))}, p={self.p})"

    def __matmul__(self, other: "MatrixFp") -> "MatrixFp":
        self._check(other)
        p, n = self.p, self.n
        bt = tuple(zip(*other.rows))
        return MatrixFp(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) % p for col in bt) for row in self.rows),
            p,
        )

    def __add__(self, other: "MatrixFp") -> "MatrixFp":
        self._check(other)
        return MatrixFp(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)),
            self.p,
        )

    def __sub__(self, other: "MatrixFp") -> "MatrixFp":
        self._check(other)
        return MatrixFp(
            tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)),
            self.p,
        )

    def __neg__(self) -> "MatrixFp":
        return MatrixFp(tuple(tuple(-a for a in row) for row in self.rows), self.p)

    def scalar_mul(self, c: int) -> "MatrixFp":
        return MatrixFp(tuple(tuple(c * a for a in row) for row in self.rows), self.p)

    def transpose(self) -> "MatrixFp":
        return MatrixFp(tuple(zip(*self.rows)), self.p)

    def rank(self) -> int:
        return _rank_rows([list(row) for row in self.rows], self.p)

    def det(self) -> int:
        return _det_rows([list(row) for row in self.rows], self.p)

    def entry(self, i: int, j: int) -> FpElement:
        return FpElement(self.rows[i][j], self.p)


def _rank_rows(rows, p: int) -> int:
    """Rank by Gaussian elimination over F_p; mutates its argument."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(n_cols):
        piv = next((r for r in range(rank, n_rows) if rows[r][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        for r in range(rank + 1, n_rows):
            f = (rows[r][col] * inv) % p
            if f:
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank


def _det_rows(rows, p: int) -> int:
    """Determinant mod p by elimination; mutates its argument."""
    n = len(rows)
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] % p), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det = (det * rows[col][col]) % p
        inv = pow(rows[col][col], p - 2, p)
        for r in range(col + 1, n):
            f = (rows[r][col] * inv) % p
            if f:
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[col])]
    return det % p


def mat_mul(a: MatrixFp, b: MatrixFp) -> MatrixFp:
    """Matrix product; dimension or modulus mismatch is a domain error."""
    return a @ b


def mat_rank(a: MatrixFp) -> int:
    """Rank over F_p via Gaussian elimination."""
    return a.rank()
