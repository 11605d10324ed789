"""Integer-coefficient polynomials in q and Gaussian binomial coefficients.

Every closed form in this package is a polynomial in the field size q, so the
whole layer is exact: dense integer coefficient lists, big-int evaluation, and
two independent routes to the Gaussian binomial (Pascal recurrence for the
polynomial, product formula with exact division for values) that are checked
against each other in the test suite.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import DomainError

#: Degree of the zero polynomial.
NEG_INF = float("-inf")


class QPoly:
    """A polynomial in q with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(int(c) for c in coeffs)

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "QPoly":
        """c * q^k."""
        if k < 0:
            raise DomainError(f"monomial degree must be >= 0, got {k}")
        return cls((0,) * k + (c,))

    @property
    def degree(self):
        """Degree, with the zero polynomial mapped to minus infinity."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"

    def _coerce(self, other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly((other,))
        raise DomainError(f"cannot combine QPoly with {type(other).__name__}")

    def __add__(self, other) -> "QPoly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "QPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QPoly":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "QPoly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "QPoly":
        """Multiply by q^k."""
        if k < 0:
            raise DomainError(f"shift must be >= 0, got {k}")
        if not self.coeffs:
            return QPoly()
        return QPoly((0,) * k + self.coeffs)

    def stretch(self, s: int) -> "QPoly":
        """Substitute q -> q^s."""
        if s < 1:
            raise DomainError(f"stretch factor must be >= 1, got {s}")
        out = [0] * (s * len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            out[s * i] = c
        return QPoly(out)

    def halve_exact(self) -> "QPoly":
        """Divide by 2, requiring every coefficient to be even."""
        if any(c % 2 for c in self.coeffs):
            raise DomainError("polynomial has an odd coefficient, cannot halve exactly")
        return QPoly(tuple(c // 2 for c in self.coeffs))

    def eval_at(self, q: int) -> int:
        """Exact big-integer evaluation by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc


def qpoly_eval(poly: QPoly, q: int) -> int:
    return poly.eval_at(q)


@lru_cache(maxsize=None)
def gaussian_binomial_poly(m: int, k: int) -> QPoly:
    """The Gaussian binomial (m choose k)_q as a polynomial in q.

    Built from the Pascal-type recurrence
        (m k)_q = (m-1 k)_q + q^(m-k) (m-1 k-1)_q
    with (m 0)_q = (m m)_q = 1.  Out-of-range k is a domain error.
    """
    if m < 0 or k < 0 or k > m:
        raise DomainError(f"Gaussian binomial ({m} {k}) is out of range")
    if k == 0 or k == m:
        return QPoly((1,))
    return gaussian_binomial_poly(m - 1, k) + gaussian_binomial_poly(m - 1, k - 1).shift(m - k)


def gaussian_binomial_exact(m: int, k: int, q: int, strict: bool = True) -> int:
    """The Gaussian binomial (m choose k)_q evaluated at an integer q >= 2.

    Computed independently of the polynomial route: the full numerator
    (q^m - 1)(q^(m-1) - 1)...(q^(m-k+1) - 1) is assembled before dividing by
    (q^k - 1)...(q - 1); the division is asserted exact.  With strict=False an
    out-of-range k yields 0 instead of a domain error.
    """
    if q < 2:
        raise DomainError(f"q must be an integer >= 2, got {q}")
    if k < 0 or k > m:
        if strict:
            raise DomainError(f"Gaussian binomial ({m} {k}) is out of range")
        return 0
    num = 1
    for i in range(k):
        num *= q ** (m - i) - 1
    den = 1
    for i in range(1, k + 1):
        den *= q**i - 1
    assert num % den == 0, f"Gaussian binomial division not exact for ({m},{k},{q})"
    return num // den


def render_qpoly(poly: QPoly) -> str:
    """Render with descending powers: 'q^4 + q^3 + 2*q^2 + q + 1'."""
    if poly.is_zero():
        return "0"
    parts = []
    for e in range(len(poly.coeffs) - 1, -1, -1):
        c = poly.coeffs[e]
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        elif e == 1:
            body = "q" if mag == 1 else f"{mag}*q"
        else:
            body = f"q^{e}" if mag == 1 else f"{mag}*q^{e}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
