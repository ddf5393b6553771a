"""Gaussian rational scalars: a + b*i with arbitrary-precision rational a, b.

All arithmetic is exact.  gmpy2.mpq keeps numerators and denominators in
lowest terms with positive denominator, which is exactly the canonical form
we need.
"""

from __future__ import annotations

from gmpy2 import isqrt, mpq, mpz

from .errors import NonSquareError, ZeroDivisorError

_MPQ_TYPES = (int, mpz, mpq)


def _as_mpq(v) -> mpq:
    if isinstance(v, mpq):
        return v
    if isinstance(v, _MPQ_TYPES):
        return mpq(v)
    if isinstance(v, str):
        return mpq(v)
    raise TypeError(f"cannot interpret {v!r} as an exact rational")


class Scalar:
    """An element of Q(i), immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_mpq(re))
        object.__setattr__(self, "im", _as_mpq(im))

    def __setattr__(self, *a):
        raise AttributeError("Scalar is immutable")

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero() -> "Scalar":
        return _ZERO

    @staticmethod
    def one() -> "Scalar":
        return _ONE

    @staticmethod
    def i() -> "Scalar":
        return _I

    @staticmethod
    def of(v) -> "Scalar":
        if isinstance(v, Scalar):
            return v
        return Scalar(_as_mpq(v))

    # -- predicates --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_one(self) -> bool:
        return self.re == 1 and not self.im

    def is_real(self) -> bool:
        return not self.im

    # -- arithmetic --------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im)

    def __mul__(self, other: "Scalar") -> "Scalar":
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return Scalar(a * c)
        return Scalar(a * c - b * d, a * d + b * c)

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def inverse(self) -> "Scalar":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisorError("zero divisor")
        return Scalar(self.re / n, -self.im / n)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        return self * other.inverse()

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        out = _ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / hashing ----------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    # -- square root -------------------------------------------------

    def sqrt(self) -> "Scalar":
        """Exact square root in Q(i), if it exists.

        Picks the branch with positive real part, or positive imaginary
        part when the real part is zero.  Raises NonSquareError otherwise.
        """
        if self.is_zero():
            return _ZERO
        a, b = self.re, self.im
        if not b:
            if a > 0:
                r = _mpq_sqrt(a)
                return Scalar(r)
            r = _mpq_sqrt(-a)
            return Scalar(0, r)
        n = _mpq_sqrt(a * a + b * b)
        half = (a + n) / 2
        c = _mpq_sqrt(half)
        if not c:
            raise NonSquareError("non-square")
        d = b / (2 * c)
        root = Scalar(c, d)
        if root * root != self:
            raise NonSquareError("non-square")
        if root.re < 0 or (not root.re and root.im < 0):
            root = -root
        return root

    # -- rendering ---------------------------------------------------

    def __repr__(self):
        return f"Scalar({self.re!s}, {self.im!s})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        istr = "i" if mag == 1 else f"{mag}i"
        return f"{self.re}{sign}{istr}"


def _mpq_sqrt(v: mpq) -> mpq:
    """Exact square root of a nonnegative rational, or raise."""
    if v < 0:
        raise NonSquareError("non-square")
    num, den = v.numerator, v.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise NonSquareError("non-square")
    return mpq(rn, rd)


_ZERO = Scalar(0)
_ONE = Scalar(1)
_I = Scalar(0, 1)
