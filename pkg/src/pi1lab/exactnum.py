"""Exact scalar values beyond the rationals.

Everything decision-relevant in this package is a rational number, but two
kinds of derived values need care:

* decimal renderings for reports (a rational, or the square root of a
  rational, printed to a fixed number of places with round-half-even), and
* values of the form a + b*sqrt(r) that appear transiently when a distance
  envelope changes its nearest feature at a quadratic-irrational parameter.

:class:`SqrtExt` models a + b*sqrt(r) with exact sign and order comparisons;
no floating point is involved anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _round_half_even(num: int, den: int) -> int:
    """Nearest integer to num/den (den > 0), ties to even."""
    q, r = divmod(num, den)
    twice = 2 * r
    if twice > den or (twice == den and q % 2 == 1):
        q += 1
    return q


def _format_scaled(scaled: int, digits: int) -> str:
    """Render scaled / 10**digits as a fixed-point decimal string."""
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    if digits == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def rational_decimal(q: Fraction, digits: int) -> str:
    """Fixed-point decimal rendering of a rational, round-half-even."""
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    scaled = _round_half_even(q.numerator * 10**digits, q.denominator)
    return _format_scaled(scaled, digits)


def _floor_sqrt_scaled(n: int, d: int, digits: int) -> int:
    # floor(sqrt(n/d) * 10**digits); exact because floor(sqrt(t)) = isqrt(floor(t))
    big = n * 10 ** (2 * digits)
    return isqrt(big // d)


def sqrt_decimal(q: Fraction, digits: int) -> str:
    """Fixed-point decimal rendering of sqrt(q), round-half-even, exact.

    The tie case (sqrt landing exactly on a half-unit of the last digit) is
    detected algebraically, so the rounding is correct in every case, not
    merely up to a guard digit.
    """
    if q < 0:
        raise ValueError("cannot take the square root of a negative value")
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    n, d = q.numerator, q.denominator
    fl = _floor_sqrt_scaled(n, d, digits)
    # compare sqrt(n/d)*10^digits with fl + 1/2:  4*n*10^(2*digits)  vs  d*(2*fl+1)^2
    lhs = 4 * n * 10 ** (2 * digits)
    rhs = d * (2 * fl + 1) ** 2
    if lhs > rhs or (lhs == rhs and fl % 2 == 1):
        fl += 1
    return _format_scaled(fl, digits)


def dyadic_sqrt_bounds(q: Fraction, bits: int = 40) -> tuple:
    """Exact dyadic bracket (lo, hi) with lo <= sqrt(q) <= hi, hi - lo <= 2**-bits."""
    if q < 0:
        raise ValueError("cannot take the square root of a negative value")
    scale = 1 << bits
    n, d = q.numerator, q.denominator
    lo_int = isqrt((n * scale * scale) // d)  # floor(sqrt(q) * 2**bits)
    lo = Fraction(lo_int, scale)
    hi = Fraction(lo_int + 1, scale)
    if lo * lo == q:
        hi = lo
    return lo, hi


def sqrt_leq_sqrt_plus_sqrt(a: Fraction, b: Fraction, c: Fraction) -> bool:
    """Decide sqrt(a) <= sqrt(b) + sqrt(c) exactly, for nonnegative rationals.

    Used for triangle-inequality checks on squared distances. Equivalent to
    a - b - c <= 2*sqrt(b*c), squared once after a sign check.
    """
    if a < 0 or b < 0 or c < 0:
        raise ValueError("arguments must be nonnegative")
    t = a - b - c
    if t <= 0:
        return True
    return t * t <= 4 * b * c


@dataclass(frozen=True)
class SqrtExt:
    """The exact real number a + b*sqrt(r), with a, b rational and r >= 0.

    Normalized so that r is 0 or a non-square positive integer and b == 0
    iff r == 0. Supports exact sign determination and total-order comparison
    against rationals and other SqrtExt values (including values written
    over different radicands).
    """

    a: Fraction
    b: Fraction
    r: int

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("radicand must be nonnegative")
        a, b, r = self.a, self.b, self.r
        if b == 0 or r == 0:
            a, b, r = a, Fraction(0), 0
        else:
            root = isqrt(r)
            if root * root == r:
                a, b, r = a + b * root, Fraction(0), 0
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "r", r)

    @classmethod
    def from_rational(cls, q) -> "SqrtExt":
        return cls(Fraction(q), Fraction(0), 0)

    @classmethod
    def sqrt_of(cls, q) -> "SqrtExt":
        """sqrt of a nonnegative rational: sqrt(n/d) = sqrt(n*d)/d."""
        q = Fraction(q)
        if q < 0:
            raise ValueError("cannot take the square root of a negative value")
        return cls(Fraction(0), Fraction(1, q.denominator), q.numerator * q.denominator)

    @property
    def is_rational(self) -> bool:
        return self.r == 0

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("value is irrational")
        return self.a

    def sign(self) -> int:
        if self.r == 0:
            return _sign(self.a)
        if self.a == 0:
            return _sign(self.b)
        sa, sb = _sign(self.a), _sign(self.b)
        if sa == sb:
            return sa
        t = self.a * self.a - self.b * self.b * self.r
        if t == 0:
            return 0
        return sa if t > 0 else sb

    def cmp_rational(self, q) -> int:
        return SqrtExt(self.a - Fraction(q), self.b, self.r).sign()

    def cmp(self, other: "SqrtExt") -> int:
        if self.r == other.r or other.r == 0:
            return SqrtExt(self.a - other.a, self.b - other.b, self.r).sign()
        if self.r == 0:
            return -other.cmp(self)
        # compare L = (a1-a2) + b1*sqrt(r1) against R = b2*sqrt(r2)
        left = SqrtExt(self.a - other.a, self.b, self.r)
        sl, sr = left.sign(), _sign(other.b)
        if sr == 0:
            return sl
        if sl == 0:
            return -sr
        if sl != sr:
            return sl
        # both sides share a sign; compare squares (order flips if negative)
        lsq = SqrtExt(
            left.a * left.a + left.b * left.b * left.r,
            2 * left.a * left.b,
            left.r,
        )
        d = lsq.cmp_rational(other.b * other.b * other.r)
        return d if sl > 0 else -d

    def __lt__(self, other: "SqrtExt") -> bool:
        return self.cmp(other) < 0

    def __le__(self, other: "SqrtExt") -> bool:
        return self.cmp(other) <= 0

    def _floor_scaled(self, digits: int) -> int:
        """floor(value * 10**digits), exact via bracketed integer search."""
        scale = 10**digits
        av = self.a * scale
        if self.r == 0:
            return av.numerator // av.denominator
        bv = self.b * scale
        root_hi = isqrt(self.r) + 1
        mag = abs(av.numerator) // av.denominator + 1
        mag += (abs(bv.numerator) // bv.denominator + 1) * root_hi
        lo, hi = -mag - 1, mag + 1
        # invariant: lo <= value*scale < hi is false only before first shrink
        while hi - lo > 1:
            mid = (lo + hi) // 2
            scaled = SqrtExt(self.a * scale - mid, self.b * scale, self.r)
            if scaled.sign() >= 0:
                lo = mid
            else:
                hi = mid
        return lo

    def decimal(self, digits: int) -> str:
        """Fixed-point rendering with round-half-even, exact tie handling."""
        if self.r == 0:
            return rational_decimal(self.a, digits)
        scale = 10**digits
        fl = self._floor_scaled(digits)
        # compare value*scale with fl + 1/2
        d = SqrtExt(self.a * scale - (Fraction(2 * fl + 1, 2)), self.b * scale, self.r).sign()
        if d > 0 or (d == 0 and fl % 2 == 1):
            fl += 1
        return _format_scaled(fl, digits)
