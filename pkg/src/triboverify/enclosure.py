"""Interval arithmetic with exact rational endpoints.

Every numeric quantity in this package that is not an integer is carried as an
enclosure: a closed interval with ``fractions.Fraction`` endpoints that is
guaranteed to contain the exact real value.  Arithmetic on enclosures is exact;
precision only enters through explicit outward rounding (``rounded``), which
snaps endpoints to a dyadic grid of roughly ``bits`` significant bits, always
widening.  Refining the same computation at a higher bit count therefore never
widens any enclosure, and a comparison decided from an enclosure is a theorem
about the exact value, not a floating point impression.

Complex values are axis-aligned rectangles (an enclosure for the real part and
one for the imaginary part).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

Rat = Union[int, Fraction]


class PrecisionFailure(ArithmeticError):
    """Raised when adaptive refinement reaches its precision ceiling
    without resolving a comparison or a sign."""


def round_down(x: Fraction, bits: int) -> Fraction:
    """Largest grid point <= x on the dyadic grid with ~bits significant bits.

    >>> round_down(Fraction(5, 3), 8)
    Fraction(213, 128)
    """
    return _round(x, bits, up=False)


def round_up(x: Fraction, bits: int) -> Fraction:
    """Smallest grid point >= x.

    >>> round_up(Fraction(5, 3), 8)
    Fraction(107, 64)
    """
    return _round(x, bits, up=True)


def _round(x: Fraction, bits: int, up: bool) -> Fraction:
    if bits < 1:
        raise ValueError("bits must be >= 1")
    n, d = x.numerator, x.denominator
    if n == 0:
        return x
    # |x| lies within a factor 2 of 2**e, so the grid step 2**-(bits-e)
    # leaves about `bits` significant bits.
    e = n.bit_length() - d.bit_length()
    s = bits - e
    if s >= 0:
        num, den = n << s, d
    else:
        num, den = n, d << (-s)
    q, r = divmod(num, den)
    if up and r:
        q += 1
    if s >= 0:
        return Fraction(q, 1 << s)
    return Fraction(q << (-s))


def sqrt_down(x: Fraction, bits: int) -> Fraction:
    """Lower bound for sqrt(x), x >= 0, accurate to ~bits bits."""
    if x < 0:
        raise ValueError("sqrt of negative rational")
    n, d = x.numerator, x.denominator
    if n == 0:
        return Fraction(0)
    e = (n.bit_length() - d.bit_length()) // 2
    s = max(bits - e + 2, 0)
    m = (n << (2 * s)) // d
    return Fraction(isqrt(m), 1 << s)


def sqrt_up(x: Fraction, bits: int) -> Fraction:
    """Upper bound for sqrt(x), x >= 0, accurate to ~bits bits."""
    if x < 0:
        raise ValueError("sqrt of negative rational")
    n, d = x.numerator, x.denominator
    if n == 0:
        return Fraction(0)
    e = (n.bit_length() - d.bit_length()) // 2
    s = max(bits - e + 2, 0)
    num = n << (2 * s)
    m, rem = divmod(num, d)
    if rem:
        m += 1
    r = isqrt(m)
    if r * r < m:
        r += 1
    return Fraction(r, 1 << s)


@dataclass(frozen=True, slots=True)
class Enclosure:
    """Closed interval [lo, hi] certified to contain an exact real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not isinstance(self.lo, Fraction):
            object.__setattr__(self, "lo", Fraction(self.lo))
        if not isinstance(self.hi, Fraction):
            object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"inverted interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, v: Rat) -> "Enclosure":
        f = Fraction(v)
        return cls(f, f)

    # -- queries ---------------------------------------------------------

    def width(self) -> Fraction:
        return self.hi - self.lo

    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, v: Rat) -> bool:
        return self.lo <= v <= self.hi

    def intersects(self, other: "Enclosure") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def encloses(self, other: "Enclosure") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def is_positive(self) -> bool:
        """True only if every value in the interval is > 0."""
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def definitely_lt(self, v: Rat) -> bool:
        return self.hi < v

    def definitely_gt(self, v: Rat) -> bool:
        return self.lo > v

    # -- arithmetic (exact; round explicitly where chains grow) ----------

    def __neg__(self) -> "Enclosure":
        return Enclosure(-self.hi, -self.lo)

    def __add__(self, other) -> "Enclosure":
        if isinstance(other, Enclosure):
            return Enclosure(self.lo + other.lo, self.hi + other.hi)
        if isinstance(other, (int, Fraction)):
            return Enclosure(self.lo + other, self.hi + other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> "Enclosure":
        if isinstance(other, Enclosure):
            return Enclosure(self.lo - other.hi, self.hi - other.lo)
        if isinstance(other, (int, Fraction)):
            return Enclosure(self.lo - other, self.hi - other)
        return NotImplemented

    def __rsub__(self, other) -> "Enclosure":
        return (-self) + other

    def __mul__(self, other) -> "Enclosure":
        if isinstance(other, Enclosure):
            p = (self.lo * other.lo, self.lo * other.hi,
                 self.hi * other.lo, self.hi * other.hi)
            return Enclosure(min(p), max(p))
        if isinstance(other, (int, Fraction)):
            if other >= 0:
                return Enclosure(self.lo * other, self.hi * other)
            return Enclosure(self.hi * other, self.lo * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Enclosure":
        if isinstance(other, Enclosure):
            return self * other.inv()
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if f == 0:
                raise ZeroDivisionError
            return self * Fraction(f.denominator, f.numerator)
        return NotImplemented

    def inv(self) -> "Enclosure":
        """1/[lo, hi]; the interval must not contain zero."""
        if self.contains_zero():
            raise ZeroDivisionError("interval contains zero")
        return Enclosure(1 / self.hi, 1 / self.lo)

    def square(self) -> "Enclosure":
        """Tight [lo, hi]**2; unlike self*self this maps 0-straddling
        intervals to [0, max**2]."""
        a, b = self.lo * self.lo, self.hi * self.hi
        if self.contains_zero():
            return Enclosure(Fraction(0), max(a, b))
        return Enclosure(min(a, b), max(a, b))

    def abs(self) -> "Enclosure":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Enclosure(Fraction(0), max(-self.lo, self.hi))

    def sqrt(self, bits: int) -> "Enclosure":
        """Enclosure of sqrt; a slightly negative lo (numeric noise around a
        true zero) is clamped to 0, but a decidedly negative interval is an
        error."""
        if self.hi < 0:
            raise ValueError("sqrt of negative interval")
        lo = self.lo if self.lo > 0 else Fraction(0)
        return Enclosure(sqrt_down(lo, bits), sqrt_up(self.hi, bits))

    def rounded(self, bits: int) -> "Enclosure":
        return Enclosure(round_down(self.lo, bits), round_up(self.hi, bits))

    def __repr__(self):
        return f"Enclosure({float(self.lo):.17g}, {float(self.hi):.17g})"


@dataclass(frozen=True, slots=True)
class ComplexEnclosure:
    """Axis-aligned rectangle certified to contain an exact complex value."""

    re: Enclosure
    im: Enclosure

    @classmethod
    def point(cls, re: Rat, im: Rat = 0) -> "ComplexEnclosure":
        return cls(Enclosure.point(re), Enclosure.point(im))

    @classmethod
    def real(cls, enc: Enclosure) -> "ComplexEnclosure":
        return cls(enc, Enclosure.point(0))

    def conj(self) -> "ComplexEnclosure":
        return ComplexEnclosure(self.re, -self.im)

    def width(self) -> Fraction:
        return max(self.re.width(), self.im.width())

    def __neg__(self) -> "ComplexEnclosure":
        return ComplexEnclosure(-self.re, -self.im)

    def __add__(self, other) -> "ComplexEnclosure":
        if isinstance(other, ComplexEnclosure):
            return ComplexEnclosure(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction, Enclosure)):
            return ComplexEnclosure(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> "ComplexEnclosure":
        if isinstance(other, ComplexEnclosure):
            return ComplexEnclosure(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction, Enclosure)):
            return ComplexEnclosure(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other) -> "ComplexEnclosure":
        return (-self) + other

    def __mul__(self, other) -> "ComplexEnclosure":
        if isinstance(other, ComplexEnclosure):
            return ComplexEnclosure(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, Fraction, Enclosure)):
            return ComplexEnclosure(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def square(self) -> "ComplexEnclosure":
        return ComplexEnclosure(
            self.re.square() - self.im.square(),
            self.re * self.im * 2,
        )

    def abs2(self) -> Enclosure:
        return self.re.square() + self.im.square()

    def abs(self, bits: int) -> Enclosure:
        return self.abs2().sqrt(bits)

    def inv(self) -> "ComplexEnclosure":
        m = self.abs2()
        if m.contains_zero():
            raise ZeroDivisionError("rectangle may contain zero")
        w = m.inv()
        return ComplexEnclosure(self.re * w, -(self.im * w))

    def __truediv__(self, other) -> "ComplexEnclosure":
        if isinstance(other, ComplexEnclosure):
            return self * other.inv()
        if isinstance(other, (int, Fraction)):
            return ComplexEnclosure(self.re / other, self.im / other)
        if isinstance(other, Enclosure):
            return self * other.inv()
        return NotImplemented

    def rounded(self, bits: int) -> "ComplexEnclosure":
        return ComplexEnclosure(self.re.rounded(bits), self.im.rounded(bits))

    def __repr__(self):
        return (f"ComplexEnclosure({float(self.re.mid()):.17g} "
                f"{float(self.im.mid()):+.17g}j)")


def sqrt_split(z: ComplexEnclosure, bits: int) -> tuple[Enclosure, Enclosure]:
    """Nonnegative enclosures (u, v) with u + iv and u - iv the two candidate
    square roots of z (up to a global sign).

    Uses |w|**2 = |z| and Re(w**2) = u**2 - v**2, so u = sqrt((|z|+x)/2) and
    v = sqrt((|z|-x)/2).  Which sign of the imaginary part is correct depends
    on the sign of Im(z); callers that reconstruct exact values try both
    candidates and verify exactly, so no branch-cut bookkeeping is needed.
    """
    m = z.abs(bits)
    u2 = (m + z.re) * Fraction(1, 2)
    v2 = (m - z.re) * Fraction(1, 2)
    return u2.sqrt(bits), v2.sqrt(bits)
