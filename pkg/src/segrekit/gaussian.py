"""Exact arithmetic over the Gaussian rationals Q(i)."""

from __future__ import annotations

import math
from fractions import Fraction


class GaussianRational:
    """A number a + b*i with exact rational a, b.

    Values are immutable; all arithmetic is exact.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_value(v) -> "GaussianRational":
        if isinstance(v, GaussianRational):
            return v
        return GaussianRational(v)

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def is_one(self) -> bool:
        return self.re == 1 and self.im == 0

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = GaussianRational.from_value(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianRational.from_value(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.from_value(other) - self

    def __mul__(self, other):
        other = GaussianRational.from_value(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.from_value(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return GaussianRational.from_value(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, k: int):
        if k < 0:
            return GaussianRational(1) / self ** (-k)
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """|c|^2 as an exact rational."""
        return self.re * self.re + self.im * self.im

    # -- comparison/hash -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    # -- printing ----------------------------------------------------------

    def __str__(self):
        return format_coeff(self)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


QI = GaussianRational
QI_ZERO = QI(0)
QI_ONE = QI(1)
QI_I = QI(0, 1)


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_coeff(c: GaussianRational) -> str:
    """Render as `a`, `a/b`, `a+b*i`, `b*i` or `i` (the printed syntax)."""
    if c.im == 0:
        return _frac_str(c.re)
    if c.im == 1:
        im = "i"
    elif c.im == -1:
        im = "-i"
    else:
        im = f"{_frac_str(c.im)}*i"
    if c.re == 0:
        return im
    sign = "+" if c.im > 0 else ""
    return f"{_frac_str(c.re)}{sign}{im}"


def frac_sqrt(f: Fraction):
    """Exact square root of a non-negative rational, or None."""
    if f < 0:
        return None
    rn = math.isqrt(f.numerator)
    rd = math.isqrt(f.denominator)
    if rn * rn != f.numerator or rd * rd != f.denominator:
        return None
    return Fraction(rn, rd)


def qi_sqrt(c: GaussianRational):
    """A square root of c within Q(i), or None when no such root exists."""
    if c.is_zero():
        return QI_ZERO
    if c.im == 0:
        r = frac_sqrt(c.re)
        if r is not None:
            return QI(r)
        r = frac_sqrt(-c.re)
        if r is not None:
            return QI(0, r)
        return None
    # (x + y i)^2 = c:  x^2 - y^2 = re, 2 x y = im, x^2 + y^2 = |c|
    mod = frac_sqrt(c.norm())
    if mod is None:
        return None
    x2 = (c.re + mod) / 2
    x = frac_sqrt(x2)
    if x is None or x == 0:
        return None
    y = c.im / (2 * x)
    root = QI(x, y)
    return root if root * root == c else None
