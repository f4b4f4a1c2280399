"""Exact arithmetic in Q(i), the field of Gaussian rationals.

Every scalar in the package is a GaussianRational: a pair of
arbitrary-precision rationals (fractions.Fraction keeps both components in
lowest terms with positive denominators, so equality is plain structural
equality). The field is chosen so that its only roots of unity are
{1, -1, i, -i}, which makes finite-order tests on matrices decidable, and
so that square roots -- needed for exact quadratic root extraction -- are
decidable by integer square-root checks.

JSON interchange uses decimal-free fraction strings: {"re": "3/2", "im": "-1"}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalarish = Union["GaussianRational", Fraction, int]


@dataclass(frozen=True, slots=True)
class GaussianRational:
    re: Fraction
    im: Fraction

    def __post_init__(self) -> None:
        # Normalize whatever was passed in (int, str, Fraction) to Fraction.
        if not isinstance(self.re, Fraction):
            object.__setattr__(self, "re", Fraction(self.re))
        if not isinstance(self.im, Fraction):
            object.__setattr__(self, "im", Fraction(self.im))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def of(value: Scalarish) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return GaussianRational(Fraction(value), Fraction(0))

    @staticmethod
    def from_json(obj: dict) -> "GaussianRational":
        return GaussianRational(Fraction(obj["re"]), Fraction(obj["im"]))

    def to_json(self) -> dict:
        return {"re": str(self.re), "im": str(self.im)}

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_one(self) -> bool:
        return self.re == 1 and not self.im

    def is_real(self) -> bool:
        return not self.im

    def is_fourth_root_of_unity(self) -> bool:
        """True iff self is in {1, -1, i, -i} (all roots of unity of Q(i))."""
        if self.im == 0:
            return self.re == 1 or self.re == -1
        return self.re == 0 and (self.im == 1 or self.im == -1)

    def unit_order(self) -> int | None:
        """Multiplicative order if self is a root of unity in Q(i), else None."""
        if self.is_one():
            return 1
        if self.re == -1 and not self.im:
            return 2
        if not self.re and (self.im == 1 or self.im == -1):
            return 4
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: Scalarish) -> "GaussianRational":
        o = GaussianRational.of(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: Scalarish) -> "GaussianRational":
        o = GaussianRational.of(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Scalarish) -> "GaussianRational":
        return GaussianRational.of(other) - self

    def __mul__(self, other: Scalarish) -> "GaussianRational":
        o = GaussianRational.of(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """The exact rational |self|^2 = re^2 + im^2."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other: Scalarish) -> "GaussianRational":
        return self * GaussianRational.of(other).inverse()

    def __rtruediv__(self, other: Scalarish) -> "GaussianRational":
        return GaussianRational.of(other) * self.inverse()

    def __pow__(self, exponent: int) -> "GaussianRational":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"


ZERO = GaussianRational(Fraction(0), Fraction(0))
ONE = GaussianRational(Fraction(1), Fraction(0))
I = GaussianRational(Fraction(0), Fraction(1))


def gr(re: Scalarish, im: Scalarish = 0) -> GaussianRational:
    """Shorthand constructor: gr(3), gr('1/2', '-2'), gr(Fraction(5, 3))."""
    if isinstance(re, GaussianRational):
        if im:
            raise ValueError("cannot attach an imaginary part to a GaussianRational")
        return re
    return GaussianRational(Fraction(re), Fraction(im))


def sqrt_fraction(value: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    if value < 0:
        return None
    if not value:
        return Fraction(0)
    num, den = value.numerator, value.denominator
    rn = math.isqrt(num)
    rd = math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def sqrt_gaussian(value: GaussianRational) -> GaussianRational | None:
    """An exact square root of value in Q(i), or None if none exists.

    For a + bi with b != 0, a root x + yi needs x^2 = (a + sqrt(a^2+b^2))/2
    to be a rational square; all steps are decidable over Q.
    """
    a, b = value.re, value.im
    if not b:
        if a >= 0:
            r = sqrt_fraction(a)
            return None if r is None else GaussianRational(r, Fraction(0))
        r = sqrt_fraction(-a)
        return None if r is None else GaussianRational(Fraction(0), r)
    n = sqrt_fraction(a * a + b * b)
    if n is None:
        return None
    x2 = (a + n) / 2
    x = sqrt_fraction(x2)
    if x is None or not x:
        return None
    y = b / (2 * x)
    root = GaussianRational(x, y)
    return root if root * root == value else None
