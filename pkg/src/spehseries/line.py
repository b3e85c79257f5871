"""Exact half-integer exponents and points on a cuspidal line.

Every exponent x in nu^x rho that shows up here lies in (1/2)Z, so an
exponent is stored as the integer ``2x``.  A point on the line is the
pair (line label, exponent); the label is opaque and only ever compared
for equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

HalfLike = Union["HalfExp", int, str, Fraction]


@dataclass(frozen=True, order=True)
class HalfExp:
    """An element of (1/2)Z, stored as ``twice = 2x``."""

    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, int) or isinstance(self.twice, bool):
            raise TypeError(f"HalfExp.twice must be int, got {self.twice!r}")

    @classmethod
    def of(cls, value: HalfLike) -> "HalfExp":
        """Coerce an int, a Fraction, a string like ``"-3/2"`` or a HalfExp."""
        if isinstance(value, HalfExp):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not an exponent")
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, Fraction):
            doubled = 2 * value
            if doubled.denominator != 1:
                raise ValueError(f"{value} is not in (1/2)Z")
            return cls(int(doubled))
        raise TypeError(f"cannot make an exponent from {value!r}")

    @classmethod
    def parse(cls, text: str) -> "HalfExp":
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            if int(den) != 2:
                raise ValueError(f"exponent {text!r} must have denominator 2")
            return cls(int(num))
        return cls(2 * int(text))

    @property
    def is_integral(self) -> bool:
        return self.twice % 2 == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __add__(self, other: HalfLike) -> "HalfExp":
        return HalfExp(self.twice + HalfExp.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other: HalfLike) -> "HalfExp":
        return HalfExp(self.twice - HalfExp.of(other).twice)

    def __rsub__(self, other: HalfLike) -> "HalfExp":
        return HalfExp(HalfExp.of(other).twice - self.twice)

    def __neg__(self) -> "HalfExp":
        return HalfExp(-self.twice)

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfExp({self})"


def half(p: int) -> HalfExp:
    """Return p/2."""
    return HalfExp(p)


ZERO = HalfExp(0)


@dataclass(frozen=True, order=True)
class CuspidalPoint:
    """The cuspidal representation nu^exp rho on the line labelled ``line``."""

    line: str
    exp: HalfExp

    def __str__(self) -> str:
        return f"nu^{self.exp} {self.line}"


def twist_point(p: CuspidalPoint, z: HalfLike) -> CuspidalPoint:
    return CuspidalPoint(p.line, p.exp + HalfExp.of(z))


def hermitian_dual_point(p: CuspidalPoint) -> CuspidalPoint:
    # rho is taken unitarizable, so the dual just flips the exponent
    return CuspidalPoint(p.line, -p.exp)
