"""Segments [nu^b rho, nu^e rho] and their elementary operations.

A segment is never empty.  Operations whose result may be empty
(intersection, dropping an end) return ``None`` in that case.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import LineMismatch, NonIntegralOrNegativeLength, UnionNotASegment
from .line import CuspidalPoint, HalfExp, HalfLike

DEFAULT_LINE = "rho"


@dataclass(frozen=True)
class Segment:
    line: str
    b: HalfExp
    e: HalfExp

    def __post_init__(self):
        length = self.e.twice - self.b.twice
        if length < 0 or length % 2:
            raise NonIntegralOrNegativeLength(
                f"[{self.b}, {self.e}]: end minus beginning must be a non-negative integer"
            )

    @property
    def key(self):
        return (self.b, self.e)

    def __lt__(self, other: "Segment") -> bool:
        return (self.line, self.b, self.e) < (other.line, other.b, other.e)

    def __len__(self) -> int:
        return card(self)

    def points(self) -> list[CuspidalPoint]:
        return [CuspidalPoint(self.line, HalfExp(t)) for t in range(self.b.twice, self.e.twice + 1, 2)]

    def __contains__(self, item) -> bool:
        if isinstance(item, Segment):
            return item.line == self.line and _same_coset(item.b, self.b) and self.b <= item.b and item.e <= self.e
        if isinstance(item, CuspidalPoint):
            return item.line == self.line and _same_coset(item.exp, self.b) and self.b <= item.exp <= self.e
        return False

    def __str__(self) -> str:
        return f"[{self.b},{self.e}]"

    def __repr__(self) -> str:
        return f"Segment({self.line!r}, {self.b}, {self.e})"

    def to_json(self) -> dict:
        return {"line": self.line, "b": str(self.b), "e": str(self.e)}

    @classmethod
    def from_json(cls, obj: dict, line: Optional[str] = None) -> "Segment":
        return make_segment(obj.get("line", line or DEFAULT_LINE), obj["b"], obj["e"])


def make_segment(line: str, b: HalfLike, e: HalfLike) -> Segment:
    return Segment(line, HalfExp.of(b), HalfExp.of(e))


def seg(b: HalfLike, e: HalfLike, line: str = DEFAULT_LINE) -> Segment:
    """Shorthand for ``make_segment`` on the default line."""
    return make_segment(line, b, e)


def card(s: Segment) -> int:
    return (s.e.twice - s.b.twice) // 2 + 1


def _same_coset(x: HalfExp, y: HalfExp) -> bool:
    return (x.twice - y.twice) % 2 == 0


def _check_line(s1: Segment, s2: Segment) -> None:
    if s1.line != s2.line:
        raise LineMismatch(f"segments on different lines: {s1.line!r} vs {s2.line!r}")


def _union_is_segment(s1: Segment, s2: Segment) -> bool:
    if not _same_coset(s1.b, s2.b):
        return False
    # overlapping or adjacent
    return max(s1.b, s2.b).twice <= min(s1.e, s2.e).twice + 2


def linked(s1: Segment, s2: Segment) -> bool:
    _check_line(s1, s2)
    if not _union_is_segment(s1, s2):
        return False
    return s1 not in s2 and s2 not in s1


def precedes(s1: Segment, s2: Segment) -> bool:
    """The relation s1 -> s2: linked, and s1 carries the beginning of the union."""
    return linked(s1, s2) and s1.b < s2.b


def seg_union(s1: Segment, s2: Segment) -> Segment:
    _check_line(s1, s2)
    if not _union_is_segment(s1, s2):
        raise UnionNotASegment(f"{s1} u {s2} is not a segment")
    return Segment(s1.line, min(s1.b, s2.b), max(s1.e, s2.e))


def seg_intersection(s1: Segment, s2: Segment) -> Optional[Segment]:
    _check_line(s1, s2)
    if not _same_coset(s1.b, s2.b):
        return None
    b, e = max(s1.b, s2.b), min(s1.e, s2.e)
    if e < b:
        return None
    return Segment(s1.line, b, e)


def minus_end(s: Segment) -> Optional[Segment]:
    if s.b == s.e:
        return None
    return Segment(s.line, s.b, s.e - 1)


def minus_begin(s: Segment) -> Optional[Segment]:
    if s.b == s.e:
        return None
    return Segment(s.line, s.b + 1, s.e)


def twist_segment(s: Segment, z: HalfLike) -> Segment:
    z = HalfExp.of(z)
    return Segment(s.line, s.b + z, s.e + z)


def hermitian_dual_segment(s: Segment) -> Segment:
    return Segment(s.line, -s.e, -s.b)
