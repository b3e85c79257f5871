"""Multisegments: finite multisets of segments on one cuspidal line.

A :class:`Multisegment` keeps its segments sorted by (beginning, end), so
two multisegments are equal exactly when they are equal as multisets.
The Zelevinsky order ``b <= a`` is generated by elementary reductions
(replace a linked pair by its union and intersection) and is decided
here by breadth-first search over canonical forms.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .errors import ClosureTooLarge, LineMismatch
from .line import CuspidalPoint, HalfExp, HalfLike
from .segments import (
    DEFAULT_LINE,
    Segment,
    card,
    hermitian_dual_segment,
    minus_begin,
    minus_end,
    twist_segment,
)

DEFAULT_MAX_NODES = 10**6

# raw canonical form: sorted tuple of (2b, 2e) pairs
RawKey = tuple


class Multisegment:
    """A finite multiset of segments, all on the line ``line``."""

    __slots__ = ("line", "segments", "_hash")

    def __init__(self, segments: Iterable[Segment] = (), line: Optional[str] = None):
        segs = list(segments)
        lines = {s.line for s in segs}
        if len(lines) > 1:
            raise LineMismatch(f"multisegment mixes lines {sorted(lines)}")
        if segs:
            (seg_line,) = lines
            if line is not None and line != seg_line:
                raise LineMismatch(f"segments live on {seg_line!r}, not {line!r}")
            line = seg_line
        self.line = line or DEFAULT_LINE
        self.segments = tuple(sorted(segs, key=lambda s: s.key))
        self._hash = None

    @classmethod
    def from_raw(cls, raw: RawKey, line: str = DEFAULT_LINE) -> "Multisegment":
        return cls((Segment(line, HalfExp(b), HalfExp(e)) for b, e in raw), line=line)

    @property
    def raw(self) -> RawKey:
        return tuple((s.b.twice, s.e.twice) for s in self.segments)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    def __bool__(self) -> bool:
        return bool(self.segments)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multisegment):
            return NotImplemented
        if not self.segments and not other.segments:
            return True
        return self.line == other.line and self.segments == other.segments

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.raw) if not self.segments else hash((self.line, self.raw))
        return self._hash

    def __lt__(self, other: "Multisegment") -> bool:
        # deterministic output order only; unrelated to the Zelevinsky order
        return (len(self), self.raw) < (len(other), other.raw)

    def __add__(self, other: "Multisegment") -> "Multisegment":
        return msum(self, other)

    def __str__(self) -> str:
        return "(" + ",".join(str(s) for s in self.segments) + ")"

    def __repr__(self) -> str:
        return f"Multisegment{self}"

    def to_json(self) -> dict:
        return {
            "line": self.line,
            "segments": [{"b": str(s.b), "e": str(s.e)} for s in self.segments],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Multisegment":
        line = obj.get("line", DEFAULT_LINE)
        segs = [Segment.from_json(s, line=line) for s in obj.get("segments", [])]
        return cls(segs, line=line)


def ms(*pairs, line: str = DEFAULT_LINE) -> Multisegment:
    """Build a multisegment from (b, e) pairs: ``ms((0, 1), (1, 2))``."""
    return Multisegment((Segment(line, HalfExp.of(b), HalfExp.of(e)) for b, e in pairs), line=line)


def msum(a1: Multisegment, a2: Multisegment) -> Multisegment:
    if a1 and a2 and a1.line != a2.line:
        raise LineMismatch(f"cannot add multisegments on {a1.line!r} and {a2.line!r}")
    line = a1.line if a1 else a2.line
    return Multisegment(a1.segments + a2.segments, line=line)


def speh(n: int, d: int, center: HalfLike = 0, line: str = DEFAULT_LINE) -> Multisegment:
    """The ladder a(n, d) twisted by nu^center: n segments of length d, stepping by one."""
    if n < 1 or d < 1:
        raise ValueError("speh needs n, d >= 1")
    c = HalfExp.of(center)
    # doubled exponents: beginning of the i-th segment (i = 1..n) is
    # -(d-1)/2 - (n-1)/2 + (i-1) + center
    b0 = -(d - 1) - (n - 1) + c.twice
    segs = [
        Segment(line, HalfExp(b0 + 2 * i), HalfExp(b0 + 2 * i + 2 * (d - 1)))
        for i in range(n)
    ]
    return Multisegment(segs, line=line)


def minus_ends(a: Multisegment) -> Multisegment:
    return Multisegment((t for t in map(minus_end, a) if t is not None), line=a.line)


def minus_begins(a: Multisegment) -> Multisegment:
    return Multisegment((t for t in map(minus_begin, a) if t is not None), line=a.line)


def supp(a: Multisegment) -> Counter:
    out: Counter = Counter()
    for s in a:
        out.update(s.points())
    return out


def beginnings(a: Multisegment) -> Counter:
    return Counter(CuspidalPoint(s.line, s.b) for s in a)


def ends(a: Multisegment) -> Counter:
    return Counter(CuspidalPoint(s.line, s.e) for s in a)


def total_degree(a: Multisegment) -> int:
    """Sum of segment cardinalities, i.e. the size of the cuspidal support."""
    return sum(card(s) for s in a)


def twist_ms(a: Multisegment, z: HalfLike) -> Multisegment:
    z = HalfExp.of(z)
    return Multisegment((twist_segment(s, z) for s in a), line=a.line)


def hermitian_dual(a: Multisegment) -> Multisegment:
    return Multisegment((hermitian_dual_segment(s) for s in a), line=a.line)


# on a centered line of a unitarizable rho both duals act by x -> -x
contragredient = hermitian_dual


# --- Zelevinsky order -------------------------------------------------------


def _raw_linked(s, t) -> bool:
    (b1, e1), (b2, e2) = s, t
    if (b1 - b2) % 2:
        return False
    if max(b1, b2) > min(e1, e2) + 2:
        return False
    inside = (b1 <= b2 and e2 <= e1) or (b2 <= b1 and e1 <= e2)
    return not inside


def _raw_reductions(raw: RawKey) -> set:
    out = set()
    distinct = sorted(set(raw))
    for i, s in enumerate(distinct):
        for t in distinct[i + 1:]:
            if not _raw_linked(s, t):
                continue
            rest = list(raw)
            rest.remove(s)
            rest.remove(t)
            rest.append((min(s[0], t[0]), max(s[1], t[1])))
            lo, hi = max(s[0], t[0]), min(s[1], t[1])
            if lo <= hi:
                rest.append((lo, hi))
            out.add(tuple(sorted(rest)))
    return out


def elementary_reductions(a: Multisegment) -> list[Multisegment]:
    """All c with c < a obtained by one union/intersection move, deduplicated."""
    return [Multisegment.from_raw(r, a.line) for r in sorted(_raw_reductions(a.raw))]


@lru_cache(maxsize=4096)
def _raw_closure(raw: RawKey, max_nodes: int) -> frozenset:
    seen = {raw}
    frontier = [raw]
    while frontier:
        nxt = []
        for node in frontier:
            for child in _raw_reductions(node):
                if child not in seen:
                    seen.add(child)
                    if len(seen) > max_nodes:
                        raise ClosureTooLarge(
                            f"down-closure exceeds {max_nodes} multisegments"
                        )
                    nxt.append(child)
        frontier = nxt
    return frozenset(seen)


def down_closure(a: Multisegment, max_nodes: int = DEFAULT_MAX_NODES) -> list[Multisegment]:
    """Every b with b <= a (a included), in a deterministic order."""
    return [Multisegment.from_raw(r, a.line) for r in sorted(_raw_closure(a.raw, max_nodes))]


def leq(b: Multisegment, a: Multisegment, max_nodes: int = DEFAULT_MAX_NODES) -> bool:
    if b == a:
        return True
    if (b and a and b.line != a.line) or supp(b) != supp(a) or len(b) > len(a):
        return False
    return b.raw in _raw_closure(a.raw, max_nodes)
