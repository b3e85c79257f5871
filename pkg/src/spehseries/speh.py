"""Parameters of the pair nu^{-k/2} Z(a(n,d)) x nu^{k/2} Z(a(n,d)).

The left factor has segments Delta_1 -> ... -> Delta_n and the right one
Gamma_1 -> ... -> Gamma_n.  ``r_multisegment(p, j)`` glues the last j
Delta's to the first j Gamma's by union and intersection; these are the
parameters of the irreducible subquotients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import InvalidIndex, OutOfRange
from .line import HalfExp
from .multisegments import Multisegment, speh
from .segments import DEFAULT_LINE, Segment, precedes, seg_intersection, seg_union


@dataclass(frozen=True)
class SpehPairParams:
    n: int
    d: int
    k: int
    line: str = DEFAULT_LINE
    Delta: tuple = field(init=False, repr=False, compare=False)
    Gamma: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise ValueError("n and d must be positive")
        if self.k < 0:
            raise ValueError("k must be >= 0")
        delta = tuple(
            Segment(self.line, self.Aminus + i, self.Bminus + i) for i in range(self.n)
        )
        gamma = tuple(
            Segment(self.line, self.Aplus + i, self.Bplus + i) for i in range(self.n)
        )
        object.__setattr__(self, "Delta", delta)
        object.__setattr__(self, "Gamma", gamma)

    # doubled: A_- = -(d-1)/2 - (n-1)/2 - k/2, and so on
    @property
    def Aminus(self) -> HalfExp:
        return HalfExp(-(self.d - 1) - (self.n - 1) - self.k)

    @property
    def Bminus(self) -> HalfExp:
        return HalfExp((self.d - 1) - (self.n - 1) - self.k)

    @property
    def Cminus(self) -> HalfExp:
        return HalfExp(-(self.d - 1) + (self.n - 1) - self.k)

    @property
    def Dminus(self) -> HalfExp:
        return HalfExp((self.d - 1) + (self.n - 1) - self.k)

    @property
    def Aplus(self) -> HalfExp:
        return HalfExp(-(self.d - 1) - (self.n - 1) + self.k)

    @property
    def Bplus(self) -> HalfExp:
        return HalfExp((self.d - 1) - (self.n - 1) + self.k)

    @property
    def Cplus(self) -> HalfExp:
        return HalfExp(-(self.d - 1) + (self.n - 1) + self.k)

    @property
    def Dplus(self) -> HalfExp:
        return HalfExp((self.d - 1) + (self.n - 1) + self.k)

    @property
    def a_minus(self) -> Multisegment:
        return speh(self.n, self.d, HalfExp(-self.k), self.line)

    @property
    def a_plus(self) -> Multisegment:
        return speh(self.n, self.d, HalfExp(self.k), self.line)

    @property
    def top(self) -> Multisegment:
        """a_- + a_+, the parameter r_0."""
        return self.a_minus + self.a_plus

    def constants(self) -> dict:
        names = ("Aminus", "Bminus", "Cminus", "Dminus", "Aplus", "Bplus", "Cplus", "Dplus")
        return {name: getattr(self, name) for name in names}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "k": self.k,
            "line": self.line,
            "constants": {k: str(v) for k, v in self.constants().items()},
            "Delta": [s.to_json() for s in self.Delta],
            "Gamma": [s.to_json() for s in self.Gamma],
        }


def make_params(n: int, d: int, k: int, line: str = DEFAULT_LINE) -> SpehPairParams:
    return SpehPairParams(n, d, k, line)


def shared_exponent_count(p: SpehPairParams) -> int:
    """Number of exponents common to the supports of a_- and a_+ (= D_- - A_+ + 1)."""
    if not 1 <= p.k <= p.n + p.d - 1:
        raise OutOfRange(f"k={p.k} outside 1..{p.n + p.d - 1}")
    return (p.Dminus - p.Aplus).twice // 2 + 1


def valid_j_range(p: SpehPairParams) -> Optional[tuple[int, int]]:
    """Indices j >= 1 with Delta_n -> Gamma_j, as (jmin, jmax), or None."""
    n, d, k = p.n, p.d, p.k
    if k <= 0 or k >= n + d:
        return None
    lo, hi = max(n - k + 1, 1), min(n - k + d, n)
    if lo > hi:
        return None
    return lo, hi


def valid_indices(p: SpehPairParams) -> list[int]:
    """0 followed by every j in ``valid_j_range``."""
    rng = valid_j_range(p)
    return [0] + (list(range(rng[0], rng[1] + 1)) if rng else [])


def r_multisegment(p: SpehPairParams, j: int) -> Multisegment:
    n = p.n
    delta, gamma = p.Delta, p.Gamma
    if j == 0:
        return Multisegment(delta + gamma, line=p.line)
    if not 1 <= j <= n or not precedes(delta[n - 1], gamma[j - 1]):
        raise InvalidIndex(f"r_{j}({n},{p.d})_({p.k}) is not defined")
    segs = list(delta[: n - j]) + list(gamma[j:])
    for i in range(j):
        left, right = delta[n - j + i], gamma[i]
        segs.append(seg_union(left, right))
        inter = seg_intersection(left, right)
        if inter is not None:
            segs.append(inter)
    return Multisegment(segs, line=p.line)


def r_family(p: SpehPairParams) -> dict[int, Multisegment]:
    return {j: r_multisegment(p, j) for j in valid_indices(p)}
