"""Formal elements of the Grothendieck ring R and derivative operators.

A :class:`RingElement` is a finite Z-linear combination of multisegments,
tagged with the basis it is written in: ``"Z"`` for the irreducibles
Z(a), ``"zeta"`` for the standard products zeta(a).  Change of basis
between the two needs Kazhdan-Lusztig data and is deliberately absent.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import BasisMismatch, NotALadder
from .multisegments import Multisegment, hermitian_dual, minus_ends, msum
from .segments import minus_begin, minus_end

Z_BASIS = "Z"
ZETA_BASIS = "zeta"
_BASES = (Z_BASIS, ZETA_BASIS)


class RingElement:
    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping[Multisegment, int] | Iterable = ()):
        if basis not in _BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        acc: dict[Multisegment, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coef in items:
            acc[key] = acc.get(key, 0) + int(coef)
        self.terms = {k: c for k, c in acc.items() if c}
        lines = {k.line for k in self.terms if k}
        if len(lines) > 1:
            raise ValueError(f"ring element mixes lines {sorted(lines)}")

    @classmethod
    def Z(cls, a: Multisegment, coef: int = 1) -> "RingElement":
        return cls(Z_BASIS, {a: coef})

    @classmethod
    def zeta(cls, a: Multisegment, coef: int = 1) -> "RingElement":
        return cls(ZETA_BASIS, {a: coef})

    @classmethod
    def zero(cls, basis: str = Z_BASIS) -> "RingElement":
        return cls(basis)

    def _check(self, other: "RingElement") -> None:
        if self.basis != other.basis:
            raise BasisMismatch(f"{self.basis} vs {other.basis}")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.basis, list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-1) * other

    def __neg__(self) -> "RingElement":
        return (-1) * self

    def __rmul__(self, scalar: int) -> "RingElement":
        if not isinstance(scalar, int):
            return NotImplemented
        return RingElement(self.basis, {k: scalar * c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return zeta_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def is_positive(self) -> bool:
        """True iff every coefficient is >= 0."""
        return all(c >= 0 for c in self.terms.values())

    def coefficient(self, a: Multisegment) -> int:
        return self.terms.get(a, 0)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        sym = "Z" if self.basis == Z_BASIS else "zeta"
        parts = [f"{c}*{sym}{a}" if c != 1 else f"{sym}{a}" for a, c in self]
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"coef": c, "ms": a.to_json()} for a, c in self],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "RingElement":
        return cls(
            obj["basis"],
            [(Multisegment.from_json(t["ms"]), t["coef"]) for t in obj["terms"]],
        )


def zeta_mul(e1: RingElement, e2: RingElement) -> RingElement:
    """Product in the zeta basis, where zeta(a) * zeta(b) = zeta(a + b)."""
    if e1.basis != ZETA_BASIS or e2.basis != ZETA_BASIS:
        raise BasisMismatch("zeta_mul needs both factors in the zeta basis")
    out: list = []
    for (a, c), (b, d) in product(e1.terms.items(), e2.terms.items()):
        out.append((msum(a, b), c * d))
    return RingElement(ZETA_BASIS, out)


def is_ladder(a: Multisegment) -> bool:
    """No segment of ``a`` is contained in another one (repeats included)."""
    segs = a.segments
    for i, s in enumerate(segs):
        for t in segs[i + 1:]:
            if s in t or t in s:
                return False
    return True


def _unit_step_chain(a: Multisegment, by_end: bool) -> list:
    if not is_ladder(a):
        raise NotALadder(f"{a} is not a ladder")
    chain = sorted(a.segments, key=lambda s: s.b)
    for s, t in zip(chain, chain[1:]):
        step = (t.e - s.e) if by_end else (t.b - s.b)
        if step.twice != 2:
            # the prefix formula below is only valid for unit-step ladders
            raise NotALadder(f"{a}: consecutive {'ends' if by_end else 'beginnings'} must step by one")
    return chain


def derivative_ladder(a: Multisegment) -> RingElement:
    """D(Z(a)) for a unit-step ladder a = (D1 -> ... -> Dn).

    The i-th term (i = 0..n) removes the end of the first i segments.
    """
    chain = _unit_step_chain(a, by_end=True)
    terms = []
    for i in range(len(chain) + 1):
        shortened = [minus_end(s) for s in chain[:i]]
        segs = [s for s in shortened if s is not None] + chain[i:]
        terms.append((Multisegment(segs, line=a.line), 1))
    return RingElement(Z_BASIS, terms)


def derivative_ladder_dual(a: Multisegment) -> RingElement:
    """The mirrored derivative: drop beginnings of the last i segments."""
    chain = _unit_step_chain(a, by_end=False)
    n = len(chain)
    terms = []
    for i in range(n + 1):
        shortened = [minus_begin(s) for s in chain[n - i:]]
        segs = chain[: n - i] + [s for s in shortened if s is not None]
        terms.append((Multisegment(segs, line=a.line), 1))
    return RingElement(Z_BASIS, terms)


def highest_derivative(a: Multisegment) -> Multisegment:
    """h.d.(Z(a)) = Z(a^-)."""
    return minus_ends(a)


def highest_derivative_product(factors: Sequence[Multisegment]) -> list[Multisegment]:
    """h.d. of Z(a1) x ... x Z(ak), left as the list of factors Z(ai^-)."""
    return [minus_ends(a) for a in factors]


def derivative_zeta(e: RingElement) -> RingElement:
    """D on a zeta-basis element, using D(z(S)) = z(S) + z(S^-)."""
    if e.basis != ZETA_BASIS:
        raise BasisMismatch("derivative_zeta works in the zeta basis only")
    out: list = []
    for a, c in e.terms.items():
        choices = [(s, minus_end(s)) for s in a]
        for pick in product(*choices):
            segs = [s for s in pick if s is not None]
            out.append((Multisegment(segs, line=a.line), c))
    return RingElement(ZETA_BASIS, out)


def hermitian_conjugate(e: RingElement) -> RingElement:
    return RingElement(e.basis, [(hermitian_dual(a), c) for a, c in e.terms.items()])
