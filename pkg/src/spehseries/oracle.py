"""Independent small-rank recomputation of the composition series of R(n,d)_(k).

Nothing in here looks at the r_j formulas or at the index ranges of the
closed-form answer.  The ingredients are:

* the candidate bound b <= a_- + a_+ (down-closure in the Zelevinsky order);
* two necessary conditions on a factor b: its multiset of ends is forced
  by its number of segments, and ends and beginnings are exchanged by
  x -> -x;
* the highest derivative: a factor with 2n segments is recovered from its
  image b^- among the factors of R(n, d-1)_(k), twisted by -1/2;
* the one shorter factor, (a_-^t + a_+^t)^t, present when d <= k < n + d;
* the involution, to turn d = 1 into n = 1.
"""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass, field

from .errors import AgreementFailure, OutOfRange
from .involution import mw_dual
from .line import CuspidalPoint, HalfExp
from .multisegments import (
    DEFAULT_MAX_NODES,
    Multisegment,
    beginnings,
    down_closure,
    ends,
    leq,
    minus_ends,
    supp,
    twist_ms,
)
from .segments import Segment, linked, seg_intersection, seg_union
from .speh import SpehPairParams, make_params


@dataclass
class OracleResult:
    n: int
    d: int
    k: int
    factors: frozenset
    certificate: dict = field(default_factory=dict)  # Multisegment -> list of str

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "k": self.k,
            "factors": [
                {"ms": m.to_json(), "certificate": self.certificate.get(m, [])}
                for m in sorted(self.factors)
            ],
        }


def segment_product(s1: Segment, s2: Segment) -> set:
    """Factors of z(s1) x z(s2): one, or two when the segments are linked."""
    is_linked = linked(s1, s2)  # raises LineMismatch first
    out = {Multisegment([s1, s2])}
    if is_linked:
        inter = seg_intersection(s1, s2)
        out.add(Multisegment([seg_union(s1, s2)] + ([inter] if inter else [])))
    return out


def end_multiset_constraint(p: SpehPairParams, cb: int) -> Counter:
    """Ends forced on a factor with ``cb`` segments: all Gamma ends, first cb-n Delta ends."""
    if not p.n <= cb <= 2 * p.n:
        raise OutOfRange(f"cb={cb} outside {p.n}..{2 * p.n}")
    chosen = list(p.Gamma) + list(p.Delta[: cb - p.n])
    return Counter(CuspidalPoint(s.line, s.e) for s in chosen)


def symmetry_constraint(b: Multisegment) -> bool:
    """Ends of b, negated, are exactly the beginnings of b."""
    flipped = Counter(CuspidalPoint(pt.line, -pt.exp) for pt in ends(b).elements())
    return flipped == beginnings(b)


def short_factor(p: SpehPairParams):
    """(a_-^t + a_+^t)^t when d <= k <= n + d - 1, else None."""
    if not p.d <= p.k <= p.n + p.d - 1:
        return None
    return mw_dual(mw_dual(p.a_minus) + mw_dual(p.a_plus))


def passes_filters(p: SpehPairParams, b: Multisegment) -> bool:
    cb = len(b)
    if not p.n <= cb <= 2 * p.n:
        return False
    return ends(b) == end_multiset_constraint(p, cb) and symmetry_constraint(b)


class Oracle:
    """Memoised solver; one instance may be shared between threads."""

    def __init__(self, max_nodes: int = DEFAULT_MAX_NODES):
        self.max_nodes = max_nodes
        self._cache: dict = {}
        self._lock = threading.RLock()

    def __call__(self, n: int, d: int, k: int) -> OracleResult:
        return self.compose(n, d, k)

    def compose(self, n: int, d: int, k: int) -> OracleResult:
        if n < 1 or d < 1 or k < 0:
            raise ValueError("need n, d >= 1 and k >= 0")
        key = (n, d, k)
        with self._lock:
            hit = self._cache.get(key)
        if hit is not None:
            return hit
        result = self._solve(n, d, k)
        with self._lock:
            self._cache.setdefault(key, result)
        return result

    def _solve(self, n: int, d: int, k: int) -> OracleResult:
        p = make_params(n, d, k)
        top = p.top
        if k == 0 or k >= n + d:
            return OracleResult(n, d, k, frozenset([top]), {top: ["irreducible range"]})
        if n == 1 and d == 1:
            factors = segment_product(p.Delta[0], p.Gamma[0])
            return OracleResult(n, d, k, frozenset(factors), {m: ["segment product"] for m in factors})
        if d == 1:
            return self._via_involution(n, k)
        return self._by_derivative(p)

    def _via_involution(self, n: int, k: int) -> OracleResult:
        # (n, 1) is the image of (1, n) under the involution; k >= 1 so the
        # (1, n) problem recurses on its own d and never comes back here
        dual = self.compose(1, n, k)
        factors = {mw_dual(m): m for m in dual.factors}
        cert = {m: [f"involution of ({1},{n},{k}) factor {src}"] for m, src in factors.items()}
        return OracleResult(n, 1, k, frozenset(factors), cert)

    def _by_derivative(self, p: SpehPairParams) -> OracleResult:
        n, d, k = p.n, p.d, p.k
        top = p.top
        below = self.compose(n, d - 1, k)
        lowered = {twist_ms(m, HalfExp(-1)) for m in below.factors}

        candidates = down_closure(top, self.max_nodes)
        target = supp(top)
        kept: dict = {}
        for b in candidates:
            if len(b) != 2 * n or not passes_filters(p, b):
                continue
            assert supp(b) == target
            image = minus_ends(b)
            if image in lowered:
                kept.setdefault(image, []).append(b)

        cert: dict = {}
        for image, bs in kept.items():
            if len(bs) != 1:
                raise AgreementFailure(
                    f"({n},{d},{k}): {len(bs)} candidates share highest derivative {image}"
                )
            cert[bs[0]] = [
                "b <= a_- + a_+",
                "ends forced by cardinality",
                "ends/beginnings symmetric",
                f"highest derivative {image} is a factor of ({n},{d - 1},{k})",
            ]
        if len(kept) != len(lowered):
            missing = lowered - set(kept)
            raise AgreementFailure(
                f"({n},{d},{k}): no lift for highest-derivative factors {sorted(map(str, missing))}"
            )

        extra = short_factor(p)
        if extra is not None:
            if len(extra) >= 2 * n or not leq(extra, top, self.max_nodes) or not passes_filters(p, extra):
                raise AgreementFailure(f"({n},{d},{k}): short factor {extra} fails the filters")
            cert[extra] = [
                "(a_-^t + a_+^t)^t by the involution",
                "b <= a_- + a_+",
                "ends forced by cardinality",
                "ends/beginnings symmetric",
            ]
        return OracleResult(n, d, k, frozenset(cert), cert)


_default = Oracle()


def oracle_composition(n: int, d: int, k: int, max_nodes: int = DEFAULT_MAX_NODES) -> OracleResult:
    if max_nodes == DEFAULT_MAX_NODES:
        return _default.compose(n, d, k)
    return Oracle(max_nodes).compose(n, d, k)
