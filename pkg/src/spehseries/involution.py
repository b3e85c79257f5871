"""The Zelevinsky involution a -> a^t via the Moeglin-Waldspurger algorithm.

``mw_dual`` runs the right-to-left algorithm: repeatedly peel one segment
off the largest ends of ``a``.  ``mw_dual_left`` is the same algorithm
conjugated by the exponent flip x -> -x; the two must agree and the test
suite checks that they do.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .multisegments import Multisegment, hermitian_dual
from .segments import Segment, card, linked, minus_end


@dataclass
class MWStep:
    """One pass of the algorithm: the chosen chain and the segment it emits."""

    chain: list[Segment]
    emitted: Segment
    remainder: Multisegment

    def to_json(self) -> dict:
        return {
            "chain": [s.to_json() for s in self.chain],
            "gamma": self.emitted.to_json(),
            "remainder": self.remainder.to_json(),
        }


@dataclass
class MWTrace:
    result: Multisegment
    steps: list[MWStep] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"result": self.result.to_json(), "steps": [s.to_json() for s in self.steps]}


def _pick_shortest(candidates: list[Segment]) -> Segment:
    # equal end and equal cardinality means equal segment, so any minimiser works
    return min(candidates, key=card)


def _one_pass(pool: list[Segment]) -> tuple[list[Segment], Segment]:
    x = max(s.e for s in pool)
    first = _pick_shortest([s for s in pool if s.e == x])
    chain = [first]
    y = x - 1
    while True:
        prev = chain[-1]
        options = [s for s in pool if s.e == y and linked(s, prev)]
        if not options:
            break
        chain.append(_pick_shortest(options))
        y = y - 1
    emitted = Segment(first.line, chain[-1].e, x)
    return chain, emitted


def mw_dual_trace(a: Multisegment) -> MWTrace:
    """Run the algorithm on ``a`` and keep every intermediate state."""
    pool = list(a.segments)
    emitted: list[Segment] = []
    steps: list[MWStep] = []
    while pool:
        chain, gamma = _one_pass(pool)
        for s in chain:
            pool.remove(s)
            shorter = minus_end(s)
            if shorter is not None:
                pool.append(shorter)
        emitted.append(gamma)
        steps.append(MWStep(chain, gamma, Multisegment(pool, line=a.line)))
    return MWTrace(Multisegment(emitted, line=a.line), steps)


def mw_dual(a: Multisegment) -> Multisegment:
    """Compute a^t."""
    return mw_dual_trace(a).result


def mw_dual_left(a: Multisegment) -> Multisegment:
    """Left-hand version: flip exponents, run ``mw_dual``, flip back."""
    return hermitian_dual(mw_dual(hermitian_dual(a)))


def mw_dual_left_trace(a: Multisegment) -> MWTrace:
    inner = mw_dual_trace(hermitian_dual(a))
    steps = [
        MWStep(
            [Segment(s.line, -s.e, -s.b) for s in st.chain],
            Segment(st.emitted.line, -st.emitted.e, -st.emitted.b),
            hermitian_dual(st.remainder),
        )
        for st in inner.steps
    ]
    return MWTrace(hermitian_dual(inner.result), steps)
