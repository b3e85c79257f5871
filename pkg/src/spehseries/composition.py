"""Composition series and submodule chains of the Speh pair.

For the Zelevinsky side the object is

    R(n, d)_(k) = nu^{-k/2} Z(a(n,d)) x nu^{k/2} Z(a(n,d)),

and for the Langlands side it is the same product with L in place of Z.
Both are multiplicity free with factor parameters r_j(n, d)_(k); the
Langlands answer is recomputed through the involution and compared with
the direct formula on every call.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import InternalInconsistency, NotSpeh, OutOfRange
from .involution import mw_dual
from .line import HalfExp
from .multisegments import Multisegment, minus_ends, speh, twist_ms
from .segments import Segment, card, precedes, seg_intersection, seg_union
from .speh import SpehPairParams, make_params, r_family, valid_indices

PLUS = "+"
MINUS = "-"
ZELEVINSKY = "Z"
LANGLANDS = "L"


def _norm_sign(sign: str) -> str:
    if sign in ("+", "plus"):
        return PLUS
    if sign in ("-", "minus"):
        return MINUS
    raise ValueError(f"sign must be + or -, got {sign!r}")


def is_reducible(n: int, d: int, k: int) -> bool:
    return 1 <= k <= n + d - 1


@dataclass
class CompositionReport:
    params: SpehPairParams
    basis: str
    sign: str
    factors: list  # (j, Multisegment), socle first
    socle: Multisegment
    cosocle: Multisegment
    lattice: list = field(default_factory=list)  # list of index lists

    @property
    def length(self) -> int:
        return len(self.factors)

    @property
    def factor_set(self) -> set:
        return {m for _, m in self.factors}

    @property
    def indices(self) -> list[int]:
        return [j for j, _ in self.factors]

    def factor(self, j: int) -> Multisegment:
        return dict(self.factors)[j]

    def to_json(self) -> dict:
        p = self.params
        return {
            "n": p.n,
            "d": p.d,
            "k": p.k,
            "sign": self.sign,
            "basis": self.basis,
            "length": self.length,
            "factors": [{"j": j, "ms": m.to_json()} for j, m in self.factors],
            "socle": self.socle.to_json(),
            "cosocle": self.cosocle.to_json(),
            "lattice": [list(s) for s in self.lattice],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CompositionReport":
        factors = [(f["j"], Multisegment.from_json(f["ms"])) for f in obj["factors"]]
        line = factors[0][1].line if factors else "rho"
        return cls(
            params=make_params(obj["n"], obj["d"], obj["k"], line),
            basis=obj["basis"],
            sign=obj["sign"],
            factors=factors,
            socle=Multisegment.from_json(obj["socle"]),
            cosocle=Multisegment.from_json(obj["cosocle"]),
            lattice=[list(s) for s in obj["lattice"]],
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, CompositionReport):
            return NotImplemented
        return self.to_json() == other.to_json()


# --- submodule chains ---------------------------------------------------------


def _plus_chain_indices(n: int, d: int, k: int) -> list[list[int]]:
    ell = min(n, n + d - k)
    if n <= k:
        return [list(range(i, ell + 1)) for i in range(ell, -1, -1)]
    chain = [list(range(i, ell + 1)) for i in range(ell, n - k, -1)]
    chain.append([0] + chain[-1])
    return chain


def _chain_indices(n: int, d: int, k: int, sign: str) -> list[list[int]]:
    if not is_reducible(n, d, k):
        return [[0]]
    plus = _plus_chain_indices(n, d, k)
    if sign == PLUS:
        return plus
    # the hermitian dual swaps submodules and quotients; every r_j is self-dual
    full = plus[-1]
    chain = [sorted(set(full) - set(s)) for s in reversed(plus[:-1])]
    chain.append(full)
    return chain


def _langlands_chain(n: int, d: int, k: int, sign: str) -> list[list[int]]:
    family = r_family(make_params(n, d, k))
    lookup = {m: j for j, m in family.items()}
    dual_family = r_family(make_params(d, n, k))
    out = []
    for step in _chain_indices(d, n, k, sign):
        try:
            out.append(sorted(lookup[mw_dual(dual_family[i])] for i in step))
        except KeyError as exc:
            raise InternalInconsistency(
                f"involution image of the ({d},{n},{k}) family leaves the ({n},{d},{k}) family"
            ) from exc
    return out


def lattice_chain(
    n: int, d: int, k: int, sign: str = PLUS, basis: str = ZELEVINSKY
) -> list[tuple[list[int], list[Multisegment]]]:
    """The chain of non-zero submodules, each given by its set of factor indices.

    ``sign`` picks nu^{-+k/2} on the left factor.  The chain is the whole
    submodule lattice: it is totally ordered.
    """
    sign = _norm_sign(sign)
    if not is_reducible(n, d, k):
        raise OutOfRange(f"(n,d,k)=({n},{d},{k}) is irreducible; no chain to report")
    family = r_family(make_params(n, d, k))
    if basis == ZELEVINSKY:
        idx = _chain_indices(n, d, k, sign)
    elif basis == LANGLANDS:
        idx = _langlands_chain(n, d, k, sign)
    else:
        raise ValueError(f"unknown basis {basis!r}")
    return [(s, [family[j] for j in s]) for s in idx]


def _order_socle_first(chain: list[list[int]]) -> list[int]:
    order: list[int] = []
    for s in chain:
        order.extend(j for j in s if j not in order)
    return order


# --- composition series ------------------------------------------------------


def compose_zelevinsky(n: int, d: int, k: int, sign: str = PLUS) -> CompositionReport:
    """Factors Z(r_j) of R(n,d)_(+-k), listed from the socle upwards."""
    sign = _norm_sign(sign)
    if k < 0:
        raise ValueError("k must be >= 0; use sign for -k")
    p = make_params(n, d, k)
    family = r_family(p)
    chain = _chain_indices(n, d, k, sign)
    order = _order_socle_first(chain)
    assert sorted(order) == sorted(family), (order, family)
    factors = [(j, family[j]) for j in order]
    top_index = max(family)
    quotient, sub = family[0], family[top_index]
    if sign == MINUS:
        quotient, sub = sub, quotient
    return CompositionReport(p, ZELEVINSKY, sign, factors, socle=sub, cosocle=quotient, lattice=chain)


def compose_langlands(n: int, d: int, k: int, sign: str = PLUS) -> CompositionReport:
    """Factors L(r_j(n,d)_(k)) of the Langlands-side product.

    Computed twice: through the involution applied to the (d, n) Zelevinsky
    answer, and directly from the r_j formula.  A mismatch raises
    InternalInconsistency.
    """
    sign = _norm_sign(sign)
    p = make_params(n, d, k)
    family = r_family(p)
    zrep = compose_zelevinsky(d, n, k, sign)
    via_dual = [mw_dual(m) for _, m in zrep.factors]
    if len(set(via_dual)) != len(via_dual) or set(via_dual) != set(family.values()):
        raise InternalInconsistency(
            f"({n},{d},{k}): involuted factors {sorted(map(str, via_dual))} "
            f"differ from r_j family {sorted(map(str, family.values()))}"
        )
    socle, cosocle = mw_dual(zrep.socle), mw_dual(zrep.cosocle)
    top_index = max(family)
    expect_sub, expect_quo = family[0], family[top_index]
    if sign == MINUS:
        expect_sub, expect_quo = expect_quo, expect_sub
    if (socle, cosocle) != (expect_sub, expect_quo):
        raise InternalInconsistency(f"({n},{d},{k},{sign}): socle/cosocle disagree with the direct formula")
    lookup = {m: j for j, m in family.items()}
    factors = [(lookup[m], m) for m in via_dual]
    chain = _langlands_chain(n, d, k, sign) if is_reducible(n, d, k) else [[0]]
    return CompositionReport(p, LANGLANDS, sign, factors, socle=socle, cosocle=cosocle, lattice=chain)


def compose(n: int, d: int, k: int, sign: str = PLUS, basis: str = ZELEVINSKY) -> CompositionReport:
    if basis.upper() == ZELEVINSKY:
        return compose_zelevinsky(n, d, k, sign)
    if basis.upper() == LANGLANDS:
        return compose_langlands(n, d, k, sign)
    raise ValueError(f"unknown basis {basis!r}")


def socle_cosocle(n: int, d: int, k: int, sign: str = PLUS) -> tuple[Multisegment, Multisegment]:
    """Zelevinsky parameters of the unique irreducible sub and quotient.

    Built only from concatenation and the involution, independently of r_j:
    for sign ``-`` the sub is a_- + a_+ and the quotient is
    (a(d,n)_- + a(d,n)_+)^t; sign ``+`` swaps them.
    """
    sign = _norm_sign(sign)
    if not is_reducible(n, d, k):
        raise OutOfRange(f"k={k} outside 1..{n + d - 1}")
    concat = speh(n, d, HalfExp(-k)) + speh(n, d, HalfExp(k))
    involuted = mw_dual(speh(d, n, HalfExp(-k)) + speh(d, n, HalfExp(k)))
    if sign == MINUS:
        return concat, involuted
    return involuted, concat


def hd_reconstruction(n: int, d: int, k: int) -> tuple[set, set]:
    """Compare the full-cardinality factors of (n,d,k) with those of (n,d-1,k).

    Returns (minus_ends of the 2n-segment factors of (n,d,k), factors of
    (n,d-1,k) twisted by -1/2).  They must be equal, and the first map must
    be injective (checked by the caller through set sizes).
    """
    if d < 2:
        raise OutOfRange("needs d >= 2")
    here = [m for _, m in compose_zelevinsky(n, d, k).factors if len(m) == 2 * n]
    mapped = [minus_ends(m) for m in here]
    if len(set(mapped)) != len(mapped):
        raise InternalInconsistency(f"({n},{d},{k}): highest derivative map not injective")
    below = {twist_ms(m, HalfExp(-1)) for _, m in compose_zelevinsky(n, d - 1, k).factors}
    return set(mapped), below


# --- conjectural products of two essentially Speh representations ----------


@dataclass
class ConjectureResult:
    factors: list  # (j, Multisegment)
    side_condition: str
    conjectural: bool = True

    @property
    def factor_set(self) -> set:
        return {m for _, m in self.factors}

    def to_json(self) -> dict:
        return {
            "conjectural": self.conjectural,
            "side_condition": self.side_condition,
            "factors": [{"j": j, "ms": m.to_json()} for j, m in self.factors],
        }


def speh_chain(a: Multisegment) -> list[Segment]:
    """Segments of an essentially Speh multisegment in the order D1 -> ... -> Dn."""
    if not a:
        raise NotSpeh("empty multisegment")
    chain = list(a.segments)
    lengths = {card(s) for s in chain}
    if len(lengths) != 1:
        raise NotSpeh(f"{a}: segments of unequal length")
    for s, t in zip(chain, chain[1:]):
        if (t.b - s.b).twice != 2:
            raise NotSpeh(f"{a}: beginnings do not step by one")
    return chain


def conjecture_jh(pi1: Multisegment, pi2: Multisegment, side_condition: str = "none") -> ConjectureResult:
    """Expected Langlands factors of L(pi1) x L(pi2) for two essentially Speh inputs.

    NOT a theorem outside the twisted-pair case.  ``side_condition``
    "verbatim" additionally demands 1 <= n - j - 1; "none" drops it.
    """
    if side_condition not in ("none", "verbatim"):
        raise ValueError("side_condition must be 'none' or 'verbatim'")
    left, right = speh_chain(pi1), speh_chain(pi2)
    if left[0].line != right[0].line:
        raise NotSpeh("inputs live on different lines")
    if right[0].b < left[0].b:
        left, right = right, left
    n, m = len(left), len(right)
    factors = [(0, Multisegment(left + right, line=left[0].line))]
    for j in range(1, min(n, m) + 1):
        if not precedes(left[-1], right[j - 1]):
            continue
        if side_condition == "verbatim" and not 1 <= n - j - 1:
            continue
        segs = left[: n - j] + right[j:]
        for i in range(j):
            segs.append(seg_union(left[n - j + i], right[i]))
            inter = seg_intersection(left[n - j + i], right[i])
            if inter is not None:
                segs.append(inter)
        factors.append((j, Multisegment(segs, line=left[0].line)))
    return ConjectureResult(factors, side_condition)


# --- ASCII pictures -------------------------------------------------------


def _grid(rows: list[list[tuple[Segment, str]]]) -> str:
    cells = [s for row in rows for s, _ in row]
    if not cells:
        return ""
    lo = min(s.b.twice for s in cells)
    hi = max(s.e.twice for s in cells)
    step = 2 if all((s.b.twice - lo) % 2 == 0 for s in cells) else 1
    cols = list(range(lo, hi + 1, step))
    labels = [str(HalfExp(c)) for c in cols]
    w = max(len(x) for x in labels)
    lines = [" ".join(x.rjust(w) for x in labels).rstrip()]
    for row in rows:
        marks = [" "] * len(cols)
        for s, mark in row:
            for t in range(s.b.twice, s.e.twice + 1, 2):
                marks[cols.index(t)] = mark
        lines.append(" ".join(c.rjust(w) for c in marks).rstrip())
    return "\n".join(lines)


def render_diagram(obj: Union[Multisegment, SpehPairParams]) -> str:
    """Draw segments as rows of marks under a header of exponents.

    A multisegment gets one row per segment ('*').  A Speh pair draws the
    Delta's with '*' and the Gamma's with 'o'; when Delta_{i+1} and Gamma_i
    are disjoint they share a row, giving the staircase picture.
    """
    if isinstance(obj, SpehPairParams):
        delta, gamma = obj.Delta, obj.Gamma
        if obj.Bminus.twice + 2 < obj.Aplus.twice:
            rows = [[(delta[0], "*")]]
            for i in range(1, obj.n):
                rows.append([(delta[i], "*"), (gamma[i - 1], "o")])
            rows.append([(gamma[-1], "o")])
        else:
            rows = [[(s, "*")] for s in delta] + [[(s, "o")] for s in gamma]
        return _grid(rows)
    return _grid([[(s, "*")] for s in obj.segments])
