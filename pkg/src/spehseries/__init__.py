"""Multisegment calculus for products of two twisted Speh representations."""

from .composition import (
    CompositionReport,
    ConjectureResult,
    compose,
    compose_langlands,
    compose_zelevinsky,
    conjecture_jh,
    hd_reconstruction,
    lattice_chain,
    render_diagram,
    socle_cosocle,
)
from .errors import (
    AgreementFailure,
    BasisMismatch,
    ClosureTooLarge,
    InternalInconsistency,
    InvalidIndex,
    LineMismatch,
    NonIntegralOrNegativeLength,
    NotALadder,
    NotSpeh,
    OutOfRange,
    SpehSeriesError,
    UnionNotASegment,
)
from .involution import mw_dual, mw_dual_left, mw_dual_left_trace, mw_dual_trace
from .line import CuspidalPoint, HalfExp, half, hermitian_dual_point, twist_point
from .multisegments import (
    Multisegment,
    beginnings,
    down_closure,
    elementary_reductions,
    ends,
    hermitian_dual,
    leq,
    minus_begins,
    minus_ends,
    ms,
    msum,
    speh,
    supp,
    total_degree,
    twist_ms,
)
from .oracle import (
    Oracle,
    OracleResult,
    end_multiset_constraint,
    oracle_composition,
    segment_product,
    short_factor,
    symmetry_constraint,
)
from .ring import (
    RingElement,
    derivative_ladder,
    derivative_ladder_dual,
    derivative_zeta,
    hermitian_conjugate,
    highest_derivative,
    highest_derivative_product,
    is_ladder,
    zeta_mul,
)
from .segments import (
    Segment,
    card,
    hermitian_dual_segment,
    linked,
    make_segment,
    minus_begin,
    minus_end,
    precedes,
    seg,
    seg_intersection,
    seg_union,
    twist_segment,
)
from .speh import (
    SpehPairParams,
    make_params,
    r_family,
    r_multisegment,
    shared_exponent_count,
    valid_indices,
    valid_j_range,
)

__version__ = "0.1.0"
