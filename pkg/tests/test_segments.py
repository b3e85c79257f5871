import pytest
from hypothesis import assume, given

from spehseries import (
    HalfExp,
    LineMismatch,
    NonIntegralOrNegativeLength,
    Segment,
    UnionNotASegment,
    card,
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

from conftest import segments

h = HalfExp.parse


def test_make_segment():
    assert card(make_segment("rho", h("-1/2"), h("1/2"))) == 2
    assert card(make_segment("rho", 0, 0)) == 1
    with pytest.raises(NonIntegralOrNegativeLength):
        make_segment("rho", 0, h("1/2"))
    with pytest.raises(NonIntegralOrNegativeLength):
        make_segment("rho", 1, 0)


def test_card():
    assert card(seg(0, 0)) == 1
    assert card(seg("-1/2", "1/2")) == 2
    assert card(seg(-2, 2)) == 5


def test_linked_and_precedes():
    assert linked(seg(0, 1), seg(1, 2))
    assert not linked(seg(0, 1), seg(0, 1))
    assert not linked(seg(0, 0), seg(2, 2))
    assert precedes(seg(0, 1), seg(1, 2))
    assert not precedes(seg(1, 2), seg(0, 1))
    assert precedes(seg(0, 0), seg(1, 1))
    # different cosets of Z never link
    assert not linked(seg(0, 1), seg("1/2", "3/2"))


def test_other_line_is_an_error():
    with pytest.raises(LineMismatch):
        linked(seg(0, 1), seg(1, 2, line="sigma"))
    with pytest.raises(LineMismatch):
        seg_union(seg(0, 1), seg(1, 2, line="sigma"))


def test_union_and_intersection():
    assert seg_union(seg(0, 2), seg(1, 3)) == seg(0, 3)
    assert seg_intersection(seg(0, 2), seg(1, 3)) == seg(1, 2)
    assert seg_union(seg(0, 0), seg(1, 1)) == seg(0, 1)
    assert seg_intersection(seg(0, 0), seg(1, 1)) is None
    with pytest.raises(UnionNotASegment):
        seg_union(seg(0, 0), seg(2, 2))


def test_shortening():
    assert minus_end(seg(0, 2)) == seg(0, 1)
    assert minus_begin(seg(0, 2)) == seg(1, 2)
    assert minus_end(seg(0, 0)) is None
    assert minus_end(seg("-1/2", "1/2")) == seg("-1/2", "-1/2")


def test_twist():
    assert twist_segment(seg("-1/2", "1/2"), h("1/2")) == seg(0, 1)
    assert twist_segment(seg(0, 1), 0) == seg(0, 1)
    assert twist_segment(seg(0, 0), -2) == seg(-2, -2)


def test_json_round_trip():
    s = seg("-3/2", "5/2", line="pi")
    assert Segment.from_json(s.to_json()) == s
    assert s.to_json() == {"line": "pi", "b": "-3/2", "e": "5/2"}


@given(segments(), segments())
def test_linked_symmetric_and_one_direction(s, t):
    assert linked(s, t) == linked(t, s)
    if linked(s, t):
        assert precedes(s, t) != precedes(t, s)
    else:
        assert not precedes(s, t) and not precedes(t, s)


@given(segments(), segments())
def test_union_intersection_cardinality(s, t):
    try:
        u = seg_union(s, t)
    except UnionNotASegment:
        return
    i = seg_intersection(s, t)
    assert card(u) + (card(i) if i else 0) == card(s) + card(t)


@given(segments())
def test_shortenings_commute(s):
    if card(s) >= 3:
        assert minus_begin(minus_end(s)) == minus_end(minus_begin(s))
    else:
        a, b = minus_end(s), minus_begin(s)
        left = minus_begin(a) if a else None
        right = minus_end(b) if b else None
        assert left is None and right is None
