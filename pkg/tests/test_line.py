from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spehseries import CuspidalPoint, HalfExp, half, hermitian_dual_point, twist_point

halves = st.integers(-40, 40).map(HalfExp)


def test_half_examples():
    assert str(half(0)) == "0"
    assert half(-3) == HalfExp.parse("-3/2")
    assert str(half(-3)) == "-3/2"
    assert half(2) + half(2) == HalfExp.of(2)


def test_parse_forms():
    assert HalfExp.parse("3/2").twice == 3
    assert HalfExp.parse("-2").twice == -4
    assert HalfExp.of(Fraction(1, 2)) == half(1)
    with pytest.raises(ValueError):
        HalfExp.parse("1/3")


def test_plus_one_moves_twice_by_two():
    assert (HalfExp(5) + 1).twice == 7


@pytest.mark.parametrize(
    "exp,z,out",
    [("0", "1/2", "1/2"), ("-1", "0", "-1"), ("1/2", "-1/2", "0")],
)
def test_twist_point(exp, z, out):
    p = CuspidalPoint("rho", HalfExp.parse(exp))
    q = twist_point(p, HalfExp.parse(z))
    assert q == CuspidalPoint("rho", HalfExp.parse(out))


@pytest.mark.parametrize("exp,out", [("1/2", "-1/2"), ("0", "0"), ("-2", "2")])
def test_hermitian_dual_point(exp, out):
    p = CuspidalPoint("rho", HalfExp.parse(exp))
    assert hermitian_dual_point(p).exp == HalfExp.parse(out)


@given(halves, halves)
def test_order_matches_rationals(x, y):
    assert (x < y) == (x.to_fraction() < y.to_fraction())
    assert (x + y).to_fraction() == x.to_fraction() + y.to_fraction()
    assert (x - y).to_fraction() == x.to_fraction() - y.to_fraction()


@given(halves)
def test_str_parse_round_trip(x):
    assert HalfExp.parse(str(x)) == x


@given(halves, halves, halves)
def test_twists_compose(x, z1, z2):
    p = CuspidalPoint("rho", x)
    assert twist_point(twist_point(p, z2), z1) == twist_point(p, z1 + z2)
    assert hermitian_dual_point(hermitian_dual_point(p)) == p
