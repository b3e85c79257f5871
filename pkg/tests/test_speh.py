import pytest

from spehseries import (
    HalfExp,
    InvalidIndex,
    OutOfRange,
    SpehPairParams,
    hermitian_dual,
    leq,
    make_params,
    ms,
    precedes,
    r_family,
    r_multisegment,
    seg,
    shared_exponent_count,
    speh,
    supp,
    valid_indices,
    valid_j_range,
)

h = HalfExp.parse


def test_small_params():
    p = make_params(1, 1, 1)
    assert p.Delta == (seg("-1/2", "-1/2"),)
    assert p.Gamma == (seg("1/2", "1/2"),)
    q = make_params(2, 1, 1)
    assert q.Delta == (seg(-1, -1), seg(0, 0))
    assert q.Gamma == (seg(0, 0), seg(1, 1))


def test_figure_shape():
    p = make_params(3, 5, 6)
    assert all(len(s) == 5 for s in p.Delta + p.Gamma)
    # Gamma rows start k to the right of the Delta rows
    assert all((g.b - d.b) == HalfExp.of(6) for d, g in zip(p.Delta, p.Gamma))


def test_constant_relations():
    for n in range(1, 5):
        for d in range(1, 5):
            for k in range(0, n + d + 2):
                p = make_params(n, d, k)
                assert p.Bminus - p.Aminus == HalfExp.of(d - 1)
                assert p.Dminus - p.Cminus == HalfExp.of(d - 1)
                assert p.Cminus - p.Aminus == HalfExp.of(n - 1)
                assert p.Aplus - p.Aminus == HalfExp.of(k)
                assert p.a_minus == speh(n, d, HalfExp(-k))
                assert ms(*[(s.b, s.e) for s in p.Delta]) == p.a_minus


def test_shared_exponent_count():
    # supports {-1/2} and {1/2} share nothing: n + d - 1 - k = 0
    assert shared_exponent_count(make_params(1, 1, 1)) == 0
    assert shared_exponent_count(make_params(2, 2, 3)) == 0
    assert shared_exponent_count(make_params(3, 5, 4)) == 3
    with pytest.raises(OutOfRange):
        shared_exponent_count(make_params(2, 2, 4))
    with pytest.raises(OutOfRange):
        shared_exponent_count(make_params(2, 2, 0))


def test_valid_range_examples():
    assert valid_j_range(make_params(1, 1, 1)) == (1, 1)
    assert valid_j_range(make_params(2, 1, 1)) == (2, 2)
    assert valid_j_range(make_params(3, 3, 0)) is None
    assert valid_j_range(make_params(3, 3, 6)) is None


def test_valid_range_matches_precedes():
    for n in range(1, 9):
        for d in range(1, 9):
            for k in range(0, n + d + 2):
                p = make_params(n, d, k)
                arrows = [j for j in range(1, n + 1) if precedes(p.Delta[-1], p.Gamma[j - 1])]
                assert valid_indices(p) == [0] + arrows


def test_r_examples():
    p = make_params(1, 1, 1)
    assert r_multisegment(p, 0) == ms((h("-1/2"), h("-1/2")), (h("1/2"), h("1/2")))
    assert r_multisegment(p, 1) == ms((h("-1/2"), h("1/2")))
    assert r_multisegment(make_params(2, 1, 1), 2) == ms((-1, 0), (0, 1))


def test_r_top_index_is_sum_of_spehs():
    for n in range(1, 6):
        for d in range(2, 6):
            for k in range(1, d):
                p = make_params(n, d, k)
                assert r_multisegment(p, n) == speh(n, d + k) + speh(n, d - k)


def test_invalid_index():
    p = make_params(2, 1, 1)
    with pytest.raises(InvalidIndex):
        r_multisegment(p, 1)
    with pytest.raises(InvalidIndex):
        r_multisegment(p, 3)


def test_family_properties():
    for n in range(1, 4):
        for d in range(1, 4):
            for k in range(1, n + d):
                p = make_params(n, d, k)
                fam = r_family(p)
                assert len(set(fam.values())) == len(fam)
                for m in fam.values():
                    assert supp(m) == supp(p.top)
                    # each factor is its own hermitian dual
                    assert hermitian_dual(m) == m
                    assert leq(m, fam[0])


def test_params_json():
    js = make_params(2, 3, 1).to_json()
    assert js["constants"]["Aminus"] == "-2"
    assert len(js["Delta"]) == 2
    with pytest.raises(ValueError):
        SpehPairParams(0, 1, 1)
