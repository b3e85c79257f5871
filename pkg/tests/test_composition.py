import pytest

from spehseries import (
    CompositionReport,
    HalfExp,
    InternalInconsistency,
    NotSpeh,
    OutOfRange,
    compose,
    compose_langlands,
    compose_zelevinsky,
    conjecture_jh,
    hermitian_dual,
    lattice_chain,
    make_params,
    ms,
    mw_dual,
    render_diagram,
    segment_product,
    socle_cosocle,
    speh,
    supp,
)
from spehseries.composition import is_reducible

h = HalfExp.parse


def test_segment_product_case():
    rep = compose_zelevinsky(1, 1, 1)
    assert rep.indices == [1, 0]
    assert rep.socle == ms((h("-1/2"), h("1/2")))
    assert rep.cosocle == rep.factor(0)


def test_length_examples():
    assert compose_zelevinsky(3, 2, 4).length == 2
    rep = compose_zelevinsky(2, 1, 1)
    assert rep.indices == [2, 0] and rep.length == 2


def test_minus_swaps_extremes():
    for n, d, k in [(1, 1, 1), (2, 2, 2), (3, 2, 1), (2, 3, 4)]:
        plus, minus = compose_zelevinsky(n, d, k, "+"), compose_zelevinsky(n, d, k, "-")
        assert plus.factor_set == minus.factor_set
        assert (plus.socle, plus.cosocle) == (minus.cosocle, minus.socle)


def test_langlands_examples():
    rep = compose_langlands(1, 1, 1)
    assert rep.socle == rep.factor(0) and rep.cosocle == rep.factor(1)
    single = compose_langlands(2, 2, 4)
    assert single.length == 1 and single.indices == [0]


def test_langlands_is_involuted_transpose():
    for n in range(1, 5):
        for d in range(1, 5):
            for k in range(0, n + d + 2):
                lang = compose_langlands(n, d, k)
                zt = {mw_dual(m) for m in compose_zelevinsky(d, n, k).factor_set}
                assert lang.factor_set == zt


def test_socle_cosocle_examples():
    p = make_params(1, 1, 1)
    assert socle_cosocle(1, 1, 1, "-")[0] == p.top
    cos = socle_cosocle(2, 1, 1, "-")[1]
    assert cos == mw_dual(speh(1, 2, h("-1/2")) + speh(1, 2, h("1/2")))
    with pytest.raises(OutOfRange):
        socle_cosocle(2, 2, 0)


def test_lattice_examples():
    chain = [s for s, _ in lattice_chain(1, 1, 1)]
    assert chain == [[1], [0, 1]]
    assert [s for s, _ in lattice_chain(2, 1, 1)] == [[2], [0, 2]]
    assert [s for s, _ in lattice_chain(2, 2, 2)] == [[2], [1, 2], [0, 1, 2]]
    with pytest.raises(OutOfRange):
        lattice_chain(2, 2, 4)


def test_chain_is_nested_and_ends_full():
    for n in range(1, 5):
        for d in range(1, 5):
            for k in range(1, n + d):
                for sign in "+-":
                    for basis in "ZL":
                        chain = [set(s) for s, _ in lattice_chain(n, d, k, sign, basis)]
                        assert all(a < b for a, b in zip(chain, chain[1:]))
                        rep = compose(n, d, k, sign, basis)
                        assert chain[-1] == set(rep.indices)
                        soc = rep.factor(min(chain[0]))
                        assert len(chain[0]) == 1 and soc == rep.socle


def test_factor_invariants():
    for n in range(1, 5):
        for d in range(1, 5):
            for k in range(0, n + d + 2):
                rep = compose_zelevinsky(n, d, k)
                assert len(rep.factor_set) == rep.length
                assert rep.socle in rep.factor_set and rep.cosocle in rep.factor_set
                p = rep.params
                assert all(supp(m) == supp(p.top) for m in rep.factor_set)
                # stable under x -> -x
                assert {hermitian_dual(m) for m in rep.factor_set} == rep.factor_set
                assert is_reducible(n, d, k) == (rep.length > 1)


def test_report_json_round_trip():
    for args in [(1, 1, 1, "+", "Z"), (3, 2, 2, "-", "L"), (2, 2, 0, "+", "Z")]:
        rep = compose(*args)
        assert CompositionReport.from_json(rep.to_json()) == rep
    js = compose(1, 1, 1).to_json()
    assert js["basis"] == "Z" and js["length"] == 2 and js["factors"][0]["j"] == 1


def test_conjecture_matches_theorem_cases():
    for n in range(1, 4):
        for d in range(1, 4):
            for k in range(0, n + d + 1):
                p = make_params(n, d, k)
                res = conjecture_jh(p.a_minus, p.a_plus)
                assert res.conjectural
                assert res.factor_set == compose_langlands(n, d, k).factor_set


def test_conjecture_unequal_pair():
    # single-segment inputs: the two-segment rule gives the answer directly
    for right in (speh(1, 1, h("1/2")), speh(1, 1, 1), speh(1, 1, 0), speh(1, 3, 1)):
        left = speh(1, 2, h("-1/2"))
        res = conjecture_jh(left, right)
        assert res.factor_set == segment_product(left.segments[0], right.segments[0])
    # [1/2,1/2] is on the other coset, so nothing links
    other = conjecture_jh(speh(1, 2, h("-1/2")), speh(1, 1, h("1/2")))
    assert other.factor_set == {ms((-1, 0), (h("1/2"), h("1/2")))}
    res = conjecture_jh(speh(1, 2, h("-1/2")), speh(1, 1, 1))
    assert res.factor_set == {ms((-1, 0), (1, 1)), ms((-1, 1))}


def test_conjecture_side_condition_toggle():
    p = make_params(2, 2, 2)
    verbatim = conjecture_jh(p.a_minus, p.a_plus, side_condition="verbatim")
    assert verbatim.factor_set < compose_langlands(2, 2, 2).factor_set
    with pytest.raises(ValueError):
        conjecture_jh(p.a_minus, p.a_plus, side_condition="maybe")


def test_conjecture_rejects_non_speh():
    with pytest.raises(NotSpeh):
        conjecture_jh(ms((0, 3), (1, 2)), speh(2, 2))
    with pytest.raises(NotSpeh):
        conjecture_jh(ms((0, 1), (2, 3)), speh(2, 2))


def test_render_speh():
    assert render_diagram(speh(2, 2, 0)) == "-1  0  1\n *  *\n    *  *"
    assert render_diagram(ms()) == ""


def test_render_pair_staircase():
    pic = render_diagram(make_params(3, 5, 6)).splitlines()
    # header plus n + 1 rows: Gamma_i shares the row of Delta_{i+1}
    assert len(pic) == 5
    assert pic[1].count("*") == 5 and "o" not in pic[1]
    assert pic[2].count("*") == 5 and pic[2].count("o") == 5
    assert pic[4].count("o") == 5 and "*" not in pic[4]


def test_render_overlapping_pair():
    pic = render_diagram(make_params(2, 2, 1)).splitlines()
    assert len(pic) == 5
