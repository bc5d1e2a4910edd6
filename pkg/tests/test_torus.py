import pytest

from knottunnels.bounds import additive_iteration, torus_min_bridge_at_depth
from knottunnels.corridor import TunnelClass, first_regular_index
from knottunnels.errors import NotCoprimeError, TrivialKnotError
from knottunnels.exactnum import Mat2, SimpleSlope
from knottunnels.torus import (
    NormalizedTorus, cabling_trace, letter_word, normalize, s_string, torus_bridge_number,
    torus_classify, torus_classify_from_trace, torus_depth,
)
from knottunnels.verify import coprime_pairs
from oracles import slot_sstring

DEPTHS_41 = [1, 1, 1, 1, 1, 1, 1, 2, 1, 2, 3, 2, 1, 2, 3, 3, 3, 2, 1, 1,
             2, 3, 3, 3, 3, 2, 3, 4, 3, 2, 3, 2, 2, 2, 2, 2, 2, 2, 1]


@pytest.mark.parametrize("raw,expected", [
    ((181, -48), NormalizedTorus(181, 48, True)),
    ((29, 41), NormalizedTorus(41, 29, False)),
    ((-3, -2), NormalizedTorus(3, 2, False)),
    ((-5, 1), NormalizedTorus(5, 1, True)),
])
def test_normalize(raw, expected):
    assert normalize(*raw) == expected


def test_normalize_rejects_links():
    with pytest.raises(NotCoprimeError):
        normalize(6, 4)


@pytest.mark.parametrize("cf,word", [
    ((1, 2, 2, 2, 2), "UULLUUL"),
    ((4, 1, 1, 4), "ULUUU"),
    ((5, 2), "U"),
    ((2, 1, 2, 1, 3), "ULLULL"),
])
def test_letter_word(cf, word):
    assert letter_word(cf) == word


def test_letter_word_trivial():
    with pytest.raises(TrivialKnotError):
        letter_word((5,))


def test_trace_41_29():
    tr = cabling_trace((41, 29))
    assert tr.m0 == SimpleSlope(1, 3)
    assert tr.slopes == [5, 17, 29, 99, 169, 577]
    assert tr.slope_line() == "[ 1/3 ], 5, 17, 29, 99, 169, 577"
    assert [st.stage_knot for st in tr.steps] == [(3, 2), (4, 3), (7, 5), (10, 7), (17, 12), (24, 17), (41, 29)]
    assert tr.steps[0].matrix == Mat2(2, 1, 1, 1)
    assert tr.steps[1].matrix == Mat2(3, 2, 1, 1)
    assert tr.steps[2].matrix == Mat2(3, 2, 4, 3)
    assert tr.steps[-1].matrix == Mat2(17, 12, 24, 17)


def test_trace_181_m48():
    tr = cabling_trace((181, -48))
    assert tr.slope_line() == "[ 6/7 ], -15, -23, -31, -151, -271, -883, -2157, -3431"


def test_trace_simple():
    tr = cabling_trace((7, 2))
    assert tr.m0 == SimpleSlope(1, 7)
    assert tr.slopes == []
    assert len(tr.steps) == 1


def test_trace_trivial():
    with pytest.raises(TrivialKnotError):
        cabling_trace((5, 1))


@pytest.mark.parametrize("pq,bits", [((41, 29), "10101"), ((41, 15), "0110"), ((41, 9), "100")])
def test_s_string(pq, bits):
    assert s_string(pq).bits == bits


def test_s_string_matches_slot_simulation():
    for p, q in coprime_pairs(120):
        tr = cabling_trace((p, q))
        assert tr.s_string.bits == slot_sstring(tr.letters), (p, q)


def test_depth_table():
    assert torus_depth((41, 29)) == 4
    assert [torus_depth((41, n)) for n in range(2, 41)] == DEPTHS_41
    assert torus_depth((3, 2)) == 1
    assert torus_depth((9, 1)) == 0


@pytest.mark.parametrize("pq,expected", [
    ((41, 40), TunnelClass.SEMISIMPLE),
    ((41, 29), TunnelClass.REGULAR),
    ((5, 1), TunnelClass.TRIVIAL),
    ((7, 2), TunnelClass.SIMPLE),
    ((7, -3), TunnelClass.SEMISIMPLE),
])
def test_classify(pq, expected):
    assert torus_classify(*pq) == expected


def test_classify_agrees_with_trace():
    for p, q in coprime_pairs(200):
        assert torus_classify(p, q) == torus_classify_from_trace((p, q)), (p, q)


@pytest.mark.parametrize("pq,expected", [((41, 29), 29), ((3, 2), 2), ((7, 5), 5)])
def test_bridge_number(pq, expected):
    assert torus_bridge_number(pq) == expected


def test_trace_invariants():
    for p, q in coprime_pairs(200):
        tr = cabling_trace((p, q))
        for st in tr.steps:
            assert st.matrix.det == 1
            assert min(st.matrix.a, st.matrix.b, st.matrix.c, st.matrix.d) >= 0
            assert st.slope % 2 == 1
            assert st.stage_knot == st.matrix.row_sum
        assert tr.steps[-1].stage_knot == (p, q)
        assert len(tr.steps) == -1 + sum(tr.cf[1:])


def test_mirror():
    for p, q in coprime_pairs(60):
        a, b = cabling_trace((p, q)), cabling_trace((p, -q))
        assert b.slopes == [-x for x in a.slopes]
        assert b.m0 == -a.m0
        assert b.s_string == a.s_string


def test_additive_exactness():
    for p, q in coprime_pairs(200):
        tr = cabling_trace((p, q))
        s = tr.s_string
        if not s.is_regular:
            continue
        m = first_regular_index(s)
        seeds = tr.steps[m - 2].stage_knot[1], tr.steps[m - 1].stage_knot[1]
        assert additive_iteration(s, *seeds).final == q


def test_pell_family():
    pell = [(3, 2), (7, 5), (17, 12), (41, 29), (99, 70), (239, 169)]
    depths = [torus_depth(pq) for pq in pell]
    assert depths == list(range(1, len(pell) + 1))
    for pq, d in zip(pell, depths):
        assert torus_bridge_number(pq) == torus_min_bridge_at_depth(d)
