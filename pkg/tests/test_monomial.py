import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freiman.monomial import (
    GenSet,
    Monomial,
    MonomialParseError,
    all_monomials,
    format_monomial,
    ideal_power,
    is_k_bounded,
    m_index,
    parse_monomial,
    parse_monomial_list,
    power_size,
)

from oracles import kfold_products

exps = st.lists(st.integers(0, 4), min_size=1, max_size=6).map(tuple)


@pytest.mark.parametrize("text,expected", [
    ("x1*x3^2", (1, 0, 2)),
    ("x2^2*x4", (0, 2, 0, 1)),
    ("[0, 2, 1]", (0, 2, 1)),
    ("x3*x1", (1, 0, 1)),
    ("x1^2*x1", (3,)),
])
def test_parse(text, expected):
    assert parse_monomial(text).exps == expected


def test_parse_pads_to_hint():
    assert parse_monomial("x2", 4).exps == (0, 1, 0, 0)
    assert parse_monomial("1", 3).exps == (0, 0, 0)


@pytest.mark.parametrize("bad", ["x0", "y1", "x1^-1", "x1**", "", "x1^", "[1,-2]"])
def test_parse_errors(bad):
    with pytest.raises(MonomialParseError):
        parse_monomial(bad)


def test_parse_list_pads_common_width():
    gens = parse_monomial_list("x1*x3^2,x2^2*x4")
    assert [g.exps for g in gens] == [(1, 0, 2, 0), (0, 2, 0, 1)]
    assert len(parse_monomial_list("[1,0,1],[0,2,0]")) == 2


@given(exps)
def test_format_roundtrip(e):
    u = Monomial(e)
    assert parse_monomial(format_monomial(u), u.n) == u


def test_basic_queries():
    u = parse_monomial("x1*x3^2", 5)
    assert u.deg == 3
    assert u.indices() == (1, 3, 3)
    assert u.support() == (1, 3)
    assert m_index(u) == 3
    assert is_k_bounded(u, 2) and not is_k_bounded(u, 1)
    assert Monomial.from_indices((3, 1, 3), 5) == u


def test_arithmetic():
    u, v = parse_monomial("x1*x2", 3), parse_monomial("x2*x3", 3)
    assert (u * v).exps == (1, 2, 1)
    assert u.divides(u * v)
    assert (u * v) / v == u
    with pytest.raises(ValueError):
        u / v


def test_genset_rejects_mixed_degree():
    with pytest.raises(ValueError):
        GenSet([parse_monomial("x1", 2), parse_monomial("x1*x2", 2)])


def test_genset_dedup_and_order():
    a, b = parse_monomial("x1*x2", 2), parse_monomial("x1^2", 2)
    G = GenSet([a, b, a])
    assert len(G) == 2
    assert list(G) == [b, a]
    assert G == GenSet([b, a])


def test_power_example():
    G = GenSet(parse_monomial_list("x1^2,x1*x2"))
    assert len(ideal_power(G, 2)) == 3
    assert power_size(G, 3) == 4


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 3), st.integers(1, 3), st.data())
def test_power_matches_products(n, d, k, data):
    pool = list(all_monomials(n, d))
    chosen = data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=6, unique=True))
    G = GenSet(chosen)
    expected = kfold_products([u.exps for u in G], k)
    got = ideal_power(G, k)
    assert got.exps_set() == expected
    assert power_size(G, k) == len(expected)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 3), st.data())
def test_square_upper_bound(n, d, data):
    pool = list(all_monomials(n, d))
    chosen = data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=8, unique=True))
    m = len(chosen)
    assert m <= power_size(GenSet(chosen), 2) <= m * (m + 1) // 2
