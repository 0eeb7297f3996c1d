from itertools import product

import pytest

from freiman.borel import (
    BorelSpec,
    borel_closure,
    borel_leq,
    closure,
    degree2_chain,
    expand_intervals,
    interval_decomposition,
    is_borel_ideal,
    is_k_borel_ideal,
    k_borel_closure,
    minimal_borel_generators,
    shift_psi,
)
from freiman.monomial import GenSet, Monomial, all_monomials, is_k_bounded, parse_monomial

from conftest import ideal, mono
from oracles import exchange_closure


def test_example_closure_size(example23):
    assert len(example23) == 11
    assert is_borel_ideal(example23)


def test_k1_closure():
    G = ideal("x2*x3*x4", k=1)
    assert sorted(str(u) for u in G) == ["x1*x2*x3", "x1*x2*x4", "x1*x3*x4", "x2*x3*x4"]
    assert is_k_borel_ideal(G, 1)
    assert not is_borel_ideal(G)


def test_borel_leq_examples():
    assert borel_leq(mono("x1*x2", 3), mono("x2*x3"))
    assert not borel_leq(mono("x3^2"), mono("x2*x3", 3))
    assert borel_leq(mono("x1*x3"), mono("x2^2", 3)) is False
    with pytest.raises(ValueError):
        borel_leq(mono("x1", 2), mono("x1*x2"))


@pytest.mark.parametrize("n,d", [(n, d) for n in range(1, 6) for d in range(1, 5)])
def test_partial_order_axioms(n, d):
    mons = list(all_monomials(n, d))
    for u in mons:
        assert borel_leq(u, u)
    for u, v in product(mons, repeat=2):
        if u != v and borel_leq(u, v):
            assert not borel_leq(v, u)
    for u, v, w in product(mons, repeat=3):
        if borel_leq(u, v) and borel_leq(v, w):
            assert borel_leq(u, w)


@pytest.mark.parametrize("n,d", [(n, d) for n in range(1, 6) for d in range(1, 5)])
def test_closure_matches_exchange_oracle(n, d):
    for u in all_monomials(n, d):
        got = borel_closure(BorelSpec((u,), n=n)).exps_set()
        assert got == exchange_closure([u.exps])
        assert got == {v.exps for v in all_monomials(n, d) if borel_leq(v, u)}


@pytest.mark.parametrize("n,d", [(n, d) for n in range(1, 6) for d in range(2, 5)])
def test_k_closure_is_filter_and_matches_oracle(n, d):
    for k in range(1, d + 1):
        for u in all_monomials(n, d):
            if not is_k_bounded(u, k):
                continue
            full = borel_closure(BorelSpec((u,), n=n))
            got = k_borel_closure(BorelSpec((u,), k=k, n=n))
            assert got.exps_set() == {v.exps for v in full if is_k_bounded(v, k)}
            assert got.exps_set() == exchange_closure([u.exps], k)
            assert is_k_borel_ideal(got, k)
            if k >= d:
                assert got == full


@pytest.mark.parametrize("n,d", [(4, 2), (4, 3), (5, 3)])
def test_idempotence_and_monotonicity(n, d):
    mons = list(all_monomials(n, d))
    for u in mons:
        G = borel_closure(BorelSpec((u,), n=n))
        assert borel_closure(BorelSpec(tuple(G), n=n)) == G
        for v in G:
            sub = borel_closure(BorelSpec((v,), n=n))
            assert sub.exps_set() <= G.exps_set()


def test_multi_generator_k_closure_is_union():
    a, b = mono("x1*x2*x4"), mono("x2^2*x3", 4)
    G = closure(BorelSpec((a, b), k=2))
    ua = closure(BorelSpec((a,), k=2, n=4)).exps_set()
    ub = closure(BorelSpec((b,), k=2, n=4)).exps_set()
    assert G.exps_set() == ua | ub


def test_spec_validation():
    with pytest.raises(ValueError):
        BorelSpec((mono("x1^3"),), k=2)
    with pytest.raises(ValueError):
        BorelSpec((mono("x1", 2), mono("x1*x2")))
    with pytest.raises(ValueError):
        borel_closure(BorelSpec((mono("x1*x2"),), k=1))
    with pytest.raises(ValueError):
        k_borel_closure(BorelSpec((mono("x1*x2"),)))


def test_minimal_generators():
    gens = [mono("x1*x4"), mono("x2*x3", 4), mono("x1*x3", 4), mono("x1*x4")]
    assert minimal_borel_generators(gens) == [mono("x1*x4"), mono("x2*x3", 4)]


def test_degree2_chain_and_intervals():
    gens = [mono("x1*x5"), mono("x3^2", 5)]
    assert degree2_chain(gens) == [(1, 5), (3, 3)]
    assert interval_decomposition(gens) == [((1, 1), (1, 5)), ((2, 3), (2, 3))]
    with pytest.raises(ValueError):
        degree2_chain([mono("x1*x4"), mono("x1*x3", 4)])


def _chains(n):
    for m in range(1, n + 1):
        from itertools import combinations
        for ii in combinations(range(1, n + 1), m):
            for jj in combinations(range(ii[-1], n + 1), m):
                yield list(zip(ii, reversed(jj)))


@pytest.mark.parametrize("n", range(2, 9))
def test_interval_expansion_equals_closure(n):
    for chain in _chains(n):
        gens = [Monomial.from_indices(p, n) for p in chain]
        parts = interval_decomposition(gens)
        assert expand_intervals(parts, n) == borel_closure(BorelSpec(tuple(gens), n=n))


def test_shift_psi():
    u = mono("x1^2*x2*x3^2*x4")
    assert shift_psi(u, 2) == mono("x1*x2^2*x3")
    with pytest.raises(ValueError):
        shift_psi(mono("x1*x2"), 2)
    with pytest.raises(ValueError):
        shift_psi(mono("x1^2*x2^3"), 2)


def test_is_borel_rejects_non_closed():
    assert not is_borel_ideal(GenSet([mono("x2^2")]))
    assert is_borel_ideal(GenSet([mono("x1^2")]))
