from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import posets
from flcubes.errors import CapacityError
from flcubes.formulas import fib
from flcubes.poset import (
    FilterSet,
    Poset,
    fence,
    poset_from_text,
    poset_to_text,
    sfence,
)


# -- construction -----------------------------------------------------------


def test_fence_small():
    assert fence(0).covers == frozenset()
    assert fence(1).covers == frozenset()
    assert fence(3).covers == frozenset({(2, 1), (2, 3)})
    assert fence(4).covers == frozenset({(2, 1), (2, 3), (4, 3)})


def test_sfence_small():
    assert sfence(0).covers == frozenset()
    assert len(sfence(0)) == 0
    assert sfence(3).covers == frozenset({(1, 2), (2, 3)})
    assert sfence(5).covers == frozenset({(1, 2), (2, 3), (4, 2), (4, 5)})
    assert sfence(6).covers == sfence(5).covers | {(6, 5)}
    assert sfence(7).covers == sfence(6).covers | {(6, 7)}


def test_constructor_rejects_cycles_and_redundancy():
    with pytest.raises(ValueError):
        Poset((1, 2), frozenset({(1, 2), (2, 1)}))
    with pytest.raises(ValueError):
        # (1, 3) is implied by 1 > 2 > 3
        Poset((1, 2, 3), frozenset({(1, 2), (2, 3), (1, 3)}))
    with pytest.raises(ValueError):
        Poset((1, 2), frozenset({(1, 3)}))
    with pytest.raises(ValueError):
        Poset((1, 1, 2), frozenset())


def test_order_queries():
    p = sfence(5)
    assert p.le(3, 1)
    assert p.le(2, 4)
    assert not p.le(1, 4)
    assert p.up_set(3) == {1, 2, 4}
    assert p.down_set(3) == set()
    assert set(p.maximal_elements()) == {1, 4}
    assert set(p.minimal_elements()) == {3, 5}


# -- dual ----------------------------------------------------------------------


def test_dual_examples():
    assert fence(0).dual() == fence(0)
    assert fence(3).dual().covers == frozenset({(1, 2), (3, 2)})
    p = sfence(7)
    assert p.dual().dual() == p


@given(posets())
def test_dual_is_an_involution(p):
    assert p.dual().dual() == p
    assert len(p.dual().covers) == len(p.covers)


# -- removal -----------------------------------------------------------------


def test_remove_endpoint_gives_smaller_sfence():
    assert sfence(5).remove(5) == sfence(4)
    assert sfence(3).remove(3).covers == frozenset({(1, 2)})


def test_remove_middle_uses_induced_transitivity():
    chain = Poset((1, 2, 3), frozenset({(1, 2), (2, 3)}))
    assert chain.remove(2) == Poset((1, 3), frozenset({(1, 3)}))


def test_remove_unknown_element():
    with pytest.raises(KeyError):
        sfence(3).remove(9)
    with pytest.raises(KeyError):
        sfence(3).star_remove(9)


def test_star_remove_examples():
    # 4 > 2 > 3 makes x4 comparable to x3, so only x5 survives; the
    # count split |F(P)| = |F(P-x)| + |F(P*x)| pins this down: 10 = 8 + 2
    assert sfence(5).star_remove(3) == Poset((5,), frozenset())
    assert sfence(7).star_remove(3) == Poset((5, 6, 7), frozenset({(6, 5), (6, 7)}))
    chain = Poset((1, 2, 3), frozenset({(1, 2), (2, 3)}))
    assert len(chain.star_remove(2)) == 0
    for n in (6, 8):
        assert sfence(n).star_remove(n) == sfence(n - 2)
    for n in (7, 9):
        assert sfence(n).star_remove(n).elements == tuple(range(1, n - 1))


@given(posets())
@settings(max_examples=60)
def test_removals_yield_valid_posets(p):
    # the Poset constructor re-validates acyclicity and reduction
    for x in p.elements:
        assert len(p.remove(x)) == len(p) - 1
        smaller = p.star_remove(x)
        assert x not in smaller.elements


# -- filters -------------------------------------------------------------------


def test_is_filter_examples():
    p3 = sfence(3)
    assert not p3.is_filter({2})
    assert p3.is_filter(set())
    assert sfence(5).is_filter({1, 4})
    assert fence(4).is_filter({2, 4, 3})
    assert not fence(4).is_filter({3})


def test_is_filter_rejects_foreign_elements():
    with pytest.raises(KeyError):
        sfence(3).is_filter({7})


def test_filters_of_empty_poset():
    fs = sfence(0).filters()
    assert len(fs) == 1
    assert fs[0].members == frozenset()
    assert fs[0].bitstring() == ""


def test_filters_of_chain():
    got = [f.members for f in sfence(3).filters()]
    assert got == [
        frozenset(),
        frozenset({1}),
        frozenset({1, 2}),
        frozenset({1, 2, 3}),
    ]


def test_filter_counts_match_fibonacci():
    assert len(sfence(6).filters()) == 16
    for n in range(3, 13):
        assert sfence(n).count_filters() == 2 * fib(n)
    assert [sfence(n).count_filters() for n in range(3)] == [1, 2, 3]


def test_fence_filter_counts():
    # fence filter lattices are the classical Fibonacci cubes
    for n in range(0, 13):
        assert fence(n).count_filters() == fib(n + 2)


def test_canonical_order_is_cardinality_then_mask():
    fs = sfence(6).filters()
    keys = [(f.size, f.mask) for f in fs]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_capacity_bounds():
    big = Poset(tuple(range(1, 40)), frozenset())
    with pytest.raises(CapacityError):
        big.filters()
    with pytest.raises(CapacityError):
        fence(20).count_filters(limit=10)


@given(posets())
@settings(max_examples=60)
def test_enumeration_agrees_with_brute_force(p):
    fs = {f.members for f in p.filters()}
    brute = set()
    for r in range(len(p) + 1):
        for combo in combinations(p.elements, r):
            if p.is_filter(set(combo)):
                brute.add(frozenset(combo))
    assert fs == brute
    assert len(fs) == p.count_filters()


@given(posets())
@settings(max_examples=60)
def test_every_enumerated_set_is_a_filter(p):
    for f in p.filters():
        assert p.is_filter(f)


@given(posets(max_size=7))
@settings(max_examples=60)
def test_deletion_splits_filter_counts(p):
    for x in p.elements:
        assert (
            p.count_filters()
            == p.remove(x).count_filters() + p.star_remove(x).count_filters()
        )


# -- FilterSet ---------------------------------------------------------------


def test_filterset_accessors():
    f = FilterSet(0b1011, (1, 2, 3, 4))
    assert f.size == 3
    assert len(f) == 3
    assert f.members == {1, 2, 4}
    assert f.bitstring() == "1101"
    assert 2 in f and 3 not in f and 9 not in f


# -- text format ----------------------------------------------------------------


def test_text_round_trip():
    p = sfence(6)
    assert poset_from_text(poset_to_text(p)) == p


def test_text_parsing_errors():
    with pytest.raises(ValueError):
        poset_from_text("")
    with pytest.raises(ValueError):
        poset_from_text("x\n")
    with pytest.raises(ValueError):
        poset_from_text("2\n1 3\n")
    with pytest.raises(ValueError):
        poset_from_text("2\n1 2 3\n")
    with pytest.raises(ValueError):
        poset_to_text(Poset((2, 3), frozenset({(2, 3)})))
