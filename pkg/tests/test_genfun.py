import pytest
from hypothesis import given
from hypothesis import strategies as st

import golden_tables
from flcubes.formulas import fib
from flcubes.genfun import (
    ALL_SERIES,
    RationalSeries,
    cube_gf,
    degree_gf,
    degree_kernel_gf,
    degree_kernel_table,
    indegree_gf,
    maxcube_gf,
    rank_even_gf,
    rank_gf,
    rank_odd_gf,
)
from flcubes.polynomials import IntPoly

GF_FOR = {
    "rank": rank_gf,
    "cube": cube_gf,
    "maxcube": maxcube_gf,
    "degree": degree_gf,
    "indegree": indegree_gf,
}


def test_fibonacci_shift():
    series = RationalSeries(numerator=(IntPoly([1]),), denominator=(IntPoly([1]), IntPoly([-1]), IntPoly([-1])))
    got = [p.coeff(0) for p in series.expand(8)]
    assert got == [1, 1, 2, 3, 5, 8, 13, 21]


def test_non_unit_denominator_rejected():
    with pytest.raises(ValueError):
        RationalSeries(numerator=(IntPoly([1]),), denominator=(IntPoly([2]),))
    with pytest.raises(ValueError):
        RationalSeries(numerator=(IntPoly([1]),), denominator=())


@pytest.mark.parametrize("family", sorted(GF_FOR))
def test_expansions_match_golden_tables(family):
    table = golden_tables.ALL[family]
    polys = GF_FOR[family]().expand(max(table) + 1)
    for n, coeffs in table.items():
        assert polys[n] == IntPoly(coeffs), (family, n)


def test_expansion_spot_values():
    assert cube_gf().expand(5)[3] == IntPoly([4, 3])
    assert rank_gf().expand(10)[9] == IntPoly(golden_tables.RANK[9])
    assert maxcube_gf().expand(8)[1] == IntPoly([0, 1])
    assert maxcube_gf().expand(8)[4] == IntPoly([0, 2, 1])
    assert degree_gf().expand(6)[5] == IntPoly([0, 0, 5, 4, 1])
    assert indegree_gf().expand(5)[2] == IntPoly([1, 2])
    assert indegree_gf().expand(5)[4] == IntPoly([1, 4, 1])


def test_even_and_odd_series():
    evens = rank_even_gf().expand(4)
    odds = rank_odd_gf().expand(4)
    assert evens[0] == IntPoly([1])
    assert evens[2] == IntPoly(golden_tables.RANK[4])
    assert odds[0] == IntPoly([1, 1])
    assert odds[3] == IntPoly(golden_tables.RANK[7])


def test_interleaving_identity():
    ranks = rank_gf().expand(42)
    evens = rank_even_gf().expand(21)
    odds = rank_odd_gf().expand(21)
    for m in range(21):
        assert ranks[2 * m] == evens[m]
        assert ranks[2 * m + 1] == odds[m]


def test_rank_series_at_one_counts_vertices():
    polys = rank_gf().expand(41)
    assert [p(1) for p in polys[:3]] == [1, 2, 3]
    for n in range(3, 41):
        assert polys[n](1) == 2 * fib(n)


@pytest.mark.parametrize("family", sorted(ALL_SERIES))
def test_exactness_through_y40(family):
    assert ALL_SERIES[family]().exactness_failure(41) is None


def test_kernel_table_dual_route():
    table = degree_kernel_table(20)
    assert table[0][0] == 1
    assert table[1][1] == 1
    assert len(table) == 20
    # rows of the kernel assemble the degree series beyond its correction part
    kernel = degree_kernel_gf().expand(12)
    degree = degree_gf().expand(12)
    x2 = IntPoly([0, 0, 1])
    for n in range(3, 12):
        assert kernel[n] + kernel[n - 1] - x2 * kernel[n - 2] == degree[n]


def test_kernel_table_bounds():
    with pytest.raises(ValueError):
        degree_kernel_table(65)
    with pytest.raises(ValueError):
        degree_kernel_table(-1)


@given(
    st.lists(st.integers(-5, 5), min_size=1, max_size=4),
    st.lists(st.lists(st.integers(-3, 3), max_size=3), max_size=3),
    st.lists(st.lists(st.integers(-3, 3), max_size=3), min_size=1, max_size=3),
)
def test_random_series_expand_exactly(corr, num, den_tail):
    series = RationalSeries(
        numerator=tuple(IntPoly(c) for c in num),
        denominator=(IntPoly([1]),) + tuple(IntPoly(c) for c in den_tail),
        correction=tuple(IntPoly([c]) for c in corr),
    )
    assert series.exactness_failure(15) is None
    expanded = series.expand(15)
    fraction = series.fraction_coeffs(15)
    for i in range(15):
        extra = IntPoly([corr[i]]) if i < len(corr) else IntPoly.zero()
        assert expanded[i] == fraction[i] + extra
