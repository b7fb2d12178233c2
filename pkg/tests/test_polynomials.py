import pytest
from hypothesis import given
from hypothesis import strategies as st

from flcubes.polynomials import IntPoly

coeff_lists = st.lists(st.integers(min_value=-10**6, max_value=10**6), max_size=8)


def test_trailing_zeros_trimmed():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).coeffs == ()
    assert IntPoly([0, 0]).is_zero()


def test_degree_and_coeff():
    p = IntPoly([3, 0, 5])
    assert p.degree == 2
    assert p.coeff(0) == 3
    assert p.coeff(1) == 0
    assert p.coeff(7) == 0
    assert IntPoly.zero().degree == -1


def test_arithmetic_basics():
    p = IntPoly([1, 1])
    assert p * p == IntPoly([1, 2, 1])
    assert p + IntPoly([0, -1]) == IntPoly([1])
    assert p - p == IntPoly.zero()
    assert 3 * p == IntPoly([3, 3])
    assert p.shift(2) == IntPoly([0, 0, 1, 1])


def test_evaluation_and_compose():
    p = IntPoly([1, 2, 1])  # (1+x)^2
    assert p(3) == 16
    q = p.compose(IntPoly([1, 1]))  # (2+x)^2
    assert q == IntPoly([4, 4, 1])
    assert IntPoly.zero().compose(p) == IntPoly.zero()


def test_str_forms():
    assert str(IntPoly.zero()) == "0"
    assert str(IntPoly([1, -2, 1])) == "1 - 2x + x^2"
    assert str(IntPoly([0, 0, 3])) == "3x^2"
    assert str(IntPoly([-1, 1])) == "-1 + x"


def test_immutability():
    p = IntPoly([1])
    with pytest.raises(AttributeError):
        p.coeffs = (2,)


def test_monomial_rejects_negative_power():
    with pytest.raises(ValueError):
        IntPoly.monomial(-1)


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_laws(a, b, c):
    pa, pb, pc = IntPoly(a), IntPoly(b), IntPoly(c)
    assert pa + pb == pb + pa
    assert pa * pb == pb * pa
    assert pa * (pb + pc) == pa * pb + pa * pc
    assert (pa * pb) * pc == pa * (pb * pc)


@given(coeff_lists, coeff_lists, st.integers(min_value=-20, max_value=20))
def test_evaluation_is_a_homomorphism(a, b, x):
    pa, pb = IntPoly(a), IntPoly(b)
    assert (pa + pb)(x) == pa(x) + pb(x)
    assert (pa * pb)(x) == pa(x) * pb(x)


@given(coeff_lists, coeff_lists, st.integers(min_value=-9, max_value=9))
def test_compose_matches_evaluation(a, b, x):
    pa, pb = IntPoly(a), IntPoly(b)
    assert pa.compose(pb)(x) == pa(pb(x))
