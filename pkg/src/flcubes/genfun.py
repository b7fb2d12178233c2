"""Exact expansion of rational generating functions in y whose coefficients
are integer polynomials in x.

A series is numerator / denominator plus an optional finite correction
added outside the fraction.  The denominator's constant term must be the
unit polynomial, which makes coefficient extraction an integer-exact linear
recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formulas import binom
from .polynomials import IntPoly


def _p(*coeffs: int) -> IntPoly:
    return IntPoly(coeffs)


@dataclass(frozen=True)
class RationalSeries:
    numerator: tuple[IntPoly, ...]
    denominator: tuple[IntPoly, ...]
    correction: tuple[IntPoly, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(self.numerator))
        object.__setattr__(self, "denominator", tuple(self.denominator))
        object.__setattr__(self, "correction", tuple(self.correction))
        if not self.denominator or self.denominator[0] != IntPoly.one():
            raise ValueError("denominator constant term must be 1")

    def fraction_coeffs(self, count: int) -> list[IntPoly]:
        """First ``count`` coefficients of numerator/denominator alone."""
        if count < 0:
            raise ValueError("count must be non-negative")
        num, den = self.numerator, self.denominator
        out: list[IntPoly] = []
        for n in range(count):
            c = num[n] if n < len(num) else IntPoly.zero()
            for i in range(1, min(n, len(den) - 1) + 1):
                c = c - den[i] * out[n - i]
            out.append(c)
        return out

    def expand(self, count: int) -> list[IntPoly]:
        """First ``count`` coefficients of the whole series, correction included."""
        out = self.fraction_coeffs(count)
        for i, c in enumerate(self.correction):
            if i < count:
                out[i] = out[i] + c
        return out

    def exactness_failure(self, count: int) -> str | None:
        """Re-multiply the expansion by the denominator; describe the first
        coefficient that fails to reproduce the numerator, or None."""
        frac = self.fraction_coeffs(count)
        for n in range(count):
            acc = IntPoly.zero()
            for i in range(min(n, len(self.denominator) - 1) + 1):
                acc = acc + self.denominator[i] * frac[n - i]
            expected = self.numerator[n] if n < len(self.numerator) else IntPoly.zero()
            if acc != expected:
                return f"y^{n}: expansion*denominator gives {acc}, numerator has {expected}"
        return None


# -- the concrete series -----------------------------------------------------


def rank_gf() -> RationalSeries:
    """Generating function of the rank polynomials."""
    return RationalSeries(
        numerator=(_p(1), _p(1, 1), _p(0), _p(0, -1, -1), _p(0, -1, -1), _p(0), _p(0, 0, 1)),
        denominator=(_p(1), _p(0), _p(-1, -1, -1), _p(0), _p(0, 0, 1)),
    )


def rank_even_gf() -> RationalSeries:
    """Generating function of the even-index rank polynomials (z-variable)."""
    return RationalSeries(
        numerator=(_p(1), _p(-1), _p(1)),
        denominator=(_p(1), _p(-1, -1, -1), _p(0, 0, 1)),
        correction=(_p(0), _p(1)),
    )


def rank_odd_gf() -> RationalSeries:
    """Generating function of the odd-index rank polynomials (z-variable)."""
    return RationalSeries(
        numerator=(_p(1, 1), _p(0, -1, -1)),
        denominator=(_p(1), _p(-1, -1, -1), _p(0, 0, 1)),
    )


def cube_gf() -> RationalSeries:
    """Generating function of the cube polynomials."""
    return RationalSeries(
        numerator=(_p(1), _p(1, 1), _p(0), _p(-1, -2, -1), _p(-1, -2, -1)),
        denominator=(_p(1), _p(-1), _p(-1, -1)),
    )


def maxcube_gf() -> RationalSeries:
    """Generating function of the maximal-cube polynomials."""
    return RationalSeries(
        numerator=(_p(1), _p(2)),
        denominator=(_p(1), _p(0), _p(0, -1), _p(0, -1)),
        correction=(_p(0), _p(-2, 1), _p(0, 1)),
    )


def degree_gf() -> RationalSeries:
    """Generating function of the degree polynomials."""
    return RationalSeries(
        numerator=(_p(1), _p(1), _p(0, 0, -1)),
        denominator=(_p(1), _p(0, -1), _p(0, -1), _p(0, -1, 1)),
        correction=(_p(0), _p(-1, 1), _p(0, 0, 1)),
    )


def indegree_gf() -> RationalSeries:
    """Generating function of the indegree polynomials."""
    return RationalSeries(
        numerator=(_p(1), _p(0, 1), _p(0), _p(0, 0, -1), _p(0, 0, -1)),
        denominator=(_p(1), _p(-1), _p(0, -1)),
    )


ALL_SERIES = {
    "rank": rank_gf,
    "rank-even": rank_even_gf,
    "rank-odd": rank_odd_gf,
    "cube": cube_gf,
    "maxcube": maxcube_gf,
    "degree": degree_gf,
    "indegree": indegree_gf,
}


# -- the degree kernel ----------------------------------------------------------

KERNEL_TABLE_BOUND = 64


def degree_kernel_gf() -> RationalSeries:
    """The fraction 1 / ((1-xy)(1-xy^2) - xy^3) underlying the degree series."""
    return RationalSeries(
        numerator=(_p(1),),
        denominator=(_p(1), _p(0, -1), _p(0, -1), _p(0, -1, 1)),
    )


def degree_kernel_table(count: int) -> list[list[int]]:
    """Coefficient table of the degree kernel, row n = coefficients in x.

    Computed twice, by series expansion and by the double-binomial sum
    sum_j C(n-2j, k-j) C(j, n-k-j), and cross-checked entry by entry.
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    if count > KERNEL_TABLE_BOUND:
        raise ValueError(f"kernel table supports at most {KERNEL_TABLE_BOUND} rows")
    rows = degree_kernel_gf().expand(count)
    table = []
    for n, poly in enumerate(rows):
        width = max(n + 1, len(poly.coeffs))
        direct = [
            sum(binom(n - 2 * j, k - j) * binom(j, n - k - j) for j in range(k + 1))
            for k in range(width)
        ]
        series = [poly.coeff(k) for k in range(width)]
        if direct != series:
            raise ValueError(
                f"kernel routes disagree at row {n}: series {series}, direct {direct}"
            )
        table.append(series)
    return table
