"""Uniform access to each polynomial family by computation method.

Four methods cover the five formula-backed families: the census counts
directly on the lattice, the recurrence and closed forms evaluate the
derived expressions, and the generating-function route expands a rational
series.  The outdegree family is census-only.
"""

from __future__ import annotations

from functools import lru_cache

from . import census, formulas, genfun
from .lattice import LatticeDiagram, filter_lattice
from .polynomials import IntPoly
from .poset import sfence

FAMILIES = ("rank", "cube", "maxcube", "degree", "indegree", "outdegree")
CENSUS_MAX_N = 18
FORMULA_MAX_N = 40
CLOSED_MIN_N = {"rank": 2, "cube": 0, "maxcube": 3, "degree": 3, "indegree": 3}

_CENSUS_FN = {
    "rank": census.rank_polynomial,
    "cube": census.cube_polynomial,
    "maxcube": census.maximal_cube_polynomial,
    "degree": census.degree_polynomial,
    "indegree": census.indegree_polynomial,
    "outdegree": census.outdegree_polynomial,
}

_RECURRENCE_FN = {
    "rank": formulas.rank_poly_rec,
    "cube": formulas.cube_poly_rec,
    "maxcube": formulas.maxcube_poly_rec,
    "degree": formulas.degree_poly_rec,
    "indegree": formulas.indegree_poly_rec,
}

_CLOSED_COEFF = {
    "rank": formulas.r_coeff,
    "cube": formulas.q_coeff,
    "maxcube": formulas.h_coeff,
    "degree": formulas.d_coeff,
    "indegree": formulas.dm_coeff,
}


def _check_family(family: str) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")


def _formula_family(family: str) -> None:
    _check_family(family)
    if family == "outdegree":
        raise ValueError("the outdegree family has a census method only")


@lru_cache(maxsize=None)
def phi_diagram(n: int) -> LatticeDiagram:
    """Filter lattice of the S-fence on n elements."""
    return filter_lattice(sfence(n))


def census_poly(family: str, n: int) -> IntPoly:
    _check_family(family)
    return _CENSUS_FN[family](phi_diagram(n))


def diagram_poly(family: str, diagram: LatticeDiagram) -> IntPoly:
    """Census polynomial of an arbitrary diagram, not just an S-fence one."""
    _check_family(family)
    return _CENSUS_FN[family](diagram)


def recurrence_poly(family: str, n: int) -> IntPoly:
    _formula_family(family)
    return _RECURRENCE_FN[family](n)


def closed_poly(family: str, n: int) -> IntPoly:
    _formula_family(family)
    lo = CLOSED_MIN_N[family]
    if n < lo:
        raise ValueError(f"closed form for {family} is defined for n >= {lo}")
    coeff = _CLOSED_COEFF[family]
    return IntPoly([coeff(n, k) for k in range(n + 1)])


def gf_polys(family: str, count: int) -> list[IntPoly]:
    if family not in genfun.ALL_SERIES:
        raise ValueError(f"no generating function for family {family!r}")
    return genfun.ALL_SERIES[family]().expand(count)


def family_poly(family: str, n: int, method: str) -> IntPoly:
    """One polynomial by any method name: census, recurrence, closed or gf."""
    if method == "census":
        return census_poly(family, n)
    if method == "recurrence":
        return recurrence_poly(family, n)
    if method == "closed":
        return closed_poly(family, n)
    if method == "gf":
        return gf_polys(family, n + 1)[n]
    raise ValueError(f"unknown method {method!r}")
