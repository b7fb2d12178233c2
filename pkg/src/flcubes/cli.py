"""Command line frontend.

Subcommands: ``table`` emits family coefficients as CSV or JSON, ``verify``
runs the cross-verification suite, ``dot`` exports a Hasse diagram, and
``gf`` prints generating-function expansions.  Exit codes: 0 success,
1 verification failure, 2 usage error, 3 capacity error.
"""

from __future__ import annotations

import json
import sys

import click

from . import tables
from .errors import CapacityError
from .lattice import filter_lattice, to_dot
from .polynomials import IntPoly
from .poset import Poset, poset_from_text, sfence
from .verify import run_verification

DOT_MAX_N = 14
GF_MAX_TERMS = 64

_TABLE_FAMILIES = tables.FAMILIES
_GF_FAMILIES = ("rank", "cube", "maxcube", "degree", "indegree", "rank-even", "rank-odd")
_METHODS = ("census", "recurrence", "closed", "gf")


def _load_poset(path: str) -> Poset:
    try:
        with open(path, "r", encoding="ascii") as fh:
            return poset_from_text(fh.read())
    except (OSError, ValueError) as exc:
        raise click.UsageError(f"cannot read poset file {path}: {exc}")


def _coeff_list(poly: IntPoly) -> list[int]:
    return list(poly.coeffs) if poly.coeffs else [0]


def _emit_rows(rows: list[tuple[int, IntPoly]], fmt: str) -> None:
    if fmt == "csv":
        click.echo("n,k,coefficient")
        for n, poly in rows:
            for k, c in enumerate(_coeff_list(poly)):
                click.echo(f"{n},{k},{c}")
    else:
        click.echo(json.dumps([{"n": n, "coeffs": _coeff_list(p)} for n, p in rows]))


@click.group()
def main() -> None:
    """S-fence filter lattices and their counting polynomials."""


@main.command()
@click.argument("family", type=click.Choice(_TABLE_FAMILIES))
@click.argument("from_n", metavar="FROM", type=int)
@click.argument("to_n", metavar="TO", type=int)
@click.argument("method", type=click.Choice(_METHODS))
@click.argument("fmt", metavar="FORMAT", type=click.Choice(("csv", "json")))
@click.option(
    "--poset-file",
    type=click.Path(),
    default=None,
    help="Compute the family on this poset instead of the S-fence range; "
    "census only, FROM/TO are ignored.",
)
def table(family: str, from_n: int, to_n: int, method: str, fmt: str, poset_file) -> None:
    """Emit coefficients for FAMILY over FROM..TO by METHOD as FORMAT."""
    if not 0 <= from_n <= to_n:
        raise click.UsageError("need 0 <= FROM <= TO")
    if poset_file is not None:
        if method != "census":
            raise click.UsageError("--poset-file supports the census method only")
        poset = _load_poset(poset_file)
        try:
            poly = tables.diagram_poly(family, filter_lattice(poset))
        except CapacityError as exc:
            click.echo(f"capacity error: {exc}", err=True)
            sys.exit(3)
        _emit_rows([(len(poset), poly)], fmt)
        return
    if family == "outdegree" and method != "census":
        raise click.UsageError(
            "the outdegree family has a census method only; no formulas are known"
        )
    cap = tables.CENSUS_MAX_N if method == "census" else tables.FORMULA_MAX_N
    if to_n > cap:
        raise click.UsageError(f"the {method} method is limited to n <= {cap}")
    if method == "closed" and from_n < tables.CLOSED_MIN_N.get(family, 0):
        raise click.UsageError(
            f"closed form for {family} is defined for n >= {tables.CLOSED_MIN_N[family]}"
        )
    try:
        if method == "gf":
            polys = tables.gf_polys(family, to_n + 1)
            rows = [(n, polys[n]) for n in range(from_n, to_n + 1)]
        else:
            rows = [(n, tables.family_poly(family, n, method)) for n in range(from_n, to_n + 1)]
    except CapacityError as exc:
        click.echo(f"capacity error: {exc}", err=True)
        sys.exit(3)
    _emit_rows(rows, fmt)


@main.command()
@click.argument("max_n", type=int)
def verify(max_n: int) -> None:
    """Run every cross-check up to MAX_N and print the report."""
    if max_n < 0:
        raise click.UsageError("MAX_N must be non-negative")
    try:
        report = run_verification(max_n)
    except CapacityError as exc:
        click.echo(f"capacity error: {exc}", err=True)
        sys.exit(3)
    click.echo(report.render())
    sys.exit(report.exit_code)


@main.command()
@click.argument("n", type=int, required=False)
@click.option(
    "--poset-file",
    type=click.Path(),
    default=None,
    help="Export the filter lattice of this poset instead of the S-fence's.",
)
def dot(n, poset_file) -> None:
    """Write the Hasse diagram of the n-th S-fence filter lattice as DOT."""
    if (n is None) == (poset_file is None):
        raise click.UsageError("give exactly one of N or --poset-file")
    if poset_file is not None:
        poset = _load_poset(poset_file)
    else:
        if n < 0:
            raise click.UsageError("N must be non-negative")
        if n > DOT_MAX_N:
            click.echo(f"capacity error: dot export is limited to n <= {DOT_MAX_N}", err=True)
            sys.exit(3)
        poset = sfence(n)
    try:
        diagram = filter_lattice(poset)
    except CapacityError as exc:
        click.echo(f"capacity error: {exc}", err=True)
        sys.exit(3)
    click.echo(to_dot(diagram), nl=False)


@main.command()
@click.argument("family", type=click.Choice(_GF_FAMILIES))
@click.argument("terms", type=int)
def gf(family: str, terms: int) -> None:
    """Print TERMS coefficient polynomials of FAMILY's generating function."""
    if terms < 1:
        raise click.UsageError("TERMS must be positive")
    if terms > GF_MAX_TERMS:
        raise click.UsageError(f"TERMS is limited to {GF_MAX_TERMS}")
    for n, poly in enumerate(tables.gf_polys(family, terms)):
        click.echo(f"{n}: " + " ".join(str(c) for c in _coeff_list(poly)))


if __name__ == "__main__":
    main()
