"""Command-line interface: series construction, Hecke action, eigenform
tests, brackets, quasimodular decomposition, and the verification suites.

All JSON output serializes rationals as "num/den" strings.
"""

from __future__ import annotations

import contextlib
import json as jsonlib
import re

import click

from .exactmath import rational_str
from .forms import (
    CATALOG_NAMES,
    GeneratorPoly,
    catalog_form,
    cusp_delta,
    dim_modular,
    eisenstein,
    eval_generator_poly,
    is_modular_member,
    monomial_exponents,
)
from .hecke import eigenform_test, hecke
from .nearly import quasimodular_decompose
from .brackets import rankin_cohen
from .qseries import GradedSeries, PrecisionError
from .verify import DEFAULT_PREC, SUITE_NAMES, run_suite

_NAME_RE = re.compile(r"^[A-Za-z]\w*$")


@contextlib.contextmanager
def _domain_errors():
    try:
        yield
    except (ValueError, PrecisionError) as exc:
        raise click.ClickException(str(exc)) from exc


def _resolve_form(text: str, prec: int) -> GradedSeries:
    """A catalog name, or a weight-homogeneous polynomial in E2, E4, E6."""
    if text in CATALOG_NAMES:
        return catalog_form(text, prec)
    if _NAME_RE.match(text):
        raise click.ClickException(
            f"unknown form name {text!r}; catalog names are {', '.join(CATALOG_NAMES)}"
        )
    with _domain_errors():
        return eval_generator_poly(text, prec, require_homogeneous=True)


def _echo_series(form: GradedSeries, as_json: bool) -> None:
    if as_json:
        click.echo(jsonlib.dumps(form.to_json_dict(), indent=2))
    else:
        click.echo(str(form))


@click.group()
def main():
    """Exact q-expansion computations for level-one modular forms."""


@main.command("eis")
@click.option("--weight", type=int, required=True, help="Even weight k >= 2.")
@click.option("--prec", type=int, required=True, help="Certified q-coefficients.")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
def eis_cmd(weight: int, prec: int, as_json: bool):
    """Eisenstein series of the given weight."""
    with _domain_errors():
        form = eisenstein(weight, prec)
    _echo_series(form, as_json)


@main.command("delta")
@click.option("--weight", type=int, required=True, help="One of 12,16,18,20,22,26.")
@click.option("--prec", type=int, required=True, help="Certified q-coefficients.")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
def delta_cmd(weight: int, prec: int, as_json: bool):
    """Normalized cusp form of the given weight."""
    with _domain_errors():
        form = cusp_delta(weight, prec)
    _echo_series(form, as_json)


@main.command("hecke")
@click.option("--input", "source", required=True, help="Catalog name or polynomial in E2,E4,E6.")
@click.option("--n", "index", type=int, required=True, help="Operator index n >= 1.")
@click.option("--prec", type=int, default=DEFAULT_PREC, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
def hecke_cmd(source: str, index: int, prec: int, as_json: bool):
    """Apply the n-th Hecke operator."""
    form = _resolve_form(source, prec)
    with _domain_errors():
        result = hecke(form, index)
    _echo_series(result, as_json)


@main.command("eigen")
@click.option("--input", "source", required=True, help="Catalog name or polynomial in E2,E4,E6.")
@click.option("--bound", type=int, default=10, show_default=True, help="Test T_n for n <= bound.")
@click.option("--window", type=int, default=12, show_default=True)
@click.option("--prec", type=int, default=DEFAULT_PREC, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
def eigen_cmd(source: str, bound: int, window: int, prec: int, as_json: bool):
    """Test whether a form is a Hecke eigenform up to the bound."""
    form = _resolve_form(source, prec)
    with _domain_errors():
        report = eigenform_test(form, bound=bound, window=window)
    if as_json:
        click.echo(jsonlib.dumps(report.to_json_dict(), indent=2))
        return
    if report.is_eigen_up_to_bound:
        click.echo(f"eigenform up to T_{report.tested_bound}")
        for n, lam in report.eigenvalues:
            click.echo(f"  lambda_{n} = {lam}")
    else:
        v = report.first_violation
        click.echo(f"not an eigenform: T_{v.n} fails at q^{v.exponent}")
        click.echo(f"  expected {v.expected}, got {v.actual}")


@main.command("bracket")
@click.option("--g", "g_name", required=True, help="Catalog name.")
@click.option("--h", "h_name", required=True, help="Catalog name.")
@click.option("--m", "order", type=int, required=True, help="Bracket order m >= 0.")
@click.option("--prec", type=int, default=DEFAULT_PREC, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
def bracket_cmd(g_name: str, h_name: str, order: int, prec: int, as_json: bool):
    """Rankin-Cohen bracket [g, h]_m of two catalog forms."""
    with _domain_errors():
        g = catalog_form(g_name, prec)
        h = catalog_form(h_name, prec)
        result = rankin_cohen(g, h, order)
    _echo_series(result, as_json)


@main.command("decompose")
@click.option("--expr", required=True, help="Polynomial in E2, E4, E6.")
@click.option("--weight", type=int, required=True, help="Expected homogeneous weight.")
@click.option("--depth", type=int, required=True, help="Depth bound p < weight/2.")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
def decompose_cmd(expr: str, weight: int, depth: int, as_json: bool):
    """Split a quasimodular form into derivatives of modular forms."""
    with _domain_errors():
        poly = GeneratorPoly.parse(expr)
        n_cols = sum(dim_modular(weight - 2 * r) for r in range(depth + 1))
        prec = max(32, n_cols + 11)
        form = eval_generator_poly(poly, prec, require_homogeneous=True)
        if form.weight != weight:
            raise click.ClickException(
                f"expression has weight {form.weight}, not the requested {weight}"
            )
        parts = quasimodular_decompose(form, depth)
    if parts is None:
        if as_json:
            click.echo(jsonlib.dumps({"weight": weight, "depth_bound": depth, "decomposable": False}))
        else:
            click.echo(f"not decomposable with depth bound {depth}")
        raise SystemExit(1)

    def coordinates(part: GradedSeries) -> list[str]:
        if part.weight < 4:
            return []
        return [rational_str(c) for c in is_modular_member(part, part.weight)]

    if as_json:
        payload = {
            "weight": weight,
            "depth_bound": depth,
            "decomposable": True,
            "components": [
                {
                    "r": r,
                    "weight": part.weight,
                    "basis": [
                        f"E4^{a}*E6^{b}" for a, b in monomial_exponents(part.weight)
                    ]
                    if part.weight >= 4
                    else [],
                    "coordinates": coordinates(part),
                    "series": part.series.to_json_dict(),
                }
                for r, part in parts
            ],
        }
        click.echo(jsonlib.dumps(payload, indent=2))
    else:
        for r, part in parts:
            labels = (
                ", ".join(
                    f"{c} * E4^{a}*E6^{b}"
                    for c, (a, b) in zip(
                        coordinates(part), monomial_exponents(part.weight)
                    )
                )
                if part.weight >= 4
                else "0"
            )
            click.echo(f"D^{r} component (weight {part.weight}): {labels}")


@main.command("verify")
@click.option("--suite", type=click.Choice(SUITE_NAMES), required=True)
@click.option("--prec", type=int, default=DEFAULT_PREC, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Emit the JSON report.")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Also write the JSON report to a file.")
@click.pass_context
def verify_cmd(ctx, suite: str, prec: int, as_json: bool, out: str | None):
    """Run a verification suite; exit 0 only if every check passes."""
    with _domain_errors():
        report = run_suite(suite, prec)
    payload = jsonlib.dumps(report.to_json_dict(), indent=2)
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(payload + "\n")
    if as_json:
        click.echo(payload)
    else:
        for line in report.summary_lines():
            click.echo(line)
    ctx.exit(0 if report.all_passed() else 1)


if __name__ == "__main__":
    main()
