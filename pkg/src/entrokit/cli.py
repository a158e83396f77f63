"""Command-line front end.

Subcommands: ``entropy``, ``quantile``, ``iqnr``, ``converge``, ``figure``.
Global flags ``--format {json|csv}`` and ``--out PATH``.  Exit codes:
0 success, 2 usage or parse error, 3 domain error with a partial report.
Quantities a law does not possess are null in JSON and empty cells in CSV.
"""

from __future__ import annotations

import csv
import io
import json
import sys

import click

from . import convergence, entropy, laws, quantiles
from .errors import (
    DegenerateLawError,
    LawSpecError,
    MixtureStructureError,
    NoVarianceError,
)

EXIT_DOMAIN_ERROR = 3

_FIGURES = {
    # figure id -> (family, quantity, default lam range)
    1: ("gamma", "h_tilde", 0.1, 50.0),
    2: ("student", "h_tilde", 0.1, 50.0),
    3: ("gamma", "h_hat", 0.1, 50.0),
    4: ("student", "h_hat", 2.1, 50.0),
    5: ("gamma", "h_bar", 0.1, 50.0),
    6: ("student", "h_bar", 0.5, 50.0),
}


@click.group()
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
              show_default=True, help="Output serialization.")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Write output to a file instead of standard output.")
@click.pass_context
def main(ctx: click.Context, fmt: str, out: str) -> None:
    """Classical and renormalized entropies for a catalog of probability laws."""
    ctx.obj = {"format": fmt, "out": out}


def _write(ctx: click.Context, text: str) -> None:
    out = ctx.obj["out"]
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        click.echo(text, nl=False)


def _emit_record(ctx: click.Context, record: dict, columns: list) -> None:
    if ctx.obj["format"] == "json":
        _write(ctx, json.dumps(record, indent=2) + "\n")
        return
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    writer.writerow(["" if record.get(col) is None else record.get(col)
                     for col in columns])
    _write(ctx, buffer.getvalue())


def _emit_table(ctx: click.Context, columns: list, rows: list) -> None:
    if ctx.obj["format"] == "json":
        payload = [dict(zip(columns, row)) for row in rows]
        _write(ctx, json.dumps(payload, indent=2) + "\n")
        return
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    _write(ctx, buffer.getvalue())


def _parse_spec(spec: str):
    try:
        return laws.parse_law(spec)
    except LawSpecError as exc:
        raise click.UsageError(f"bad law specification (token {exc.token!r}): {exc}")
    except ValueError as exc:
        raise click.UsageError(f"bad law specification: {exc}")


_REPORT_COLUMNS = ["law", "H", "h", "H_tilde", "h_tilde", "h_hat", "h_bar", "rho_tilde"]


@main.command("entropy")
@click.argument("spec")
@click.pass_context
def cmd_entropy(ctx: click.Context, spec: str) -> None:
    """Full entropy report for the law SPEC (e.g. gaussian:a=1)."""
    try:
        law = _parse_spec(spec)
    except click.UsageError:
        raise
    except (DegenerateLawError, NoVarianceError) as exc:
        record = {"law": spec, "errors": {"law": f"{type(exc).__name__}: {exc}"}}
        _emit_record(ctx, record, _REPORT_COLUMNS)
        sys.exit(EXIT_DOMAIN_ERROR)
    report = entropy.entropy_report(law)
    _emit_record(ctx, report.to_dict(), _REPORT_COLUMNS)
    if report.errors:
        sys.exit(EXIT_DOMAIN_ERROR)


def _scalar_command(ctx: click.Context, spec: str, p: float, fn, name: str) -> None:
    law = _parse_spec(spec)
    try:
        value = fn(law, p)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    except (DegenerateLawError, NoVarianceError, MixtureStructureError) as exc:
        record = {"law": spec, "p": p, name: None,
                  "errors": {name: f"{type(exc).__name__}: {exc}"}}
        _emit_record(ctx, record, ["law", "p", name])
        sys.exit(EXIT_DOMAIN_ERROR)
    _emit_record(ctx, {"law": spec, "p": p, name: value}, ["law", "p", name])


@main.command("quantile")
@click.argument("spec")
@click.argument("p", type=float)
@click.pass_context
def cmd_quantile(ctx: click.Context, spec: str, p: float) -> None:
    """Quantile Q(P) of the law SPEC, 0 < P < 1."""
    _scalar_command(ctx, spec, p, quantiles.quantile, "quantile")


@main.command("iqnr")
@click.argument("spec")
@click.argument("p", type=float)
@click.pass_context
def cmd_iqnr(ctx: click.Context, spec: str, p: float) -> None:
    """Interquantile range Q(1-P) - Q(P) of the law SPEC, 0 < P < 1/2."""
    _scalar_command(ctx, spec, p, quantiles.iqnr, "iqnr")


def _parse_grid(raw: str, caster) -> tuple:
    try:
        values = tuple(caster(item) for item in raw.split(","))
    except ValueError:
        raise click.UsageError(f"bad index grid {raw!r}")
    if not values or any(b <= a for a, b in zip(values, values[1:])):
        raise click.UsageError(f"index grid must be strictly increasing: {raw!r}")
    return values


_TRACE_COLUMNS = ["index", "H", "H_tilde", "target", "gap"]


@main.command("converge")
@click.argument("kind", type=click.Choice(["binomial", "poisson", "duniform"]))
@click.option("--p", type=float, default=0.5, show_default=True,
              help="Success probability (binomial only).")
@click.option("--a", type=float, default=1.0, show_default=True,
              help="Scale of the limiting uniform law (duniform only).")
@click.option("--ns", default=None, help="Comma-separated index grid (n values).")
@click.option("--lams", default=None, help="Comma-separated index grid (lam values).")
@click.pass_context
def cmd_converge(ctx: click.Context, kind: str, p: float, a: float,
                 ns: str, lams: str) -> None:
    """Convergence trace of the renormalized entropy for KIND."""
    try:
        if kind == "binomial":
            grid = _parse_grid(ns, int) if ns else convergence.DEFAULT_BINOMIAL_NS
            trace = convergence.trace_binomial(p, grid)
        elif kind == "poisson":
            grid = _parse_grid(lams, float) if lams else convergence.DEFAULT_POISSON_LAMS
            trace = convergence.trace_poisson(grid)
        else:
            grid = _parse_grid(ns, int) if ns else convergence.DEFAULT_DUNIFORM_NS
            trace = convergence.trace_discrete_uniform(a, grid)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    _emit_table(ctx, _TRACE_COLUMNS, trace.rows())


@main.command("figure")
@click.argument("fig_id", type=int, metavar="ID")
@click.option("--lam-min", type=float, default=None, help="Lower end of the shape sweep.")
@click.option("--lam-max", type=float, default=None, help="Upper end of the shape sweep.")
@click.option("--steps", type=int, default=200, show_default=True,
              help="Number of sweep points.")
@click.pass_context
def cmd_figure(ctx: click.Context, fig_id: int, lam_min: float, lam_max: float,
               steps: int) -> None:
    """Data table (lam, value) for one of the catalog entropy curves 1-6."""
    if fig_id not in _FIGURES:
        raise click.UsageError(f"unknown figure id {fig_id}; expected 1..6")
    if steps < 2:
        raise click.UsageError("--steps must be at least 2")
    family, which, default_lo, default_hi = _FIGURES[fig_id]
    lo = default_lo if lam_min is None else lam_min
    hi = default_hi if lam_max is None else lam_max
    if not 0.0 < lo < hi:
        raise click.UsageError(f"bad sweep range [{lo}, {hi}]")
    if which == "h_hat" and family == "student" and lo <= 2.0:
        raise click.UsageError("this curve is only defined for lam > 2")
    rows = []
    for i in range(steps):
        lam = lo + (hi - lo) * i / (steps - 1)
        fam = laws.Gamma(lam=lam, a=1.0) if family == "gamma" else laws.Student(lam=lam, a=1.0)
        rows.append((lam, entropy.catalog_closed_forms(fam, which)))
    _emit_table(ctx, ["lam", "value"], rows)


if __name__ == "__main__":
    main()
