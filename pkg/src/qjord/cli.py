"""Command-line interface for the Jordanian quantum-algebra engine."""

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

import click
from rich.table import Table

from qjord.catalog import selectors
from qjord.contraction import FAMILIES, ROUTES, parse_pair, r_matrix
from qjord.core.errors import QjordError
from qjord.core.scalars import ScalarContext
from qjord.dsl.builtins import builtin_names
from qjord.dsl.serializer import serialize
from qjord.helpers.export import FORMATS, export_matrix, render_reports, write_output
from qjord.helpers.log import init_logging, terminal
from qjord.maps import MAPS
from qjord.settings import EXPORT_FORMAT, H_VALUE, OUTPUT_DIR, ROOT_DEGREE, prepare_directories
from qjord.verify import SUITES, SuiteOptions, load_ledger, run_suite
from qjord.verify.suites import load_presentation

log = logging.getLogger("qjord")


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Log at DEBUG level.")
def app(verbose: bool) -> None:
    """qjord — exact Jordanian quantum algebras, R-matrices and their identities."""
    prepare_directories()
    init_logging(logging.DEBUG if verbose else None)


# ── Helpers ─────────────────────────────────────────────────────


@contextmanager
def _engine_errors() -> Iterator[None]:
    """Print engine errors in red and leave with status 2."""
    try:
        yield
    except QjordError as exc:
        log.debug("engine error", exc_info=True)
        terminal.print(f"{type(exc).__name__}: {exc}", style="red", markup=False)
        raise SystemExit(2) from exc


def _context(h: str | None, root_degree: int | None) -> ScalarContext:
    h_value = Fraction(h) if h is not None else H_VALUE
    return ScalarContext(root_degree or ROOT_DEGREE, h_value)


def _parse_h(ctx, param, value: str | None) -> str | None:
    if value is None:
        return None
    try:
        Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"{value!r} is not a rational number") from None
    return value


def _emit(text: str, out: str | None) -> None:
    if out:
        path = write_output(text, Path(out))
        terminal.print(f"[green]Wrote {path}[/green]")
    else:
        click.echo(text, nl=False)


def _scalar_options(fn):
    fn = click.option("--h", "h", default=None, callback=_parse_h,
                      help="Specialise h to a rational number (default: formal).")(fn)
    fn = click.option("--root-degree", type=int, default=None,
                      help="d in q = s^d (default from config.yml).")(fn)
    return fn


def _output_options(fn):
    fn = click.option("--out", "-o", default=None, type=click.Path(dir_okay=False),
                      help="Write to this file instead of stdout.")(fn)
    fn = click.option("--format", "fmt", type=click.Choice(FORMATS), default=None,
                      help="Output format (default from config.yml).")(fn)
    return fn


# ── CLI commands ───────────────────────────────────────────────


@app.command()
@click.argument("suites", nargs=-1, required=True)
@click.option("--rep", default=None, help="Representation selector, e.g. sl2:spin-1.")
@click.option("--reps", default=None, help="Tensor pair for R-matrix suites, e.g. 1/2,1.")
@click.option("--map", "map_key", default=None, help="Deformation map, e.g. slN:2.")
@click.option("--variant", default=None, help="Map or twist variant, e.g. hdiag.")
@_scalar_options
@_output_options
def verify(
    suites: tuple[str, ...], rep: str | None, reps: str | None, map_key: str | None,
    variant: str | None, h: str | None, root_degree: int | None, out: str | None,
    fmt: str | None,
) -> None:
    """Run verification suites; `all` runs every registered suite."""
    names = list(SUITES) if suites == ("all",) else list(suites)
    fmt = fmt or "table"
    with _engine_errors():
        options = SuiteOptions(
            ctx=_context(h, root_degree), ledger=load_ledger(), rep=rep, reps=reps,
            map_key=map_key, variant=variant,
        )
        reports = [run_suite(name, options) for name in names]

    _emit(render_reports(reports, fmt), out)

    failed = [r.suite for r in reports if not r.ok]
    if failed:
        terminal.print(f"[red]Failing identities in: {', '.join(failed)}[/red]")
        raise SystemExit(1)


@app.command()
@click.argument("family")
@click.option("--reps", default=None, help="Tensor pair, e.g. 1/2,1 (default per family).")
@_scalar_options
@_output_options
def contract(
    family: str, reps: str | None, h: str | None, root_degree: int | None,
    out: str | None, fmt: str | None,
) -> None:
    """Contract R_q to R_h for FAMILY and export the limit."""
    with _engine_errors():
        ctx = _context(h, root_degree)
        result = r_matrix(family, parse_pair(family, reps), ctx, "contracted")
        text = export_matrix(result, fmt or EXPORT_FORMAT)
    _emit(text, out)


@app.command("show-r")
@click.argument("family")
@click.option("--reps", default=None, help="Tensor pair, e.g. spin-1/2,spin-1.")
@click.option("--route", type=click.Choice(ROUTES), default="contracted")
@click.option("--variant", default="", help="Route variant (universal exponent, rq display).")
@_scalar_options
def show_r(
    family: str, reps: str | None, route: str, variant: str, h: str | None,
    root_degree: int | None,
) -> None:
    """Print an R-matrix as a table; the rq route shows entries before the limit."""
    with _engine_errors():
        ctx = _context(h, root_degree)
        result = r_matrix(family, parse_pair(family, reps), ctx, route, variant)
        text = export_matrix(result, "table", require_limit=route != "rq")
    click.echo(text, nl=False)


@app.command()
@click.argument("family")
@click.option("--reps", default=None, help="Tensor pair, e.g. 1/2,1.")
@click.option("--route", type=click.Choice(ROUTES), default="contracted")
@click.option("--variant", default="", help="Route variant.")
@_scalar_options
@_output_options
def export(
    family: str, reps: str | None, route: str, variant: str, h: str | None,
    root_degree: int | None, out: str | None, fmt: str | None,
) -> None:
    """Write one R-matrix of FAMILY (default into the output directory)."""
    with _engine_errors():
        ctx = _context(h, root_degree)
        pair = parse_pair(family, reps)
        result = r_matrix(family, pair, ctx, route, variant)
        fmt = fmt or EXPORT_FORMAT
        text = export_matrix(result, fmt)
    if out is None:
        stem = f"{family}_{pair[0]}_{pair[1]}_{route}".replace("/", "-").replace("=", "")
        out = str(OUTPUT_DIR / f"{stem}.{'json' if fmt == 'json' else 'txt'}")
    _emit(text, out)


@app.command("dump-builtin")
@click.argument("name")
@click.option("--out", "-o", default=None, type=click.Path(dir_okay=False))
def dump_builtin(name: str, out: str | None) -> None:
    """Print a built-in presentation (or a .qalg file) in canonical form."""
    with _engine_errors():
        text = serialize(load_presentation(name))
    _emit(text, out)


@app.command()
def catalog() -> None:
    """List representations, presentations, maps, families and suites."""
    tbl = Table(title="Catalog")
    tbl.add_column("Kind", style="bold", width=14)
    tbl.add_column("Entries")
    tbl.add_row("reps", ", ".join(selectors()))
    tbl.add_row("presentations", ", ".join(builtin_names()))
    tbl.add_row("maps", ", ".join(
        f"{key} ({', '.join(m.variants)})" if len(m.variants) > 1 else key
        for key, m in MAPS.items()
    ))
    tbl.add_row("families", ", ".join(FAMILIES))
    tbl.add_row("routes", ", ".join(ROUTES))
    terminal.print(tbl)

    suites = Table(title="Suites")
    suites.add_column("Suite", style="bold")
    suites.add_column("Checks")
    for key, suite in SUITES.items():
        suites.add_row(key, suite.summary)
    terminal.print(suites)
