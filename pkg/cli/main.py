"""
pcfu CLI

Command-line interface for evaluating the parabolic cylinder function U(a,z)
and checking its accuracy.

Commands:
    pcfu eval       Evaluate U(a,z) at one point
    pcfu map        Write a recurrence or method-agreement map over a grid
    pcfu selftest   Run a seeded recurrence sweep
    pcfu tables     Show or rebuild the cached coefficient table

Exit codes:
    0 success, 1 malformed flags, 2 domain or range error,
    3 non-convergence, 4 unwritable output, 5 self-test failure

Usage:
    $ pcfu eval --a=-0.5 --z 1,0
    $ pcfu map --grid=-30,30,50:0,30,50 --check recurrence --out map.csv
    $ pcfu selftest --samples 10000 --seed 42
"""

import csv
import io
import json
import logging
import math
import sys
from pathlib import Path
from typing import Optional

import click
import typer
from rich import box
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn
from rich.table import Table

from engine import __version__
from engine.config import load_settings
from engine.dispatch import u_pcf_strict
from engine.errors import DomainError, NonConvergenceError, PCFError
from engine.models import (
    AgreementRow,
    EvalOptions,
    GridSpec,
    MethodTag,
    OutputRecord,
    SweepConfig,
    SweepDomain,
    SweepReport,
)
from engine.storage import DEFAULT_CACHE_PATH, FORMAT_VERSION, TableCache
from engine.uniform import build_coeff_tables
from engine.uniform.coefficients import N_NODES, S_MAX
from engine.validate import ResidualSample, method_agreement_map, recurrence_map, run_sweep

# Initialize Typer app and Rich consoles
app = typer.Typer(
    name="pcfu",
    help="pcfu: the parabolic cylinder function U(a,z) for real a and complex z",
    add_completion=False,
)
console = Console()
err_console = Console(stderr=True)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_NONCONVERGENCE = 3
EXIT_UNWRITABLE = 4
EXIT_SELFTEST = 5

METHOD_CHOICES = {
    "auto": None,
    "maclaurin": MethodTag.MACLAURIN,
    "integral": MethodTag.INTEGRAL,
    "airy": MethodTag.AIRY,
    "poincare": MethodTag.POINCARE,
}
RECURRENCE_FIELDS = OutputRecord.FIELDS + ("residual",)


def _fail(message: str, code: int) -> typer.Exit:
    """Print an error and return the Exit to raise."""
    err_console.print(f"[bold red]Error:[/bold red] {message}")
    return typer.Exit(code)


def _choice(value: str, allowed: tuple[str, ...], flag: str) -> str:
    """Validate a string option against its allowed values."""
    lowered = value.strip().lower()
    if lowered not in allowed:
        raise _fail(f"{flag} must be one of {', '.join(allowed)}, got '{value}'", EXIT_USAGE)
    return lowered


def _parse_method(value: str, flag: str = "--method") -> Optional[MethodTag]:
    return METHOD_CHOICES[_choice(value, tuple(METHOD_CHOICES), flag)]


def _parse_complex(text: str) -> complex:
    """Parse "re,im" (or a lone real part) into a complex number."""
    parts = [p.strip() for p in text.split(",")]
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise _fail(f"--z expects 're,im', got '{text}'", EXIT_USAGE)


def _options(
    tol: float, method: Optional[MethodTag], airy_threshold: float, maclaurin: bool
) -> EvalOptions:
    try:
        return EvalOptions(
            tol=tol, method=method, use_maclaurin=maclaurin, airy_threshold=airy_threshold
        )
    except DomainError as exc:
        raise _fail(str(exc), EXIT_USAGE) from exc


def _exit_code(exc: PCFError) -> int:
    if isinstance(exc, NonConvergenceError):
        return EXIT_NONCONVERGENCE
    return EXIT_DOMAIN


def _log_level(explicit: Optional[str]) -> int:
    if explicit is None:
        return load_settings().log_level_value
    value = logging.getLevelName(explicit.upper())
    if not isinstance(value, int):
        raise _fail(f"unknown log level '{explicit}'", EXIT_USAGE)
    return value


def _configure_logging(level: int) -> None:
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


def _progress(*extra) -> Progress:
    return Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        *extra,
        console=err_console,
    )


@app.command("eval")
def eval_point(
    a: float = typer.Option(..., "--a", help="Order a (real)"),
    z: str = typer.Option(..., "--z", help="Argument z as 're,im'"),
    method: str = typer.Option(
        "auto", "--method", "-m", help="auto, maclaurin, integral, airy or poincare"
    ),
    output_format: str = typer.Option("csv", "--format", "-f", help="csv or json"),
    tol: float = typer.Option(1e-15, "--tol", help="Relative tolerance"),
    airy_threshold: float = typer.Option(
        20.0, "--airy-threshold", help="Use the Airy-type expansion above this |a|"
    ),
    maclaurin: bool = typer.Option(
        True, "--maclaurin/--no-maclaurin", help="Allow the Maclaurin series for small |z|"
    ),
) -> None:
    """
    Evaluate U(a,z) at one point.

    Prints one record: a, z, U, the method used, an error estimate and flags.
    """
    zvalue = _parse_complex(z)
    fmt = _choice(output_format, ("csv", "json"), "--format")
    opts = _options(tol, _parse_method(method), airy_threshold, maclaurin)

    try:
        result = u_pcf_strict(a, zvalue, opts)
    except PCFError as exc:
        raise _fail(str(exc), _exit_code(exc)) from exc

    record = OutputRecord.from_result(a, zvalue, result)
    if fmt == "json":
        typer.echo(json.dumps(record.as_json()))
        return
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=OutputRecord.FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerow(record.as_row())
    typer.echo(buffer.getvalue(), nl=False)


@app.command("map")
def map_grid(
    grid: str = typer.Option(..., "--grid", help="a_min,a_max,na:z_min,z_max,nz"),
    out: Path = typer.Option(..., "--out", "-o", help="CSV file to write"),
    check: str = typer.Option("recurrence", "--check", help="recurrence or agreement"),
    m1: str = typer.Option("airy", "--m1", help="First method of an agreement map"),
    m2: str = typer.Option("integral", "--m2", help="Second method of an agreement map"),
    arg: float = typer.Option(0.0, "--arg", help="Argument of z on the grid, in radians"),
    tol: float = typer.Option(1e-15, "--tol", help="Relative tolerance"),
    airy_threshold: float = typer.Option(20.0, "--airy-threshold"),
    maclaurin: bool = typer.Option(True, "--maclaurin/--no-maclaurin"),
) -> None:
    """
    Write an accuracy map over an (a, |z|) grid.

    recurrence: one row per point with U and its recurrence residual.
    agreement: one row per point with the relative difference of two methods.
    """
    kind = _choice(check, ("recurrence", "agreement"), "--check")
    try:
        spec = GridSpec.parse(grid, arg)
    except DomainError as exc:
        raise _fail(str(exc), EXIT_USAGE) from exc

    first = _parse_method(m1, "--m1")
    second = _parse_method(m2, "--m2")
    if kind == "agreement" and (first is None or second is None):
        raise _fail("--m1 and --m2 must name a method, not auto", EXIT_USAGE)
    opts = _options(tol, None, airy_threshold, maclaurin)
    fields = AgreementRow.FIELDS if kind == "agreement" else RECURRENCE_FIELDS

    try:
        handle = open(out, "w", newline="", encoding="utf-8")
    except OSError as exc:
        raise _fail(f"cannot write {out}: {exc}", EXIT_UNWRITABLE) from exc

    worst = 0.0
    failed = 0
    with handle, _progress(BarColumn(), TextColumn("{task.completed}/{task.total}")) as progress:
        task = progress.add_task(f"Computing {kind} map...", total=spec.size)
        writer = csv.DictWriter(handle, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        if kind == "agreement":
            for row in method_agreement_map(spec, first, second, tol):
                writer.writerow(row.as_row())
                if math.isnan(row.reldiff):
                    failed += 1
                else:
                    worst = max(worst, row.reldiff)
                progress.advance(task)
        else:
            for a, z, sample, message in recurrence_map(spec, opts):
                writer.writerow(_recurrence_row(a, z, sample, message))
                if sample is None:
                    failed += 1
                else:
                    worst = max(worst, sample.residual)
                progress.advance(task)

    summary = Table(box=box.SIMPLE, show_header=False)
    summary.add_column("Label", style="dim")
    summary.add_column("Value", style="bold")
    summary.add_row("Rows written", str(spec.size))
    summary.add_row("Largest " + ("reldiff" if kind == "agreement" else "residual"), f"{worst:.3e}")
    summary.add_row("Failed points", str(failed))
    summary.add_row("Output", str(out))
    err_console.print(
        Panel(summary, title="[bold green]✓ Map written[/bold green]", border_style="green")
    )


def _recurrence_row(
    a: float, z: complex, sample: Optional[ResidualSample], message: str
) -> dict[str, str]:
    """One CSV row of a recurrence map; failed points carry nan and the error text."""
    if sample is None:
        nan = math.nan
        row = OutputRecord(a, z, complex(nan, nan), "error", nan, (message,)).as_row()
        row["residual"] = repr(nan)
        return row
    row = OutputRecord.from_result(a, z, sample.results[1]).as_row()
    row["flags"] = ";".join(sorted(flag.value for flag in sample.flags))
    row["residual"] = repr(sample.residual)
    return row


@app.command()
def selftest(
    samples: int = typer.Option(10_000, "--samples", "-n", help="Number of random points"),
    seed: int = typer.Option(0, "--seed", "-s", help="Seed of the random generator"),
    domain: str = typer.Option("full", "--domain", help="principal or full"),
    method: str = typer.Option(
        "auto", "--method", "-m", help="Evaluate every point with one method"
    ),
    limit: float = typer.Option(5e-13, "--limit", help="Largest acceptable residual"),
) -> None:
    """
    Run a seeded recurrence sweep and report the residual distribution.

    Exits with 5 when any point fails or the largest residual exceeds --limit.
    Points near zeros of U are listed separately and do not count.
    """
    sweep_domain = SweepDomain(_choice(domain, ("principal", "full"), "--domain"))
    try:
        cfg = SweepConfig(
            n_samples=samples,
            seed=seed,
            domain=sweep_domain,
            method_override=_parse_method(method),
        )
    except DomainError as exc:
        raise _fail(str(exc), EXIT_USAGE) from exc

    with _progress(BarColumn(), TextColumn("{task.completed}/{task.total}")) as progress:
        task = progress.add_task("Sweeping...", total=cfg.n_samples)
        report = run_sweep(cfg, progress=lambda done: progress.update(task, completed=done))

    _print_report(report, cfg)
    if not report.passed(limit):
        console.print(f"\n[bold red]✗ Self-test failed[/bold red] (limit {limit:.1e})")
        raise typer.Exit(EXIT_SELFTEST)
    console.print(f"\n[bold green]✓ Self-test passed[/bold green] (limit {limit:.1e})")


@app.command()
def tables(
    path: Optional[Path] = typer.Option(
        None,
        "--path",
        "-p",
        help="Cache file (default: PCFU_TABLE_CACHE or .pcfu/coeff-tables.bin)",
    ),
    rebuild: bool = typer.Option(False, "--rebuild", help="Rebuild the table and write it"),
) -> None:
    """
    Show the status of the coefficient-table cache, or rebuild it.
    """
    if path is None:
        path = load_settings().table_cache_path or Path(DEFAULT_CACHE_PATH)
    cache = TableCache(path)

    if rebuild:
        with _progress() as progress:
            task = progress.add_task("Building coefficient table...", total=None)
            built = build_coeff_tables(S_MAX, N_NODES)
            progress.update(task, description="Writing cache...")
            try:
                cache.save(built.contour_nodes, built.ahat_vals, built.bhat_vals)
            except OSError as exc:
                raise _fail(f"cannot write {cache.path}: {exc}", EXIT_UNWRITABLE) from exc

    header = cache.read_header()
    table = Table(title="Coefficient Table Cache", box=box.ROUNDED)
    table.add_column("Property", style="cyan")
    table.add_column("Value", justify="right")
    table.add_row("Path", str(cache.path))
    table.add_row("Present", "yes" if cache.exists else "no")
    if header is not None:
        version, n_nodes, s_max = header
        current = header == (FORMAT_VERSION, N_NODES, S_MAX)
        table.add_row("Format version", str(version))
        table.add_row("Contour nodes", str(n_nodes))
        table.add_row("Orders s_max", str(s_max))
        table.add_row("Status", "[green]current[/green]" if current else "[yellow]stale[/yellow]")
    console.print(table)


# Helper functions for output formatting

def _print_report(report: SweepReport, cfg: SweepConfig) -> None:
    """Print the sweep summary and the worst points."""
    table = Table(title="Recurrence Sweep", box=box.ROUNDED)
    table.add_column("Statistic", style="cyan")
    table.add_column("Value", justify="right")
    table.add_row("Samples", str(report.n_samples))
    table.add_row("Seed", str(cfg.seed))
    table.add_row("Domain", cfg.domain.value)
    table.add_row("Max residual", f"{report.max_residual:.3e}")
    for q, value in report.quantiles.items():
        table.add_row(f"{q:g}% quantile", f"{value:.3e}")
    table.add_row(f"Fraction > {report.threshold:.0e}", f"{report.frac_above:.4f}")
    table.add_row("Near zeros of U", str(len(report.flagged_points)))
    table.add_row("Failures", str(len(report.failures)))
    for name, count in sorted(report.method_counts.items()):
        table.add_row(f"  {name}", str(count))
    console.print(table)

    if report.worst_points:
        worst = Table(title="Worst Points", box=box.ROUNDED)
        worst.add_column("a", justify="right")
        worst.add_column("z", justify="right")
        worst.add_column("Residual", justify="right")
        worst.add_column("Method")
        worst.add_column("Flags", style="dim")
        for point in report.worst_points:
            worst.add_row(
                f"{point.a:.6f}",
                f"{point.z.real:.6f}{point.z.imag:+.6f}i",
                f"{point.residual:.3e}",
                point.method,
                "|".join(point.flags) or "-",
            )
        console.print(worst)

    for a, z, message in report.failures[:5]:
        console.print(f"   • [red]a={a:.6f}, z={z:.6f}[/red]: {message}")
    if len(report.failures) > 5:
        console.print(f"   ... and {len(report.failures) - 5} more")


def _version_callback(value: bool) -> None:
    if value:
        console.print(f"[bold]pcfu[/bold] version {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        False,
        "--version",
        "-v",
        help="Show version and exit",
        callback=_version_callback,
        is_eager=True,
    ),
    log_level: Optional[str] = typer.Option(
        None, "--log-level", help="DEBUG, INFO, WARNING or ERROR (default: PCFU_LOG_LEVEL)"
    ),
) -> None:
    """
    pcfu: the parabolic cylinder function U(a,z) for real a and complex z.
    """
    _configure_logging(_log_level(log_level))


def run() -> None:
    """Console-script entry point; usage errors exit with 1."""
    try:
        code = app(standalone_mode=False)
    except click.UsageError as exc:
        exc.show()
        sys.exit(EXIT_USAGE)
    except click.Abort:
        sys.exit(EXIT_USAGE)
    sys.exit(code if isinstance(code, int) else EXIT_OK)


if __name__ == "__main__":
    run()
