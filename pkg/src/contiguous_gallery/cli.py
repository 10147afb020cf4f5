"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 unreadable or invalid
input, 3 no certificate within the step cap.  Data goes to standard output
(or ``--out``); diagnostics go to standard error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .errors import CapExhausted, GalleryError, InputError
from .exact_num import rational
from .greedy_solver import solution_from_document, solve
from .polygon_model import BoundaryPoint, Polygon, parse_polygon
from .render import render_svg
from .restricted_variants import solve_guard_restricted, solve_interval_restricted
from .verify_bench import (CSV_FIELDS, bench_revolutions, random_polygon, rows_to_csv, summarize,
                           verify_chains)

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

MODES = ("unrestricted", "interval-vertex", "guard-vertex")


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _read_polygon(path: str) -> Polygon:
    try:
        return parse_polygon(Path(path).read_text())
    except OSError as exc:
        _fail(f"cannot read {path}: {exc.strerror}", EXIT_INPUT)
    except InputError as exc:
        _fail(f"{path}: {exc}", EXIT_INPUT)


def _read_solution(path: str):
    try:
        return solution_from_document(Path(path).read_text())
    except OSError as exc:
        _fail(f"cannot read {path}: {exc.strerror}", EXIT_INPUT)
    except InputError as exc:
        _fail(f"{path}: {exc}", EXIT_INPUT)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=not text.endswith("\n"))
    else:
        Path(out).write_text(text)


def _parse_start(text: str, poly: Polygon) -> BoundaryPoint:
    try:
        edge, s = text.split(",")
        bp = BoundaryPoint(int(edge), rational(s.strip()))
    except (ValueError, InputError):
        _fail(f'--start expects "edge,s" such as "3,1/2", got {text!r}', EXIT_INPUT)
    if not (0 <= bp.edge < poly.n and 0 <= bp.s < 1):
        _fail(f"--start {text} is not a boundary point of this polygon", EXIT_INPUT)
    return bp


@click.group()
def cli() -> None:
    """Partition a polygon boundary into the fewest chains each seen by one guard."""


@cli.command("solve")
@click.argument("polygon", type=click.Path(dir_okay=False))
@click.option("--start", default=None, help='Start point "edge,s" for the greedy sequence.')
@click.option("--mode", type=click.Choice(MODES), default="unrestricted", show_default=True)
@click.option("--cap-constant", type=int, default=8, show_default=True,
              help="Step cap is this constant times k^2 n^3.")
@click.option("--method", type=click.Choice(("ref", "tangent")), default="ref", show_default=True,
              help="Last-visible-point method used by the greedy steps.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cmd_solve(polygon, start, mode, cap_constant, method, out) -> None:
    """Solve POLYGON and write the solution JSON."""
    poly = _read_polygon(polygon)
    try:
        if mode == "unrestricted":
            x0 = _parse_start(start, poly) if start else None
            sol = solve(poly, start=x0, cap_constant=cap_constant, method=method)
        elif mode == "interval-vertex":
            sol = solve_interval_restricted(poly)
        else:
            sol = solve_guard_restricted(poly)
    except CapExhausted as exc:
        _fail(str(exc), EXIT_CAP)
    except GalleryError as exc:
        _fail(str(exc), EXIT_INPUT)
    _emit(sol.to_json() + "\n", out)


@cli.command("verify")
@click.argument("polygon", type=click.Path(dir_okay=False))
@click.argument("solution", type=click.Path(dir_okay=False))
def cmd_verify(polygon, solution) -> None:
    """Check that SOLUTION partitions the boundary of POLYGON into guarded chains."""
    poly = _read_polygon(polygon)
    sol = _read_solution(solution)
    report = verify_chains(poly, sol.chains)
    if not report.ok:
        for v in report.violations:
            click.echo(v, err=True)
        sys.exit(EXIT_VERIFY)
    click.echo(f"ok: {sol.size} chains")


@cli.command("render")
@click.argument("polygon", type=click.Path(dir_okay=False))
@click.argument("solution", type=click.Path(dir_okay=False), required=False)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cmd_render(polygon, solution, out) -> None:
    """Draw POLYGON, and SOLUTION if given, as SVG."""
    poly = _read_polygon(polygon)
    chains = None
    if solution is not None:
        sol = _read_solution(solution)
        report = verify_chains(poly, sol.chains, spot_checks=False)
        bad = [v for v in report.violations if not v.startswith("visibility")]
        if bad:
            _fail(f"solution does not fit the polygon: {bad[0]}", EXIT_INPUT)
        chains = sol.chains
    _emit(render_svg(poly, chains), out)


@cli.command("gen")
@click.argument("n", type=int)
@click.argument("seed", type=int)
def cmd_gen(n, seed) -> None:
    """Random simple polygon with N vertices, deterministic in SEED."""
    try:
        poly = random_polygon(n, seed)
    except (ValueError, GalleryError) as exc:
        _fail(str(exc), EXIT_INPUT)
    click.echo(poly.to_json())


@cli.command("bench")
@click.option("--trials", type=int, default=100, show_default=True)
@click.option("--n-min", type=int, default=6, show_default=True)
@click.option("--n-max", type=int, default=12, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--workers", type=int, default=1, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cmd_bench(trials, n_min, n_max, seed, workers, out) -> None:
    """Revolutions until a certificate on random non-star-shaped polygons (CSV)."""
    if not 3 <= n_min <= n_max:
        _fail("need 3 <= n-min <= n-max", EXIT_INPUT)
    rows = bench_revolutions(trials, (n_min, n_max), seed, workers=workers)
    _emit(rows_to_csv(rows), out)
    click.echo(json.dumps(summarize(rows)), err=True)


main = cli

__all__ = ["cli", "main", "CSV_FIELDS"]

if __name__ == "__main__":
    main()
