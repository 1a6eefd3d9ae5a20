"""CLI commands for asua."""

import json
import math
import sys
from contextlib import contextmanager
from dataclasses import asdict
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterator

import typer
from loguru import logger
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from asua import __logo__, __version__
from asua.errors import AsuaError, BadSpec
from asua.utils.helpers import format_rational

app = typer.Typer(
    name="asua",
    help=f"{__logo__} asua - expected steps until absorption for random walks on graphs",
    no_args_is_help=True,
)

console = Console()
err_console = Console(stderr=True)

# Exit code when `verify` finds a closed form disagreeing with the solver.
EXIT_MISMATCH = 1
EXIT_USAGE = 2
FORMATS = ("tsv", "json")


def _stderr_sink(message: str) -> None:
    sys.stderr.write(message)


@contextmanager
def _failures() -> Iterator[None]:
    """Turn library errors into a red message and their documented exit code."""
    try:
        yield
    except AsuaError as e:
        err_console.print(f"[red]Error:[/red] {escape(str(e))}")
        raise typer.Exit(e.exit_code)
    except ValueError as e:
        err_console.print(f"[red]Error:[/red] {escape(str(e))}")
        raise typer.Exit(EXIT_USAGE)


def _json_default(value: Any) -> Any:
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else format_rational(value)
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def _echo_json(data: Any) -> None:
    typer.echo(json.dumps(data, indent=2, default=_json_default))


def _output_format(ctx: typer.Context, override: str | None = None) -> str:
    """The command's own ``--format`` wins over the global one."""
    fmt = override or (ctx.obj or {}).get("format", "tsv")
    if fmt not in FORMATS:
        err_console.print(f"[red]Error:[/red] unknown format {escape(fmt)!r}")
        raise typer.Exit(EXIT_USAGE)
    return fmt


def _format_option():
    return typer.Option(None, "--format", "-f", help="tsv or json (overrides the global flag)")


def version_callback(value: bool):
    if value:
        console.print(f"{__logo__} asua v{__version__}")
        raise typer.Exit()


@app.callback()
def main(
    ctx: typer.Context,
    version: bool = typer.Option(
        None, "--version", "-v", callback=version_callback, is_eager=True
    ),
    verbose: bool = typer.Option(False, "--verbose", "-V", help="Debug logging on stderr"),
    fmt: str = typer.Option(None, "--format", "-f", help="Output format: tsv or json"),
):
    """asua - expected steps until absorption for random walks on graphs."""
    from asua.config.loader import load_config

    config = load_config()
    ctx.obj = {"format": fmt or config.output.format}
    _output_format(ctx)

    level = "DEBUG" if verbose else config.log_level.upper()
    logger.remove()
    logger.add(_stderr_sink, level=level, format="{time:HH:mm:ss} | {level: <7} | {message}")
    logger.enable("asua")


# ============================================================================
# Solve
# ============================================================================


@app.command()
def solve(
    ctx: typer.Context,
    path: Path = typer.Argument(..., exists=True, dir_okay=False, help="Edge-list or matrix file"),
    use_float: bool = typer.Option(False, "--float", help="Double-precision LU solve"),
    check: bool = typer.Option(False, "--check", help="Also print the max ASUA-equation residual"),
    fmt: str = _format_option(),
    digits: int = typer.Option(None, "--digits", help="Decimal places"),
):
    """Solve the ASUA vector of a graph or chain."""
    from asua.chain import (
        as_chain,
        asua_equation_residuals,
        asua_records,
        format_asua,
        read_instance,
        solve_asua,
        solve_asua_float,
    )
    from asua.config.loader import load_config

    config = load_config()
    fmt = _output_format(ctx, fmt)
    digits = config.output.decimal_digits if digits is None else digits

    with _failures():
        tm = as_chain(read_instance(path))
        if use_float:
            result = solve_asua_float(tm)
            if result.residual > config.solver.float_tolerance:
                logger.warning(f"Float residual {result.residual:.3e} exceeds tolerance")
            residual = result.residual if check else None
            _print_float(result.as_list(), tm.absorbing, fmt, digits, residual)
            return

        if len(tm.transient) > config.solver.exact_order_limit:
            logger.warning(
                f"{len(tm.transient)} transient states; exact solve may be slow, try --float"
            )
        t = solve_asua(tm)
        worst = None
        if check:
            residuals = asua_equation_residuals(tm, t)
            worst = max((abs(r) for r in residuals.values()), default=Fraction(0))
        if fmt == "json" and check:
            _echo_json({"values": asua_records(t, digits), "max_residual": worst})
            return
        typer.echo(format_asua(t, fmt, digits))
        if check:
            typer.echo(f"max_residual\t{worst}")


def _print_float(
    values: list[float],
    absorbing: frozenset[int],
    fmt: str,
    digits: int,
    residual: float | None = None,
) -> None:
    if fmt == "json":
        records = [
            {"vertex": v + 1, "absorbing": v in absorbing, "value": x}
            for v, x in enumerate(values)
        ]
        _echo_json(records if residual is None else {"values": records, "max_residual": residual})
        return
    for v, x in enumerate(values):
        typer.echo(f"v{v + 1}\t{x:.{digits}f}")
    if residual is not None:
        typer.echo(f"max_residual\t{residual:.3e}")


# ============================================================================
# Closed forms
# ============================================================================


def _int_list(text: str) -> list[int]:
    from asua.utils.helpers import parse_int_list

    return parse_int_list(text.strip().strip("{}()"))


def _family_spec(family: str, params: list[str]):
    """Split ``params`` into (SeaDragonSpec or order, trailing index or None)."""
    from asua.formulas import SeaDragonSpec

    arity = {"path": 1, "cycle": 1, "sd1": 2, "sd2": 3, "sd3": 3, "sd4": 3}
    if family not in arity:
        raise BadSpec(f"unknown family {family!r}; expected one of {', '.join(arity)} or stem")
    need = arity[family]
    if len(params) not in (need, need + 1):
        raise BadSpec(f"{family} takes {need} parameter(s) plus an optional index")
    head, rest = params[:need], params[need:]
    index = int(rest[0]) if rest else None
    n = int(head[0])
    if family in ("path", "cycle"):
        return n, index
    if family == "sd1":
        return SeaDragonSpec.sd1(n, _int_list(head[1])), index
    k = int(head[1])
    if family == "sd2":
        return SeaDragonSpec.sd2(n, k, int(head[2])), index
    if family == "sd3":
        return SeaDragonSpec.sd3(n, k, int(head[2])), index
    return SeaDragonSpec.sd4(n, k, _int_list(head[2])), index


@app.command()
def formula(
    ctx: typer.Context,
    family: str = typer.Argument(..., help="path, cycle, stem, sd1, sd2, sd3 or sd4"),
    params: list[str] = typer.Argument(..., help="Family parameters, then the spine index i"),
    all_: bool = typer.Option(False, "--all", "-a", help="Every spine index 1..n-1"),
    printed_constant: bool = typer.Option(
        False, "--sd23-printed-constant", help="SD2/SD3 with the (k+1)^2 prefix constant"
    ),
    fmt: str = _format_option(),
):
    """
    Evaluate a closed form.

    Examples: `cycle 6 3`, `sd1 5 2,3 --all`, `sd4 6 3 1,2 2`, `stem 3 1`.
    """
    from asua.formulas import cycle_asua, path_asua, spine_asua, stem_offset

    as_json = _output_format(ctx, fmt) == "json"
    with _failures():
        if family == "stem":
            if len(params) != 2:
                raise BadSpec("stem takes a length l and an index j")
            length, j = int(params[0]), int(params[1])
            offset = stem_offset(length, j)
            if as_json:
                _echo_json({"family": "stem", "length": length, "index": j, "value": offset})
            else:
                typer.echo(str(offset))
            return

        subject, index = _family_spec(family, params)
        if family in ("path", "cycle"):
            n = subject
            fn = path_asua if family == "path" else cycle_asua

            def value(i: int) -> int:
                return fn(n, i)
        else:
            n = subject.n

            def value(i: int) -> int:
                return spine_asua(subject, i, printed_constant)

        if all_:
            indices = range(1, n)
        elif index is None:
            raise BadSpec("give a spine index i or --all")
        else:
            indices = range(index, index + 1)
        values = [value(i) for i in indices]

    if as_json:
        _echo_json(
            {
                "family": family,
                "params": params,
                "values": [{"index": i, "value": v} for i, v in zip(indices, values)],
            }
        )
    else:
        typer.echo(" ".join(map(str, values)))


# ============================================================================
# Verify / Survey
# ============================================================================


@app.command()
def verify(
    ctx: typer.Context,
    family: str = typer.Argument(..., help="path, cycle, stem, sd1-sd4, identity, contraction, leaf, monotone, all"),
    n: str = typer.Option(None, "--n", help="Order range, e.g. 2..50"),
    d: str = typer.Option(None, "--d", help="Leaf count / stem length / stem mass range"),
    samples: int = typer.Option(None, "--samples", help="Random instances for the sampled families"),
    seed: int = typer.Option(None, "--seed", help="Seed for random families"),
    printed_constant: bool = typer.Option(
        False, "--sd23-printed-constant", help="Also count failures of the (k+1)^2 constant"
    ),
    float_check: bool = typer.Option(False, "--float-check", help="Track float-solver error"),
    fmt: str = _format_option(),
):
    """Check closed forms against the exact solver; exit 1 on any mismatch."""
    from asua.config.loader import load_config
    from asua.utils.helpers import parse_int_range
    from asua.verify import FAMILIES, verify_family

    as_json = _output_format(ctx, fmt) == "json"
    config = load_config()
    families = list(FAMILIES) if family == "all" else [family]
    with _failures():
        n_range = parse_int_range(n) if n else None
        d_range = parse_int_range(d) if d else None
        reports = [
            verify_family(
                name,
                n_range=n_range,
                d_range=d_range,
                printed_constant=printed_constant,
                float_check=float_check,
                samples=samples,
                seed=config.simulation.seed if seed is None else seed,
            )
            for name in families
        ]

    if as_json:
        _echo_json([{**asdict(report), "ok": report.ok} for report in reports])
        if any(not report.ok for report in reports):
            raise typer.Exit(EXIT_MISMATCH)
        return

    table = Table(title="Closed forms vs exact solve")
    table.add_column("Family", style="cyan")
    table.add_column("Instances", justify="right")
    table.add_column("Values", justify="right")
    table.add_column("Mismatches", justify="right")
    if printed_constant:
        table.add_column("(k+1)² refuted", justify="right")
    if float_check:
        table.add_column("Float rel. err", justify="right")
    table.add_column("Time", justify="right")

    for report in reports:
        status = "[green]0[/green]" if report.ok else f"[red]{report.mismatch_count}[/red]"
        row = [report.family, str(report.instances), str(report.values_checked), status]
        if printed_constant:
            row.append(
                f"{report.printed_refuted}/{report.printed_instances}"
                if report.printed_checked else "-"
            )
        if float_check:
            err = report.float_max_rel_error
            row.append("-" if err is None else f"{err:.2e}")
        row.append(f"{report.seconds:.2f}s")
        table.add_row(*row)
    console.print(table)

    for report in reports:
        for m in report.mismatches:
            console.print(
                f"[red]✗[/red] {escape(m.instance)} v{m.vertex}: "
                f"formula {m.expected}, solver {m.actual}"
            )
    if any(not report.ok for report in reports):
        raise typer.Exit(EXIT_MISMATCH)


@app.command()
def survey(
    ctx: typer.Context,
    n: str = typer.Option("3..8", "--n", help="Tree orders, e.g. 3..9 (at most 10)"),
    absorber: str = typer.Option(None, "--absorber", help="max, min, each or all"),
    trees: bool = typer.Option(True, "--trees/--no-trees", help="List every tree"),
    fmt: str = _format_option(),
):
    """Survey t_sigma and round-trip extremes over all trees of each order."""
    from asua.config.loader import load_config
    from asua.utils.helpers import parse_int_range
    from asua.verify import ABSORBER_CONVENTIONS, survey as run_survey

    as_json = _output_format(ctx, fmt) == "json"
    config = load_config()
    choice = absorber or config.survey.absorber
    if choice not in (*ABSORBER_CONVENTIONS, "all"):
        err_console.print(f"[red]Error:[/red] unknown absorber convention {escape(choice)!r}")
        raise typer.Exit(EXIT_USAGE)
    conventions = ABSORBER_CONVENTIONS if choice == "all" else (choice,)

    with _failures():
        orders = parse_int_range(n)
        if orders.stop - 1 > config.survey.max_order:
            raise BadSpec(f"survey order {orders.stop - 1} above max_order {config.survey.max_order}")
        reports = run_survey(orders, conventions)

    if as_json:
        records = [asdict(report) for report in reports]
        if not trees:
            for record in records:
                del record["trees"]
        _echo_json(records)
        return

    for report in reports:
        console.print(f"\n[bold]n = {report.order}[/bold]: {report.tree_count} tree(s)")
        if trees:
            table = Table()
            table.add_column("#", justify="right")
            table.add_column("Degrees")
            table.add_column("Kind")
            table.add_column("t_σ min", justify="right")
            table.add_column("t_σ max", justify="right")
            table.add_column("t′ max", justify="right")
            table.add_column("t′ diameter", justify="right")
            for row in report.trees:
                kind = "/".join(k for k, flag in (("star", row.is_star), ("path", row.is_path)) if flag)
                table.add_row(
                    str(row.index),
                    "".join(map(str, row.degrees)),
                    kind,
                    str(row.t_sigma_min),
                    str(row.t_sigma_max),
                    str(row.round_trip["max"]),
                    str(row.round_trip["diameter"]),
                )
            console.print(table)
        for label, extremes in (
            *((f"t_σ ({c})", e) for c, e in report.t_sigma.items()),
            *((f"t′ ({c})", e) for c, e in report.round_trip.items()),
        ):
            console.print(
                f"{label}: low {extremes.low} (trees {extremes.low_trees}, "
                f"star {'yes' if extremes.star_attains_low else 'no'}), "
                f"high {extremes.high} (trees {extremes.high_trees}, "
                f"path {'yes' if extremes.path_attains_high else 'no'})"
            )


# ============================================================================
# Simulate / Maze / Generate
# ============================================================================


@app.command()
def simulate(
    ctx: typer.Context,
    path: Path = typer.Argument(..., exists=True, dir_okay=False, help="Edge-list or matrix file"),
    start: int = typer.Option(..., "--start", "-s", help="Start vertex (1-based)"),
    walks: int = typer.Option(None, "--walks", "-w", help="Number of walks"),
    seed: int = typer.Option(None, "--seed", help="64-bit seed"),
    cap: int = typer.Option(None, "--cap", help="Step cap per walk"),
    workers: int = typer.Option(None, "--workers", help="Worker processes"),
    compare: bool = typer.Option(False, "--compare", help="Also print the exact value"),
    fmt: str = _format_option(),
):
    """Estimate ASUA by simulating random walks."""
    from asua.chain import as_chain, read_instance, solve_asua
    from asua.config.loader import load_config
    from asua.montecarlo import WalkConfig, simulate as run_walks

    as_json = _output_format(ctx, fmt) == "json"
    sim = load_config().simulation
    with _failures():
        tm = as_chain(read_instance(path))
        cfg = WalkConfig(
            start=start - 1,
            walk_count=sim.walks if walks is None else walks,
            seed=sim.seed if seed is None else seed,
            step_cap=sim.step_cap if cap is None else cap,
        )
        estimate = run_walks(tm, cfg, workers=sim.workers if workers is None else workers)
        exact = solve_asua(tm)[cfg.start] if compare else None

    if as_json:
        record = {
            "start": start,
            "walks": cfg.walk_count,
            "seed": cfg.seed,
            # NaN when every walk was capped
            "mean": None if math.isnan(estimate.mean) else estimate.mean,
            "stderr": None if math.isnan(estimate.stderr) else estimate.stderr,
            "completed": estimate.walks_completed,
            "capped": estimate.walks_capped,
        }
        if compare:
            record["exact"] = exact
            record["within_4_stderr"] = estimate.within(exact)
        _echo_json(record)
        return

    typer.echo(f"mean\t{estimate.mean:.6f}")
    typer.echo(f"stderr\t{estimate.stderr:.6f}")
    typer.echo(f"completed\t{estimate.walks_completed}")
    typer.echo(f"capped\t{estimate.walks_capped}")
    if compare:
        typer.echo(f"exact\t{exact}")
        typer.echo(f"within_4_stderr\t{'yes' if estimate.within(exact) else 'no'}")


@app.command()
def maze(
    ctx: typer.Context,
    path: Path = typer.Argument(..., exists=True, dir_okay=False, help="Maze file"),
    digits: int = typer.Option(3, "--digits", help="Decimal places per cell"),
    fmt: str = _format_option(),
):
    """Print the ASUA of every maze cell as a grid (json: one record per cell)."""
    from asua.chain import solve as solve_instance
    from asua.maze import maze_records, maze_to_graph, parse_maze, render_grid

    as_json = _output_format(ctx, fmt) == "json"
    with _failures():
        grid = parse_maze(path.read_text(encoding="utf-8"))
        g, coords = maze_to_graph(grid)
        t = solve_instance(g)

    if as_json:
        _echo_json(maze_records(grid, coords, t.values, digits))
    else:
        typer.echo(render_grid(grid, coords, t.values, digits))


@app.command()
def generate(
    ctx: typer.Context,
    family: str = typer.Argument(..., help="path, cycle, star, sd1, sd2, sd3 or sd4"),
    params: list[str] = typer.Argument(..., help="Family parameters"),
    absorb: int = typer.Option(None, "--absorb", help="Absorbing vertex (path, cycle, star)"),
    output: Path = typer.Option(None, "--output", "-o", help="Write to a file instead of stdout"),
    fmt: str = _format_option(),
):
    """Emit a family member in the edge-list format (json: vertices, absorbers, edges)."""
    from asua.families import gen_cycle, gen_path, gen_sea_dragon, gen_star
    from asua.graph import format_graph

    as_json = _output_format(ctx, fmt) == "json"
    with _failures():
        absorber = None if absorb is None else absorb - 1
        if family in ("path", "cycle", "star"):
            if len(params) != 1:
                raise BadSpec(f"{family} takes one parameter n")
            make = {"path": gen_path, "cycle": gen_cycle, "star": gen_star}[family]
            n = int(params[0])
            g = make(n, absorber)
            label = f"{family} n={n}"
        else:
            if absorb is not None:
                raise BadSpec("sea dragons always absorb at v_n")
            spec, index = _family_spec(family, params)
            if index is not None:
                raise BadSpec(f"too many parameters for {family}")
            g = gen_sea_dragon(spec)
            label = spec.label

    if as_json:
        record = {
            "label": label,
            "vertices": g.vertex_count,
            "absorb": [a + 1 for a in sorted(g.absorbing)],
            "edges": [[u + 1, v + 1, m] for u, v, m in g.edges()],
        }
        text = json.dumps(record, indent=2) + "\n"
    else:
        text = format_graph(g, comment=label)

    if output:
        output.write_text(text, encoding="utf-8")
        console.print(f"[green]✓[/green] Wrote {label} to {output}")
    else:
        typer.echo(text, nl=False)


# ============================================================================
# Config Commands
# ============================================================================

config_app = typer.Typer(help="Show or create the configuration file")
app.add_typer(config_app, name="config")


@config_app.command("show")
def config_show():
    """Print the effective configuration (file, then ASUA_* environment)."""
    from asua.config.loader import convert_to_camel, get_config_path, load_config

    path = get_config_path()
    console.print(f"Config: {path} {'[green]✓[/green]' if path.exists() else '[dim]defaults[/dim]'}")
    typer.echo(json.dumps(convert_to_camel(load_config().model_dump()), indent=2))


@config_app.command("init")
def config_init(
    force: bool = typer.Option(False, "--force", help="Overwrite an existing file"),
):
    """Write the default configuration file."""
    from asua.config.loader import get_config_path, save_config
    from asua.config.schema import Config

    path = get_config_path()
    if path.exists() and not force:
        console.print(f"[yellow]Config already exists at {path}[/yellow] (use --force)")
        raise typer.Exit(1)
    save_config(Config(), path)
    console.print(f"[green]✓[/green] Created config at {path}")
