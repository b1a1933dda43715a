"""
Command Line Interface for weighted efficient domination.
"""

import json
import sys
from pathlib import Path
from typing import Any

import click
from tabulate import tabulate

from ..application.dto import (
    CheckGraphRequest,
    GeneratedGraph,
    RunReport,
    SolveEdsRequest,
    SolveMwisRequest,
)
from ..application.exceptions import ApplicationError, error_message, exit_code_from_error
from ..application.use_cases import render_csv
from ..domain.exceptions import WedError
from ..domain.services.catalog import FREE_PRESETS, catalog_names, lookup
from ..domain.value_objects.solution import SolveStatus
from ..infrastructure.config import LoggingConfig, get_config
from ..infrastructure.logging import bind_command, get_logger, setup_logging
from ..presentation.dependencies import get_container

HANDLED_ERRORS = (ApplicationError, WedError)


def _echo_json(payload: dict[str, Any]) -> None:
    click.echo(json.dumps(payload, sort_keys=True))


def _finish(ctx: click.Context, report: RunReport, timing: bool) -> None:
    _echo_json(report.to_dict(include_timing=timing))
    ctx.exit(report.exit_code)


def _fail(ctx: click.Context, command: str, error: Exception) -> None:
    ctx.obj["logger"].error("command_failed", error=error_message(error))
    _echo_json({"command": command, "status": SolveStatus.ERROR.value, "message": error_message(error)})
    ctx.exit(exit_code_from_error(error))


def _split_names(values: tuple[str, ...]) -> list[str]:
    return [name.strip() for value in values for name in value.split(",") if name.strip()]


@click.group()
@click.option("--log-level", "-l", default=None, help="Logging level (default from LOG_LEVEL)")
@click.option("--log-format", type=click.Choice(["json", "console"]), default=None, help="Log renderer")
@click.pass_context
def cli(ctx: click.Context, log_level: str | None, log_format: str | None) -> None:
    """Weighted efficient domination on chordal graphs."""
    ctx.ensure_object(dict)

    # stderr logging must be in place before the configuration load logs anything
    bootstrap = LoggingConfig.from_env()
    bootstrap.level = log_level or bootstrap.level
    bootstrap.format = log_format or bootstrap.format
    setup_logging(bootstrap)

    try:
        config = get_config()
    except ApplicationError as e:
        click.echo(f"Error: {e.message}", err=True)
        ctx.exit(exit_code_from_error(e))
    if log_level:
        config.logging.level = log_level
    if log_format:
        config.logging.format = log_format
    if config.logging != bootstrap:
        setup_logging(config.logging)
    bind_command(ctx.invoked_subcommand)

    ctx.obj["config"] = config
    ctx.obj["logger"] = get_logger("cli")
    ctx.obj["container"] = get_container()


@cli.command()
@click.argument("graph_file", type=click.Path(dir_okay=False))
@click.option(
    "--engine",
    "-e",
    type=click.Choice(["auto", "brute", "square", "s123"]),
    default="auto",
    show_default=True,
)
@click.option("--weights", "weights_file", type=click.Path(dir_okay=False), help="Sidecar weights file")
@click.option("--unweighted", is_flag=True, help="Ignore weights; every vertex weighs 1")
@click.option("--timing", is_flag=True, help="Include timing_ms in the JSON output")
@click.pass_context
def eds(
    ctx: click.Context,
    graph_file: str,
    engine: str,
    weights_file: str | None,
    unweighted: bool,
    timing: bool,
) -> None:
    """Find a minimum weight efficient dominating set."""
    request = SolveEdsRequest(
        graph_path=graph_file,
        engine=engine,  # type: ignore[arg-type]
        weights_path=weights_file,
        unweighted=unweighted,
    )
    try:
        report = ctx.obj["container"].solve_eds_use_case().execute(request)
    except HANDLED_ERRORS as e:
        _fail(ctx, "eds", e)
        return
    _finish(ctx, report, timing)


@cli.command()
@click.argument("graph_file", type=click.Path(dir_okay=False))
@click.option("--chordal", is_flag=True, help="Test chordality (hole certificate on failure)")
@click.option(
    "--free",
    multiple=True,
    help=f"Comma-separated catalog names or presets ({', '.join(sorted(FREE_PRESETS))})",
)
@click.option("--square-chordal", is_flag=True, help="Test chordality of the square")
@click.option("--split", is_flag=True, help="Test whether the graph is split")
@click.option("--classes", is_flag=True, help="Report membership in every supported class")
@click.option("--timing", is_flag=True, help="Include timing_ms in the JSON output")
@click.pass_context
def check(
    ctx: click.Context,
    graph_file: str,
    chordal: bool,
    free: tuple[str, ...],
    square_chordal: bool,
    split: bool,
    classes: bool,
    timing: bool,
) -> None:
    """Check class membership of a graph."""
    request = CheckGraphRequest(
        graph_path=graph_file,
        chordal=chordal,
        free=_split_names(free),
        square_chordal=square_chordal,
        split=split,
        classes=classes,
    )
    try:
        report = ctx.obj["container"].check_graph_use_case().execute(request)
    except HANDLED_ERRORS as e:
        _fail(ctx, "check", e)
        return
    _finish(ctx, report, timing)


@cli.command()
@click.argument("graph_file", type=click.Path(dir_okay=False))
@click.option("--weights", "weights_file", type=click.Path(dir_okay=False), help="Sidecar weights file")
@click.option("--timing", is_flag=True, help="Include timing_ms in the JSON output")
@click.pass_context
def mwis(ctx: click.Context, graph_file: str, weights_file: str | None, timing: bool) -> None:
    """Maximum weight independent set of a chordal graph."""
    try:
        report = ctx.obj["container"].solve_mwis_use_case().execute(
            SolveMwisRequest(graph_path=graph_file, weights_path=weights_file)
        )
    except HANDLED_ERRORS as e:
        _fail(ctx, "mwis", e)
        return
    _finish(ctx, report, timing)


@cli.command()
@click.argument("name", required=False)
@click.pass_context
def catalog(ctx: click.Context, name: str | None) -> None:
    """Print a catalog graph as an edge list, or list the catalog."""
    if name is None:
        rows = []
        for entry_name in catalog_names():
            entry = lookup(entry_name)
            rows.append([entry.name, entry.graph.n, entry.graph.edge_count, entry.source.value])
        click.echo(tabulate(rows, headers=["Name", "Vertices", "Edges", "Source"], tablefmt="grid"))
        return
    try:
        generated = ctx.obj["container"].generate_use_case().catalog(name)
    except HANDLED_ERRORS as e:
        click.echo(f"Error: {error_message(e)}", err=True)
        ctx.exit(exit_code_from_error(e))
        return
    click.echo(generated.text, nl=False)


@cli.group()
def gen() -> None:
    """Instance generators."""
    pass


def _write_generated(ctx: click.Context, generated: GeneratedGraph, output: str | None) -> None:
    if generated.exhausted:
        click.echo(f"Error: no graph found within the try budget (seed {generated.seed})", err=True)
        ctx.exit(1)
    if output is None:
        click.echo(generated.text, nl=False)
        return
    Path(output).write_text(generated.text, encoding="utf-8")
    ctx.obj["logger"].info("instance_written", path=output, n=generated.n, m=generated.m, seed=generated.seed)


def _run_generator(ctx: click.Context, output: str | None, method: str, *args: Any) -> None:
    try:
        generated = getattr(ctx.obj["container"].generate_use_case(), method)(*args)
    except HANDLED_ERRORS as e:
        click.echo(f"Error: {error_message(e)}", err=True)
        ctx.exit(exit_code_from_error(e))
        return
    _write_generated(ctx, generated, output)


output_option = click.option("--output", "-o", type=click.Path(dir_okay=False), help="Write to a file instead of stdout")
seed_option = click.option("--seed", type=int, default=0, show_default=True)
weight_option = click.option("--max-weight", type=click.IntRange(min=1), default=None, help="Emit random weights in 1..N")


@gen.command("x3c")
@click.argument("x3c_file", type=click.Path(dir_okay=False))
@output_option
@click.pass_context
def gen_x3c(ctx: click.Context, x3c_file: str, output: str | None) -> None:
    """Reduction graph of an X3C instance, with role tags."""
    _run_generator(ctx, output, "from_x3c", x3c_file)


@gen.command("x3c-random")
@click.option("-n", "n", type=click.IntRange(min=0), required=True, help="Universe size (multiple of 3)")
@click.option("-m", "m", type=click.IntRange(min=0), required=True, help="Number of triples")
@click.option("--covering", is_flag=True, help="Every element lies in some triple")
@seed_option
@output_option
@click.pass_context
def gen_x3c_random(ctx: click.Context, n: int, m: int, covering: bool, seed: int, output: str | None) -> None:
    """Random X3C instance."""
    _run_generator(ctx, output, "random_x3c", n, m, seed, covering)


@gen.command("interval")
@click.option("-n", "n", type=click.IntRange(min=0), required=True)
@click.option("--density", type=click.FloatRange(0.0, 1.0), default=0.3, show_default=True)
@seed_option
@weight_option
@output_option
@click.pass_context
def gen_interval(
    ctx: click.Context, n: int, density: float, seed: int, max_weight: int | None, output: str | None
) -> None:
    """Random interval graph."""
    _run_generator(ctx, output, "interval", n, density, seed, max_weight)


@gen.command("chordal")
@click.option("-n", "n", type=click.IntRange(min=0), required=True)
@click.option("--edge-bias", type=click.FloatRange(0.0, 1.0), default=0.5, show_default=True)
@seed_option
@weight_option
@output_option
@click.pass_context
def gen_chordal(
    ctx: click.Context, n: int, edge_bias: float, seed: int, max_weight: int | None, output: str | None
) -> None:
    """Random connected chordal graph."""
    _run_generator(ctx, output, "chordal", n, edge_bias, seed, max_weight)


@gen.command("hfree")
@click.option("-n", "n", type=click.IntRange(min=0), required=True)
@click.option("--forbid", multiple=True, required=True, help="Comma-separated catalog names or presets")
@click.option("--max-tries", type=click.IntRange(min=1), default=None)
@seed_option
@weight_option
@output_option
@click.pass_context
def gen_hfree(
    ctx: click.Context,
    n: int,
    forbid: tuple[str, ...],
    max_tries: int | None,
    seed: int,
    max_weight: int | None,
    output: str | None,
) -> None:
    """Random chordal graph free of the given induced subgraphs."""
    _run_generator(ctx, output, "hfree", n, _split_names(forbid), seed, max_tries, max_weight)


@cli.command()
@click.argument("spec_file", type=click.Path(dir_okay=False))
@click.option("--output", "-o", type=click.Path(dir_okay=False), help="Write the CSV to a file")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Parallel worker processes")
@click.pass_context
def campaign(ctx: click.Context, spec_file: str, output: str | None, workers: int | None) -> None:
    """Run an oracle campaign; exits non-zero on any mismatch."""
    container = ctx.obj["container"]
    config = ctx.obj["config"]
    if workers is not None:
        config.campaign.workers = workers
    try:
        spec = container.campaign_spec_repository().load(spec_file)
        result = container.campaign_use_case().execute(spec)
    except HANDLED_ERRORS as e:
        click.echo(f"Error: {error_message(e)}", err=True)
        ctx.exit(exit_code_from_error(e))
        return

    text = render_csv(result)
    if output is None:
        click.echo(text, nl=False)
    else:
        Path(output).write_text(text, encoding="utf-8")

    summary = [[name, *_status_counts(result.rows, name)] for name in result.engines]
    click.echo(
        tabulate(summary, headers=["Engine", "solved", "no-eds", "inapplicable", "error"], tablefmt="grid"),
        err=True,
    )
    click.echo(f"instances: {len(result.rows)}  mismatches: {len(result.mismatches)}", err=True)
    ctx.exit(result.exit_code)


def _status_counts(rows: list[Any], engine: str) -> list[int]:
    counts = dict.fromkeys(["solved", "no-eds", "inapplicable", "error"], 0)
    for row in rows:
        status = row.results.get(engine, (None, None))[0]
        if status in counts:
            counts[status] += 1
    return list(counts.values())


def main() -> None:
    cli(obj={}, prog_name="wed")


if __name__ == "__main__":
    sys.exit(main())
