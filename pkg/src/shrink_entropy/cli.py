"""Command-line interface of the entropy toolkit.

Standard output carries data only; logs and diagnostics go to standard
error. Exit statuses: 0 success, 2 invalid input or usage, 3 unreadable or
malformed files, 4 numeric-domain failures.
"""

from __future__ import annotations

import functools
import logging
import sys
from pathlib import Path
from typing import Any, Callable, TypeVar

import click
import numpy as np
import pandas as pd
from pydantic import ValidationError

from shrink_entropy.bench import run_bench, write_report
from shrink_entropy.config import Settings, settings
from shrink_entropy.entropy import entropy_from_spec, frequencies_from_spec
from shrink_entropy.exceptions import ShrinkEntropyError
from shrink_entropy.frequencies import estimate_shrink
from shrink_entropy.io import mi_matrix_csv, read_counts, read_expression_csv
from shrink_entropy.models import (
    ESTIMATOR_NAMES,
    BenchConfig,
    DiscretizationScheme,
    EntropyEstimatorSpec,
    ExpressionMatrix,
    FrequencyVector,
    ScenarioSpec,
)
from shrink_entropy.models.bench import SCENARIO_ORDER
from shrink_entropy.mutual_info import (
    discretize,
    equal_width_scheme,
    fd_scheme,
    mi_all_pairs,
)
from shrink_entropy.network import EXPORT_FORMATS, dpi_prune, export_graph
from shrink_entropy.sampling import substream
from shrink_entropy.shrinkage import simulate_risk

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def handle_errors(command: F) -> F:
    """Turn toolkit errors into a one-line diagnostic and their exit status."""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return command(*args, **kwargs)
        except ShrinkEntropyError as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(e.exit_code)
        except ValidationError as e:
            first = e.errors()[0]
            click.echo(f"error: invalid input: {first['msg']}", err=True)
            sys.exit(2)

    return wrapper  # type: ignore[return-value]


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        out.write_text(text, encoding="utf-8")
        logger.info(f"Wrote {out}")


def _split(value: str) -> list[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def _scheme(
    matrix: ExpressionMatrix, levels: int | None, fd: bool
) -> DiscretizationScheme:
    if levels is not None and fd:
        raise click.UsageError("--levels and --fd are mutually exclusive")
    if levels is not None:
        return equal_width_scheme(matrix.values, levels)
    return fd_scheme(matrix.values)


estimator_option = click.option(
    "--estimator",
    type=click.Choice(ESTIMATOR_NAMES),
    default="shrink",
    show_default=True,
    help="Estimator name.",
)
prior_option = click.option(
    "--prior",
    "a",
    type=float,
    default=None,
    help="Symmetric pseudo-count for --estimator bayes.",
)
precision_option = click.option(
    "--precision",
    type=click.IntRange(0, 17),
    default=None,
    help=f"Decimal places  [default: {settings.precision}]",
)
input_option = click.option(
    "--input",
    "input_path",
    type=click.Path(path_type=Path),
    required=True,
    help="Expression CSV: variable name, then one column per sample.",
)
header_option = click.option(
    "--header/--no-header",
    default=False,
    show_default=True,
    help="Whether the CSV starts with a header row.",
)
levels_option = click.option(
    "--levels", type=int, default=None, help="Fixed number of equal-width bins."
)
fd_option = click.option(
    "--fd",
    is_flag=True,
    help="Freedman-Diaconis bin count (the default without --levels).",
)
workers_option = click.option(
    "--workers",
    type=click.IntRange(min=1),
    default=None,
    help=f"Worker processes  [default: {settings.workers}]",
)
out_option = click.option(
    "--out",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Output file; standard output when omitted.",
)


@click.group()
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help=f"Logging level on standard error  [default: {settings.log_level}]",
)
def main(log_level: str | None) -> None:
    """Shrinkage estimation of entropy and mutual information."""
    logging.basicConfig(
        level=(log_level or settings.log_level).upper(),
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )


# =============================================================================
# Counts
# =============================================================================


@main.command()
@click.argument("counts_file", type=click.Path(path_type=Path))
@estimator_option
@prior_option
@click.option(
    "--target",
    type=click.Choice(["uniform"]),
    default="uniform",
    show_default=True,
    help="Shrinkage target.",
)
@precision_option
@handle_errors
def freqs(
    counts_file: Path,
    estimator: str,
    a: float | None,
    target: str,
    precision: int | None,
) -> None:
    """Estimate cell frequencies from a counts file.

    Writes ``cell,freq`` CSV with 1-based cells; the shrinkage estimator adds
    a ``# lambda=<value>`` line first.
    """
    digits = settings.precision if precision is None else precision
    counts = read_counts(counts_file)
    spec = EntropyEstimatorSpec.parse(estimator, a)
    header = ""
    if spec.kind == "shrink":
        estimate = estimate_shrink(counts, FrequencyVector.uniform(counts.p))
        probs = estimate.freqs.probs
        header = f"# lambda={estimate.intensity:.{digits}f}\n"
    else:
        probs = frequencies_from_spec(counts, spec).probs
    frame = pd.DataFrame({"cell": np.arange(1, counts.p + 1), "freq": probs})
    body = frame.to_csv(index=False, float_format=f"%.{digits}f", lineterminator="\n")
    click.echo(header + body, nl=False)


@main.command()
@click.argument("counts_file", type=click.Path(path_type=Path))
@estimator_option
@prior_option
@precision_option
@handle_errors
def entropy(
    counts_file: Path, estimator: str, a: float | None, precision: int | None
) -> None:
    """Estimate the entropy (nats) of a counts file."""
    digits = settings.precision if precision is None else precision
    counts = read_counts(counts_file)
    value = entropy_from_spec(counts, EntropyEstimatorSpec.parse(estimator, a))
    click.echo(f"{value:.{digits}f}")


# =============================================================================
# Mutual information and networks
# =============================================================================


@main.command(name="discretize")
@input_option
@header_option
@levels_option
@fd_option
@out_option
@handle_errors
def discretize_command(
    input_path: Path, header: bool, levels: int | None, fd: bool, out: Path | None
) -> None:
    """Bin every measurement into one global equal-width scheme.

    Writes one row per variable with 0-based bin indices, preceded by a
    ``# levels=K`` line.
    """
    matrix = read_expression_csv(input_path, header=header)
    scheme = _scheme(matrix, levels, fd)
    frame = pd.DataFrame(discretize(matrix, scheme), index=list(matrix.labels))
    body = frame.to_csv(header=False, lineterminator="\n")
    _emit(f"# levels={scheme.levels}\n" + body, out)


@main.command()
@input_option
@header_option
@levels_option
@fd_option
@estimator_option
@prior_option
@click.option(
    "--full",
    is_flag=True,
    help="Write the square matrix instead of one row per pair.",
)
@workers_option
@precision_option
@out_option
@handle_errors
def mi(
    input_path: Path,
    header: bool,
    levels: int | None,
    fd: bool,
    estimator: str,
    a: float | None,
    full: bool,
    workers: int | None,
    precision: int | None,
    out: Path | None,
) -> None:
    """Mutual information of every pair of variables."""
    matrix = read_expression_csv(input_path, header=header)
    graph = mi_all_pairs(
        matrix,
        _scheme(matrix, levels, fd),
        EntropyEstimatorSpec.parse(estimator, a),
        workers=workers or settings.workers,
    )
    digits = settings.precision if precision is None else precision
    _emit(mi_matrix_csv(graph, full=full, precision=digits), out)


@main.command()
@input_option
@header_option
@levels_option
@fd_option
@estimator_option
@prior_option
@click.option(
    "--epsilon",
    type=float,
    default=None,
    help=f"DPI tolerance  [default: {settings.dpi_epsilon}]",
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(EXPORT_FORMATS),
    default="dot",
    show_default=True,
    help="Export format.",
)
@workers_option
@out_option
@handle_errors
def network(
    input_path: Path,
    header: bool,
    levels: int | None,
    fd: bool,
    estimator: str,
    a: float | None,
    epsilon: float | None,
    fmt: str,
    workers: int | None,
    out: Path | None,
) -> None:
    """Discretize, estimate all MI values, prune by DPI and export the graph."""
    matrix = read_expression_csv(input_path, header=header)
    graph = mi_all_pairs(
        matrix,
        _scheme(matrix, levels, fd),
        EntropyEstimatorSpec.parse(estimator, a),
        workers=workers or settings.workers,
    )
    pruned = dpi_prune(graph, settings.dpi_epsilon if epsilon is None else epsilon)
    _emit(export_graph(pruned, fmt), out)


# =============================================================================
# Simulation
# =============================================================================


@main.command()
@click.option(
    "--config",
    "config_file",
    type=click.Path(path_type=Path),
    default=None,
    help="Flat KEY=value file; flags override its values.",
)
@click.option(
    "--scenario",
    "scenarios",
    type=click.Choice(SCENARIO_ORDER),
    multiple=True,
    help="Scenario to simulate; repeat for several.",
)
@click.option("--n-grid", default=None, help="Comma-separated sample sizes.")
@click.option(
    "--runs", type=click.IntRange(min=1), default=None, help="Runs per cell."
)
@click.option("--seed", type=click.IntRange(min=0), default=None, help="Root seed.")
@click.option("--p", "p", type=click.IntRange(min=2), default=None, help="Dimension.")
@click.option(
    "--estimators",
    default=None,
    help="Comma-separated estimator names  [default: the eight compared ones]",
)
@click.option(
    "--timings", is_flag=True, help="Add wall-clock seconds to the report."
)
@workers_option
@out_option
@handle_errors
def bench(
    config_file: Path | None,
    scenarios: tuple[str, ...],
    n_grid: str | None,
    runs: int | None,
    seed: int | None,
    p: int | None,
    estimators: str | None,
    timings: bool,
    workers: int | None,
    out: Path | None,
) -> None:
    """Monte Carlo comparison of the entropy estimators."""
    base = Settings.from_file(config_file) if config_file else settings
    try:
        sample_sizes = (
            [int(n) for n in _split(n_grid)] if n_grid else base.bench_n_grid
        )
    except ValueError as e:
        raise click.BadParameter(
            f"not an integer list: {n_grid}", param_hint="--n-grid"
        ) from e
    specs = (
        [EntropyEstimatorSpec.parse(name) for name in _split(estimators)]
        if estimators
        else EntropyEstimatorSpec.benchmark_set()
    )
    dimension = p or base.bench_p
    config = BenchConfig(
        scenarios=[
            ScenarioSpec(
                kind=kind,  # type: ignore[arg-type]
                p=dimension,
                exponent=base.zipf_exponent,
            )
            for kind in (scenarios or base.bench_scenarios)
        ],
        sample_sizes=sample_sizes,
        runs=runs or base.bench_runs,
        estimators=specs,
        seed=base.seed if seed is None else seed,
    )
    result = run_bench(config, workers=workers or base.workers)
    _emit(write_report(result, base.report_digits, include_timing=timings), out)


@main.command(name="js-demo")
@click.option("--p", "p", type=click.IntRange(min=3), default=10, show_default=True)
@click.option("--mu", type=float, default=0.0, show_default=True, help="Common mean.")
@click.option(
    "--draws", type=click.IntRange(min=1), default=1000, show_default=True
)
@click.option("--seed", type=click.IntRange(min=0), default=None, help="Root seed.")
@precision_option
@handle_errors
def js_demo(
    p: int, mu: float, draws: int, seed: int | None, precision: int | None
) -> None:
    """Risk of ML and James-Stein estimators of a normal mean vector."""
    rng = substream(settings.seed if seed is None else seed)
    risks = simulate_risk(p, mu, draws, rng)
    digits = settings.precision if precision is None else precision
    frame = pd.DataFrame({"estimator": list(risks), "risk": list(risks.values())})
    click.echo(
        frame.to_csv(index=False, float_format=f"%.{digits}f", lineterminator="\n"),
        nl=False,
    )


if __name__ == "__main__":
    main()
