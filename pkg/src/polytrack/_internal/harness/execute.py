import enum
import logging
from collections import abc
from pathlib import Path
from typing import Any

import numpy as np

from polytrack._internal.exact.interaction import (
    InteractionConfig,
    decay_curve,
    default_decay_samples,
)
from polytrack._internal.functional.lifespan import lifespan_diagnostic
from polytrack._internal.grid.pressure_grid import build_grid
from polytrack._internal.harness import exports
from polytrack._internal.harness.config import RunConfig, RunMode
from polytrack._internal.harness.presets import build_preset
from polytrack._internal.harness.results.trace_analysis_results import (
    TraceAnalysisResults,
)
from polytrack._internal.harness.svg import render_svg
from polytrack._internal.harness.trace_analyser import TraceAnalyser
from polytrack._internal.tracking.front_tracker import FrontTracker
from polytrack._internal.tracking.sampling import sample_initial_data
from polytrack._internal.utilities.exceptions import (
    ConfigError,
    GasParamsError,
    InvariantDomainError,
    SamplingError,
    TraceFormatError,
)
from polytrack._internal.utilities.utilities import loglog_slope

logger = logging.getLogger(__name__)

REPORT_JSON = "report.json"


class ExitCode(enum.IntEnum):
    """Process exit codes of the harness."""

    OK = 0
    CHECK_FAILED = 1
    COLLISION = 2
    CONFIG_ERROR = 3
    IO_ERROR = 4


_PRECEDENCE = (
    ExitCode.IO_ERROR,
    ExitCode.CONFIG_ERROR,
    ExitCode.CHECK_FAILED,
    ExitCode.COLLISION,
)


def combine_exit_codes(codes: abc.Iterable[ExitCode]) -> ExitCode:
    """Return the most severe code.

    I/O errors outrank configuration errors, which outrank failed
    checks, which outrank same-family collisions.

    """
    codes = set(codes)
    for code in _PRECEDENCE:
        if code in codes:
            return code
    return ExitCode.OK


def exit_code_of(results: TraceAnalysisResults) -> ExitCode:
    if results.has_failures():
        return ExitCode.CHECK_FAILED
    if results.is_collision():
        return ExitCode.COLLISION
    return ExitCode.OK


def resolution_directory(output_dir: Path, n: int) -> Path:
    return output_dir / f"n{n}"


def write_analysis(
    results: TraceAnalysisResults,
    directory: Path,
    outputs: abc.Collection[str],
) -> None:
    """Write the selected artifacts of one analysed run to `directory`.

    Parameters:
        results:
            The analysed run.

        directory:
            Destination, created when missing.

        outputs:
            Names from :data:`polytrack.OUTPUTS`.

    """
    directory.mkdir(parents=True, exist_ok=True)
    trace = results.get_trace()
    if "trace_json" in outputs:
        exports.write_trace_json(trace, directory / exports.TRACE_JSON)
    if "fronts_csv" in outputs:
        exports.write_fronts_csv(trace, directory / exports.FRONTS_CSV)
    if "events_jsonl" in outputs:
        exports.write_events_jsonl(trace, directory / exports.EVENTS_JSONL)
    if "a_of_t_csv" in outputs:
        exports.write_a_of_t_csv(
            results.get_samples(), directory / exports.A_OF_T_CSV
        )
    density = results.get_density_results()
    if "bound_report_json" in outputs and density is not None:
        exports.write_json(
            density.to_dict(), directory / exports.BOUND_REPORT_JSON
        )
    if "districts_json" in outputs:
        exports.write_districts_json(
            results.get_districts(), directory / exports.DISTRICTS_JSON
        )
    if "decay_csv" in outputs:
        exports.write_decay_csv(
            results.get_min_density(), directory / exports.DECAY_CSV
        )
    if "svg_diagram" in outputs:
        exports.write_text(
            render_svg(
                trace,
                results.get_structure(),
                [district for district, _ in results.get_districts()],
            ),
            directory / exports.SVG_DIAGRAM,
        )


def run_resolution(
    config: RunConfig,
    n: int,
) -> tuple[TraceAnalysisResults, dict[str, Any]]:
    """Track, analyse and export the configured preset at resolution `n`.

    Returns:
        The analysis and the run summary for the report.

    """
    params = config.get_params()
    grid = build_grid(params, n)
    r0, s0 = build_preset(config.get_preset(), n)
    domain = config.get_domain()
    profile = sample_initial_data(grid, r0, s0, domain)
    trace = FrontTracker(grid, config.get_t_max()).run(profile)
    results = TraceAnalyser().get_results(
        trace,
        checks=config.get_checks(),
        sample_times=config.get_sample_times(),
    )
    directory = resolution_directory(config.get_output_dir(), n)
    write_analysis(results, directory, config.get_outputs())

    summary = results.to_dict()
    density = results.get_density_results()
    summary["bound"] = None if density is None else density.to_dict()
    if "lifespan_json" in config.get_outputs():
        diagnostic = lifespan_diagnostic(
            params,
            r0,
            s0,
            domain,
            K0=config.get_K0(),
            L=config.get_lifespan_rate(),
            collision_time=trace.get_collision_time(),
        )
        exports.write_json(
            diagnostic.to_dict(), directory / exports.LIFESPAN_JSON
        )
        summary["lifespan"] = diagnostic.to_dict()
    return results, summary


def _ladder_summary(runs: abc.Sequence[dict[str, Any]]) -> dict[str, Any]:
    """Return ``1/(n a(0))`` per resolution and its successive changes."""
    values = []
    for run in runs:
        bound = run.get("bound")
        a0 = None if bound is None else bound["a0"]
        values.append(
            None
            if a0 is None or not np.isfinite(a0)
            else 1 / (run["n"] * a0)
        )
    differences = [
        None if a is None or b is None else b - a
        for a, b in zip(values, values[1:], strict=False)
    ]
    return {
        "n": [run["n"] for run in runs],
        "inverse_n_a0": values,
        "differences": differences,
    }


def execute(config: RunConfig) -> ExitCode:
    """Run every configured resolution and write the report.

    Parameters:
        config:
            A configuration loaded in ``"run"`` mode.

    Returns:
        :attr:`ExitCode.OK` when all enabled checks pass,
        :attr:`ExitCode.COLLISION` when a run stopped at a same-family
        collision, :attr:`ExitCode.CHECK_FAILED` when a check failed,
        :attr:`ExitCode.CONFIG_ERROR` for data the configuration cannot
        describe and :attr:`ExitCode.IO_ERROR` when writing failed.

    Examples:
        .. code-block:: python

            import polytrack

            config = polytrack.load_config("two_rarefactions.json")
            exit_code = polytrack.execute(config)

    """
    if config.get_mode() is not RunMode.RUN:
        msg = f"execute needs a run configuration, got {config.get_mode()}"
        raise ConfigError(msg)
    codes = []
    runs = []
    try:
        for n in config.get_resolutions():
            results, summary = run_resolution(config, n)
            code = exit_code_of(results)
            summary["exit_code"] = int(code)
            codes.append(code)
            runs.append(summary)
        exports.write_json(
            {
                "config": config.to_dict(),
                "runs": runs,
                "ladder": _ladder_summary(runs),
            },
            config.get_output_dir() / REPORT_JSON,
        )
    except (ConfigError, SamplingError, GasParamsError) as error:
        msg = f"cannot run the configuration: {error}"
        logger.error(msg)  # noqa: TRY400
        return ExitCode.CONFIG_ERROR
    except OSError as error:
        msg = f"cannot write the outputs: {error}"
        logger.error(msg)  # noqa: TRY400
        return ExitCode.IO_ERROR
    code = combine_exit_codes(codes)
    msg = f"finished {len(runs)} runs with exit code {int(code)}"
    logger.info(msg)
    return code


def check_directory(
    directory: Path | str,
    checks: dict[str, bool] | None = None,
    sample_times: abc.Iterable[float] = (),
) -> ExitCode:
    """Analyse an exported trace again and write the reports beside it.

    Parameters:
        directory:
            A directory written by :func:`execute` for one resolution.

        checks:
            Checker toggles by name; missing names are enabled.

        sample_times:
            Extra times at which ``a(T)`` is sampled.

    Returns:
        The exit code of the analysis.

    """
    directory = Path(directory)
    try:
        trace = exports.read_trace(directory)
        results = TraceAnalyser().get_results(
            trace, checks=checks, sample_times=sample_times
        )
        write_analysis(
            results,
            directory,
            (
                "a_of_t_csv",
                "bound_report_json",
                "districts_json",
                "decay_csv",
            ),
        )
        code = exit_code_of(results)
        exports.write_json(
            {**results.to_dict(), "exit_code": int(code)},
            directory / REPORT_JSON,
        )
    except TraceFormatError as error:
        msg = f"cannot read the trace: {error}"
        logger.error(msg)  # noqa: TRY400
        return ExitCode.CONFIG_ERROR
    except OSError as error:
        msg = f"cannot access {directory}: {error}"
        logger.error(msg)  # noqa: TRY400
        return ExitCode.IO_ERROR
    return code


def execute_exact(config: RunConfig) -> ExitCode:
    """Write the closed-form decay curve and its fitted exponent.

    Parameters:
        config:
            A configuration loaded in ``"exact"`` mode.

    Returns:
        :attr:`ExitCode.OK`, or the code of the error met.

    """
    exact = config.get_exact()
    directory = config.get_output_dir() / "exact"
    try:
        interaction = InteractionConfig(
            t_bar=exact["t_bar"],
            S_bar=exact["S_bar"],
            params=config.get_params(),
        )
        samples = (
            default_decay_samples()
            if exact["samples"] is None
            else np.asarray(exact["samples"], dtype=float)
        )
        curve = decay_curve(interaction, samples)
        times = [time for time, _ in curve]
        densities = [density for _, density in curve]
        directory.mkdir(parents=True, exist_ok=True)
        if "decay_csv" in config.get_outputs():
            exports.write_decay_csv(curve, directory / exports.DECAY_CSV)
        exports.write_json(
            {
                "config": config.to_dict(),
                "alpha": interaction.get_alpha(),
                "samples": len(curve),
                "loglog_slope": (
                    loglog_slope(times, densities) if len(curve) > 1 else None
                ),
                "outside_simulation_range": (
                    interaction.is_outside_simulation_range()
                ),
            },
            directory / REPORT_JSON,
        )
    except (InvariantDomainError, GasParamsError) as error:
        msg = f"cannot evaluate the closed form: {error}"
        logger.error(msg)  # noqa: TRY400
        return ExitCode.CONFIG_ERROR
    except OSError as error:
        msg = f"cannot write the outputs: {error}"
        logger.error(msg)  # noqa: TRY400
        return ExitCode.IO_ERROR
    return ExitCode.OK
