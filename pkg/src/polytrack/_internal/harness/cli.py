import argparse
import logging
from collections import abc

from polytrack._internal.harness.config import CHECKS, RunMode, load_config
from polytrack._internal.harness.execute import (
    ExitCode,
    check_directory,
    execute,
    execute_exact,
)
from polytrack._internal.utilities.exceptions import ConfigError

logger = logging.getLogger(__name__)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polytrack",
        description=(
            "Front tracking for the isentropic p-system with lemma "
            "checkers and the exact two-rarefaction interaction."
        ),
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Log debug messages.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    run = commands.add_parser(
        "run",
        help="Track the configured preset and write the outputs.",
    )
    run.add_argument("config", help="Path to the JSON run configuration.")
    check = commands.add_parser(
        "check",
        help="Analyse a trace directory written by run.",
    )
    check.add_argument("trace_dir", help="Directory of one resolution.")
    check.add_argument(
        "--sample-time",
        dest="sample_times",
        type=float,
        action="append",
        default=[],
        help="Extra time at which a(T) is sampled; may be repeated.",
    )
    check.add_argument(
        "--skip",
        dest="skipped",
        action="append",
        choices=CHECKS,
        default=[],
        help="Name of a checker to disable; may be repeated.",
    )
    exact = commands.add_parser(
        "exact",
        help="Write the closed-form decay curve.",
    )
    exact.add_argument("config", help="Path to the JSON configuration.")
    return parser


def main(argv: abc.Sequence[str] | None = None) -> int:
    """Run the ``polytrack`` command line.

    Parameters:
        argv:
            Arguments without the program name, :data:`sys.argv` when
            omitted.

    Returns:
        The exit code.

    """
    arguments = _parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if arguments.verbose else logging.INFO,
        format="%(levelname)s:%(name)s:%(message)s",
    )
    if arguments.command == "check":
        return int(
            check_directory(
                arguments.trace_dir,
                checks=dict.fromkeys(arguments.skipped, False),
                sample_times=arguments.sample_times,
            )
        )
    try:
        mode = RunMode.RUN if arguments.command == "run" else RunMode.EXACT
        config = load_config(arguments.config, mode)
    except ConfigError as error:
        msg = f"invalid configuration: {error}"
        logger.error(msg)  # noqa: TRY400
        return int(ExitCode.CONFIG_ERROR)
    except OSError as error:
        msg = f"cannot read {arguments.config}: {error}"
        logger.error(msg)  # noqa: TRY400
        return int(ExitCode.IO_ERROR)
    if mode is RunMode.RUN:
        return int(execute(config))
    return int(execute_exact(config))


if __name__ == "__main__":
    raise SystemExit(main())
