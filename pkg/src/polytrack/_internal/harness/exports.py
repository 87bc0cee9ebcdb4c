import csv
import json
import logging
from collections import abc
from pathlib import Path
from typing import Any

import numpy as np

from polytrack._internal.character.districts import District
from polytrack._internal.functional.density_functional import (
    FunctionalSample,
)
from polytrack._internal.grid.gas_params import GasParams
from polytrack._internal.grid.pressure_grid import PressureGrid
from polytrack._internal.grid.standard_state import StandardState
from polytrack._internal.tracking.event import Event
from polytrack._internal.tracking.front.front import Front
from polytrack._internal.tracking.front.segment import Segment
from polytrack._internal.tracking.sampling import InitialProfile
from polytrack._internal.tracking.trace import Trace
from polytrack._internal.types import (
    CheckOutcome,
    EventKind,
    Family,
    StopReason,
)
from polytrack._internal.utilities.exceptions import (
    GasParamsError,
    GridRangeError,
    TraceFormatError,
)
from polytrack._internal.utilities.utilities import (
    finite_or_none,
    format_float,
)

logger = logging.getLogger(__name__)

TRACE_JSON = "trace.json"
FRONTS_CSV = "fronts.csv"
EVENTS_JSONL = "events.jsonl"
A_OF_T_CSV = "a_of_t.csv"
BOUND_REPORT_JSON = "bound_report.json"
DISTRICTS_JSON = "districts.json"
DECAY_CSV = "decay.csv"
LIFESPAN_JSON = "lifespan.json"
SVG_DIAGRAM = "diagram.svg"

FRONT_COLUMNS = (
    "id",
    "family",
    "strength",
    "index",
    "t0",
    "x0",
    "t1",
    "x1",
    "slope",
    "left_i",
    "left_j",
    "right_i",
    "right_j",
)


def make_json_safe(value: Any) -> Any:  # noqa: ANN401
    """Convert `value` into plain JSON types.

    Non-finite floats become ``None``, tuples become lists and
    :mod:`numpy` scalars become Python numbers.

    """
    if isinstance(value, dict):
        return {str(key): make_json_safe(item) for key, item in value.items()}
    if isinstance(value, list | tuple):
        return [make_json_safe(item) for item in value]
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, float | np.floating):
        return finite_or_none(float(value))
    return value


def _log_written(path: Path) -> None:
    msg = f"wrote {path}"
    logger.info(msg)


def write_json(payload: Any, path: Path) -> None:  # noqa: ANN401
    """Write `payload` as indented JSON."""
    with path.open("w", encoding="utf-8") as f:
        json.dump(make_json_safe(payload), f, indent=2, allow_nan=False)
        f.write("\n")
    _log_written(path)


def write_trace_json(trace: Trace, path: Path) -> None:
    """Write the grid, the initial profile and the run metadata."""
    write_json(
        {
            "grid": trace.get_grid().to_dict(),
            "initial_profile": trace.get_initial_profile().to_dict(),
            "t_end": trace.get_t_end(),
            "t_max": trace.get_t_max(),
            "stop_reason": str(trace.get_stop_reason()),
        },
        path,
    )


def _csv_value(value: Any) -> str:  # noqa: ANN401
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def write_fronts_csv(trace: Trace, path: Path) -> None:
    """Write one row per segment of every front."""
    with path.open("w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(FRONT_COLUMNS)
        for segment in trace.get_segments():
            row = segment.to_dict()
            writer.writerow(
                [_csv_value(row[column]) for column in FRONT_COLUMNS]
            )
    _log_written(path)


def write_events_jsonl(trace: Trace, path: Path) -> None:
    """Write one JSON object per event."""
    with path.open("w", encoding="utf-8") as f:
        for event in trace.get_events():
            f.write(json.dumps(make_json_safe(event.to_dict())))
            f.write("\n")
    _log_written(path)


def write_a_of_t_csv(
    samples: abc.Iterable[FunctionalSample],
    path: Path,
) -> None:
    """Write ``T, a, argmin_edge``; the edge is ``front:segment``."""
    with path.open("w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(("T", "a", "argmin_edge"))
        for sample in samples:
            edge = (
                ""
                if sample.argmin_edge is None
                else f"{sample.argmin_edge[0]}:{sample.argmin_edge[1]}"
            )
            writer.writerow(
                (format_float(sample.T), format_float(sample.a), edge)
            )
    _log_written(path)


def write_districts_json(
    districts: abc.Iterable[tuple[District, CheckOutcome | None]],
    path: Path,
) -> None:
    """Write every district with its decay check result."""
    write_json(
        [
            {
                **district.to_dict(),
                "decay_check": None if outcome is None else str(outcome),
            }
            for district, outcome in districts
        ],
        path,
    )


def write_decay_csv(
    series: abc.Iterable[tuple[float, float]],
    path: Path,
) -> None:
    """Write ``t, rho_min, t_times_rho``."""
    with path.open("w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(("t", "rho_min", "t_times_rho"))
        for time, density in series:
            writer.writerow(
                (
                    format_float(time),
                    format_float(density),
                    format_float(time * density),
                )
            )
    _log_written(path)


def write_text(text: str, path: Path) -> None:
    path.write_text(text, encoding="utf-8")
    _log_written(path)


def _read_json(path: Path) -> Any:  # noqa: ANN401
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as error:
        msg = f"{path} is not valid JSON ({error})"
        raise TraceFormatError(msg) from error


def _state(n: int, i: str | int, j: str | int) -> StandardState:
    return StandardState(n, int(i), int(j))


def _read_fronts(path: Path, n: int) -> list[Front]:
    segments: dict[int, list[Segment]] = {}
    with path.open(newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        if tuple(reader.fieldnames or ()) != FRONT_COLUMNS:
            msg = f"{path} has columns {reader.fieldnames}"
            raise TraceFormatError(msg)
        for row in reader:
            segment = Segment(
                front_id=int(row["id"]),
                family=Family(row["family"]),
                strength=int(row["strength"]),
                index=int(row["index"]),
                t0=float(row["t0"]),
                x0=float(row["x0"]),
                t1=float(row["t1"]),
                x1=float(row["x1"]),
                slope=float(row["slope"]),
                left_state=_state(n, row["left_i"], row["left_j"]),
                right_state=_state(n, row["right_i"], row["right_j"]),
            )
            segments.setdefault(segment.front_id, []).append(segment)
    fronts = []
    for front_id, front_segments in sorted(segments.items()):
        front_segments.sort(key=lambda segment: segment.index)
        if [s.index for s in front_segments] != list(
            range(len(front_segments))
        ):
            msg = f"front {front_id} in {path} has missing segments"
            raise TraceFormatError(msg)
        fronts.append(Front(front_id, front_segments))
    return fronts


def _read_events(path: Path) -> list[Event]:
    events = []
    with path.open(encoding="utf-8") as f:
        for number, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
            except json.JSONDecodeError as error:
                msg = f"{path}:{number} is not valid JSON ({error})"
                raise TraceFormatError(msg) from error
            events.append(
                Event(
                    time=float(data["time"]),
                    x=float(data["x"]),
                    kind=EventKind(data["kind"]),
                    participants=tuple(
                        int(p) for p in data["participants"]
                    ),
                )
            )
    return events


def read_trace(directory: Path | str) -> Trace:
    """Restore a trace written by the harness.

    Parameters:
        directory:
            A directory holding ``trace.json``, ``fronts.csv`` and
            ``events.jsonl``.

    Returns:
        The trace.

    Raises:
        :class:`TraceFormatError`: If a file does not parse.

        :class:`OSError`: If a file cannot be read.

    Examples:
        .. code-block:: python

            import polytrack

            trace = polytrack.read_trace("polytrack_output/n40")
            polytrack.query_state(trace, x=0.0, t=1.0)

    """
    directory = Path(directory)
    metadata = _read_json(directory / TRACE_JSON)
    try:
        grid_data = metadata["grid"]
        n = int(grid_data["n"])
        grid = PressureGrid.init_from_volumes(
            params=GasParams(grid_data["K"], grid_data["gamma"]),
            n=n,
            k_min=int(grid_data["k_range"][0]),
            volumes=[float(volume) for volume in grid_data["v"]],
        )
        profile_data = metadata["initial_profile"]
        profile = InitialProfile(
            domain=(
                float(profile_data["domain"][0]),
                float(profile_data["domain"][1]),
            ),
            breakpoints=tuple(
                float(x) for x in profile_data["breakpoints"]
            ),
            states=tuple(
                _state(n, i, j) for i, j in profile_data["states"]
            ),
        )
        fronts = _read_fronts(directory / FRONTS_CSV, n)
        events = _read_events(directory / EVENTS_JSONL)
        trace = Trace(
            grid=grid,
            initial_profile=profile,
            fronts=fronts,
            events=events,
            t_end=float(metadata["t_end"]),
            stop_reason=StopReason(metadata["stop_reason"]),
            t_max=float(metadata["t_max"]),
        )
    except (
        KeyError,
        IndexError,
        TypeError,
        ValueError,
        GasParamsError,
        GridRangeError,
    ) as error:
        msg = f"cannot restore the trace in {directory}: {error!r}"
        raise TraceFormatError(msg) from error
    msg = f"read {trace} from {directory}"
    logger.info(msg)
    return trace
