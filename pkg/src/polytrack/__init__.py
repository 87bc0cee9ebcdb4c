"""Front tracking for the isentropic p-system with polygonal pressure."""

from polytrack import analysis, exact
from polytrack._internal.functional.density_bound import (
    DensityBoundCalculator,
)
from polytrack._internal.functional.density_functional import (
    DensityFunctional,
)
from polytrack._internal.functional.results.density_bound_results import (
    DensityBoundResults,
)
from polytrack._internal.grid.gas_params import GasParams
from polytrack._internal.grid.pressure_grid import PressureGrid, build_grid
from polytrack._internal.grid.standard_state import (
    StandardState,
    invariants_of,
)
from polytrack._internal.harness.cli import main
from polytrack._internal.harness.config import (
    CHECKS,
    DEFAULTS,
    OUTPUTS,
    RunConfig,
    RunMode,
    load_config,
)
from polytrack._internal.harness.execute import (
    ExitCode,
    check_directory,
    combine_exit_codes,
    execute,
    execute_exact,
)
from polytrack._internal.harness.exports import make_json_safe, read_trace
from polytrack._internal.harness.presets import (
    PRESETS,
    build_preset,
    compression_pair,
    custom,
    quantize_amplitude,
    simple_wave,
    two_rarefactions,
    validate_preset,
)
from polytrack._internal.harness.results.trace_analysis_results import (
    TraceAnalysisResults,
)
from polytrack._internal.harness.svg import render_svg
from polytrack._internal.harness.trace_analyser import TraceAnalyser
from polytrack._internal.riemann.riemann_solver import (
    backward_slope,
    forward_slope,
    solve_riemann,
)
from polytrack._internal.riemann.wave_fan import WaveFan
from polytrack._internal.tracking.blocks import (
    Block,
    BlockStructure,
    block_edge_roles,
    extract_blocks,
)
from polytrack._internal.tracking.event import (
    Event,
    EventQueue,
    PendingMeeting,
)
from polytrack._internal.tracking.front.front import Front
from polytrack._internal.tracking.front.segment import Segment
from polytrack._internal.tracking.front_tracker import (
    FrontTracker,
    domain_exits,
    initial_fronts,
    meeting_time,
    process_interaction,
)
from polytrack._internal.tracking.sampling import (
    InitialProfile,
    compute_J,
    sample_initial_data,
)
from polytrack._internal.tracking.trace import (
    Trace,
    active_segments,
    query_state,
)
from polytrack._internal.types import (
    BlockType,
    Character,
    CheckOutcome,
    EdgeRef,
    EventKind,
    Family,
    InvariantProfile,
    StopReason,
)
from polytrack._internal.utilities.exceptions import (
    AdmissibleGammaError,
    ConfigError,
    GasParamsError,
    GridConvergenceError,
    GridRangeError,
    IncompatibleStatesError,
    InconsistentChainError,
    InvariantDomainError,
    LifespanError,
    QueryTimeError,
    ReferenceTimeError,
    SamplingError,
    TraceFormatError,
)
from polytrack._internal.utilities.utilities import loglog_slope

InvariantProfile = InvariantProfile  # noqa: PLW0127
"""A vectorised initial Riemann invariant, ``r0(x)`` or ``s0(x)``."""

EdgeRef = EdgeRef  # noqa: PLW0127
"""A jump edge, as ``(front id, segment index)``."""

BlockType = BlockType  # noqa: PLW0127
"""The (forward, backward) characters of a block; either may be absent."""

__all__ = [
    "analysis",
    "exact",
    "DensityBoundCalculator",
    "DensityFunctional",
    "DensityBoundResults",
    "GasParams",
    "PressureGrid",
    "build_grid",
    "StandardState",
    "invariants_of",
    "main",
    "CHECKS",
    "DEFAULTS",
    "OUTPUTS",
    "RunConfig",
    "RunMode",
    "load_config",
    "ExitCode",
    "check_directory",
    "combine_exit_codes",
    "execute",
    "execute_exact",
    "make_json_safe",
    "read_trace",
    "PRESETS",
    "build_preset",
    "compression_pair",
    "custom",
    "quantize_amplitude",
    "simple_wave",
    "two_rarefactions",
    "validate_preset",
    "TraceAnalysisResults",
    "render_svg",
    "TraceAnalyser",
    "backward_slope",
    "forward_slope",
    "solve_riemann",
    "WaveFan",
    "Block",
    "BlockStructure",
    "block_edge_roles",
    "extract_blocks",
    "Event",
    "EventQueue",
    "PendingMeeting",
    "Front",
    "Segment",
    "FrontTracker",
    "domain_exits",
    "initial_fronts",
    "meeting_time",
    "process_interaction",
    "InitialProfile",
    "compute_J",
    "sample_initial_data",
    "Trace",
    "active_segments",
    "query_state",
    "BlockType",
    "Character",
    "CheckOutcome",
    "EdgeRef",
    "EventKind",
    "Family",
    "InvariantProfile",
    "StopReason",
    "AdmissibleGammaError",
    "ConfigError",
    "GasParamsError",
    "GridConvergenceError",
    "GridRangeError",
    "IncompatibleStatesError",
    "InconsistentChainError",
    "InvariantDomainError",
    "LifespanError",
    "QueryTimeError",
    "ReferenceTimeError",
    "SamplingError",
    "TraceFormatError",
    "loglog_slope",
]
