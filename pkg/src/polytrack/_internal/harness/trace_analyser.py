import logging
from collections import abc

from polytrack._internal.character.diamonds import (
    check_diamond_preservation,
    interaction_diamonds,
)
from polytrack._internal.character.districts import (
    build_districts,
    check_district_decay,
)
from polytrack._internal.character.edge_character import (
    check_character_constancy,
    check_volume_ordering,
    classify_edges,
)
from polytrack._internal.functional.density_bound import (
    DensityBoundCalculator,
)
from polytrack._internal.functional.density_functional import (
    DensityFunctional,
)
from polytrack._internal.functional.diamond_inequalities import (
    check_diamond_inequalities,
)
from polytrack._internal.harness.config import CHECKS
from polytrack._internal.harness.results.trace_analysis_results import (
    TraceAnalysisResults,
)
from polytrack._internal.tracking.blocks import BlockStructure, extract_blocks
from polytrack._internal.tracking.trace import Trace
from polytrack._internal.types import CheckOutcome

logger = logging.getLogger(__name__)


def combine_outcomes(outcomes: abc.Iterable[CheckOutcome]) -> CheckOutcome:
    """Return ``FAIL`` if any fails, else ``PASS`` if any passes."""
    outcomes = set(outcomes)
    if CheckOutcome.FAIL in outcomes:
        return CheckOutcome.FAIL
    if CheckOutcome.PASS in outcomes:
        return CheckOutcome.PASS
    return CheckOutcome.NOT_APPLICABLE


def min_density_series(
    trace: Trace,
    structure: BlockStructure,
    times: abc.Iterable[float],
) -> list[tuple[float, float]]:
    """Return ``(t, 1 / max v)`` over the blocks alive at each time."""
    grid = trace.get_grid()
    series = []
    for time in times:
        volumes = [
            grid.get_volume(block.state.get_j())
            for block in structure.get_blocks()
            if block.is_alive_at(time)
        ]
        if volumes:
            series.append((time, 1 / max(volumes)))
    return series


class TraceAnalyser:
    """Runs the lemma checkers on a completed trace.

    Each checker reports :class:`CheckOutcome`; per-diamond and
    per-district outcomes are combined so that one failure fails the
    checker. Disabled checkers report ``None``.

    Examples:
        .. code-block:: python

            import polytrack

            # trace from polytrack.FrontTracker(...).run(...)
            results = polytrack.TraceAnalyser().get_results(
                trace,
                checks={"tracing": False},
            )
            results.get_check_outcomes()
            results.has_failures()

    """

    def _check_diamonds(self, trace: Trace) -> CheckOutcome:
        outcomes = [
            check_diamond_preservation(diamond)
            for diamond in interaction_diamonds(trace)
        ]
        outcomes.append(check_character_constancy(trace))
        outcomes.append(check_volume_ordering(trace))
        return combine_outcomes(outcomes)

    def calculate(
        self,
        trace: Trace,
        checks: dict[str, bool] | None = None,
        sample_times: abc.Iterable[float] = (),
    ) -> abc.Iterable[dict]:
        """Perform calculation on `trace`.

        Parameters:
            trace:
                The completed run.

            checks:
                Checker toggles by name; missing names are enabled.

            sample_times:
                Extra times at which ``a(T)`` and the minimum density
                are sampled, besides ``0`` and every interaction time.

        Yields:
            Dictionary of results.

        """
        enabled = {
            name: True if checks is None else checks.get(name, True)
            for name in CHECKS
        }
        structure = extract_blocks(trace)
        characters = classify_edges(trace)
        districts = build_districts(trace, structure)
        outcomes: dict[str, CheckOutcome | None] = dict.fromkeys(enabled)

        if enabled["diamond_preservation"]:
            outcomes["diamond_preservation"] = self._check_diamonds(trace)

        district_outcomes = [
            check_district_decay(trace, district, structure)
            if enabled["district_decay"]
            else None
            for district in districts
        ]
        if enabled["district_decay"]:
            outcomes["district_decay"] = combine_outcomes(
                outcome for outcome in district_outcomes if outcome
            )

        samples = []
        decay: list[tuple[float, float]] = []
        density = None
        lowest_pairing = CheckOutcome.NOT_APPLICABLE
        if trace.get_t_end() > 0:
            functional = DensityFunctional(trace, structure, characters)
            times = functional.get_sample_times(sample_times)
            samples = functional.samples(times)
            decay = min_density_series(trace, structure, times)
            if enabled["diamond_inequalities"]:
                outcomes["diamond_inequalities"] = combine_outcomes(
                    check_diamond_inequalities(diamond)
                    for diamond in functional.get_diamonds().values()
                )
            if enabled["a_monotone"]:
                outcomes["a_monotone"] = functional.check_monotone(samples)
            lowest_pairing = functional.check_lowest_pairing(0.0)
            density = DensityBoundCalculator().get_results(
                trace=trace,
                structure=structure,
                districts=districts,
                functional=functional,
            )
            if enabled["density_bound"]:
                outcomes["density_bound"] = density.get_outcome()
            if enabled["tracing"]:
                outcomes["tracing"] = density.get_tracing_outcome()
        else:
            for name in (
                "diamond_inequalities",
                "a_monotone",
                "density_bound",
                "tracing",
            ):
                if enabled[name]:
                    outcomes[name] = CheckOutcome.NOT_APPLICABLE

        failed = [
            name
            for name, outcome in outcomes.items()
            if outcome is CheckOutcome.FAIL
        ]
        if failed:
            msg = (
                f"checks failed at n = {trace.get_resolution()}: "
                f"{', '.join(failed)}"
            )
            logger.warning(msg)

        yield {
            "trace": trace,
            "structure": structure,
            "outcomes": outcomes,
            "lowest_pairing": lowest_pairing,
            "samples": samples,
            "districts": list(zip(districts, district_outcomes, strict=True)),
            "density": density,
            "decay": decay,
        }

    def get_results(
        self,
        trace: Trace,
        checks: dict[str, bool] | None = None,
        sample_times: abc.Iterable[float] = (),
    ) -> TraceAnalysisResults:
        """Check `trace`.

        Parameters:
            trace:
                The completed run.

            checks:
                Checker toggles by name; missing names are enabled.

            sample_times:
                Extra sample times.

        Returns:
            The analysis.

        """
        return TraceAnalysisResults(
            self.calculate(
                trace=trace,
                checks=checks,
                sample_times=sample_times,
            )
        )
