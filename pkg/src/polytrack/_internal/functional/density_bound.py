import logging
import math
from collections import abc

import networkx as nx

from polytrack._internal.character.districts import District, build_districts
from polytrack._internal.functional.complete_diamonds import CompleteDiamond
from polytrack._internal.functional.density_functional import (
    DensityFunctional,
)
from polytrack._internal.functional.results.density_bound_results import (
    DensityBoundResults,
)
from polytrack._internal.tracking.blocks import (
    BlockStructure,
    block_edge_roles,
    extract_blocks,
)
from polytrack._internal.tracking.trace import Trace
from polytrack._internal.types import Character, CheckOutcome

logger = logging.getLogger(__name__)

TOLERANCE = 1e-12
TRACING_TOLERANCE = 1e-9
RAREFACTION_PAIR = (Character.R_R, Character.R_R)


class DensityBoundCalculator:
    """Checks the growth of the specific volume against ``a(0)``.

    Every block must satisfy

    .. math::

        v \\le \\max v_0 + \\frac{t}{n\\,a(0)} + \\frac{D}{n}

    at its birth time ``t``, with ``D`` the number of districts not of
    type ``R_r/R_r`` met on the way from the block back to ``t = 0``
    through south edges, its own district included. The measured
    growth rate is
    ``max (v - max v_0)/t`` over blocks born after ``t = 0``.

    Along chains of ``R_r/R_r`` diamonds, each linked to the next across
    its south-east edge, the time between south corners must be at least
    ``n a(0)`` times the volume increase.

    Examples:
        .. code-block:: python

            import polytrack

            # trace from polytrack.FrontTracker(...).run(...)
            results = polytrack.DensityBoundCalculator().get_results(trace)
            results.is_bound_ok()
            results.get_L_measured()

    """

    def _tracing(
        self,
        trace: Trace,
        structure: BlockStructure,
        diamonds: dict[int, CompleteDiamond],
        a0: float,
    ) -> CheckOutcome:
        grid = trace.get_grid()
        n = trace.get_resolution()
        chains = 0
        for diamond in diamonds.values():
            if diamond.block_type != RAREFACTION_PAIR:
                continue
            current = diamond
            while current.se is not None:
                _, below = structure.get_edge_sides(current.se)
                following = diamonds.get(below)
                if (
                    following is None
                    or following.block_type != RAREFACTION_PAIR
                ):
                    break
                chains += 1
                elapsed = current.south[1] - following.south[1]
                growth = grid.get_volume(
                    current.state_j - 1
                ) - grid.get_volume(following.state_j - 1)
                if elapsed < n * a0 * growth - TRACING_TOLERANCE:
                    msg = (
                        f"chain from diamond {current.block_id} to "
                        f"{following.block_id} grows too fast"
                    )
                    logger.warning(msg)
                    return CheckOutcome.FAIL
                current = following
        if chains == 0:
            return CheckOutcome.NOT_APPLICABLE
        return CheckOutcome.PASS

    def _district_counts(
        self,
        trace: Trace,
        structure: BlockStructure,
        districts: abc.Sequence[District],
    ) -> dict[int, int]:
        """Count the non ``R_r/R_r`` districts below each block."""
        district_of = {
            block_id: district
            for district in districts
            for block_id in district.blocks
        }
        below = nx.DiGraph()
        for block in structure.get_blocks():
            below.add_node(block.block_id)
            roles = block_edge_roles(trace, block)
            if "sw" in roles:
                left, _ = structure.get_edge_sides(roles["sw"])
                below.add_edge(block.block_id, left)
            if "se" in roles:
                _, right = structure.get_edge_sides(roles["se"])
                below.add_edge(block.block_id, right)

        counts = {}
        for block_id in below.nodes:
            crossed = {
                district_of[other].district_id
                for other in (block_id, *nx.descendants(below, block_id))
                if district_of[other].block_type != RAREFACTION_PAIR
            }
            counts[block_id] = len(crossed)
        return counts

    def calculate(
        self,
        trace: Trace,
        structure: BlockStructure | None = None,
        districts: abc.Sequence[District] | None = None,
        functional: DensityFunctional | None = None,
    ) -> abc.Iterable[dict]:
        """Perform calculation on `trace`.

        Parameters:
            trace:
                The completed run.

            structure:
                Its blocks, extracted when omitted.

            districts:
                Its districts, built when omitted.

            functional:
                Its density functional, built when omitted.

        Yields:
            Dictionary of results.

        """
        if structure is None:
            structure = extract_blocks(trace)
        if districts is None:
            districts = build_districts(trace, structure)
        if functional is None:
            functional = DensityFunctional(trace, structure)
        grid = trace.get_grid()
        n = trace.get_resolution()

        blocks = structure.get_blocks()
        volumes = {
            block.block_id: grid.get_volume(block.state.get_j())
            for block in blocks
        }
        max_v0 = max(volumes[b.block_id] for b in blocks if b.is_initial())
        slack = self._district_counts(trace, structure, districts)
        d_max = max(slack.values())
        a0 = functional.sample(0.0).a
        rates = [
            (volumes[block.block_id] - max_v0) / block.t_birth
            for block in blocks
            if block.t_birth > 0
        ]
        l_measured = max([0.0, *rates])

        if math.isinf(a0):
            bound_ok = None
            outcome = CheckOutcome.NOT_APPLICABLE
            tracing = CheckOutcome.NOT_APPLICABLE
        else:
            bound_ok = all(
                volumes[block.block_id]
                <= max_v0
                + block.t_birth / (n * a0)
                + slack[block.block_id] / n
                + TOLERANCE
                for block in blocks
            )
            outcome = CheckOutcome.PASS if bound_ok else CheckOutcome.FAIL
            tracing = self._tracing(
                trace, structure, functional.get_diamonds(), a0
            )
        if outcome is CheckOutcome.FAIL:
            msg = (
                f"volume bound violated at n = {n}: L_measured = "
                f"{l_measured}, a0 = {a0}, D = {d_max}"
            )
            logger.warning(msg)

        yield {
            "max_v0": max_v0,
            "a0": a0,
            "n": n,
            "L_measured": l_measured,
            "D_max": d_max,
            "bound_ok": bound_ok,
            "outcome": outcome,
            "tracing": tracing,
        }

    def get_results(
        self,
        trace: Trace,
        structure: BlockStructure | None = None,
        districts: abc.Sequence[District] | None = None,
        functional: DensityFunctional | None = None,
    ) -> DensityBoundResults:
        """Check the volume bound of `trace`.

        Parameters:
            trace:
                The completed run.

            structure:
                Its blocks, extracted when omitted.

            districts:
                Its districts, built when omitted.

            functional:
                Its density functional, built when omitted.

        Returns:
            The bound report.

        """
        return DensityBoundResults(
            self.calculate(
                trace=trace,
                structure=structure,
                districts=districts,
                functional=functional,
            )
        )


def check_density_bound(trace: Trace) -> DensityBoundResults:
    """Check the volume bound of `trace`."""
    return DensityBoundCalculator().get_results(trace)
