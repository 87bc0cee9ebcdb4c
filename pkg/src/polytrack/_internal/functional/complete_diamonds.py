import enum
import logging
import math
from dataclasses import dataclass

from polytrack._internal.character.districts import block_type
from polytrack._internal.character.edge_character import (
    EdgeCharacter,
    classify_edges,
)
from polytrack._internal.tracking.blocks import (
    Block,
    BlockStructure,
    block_edge_roles,
    extract_blocks,
)
from polytrack._internal.tracking.trace import Trace
from polytrack._internal.types import BlockType, EdgeRef

logger = logging.getLogger(__name__)

Point = tuple[float, float]
"""A point ``(x, t)`` of the wave diagram."""


class DiamondKind(enum.StrEnum):
    """How a block was completed to a diamond."""

    INTERIOR = "interior"
    PENTAGON = "pentagon"
    LATERAL = "lateral"


@dataclass(frozen=True, slots=True)
class CompleteDiamond:
    """A block completed to a diamond.

    Corners are ``(x, t)`` points. The south corner of a pentagon lies
    below ``t = 0`` where its two south edges meet when extended. A
    lateral diamond has a single south edge, its south corner on
    ``t = 0`` and no corners on its open side.

    """

    block_id: int
    kind: DiamondKind
    block_type: BlockType
    state_j: int
    sw: EdgeRef | None
    nw: EdgeRef | None
    se: EdgeRef | None
    ne: EdgeRef | None
    south: Point
    west: Point | None
    east: Point | None
    north: Point | None
    slopes: dict[str, float]

    def get_south_edges(self) -> tuple[EdgeRef, ...]:
        return tuple(edge for edge in (self.sw, self.se) if edge is not None)

    def get_level(self) -> float:
        """Return the height used to select the diamond."""
        return max(self.south[1], 0.0)

    def has_all_edges(self) -> bool:
        return None not in (self.sw, self.nw, self.se, self.ne)

    def south_projection(self, edge: EdgeRef) -> float:
        """Return the x-projection of a south edge from the south corner."""
        corner = self.west if edge == self.sw else self.east
        if corner is None:
            msg = f"{edge} is not a south edge of block {self.block_id}"
            raise ValueError(msg)
        return abs(corner[0] - self.south[0])


def _complete(
    trace: Trace,
    block: Block,
    characters: dict[EdgeRef, EdgeCharacter],
) -> CompleteDiamond | None:
    roles = block_edge_roles(trace, block)
    segments = {role: trace.get_segment(edge) for role, edge in roles.items()}
    slopes = {role: segment.slope for role, segment in segments.items()}
    common = {
        "block_id": block.block_id,
        "block_type": block_type(trace, block, characters),
        "state_j": block.state.get_j(),
        "slopes": slopes,
        **{role: roles.get(role) for role in ("sw", "nw", "se", "ne")},
    }
    dies = not math.isinf(block.t_death)

    if len(roles) == 4 and dies:  # noqa: PLR2004
        sw, se = segments["sw"], segments["se"]
        west = (sw.x1, sw.t1)
        east = (se.x1, se.t1)
        north = (segments["nw"].x1, segments["nw"].t1)
        if not block.is_initial():
            return CompleteDiamond(
                kind=DiamondKind.INTERIOR,
                south=(sw.x0, sw.t0),
                west=west,
                east=east,
                north=north,
                **common,
            )
        if sw.t0 == 0 and se.t0 == 0:
            # Extend both south edges below the initial line.
            t_south = min((se.x0 - sw.x0) / (sw.slope - se.slope), 0.0)
            return CompleteDiamond(
                kind=DiamondKind.PENTAGON,
                south=(sw.x0 + sw.slope * t_south, t_south),
                west=west,
                east=east,
                north=north,
                **common,
            )
        return None

    if not block.is_initial():
        return None
    if block.is_left_unbounded() and set(roles) == {"se", "ne"}:
        se = segments["se"]
        if se.t0 == 0 and not se.is_open():
            return CompleteDiamond(
                kind=DiamondKind.LATERAL,
                south=(se.x0, 0.0),
                west=None,
                east=(se.x1, se.t1),
                north=None,
                **common,
            )
    if block.is_right_unbounded() and set(roles) == {"sw", "nw"}:
        sw = segments["sw"]
        if sw.t0 == 0 and not sw.is_open():
            return CompleteDiamond(
                kind=DiamondKind.LATERAL,
                south=(sw.x0, 0.0),
                west=(sw.x1, sw.t1),
                east=None,
                north=None,
                **common,
            )
    return None


def find_complete_diamonds(
    trace: Trace,
    structure: BlockStructure | None = None,
    characters: dict[EdgeRef, EdgeCharacter] | None = None,
) -> dict[int, CompleteDiamond]:
    """Complete every eligible block of `trace` to a diamond.

    Three kinds of block qualify:

    * interior blocks born and dying at interactions, with all four
      edges,
    * blocks on the initial line whose two south edges start at
      ``t = 0``; the south edges are extended below the line,
    * the outermost blocks on the initial line whose bounded side is a
      south edge from ``t = 0`` followed by a north edge.

    Parameters:
        trace:
            The completed run.

        structure:
            Its blocks, extracted when omitted.

        characters:
            Edge characters, computed when omitted.

    Returns:
        The diamonds keyed by block id.

    """
    if structure is None:
        structure = extract_blocks(trace)
    if characters is None:
        characters = classify_edges(trace)
    diamonds = {}
    for block in structure.get_blocks():
        diamond = _complete(trace, block, characters)
        if diamond is not None:
            diamonds[block.block_id] = diamond
    msg = (
        f"completed {len(diamonds)} of "
        f"{structure.get_number_of_blocks()} blocks to diamonds"
    )
    logger.debug(msg)
    return diamonds
