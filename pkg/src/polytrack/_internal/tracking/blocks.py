import logging
import math
from collections import abc
from dataclasses import dataclass, field

from polytrack._internal.grid.standard_state import StandardState
from polytrack._internal.tracking.trace import Trace
from polytrack._internal.types import EdgeRef, Family

logger = logging.getLogger(__name__)


@dataclass(slots=True)
class Block:
    """A region of constant state between two adjacent fronts.

    ``left_edges`` lists the edges bounding the block on its left,
    bottom first; a left boundary is at most a backward (south-west) edge
    followed by a forward (north-west) edge. ``right_edges`` is at most a
    forward (south-east) edge followed by a backward (north-east) edge.
    The outermost blocks have no edges on their open side.

    """

    block_id: int
    state: StandardState
    t_birth: float
    t_death: float = math.inf
    left_edges: list[EdgeRef] = field(default_factory=list)
    right_edges: list[EdgeRef] = field(default_factory=list)

    def is_initial(self) -> bool:
        return self.t_birth == 0

    def is_alive_at(self, time: float) -> bool:
        return self.t_birth <= time < self.t_death

    def is_left_unbounded(self) -> bool:
        return not self.left_edges

    def is_right_unbounded(self) -> bool:
        return not self.right_edges


class BlockStructure:
    """All blocks of a trace and the blocks on either side of each edge.

    Parameters:
        blocks:
            The blocks, indexed by id.

        edge_sides:
            Maps each edge to ``(left block id, right block id)``.

    """

    def __init__(
        self,
        blocks: abc.Sequence[Block],
        edge_sides: dict[EdgeRef, tuple[int, int]],
    ) -> None:
        self._blocks = tuple(blocks)
        self._edge_sides = dict(edge_sides)

    def get_blocks(self) -> tuple[Block, ...]:
        return self._blocks

    def get_block(self, block_id: int) -> Block:
        return self._blocks[block_id]

    def get_edges(self) -> tuple[EdgeRef, ...]:
        return tuple(sorted(self._edge_sides))

    def get_edge_sides(self, edge: EdgeRef) -> tuple[int, int]:
        return self._edge_sides[edge]

    def get_left_block(self, edge: EdgeRef) -> Block:
        return self._blocks[self._edge_sides[edge][0]]

    def get_right_block(self, edge: EdgeRef) -> Block:
        return self._blocks[self._edge_sides[edge][1]]

    def get_number_of_blocks(self) -> int:
        return len(self._blocks)

    def __str__(self) -> str:
        return (
            f"{self.__class__.__name__}(blocks={len(self._blocks)}, "
            f"edges={len(self._edge_sides)})"
        )

    def __repr__(self) -> str:
        return str(self)


def extract_blocks(trace: Trace) -> BlockStructure:
    """Rebuild the blocks of a trace from its fronts and events.

    The blocks at ``t = 0`` are the gaps between the initial fronts.
    Every interaction kills the block between its two fronts and gives
    birth to a new one above the crossing point.

    Parameters:
        trace:
            The completed run.

    Returns:
        The block structure.

    """
    order = list(trace.get_initial_order())
    positions = {front_id: p for p, front_id in enumerate(order)}
    segment_index = dict.fromkeys(order, 0)

    blocks: list[Block] = []
    edge_sides: dict[EdgeRef, tuple[int, int]] = {}
    profile = trace.get_initial_profile()

    if not order:
        blocks.append(Block(0, profile.states[0], 0.0))
        return BlockStructure(blocks, edge_sides)

    for position in range(len(order) + 1):
        if position < len(order):
            state = trace.get_front(order[position]).get_segment(0).left_state
        else:
            state = trace.get_front(order[-1]).get_segment(0).right_state
        block = Block(position, state, 0.0)
        if position > 0:
            block.left_edges.append((order[position - 1], 0))
        if position < len(order):
            block.right_edges.append((order[position], 0))
        blocks.append(block)
    gaps = list(range(len(order) + 1))
    for position, front_id in enumerate(order):
        edge_sides[(front_id, 0)] = (gaps[position], gaps[position + 1])

    for event in trace.get_interactions():
        forward_id, backward_id = event.participants
        position = positions[forward_id]
        if order[position + 1] != backward_id:
            msg = (
                f"interaction at t = {event.time} between fronts "
                f"{forward_id} and {backward_id} which are not adjacent"
            )
            raise ValueError(msg)
        blocks[gaps[position + 1]].t_death = event.time

        order[position], order[position + 1] = backward_id, forward_id
        positions[backward_id] = position
        positions[forward_id] = position + 1
        segment_index[backward_id] += 1
        segment_index[forward_id] += 1
        backward_edge = (backward_id, segment_index[backward_id])
        forward_edge = (forward_id, segment_index[forward_id])

        born = Block(
            block_id=len(blocks),
            state=trace.get_segment(backward_edge).right_state,
            t_birth=event.time,
            left_edges=[backward_edge],
            right_edges=[forward_edge],
        )
        blocks.append(born)
        gaps[position + 1] = born.block_id
        blocks[gaps[position]].right_edges.append(backward_edge)
        blocks[gaps[position + 2]].left_edges.append(forward_edge)
        edge_sides[backward_edge] = (gaps[position], born.block_id)
        edge_sides[forward_edge] = (born.block_id, gaps[position + 2])

    msg = f"extracted {len(blocks)} blocks from {len(order)} fronts"
    logger.debug(msg)
    return BlockStructure(blocks, edge_sides)


def block_edge_roles(trace: Trace, block: Block) -> dict[str, EdgeRef]:
    """Name the boundary edges of `block` by compass role.

    Returns:
        A mapping with a subset of the keys ``"sw"`` and ``"nw"`` (left
        side, backward then forward) and ``"se"`` and ``"ne"`` (right
        side, forward then backward).

    """
    roles = {}
    for edge in block.left_edges:
        family = trace.get_front(edge[0]).get_family()
        roles["sw" if family is Family.BACKWARD else "nw"] = edge
    for edge in block.right_edges:
        family = trace.get_front(edge[0]).get_family()
        roles["se" if family is Family.FORWARD else "ne"] = edge
    return roles
