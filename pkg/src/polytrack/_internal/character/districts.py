import logging
from collections import abc
from dataclasses import dataclass
from typing import Any, Self

import networkx as nx

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
from polytrack._internal.types import (
    BlockType,
    Character,
    CheckOutcome,
    EdgeRef,
)

logger = logging.getLogger(__name__)

DECAYING = frozenset({Character.C_R, Character.C_C, Character.R_C})


def block_type(
    trace: Trace,
    block: Block,
    characters: dict[EdgeRef, EdgeCharacter],
) -> BlockType:
    """Return the ``(forward, backward)`` characters of `block`.

    The forward character is read from the south-east edge, falling back
    to the north-west edge; the backward character from the south-west
    edge, falling back to the north-east edge.

    """
    roles = block_edge_roles(trace, block)
    forward_edge = roles.get("se", roles.get("nw"))
    backward_edge = roles.get("sw", roles.get("ne"))
    return (
        None if forward_edge is None else characters[forward_edge].character,
        None if backward_edge is None else characters[backward_edge].character,
    )


def format_block_type(value: BlockType) -> str:
    """Return a label such as ``"R_r/C_c"``, with ``-`` for absent."""
    forward, backward = value
    return f"{forward or '-'}/{backward or '-'}"


@dataclass(frozen=True, slots=True)
class District:
    """A maximal connected set of blocks of one type.

    Attributes:
        district_id:
            Index of the district.

        block_type:
            The common ``(forward, backward)`` characters.

        blocks:
            Ids of the member blocks.

        lower_boundary:
            South edges of member blocks whose other side lies outside.

        upper_boundary:
            North edges of member blocks whose other side lies outside.

        time_span:
            Earliest birth and latest death of the member blocks, with
            deaths capped at the end of the run.

    """

    district_id: int
    block_type: BlockType
    blocks: tuple[int, ...]
    lower_boundary: tuple[EdgeRef, ...]
    upper_boundary: tuple[EdgeRef, ...]
    time_span: tuple[float, float]

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.district_id,
            "type": format_block_type(self.block_type),
            "block_count": len(self.blocks),
            "time_span": list(self.time_span),
        }


class DistrictNetwork:
    """A :mod:`networkx` graph of blocks joined across shared edges.

    Nodes are block ids carrying a ``block_type`` attribute. Two blocks
    are joined when they share an edge and have the same type, so the
    connected components are the districts.

    Parameters:
        graph:
            The NetworkX graph to initialise from.

    """

    def __init__(self, graph: nx.Graph) -> None:
        self._graph = graph

    @classmethod
    def init_from_blocks(
        cls,
        trace: Trace,
        structure: BlockStructure,
        characters: dict[EdgeRef, EdgeCharacter] | None = None,
    ) -> Self:
        """Initialize from the blocks of a trace.

        Parameters:
            trace:
                The completed run.

            structure:
                Its blocks.

            characters:
                Edge characters, computed when omitted.

        """
        if characters is None:
            characters = classify_edges(trace)
        g = nx.Graph()
        for block in structure.get_blocks():
            g.add_node(
                block.block_id,
                block_type=block_type(trace, block, characters),
            )
        for edge in structure.get_edges():
            left, right = structure.get_edge_sides(edge)
            if g.nodes[left]["block_type"] == g.nodes[right]["block_type"]:
                g.add_edge(left, right, edge=edge)
        return cls(g)

    def get_graph(self) -> nx.Graph:
        """Return a :class:`networkx.Graph`."""
        return self._graph

    def get_nodes(self) -> abc.Iterator[int]:
        yield from self._graph.nodes

    def get_block_type(self, block_id: int) -> BlockType:
        return self._graph.nodes[block_id]["block_type"]

    def clone(self) -> Self:
        """Return a clone."""
        clone = self.__class__.__new__(self.__class__)
        DistrictNetwork.__init__(self=clone, graph=self._graph.copy())
        return clone

    def get_connected_components(self) -> list[set[int]]:
        """Return the sets of block ids of each connected component."""
        return sorted(nx.connected_components(self._graph), key=min)

    def __str__(self) -> str:
        return repr(self)

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}("
            f"n={self._graph.number_of_nodes()}, "
            f"e={self._graph.number_of_edges()})"
        )


def _other_side(
    structure: BlockStructure,
    edge: EdgeRef,
    block_id: int,
) -> int:
    left, right = structure.get_edge_sides(edge)
    return right if left == block_id else left


def build_districts(
    trace: Trace,
    structure: BlockStructure | None = None,
) -> list[District]:
    """Partition the blocks of `trace` into districts.

    Parameters:
        trace:
            The completed run.

        structure:
            Its blocks, extracted when omitted.

    Returns:
        The districts, ordered by their smallest block id.

    """
    if structure is None:
        structure = extract_blocks(trace)
    network = DistrictNetwork.init_from_blocks(trace, structure)
    districts = []
    for district_id, members in enumerate(
        network.get_connected_components()
    ):
        lower: list[EdgeRef] = []
        upper: list[EdgeRef] = []
        for block_id in sorted(members):
            roles = block_edge_roles(trace, structure.get_block(block_id))
            for role, edge in sorted(roles.items()):
                if _other_side(structure, edge, block_id) in members:
                    continue
                (lower if role[0] == "s" else upper).append(edge)
        blocks = [structure.get_block(block_id) for block_id in members]
        districts.append(
            District(
                district_id=district_id,
                block_type=network.get_block_type(min(members)),
                blocks=tuple(sorted(members)),
                lower_boundary=tuple(sorted(set(lower))),
                upper_boundary=tuple(sorted(set(upper))),
                time_span=(
                    min(block.t_birth for block in blocks),
                    min(
                        max(block.t_death for block in blocks),
                        trace.get_t_end(),
                    ),
                ),
            )
        )
    msg = (
        f"found {len(districts)} districts in "
        f"{structure.get_number_of_blocks()} blocks"
    )
    logger.info(msg)
    return districts


def _decay_variant(
    trace: Trace,
    structure: BlockStructure,
    district: District,
    reference_role: str,
    checked_role: str,
) -> CheckOutcome:
    members = set(district.blocks)
    references = [
        structure.get_block(block_id).state.get_j()
        for block_id in members
        if structure.get_block(block_id).is_initial()
    ]
    checked = []
    for block_id in members:
        roles = block_edge_roles(trace, structure.get_block(block_id))
        for role, values in (
            (reference_role, references),
            (checked_role, checked),
        ):
            edge = roles.get(role)
            if edge is None:
                continue
            other = _other_side(structure, edge, block_id)
            if other not in members:
                values.append(structure.get_block(other).state.get_j())
    if not references:
        return CheckOutcome.NOT_APPLICABLE
    reference = max(references)
    inside = max(structure.get_block(b).state.get_j() for b in members)
    if all(j <= reference for j in checked) and inside <= reference + 1:
        return CheckOutcome.PASS
    msg = (
        f"district {district.district_id} "
        f"({format_block_type(district.block_type)}) exceeds the volume "
        f"index {reference} of its {reference_role} boundary"
    )
    logger.warning(msg)
    return CheckOutcome.FAIL


def check_district_decay(
    trace: Trace,
    district: District,
    structure: BlockStructure | None = None,
) -> CheckOutcome:
    """Check that the volume does not grow across a decaying district.

    A district whose forward character is ``C_r``, ``C_c`` or ``R_c`` is
    checked against its south-east boundary: blocks beyond its north-west
    boundary may not exceed the largest volume index below the south-east
    boundary (or present at ``t = 0``), and blocks inside may exceed it
    by at most one. Backward characters are checked the same way with
    the south-west and north-east boundaries.

    Parameters:
        trace:
            The completed run.

        district:
            The district to check.

        structure:
            The blocks of `trace`, extracted when omitted.

    Returns:
        :attr:`CheckOutcome.NOT_APPLICABLE` for districts with no
        decaying character or no reference block.

    """
    if structure is None:
        structure = extract_blocks(trace)
    forward, backward = district.block_type
    outcomes = []
    if forward in DECAYING:
        outcomes.append(
            _decay_variant(trace, structure, district, "se", "nw")
        )
    if backward in DECAYING:
        outcomes.append(
            _decay_variant(trace, structure, district, "sw", "ne")
        )
    outcomes = [o for o in outcomes if o is not CheckOutcome.NOT_APPLICABLE]
    if not outcomes:
        return CheckOutcome.NOT_APPLICABLE
    if CheckOutcome.FAIL in outcomes:
        return CheckOutcome.FAIL
    return CheckOutcome.PASS
