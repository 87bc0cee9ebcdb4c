import io
from collections import abc

import matplotlib.pyplot as plt
from matplotlib.axes import Axes

from polytrack._internal.character.districts import (
    District,
    build_districts,
    format_block_type,
)
from polytrack._internal.character.edge_character import classify_edges
from polytrack._internal.tracking.blocks import (
    Block,
    BlockStructure,
    extract_blocks,
)
from polytrack._internal.tracking.trace import Trace
from polytrack._internal.types import EdgeRef, Family

FIGURE_SIZE = (8, 6)
RC_PARAMS = {
    "svg.hashsalt": "polytrack",
    "svg.fonttype": "none",
}
FAMILY_COLOURS = {Family.FORWARD: "#1f4e9c", Family.BACKWARD: "#b22222"}
DISTRICT_COLOURS = (
    "#e41a1c",
    "#377eb8",
    "#4daf4a",
    "#984ea3",
    "#ff7f00",
    "#a65628",
    "#f781bf",
    "#999999",
)


def _chain(
    trace: Trace,
    edges: abc.Sequence[EdgeRef],
    t_bottom: float,
    t_top: float,
) -> list[tuple[float, float]]:
    points: list[tuple[float, float]] = []
    for edge in edges:
        segment = trace.get_segment(edge)
        start = max(segment.t0, t_bottom)
        end = min(segment.t1, t_top)
        if end < start:
            continue
        for time in (start, end):
            point = (segment.position_at(time), time)
            if not points or points[-1] != point:
                points.append(point)
    return points


def _block_outline(
    trace: Trace,
    block: Block,
) -> list[tuple[float, float]]:
    x_min, x_max = trace.get_initial_profile().domain
    t_bottom = block.t_birth
    t_top = min(block.t_death, trace.get_t_end())
    left = _chain(trace, block.left_edges, t_bottom, t_top)
    right = _chain(trace, block.right_edges, t_bottom, t_top)
    if not left:
        left = [(x_min, t_bottom), (x_min, t_top)]
    if not right:
        right = [(x_max, t_bottom), (x_max, t_top)]
    return left + right[::-1]


def _districts(
    ax: Axes,
    trace: Trace,
    structure: BlockStructure,
    districts: abc.Sequence[District],
) -> None:
    labels = sorted(
        {
            format_block_type(district.block_type)
            for district in districts
            if district.block_type != (None, None)
        }
    )
    colours = {
        label: DISTRICT_COLOURS[position % len(DISTRICT_COLOURS)]
        for position, label in enumerate(labels)
    }
    for district in districts:
        if district.block_type == (None, None):
            continue
        label = format_block_type(district.block_type)
        for block_id in district.blocks:
            outline = _block_outline(trace, structure.get_block(block_id))
            (patch,) = ax.fill(
                [x for x, _ in outline],
                [t for _, t in outline],
                color=colours[label],
                alpha=0.25,
                lw=0,
            )
            patch.set_gid(f"district-{district.district_id}-{block_id}")


def render_svg(
    trace: Trace,
    structure: BlockStructure | None = None,
    districts: abc.Sequence[District] | None = None,
) -> str:
    """Draw the ``(x, t)`` wave diagram of `trace`.

    Forward fronts are blue and backward fronts red. Compressive fronts
    are dashed, and fronts with a compressive neighbourhood ahead are
    drawn thinner. District blocks are shaded by type. Each front is
    drawn inside a group with the id ``front-<id>`` and each block
    inside ``district-<district id>-<block id>``. Identical traces give
    identical documents.

    Parameters:
        trace:
            The completed run.

        structure:
            Its blocks, extracted when omitted.

        districts:
            Its districts, built when omitted.

    Returns:
        The SVG document.

    Examples:
        .. code-block:: python

            import polytrack

            # trace from polytrack.FrontTracker(...).run(...)
            document = polytrack.render_svg(trace)

    """
    if structure is None:
        structure = extract_blocks(trace)
    if districts is None:
        districts = build_districts(trace, structure)
    characters = classify_edges(trace)
    x_min, x_max = trace.get_initial_profile().domain
    t_top = trace.get_t_end() if trace.get_t_end() > 0 else 1.0

    with plt.rc_context(RC_PARAMS):
        fig, ax = plt.subplots(figsize=FIGURE_SIZE)
        _districts(ax, trace, structure, districts)
        for front in trace.get_fronts():
            segments = front.get_segments()
            character = characters[segments[0].get_edge()].character
            (line,) = ax.plot(
                [segments[0].x0, *(s.x1 for s in segments)],
                [segments[0].t0, *(s.t1 for s in segments)],
                c=FAMILY_COLOURS[front.get_family()],
                lw=1.5 if character.is_sub_rarefactive() else 0.75,
                ls="-" if character.is_main_rarefactive() else "--",
            )
            line.set_gid(f"front-{front.get_id()}")
        ax.set_xlim(x_min, x_max)
        ax.set_ylim(0.0, t_top)
        ax.set_xlabel("x")
        ax.set_ylabel("t")
        fig.tight_layout()
        buffer = io.StringIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
        plt.close(fig)
    return buffer.getvalue()
