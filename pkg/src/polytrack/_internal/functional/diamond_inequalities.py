import logging

from polytrack._internal.functional.complete_diamonds import CompleteDiamond
from polytrack._internal.types import Character, CheckOutcome

logger = logging.getLogger(__name__)

TOLERANCE = 1e-9
DECAYING = frozenset({Character.C_C, Character.C_R, Character.R_C})


def _projections(diamond: CompleteDiamond) -> dict[str, float]:
    south, west, east, north = (
        diamond.south,
        diamond.west,
        diamond.east,
        diamond.north,
    )
    if west is None or east is None or north is None:
        msg = f"diamond {diamond.block_id} has an open side"
        raise ValueError(msg)
    return {
        "sw": abs(west[0] - south[0]),
        "se": abs(east[0] - south[0]),
        "nw": abs(north[0] - west[0]),
        "ne": abs(north[0] - east[0]),
    }


def rarefaction_margin(diamond: CompleteDiamond) -> float:
    """Return how much the shorter north projection exceeds the south one.

    The margin is ``min(B_NW, B_NE) - min(B_SW, B_SE)`` over the
    x-projections of the four edges. When the north projections are the
    convex combinations of the south ones, it is zero exactly when the
    two south projections are equal.

    Raises:
        :class:`ValueError`: If `diamond` has an open side.

    """
    b = _projections(diamond)
    return min(b["nw"], b["ne"]) - min(b["sw"], b["se"])


def _check_rarefaction_pair(
    diamond: CompleteDiamond,
    tolerance: float,
    *,
    strict: bool,
) -> bool:
    b = _projections(diamond)
    margin = rarefaction_margin(diamond)
    if strict and abs(b["sw"] - b["se"]) > tolerance:
        minimum = tolerance
    else:
        minimum = -tolerance
    ratio = diamond.slopes["nw"] / diamond.slopes["se"]
    expected_nw = (0.5 + 0.5 * ratio) * b["se"] + (0.5 - 0.5 * ratio) * b["sw"]
    expected_ne = (0.5 + 0.5 * ratio) * b["sw"] + (0.5 - 0.5 * ratio) * b["se"]
    return (
        0 < ratio < 1
        and abs(b["nw"] - expected_nw) <= tolerance
        and abs(b["ne"] - expected_ne) <= tolerance
        and margin > minimum
    )


def check_diamond_inequalities(
    diamond: CompleteDiamond,
    tolerance: float = TOLERANCE,
    *,
    strict: bool = False,
) -> CheckOutcome:
    """Check the propagation inequalities of a complete diamond.

    For a diamond of two ``R_r`` families, the north projections are the
    convex combinations of the south projections fixed by the ratio of
    the forward speeds, so the shorter north projection is no shorter
    than the shorter south one. When only the forward family is ``R_r``
    and the backward one decays, ``x_E - x_N >= x_S - x_W``; the mirror
    inequality ``x_N - x_W >= x_E - x_S`` holds when only the backward
    family is ``R_r``.

    Parameters:
        diamond:
            A complete diamond.

        tolerance:
            Absolute slack on every comparison.

        strict:
            Require the shorter north projection of an ``R_r/R_r``
            diamond to exceed the shorter south one by more than
            `tolerance`, unless the south projections are equal.

    Returns:
        :attr:`CheckOutcome.NOT_APPLICABLE` for diamonds missing an edge
        or of any other type.

    """
    if not diamond.has_all_edges():
        return CheckOutcome.NOT_APPLICABLE
    forward, backward = diamond.block_type
    x_south = diamond.south[0]
    x_west = diamond.west[0] if diamond.west else x_south
    x_east = diamond.east[0] if diamond.east else x_south
    x_north = diamond.north[0] if diamond.north else x_south

    if forward is Character.R_R and backward is Character.R_R:
        passed = _check_rarefaction_pair(diamond, tolerance, strict=strict)
    elif forward is Character.R_R and backward in DECAYING:
        passed = x_east - x_north >= x_south - x_west - tolerance
    elif backward is Character.R_R and forward in DECAYING:
        passed = x_north - x_west >= x_east - x_south - tolerance
    else:
        return CheckOutcome.NOT_APPLICABLE

    if passed:
        return CheckOutcome.PASS
    msg = (
        f"diamond {diamond.block_id} of type {forward}/{backward} breaks "
        "its propagation inequality"
    )
    logger.warning(msg)
    return CheckOutcome.FAIL
