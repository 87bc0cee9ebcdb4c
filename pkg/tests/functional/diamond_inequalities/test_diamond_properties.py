import numpy as np
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import polytrack

projections = st.floats(min_value=0.01, max_value=2.0)
ratios = st.floats(min_value=0.05, max_value=0.95)


def _admissible(
    south_west: float,
    south_east: float,
    ratio: float,
) -> polytrack.analysis.CompleteDiamond:
    weight = 0.5 + 0.5 * ratio
    north_west = weight * south_east + (1 - weight) * south_west
    return polytrack.analysis.CompleteDiamond(
        block_id=0,
        kind=polytrack.analysis.DiamondKind.INTERIOR,
        block_type=(polytrack.Character.R_R, polytrack.Character.R_R),
        state_j=1,
        sw=(0, 0),
        nw=(2, 0),
        se=(1, 0),
        ne=(3, 0),
        south=(0.0, 0.0),
        west=(-south_west, 1.0),
        east=(south_east, 1.0),
        north=(north_west - south_west, 2.0),
        slopes={"sw": -1.0, "se": 2.0, "nw": 2.0 * ratio, "ne": -1.0},
    )


@given(south_west=projections, south_east=projections, ratio=ratios)
@settings(max_examples=100, deadline=None)
def test_admissible_diamonds(
    south_west: float,
    south_east: float,
    ratio: float,
) -> None:
    diamond = _admissible(south_west, south_east, ratio)
    margin = polytrack.analysis.rarefaction_margin(diamond)
    assert np.isclose(
        margin,
        (0.5 - 0.5 * ratio) * abs(south_west - south_east),
        atol=1e-12,
    )
    assert (
        polytrack.analysis.check_diamond_inequalities(diamond)
        is polytrack.CheckOutcome.PASS
    )


@given(south_west=projections, south_east=projections, ratio=ratios)
@settings(max_examples=100, deadline=None)
def test_admissible_diamonds_are_strict(
    south_west: float,
    south_east: float,
    ratio: float,
) -> None:
    assume(abs(south_west - south_east) > 1e-6)
    diamond = _admissible(south_west, south_east, ratio)
    assert polytrack.analysis.rarefaction_margin(diamond) > 0
    assert (
        polytrack.analysis.check_diamond_inequalities(diamond, strict=True)
        is polytrack.CheckOutcome.PASS
    )


@given(
    south_west=projections,
    south_east=projections,
    ratio=ratios,
    shift=st.floats(min_value=0.01, max_value=0.5),
)
@settings(max_examples=100, deadline=None)
def test_moved_north_corner_fails(
    south_west: float,
    south_east: float,
    ratio: float,
    shift: float,
) -> None:
    diamond = _admissible(south_west, south_east, ratio)
    x, t = diamond.north
    moved = polytrack.analysis.CompleteDiamond(
        block_id=diamond.block_id,
        kind=diamond.kind,
        block_type=diamond.block_type,
        state_j=diamond.state_j,
        sw=diamond.sw,
        nw=diamond.nw,
        se=diamond.se,
        ne=diamond.ne,
        south=diamond.south,
        west=diamond.west,
        east=diamond.east,
        north=(x + shift, t),
        slopes=diamond.slopes,
    )
    assert (
        polytrack.analysis.check_diamond_inequalities(moved)
        is polytrack.CheckOutcome.FAIL
    )
