import numpy as np
import pytest

import polytrack
from tests.utilities import run_preset

_CROSSING_TIME = 0.5 / 1.490289
_EXIT_TIME = _CROSSING_TIME + 2 / 1.340350


def test_initial_fronts(two_rarefactions: polytrack.Trace) -> None:
    forward, backward = two_rarefactions.get_fronts()
    assert forward.get_family() is polytrack.Family.FORWARD
    assert backward.get_family() is polytrack.Family.BACKWARD
    assert forward.get_strength() == 1
    assert backward.get_strength() == 1
    assert np.isclose(forward.get_segment(0).x0, -0.5)
    assert np.isclose(backward.get_segment(0).x0, 0.5)
    assert np.isclose(forward.get_segment(0).slope, 1.490289, atol=1e-4)
    assert np.isclose(
        backward.get_segment(0).slope,
        -forward.get_segment(0).slope,
    )
    assert two_rarefactions.get_initial_order() == (0, 1)


def test_interaction(two_rarefactions: polytrack.Trace) -> None:
    (event,) = two_rarefactions.get_interactions()
    assert event.participants == (0, 1)
    assert np.isclose(event.time, _CROSSING_TIME, atol=1e-5)
    assert np.isclose(event.x, 0.0, atol=1e-10)

    forward = two_rarefactions.get_front(0)
    backward = two_rarefactions.get_front(1)
    assert len(forward.get_segments()) == 2
    assert len(backward.get_segments()) == 2
    middle = polytrack.StandardState(10, 1, 1)
    assert forward.get_segment(1).left_state == middle
    assert backward.get_segment(1).right_state == middle
    assert np.isclose(forward.get_segment(1).slope, 1.340350, atol=1e-4)
    assert np.isclose(backward.get_segment(1).slope, -1.340350, atol=1e-4)
    # Each front keeps its strength through the crossing.
    assert forward.get_segment(1).strength == 1
    assert backward.get_segment(1).strength == 1


def test_domain_exits(two_rarefactions: polytrack.Trace) -> None:
    assert (
        two_rarefactions.get_stop_reason()
        is polytrack.StopReason.REACHED_T_MAX
    )
    assert two_rarefactions.get_t_end() == 2.0
    assert two_rarefactions.get_collision_time() is None
    exits = [
        event
        for event in two_rarefactions.get_events()
        if event.kind is polytrack.EventKind.DOMAIN_EXIT
    ]
    assert sorted(event.participants for event in exits) == [(0,), (1,)]
    for event in exits:
        assert np.isclose(event.time, _EXIT_TIME, atol=1e-4)
        assert abs(event.x) == 2.0
    times = [event.time for event in two_rarefactions.get_events()]
    assert times == sorted(times)


def test_no_exit_before_t_max() -> None:
    trace = run_preset("two_rarefactions", n=10, t_max=1.0)
    assert [event.kind for event in trace.get_events()] == [
        polytrack.EventKind.OPPOSITE_FAMILY_INTERACTION
    ]
    for front in trace.get_fronts():
        assert front.get_current_segment().t1 == 1.0


@pytest.mark.parametrize(
    ("x", "t", "state"),
    [
        (0.0, 0.0, (1, -1)),
        (0.0, 1.0, (1, 1)),
        (-1.9, 0.0, (0, 0)),
        (1.9, 0.0, (2, 0)),
        (-1.9, 1.9, (1, 1)),
    ],
)
def test_query_state(
    two_rarefactions: polytrack.Trace,
    x: float,
    t: float,
    state: tuple[int, int],
) -> None:
    assert polytrack.query_state(
        two_rarefactions, x, t
    ) == polytrack.StandardState(10, *state)


@pytest.mark.parametrize("t", [-0.1, 2.0, 3.0])
def test_query_state_outside_run(
    two_rarefactions: polytrack.Trace,
    t: float,
) -> None:
    with pytest.raises(polytrack.QueryTimeError):
        polytrack.query_state(two_rarefactions, 0.0, t)


def test_segments_connect(two_rarefactions: polytrack.Trace) -> None:
    for front in two_rarefactions.get_fronts():
        segments = front.get_segments()
        for earlier, later in zip(segments, segments[1:], strict=False):
            assert earlier.t1 == later.t0
            assert earlier.x1 == later.x0


def test_same_family_collision(compression_pair: polytrack.Trace) -> None:
    assert (
        compression_pair.get_stop_reason()
        is polytrack.StopReason.SAME_FAMILY_COLLISION
    )
    first, second = compression_pair.get_fronts()
    assert first.get_family() is polytrack.Family.BACKWARD
    assert second.get_family() is polytrack.Family.BACKWARD
    assert first.get_strength() == -1
    assert second.get_strength() == -1
    assert first.get_segment(0).left_state == polytrack.StandardState(
        10, 2, 2
    )
    assert second.get_segment(0).right_state == polytrack.StandardState(
        10, 0, 0
    )

    left = first.get_segment(0)
    right = second.get_segment(0)
    expected = (right.x0 - left.x0) / (left.slope - right.slope)
    assert np.isclose(compression_pair.get_collision_time(), expected)
    assert 1.7 < expected < 1.9
    collision_time = compression_pair.get_collision_time()
    assert compression_pair.get_t_end() == collision_time

    (event,) = [
        event
        for event in compression_pair.get_events()
        if event.kind is polytrack.EventKind.SAME_FAMILY_COLLISION
    ]
    assert event.participants == (0, 1)
    assert not compression_pair.get_interactions()


def test_family_neighbour(compression_pair: polytrack.Trace) -> None:
    assert compression_pair.get_family_neighbour(0) == 1
    assert compression_pair.get_family_neighbour(1) is None


def test_invalid_t_max() -> None:
    grid = polytrack.build_grid(polytrack.GasParams(1.0, 2.0), 10)
    with pytest.raises(ValueError, match="t_max"):
        polytrack.FrontTracker(grid, t_max=0.0)


def test_constant_data() -> None:
    grid = polytrack.build_grid(polytrack.GasParams(1.0, 2.0), 10)
    r0, s0 = polytrack.custom(10, [[0.0, 0.0]], [[0.0, 0.0]])
    profile = polytrack.sample_initial_data(grid, r0, s0, (-1.0, 1.0))
    trace = polytrack.FrontTracker(grid, t_max=1.0).run(profile)
    assert not trace.get_fronts()
    assert not trace.get_events()
    assert polytrack.query_state(trace, 0.3, 0.5) == polytrack.StandardState(
        10, 0, 0
    )
