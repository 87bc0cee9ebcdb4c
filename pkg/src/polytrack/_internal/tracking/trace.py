import logging
from collections import abc

from polytrack._internal.grid.pressure_grid import PressureGrid
from polytrack._internal.grid.standard_state import StandardState
from polytrack._internal.tracking.event import Event
from polytrack._internal.tracking.front.front import Front
from polytrack._internal.tracking.front.segment import Segment
from polytrack._internal.tracking.sampling import InitialProfile
from polytrack._internal.types import EdgeRef, EventKind, Family, StopReason
from polytrack._internal.utilities.exceptions import QueryTimeError

logger = logging.getLogger(__name__)


class Trace:
    """A completed front-tracking run.

    Parameters:
        grid:
            The volume lattice used by the run.

        initial_profile:
            The sampled initial data.

        fronts:
            Every front of the run, with closed trajectories.

        events:
            Recorded events in time order.

        t_end:
            Time at which the run stopped.

        stop_reason:
            Why the run stopped.

        t_max:
            The requested final time.

    """

    def __init__(  # noqa: PLR0913
        self,
        grid: PressureGrid,
        initial_profile: InitialProfile,
        fronts: abc.Iterable[Front],
        events: abc.Iterable[Event],
        t_end: float,
        stop_reason: StopReason,
        t_max: float,
    ) -> None:
        self._grid = grid
        self._initial_profile = initial_profile
        self._fronts = {front.get_id(): front for front in fronts}
        self._events = tuple(events)
        self._t_end = t_end
        self._stop_reason = stop_reason
        self._t_max = t_max
        self._initial_order = tuple(
            sorted(
                self._fronts,
                key=lambda front_id: (
                    self._fronts[front_id].get_segment(0).x0,
                    self._fronts[front_id].get_segment(0).slope,
                ),
            )
        )

    def get_grid(self) -> PressureGrid:
        return self._grid

    def get_resolution(self) -> int:
        return self._grid.get_resolution()

    def get_initial_profile(self) -> InitialProfile:
        return self._initial_profile

    def get_fronts(self) -> tuple[Front, ...]:
        """Return the fronts ordered by id."""
        return tuple(self._fronts[key] for key in sorted(self._fronts))

    def get_front(self, front_id: int) -> Front:
        return self._fronts[front_id]

    def get_segment(self, edge: EdgeRef) -> Segment:
        front_id, index = edge
        return self._fronts[front_id].get_segment(index)

    def get_segments(self) -> abc.Iterator[Segment]:
        """Yield every segment, ordered by front id then index."""
        for front in self.get_fronts():
            yield from front.get_segments()

    def get_events(self) -> tuple[Event, ...]:
        return self._events

    def get_interactions(self) -> tuple[Event, ...]:
        return tuple(
            event
            for event in self._events
            if event.kind is EventKind.OPPOSITE_FAMILY_INTERACTION
        )

    def get_t_end(self) -> float:
        return self._t_end

    def get_t_max(self) -> float:
        return self._t_max

    def get_stop_reason(self) -> StopReason:
        return self._stop_reason

    def get_collision_time(self) -> float | None:
        if self._stop_reason is StopReason.SAME_FAMILY_COLLISION:
            return self._t_end
        return None

    def get_initial_order(self) -> tuple[int, ...]:
        """Return front ids in their left-to-right order at ``t = 0``."""
        return self._initial_order

    def get_family_neighbour(self, front_id: int) -> int | None:
        """Return the next same-family front in the direction of motion.

        For a backward front this is the next backward front to its
        right, for a forward front the next forward front to its left.
        Same-family fronts never cross during a run, so the order at
        ``t = 0`` holds throughout.

        """
        family = self._fronts[front_id].get_family()
        same = [
            key
            for key in self._initial_order
            if self._fronts[key].get_family() is family
        ]
        position = same.index(front_id)
        if family is Family.BACKWARD:
            return same[position + 1] if position + 1 < len(same) else None
        return same[position - 1] if position > 0 else None

    def get_far_left_state(self) -> StandardState:
        return self._initial_profile.states[0]

    def __str__(self) -> str:
        return (
            f"{self.__class__.__name__}(n={self.get_resolution()}, "
            f"fronts={len(self._fronts)}, events={len(self._events)}, "
            f"t_end={self._t_end}, stop_reason={self._stop_reason})"
        )

    def __repr__(self) -> str:
        return str(self)


def active_segments(trace: Trace, time: float) -> list[Segment]:
    """Return the segments alive at `time`, ordered left to right."""
    segments = []
    for front in trace.get_fronts():
        for segment in front.get_segments():
            if segment.is_active(time):
                segments.append(segment)
                break
    segments.sort(key=lambda s: (s.position_at(time), s.slope))
    return segments


def query_state(trace: Trace, x: float, t: float) -> StandardState:
    """Return the state at ``(x, t)``.

    On a front the state on its right is returned.

    Parameters:
        trace:
            The completed run.

        x:
            Position.

        t:
            Time, with ``0 <= t < t_end``.

    Returns:
        The standard state.

    Raises:
        :class:`QueryTimeError`: If `t` lies outside ``[0, t_end)``.

    """
    if not 0 <= t < trace.get_t_end():
        msg = f"query time {t} outside [0, {trace.get_t_end()})"
        raise QueryTimeError(msg)
    state = trace.get_far_left_state()
    for segment in active_segments(trace, t):
        if segment.position_at(t) > x:
            break
        state = segment.right_state
    return state
