import logging
import math
from collections import abc

from polytrack._internal.grid.pressure_grid import PressureGrid
from polytrack._internal.riemann.riemann_solver import solve_riemann
from polytrack._internal.tracking.event import (
    Event,
    EventQueue,
    PendingMeeting,
)
from polytrack._internal.tracking.front.front import Front
from polytrack._internal.tracking.front.segment import Segment
from polytrack._internal.tracking.sampling import InitialProfile
from polytrack._internal.tracking.trace import Trace
from polytrack._internal.types import EventKind, Family, StopReason
from polytrack._internal.utilities.exceptions import InconsistentChainError

logger = logging.getLogger(__name__)

TIE_TOLERANCE = 1e-12


def initial_fronts(
    grid: PressureGrid,
    initial_profile: InitialProfile,
) -> list[Front]:
    """Create the fronts emitted at ``t = 0``.

    Each breakpoint emits its backward front first, then its forward
    front. Ids are assigned in that order.

    """
    fronts: list[Front] = []
    for position, left, right in zip(
        initial_profile.breakpoints,
        initial_profile.states[:-1],
        initial_profile.states[1:],
        strict=True,
    ):
        fan = solve_riemann(grid, left, right)
        if fan.backward_slope is not None:
            fronts.append(
                Front.init_from_birth(
                    front_id=len(fronts),
                    family=Family.BACKWARD,
                    strength=fan.backward_strength,
                    time=0.0,
                    position=position,
                    slope=fan.backward_slope,
                    left_state=fan.left,
                    right_state=fan.middle,
                )
            )
        if fan.forward_slope is not None:
            fronts.append(
                Front.init_from_birth(
                    front_id=len(fronts),
                    family=Family.FORWARD,
                    strength=fan.forward_strength,
                    time=0.0,
                    position=position,
                    slope=fan.forward_slope,
                    left_state=fan.middle,
                    right_state=fan.right,
                )
            )
    return fronts


def meeting_time(left: Segment, right: Segment, now: float) -> float | None:
    """Return when two adjacent segments meet, or ``None``.

    Parameters:
        left:
            The segment on the left.

        right:
            The segment on the right.

        now:
            The current time; earlier meetings are clamped to it.

    Returns:
        The meeting time, or ``None`` if the segments do not approach.

    """
    if not left.slope > right.slope:
        return None
    time = (
        right.x0 - left.x0 - right.slope * right.t0 + left.slope * left.t0
    ) / (left.slope - right.slope)
    return max(time, now)


def process_interaction(
    grid: PressureGrid,
    backward_front: Front,
    forward_front: Front,
    time: float,
    position: float,
) -> tuple[Front, Front]:
    """Re-solve the Riemann problem where two opposite fronts cross.

    The forward front arrives from the left and the backward front from
    the right. The Riemann problem between the two outer states is
    solved again; each front keeps its id and strength and turns at the
    crossing point.

    Parameters:
        grid:
            The volume lattice.

        backward_front:
            The backward front, currently right of `forward_front`.

        forward_front:
            The forward front.

        time:
            Time of the crossing.

        position:
            Position of the crossing.

    Returns:
        The continued backward and forward fronts.

    Raises:
        :class:`InconsistentChainError`: If the fronts do not share their
            middle state or the new fan does not reproduce their
            strengths.

    """
    forward = forward_front.get_current_segment()
    backward = backward_front.get_current_segment()
    if (
        forward.family is not Family.FORWARD
        or backward.family is not Family.BACKWARD
    ):
        msg = (
            f"interaction needs a forward front left of a backward front, "
            f"got {forward_front} and {backward_front}"
        )
        raise InconsistentChainError(msg)
    if forward.right_state != backward.left_state:
        msg = (
            f"fronts {forward.front_id} and {backward.front_id} do not "
            f"share a state: {forward.right_state} != {backward.left_state}"
        )
        raise InconsistentChainError(msg)

    fan = solve_riemann(grid, forward.left_state, backward.right_state)
    if (
        fan.backward_strength != backward.strength
        or fan.forward_strength != forward.strength
        or fan.backward_slope is None
        or fan.forward_slope is None
    ):
        msg = (
            f"interaction of fronts {forward.front_id} and "
            f"{backward.front_id} changed their strengths"
        )
        raise InconsistentChainError(msg)

    continued_backward = backward_front.with_segment(
        time=time,
        slope=fan.backward_slope,
        left_state=fan.left,
        right_state=fan.middle,
        position=position,
    )
    continued_forward = forward_front.with_segment(
        time=time,
        slope=fan.forward_slope,
        left_state=fan.middle,
        right_state=fan.right,
        position=position,
    )
    return continued_backward, continued_forward


def domain_exits(
    fronts: abc.Iterable[Front],
    domain: tuple[float, float],
    t_end: float,
) -> list[Event]:
    """Return one exit event per front that leaves the domain.

    Backward fronts leave through ``x_min`` and forward fronts through
    ``x_max``.

    """
    x_min, x_max = domain
    exits = []
    for front in fronts:
        boundary = x_min if front.get_family() is Family.BACKWARD else x_max
        for segment in front.get_segments():
            if segment.t0 > t_end:
                break
            crossing = segment.t0 + (boundary - segment.x0) / segment.slope
            if crossing < segment.t0:
                break
            if crossing <= min(segment.t1, t_end):
                exits.append(
                    Event(
                        time=crossing,
                        x=boundary,
                        kind=EventKind.DOMAIN_EXIT,
                        participants=(front.get_id(),),
                    )
                )
                break
    return exits


class FrontTracker:
    """Evolve fronts with an event-driven loop.

    Adjacent fronts that approach each other are scheduled to meet in a
    priority queue. Opposite-family meetings are resolved with
    :func:`process_interaction`. The first meeting of two fronts of the
    same family stops the run. Meetings closer in time than
    `tie_tolerance` are processed leftmost first.

    Parameters:
        grid:
            The volume lattice.

        t_max:
            Final time of the run.

        tie_tolerance:
            Meetings within this time of each other count as
            simultaneous.

    Examples:
        .. code-block:: python

            import numpy as np
            import polytrack

            params = polytrack.GasParams(pressure_coefficient=1.0, gamma=5/3)
            grid = polytrack.build_grid(params, n=10)
            profile = polytrack.sample_initial_data(
                grid,
                r0=lambda x: np.where(x > 0, 0.2, 0.0),
                s0=lambda x: np.zeros_like(x),
                domain=(-1.0, 1.0),
            )
            trace = polytrack.FrontTracker(grid, t_max=2.0).run(profile)

    """

    def __init__(
        self,
        grid: PressureGrid,
        t_max: float,
        tie_tolerance: float = TIE_TOLERANCE,
    ) -> None:
        if not t_max > 0:
            msg = f"t_max must be positive, got {t_max}"
            raise ValueError(msg)
        self._grid = grid
        self._t_max = t_max
        self._tie_tolerance = tie_tolerance
        self._order: list[Front] = []
        self._positions: dict[int, int] = {}
        self._versions: dict[int, int] = {}
        self._queue = EventQueue()
        self._sequence = 0

    def _schedule_pair(self, left_position: int, now: float) -> None:
        if left_position < 0 or left_position + 1 >= len(self._order):
            return
        left = self._order[left_position]
        right = self._order[left_position + 1]
        left_segment = left.get_current_segment()
        right_segment = right.get_current_segment()
        time = meeting_time(left_segment, right_segment, now)
        if time is None:
            return
        self._sequence += 1
        self._queue.schedule(
            PendingMeeting(
                time=time,
                x=left_segment.position_at(time),
                lower_id=min(left.get_id(), right.get_id()),
                sequence=self._sequence,
                left_id=left.get_id(),
                right_id=right.get_id(),
                left_version=self._versions[left.get_id()],
                right_version=self._versions[right.get_id()],
            )
        )

    def _is_current(self, meeting: PendingMeeting) -> bool:
        return (
            self._versions[meeting.left_id] == meeting.left_version
            and self._versions[meeting.right_id] == meeting.right_version
            and self._positions[meeting.right_id]
            == self._positions[meeting.left_id] + 1
        )

    def _next_meeting(self) -> PendingMeeting | None:
        first = None
        while (candidate := self._queue.pop()) is not None:
            if self._is_current(candidate):
                first = candidate
                break
        if first is None:
            return None

        simultaneous = [first]
        while (
            following := self._queue.peek()
        ) is not None and following.time <= first.time + self._tie_tolerance:
            self._queue.pop()
            if self._is_current(following):
                simultaneous.append(following)
        chosen = min(simultaneous, key=lambda m: (m.x, m.lower_id))
        for meeting in simultaneous:
            if meeting is not chosen:
                self._queue.schedule(meeting)
        return chosen

    def _interact(self, meeting: PendingMeeting) -> Event:
        position = self._positions[meeting.left_id]
        forward_front = self._order[position]
        backward_front = self._order[position + 1]
        continued_backward, continued_forward = process_interaction(
            grid=self._grid,
            backward_front=backward_front,
            forward_front=forward_front,
            time=meeting.time,
            position=meeting.x,
        )
        self._order[position] = continued_backward
        self._order[position + 1] = continued_forward
        self._positions[continued_backward.get_id()] = position
        self._positions[continued_forward.get_id()] = position + 1
        self._versions[continued_backward.get_id()] += 1
        self._versions[continued_forward.get_id()] += 1
        self._schedule_pair(position - 1, meeting.time)
        self._schedule_pair(position + 1, meeting.time)
        return Event(
            time=meeting.time,
            x=meeting.x,
            kind=EventKind.OPPOSITE_FAMILY_INTERACTION,
            participants=(forward_front.get_id(), backward_front.get_id()),
        )

    def run(self, initial_profile: InitialProfile) -> Trace:
        """Evolve `initial_profile` up to ``t_max`` or a collision.

        Parameters:
            initial_profile:
                The sampled initial data.

        Returns:
            The completed trace.

        """
        fronts = initial_fronts(self._grid, initial_profile)
        self._order = sorted(
            fronts,
            key=lambda f: (f.get_segment(0).x0, f.get_segment(0).slope),
        )
        self._positions = {
            front.get_id(): position
            for position, front in enumerate(self._order)
        }
        self._versions = {front.get_id(): 0 for front in self._order}
        self._queue.clear()
        self._sequence = 0
        msg = (
            f"tracking {len(fronts)} fronts at n = "
            f"{self._grid.get_resolution()} up to t = {self._t_max}"
        )
        logger.info(msg)

        for position in range(len(self._order) - 1):
            self._schedule_pair(position, 0.0)

        events: list[Event] = []
        t_end = self._t_max
        stop_reason = StopReason.REACHED_T_MAX
        while (meeting := self._next_meeting()) is not None:
            if meeting.time >= self._t_max:
                break
            left = self._order[self._positions[meeting.left_id]]
            right = self._order[self._positions[meeting.right_id]]
            if left.get_family() is right.get_family():
                events.append(
                    Event(
                        time=meeting.time,
                        x=meeting.x,
                        kind=EventKind.SAME_FAMILY_COLLISION,
                        participants=(meeting.left_id, meeting.right_id),
                    )
                )
                t_end = meeting.time
                stop_reason = StopReason.SAME_FAMILY_COLLISION
                msg = (
                    f"{left.get_family()} fronts {meeting.left_id} and "
                    f"{meeting.right_id} collide at t = {meeting.time}, "
                    f"x = {meeting.x}"
                )
                logger.warning(msg)
                break
            events.append(self._interact(meeting))

        finished = [front.with_end(t_end) for front in self._order]
        events.extend(domain_exits(finished, initial_profile.domain, t_end))
        events.sort(key=lambda event: event.time)
        msg = (
            f"run stopped at t = {t_end} ({stop_reason}) after "
            f"{len(events)} events"
        )
        logger.info(msg)
        return Trace(
            grid=self._grid,
            initial_profile=initial_profile,
            fronts=finished,
            events=events,
            t_end=t_end,
            stop_reason=stop_reason,
            t_max=self._t_max,
        )
