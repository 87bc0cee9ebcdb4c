import math
from collections import abc
from dataclasses import replace
from typing import Self

from polytrack._internal.grid.standard_state import StandardState
from polytrack._internal.tracking.front.segment import Segment
from polytrack._internal.types import Family
from polytrack._internal.utilities.exceptions import QueryTimeError


class Front:
    """A wave front and its piecewise-linear trajectory.

    A front keeps its family and strength for its whole life; only its
    speed and the states on either side change at interactions.

    Parameters:
        front_id:
            Unique id of the front.

        segments:
            The segments of the trajectory in time order.

    """

    def __init__(
        self,
        front_id: int,
        segments: abc.Sequence[Segment],
    ) -> None:
        if not segments:
            msg = f"front {front_id} needs at least one segment"
            raise ValueError(msg)
        self._id = front_id
        self._segments = tuple(segments)

    @classmethod
    def init_from_birth(  # noqa: PLR0913
        cls,
        front_id: int,
        family: Family,
        strength: int,
        time: float,
        position: float,
        slope: float,
        left_state: StandardState,
        right_state: StandardState,
    ) -> Self:
        """Create a front with a single open segment."""
        segment = Segment(
            front_id=front_id,
            family=family,
            strength=strength,
            index=0,
            t0=time,
            x0=position,
            t1=math.inf,
            x1=math.inf,
            slope=slope,
            left_state=left_state,
            right_state=right_state,
        )
        return cls(front_id, (segment,))

    def get_id(self) -> int:
        return self._id

    def get_family(self) -> Family:
        return self._segments[0].family

    def get_strength(self) -> int:
        return self._segments[0].strength

    def get_segments(self) -> tuple[Segment, ...]:
        return self._segments

    def get_segment(self, index: int) -> Segment:
        return self._segments[index]

    def get_current_segment(self) -> Segment:
        return self._segments[-1]

    def get_segment_at(self, time: float) -> Segment:
        """Return the segment alive at `time`."""
        for segment in reversed(self._segments):
            if segment.t0 <= time:
                if time > segment.t1:
                    break
                return segment
        msg = f"front {self._id} is not alive at t = {time}"
        raise QueryTimeError(msg)

    def position_at(self, time: float) -> float:
        return self.get_segment_at(time).position_at(time)

    def clone(self) -> Self:
        """Return a clone."""
        clone = self.__class__.__new__(self.__class__)
        clone._id = self._id  # noqa: SLF001
        clone._segments = self._segments  # noqa: SLF001
        return clone

    def _with_segment(  # noqa: PLR0913
        self,
        time: float,
        slope: float,
        left_state: StandardState,
        right_state: StandardState,
        position: float | None,
    ) -> Self:
        current = self._segments[-1]
        closed = current.closed_at(time)
        if position is not None:
            closed = replace(closed, x1=position)
        following = Segment(
            front_id=self._id,
            family=current.family,
            strength=current.strength,
            index=current.index + 1,
            t0=time,
            x0=closed.x1,
            t1=math.inf,
            x1=math.inf,
            slope=slope,
            left_state=left_state,
            right_state=right_state,
        )
        self._segments = (*self._segments[:-1], closed, following)
        return self

    def with_segment(  # noqa: PLR0913
        self,
        time: float,
        slope: float,
        left_state: StandardState,
        right_state: StandardState,
        position: float | None = None,
    ) -> Self:
        """Return a clone that turns into a new segment at `time`.

        Parameters:
            time:
                Time of the turn; the current segment ends here.

            slope:
                Speed of the new segment.

            left_state:
                State left of the new segment.

            right_state:
                State right of the new segment.

            position:
                Position of the turn. Defaults to the end of the current
                segment.

        Returns:
            The clone.

        """
        return self.clone()._with_segment(  # noqa: SLF001
            time, slope, left_state, right_state, position
        )

    def _with_end(self, time: float) -> Self:
        self._segments = (
            *self._segments[:-1],
            self._segments[-1].closed_at(time),
        )
        return self

    def with_end(self, time: float) -> Self:
        """Return a clone whose last segment ends at `time`."""
        return self.clone()._with_end(time)  # noqa: SLF001

    def __str__(self) -> str:
        return (
            f"{self.__class__.__name__}(id={self._id}, "
            f"family={self.get_family()}, strength={self.get_strength()}, "
            f"segments={len(self._segments)})"
        )

    def __repr__(self) -> str:
        return str(self)
