import heapq
from dataclasses import dataclass, field
from typing import Any

from polytrack._internal.types import EventKind


@dataclass(frozen=True, slots=True)
class Event:
    """A recorded event of a front-tracking run.

    ``participants`` lists front ids. For an interaction it is
    ``(forward id, backward id)``; for a collision it is ``(left id,
    right id)``; for a domain exit it is the single leaving front.

    """

    time: float
    x: float
    kind: EventKind
    participants: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "time": self.time,
            "x": self.x,
            "kind": str(self.kind),
            "participants": list(self.participants),
        }


@dataclass(frozen=True, slots=True, order=True)
class PendingMeeting:
    """A predicted meeting of two adjacent fronts.

    Ordered by ``(time, x, lower id, sequence)``. The version stamps are
    compared with the tracker's counters when the meeting is popped;
    a mismatch marks it stale.

    """

    time: float
    x: float
    lower_id: int
    sequence: int
    left_id: int = field(compare=False)
    right_id: int = field(compare=False)
    left_version: int = field(compare=False)
    right_version: int = field(compare=False)


class EventQueue:
    """Priority queue of pending meetings, earliest first."""

    def __init__(self) -> None:
        self._queue: list[PendingMeeting] = []

    def schedule(self, meeting: PendingMeeting) -> None:
        heapq.heappush(self._queue, meeting)

    def pop(self) -> PendingMeeting | None:
        """Remove and return the earliest meeting, or ``None``."""
        if self._queue:
            return heapq.heappop(self._queue)
        return None

    def peek(self) -> PendingMeeting | None:
        if self._queue:
            return self._queue[0]
        return None

    def is_empty(self) -> bool:
        return not self._queue

    def __len__(self) -> int:
        return len(self._queue)

    def clear(self) -> None:
        self._queue.clear()
