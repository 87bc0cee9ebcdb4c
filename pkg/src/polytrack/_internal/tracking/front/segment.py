import math
from dataclasses import dataclass, replace
from typing import Any

from polytrack._internal.grid.standard_state import StandardState
from polytrack._internal.types import EdgeRef, Family


@dataclass(frozen=True, slots=True)
class Segment:
    """A jump edge: one straight piece of a front.

    A segment is alive for ``t0 <= t < t1``. While the run is in
    progress the last segment of a front is open, with ``t1`` and
    ``x1`` infinite.

    """

    front_id: int
    family: Family
    strength: int
    index: int
    t0: float
    x0: float
    t1: float
    x1: float
    slope: float
    left_state: StandardState
    right_state: StandardState

    def get_edge(self) -> EdgeRef:
        return self.front_id, self.index

    def position_at(self, time: float) -> float:
        return self.x0 + self.slope * (time - self.t0)

    def is_active(self, time: float) -> bool:
        return self.t0 <= time < self.t1

    def is_open(self) -> bool:
        return math.isinf(self.t1)

    def is_rarefactive(self) -> bool:
        return self.strength > 0

    def get_behind_state(self) -> StandardState:
        """Return the state the wave has already passed."""
        if self.family is Family.FORWARD:
            return self.left_state
        return self.right_state

    def get_ahead_state(self) -> StandardState:
        """Return the state the wave is moving into."""
        if self.family is Family.FORWARD:
            return self.right_state
        return self.left_state

    def closed_at(self, time: float) -> "Segment":
        """Return a copy ending at `time`."""
        return replace(self, t1=time, x1=self.position_at(time))

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.front_id,
            "family": str(self.family),
            "strength": self.strength,
            "index": self.index,
            "t0": self.t0,
            "x0": self.x0,
            "t1": self.t1,
            "x1": self.x1,
            "slope": self.slope,
            "left_i": self.left_state.get_i(),
            "left_j": self.left_state.get_j(),
            "right_i": self.right_state.get_i(),
            "right_j": self.right_state.get_j(),
        }
