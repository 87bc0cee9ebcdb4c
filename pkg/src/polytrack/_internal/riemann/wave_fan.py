from dataclasses import dataclass

from polytrack._internal.grid.standard_state import StandardState


@dataclass(frozen=True, slots=True)
class WaveFan:
    """Solution of a standard-state Riemann problem.

    Attributes:
        left:
            The state left of the fan.

        middle:
            The state between the backward and the forward jump.

        right:
            The state right of the fan.

        backward_strength:
            ``M``, the change of the ``k`` index across the backward jump.

        forward_strength:
            ``N``, the change of the ``l`` index across the forward jump.

        backward_slope:
            Negative speed of the backward jump, ``None`` if ``M = 0``.

        forward_slope:
            Positive speed of the forward jump, ``None`` if ``N = 0``.

    """

    left: StandardState
    middle: StandardState
    right: StandardState
    backward_strength: int
    forward_strength: int
    backward_slope: float | None
    forward_slope: float | None

    def has_backward_jump(self) -> bool:
        return self.backward_strength != 0

    def has_forward_jump(self) -> bool:
        return self.forward_strength != 0
