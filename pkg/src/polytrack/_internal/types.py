import enum
from collections import abc

import numpy as np

InvariantProfile = abc.Callable[[np.ndarray], np.ndarray]
"""A vectorised initial Riemann invariant, ``r0(x)`` or ``s0(x)``."""

EdgeRef = tuple[int, int]
"""A jump edge, as ``(front id, segment index)``."""


class Family(enum.StrEnum):
    """Characteristic family of a front."""

    FORWARD = "forward"
    BACKWARD = "backward"


class CheckOutcome(enum.StrEnum):
    """Result of a lemma checker."""

    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not_applicable"


class StopReason(enum.StrEnum):
    """Why a front-tracking run ended."""

    REACHED_T_MAX = "reached_t_max"
    SAME_FAMILY_COLLISION = "same_family_collision"


class EventKind(enum.StrEnum):
    """Kind of a recorded event."""

    OPPOSITE_FAMILY_INTERACTION = "opposite_family_interaction"
    SAME_FAMILY_COLLISION = "same_family_collision"
    DOMAIN_EXIT = "domain_exit"


class Character(enum.StrEnum):
    """Rarefactive/compressive character of a jump edge.

    The capital letter is the character behind the edge, the small
    letter the character ahead of it.

    """

    R_R = "R_r"
    R_C = "R_c"
    C_R = "C_r"
    C_C = "C_c"

    @classmethod
    def from_parts(
        cls,
        *,
        main_rarefactive: bool,
        sub_rarefactive: bool,
    ) -> "Character":
        main = "R" if main_rarefactive else "C"
        sub = "r" if sub_rarefactive else "c"
        return cls(f"{main}_{sub}")

    def is_main_rarefactive(self) -> bool:
        return self.value[0] == "R"

    def is_sub_rarefactive(self) -> bool:
        return self.value[-1] == "r"


BlockType = tuple[Character | None, Character | None]
"""The (forward, backward) characters of a block; either may be absent."""
