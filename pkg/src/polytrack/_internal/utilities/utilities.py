import math
from collections import abc

import numpy as np


def format_float(value: float) -> str:
    """Format `value` with 17 significant digits.

    Parameters:
        value:
            The number to format.

    Returns:
        A string that round-trips to the same binary float.

    """
    return f"{value:.17g}"


def finite_or_none(value: float) -> float | None:
    """Return `value`, or ``None`` when it is not finite (for JSON)."""
    if math.isfinite(value):
        return value
    return None


def loglog_slope(
    xs: abc.Sequence[float] | np.ndarray,
    ys: abc.Sequence[float] | np.ndarray,
) -> float:
    """Least-squares slope of ``log(ys)`` against ``log(xs)``.

    Parameters:
        xs:
            Positive abscissae.

        ys:
            Positive ordinates.

    Returns:
        The fitted exponent.

    """
    log_x = np.log(np.asarray(xs, dtype=float))
    log_y = np.log(np.asarray(ys, dtype=float))
    slope, _ = np.polyfit(log_x, log_y, 1)
    return float(slope)
