import logging
import math

from polytrack._internal.utilities.exceptions import InvariantDomainError

logger = logging.getLogger(__name__)

MAX_TERMS = 100_000
_RELATIVE_CUTOFF = 1e-16


def _terminating_degree(a: float) -> int | None:
    if a <= 0 and float(a).is_integer():
        return int(-a)
    return None


def hyp2f1_series(
    a: float,
    b: float,
    c: float,
    z: float,
    max_terms: int = MAX_TERMS,
) -> float:
    """Evaluate the Gauss hypergeometric function ``2F1(a, b; c; z)``.

    A nonpositive integer `a` gives a polynomial, summed exactly. A
    negative argument is first mapped into ``(0, 1)`` with the Pfaff
    transformation ``(1-z)^(-a) 2F1(a, c-b; c; z/(z-1))``. Otherwise the
    power series is summed until a term drops below ``1e-16`` of the
    partial sum.

    Parameters:
        a:
            First numerator parameter.

        b:
            Second numerator parameter.

        c:
            Denominator parameter, not a nonpositive integer.

        z:
            Argument, ``z < 1``.

        max_terms:
            Largest number of series terms.

    Returns:
        The function value.

    Raises:
        :class:`InvariantDomainError`: If the series does not converge
            at `z`.

    """
    degree = _terminating_degree(a)
    if degree is None and z < 0:
        return (1 - z) ** (-a) * hyp2f1_series(
            a, c - b, c, z / (z - 1), max_terms
        )
    if degree is None and not abs(z) < 1:
        msg = f"hypergeometric series diverges at z = {z}"
        raise InvariantDomainError(msg)

    limit = max_terms if degree is None else degree
    total = 1.0
    term = 1.0
    for k in range(limit):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
        if degree is None and abs(term) < _RELATIVE_CUTOFF * abs(total):
            return total
    if degree is None:
        msg = f"2F1({a}, {b}; {c}; {z}) not converged after {limit} terms"
        logger.warning(msg)
    return total


def legendre_polynomial(degree: int, x: float) -> float:
    """Evaluate the Legendre polynomial ``P_degree(x)`` with ``P(1) = 1``.

    Uses the three-term recurrence
    ``k P_k = (2k - 1) x P_{k-1} - (k - 1) P_{k-2}``, valid for any real
    `x`.

    """
    if degree < 0:
        msg = f"degree must be nonnegative, got {degree}"
        raise ValueError(msg)
    previous, current = 1.0, x
    if degree == 0:
        return previous
    for k in range(2, degree + 1):
        previous, current = current, (
            (2 * k - 1) * x * current - (k - 1) * previous
        ) / k
    return current


def is_close_to_integer(value: float, tolerance: float = 1e-12) -> bool:
    return math.isclose(value, round(value), abs_tol=tolerance)
