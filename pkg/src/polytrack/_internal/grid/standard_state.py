from typing import Self


class StandardState:
    """A lattice state ``(u, v) = (i/n, v_j)``.

    Parameters:
        n:
            The resolution of the lattice.

        i:
            The velocity index, ``u = i/n``.

        j:
            The volume index, ``v = v_j`` and ``Phi = j/n``.

    The Riemann-invariant indices are ``k = (i+j)/2`` and
    ``l = (i-j)/2``. Only the doubled indices ``i+j`` and ``i-j`` are
    stored exactly, see :meth:`get_doubled_k` and :meth:`get_doubled_l`.

    """

    def __init__(self, n: int, i: int, j: int) -> None:
        self._n = int(n)
        self._i = int(i)
        self._j = int(j)

    def get_resolution(self) -> int:
        return self._n

    def get_i(self) -> int:
        return self._i

    def get_j(self) -> int:
        return self._j

    def get_doubled_k(self) -> int:
        """Return ``2k = i + j``."""
        return self._i + self._j

    def get_doubled_l(self) -> int:
        """Return ``2l = i - j``."""
        return self._i - self._j

    def get_velocity(self) -> float:
        return self._i / self._n

    def shifted(self, di: int, dj: int) -> Self:
        """Return the state with indices ``(i + di, j + dj)``."""
        return self.__class__(self._n, self._i + di, self._j + dj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StandardState):
            return NotImplemented
        return (self._n, self._i, self._j) == (other._n, other._i, other._j)

    def __hash__(self) -> int:
        return hash((self._n, self._i, self._j))

    def __str__(self) -> str:
        return (
            f"{self.__class__.__name__}(n={self._n}, i={self._i}, "
            f"j={self._j})"
        )

    def __repr__(self) -> str:
        return str(self)


def invariants_of(state: StandardState) -> tuple[float, float]:
    """Return the discrete Riemann invariants of `state`.

    Parameters:
        state:
            The standard state.

    Returns:
        ``(r, s) = ((i+j)/n, (i-j)/n)``, with the numerators formed in
        integer arithmetic and divided once.

    """
    n = state.get_resolution()
    return state.get_doubled_k() / n, state.get_doubled_l() / n
