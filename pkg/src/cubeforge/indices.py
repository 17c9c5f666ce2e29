"""Re-indexing maps on positive integers.

Face, degeneracy and connection operations on cubical cells constantly
shift indices by one around a pivot.  Two mutually inverse maps capture
all of it: ``raise_(j, i)`` (written j^i) skips the value ``i``, and
``lower(j, i)`` (written j_i) collapses the gap left by removing ``i``.
Everything here is 1-based; containers convert at their own boundary.

>>> [raise_(j, 3) for j in (1, 2, 3, 4)]
[1, 2, 4, 5]
>>> [lower(j, 3) for j in (1, 2, 4, 5)]
[1, 2, 3, 4]
"""

from __future__ import annotations


class DomainError(ValueError):
    """An index map was applied outside its domain (e.g. j_i with j = i)."""


def _check_positive(**kwargs: int) -> None:
    for name, value in kwargs.items():
        if value < 1:
            raise DomainError(f"{name} must be >= 1, got {value}")


def raise_(j: int, i: int) -> int:
    """The map j^i: skip the value i.  Bijection from N onto N minus {i}."""
    _check_positive(j=j, i=i)
    return j if j < i else j + 1


def lower(j: int, i: int) -> int:
    """The map j_i: close the gap at i.  Defined for j != i only."""
    _check_positive(j=j, i=i)
    if j == i:
        raise DomainError(f"j_i is undefined for j = i = {i}")
    return j if j < i else j - 1


def lower2(k: int, i: int, j: int) -> int:
    """The composite (k_i)_{j_i}, defined for k outside {i, j}, i != j."""
    if i == j:
        raise DomainError("lower2 needs i != j")
    if k in (i, j):
        raise DomainError(f"lower2 is undefined for k in {{i, j}} = {{{i}, {j}}}")
    return lower(lower(k, i), lower(j, i))


def raise2(k: int, i: int, j: int) -> int:
    """The composite (k^{i_j})^j, landing outside {i, j}.  Needs i != j."""
    if i == j:
        raise DomainError("raise2 needs i != j")
    return raise_(raise_(k, lower(i, j)), j)


def mixed(k: int, i: int, j: int) -> int:
    """The composite (k^j)_i, a bijection N minus {i_j} -> N minus {j_i}."""
    if i == j:
        raise DomainError("mixed needs i != j")
    if k == lower(i, j):
        raise DomainError(f"mixed is undefined for k = i_j = {k}")
    return lower(raise_(k, j), i)
