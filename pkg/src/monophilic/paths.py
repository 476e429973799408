"""Coloring counts of paths carrying (n, n-1)-list assignments, and of cycles.

A path of length k has k+1 vertices; interior vertices get n-lists and the
two ends get (n-1)-lists contained in the interior list.  With identical end
lists the count is ``A(k, n)`` (type A); with distinct end lists it is
``B(k, n)`` (type B).
"""

from __future__ import annotations

import enum

from .counting import ListAssignment
from .errors import InputError


class PathListKind(enum.Enum):
    TypeA = "A"
    TypeB = "B"


def _check(k, n):
    if k < 1:
        raise InputError("path length must be at least 1")
    if n < 2:
        raise InputError("(n, n-1)-list assignments need n >= 2")


def A(k: int, n: int) -> int:
    """((n-1)/n) * ((n-1)^(k+1) + (-1)^k), exact (the division is always even)."""
    _check(k, n)
    num = (n - 1) * ((n - 1) ** (k + 1) + (-1) ** k)
    q, r = divmod(num, n)
    assert r == 0
    return q


def B(k: int, n: int) -> int:
    _check(k, n)
    return A(k, n) - (-1) ** k


def A_recursive(k: int, n: int) -> int:
    """A(k, n) from A_1 = (n-1)(n-2), B_1 = (n-2)^2 + (n-1) and the one-step recurrences."""
    return _recurse(k, n)[0]


def B_recursive(k: int, n: int) -> int:
    return _recurse(k, n)[1]


def _recurse(k, n):
    _check(k, n)
    a, b = (n - 1) * (n - 2), (n - 2) ** 2 + (n - 1)
    for _ in range(k - 1):
        a, b = (n - 1) * b, a + (n - 2) * b
    return a, b


def make_path_assignment(k: int, n: int, kind: PathListKind) -> ListAssignment:
    """Concrete type A or type B lists on ``build_path(k)``.

    Interior lists are {1..n}.  Type A puts {1..n-1} on both ends; type B
    puts {1..n-1} on vertex 0 and {2..n} on vertex k.  For k = 1 the two
    type B end lists then share exactly n-2 colors.
    """
    _check(k, n)
    kind = PathListKind(kind)
    interior = range(1, n + 1)
    first = range(1, n)
    last = first if kind is PathListKind.TypeA else range(2, n + 1)
    return ListAssignment([first] + [interior] * (k - 1) + [last])


def cycle_uniform_count(k: int, n: int) -> int:
    """col(C_k, n) = n * A(k-2, n)."""
    if k < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return n * A(k - 2, n)
