"""Integer partitions, dominance order and the partition operators used by the
separator constructions.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty tuple is the unique partition of 0.  Compositions are tuples of
non-negative integers in any order.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Sequence

from .errors import DomainError, ParseError

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return the canonical tuple.

    Zero parts are accepted only at the end and are dropped.
    """
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for i, x in enumerate(p):
        if x <= 0:
            raise DomainError(f"partition parts must be positive: {p}")
        if i and p[i - 1] < x:
            raise DomainError(f"partition parts must be weakly decreasing: {p}")
    return p


def from_parts(parts: Iterable[int]) -> Partition:
    """The partition whose parts are the positive entries of ``parts``."""
    return tuple(sorted((int(x) for x in parts if x), reverse=True))


def weight(lam: Sequence[int]) -> int:
    return sum(lam)


def is_distinct(lam: Partition) -> bool:
    return all(a > b for a, b in zip(lam, lam[1:]))


def dominates(lam: Partition, mu: Partition) -> bool:
    """True iff ``lam`` dominates ``mu`` (every prefix sum of lam is at least mu's)."""
    if sum(lam) != sum(mu):
        raise DomainError(f"dominance needs equal weights: {lam} vs {mu}")
    n = max(len(lam), len(mu))
    a = accumulate(tuple(lam) + (0,) * (n - len(lam)))
    b = accumulate(tuple(mu) + (0,) * (n - len(mu)))
    return all(x >= y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int, max_parts: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    if max_parts == 0:
        return ()
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first, max_parts - 1):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int, max_parts: int | None = None) -> list[Partition]:
    """All partitions of ``n`` with at most ``max_parts`` parts, in descending
    lexicographic order."""
    if n < 0:
        return []
    return list(_partitions(n, n, n if max_parts is None else max_parts))


def dominance_interval(lam: Partition, rho: Partition) -> list[Partition]:
    """Partitions ``mu`` with ``lam <= mu <= rho`` in dominance, lex-descending."""
    if sum(lam) != sum(rho):
        raise DomainError(f"interval endpoints must have equal weight: {lam}, {rho}")
    if not dominates(rho, lam):
        return []
    return [mu for mu in partitions_of(sum(lam))
            if dominates(mu, lam) and dominates(rho, mu)]


def _need_two_parts(lam: Partition, name: str) -> None:
    if len(lam) < 2:
        raise DomainError(f"{name} needs at least two parts, got {lam}")


def lambda_plus(lam: Partition) -> Partition:
    """First part up by one, last part down by one."""
    _need_two_parts(lam, "lambda_plus")
    p = list(lam)
    p[0] += 1
    p[-1] -= 1
    return make_partition(p)


def lambda_plusplus(lam: Partition) -> Partition:
    """The top half of the parts up by one and the bottom half down by one;
    with an odd number of parts the middle part is left alone."""
    _need_two_parts(lam, "lambda_plusplus")
    m = len(lam)
    k = m // 2
    p = list(lam)
    for i in range(k):
        p[i] += 1
    for i in range(m - k, m):
        p[i] -= 1
    return make_partition(p)


def lambda_dagger(lam: Partition) -> Partition:
    """Defined when the last two parts differ; the last part never moves."""
    _need_two_parts(lam, "lambda_dagger")
    m = len(lam)
    if lam[-2] == lam[-1]:
        raise DomainError(f"lambda_dagger undefined when the last two parts agree: {lam}")
    k = m // 2
    p = list(lam)
    raised = k - 1 if m % 2 == 0 else k
    for i in range(raised):
        p[i] += 1
    for i in range(k, m - 1):
        p[i] -= 1
    return make_partition(p)


def up(mu: Partition) -> Partition:
    """Add a full first column of height ``len(mu) + 1``."""
    return tuple(x + 1 for x in mu) + (1,)


def down(mu: Partition) -> Partition:
    """Remove the first column."""
    return tuple(x - 1 for x in mu if x > 1)


def is_down_invertible(mu: Partition) -> bool:
    return len(mu) >= 2 and mu[-2] > mu[-1] == 1


def format_partition(lam: Partition) -> str:
    return ",".join(str(x) for x in lam)


def parse_partition(text: str, *, offset: int = 0, sort: bool = False) -> Partition:
    """Parse ``"4,3,3,2,2,2,1"``.  The empty string is the empty partition.

    With ``sort=True`` the parts may be listed in any order (``"1,2,2,3"``).
    ``offset`` shifts reported columns when the text is a slice of a longer line.
    """
    stripped = text.strip()
    if not stripped:
        return ()
    parts = []
    col = offset + len(text) - len(text.lstrip()) + 1
    for token in stripped.split(","):
        tok = token.strip()
        if not tok.isdigit():
            lead = len(token) - len(token.lstrip())
            raise ParseError(f"expected a positive integer, got {tok!r}", text, col + lead)
        value = int(tok)
        if value == 0:
            raise ParseError("partition parts must be positive", text, col)
        if not sort and parts and value > parts[-1]:
            raise ParseError("partition parts must be weakly decreasing", text, col)
        parts.append(value)
        col += len(token) + 1
    return from_parts(parts) if sort else tuple(parts)
