"""Semistandard tableaux, reading words and Littlewood-Richardson counting.

A tableau is a tuple of rows (tuples of positive integers).  Rows weakly
increase left to right and columns strictly increase top to bottom.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DomainError
from .partitions import Composition, Partition

Tableau = tuple[tuple[int, ...], ...]


def shape_of(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def content_of(t: Tableau) -> Composition:
    counts = Counter(x for row in t for x in row)
    top = max(counts, default=0)
    return tuple(counts[i] for i in range(1, top + 1))


def is_semistandard(t: Tableau) -> bool:
    for r, row in enumerate(t):
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        if r and any(row[c] <= t[r - 1][c] for c in range(len(row))):
            return False
    return True


def enumerate_ssyt(shape: Partition, content: Composition) -> list[Tableau]:
    """All semistandard tableaux of ``shape`` and ``content``.

    Cells are filled row by row, left to right; letters are tried in increasing
    order, so the output order is deterministic.
    """
    if sum(shape) != sum(content):
        raise DomainError(f"shape {shape} and content {content} have different weights")
    remaining = [0] + list(content)
    letters = len(content)
    rows = [[0] * n for n in shape]
    cells = [(r, c) for r, n in enumerate(shape) for c in range(n)]
    out: list[Tableau] = []

    def fill(idx: int) -> None:
        if idx == len(cells):
            out.append(tuple(tuple(row) for row in rows))
            return
        r, c = cells[idx]
        lo = rows[r][c - 1] if c else 1
        if r:
            lo = max(lo, rows[r - 1][c] + 1)
        for x in range(lo, letters + 1):
            if remaining[x]:
                remaining[x] -= 1
                rows[r][c] = x
                fill(idx + 1)
                remaining[x] += 1
        rows[r][c] = 0

    fill(0)
    return out


@lru_cache(maxsize=None)
def _kostka(shape: Partition, content: Composition) -> int:
    if not content:
        return 1 if not shape else 0
    last = content[-1]
    rest = content[:-1]
    if last == 0:
        return _kostka(shape, rest)
    # Strip off the cells holding the largest letter: a horizontal strip.
    total = 0
    m = len(shape)

    def strips(i: int, left: int, inner: list[int]) -> None:
        nonlocal total
        if i == m:
            if left == 0:
                mu = tuple(x for x in inner if x)
                total += _kostka(mu, rest)
            return
        below = shape[i + 1] if i + 1 < m else 0
        for take in range(min(left, shape[i] - below), -1, -1):
            inner.append(shape[i] - take)
            strips(i + 1, left - take, inner)
            inner.pop()

    strips(0, last, [])
    return total


def kostka(shape: Partition, content: Sequence[int]) -> int:
    """Number of semistandard tableaux of ``shape`` with ``content``."""
    if sum(shape) != sum(content):
        raise DomainError(f"shape {shape} and content {tuple(content)} have different weights")
    # The count does not depend on the order of the content, so memoize on the sorted one.
    return _kostka(tuple(shape), tuple(sorted(content, reverse=True)))


def word(t: Tableau) -> tuple[int, ...]:
    """Reading word: each row right to left, top row first."""
    return tuple(x for row in t for x in reversed(row))


def subword(t: Tableau, alpha: Iterable[int]) -> tuple[int, ...]:
    keep = set(alpha)
    return tuple(x for x in word(t) if x in keep)


def is_lattice(w: Sequence[int], order: Sequence[int] | None = None) -> bool:
    """True iff every prefix of ``w`` has at least as many ``i`` as ``i+1``.

    ``order`` relabels letters: ``order[t]`` plays the role of ``t+1``.
    """
    rank = {x: t for t, x in enumerate(order)} if order is not None else None
    counts: Counter[int] = Counter()
    for x in w:
        t = rank[x] if rank is not None else x - 1
        counts[t] += 1
        if t and counts[t] > counts[t - 1]:
            return False
    return True


def _check_permutation(pi: Sequence[int]) -> tuple[int, ...]:
    pi = tuple(pi)
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise DomainError(f"not a permutation of 1..{len(pi)}: {pi}")
    return pi


def blocks_from_permutation(pi: Sequence[int], sizes: Sequence[int]) -> list[tuple[int, ...]]:
    """Consecutive runs of ``pi`` of the given sizes.

    Each block is returned in the order its letters occur in ``pi``; that order
    is the one the lattice condition uses.  ``set(block)`` gives the plain set.
    """
    pi = _check_permutation(pi)
    if sum(sizes) != len(pi):
        raise DomainError(f"block sizes {tuple(sizes)} do not sum to {len(pi)}")
    out, start = [], 0
    for n in sizes:
        out.append(pi[start:start + n])
        start += n
    return out


def permute_content(pi: Sequence[int], tau: Sequence[int]) -> Composition:
    """Relocate entries: the result ``mu`` has ``mu[pi[i]] = tau[i]`` (1-based pi)."""
    pi = _check_permutation(pi)
    if len(tau) != len(pi):
        raise DomainError(f"composition length {len(tau)} does not match permutation length {len(pi)}")
    mu = [0] * len(pi)
    for p, t in zip(pi, tau):
        mu[p - 1] = t
    return tuple(mu)


def lr_coefficient(factors: Sequence[Partition], lam: Partition,
                   pi: Sequence[int] | None = None) -> int:
    """Multiplicity of ``s_lam`` in the product of ``s_rho`` over ``factors``.

    Counts tableaux of shape ``lam`` and content ``pi`` applied to the
    concatenated factors, whose reading word restricted to each factor's block
    of letters is a lattice word.  The count does not depend on ``pi``.
    """
    factors = tuple(tuple(f) for f in factors if f)
    if sum(map(sum, factors)) != sum(lam):
        return 0
    if pi is None:
        return _lr_identity(tuple(sorted(factors, reverse=True)), tuple(lam))
    return _lr_count(factors, tuple(lam), _check_permutation(pi))


@lru_cache(maxsize=None)
def _lr_identity(factors: tuple[Partition, ...], lam: Partition) -> int:
    total_parts = sum(len(f) for f in factors)
    return _lr_count(factors, lam, tuple(range(1, total_parts + 1)))


def _lr_count(factors: tuple[Partition, ...], lam: Partition, pi: tuple[int, ...]) -> int:
    tau = [x for f in factors for x in f]
    if len(pi) != len(tau):
        raise DomainError(f"permutation length {len(pi)} does not match {len(tau)} factor parts")
    if not lam:
        return 1
    letters = len(tau)
    remaining = [0] * (letters + 1)
    prev = [0] * (letters + 1)
    start = 0
    for f in factors:
        for t in range(len(f)):
            letter = pi[start + t]
            remaining[letter] = f[t]
            prev[letter] = pi[start + t - 1] if t else 0
        start += len(f)
    placed = [0] * (letters + 1)
    # prev[x] == 0 means x starts its block; placed[0] is a sentinel that never binds.
    placed[0] = sum(lam) + 1

    height = [sum(1 for part in lam if part > c) for c in range(lam[0])]
    rows = [[0] * n for n in lam]
    # Reading order: top row first, each row right to left.
    cells = [(r, c) for r, n in enumerate(lam) for c in range(n - 1, -1, -1)]
    count = 0

    def fill(idx: int) -> None:
        nonlocal count
        if idx == len(cells):
            count += 1
            return
        r, c = cells[idx]
        lo = rows[r - 1][c] + 1 if r else 1
        hi = rows[r][c + 1] if c + 1 < lam[r] else letters
        hi = min(hi, letters - (height[c] - r - 1))
        for x in range(lo, hi + 1):
            if remaining[x] and placed[prev[x]] > placed[x]:
                remaining[x] -= 1
                placed[x] += 1
                rows[r][c] = x
                fill(idx + 1)
                placed[x] -= 1
                remaining[x] += 1
        rows[r][c] = 0

    fill(0)
    return count
