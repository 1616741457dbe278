"""Factor multisets and the nestedness predicate for products of two-row Schur
functions.

A factor set is a tuple of partitions kept in canonical order (sorted
descending, duplicates kept), so equal multisets compare and hash equal.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable

from .errors import DomainError, ParseError
from .partitions import (Partition, format_partition, from_parts, parse_partition,
                         partitions_of)

FactorSet = tuple[Partition, ...]
PlanePartition2Row = tuple[tuple[int, ...], tuple[int, ...]]


def make_factor_set(factors: Iterable[Iterable[int]]) -> FactorSet:
    """Canonical factor set; empty factors (the unit) are dropped."""
    out = []
    for f in factors:
        f = tuple(f)
        if any(a < b for a, b in zip(f, f[1:])) or any(x < 0 for x in f):
            raise DomainError(f"factor is not a partition: {f}")
        f = tuple(x for x in f if x)
        if f:
            out.append(f)
    return tuple(sorted(out, reverse=True))


def factor_weight(A: FactorSet) -> int:
    return sum(map(sum, A))


def max_parts(A: FactorSet) -> int:
    return max((len(f) for f in A), default=0)


def format_factor_set(A: FactorSet) -> str:
    return ";".join(format_partition(f) for f in A)


def parse_factor_set(text: str) -> FactorSet:
    """Parse ``"5,1;4,2;4,2;3,2"``."""
    if not text.strip():
        return ()
    factors, offset = [], 0
    for chunk in text.split(";"):
        if not chunk.strip():
            raise ParseError("empty factor", text, offset + 1)
        factors.append(parse_partition(chunk, offset=offset))
        offset += len(chunk) + 1
    return make_factor_set(factors)


def phi(A: FactorSet) -> Partition:
    """All parts of all factors, as one partition."""
    return from_parts(x for f in A for x in f)


def _violates(lam: Partition, mu: Partition) -> bool:
    """One role assignment of the three pair conditions."""
    if len(lam) == 2 and len(mu) == 2:
        return lam[0] > mu[0] >= lam[1] > mu[1]
    if len(lam) == 2 and len(mu) == 1:
        return lam[0] > lam[1] and lam[0] >= mu[0] >= lam[1]
    return len(lam) == 1 and len(mu) == 1


def pair_is_nested(lam: Partition, mu: Partition) -> bool:
    return not (_violates(lam, mu) or _violates(mu, lam))


def is_nested(A: FactorSet) -> bool:
    """True iff no two factors (distinct copies, either role) violate a pair condition."""
    if max_parts(A) > 2:
        raise DomainError("nestedness is only defined for factors with at most two parts")
    return all(pair_is_nested(A[i], A[j])
               for i in range(len(A)) for j in range(i + 1, len(A)))


def enumerate_sp(n: int, k: int) -> list[FactorSet]:
    """Every multiset of partitions with at most ``k`` parts and total weight ``n``."""
    candidates = sorted((p for m in range(1, n + 1) for p in partitions_of(m, k)),
                        reverse=True)
    out: list[FactorSet] = []

    def grow(start: int, left: int, chosen: list[Partition]) -> None:
        if left == 0:
            out.append(tuple(chosen))
            return
        for i in range(start, len(candidates)):
            f = candidates[i]
            if sum(f) <= left:
                chosen.append(f)
                grow(i, left - sum(f), chosen)
                chosen.pop()

    grow(0, n, [])
    return out


@lru_cache(maxsize=None)
def _pairings(lam: Partition, nested_only: bool) -> tuple[FactorSet, ...]:
    found: set[FactorSet] = set()

    def grow(parts: tuple[int, ...], chosen: list[Partition]) -> None:
        if not parts:
            found.add(make_factor_set(chosen))
            return
        a, rest = parts[0], parts[1:]
        # The largest remaining part either stands alone or pairs with a smaller one.
        options = [((a,), rest)]
        for idx, b in enumerate(rest):
            if b not in rest[:idx]:
                options.append(((a, b), rest[:idx] + rest[idx + 1:]))
        for f, remaining in options:
            if not nested_only or all(pair_is_nested(f, g) for g in chosen):
                chosen.append(f)
                grow(remaining, chosen)
                chosen.pop()

    grow(tuple(lam), [])
    return tuple(sorted(found))


def enumerate_sp_lambda(lam: Partition) -> list[FactorSet]:
    """Factor sets of one- and two-part partitions whose parts are those of ``lam``."""
    return list(_pairings(tuple(lam), False))


def enumerate_ssp_lambda(lam: Partition) -> list[FactorSet]:
    """Nested factor sets whose parts are exactly the parts of ``lam``."""
    return list(_pairings(tuple(lam), True))


def enumerate_ssp(n: int) -> list[FactorSet]:
    """All nested factor sets of weight ``n``, grouped by their part partition
    (lex-descending)."""
    return [A for lam in partitions_of(n) for A in _pairings(lam, True)]


def psi(A: FactorSet) -> PlanePartition2Row:
    """Two-row array of first parts over second parts, rows sorted decreasing.

    A one-part factor contributes a 0 to the second row.
    """
    if not is_nested(A):
        raise DomainError(f"psi needs a nested factor set: {format_factor_set(A)}")
    top = tuple(sorted((f[0] for f in A), reverse=True))
    bottom = tuple(sorted((f[1] if len(f) == 2 else 0 for f in A), reverse=True))
    return top, bottom


def is_plane_partition(pp: PlanePartition2Row) -> bool:
    top, bottom = pp
    rows_ok = all(a >= b for row in pp for a, b in zip(row, row[1:]))
    return len(top) == len(bottom) and rows_ok and all(a >= b for a, b in zip(top, bottom))


def plane_partitions_with_parts(lam: Partition) -> list[PlanePartition2Row]:
    """Two-row plane partitions of shape (m, m) whose entries are the parts of
    ``lam`` (padded with one 0 when ``lam`` has an odd number of parts)."""
    entries = list(lam) + ([0] if len(lam) % 2 else [])
    m = len(entries) // 2
    found = set()

    def pick(i: int, top: list[int], bottom: list[int]) -> None:
        if i == len(entries):
            pp = (tuple(top), tuple(bottom))
            if is_plane_partition(pp):
                found.add(pp)
            return
        if len(top) < m:
            top.append(entries[i])
            pick(i + 1, top, bottom)
            top.pop()
        if len(bottom) < m:
            bottom.append(entries[i])
            pick(i + 1, top, bottom)
            bottom.pop()

    pick(0, [], [])
    return sorted(found, reverse=True)


def is_odd(A: FactorSet) -> bool:
    return sum(1 for f in A if len(f) == 1) == 1


def up_set(A: FactorSet) -> FactorSet:
    """Add 1 to every part; the single one-part factor also gains a part 1."""
    if not is_odd(A):
        raise DomainError(f"up_set needs exactly one one-part factor: {format_factor_set(A)}")
    return make_factor_set(
        tuple(x + 1 for x in f) + ((1,) if len(f) == 1 else ()) for f in A)


def down_set(A: FactorSet) -> FactorSet:
    """Subtract 1 from every part, dropping parts and factors that vanish."""
    return make_factor_set(tuple(x - 1 for x in f) for f in A)


def _inside(F: FactorSet, rho: Partition) -> Counter:
    return Counter(f for f in F if len(f) == 2 and rho[0] > f[0] > f[1] > rho[1])


def agree_within(A: FactorSet, B: FactorSet, rho: Partition) -> bool:
    """Whether A and B contain the same two-part factors strictly inside ``rho``."""
    if len(rho) != 2:
        raise DomainError(f"agree_within needs a two-part partition, got {rho}")
    return _inside(A, rho) == _inside(B, rho)


def inside_out_order(A: FactorSet) -> list[Partition]:
    """Two-part factors of A, each listed after every factor nested inside it."""
    lam = phi(A)
    if any(a == b for a, b in zip(lam, lam[1:])):
        raise DomainError(f"inside_out_order needs distinct parts, got {lam}")
    return sorted((f for f in A if len(f) == 2), key=lambda f: (f[0] - f[1], -f[0]))
