"""Exact rational phase-one simplex with Bland's rule.

Only feasibility is ever needed here, so the solver answers one question:
does ``A x = b`` have a solution with ``x >= 0``?  It returns either such an
``x`` or a Farkas vector ``y`` with ``y.A <= 0`` componentwise and ``y.b > 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

try:
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _rational = Fraction

Matrix = Sequence[Sequence[int | Fraction]]


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    x: tuple[Fraction, ...] | None = None
    y: tuple[Fraction, ...] | None = None


def equality_feasibility(A: Matrix, b: Sequence[int | Fraction]) -> FeasibilityResult:
    m = len(b)
    n = len(A[0]) if m else 0
    if any(len(row) != n for row in A):
        raise ValueError("ragged constraint matrix")
    sign = [-1 if bi < 0 else 1 for bi in b]
    # Columns 0..n-1 original, n..n+m-1 artificial, last is the right-hand side.
    Q = _rational
    T = [[Q(sign[i] * v) for v in A[i]]
         + [Q(int(i == j)) for j in range(m)]
         + [Q(sign[i] * b[i])] for i in range(m)]
    basis = [n + i for i in range(m)]
    width = n + m + 1
    cost = [Q(0)] * width
    for i in range(m):
        for j in range(n):
            cost[j] -= T[i][j]
        cost[-1] -= T[i][-1]

    while True:
        entering = next((j for j in range(n + m) if cost[j] < 0), None)
        if entering is None:
            break
        leaving, best = None, None
        for i in range(m):
            a = T[i][entering]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    leaving, best = i, ratio
        if leaving is None:
            # Phase one is bounded below by zero, so this cannot happen.
            raise ArithmeticError("unbounded phase-one objective")
        _pivot(T, cost, leaving, entering)
        basis[leaving] = entering

    if cost[-1] < 0:
        # Reduced cost of artificial i is 1 - y_i.
        y = tuple(sign[i] * _fraction(1 - cost[n + i]) for i in range(m))
        return FeasibilityResult(False, y=y)
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = _fraction(T[i][-1])
    return FeasibilityResult(True, x=tuple(x))


def _fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def _pivot(T: list[list[Fraction]], cost: list[Fraction], r: int, c: int) -> None:
    row = T[r]
    p = row[c]
    if p != 1:
        T[r] = row = [v / p for v in row]
    nz = [j for j, v in enumerate(row) if v]
    for i, other in enumerate(T):
        f = other[c]
        if i != r and f:
            for j in nz:
                other[j] -= f * row[j]
    f = cost[c]
    if f:
        for j in nz:
            cost[j] -= f * row[j]


def inequality_feasibility(G: Matrix, h: Sequence[int | Fraction]) -> FeasibilityResult:
    """Is there a free ``x`` with ``G x <= h``?

    Returns ``x`` when feasible, otherwise ``y >= 0`` with ``y.G = 0`` and ``y.h < 0``.
    """
    rows = len(h)
    d = len(G[0]) if rows else 0
    # x = p - q with p, q >= 0, plus one slack per row.
    A = [list(G[i]) + [-v for v in G[i]] + [int(i == j) for j in range(rows)]
         for i in range(rows)]
    res = equality_feasibility(A, h)
    if res.feasible:
        x = tuple(res.x[j] - res.x[d + j] for j in range(d))
        return FeasibilityResult(True, x=x)
    return FeasibilityResult(False, y=tuple(-v for v in res.y))
