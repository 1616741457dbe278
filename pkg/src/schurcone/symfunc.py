"""Exact symmetric functions of a fixed degree in the Schur and h bases."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

from .errors import DomainError
from .nested import FactorSet, make_factor_set, phi
from .partitions import (Partition, dominates, format_partition, from_parts,
                         parse_partition, partitions_of)
from .tableaux import kostka, lr_coefficient

Number = Union[int, Fraction]


def _tidy(x: Number) -> Number:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def format_number(x: Number) -> str:
    x = _tidy(x)
    return str(x)


def parse_number(text: str) -> Number:
    return _tidy(Fraction(text))


class _Sparse:
    """Sparse exact coefficient map keyed by partitions of one degree."""

    __slots__ = ("degree", "_coeffs")

    def __init__(self, coeffs: Mapping[Partition, Number] | None = None,
                 degree: int | None = None):
        coeffs = dict(coeffs or {})
        if degree is None:
            if not coeffs:
                raise DomainError("degree is required for an empty vector")
            degree = sum(next(iter(coeffs)))
        clean = {}
        for lam, c in coeffs.items():
            lam = tuple(lam)
            if sum(lam) != degree:
                raise DomainError(f"{lam} is not a partition of {degree}")
            if c:
                clean[lam] = _tidy(c)
        self.degree = degree
        self._coeffs = clean

    @classmethod
    def zero(cls, degree: int):
        return cls({}, degree)

    @classmethod
    def unit(cls, lam: Partition):
        return cls({tuple(lam): 1}, sum(lam))

    def __getitem__(self, lam: Partition) -> Number:
        return self._coeffs.get(tuple(lam), 0)

    def __iter__(self) -> Iterator[Partition]:
        return iter(sorted(self._coeffs, reverse=True))

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def items(self) -> list[tuple[Partition, Number]]:
        """Terms in lex-descending order of partition (a linear extension of dominance)."""
        return [(lam, self._coeffs[lam]) for lam in self]

    def support(self) -> set[Partition]:
        return set(self._coeffs)

    def _same_degree(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.degree != self.degree:
            raise DomainError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        self._same_degree(other)
        out = dict(self._coeffs)
        for lam, c in other._coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return type(self)(out, self.degree)

    def __neg__(self):
        return type(self)({lam: -c for lam, c in self._coeffs.items()}, self.degree)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar: Number):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return type(self)({lam: c * scalar for lam, c in self._coeffs.items()}, self.degree)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.degree == other.degree and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        if not self._coeffs:
            return f"{type(self).__name__}.zero({self.degree})"
        terms = " + ".join(f"{format_number(c)}*{self._letter}[{format_partition(lam)}]"
                           for lam, c in self.items())
        return f"{type(self).__name__}({terms})"

    _letter = "?"

    def to_json(self) -> dict:
        return {"degree": self.degree,
                "terms": [{"partition": format_partition(lam), "coeff": format_number(c)}
                          for lam, c in self.items()]}

    @classmethod
    def from_json(cls, obj: Mapping):
        return cls({parse_partition(t["partition"]): parse_number(t["coeff"])
                    for t in obj["terms"]}, int(obj["degree"]))


class SchurVector(_Sparse):
    """Element of the degree-N symmetric functions in the Schur basis."""

    _letter = "s"


class HPolynomial(_Sparse):
    """Integer combination of products ``h_rho = h_{rho_1} h_{rho_2} ...``."""

    _letter = "h"


def jacobi_trudi(lam: Partition, n: int | None = None) -> HPolynomial:
    """Expand ``det(h_{lam_i - i + j})`` of size ``n`` in products of h's.

    The determinant is expanded row by row over sets of used columns, so the
    work is ``n * 2**n`` rather than ``n!``.
    """
    lam = tuple(lam)
    n = len(lam) if n is None else n
    if n < len(lam):
        raise DomainError(f"determinant size {n} is smaller than the length of {lam}")
    padded = lam + (0,) * (n - len(lam))
    # used-column mask -> {sorted h indices: coefficient}
    layer: dict[int, dict[tuple[int, ...], int]] = {0: {(): 1}}
    for i in range(n):
        nxt: dict[int, dict[tuple[int, ...], int]] = {}
        for mask, terms in layer.items():
            for j in range(n):
                if mask & (1 << j):
                    continue
                index = padded[i] - i + j
                if index < 0:
                    continue
                sign = -1 if bin(mask >> (j + 1)).count("1") % 2 else 1
                bucket = nxt.setdefault(mask | (1 << j), {})
                for key, c in terms.items():
                    new = key if index == 0 else tuple(sorted(key + (index,), reverse=True))
                    bucket[new] = bucket.get(new, 0) + sign * c
        layer = nxt
    return HPolynomial(layer.get((1 << n) - 1, {}), sum(lam))


def h_to_schur(p: HPolynomial) -> SchurVector:
    """Expand each ``h_rho`` as the sum of ``K_{lam,rho} s_lam``."""
    out: dict[Partition, Number] = {}
    for rho, c in p.items():
        for lam in partitions_of(p.degree):
            if dominates(lam, rho):
                k = kostka(lam, rho)
                if k:
                    out[lam] = out.get(lam, 0) + c * k
    return SchurVector(out, p.degree)


def top_partition(A: Iterable[Partition]) -> Partition:
    """Row-wise sum of the factors: the dominance-largest shape in their product."""
    A = list(A)
    rows = max((len(f) for f in A), default=0)
    return from_parts(sum(f[r] for f in A if r < len(f)) for r in range(rows))


def product_support(A: FactorSet) -> list[Partition]:
    """Shapes that can occur in ``s_A``: the dominance interval [phi(A), top]."""
    low, high = phi(A), top_partition(A)
    return [mu for mu in partitions_of(sum(low))
            if dominates(mu, low) and dominates(high, mu)]


def schur_coefficient(A: FactorSet, mu: Partition) -> int:
    """Coefficient of ``s_mu`` in ``s_A``."""
    A = make_factor_set(A)
    if sum(mu) != sum(map(sum, A)):
        return 0
    if not dominates(tuple(mu), phi(A)):
        return 0
    return lr_coefficient(A, tuple(mu))


def schur_product(A: Iterable[Partition]) -> SchurVector:
    """Schur expansion of the product of ``s_f`` over the factors ``f`` of A."""
    return _schur_product(make_factor_set(A))


@lru_cache(maxsize=None)
def _schur_product(A: FactorSet) -> SchurVector:
    degree = sum(map(sum, A))
    return SchurVector({mu: lr_coefficient(A, mu) for mu in product_support(A)}, degree)


def inner_product(f: SchurVector, g: SchurVector) -> Number:
    """Standard inner product in which the Schur functions are orthonormal."""
    if f.degree != g.degree:
        raise DomainError(f"degree mismatch: {f.degree} vs {g.degree}")
    small, big = (f, g) if len(f) <= len(g) else (g, f)
    return _tidy(sum((c * big[lam] for lam, c in small.items()), 0))


def pair_with_product(f: SchurVector, A: FactorSet) -> Number:
    """``<f, s_A>`` computed only on the support of f."""
    return _tidy(sum((c * schur_coefficient(A, lam) for lam, c in f.items()), 0))


class Syzygy(NamedTuple):
    """``s_lam * s_mu = s_{first} + s_{second}`` with the roles as matched."""

    condition: str
    lam: Partition
    mu: Partition
    first: FactorSet
    second: FactorSet


def _syzygy(x: Partition, y: Partition) -> Syzygy | None:
    if len(x) == 2 and len(y) == 2 and x[0] > y[0] >= x[1] > y[1]:
        return Syzygy("1", x, y,
                      make_factor_set([(x[0], y[1]), (y[0], x[1])]),
                      make_factor_set([(x[0], y[0] + 1), (x[1] - 1, y[1])]))
    if len(x) == 2 and len(y) == 1 and x[0] > x[1] and x[0] >= y[0] >= x[1]:
        if x[0] > y[0]:
            return Syzygy("2a", x, y,
                          make_factor_set([(x[0],), (y[0], x[1])]),
                          make_factor_set([(x[1] - 1,), (x[0], y[0] + 1)]))
        return Syzygy("2b", x, y,
                      make_factor_set([(x[1],), (x[0], y[0])]),
                      make_factor_set([(x[0] + 1,), (y[0] - 1, x[1])]))
    if len(x) == 1 and len(y) == 1 and x[0] >= y[0]:
        return Syzygy("3", x, y,
                      make_factor_set([(x[0], y[0])]),
                      make_factor_set([(x[0] + 1,), (y[0] - 1,)]))
    return None


def syzygy_decompose(lam: Partition, mu: Partition) -> Syzygy:
    """Rewrite a non-nested pair as a sum of two products of two-row Schur functions."""
    lam, mu = tuple(lam), tuple(mu)
    found = _syzygy(lam, mu) or _syzygy(mu, lam)
    if found is None:
        raise DomainError(f"no syzygy applies to the nested pair {lam}, {mu}")
    return found
