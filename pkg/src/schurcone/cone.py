"""Extremality in the Schur cones and separating functions.

The cone ``C_N^k`` is spanned by the products ``s_A`` over factor sets A of
weight N whose factors have at most k parts.  A generator is extreme when it
is not a non-negative combination of the other generators; by Farkas this is
the same as the existence of a separating function f with ``<f, s_A> > 0`` and
``<f, s_B> <= 0`` for the rivals B.  Strict positivity is encoded as
``<f, s_A> >= 1`` throughout.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .errors import DomainError
from .lp import equality_feasibility, inequality_feasibility
from .nested import (FactorSet, enumerate_sp, enumerate_sp_lambda, enumerate_ssp,
                     enumerate_ssp_lambda, format_factor_set, inside_out_order,
                     is_nested, make_factor_set, max_parts, parse_factor_set, phi,
                     down_set, up_set, agree_within)
from .partitions import (Partition, dominance_interval, dominates, down,
                         format_partition, is_distinct, is_down_invertible,
                         lambda_dagger, lambda_plus, lambda_plusplus,
                         parse_partition, partitions_of, up)
from .symfunc import (Number, SchurVector, format_number, pair_with_product,
                      parse_number, schur_coefficient, schur_product,
                      syzygy_decompose)
from .tableaux import enumerate_ssyt

MODES = ("global", "from_above", "interval")


class SeparationError(RuntimeError):
    """A construction that should always separate produced a function that does not."""


@dataclass(frozen=True)
class ConeSpec:
    N: int
    k: int

    def __post_init__(self):
        if self.N < 0 or self.k < 1:
            raise DomainError(f"need N >= 0 and k >= 1, got N={self.N}, k={self.k}")


def generators(spec: ConeSpec) -> list[tuple[FactorSet, SchurVector]]:
    return [(A, schur_product(A)) for A in enumerate_sp(spec.N, spec.k)]


def _primitive(coeffs: Mapping[Partition, Number]) -> dict[Partition, int]:
    """Positive rescaling of a rational vector to coprime integers."""
    coeffs = {lam: Fraction(c) for lam, c in coeffs.items() if c}
    if not coeffs:
        return {}
    den = math.lcm(*(c.denominator for c in coeffs.values()))
    ints = {lam: int(c * den) for lam, c in coeffs.items()}
    g = math.gcd(*ints.values())
    return {lam: c // g for lam, c in ints.items()}


# -- certificates ----------------------------------------------------------

def _interval_json(interval):
    return None if interval is None else [format_partition(p) for p in interval]


def _interval_from_json(obj):
    return None if obj is None else (parse_partition(obj[0]), parse_partition(obj[1]))


def _num_or_none(x):
    return None if x is None else format_number(x)


@dataclass
class SeparationCertificate:
    """A function f separating ``target`` in the given mode.

    ``max_other`` is None when the mode has no rivals to test.
    """

    target: FactorSet
    f: SchurVector
    mode: str
    interval: tuple[Partition, Partition] | None
    margin: Number
    max_other: Number | None

    def to_json(self) -> dict:
        return {"target": format_factor_set(self.target), "mode": self.mode,
                "interval": _interval_json(self.interval), "f": self.f.to_json(),
                "margin": format_number(self.margin),
                "max_other": _num_or_none(self.max_other)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "SeparationCertificate":
        mo = obj.get("max_other")
        return cls(parse_factor_set(obj["target"]), SchurVector.from_json(obj["f"]),
                   obj["mode"], _interval_from_json(obj.get("interval")),
                   parse_number(obj["margin"]), None if mo is None else parse_number(mo))


def _combination_json(combination: Mapping[FactorSet, Number]) -> list[dict]:
    return [{"factors": format_factor_set(B), "coeff": format_number(c)}
            for B, c in sorted(combination.items())]


def _combination_from_json(items) -> dict[FactorSet, Number]:
    return {parse_factor_set(t["factors"]): parse_number(t["coeff"]) for t in items}


@dataclass
class Witness:
    """``s_target`` as a non-negative combination of other generators."""

    target: FactorSet
    combination: dict[FactorSet, Number]

    def verify(self) -> bool:
        if any(c < 0 for c in self.combination.values()) or self.target in self.combination:
            return False
        a = schur_product(self.target)
        total = SchurVector.zero(a.degree)
        for B, c in self.combination.items():
            total = total + c * schur_product(B)
        return total == a

    def to_json(self) -> dict:
        return {"target": format_factor_set(self.target),
                "combination": _combination_json(self.combination)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "Witness":
        return cls(parse_factor_set(obj["target"]), _combination_from_json(obj["combination"]))


@dataclass
class InfeasibilityProof:
    """No function supported on ``interval`` separates ``target``.

    Restricted to the interval, ``s_target`` equals the non-negative
    combination of rival products given in ``combination``; any f supported
    there would then give ``<f, s_target> <= 0``.
    """

    target: FactorSet
    interval: tuple[Partition, Partition]
    combination: dict[FactorSet, Number]

    def verify(self) -> bool:
        lam, rho = self.interval
        shapes = dominance_interval(lam, rho)
        for B, c in self.combination.items():
            if c < 0 or B == self.target or phi(B) not in shapes or not is_nested(B):
                return False
        return all(
            sum((c * schur_coefficient(B, mu) for B, c in self.combination.items()), 0)
            == schur_coefficient(self.target, mu) for mu in shapes)

    def to_json(self) -> dict:
        return {"target": format_factor_set(self.target), "infeasible": True,
                "interval": _interval_json(self.interval),
                "combination": _combination_json(self.combination)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "InfeasibilityProof":
        return cls(parse_factor_set(obj["target"]), _interval_from_json(obj["interval"]),
                   _combination_from_json(obj["combination"]))


@dataclass
class ExtremalityResult:
    target: FactorSet
    extreme: bool
    certificate: SeparationCertificate | None = None
    witness: Witness | None = None

    def to_json(self) -> dict:
        out = {"target": format_factor_set(self.target), "extreme": self.extreme}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out

    @classmethod
    def from_json(cls, obj: Mapping) -> "ExtremalityResult":
        cert = obj.get("certificate")
        wit = obj.get("witness")
        return cls(parse_factor_set(obj["target"]), bool(obj["extreme"]),
                   None if cert is None else SeparationCertificate.from_json(cert),
                   None if wit is None else Witness.from_json(wit))


# -- checking --------------------------------------------------------------

@dataclass
class SeparationReport:
    ok: bool
    margin: Number
    max_other: Number | None
    violations: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _rivals(A: FactorSet, mode: str, interval, k: int, strict: bool) -> list[FactorSet]:
    n = sum(map(sum, A))
    lam = phi(A)
    if mode == "global":
        if k == 2 and not strict:
            pool = enumerate_ssp(n)
        else:
            a = schur_product(A)
            return [B for B in enumerate_sp(n, k) if B != A and schur_product(B) != a]
    elif mode == "from_above":
        lister = enumerate_sp_lambda if strict else enumerate_ssp_lambda
        pool = [B for nu in partitions_of(n) if dominates(nu, lam) for B in lister(nu)]
    elif mode == "interval":
        if interval is None:
            raise DomainError("interval mode needs an interval")
        lister = enumerate_sp_lambda if strict else enumerate_ssp_lambda
        pool = [B for nu in dominance_interval(*interval) for B in lister(nu)]
    else:
        raise DomainError(f"unknown separation mode {mode!r}; expected one of {MODES}")
    return [B for B in pool if B != A]


def separates_check(f: SchurVector, A: Iterable[Partition], mode: str = "global",
                    interval: tuple[Partition, Partition] | None = None, *,
                    k: int = 2, strict: bool = False) -> SeparationReport:
    """Check every clause of "f separates A" for the given mode, exactly.

    Rivals are the nested sets (``SSP``) as in the usual definition; with
    ``strict=True`` (or ``k != 2``) every generator of the cone is tested.
    """
    A = make_factor_set(A)
    violations = []
    if mode == "interval" and interval is not None:
        shapes = set(dominance_interval(*interval))
        for mu in f:
            if mu not in shapes:
                violations.append(f"support of f leaves the interval at {format_partition(mu)}")
    margin = pair_with_product(f, A)
    if margin <= 0:
        violations.append(f"<f, s_A> = {format_number(margin)} is not positive")
    max_other = None
    for B in _rivals(A, mode, interval, k, strict):
        v = pair_with_product(f, B)
        if max_other is None or v > max_other:
            max_other = v
        if v > 0:
            violations.append(f"<f, s_B> = {format_number(v)} > 0 for B = {format_factor_set(B)}")
    return SeparationReport(not violations, margin, max_other, violations)


def _certify(f: SchurVector, A: FactorSet, mode: str, interval, **kw) -> SeparationCertificate:
    report = separates_check(f, A, mode, interval, **kw)
    if not report.ok:
        raise SeparationError(f"{format_factor_set(A)}: " + "; ".join(report.violations[:5]))
    return SeparationCertificate(A, f, mode, interval, report.margin, report.max_other)


# -- extremality -----------------------------------------------------------

def is_extreme(A: Iterable[Partition], spec: ConeSpec) -> ExtremalityResult:
    """Decide whether ``s_A`` is extreme in ``C_N^k`` by exact linear feasibility.

    Rivals whose Schur support is not inside the support of ``s_A`` cannot
    appear in a non-negative combination giving ``s_A``, so the LP only sees
    the rest; the Farkas vector is then pushed down on the extra shapes so the
    certificate holds against every generator.
    """
    A = make_factor_set(A)
    if sum(map(sum, A)) != spec.N or max_parts(A) > spec.k:
        raise DomainError(f"{format_factor_set(A)} is not a generator of C_{spec.N}^{spec.k}")
    a = schur_product(A)
    rivals: list[tuple[FactorSet, SchurVector]] = []
    seen = {a}
    for B in enumerate_sp(spec.N, spec.k):
        v = schur_product(B)
        if B != A and v not in seen:
            seen.add(v)
            rivals.append((B, v))

    rows = [lam for lam, _ in a.items()]
    row_set = set(rows)
    inside = [(B, v) for B, v in rivals if v.support() <= row_set]
    res = equality_feasibility([[v[mu] for _, v in inside] for mu in rows],
                               [a[mu] for mu in rows])
    if res.feasible:
        combo = {B: _tidy_num(x) for (B, _), x in zip(inside, res.x) if x}
        return ExtremalityResult(A, False, witness=Witness(A, combo))

    y = dict(zip(rows, res.y))
    penalty, extra = Fraction(0), set()
    for B, v in rivals:
        if v.support() <= row_set:
            continue
        score = sum((y[mu] * c for mu, c in v.items() if mu in row_set), Fraction(0))
        if score > 0:
            penalty = max(penalty, score)
            extra |= v.support() - row_set
    coeffs = dict(y)
    for mu in extra:
        coeffs[mu] = -penalty
    f = SchurVector(_primitive(coeffs), spec.N)
    margin = pair_with_product(f, A)
    max_other = max((pair_with_product(f, B) for B, _ in rivals), default=None)
    if margin <= 0 or (max_other is not None and max_other > 0):
        raise SeparationError(f"Farkas vector for {format_factor_set(A)} does not separate")
    cert = SeparationCertificate(A, f, "global", None, margin, max_other)
    return ExtremalityResult(A, True, certificate=cert)


def _tidy_num(x: Fraction) -> Number:
    return int(x) if x.denominator == 1 else x


def nonnested_witness(A: Iterable[Partition]) -> Witness:
    """Witness of non-extremality from the first violating pair of factors."""
    A = make_factor_set(A)
    for i in range(len(A)):
        for j in range(i + 1, len(A)):
            try:
                syz = syzygy_decompose(A[i], A[j])
            except DomainError:
                continue
            rest = A[:i] + A[i + 1:j] + A[j + 1:]
            first = make_factor_set(rest + syz.first)
            second = make_factor_set(rest + syz.second)
            if first == second:
                return Witness(A, {first: 2})
            return Witness(A, {first: 1, second: 1})
    raise DomainError(f"{format_factor_set(A)} is nested; no syzygy applies")


# -- interval separators ---------------------------------------------------

def find_separator(A: Iterable[Partition], lam: Partition, rho: Partition
                   ) -> SeparationCertificate | InfeasibilityProof:
    """Search for f supported on ``[lam, rho]`` separating A on that interval."""
    A = make_factor_set(A)
    lam, rho = tuple(lam), tuple(rho)
    if phi(A) != lam:
        raise DomainError(f"phi({format_factor_set(A)}) is not {format_partition(lam)}")
    if sum(rho) != sum(lam) or not dominates(rho, lam):
        raise DomainError(f"{format_partition(rho)} does not dominate {format_partition(lam)}")
    shapes = dominance_interval(lam, rho)
    rivals = [B for nu in shapes for B in enumerate_ssp_lambda(nu) if B != A]
    G = [[-schur_coefficient(A, mu) for mu in shapes]]
    G += [[schur_coefficient(B, mu) for mu in shapes] for B in rivals]
    h = [-1] + [0] * len(rivals)
    res = inequality_feasibility(G, h)
    if res.feasible:
        f = SchurVector(_primitive(dict(zip(shapes, res.x))), sum(lam))
        return _certify(f, A, "interval", (lam, rho))
    scale = res.y[0]
    combo = {B: _tidy_num(z / scale) for B, z in zip(rivals, res.y[1:]) if z}
    return InfeasibilityProof(A, (lam, rho), combo)


def lift_separator(f: SchurVector, A: Iterable[Partition]) -> SchurVector:
    """Turn a separator from above into a global one.

    Shapes below ``phi(A)`` are visited in lex-descending order (a linear
    extension of dominance), and ``s_mu`` is subtracted as often as needed to
    push every nested B with ``phi(B) = mu`` to ``<u, s_B> <= 0``.
    """
    A = make_factor_set(A)
    report = separates_check(f, A, "from_above")
    if not report.ok:
        raise DomainError("lift_separator needs a separator from above: "
                          + "; ".join(report.violations[:3]))
    lam = phi(A)
    u = f
    for mu in partitions_of(f.degree):
        if dominates(mu, lam):
            continue
        m = max((pair_with_product(u, B) for B in enumerate_ssp_lambda(mu)), default=0)
        if m > 0:
            u = u - m * SchurVector.unit(mu)
    return u


# -- distinct parts --------------------------------------------------------

def lambda_bracket(lam: Partition, i: int, j: int) -> Partition:
    """``lam`` with part ``i`` raised by one and part ``j`` lowered by one
    (0-based indices, ``i < j``)."""
    lam = tuple(lam)
    if not is_distinct(lam):
        raise DomainError(f"lambda_bracket needs distinct parts, got {lam}")
    if not 0 <= i < j < len(lam):
        raise DomainError(f"bad indices {i}, {j} for {lam}")
    p = list(lam)
    p[i] += 1
    p[j] -= 1
    return tuple(x for x in p if x)


def pair_indices(lam: Partition, rho: Partition) -> tuple[int, int]:
    """0-based positions of the two parts of ``rho`` in the distinct partition ``lam``."""
    try:
        return lam.index(rho[0]), lam.index(rho[1])
    except ValueError:
        raise DomainError(f"{rho} is not a pair of parts of {lam}") from None


def lr_lemma_check(A: Iterable[Partition], B: Iterable[Partition], rho: Partition) -> bool:
    """Whether ``c_A + 1 = c_B`` at ``lam[rho]`` (and 0, 1 for adjacent parts)."""
    A, B, rho = make_factor_set(A), make_factor_set(B), tuple(rho)
    lam = phi(A)
    if phi(B) != lam or not is_distinct(lam):
        raise DomainError("A and B must share a distinct-parts phi")
    if not (is_nested(A) and is_nested(B)):
        raise DomainError("A and B must be nested")
    if rho not in A or rho in B or not agree_within(A, B, rho):
        raise DomainError("need rho in A, rho not in B, and A, B agreeing within rho")
    i, j = pair_indices(lam, rho)
    target = lambda_bracket(lam, i, j)
    ca, cb = schur_coefficient(A, target), schur_coefficient(B, target)
    if j == i + 1 and (ca, cb) != (0, 1):
        return False
    return ca + 1 == cb


def bracket_tableau_count(lam: Partition, i: int, j: int) -> int:
    return len(enumerate_ssyt(lambda_bracket(lam, i, j), lam))


def distinct_parts_separator(A: Iterable[Partition]) -> SeparationCertificate:
    """Separator of A on ``[lam, lam+]`` for distinct-parts ``lam = phi(A)``,
    built without any LP.

    Starting from ``s_lam`` (which separates all of ``SSP_lam``), the two-part
    factors of A are taken inside out; each one halves the surviving set with
    a partial separator ``(c+1) s_lam - s_{lam[rho]}``, folded in with the
    smallest non-negative integer weight that keeps the discarded sets down.
    """
    A = make_factor_set(A)
    lam = phi(A)
    if not is_distinct(lam):
        raise DomainError(f"distinct_parts_separator needs distinct parts, got {lam}")
    family = enumerate_ssp_lambda(lam)
    if A not in family:
        raise DomainError(f"{format_factor_set(A)} is not nested")
    upper = lambda_plus(lam) if len(lam) >= 2 else lam
    s_lam = SchurVector.unit(lam)
    f, level = s_lam, 1
    survivors = set(family)
    for rho in inside_out_order(A):
        if all(rho in B for B in survivors):
            # Nothing left to cut off at this stage; f still separates the survivors.
            continue
        target = lambda_bracket(lam, *pair_indices(lam, rho))
        c = schur_coefficient(A, target)
        g = (c + 1) * s_lam - SchurVector.unit(target)
        outside = [B for B in family if B not in survivors]
        m = max((pair_with_product(g, B) for B in outside), default=0)
        b = max(0, math.ceil(Fraction(m) / level))
        f = g + b * f - (b * level) * s_lam
        level = pair_with_product(g, A)
        survivors = {B for B in survivors if rho in B}
    return _certify(f, A, "interval", (lam, upper))


# -- conjecture drivers ----------------------------------------------------

def _pmap(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


@dataclass
class Conjecture1Report:
    N: int
    extreme: list[FactorSet]
    nested: list[FactorSet]

    @property
    def extreme_not_nested(self) -> list[FactorSet]:
        nested = set(self.nested)
        return [A for A in self.extreme if A not in nested]

    @property
    def nested_not_extreme(self) -> list[FactorSet]:
        extreme = set(self.extreme)
        return [A for A in self.nested if A not in extreme]

    @property
    def ok(self) -> bool:
        return not self.extreme_not_nested and not self.nested_not_extreme


def _extreme_k2(args):
    A, n = args
    return is_extreme(A, ConeSpec(n, 2)).extreme


def verify_conjecture1(N: int, jobs: int = 1) -> Conjecture1Report:
    """Compare the LP extreme set of ``C_N^2`` with the nested sets."""
    family = enumerate_sp(N, 2)
    verdicts = _pmap(_extreme_k2, [(A, N) for A in family], jobs)
    extreme = [A for A, e in zip(family, verdicts) if e]
    return Conjecture1Report(N, extreme, [A for A in family if is_nested(A)])


@dataclass
class StrongEntry:
    target: FactorSet
    interval: tuple[Partition, Partition]
    route: str
    ok: bool
    certificate: SeparationCertificate | None
    detail: str = ""
    seconds: float = 0.0


@dataclass
class StrongReport:
    N: int
    entries: list[StrongEntry]

    @property
    def failures(self) -> list[StrongEntry]:
        return [e for e in self.entries if not e.ok]

    @property
    def ok(self) -> bool:
        return not self.failures


def strong_interval(A: FactorSet) -> tuple[tuple[Partition, Partition], str]:
    """Interval (and its name) on which an even ``phi(A)`` should separate A."""
    lam = phi(A)
    if len(lam) % 2:
        raise DomainError(f"strong_interval needs an even number of parts, got {lam}")
    if is_down_invertible(lam) and is_nested(down_set(A)):
        return (lam, lambda_dagger(lam)), "dagger"
    return (lam, lambda_plusplus(lam)), "plusplus"


def odd_interval(lam: Partition) -> tuple[Partition, Partition]:
    """``[lam, lam++]`` for odd lam, read off through the up-shift.

    For a single part this is the one-point interval.
    """
    return lam, down(lambda_dagger(up(lam)))


def shift_down(f: SchurVector, length: int) -> SchurVector:
    """Remove a first column of height ``length`` from every shape of f.

    Each shape must have exactly ``length`` parts and end in a part 1.  Shapes
    that lose more than one part correspond to shorter partitions padded with
    zeros before the column was added.
    """
    out = {}
    for mu, c in f.items():
        if len(mu) != length or mu[-1] != 1:
            raise DomainError(f"{format_partition(mu)} is not the up-shift of a shape")
        out[down(mu)] = c
    return SchurVector(out, f.degree - length)


def _strong_one(args) -> StrongEntry:
    A, direct = args
    start = time.perf_counter()
    lam = phi(A)
    if len(lam) % 2 == 0:
        interval, route = strong_interval(A)
        entry = _entry(A, interval, route, find_separator(A, *interval))
    elif direct:
        interval = odd_interval(lam)
        entry = _entry(A, interval, "direct", find_separator(A, *interval))
    else:
        interval = odd_interval(lam)
        lu = up(lam)
        res = find_separator(up_set(A), lu, lambda_dagger(lu))
        if isinstance(res, InfeasibilityProof):
            entry = StrongEntry(A, interval, "up", False, None,
                                "no separator for the up-shifted set")
        else:
            try:
                f = shift_down(res.f, len(lu))
                report = separates_check(f, A, "interval", interval)
            except DomainError as exc:
                report = SeparationReport(False, 0, None, [str(exc)])
            if report.ok:
                cert = SeparationCertificate(A, f, "interval", interval,
                                             report.margin, report.max_other)
                entry = StrongEntry(A, interval, "up", True, cert)
            else:
                entry = StrongEntry(A, interval, "up", False, None,
                                    "shifted separator fails: " + "; ".join(report.violations[:3]))
    entry.seconds = time.perf_counter() - start
    return entry


def _entry(A, interval, route, res) -> StrongEntry:
    if isinstance(res, InfeasibilityProof):
        return StrongEntry(A, interval, route, False, None, "LP infeasible")
    return StrongEntry(A, interval, route, True, res)


def verify_strong(N: int, direct: bool = False, jobs: int = 1) -> StrongReport:
    """Look for a separator of every nested A of weight N on its conjectured interval."""
    family = enumerate_ssp(N)
    return StrongReport(N, _pmap(_strong_one, [(A, direct) for A in family], jobs))


@dataclass
class DistinctEntry:
    target: FactorSet
    ok: bool
    certificate: SeparationCertificate | None
    detail: str = ""


def _distinct_one(A: FactorSet) -> DistinctEntry:
    try:
        return DistinctEntry(A, True, distinct_parts_separator(A))
    except SeparationError as exc:
        return DistinctEntry(A, False, None, str(exc))


def verify_distinct(N: int, jobs: int = 1) -> list[DistinctEntry]:
    """Run the constructive separator on every nested set with distinct-parts phi."""
    family = [A for lam in partitions_of(N) if is_distinct(lam)
              for A in enumerate_ssp_lambda(lam)]
    return _pmap(_distinct_one, family, jobs)
