import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from schurcone.cone import (ConeSpec, ExtremalityResult, InfeasibilityProof,
                            SeparationCertificate, Witness, bracket_tableau_count,
                            distinct_parts_separator, find_separator, generators,
                            is_extreme, lambda_bracket, lift_separator, lr_lemma_check,
                            nonnested_witness, odd_interval, separates_check, shift_down,
                            strong_interval, verify_conjecture1, verify_distinct,
                            verify_strong)
from schurcone.errors import DomainError
from schurcone.nested import (agree_within, enumerate_sp, enumerate_ssp_lambda, is_nested,
                              make_factor_set, phi)
from schurcone.partitions import (dominates, is_distinct, lambda_dagger, lambda_plus,
                                  partitions_of)
from schurcone.symfunc import SchurVector, schur_product

S = SchurVector.unit
WORKED_F = S((2, 2, 1, 1)) + S((2, 2, 2)) + S((3, 1, 1, 1)) - S((3, 2, 1))
SQUARE = make_factor_set([(2, 1), (2, 1)])

EXTREME_C62 = {
    ((6,),), ((4,), (1, 1)), ((3,), (2, 1)),
    ((5, 1),), ((3, 1), (1, 1)), ((2, 1), (2, 1)),
    ((4, 2),), ((2, 2), (2,)), ((2,), (1, 1), (1, 1)),
    ((3, 3),), ((2, 2), (1, 1)), ((1, 1), (1, 1), (1, 1)),
    ((3, 2), (1,)),
}


def test_cone_spec_validation():
    with pytest.raises(DomainError):
        ConeSpec(3, 0)
    with pytest.raises(DomainError):
        ConeSpec(-1, 2)


def test_generators_examples():
    assert len(generators(ConeSpec(6, 1))) == 11
    assert [A for A, _ in generators(ConeSpec(2, 2))] == [((2,),), ((1, 1),), ((1,), (1,))]
    assert generators(ConeSpec(0, 3)) == [((), SchurVector({(): 1}, 0))]


def test_is_extreme_examples():
    res = is_extreme(SQUARE, ConeSpec(6, 2))
    assert res.extreme and res.certificate.margin > 0
    res = is_extreme([(3, 1), (2,)], ConeSpec(6, 2))
    assert not res.extreme
    assert res.witness.verify()
    assert res.witness.combination == {((3, 2), (1,)): 1, ((4,), (1, 1)): 1}
    with pytest.raises(DomainError):
        is_extreme([(3, 1, 1)], ConeSpec(5, 2))


def test_c62_extreme_set_is_ssp6():
    spec = ConeSpec(6, 2)
    extreme = {A for A in enumerate_sp(6, 2) if is_extreme(A, spec).extreme}
    assert extreme == {make_factor_set(A) for A in EXTREME_C62}
    assert extreme == {A for A in enumerate_sp(6, 2) if is_nested(A)}
    assert SQUARE in extreme
    assert make_factor_set([(3, 1), (2,)]) not in extreme


@pytest.mark.parametrize("n", range(1, 7))
def test_k1_everything_extreme(n):
    spec = ConeSpec(n, 1)
    assert all(is_extreme(A, spec).extreme for A in enumerate_sp(n, 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_k_at_least_n_singletons(n):
    spec = ConeSpec(n, n)
    extreme = {A for A in enumerate_sp(n, n) if is_extreme(A, spec).extreme}
    assert extreme == {(lam,) for lam in partitions_of(n)}


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 7) for k in (1, 2, 3)])
def test_duality_soundness(n, k):
    spec = ConeSpec(n, k)
    for A in enumerate_sp(n, k):
        res = is_extreme(A, spec)
        assert (res.certificate is None) == (not res.extreme)
        assert (res.witness is None) == res.extreme
        if res.extreme:
            report = separates_check(res.certificate.f, A, "global", k=k, strict=True)
            assert report.ok, report.violations
            assert report.margin == res.certificate.margin
        else:
            assert res.witness.verify()


@pytest.mark.parametrize("n", range(2, 11))
def test_non_nested_sets_have_syzygy_witnesses(n):
    for A in enumerate_sp(n, 2):
        if not is_nested(A):
            w = nonnested_witness(A)
            assert w.verify()
    with pytest.raises(DomainError):
        nonnested_witness(SQUARE)


def test_witness_verify_rejects_bad_combinations():
    A = make_factor_set([(3, 1), (2,)])
    assert not Witness(A, {((3, 2), (1,)): 1}).verify()
    assert not Witness(A, {A: 1}).verify()
    assert not Witness(A, {((3, 2), (1,)): 2, ((4,), (1, 1)): -1}).verify()


def test_find_separator_worked_example():
    res = find_separator(SQUARE, (2, 2, 1, 1), (3, 2, 1))
    assert isinstance(res, SeparationCertificate)
    assert res.f == WORKED_F
    assert separates_check(WORKED_F, SQUARE, "interval", ((2, 2, 1, 1), (3, 2, 1))).ok


def test_negative_controls():
    lam = (2, 2, 2, 1, 1, 1)
    A = make_factor_set([(2, 1)] * 3)
    res = find_separator(A, lam, lambda_plus(lam))
    assert isinstance(res, InfeasibilityProof) and res.verify()
    lam = (3, 3, 2, 2, 2, 1)
    assert lambda_dagger(lam) == (4, 4, 2, 1, 1, 1)
    A = make_factor_set([(3, 1), (3, 2), (2, 2)])
    res = find_separator(A, lam, lambda_dagger(lam))
    assert isinstance(res, InfeasibilityProof) and res.verify()


def test_find_separator_domain():
    with pytest.raises(DomainError):
        find_separator(SQUARE, (3, 2, 1), (2, 2, 1, 1))
    with pytest.raises(DomainError):
        find_separator(SQUARE, (3, 3), (4, 2))


def test_infeasibility_proof_verify_rejects_tampering():
    lam = (2, 2, 2, 1, 1, 1)
    A = make_factor_set([(2, 1)] * 3)
    res = find_separator(A, lam, lambda_plus(lam))
    B, c = next(iter(res.combination.items()))
    assert not InfeasibilityProof(A, res.interval, {**res.combination, B: c + 1}).verify()


def test_separates_check_examples():
    for lam in partitions_of(7):
        family = enumerate_ssp_lambda(lam)
        if len(family) == 1:
            assert separates_check(S(lam), family[0], "from_above").ok
    assert separates_check(WORKED_F, SQUARE, "from_above").ok
    assert separates_check(WORKED_F, SQUARE, "from_above", strict=True).ok
    zero = SchurVector.zero(6)
    assert not separates_check(zero, SQUARE, "global")
    assert not separates_check(WORKED_F, SQUARE, "global")
    with pytest.raises(DomainError):
        separates_check(WORKED_F, SQUARE, "sideways")
    report = separates_check(WORKED_F, SQUARE, "interval", ((2, 2, 1, 1), (2, 2, 2)))
    assert not report.ok
    assert any("support" in v for v in report.violations)


@given(st.fractions(min_value=Fraction(1, 10), max_value=10))
def test_separation_is_scale_invariant(c):
    for mode in ("from_above", "global"):
        assert bool(separates_check(c * WORKED_F, SQUARE, mode)) == \
            bool(separates_check(WORKED_F, SQUARE, mode))


def test_lift_separator():
    g = lift_separator(WORKED_F, SQUARE)
    assert separates_check(g, SQUARE, "global").ok
    assert separates_check(g, SQUARE, "global", strict=True).ok
    assert lift_separator(g, SQUARE) == g
    with pytest.raises(DomainError):
        lift_separator(S((3, 2, 1)), SQUARE)


@pytest.mark.parametrize("n", range(2, 9))
def test_lift_singleton_families(n):
    for lam in partitions_of(n):
        family = enumerate_ssp_lambda(lam)
        if len(family) == 1:
            g = lift_separator(S(lam), family[0])
            assert separates_check(g, family[0], "global").ok


@pytest.mark.parametrize("n", range(2, 8))
def test_interval_separator_lifts_to_global(n):
    for lam in partitions_of(n):
        for A in enumerate_ssp_lambda(lam):
            res = find_separator(A, lam, (n,))
            assert isinstance(res, SeparationCertificate)
            g = lift_separator(res.f, A)
            assert separates_check(g, A, "global").ok


def test_lambda_bracket_examples():
    lam = (4, 3, 2, 1)
    assert lambda_bracket(lam, 0, 3) == (5, 3, 2)
    assert lambda_bracket(lam, 1, 2) == (4, 4, 1, 1)
    with pytest.raises(DomainError):
        lambda_bracket((2, 2, 1), 0, 2)
    with pytest.raises(DomainError):
        lambda_bracket(lam, 2, 1)


def distinct_partitions(lo, hi):
    return [lam for n in range(lo, hi + 1) for lam in partitions_of(n)
            if is_distinct(lam) and len(lam) >= 2]


def test_bracket_lies_in_plus_interval():
    for lam in distinct_partitions(3, 12):
        for i in range(len(lam)):
            for j in range(i + 1, len(lam)):
                mu = lambda_bracket(lam, i, j)
                assert dominates(mu, lam) and dominates(lambda_plus(lam), mu)


def test_bracket_tableau_counts():
    for lam in distinct_partitions(3, 10):
        for i in range(len(lam)):
            for j in range(i + 1, len(lam)):
                assert bracket_tableau_count(lam, i, j) == 2 ** (j - i - 1)


def lemma_triples(max_n):
    for lam in distinct_partitions(3, max_n):
        family = enumerate_ssp_lambda(lam)
        for A in family:
            for rho in sorted({f for f in A if len(f) == 2}):
                for B in family:
                    if rho not in B and agree_within(A, B, rho):
                        yield A, B, rho


def test_lr_lemma_examples():
    lam = (4, 3, 2, 1)
    assert set(enumerate_ssp_lambda(lam)) == {((4, 3), (2, 1)), ((4, 1), (3, 2))}
    # Adjacent parts 4 > 3: c_A = 0 and c_B = 1 at lam[rho] = (5, 2, 2, 1).
    A, B = make_factor_set([(4, 3), (2, 1)]), make_factor_set([(4, 1), (3, 2)])
    assert lr_lemma_check(A, B, (4, 3))
    assert schur_product(A)[(5, 2, 2, 1)] == 0 and schur_product(B)[(5, 2, 2, 1)] == 1
    # rho = (4,1) with A = {(4,1),(3,2)}: (3,2) sits inside rho and is missing
    # from B, so the sets do not agree within rho and the lemma does not apply.
    with pytest.raises(DomainError):
        lr_lemma_check(B, A, (4, 1))
    assert schur_product(B)[(5, 3, 2)] == 2 and schur_product(A)[(5, 3, 2)] == 1
    with pytest.raises(DomainError):
        lr_lemma_check(A, A, (4, 3))


def test_lr_lemma_all_triples():
    triples = list(lemma_triples(12))
    assert len(triples) > 25
    assert all(lr_lemma_check(A, B, rho) for A, B, rho in triples)


def test_distinct_parts_separator_examples():
    cert = distinct_parts_separator([(2, 1)])
    assert cert.f == S((2, 1))
    cert = distinct_parts_separator([(4, 3), (2, 1)])
    assert cert.margin > 0
    assert cert.f == S((4, 3, 2, 1)) - S((5, 2, 2, 1))
    for A in enumerate_ssp_lambda((5, 4, 3, 2, 1)):
        cert = distinct_parts_separator(A)
        lam = phi(A)
        assert separates_check(cert.f, A, "interval", (lam, lambda_plus(lam))).ok
    with pytest.raises(DomainError):
        distinct_parts_separator([(2, 2)])


def test_constructive_agrees_with_lp():
    for lam in distinct_partitions(3, 10):
        for A in enumerate_ssp_lambda(lam):
            lp = find_separator(A, lam, lambda_plus(lam))
            assert isinstance(lp, SeparationCertificate)
            cert = distinct_parts_separator(A)
            assert separates_check(cert.f, A, "interval", cert.interval).ok


@pytest.mark.parametrize("n", range(1, 8))
def test_conjecture1_small(n):
    rep = verify_conjecture1(n)
    assert rep.ok, (rep.extreme_not_nested, rep.nested_not_extreme)


def test_verify_strong_both_routes():
    for n in range(1, 10):
        for direct in (False, True):
            rep = verify_strong(n, direct=direct)
            assert rep.ok, [(e.target, e.detail) for e in rep.failures]
    routes = {e.route for n in range(1, 10) for e in verify_strong(n).entries}
    assert routes == {"dagger", "plusplus", "up"}


def test_strong_interval_routes():
    A = make_factor_set([(5, 4), (3, 1), (2, 1), (1, 1)])
    assert strong_interval(A)[1] == "plusplus"
    A = make_factor_set([(4, 3), (2, 1)])
    interval, route = strong_interval(A)
    assert route == "dagger" and interval == ((4, 3, 2, 1), (5, 3, 1, 1))
    # 4311 is not down-invertible (its last two parts agree).
    assert strong_interval(make_factor_set([(4, 1), (3, 1)]))[1] == "plusplus"
    with pytest.raises(DomainError):
        strong_interval(make_factor_set([(3,), (2, 1)]))
    assert odd_interval((3,)) == ((3,), (3,))


def test_shift_down():
    f = S((3, 2, 1)) - 2 * S((4, 1, 1))
    assert shift_down(f, 3) == S((2, 1)) - 2 * S((3,))
    with pytest.raises(DomainError):
        shift_down(S((3, 3)), 2)


def test_verify_distinct():
    entries = [e for n in range(1, 11) for e in verify_distinct(n)]
    assert entries and all(e.ok for e in entries)


def test_parallel_matches_serial():
    serial = verify_conjecture1(5, jobs=1)
    parallel = verify_conjecture1(5, jobs=2)
    assert serial.extreme == parallel.extreme


def round_trip(obj, cls):
    text = json.dumps(obj.to_json(), sort_keys=True)
    again = cls.from_json(json.loads(text))
    assert json.dumps(again.to_json(), sort_keys=True) == text
    return again


def test_json_round_trips():
    cert = find_separator(SQUARE, (2, 2, 1, 1), (3, 2, 1))
    again = round_trip(cert, SeparationCertificate)
    assert again.f == cert.f and again.interval == cert.interval
    for A in [SQUARE, make_factor_set([(3, 1), (2,)]), make_factor_set([(1,)] * 4)]:
        round_trip(is_extreme(A, ConeSpec(sum(map(sum, A)), 2)), ExtremalityResult)
    proof = find_separator(make_factor_set([(2, 1)] * 3), (2, 2, 2, 1, 1, 1),
                           lambda_plus((2, 2, 2, 1, 1, 1)))
    assert round_trip(proof, InfeasibilityProof).verify()
    w = round_trip(nonnested_witness([(3, 1), (2,)]), Witness)
    assert w.verify()
    cert = SeparationCertificate(((1,),), S((1,)), "global", None, 1, None)
    assert round_trip(cert, SeparationCertificate).max_other is None
