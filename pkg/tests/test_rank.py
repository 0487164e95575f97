import pytest
from oracles import e2_multiplicities_naive, e3_multiplicity_naive

from symlevel.characters import ClassFunction, character_table
from symlevel.crystal import specht_rank_formula
from symlevel.errors import DomainError, SizeLimitError
from symlevel.partitions import Partition, conjugate, partitions_of
from symlevel.rank import (
    max_level_rank2_identity,
    module_rank2,
    rank2_oracle,
    rank3_oracle,
    restriction_minus_character,
    type_profile_e2,
    type_profile_e3,
    verify_specht_rank,
    verify_tensor_rank_additivity,
)
from symlevel.tensor import Decomposition, kronecker_decompose

P = Partition


def test_rank2_oracle_examples():
    for n in (4, 6, 7, 9):
        t = character_table(n)
        assert rank2_oracle(t.row(P([n]))) == 0
        assert rank2_oracle(t.row(P([n - 1, 1]))) == 1
        assert rank2_oracle(t.row(P([1] * n))) == n // 2


def test_rank3_oracle_examples():
    for n in (4, 6, 7, 9):
        t = character_table(n)
        assert rank3_oracle(t.row(P([n]))) == 0
        assert rank3_oracle(t.row(P([1] * n))) == 0
        assert rank3_oracle(t.row(P([n - 1, 1]))) == 1


def test_e2_profile_against_naive_subset_sum():
    for n in range(2, 8):
        t = character_table(n)
        m = n // 2
        for lam in partitions_of(n):
            chi = t.row(lam)

            def chi_t(t_count):
                return chi.value(P([2] * t_count + [1] * (n - 2 * t_count)))

            naive = e2_multiplicities_naive(chi_t, n)
            profile = type_profile_e2(chi)
            from math import comb

            assert [profile.counts[r] for r in range(m + 1)] == [
                comb(m, r) * naive[r] for r in range(m + 1)
            ]
            assert all(x >= 0 for x in naive)


def test_e3_profile_against_naive_tuple_sum():
    for n in (6, 7, 8):
        t = character_table(n)
        l = n // 3
        for lam in partitions_of(n):
            chi = t.row(lam)

            def chi_ab(a, b):
                return chi.value(P(sorted([3] * a + [2] * b + [1] * (n - 3 * a - 2 * b), reverse=True)))

            profile = type_profile_e3(chi)
            # aggregate the naive per-tuple multiplicities by type
            from itertools import product as iproduct

            by_type = [0] * (l + 1)
            for assignment in iproduct(["triv", "sign", "twodim"], repeat=l):
                r = assignment.count("twodim")
                by_type[r] += e3_multiplicity_naive(chi_ab, n, list(assignment))
            assert list(profile.counts) == by_type


def test_non_character_input_rejected():
    # the indicator of the identity class is not a character
    n = 6
    values = {mu: 0 for mu in partitions_of(n)}
    values[P([1] * n)] = 1
    fake = ClassFunction(n, values)
    with pytest.raises(DomainError):
        rank2_oracle(fake)


def test_oracles_match_closed_forms():
    for n in range(1, 9):
        t = character_table(n)
        for lam in partitions_of(n):
            chi = t.row(lam)
            assert rank2_oracle(chi) == specht_rank_formula(lam, "rank2")
            assert rank3_oracle(chi) == specht_rank_formula(lam, "rank3")


def test_sign_twist_reaches_floor():
    for n in range(2, 13):
        assert max_level_rank2_identity(n)


def test_two_step_restriction_recursion():
    # rank drops by exactly one on the sign-isotypic part of the restriction
    for n in range(3, 11):
        t = character_table(n)
        tm = character_table(n - 2)
        from symlevel.characters import inner_product

        for lam in partitions_of(n):
            chi = t.row(lam)
            minus = restriction_minus_character(chi)
            constituents = [
                sigma for sigma in partitions_of(n - 2) if inner_product(minus, tm.row(sigma)) != 0
            ]
            if not constituents:
                continue
            best = max(rank2_oracle(tm.row(sigma)) for sigma in constituents)
            assert rank2_oracle(chi) == 1 + best


def test_restriction_minus_character_basics():
    n = 6
    t = character_table(n)
    minus_triv = restriction_minus_character(t.row(P([n])))
    assert all(v == 0 for v in minus_triv.values.values())
    minus_sign = restriction_minus_character(t.row(P([1] * n)))
    tm = character_table(n - 2)
    assert minus_sign == tm.row(P([1] * (n - 2)))


def test_module_rank2():
    n = 6
    assert module_rank2(Decomposition(n, {P([n]): 1})) == 0
    assert module_rank2(Decomposition(n, {P([n]): 1, P([1] * n): 1})) == n // 2
    assert module_rank2(kronecker_decompose(P([2, 1]), P([2, 1]))) == 1
    with pytest.raises(DomainError):
        module_rank2(Decomposition(3, {}))


def test_verify_specht_rank_sweep():
    for n in range(1, 9):
        rep = verify_specht_rank(n)
        assert rep.passed
        assert rep.instances_checked == 2 * len(partitions_of(n))


def test_verify_tensor_rank_additivity():
    rep4 = verify_tensor_rank_additivity(4)
    assert rep4.passed
    for n in range(1, 9):
        assert verify_tensor_rank_additivity(n).passed
    with pytest.raises(SizeLimitError):
        verify_tensor_rank_additivity(11)


def test_additivity_example_pair():
    t = character_table(4)
    lam = mu = P([3, 1])
    assert specht_rank_formula(lam, "rank2") == 1
    assert module_rank2(kronecker_decompose(lam, mu, t), t) == 2


def test_e2_profile_of_sign_and_conjugate_reflection():
    for n in (4, 6, 8):
        t = character_table(n)
        m = n // 2
        sign_profile = type_profile_e2(t.row(P([1] * n)))
        assert sign_profile.counts[m] == 1
        assert sum(sign_profile.counts) == 1
        for lam in partitions_of(n):
            r = rank2_oracle(t.row(lam))
            r_conj = rank2_oracle(t.row(conjugate(lam)))
            assert max(r, r_conj) == m
