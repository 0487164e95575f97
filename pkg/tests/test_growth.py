import math
from math import comb, factorial

import pytest

from symlevel.characters import specht_dim
from symlevel.errors import DomainError, InvalidCharacteristicError, SizeLimitError
from symlevel.growth import (
    F_prod,
    G_of,
    an_plancherel,
    check_dim_bound_char0,
    check_F_submultiplicative,
    check_G_submultiplicative,
    check_lambda_upper,
    check_lambda_vs_bar,
    dim_lower_bound,
    f_pair,
    growth_report,
    growth_sweep,
    plancherel,
)
from symlevel.partitions import Partition, level, partitions_of
from symlevel.tensor import Decomposition

P = Partition


def test_plancherel():
    assert plancherel(Decomposition(5, {P([5]): 1})) == 1
    dec = Decomposition(3, {P([3]): 1, P([2, 1]): 1, P([1, 1, 1]): 1})
    assert plancherel(dec) == 6
    assert plancherel(Decomposition(3, {P([2, 1]): 5})) == 4


def test_f_and_F():
    assert f_pair(2, 2) == 1
    assert f_pair(1, 4) == 3
    assert F_prod(7, 0) == 1
    assert F_prod(1, 3) == 2
    assert F_prod(1, 4) == 6


def test_G_values():
    assert G_of(P([2, 1])) == 1
    for n in (1, 2, 5, 7):
        assert G_of(P([n])) == factorial(n - 1)
    assert G_of(P()) == 1
    # dual-formula agreement is asserted inside G_of; exercise it broadly
    for n in range(13):
        for lam in partitions_of(n):
            G_of(lam)


def test_F_submultiplicative():
    rep = check_F_submultiplicative(12, 12, 12)
    assert rep.passed
    assert rep.instances_checked == 12 * 13 * 13
    # j = 0 gives equality up to the 3^k slack
    for i in range(1, 10):
        for k in range(10):
            assert F_prod(i, k) <= 3**k * F_prod(i, 0) * F_prod(i, k)
    # worked instance: F(1,4) = 6 <= 3^4 * F(1,2) * F(1,2) = 81
    assert F_prod(1, 4) == 6 <= 81
    with pytest.raises(SizeLimitError):
        check_F_submultiplicative(61, 1, 1)


def test_G_submultiplicative():
    rep = check_G_submultiplicative(8)
    assert rep.passed
    # equality at the empty pair, and the (2)+(2) instance
    assert G_of(P()) == 1
    assert G_of(P([4])) == 6 <= 3**4
    with pytest.raises(SizeLimitError):
        check_G_submultiplicative(15)


def test_lambda_vs_bar():
    rep = check_lambda_vs_bar(12)
    assert rep.passed and rep.instances_checked > 0
    # one-row partitions are tight on both sides
    for n in (3, 6, 9):
        lam = P([n])
        assert specht_dim(lam) == comb(n, 0) * specht_dim(P())
    # two-row hook instance
    n = 6
    lam = P([n - 1, 1])
    assert comb(n, 1) * 1 <= 2 * (n - 1)
    assert n - 1 <= comb(n, 1)
    with pytest.raises(SizeLimitError):
        check_lambda_vs_bar(31)


def test_lambda_upper():
    rep = check_lambda_upper(12)
    assert rep.passed
    assert specht_dim(P([2, 2])) ** 2 * factorial(2) == 8 <= 4**4
    with pytest.raises(SizeLimitError):
        check_lambda_upper(31)


def test_dim_lower_bound():
    assert dim_lower_bound(10, 2, 3) == 10
    assert dim_lower_bound(9, 0, 5) == 1
    assert dim_lower_bound(9, 2, 2) == 12
    assert dim_lower_bound(4, 5, 3) == 0  # binomial vanishes
    with pytest.raises(InvalidCharacteristicError):
        dim_lower_bound(6, 1, 1)
    with pytest.raises(DomainError):
        dim_lower_bound(-1, 0, 0)


def test_check_dim_bound():
    rep = check_dim_bound_char0(12)
    assert rep.passed
    with pytest.raises(SizeLimitError):
        check_dim_bound_char0(25)


def test_growth_report_examples():
    n = 5
    rec = growth_report(P([n]), P([n]))
    assert rec.plancherel_tensor == 1 and rec.exponent is None
    rec = growth_report(P([2, 1]), P([2, 1]))
    assert (rec.plancherel_v, rec.plancherel_w, rec.plancherel_tensor) == (4, 4, 6)
    assert abs(rec.exponent - math.log(6) / math.log(16)) < 1e-9
    assert rec.max_level_witness
    rec = growth_report(P([3, 1]), P([3, 1]))
    assert rec.plancherel_tensor == 1 + 9 + 4 + 9
    with pytest.raises(DomainError):
        growth_report(P([3]), P([2]))
    with pytest.raises(SizeLimitError):
        growth_report(P([15]), P([15]))


def test_growth_sweep_witnesses():
    for n in range(2, 8):
        for rec in growth_sweep(n):
            target = level(rec.lam) + level(rec.mu)
            if 1 <= target <= n / 2:
                assert rec.max_level_witness


def test_growth_csv_shape():
    rec = growth_report(P([2, 1]), P([2, 1]))
    row = rec.csv_row()
    assert row.split(",")[0] == "3"
    assert len(row.split(",")) == 8


def test_observational_reports():
    from fractions import Fraction

    from symlevel.growth import observe_degree_vs_hook_products, observe_sum_triple_degree_ratios

    rep = observe_degree_vs_hook_products(12)
    assert rep.passed and rep.instances_checked > 0
    # one-row partitions give dim * G / (n-1)! = 1 exactly, so the max is >= 1
    assert Fraction(rep.observations["max_ratio"]) >= 1
    assert Fraction(rep.observations["min_ratio"]) > 0

    rep = observe_sum_triple_degree_ratios(18)
    assert rep.passed and rep.instances_checked > 0
    assert Fraction(rep.observations["min_scaled_ratio"]) > 0
    with pytest.raises(SizeLimitError):
        observe_sum_triple_degree_ratios(31)


def test_an_plancherel():
    assert an_plancherel(Decomposition(4, {P([4]): 1})) == 1
    assert an_plancherel(Decomposition(3, {P([2, 1]): 1})) == 2
    assert an_plancherel(Decomposition(4, {P([3, 1]): 1, P([2, 1, 1]): 1})) == 9
    with pytest.raises(DomainError):
        an_plancherel(Decomposition(1, {P([1]): 1}))


def test_an_plancherel_splitting_bounds():
    # the alternating-group measure sits between half the symmetric measure and itself
    from symlevel.tensor import kronecker_decompose

    for n in range(2, 8):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                dec = kronecker_decompose(lam, mu)
                s = plancherel(dec)
                a = an_plancherel(dec)
                assert s >= a and 2 * a >= s


def test_self_conjugate_dims_are_even():
    from symlevel.partitions import conjugate

    for n in range(2, 13):
        for lam in partitions_of(n):
            if conjugate(lam) == lam:
                assert specht_dim(lam) % 2 == 0
