from math import comb

import pytest

from symlevel.characters import character_table, specht_dim
from symlevel.errors import DomainError, SizeLimitError
from symlevel.partitions import Partition, bar, conjugate, level, partitions_of
from symlevel.tensor import (
    Decomposition,
    kronecker_coeff,
    kronecker_decompose,
    lr_coeff_characters,
    lr_coeff_tableaux,
    max_level_constituent,
    verify_murnaghan_littlewood,
)

P = Partition


def test_kronecker_basics():
    assert kronecker_coeff(P([1] * 5), P([1] * 5), P([5])) == 1
    assert kronecker_coeff(P([3, 1]), P([3, 1]), P([2, 2])) == 1
    for n in range(2, 9):
        t = character_table(n)
        for mu in partitions_of(n):
            for nu in partitions_of(n):
                expected = 1 if mu == nu else 0
                assert kronecker_coeff(P([n]), mu, nu, t) == expected
                twist = 1 if conjugate(mu) == nu else 0
                assert kronecker_coeff(P([1] * n), mu, nu, t) == twist


def test_kronecker_size_mismatch():
    with pytest.raises(DomainError):
        kronecker_coeff(P([3]), P([2, 1]), P([2]))


def test_kronecker_symmetry():
    from itertools import permutations

    for n in range(2, 8):
        t = character_table(n)
        lams = partitions_of(n)
        for a in lams:
            for b in lams:
                for c in lams:
                    g = kronecker_coeff(a, b, c, t)
                    for x, y, z in permutations((a, b, c)):
                        assert kronecker_coeff(x, y, z, t) == g


def test_kronecker_decompose():
    assert kronecker_decompose(P([2, 1]), P([2, 1])).mult == {
        P([3]): 1,
        P([2, 1]): 1,
        P([1, 1, 1]): 1,
    }
    assert kronecker_decompose(P([5]), P([5])).mult == {P([5]): 1}
    assert kronecker_decompose(P([4]), P([3, 1])).mult == {P([3, 1]): 1}
    with pytest.raises(DomainError):
        kronecker_decompose(P([3]), P([2]))


def test_decomposition_validation():
    with pytest.raises(DomainError):
        Decomposition(3, {P([2, 1]): 0})
    with pytest.raises(DomainError):
        Decomposition(3, {P([2]): 1})
    dec = Decomposition(3, {P([1, 1, 1]): 2, P([3]): 1})
    assert [lam.literal() for lam in dec.constituents()] == ["[3]", "[1,1,1]"]


def test_lr_tableaux_small():
    assert lr_coeff_tableaux(P([2]), P([1]), P([2, 1])) == 1
    for m, k in [(1, 1), (2, 1), (3, 2)]:
        assert lr_coeff_tableaux(P([m]), P([k]), P([m + k])) == 1
    assert lr_coeff_tableaux(P([2, 1]), P([2, 1]), P([3, 2, 1])) == 2
    # shape not containing lam
    assert lr_coeff_tableaux(P([3]), P([1]), P([2, 2])) == 0
    with pytest.raises(DomainError):
        lr_coeff_tableaux(P([2]), P([1]), P([4]))


def test_lr_characters_small():
    assert lr_coeff_characters(P([1]), P([1]), P([2])) == 1
    assert lr_coeff_characters(P([1]), P([1]), P([1, 1])) == 1
    assert lr_coeff_characters(P([2, 1]), P([2, 1]), P([3, 2, 1])) == 2
    with pytest.raises(DomainError):
        lr_coeff_characters(P([2]), P([2]), P([3]))


def test_lr_cross_algorithm():
    for n in range(7):
        for nu in partitions_of(n):
            for l in range(n + 1):
                for lam in partitions_of(l):
                    for mu in partitions_of(n - l):
                        assert lr_coeff_tableaux(lam, mu, nu) == lr_coeff_characters(lam, mu, nu)


def test_lr_dimension_bookkeeping():
    for l in range(5):
        for m in range(5):
            for lam in partitions_of(l):
                for mu in partitions_of(m):
                    total = sum(
                        lr_coeff_tableaux(lam, mu, nu) * specht_dim(nu)
                        for nu in partitions_of(l + m)
                    )
                    assert total == comb(l + m, l) * specht_dim(lam) * specht_dim(mu)


def test_max_level_constituent_exists():
    # whenever the level budget fits in n/2, a maximal-level constituent appears
    for n in range(2, 11):
        t = character_table(n)
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                target = level(lam) + level(mu)
                if 2 * target > n:
                    continue
                dec = kronecker_decompose(lam, mu, t)
                assert max_level_constituent(dec) == target


def test_verify_murnaghan_littlewood_small():
    rep = verify_murnaghan_littlewood(2)
    assert rep.passed and rep.instances_checked > 0
    rep = verify_murnaghan_littlewood(3)
    assert rep.passed
    rep = verify_murnaghan_littlewood(4)
    assert rep.passed
    assert rep.parameters == {"n": 4, "p": 0}
    assert rep.to_dict(include_timing=False)["status"] == "pass"
    with pytest.raises(SizeLimitError):
        verify_murnaghan_littlewood(11)


def test_murnaghan_littlewood_example_instance():
    lam = mu = P([3, 1])
    nu = P([2, 2])
    assert level(nu) == level(lam) + level(mu)
    assert kronecker_coeff(lam, mu, nu) == 1
    assert lr_coeff_tableaux(bar(lam), bar(mu), bar(nu)) == 1
