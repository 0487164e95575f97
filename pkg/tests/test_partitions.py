import pytest
from oracles import partitions_brute

from symlevel.errors import DomainError, InvalidCharacteristicError, SizeLimitError
from symlevel.partitions import (
    Partition,
    add_node,
    addable_nodes,
    bar,
    conjugate,
    dominates,
    enumerate_partitions,
    is_p_regular,
    level,
    parse_partition,
    partitions_of,
    remove_node,
    removable_nodes,
    residue,
    sum_partitions,
)

P = Partition


def test_construction_validates():
    assert P([3, 1]).parts == (3, 1)
    assert P().n == 0
    with pytest.raises(DomainError):
        P([1, 2])
    with pytest.raises(DomainError):
        P([2, 0])


def test_enumeration_order_and_counts():
    assert [p.parts for p in enumerate_partitions(0)] == [()]
    assert [p.parts for p in enumerate_partitions(4)] == [
        (4,),
        (3, 1),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]
    assert len(enumerate_partitions(10)) == 42  # brute-force count below
    assert len(partitions_brute(10)) == 42


def test_enumeration_matches_brute_force():
    for n in range(12):
        assert sorted(p.parts for p in partitions_of(n)) == sorted(partitions_brute(n))


def test_enumeration_cap():
    with pytest.raises(SizeLimitError):
        enumerate_partitions(61)
    assert len(enumerate_partitions(12, cap=12)) == 77
    with pytest.raises(SizeLimitError):
        enumerate_partitions(13, cap=12)


def test_p_regularity():
    assert not is_p_regular(P([2, 2]), 2)
    assert is_p_regular(P([3, 2, 1]), 2)
    assert not is_p_regular(P([4, 1, 1, 1]), 3)
    assert is_p_regular(P([4, 1, 1]), 3)
    assert is_p_regular(P([2, 2]), 0)
    with pytest.raises(InvalidCharacteristicError):
        is_p_regular(P([2, 1]), 1)


def test_level_and_bar():
    assert level(P([7])) == 0
    assert level(P([5, 2, 1])) == 3
    assert level(P([1, 1, 1, 1])) == 3
    assert level(P()) == 0
    assert bar(P([5, 2, 1])) == P([2, 1])
    assert bar(P([7])) == P()
    assert bar(P([3, 3, 2])) == P([3, 2])


def test_level_bar_relations_small():
    for n in range(16):
        for lam in partitions_of(n):
            assert bar(lam).n == level(lam)
            assert level(lam) + lam.part(1) == n


def test_conjugate():
    assert conjugate(P([3, 1])) == P([2, 1, 1])
    assert conjugate(P([6])) == P([1] * 6)
    assert conjugate(P()) == P()
    for n in range(16):
        for lam in partitions_of(n):
            assert conjugate(conjugate(lam)) == lam


def test_sum_partitions():
    assert sum_partitions(P([2, 1]), P([1, 1])) == P([3, 2])
    assert sum_partitions(P([3]), P()) == P([3])
    assert sum_partitions(P([2, 2]), P([2, 1, 1])) == P([4, 3, 1])


def test_dominance():
    assert dominates(P([4]), P([2, 2]))
    assert not dominates(P([2, 2]), P([3, 1]))
    assert dominates(P([3, 1]), P([3, 1]))
    with pytest.raises(DomainError):
        dominates(P([3]), P([2]))


def test_dominance_is_partial_order():
    for n in range(11):
        lams = partitions_of(n)
        for a in lams:
            assert dominates(a, a)
            for b in lams:
                if dominates(a, b) and dominates(b, a):
                    assert a == b
                for c in lams:
                    if dominates(a, b) and dominates(b, c):
                        assert dominates(a, c)


def test_residue():
    assert residue((1, 1), 3) == 0
    assert residue((3, 1), 2) == 0  # 1 - 3 = -2 = 0 mod 2
    assert residue((1, 4), 0) == 3
    with pytest.raises(InvalidCharacteristicError):
        residue((1, 1), 1)


def test_removable_addable_nodes():
    assert removable_nodes(P([3, 1])) == [(2, 1), (1, 3)]
    assert removable_nodes(P([6])) == [(1, 6)]
    assert addable_nodes(P([2, 2])) == [(3, 1), (1, 3)]
    assert removable_nodes(P()) == []
    assert addable_nodes(P()) == [(1, 1)]


def test_node_counts_and_roundtrip():
    for n in range(13):
        for lam in partitions_of(n):
            rem = removable_nodes(lam)
            assert len(addable_nodes(lam)) == len(rem) + 1
            for node in rem:
                assert add_node(remove_node(lam, node), node) == lam
            # rim order means strictly increasing diagonals
            diags = [c - r for r, c in rem]
            assert diags == sorted(diags)


def test_node_edit_rejects_invalid():
    with pytest.raises(DomainError):
        remove_node(P([3, 1]), (1, 1))
    with pytest.raises(DomainError):
        add_node(P([3, 1]), (3, 2))


def test_literals():
    assert parse_partition("[5,2,1]") == P([5, 2, 1])
    assert parse_partition("5,2,1") == P([5, 2, 1])
    assert parse_partition("[]") == P()
    assert parse_partition("") == P()
    assert P([5, 2, 1]).literal() == "[5,2,1]"
    assert P().literal() == "[]"
    with pytest.raises(DomainError):
        parse_partition("[2,3]")
    with pytest.raises(DomainError):
        parse_partition("abc")
