import pytest
from hypothesis import given, strategies as st

from coreblocks.errors import DomainError, ParseError
from coreblocks.partition_core import (
    EMPTY,
    Partition,
    add_rim_hook_results,
    charge_weight,
    check_int64,
    parse_partition,
    partitions,
    removable_rim_hooks,
    residue,
    residue_counts,
    rim_hook_nodes,
)
from strategies import charge_st, modulus_st, partition_st

LAM = Partition((4, 3, 3, 1))


def test_partition_invariants():
    assert LAM.size == 11 and LAM.height == 4
    assert EMPTY.size == 0 and EMPTY.height == 0
    with pytest.raises(DomainError):
        Partition((1, 2))
    with pytest.raises(DomainError):
        Partition((2, 0))


def test_parse_and_print():
    assert parse_partition("4,3,3,1") == LAM
    assert parse_partition("-") == EMPTY
    assert str(LAM) == "4,3,3,1" and str(EMPTY) == "-"
    for bad in ("4,x", "1,2", "3,,1"):
        with pytest.raises(ParseError):
            parse_partition(bad)


def test_overflow_rejected():
    with pytest.raises(OverflowError):
        Partition((2 ** 63,))
    with pytest.raises(OverflowError):
        check_int64(-(2 ** 63) - 1)
    assert check_int64(2 ** 63 - 1) == 2 ** 63 - 1


def test_partition_counts():
    assert [sum(1 for _ in partitions(n)) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert list(partitions(3)) == [Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))]


def test_residue_examples():
    assert residue((1, 1), 0, 3) == 0
    assert residue((2, 1), 1, 3) == 0
    assert residue((1, 4), 0, 0) == 3
    with pytest.raises(DomainError):
        residue((0, 1), 0, 3)


def test_residue_counts_examples():
    assert residue_counts(EMPTY, 2, 3) == {0: 0, 1: 0, 2: 0}
    # node-by-node count of the 11 nodes; weight 5 - (4 + 4 + 0)/2 = 1
    assert residue_counts(LAM, 1, 3) == {0: 3, 1: 5, 2: 3}
    assert residue_counts(Partition((1,)), 0, 2) == {0: 1, 1: 0}
    assert residue_counts(Partition((2, 1)), 0, 0) == {0: 1, 1: 1, -1: 1}


def test_rim_hook_examples():
    lam = Partition((3, 2, 2, 1))
    assert removable_rim_hooks(lam, 5) == []
    hooks = dict(removable_rim_hooks(lam, 3))
    assert hooks[(3, 1)] == Partition((3, 2))
    assert removable_rim_hooks(Partition((1,)), 1) == [((1, 1), EMPTY)]


def test_add_rim_hook_examples():
    assert set(add_rim_hook_results(EMPTY, 2)) == {Partition((2,)), Partition((1, 1))}
    assert set(add_rim_hook_results(EMPTY, 3)) == {Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))}
    assert set(add_rim_hook_results(Partition((1,)), 2)) == {Partition((3,)), Partition((1, 1, 1))}


def test_charge_weight_examples():
    assert charge_weight(EMPTY, 0, 3) == 0
    assert charge_weight(LAM, 1, 3) == 1
    assert charge_weight(Partition((3, 2, 2, 1)), 0, 5) == 0


def _hook_residues_ok(lam, l, s):
    for node, mu in removable_rim_hooks(lam, l):
        nodes = rim_hook_nodes(lam, node)
        if set(lam.nodes()) - set(mu.nodes()) != nodes:
            return False
        if sorted(residue(x, s, l) for x in nodes) != list(range(l)):
            return False
    return True


def test_rim_hooks_exhaustive():
    # beta-move hooks agree with the geometric rim hook and carry one node of each residue
    for n in range(13):
        for lam in partitions(n):
            for l in range(1, 6):
                assert _hook_residues_ok(lam, l, 1), (lam, l)
                for node, mu in removable_rim_hooks(lam, l):
                    assert lam in add_rim_hook_results(mu, l)


@given(partition_st(), modulus_st, charge_st, charge_st)
def test_charge_weight_charge_independent(lam, e, s, t):
    assert charge_weight(lam, s, e) == charge_weight(lam, t, e)


@given(partition_st(), st.integers(1, 6))
def test_add_then_remove(lam, l):
    for mu in add_rim_hook_results(lam, l):
        assert lam in [nu for _, nu in removable_rim_hooks(mu, l)]
        assert mu.size == lam.size + l


@given(partition_st())
def test_conjugate_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


def test_e0_weight_zero():
    for lam in partitions(8):
        for s in (-1, 0, 2):
            assert charge_weight(lam, s, 0) == 0
