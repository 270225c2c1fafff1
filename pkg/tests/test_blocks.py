import json

import pytest
from hypothesis import given, strategies as st

from coreblocks.abacus import e_core, is_core, y_vector
from coreblocks.blocks import (
    BlockVector,
    alpha,
    block_of_partition,
    block_weight,
    const_one,
    core_partition_of_block,
    deparametrise,
    enumerate_blocks,
    is_block,
    is_core_block,
    is_level_one_block,
    level_one_blocks,
    parametrise,
    parse_block,
    partition_in_block,
    s_core_of_block,
    zero,
)
from coreblocks.bounds import superlevel_counterexample_e0
from coreblocks.config import Limits
from coreblocks.errors import DomainError, ParseError, ResourceLimitError
from coreblocks.partition_core import EMPTY, Partition, partitions, partitions_upto
from strategies import block_st

LAM = Partition((4, 3, 3, 1))
A0, A1 = alpha(0, 2), alpha(1, 2)


def test_literals_and_json():
    a = parse_block("3,5,3", 3)
    assert a == BlockVector(3, (3, 5, 3)) and str(a) == "3,5,3"
    assert a.pretty() == "3α0+5α1+3α2"
    b = parse_block("-1:2,3:1", 0)
    assert b[-1] == 2 and b[3] == 1 and b[0] == 0 and str(b) == "-1:2,3:1"
    assert str(zero(0)) == "0" and parse_block("0", 0) == zero(0)
    for v in (a, b, zero(0)):
        assert BlockVector.from_json(json.dumps(v.to_json())) == v
        assert parse_block(json.dumps(v.to_json()), v.e) == v
    for bad, e in (("1,x", 2), ("1,2", 3), ("1-2", 0), ('{"e": 2, "coeffs": [1, 1]}', 3)):
        with pytest.raises((ParseError, DomainError)):
            parse_block(bad, e)


def test_const_one():
    assert const_one(3) == BlockVector(3, (1, 1, 1))
    assert const_one(0) == zero(0)
    assert const_one(5).size == 5


def test_block_weight_examples():
    assert block_weight(zero(3), (0,)) == 0
    assert block_weight(2 * A0, (0,)) == -2
    a, S = superlevel_counterexample_e0(3, 0)
    assert block_weight(a, S) == 2


def test_block_of_partition_examples():
    assert block_of_partition(EMPTY, 0, 3) == zero(3)
    assert block_of_partition(LAM, 1, 3) == BlockVector(3, (3, 5, 3))
    assert block_of_partition(Partition((2,)), 0, 2) == A0 + A1


def test_level_one_examples():
    assert is_level_one_block(A0 + A1, 0)
    assert not is_level_one_block(2 * A0, 0)
    assert is_level_one_block(2 * A0 + 2 * const_one(2), 0)
    assert block_weight(2 * A0 + 2 * const_one(2), (0,)) == 0


def test_core_partition_examples():
    core = core_partition_of_block(4 * A0 + 2 * A1, 0)
    assert y_vector(core, 0, 2) == (2, -2)
    assert core_partition_of_block(alpha(0, 3), 0) == Partition((1,))
    for lam in partitions_upto(15):
        for e in (2, 3, 4):
            assert core_partition_of_block(block_of_partition(lam, 0, e), 0) == e_core(lam, e)


def test_parametrise_examples():
    assert deparametrise((0, 0), 0, 0, 2) == zero(2)
    assert deparametrise((2, -2), 0, 0, 2) == 4 * A0 + 2 * A1
    assert parametrise(4 * A0 + 2 * A1, 0) == ((2, -2), 0)
    for lam in partitions_upto(12):
        for e in (2, 3, 4):
            for s in (0, 1):
                a = block_of_partition(lam, s, e)
                y, w = parametrise(a, s)
                assert deparametrise(y, w, s, e) == a and w == block_weight(a, (s,))


def test_partition_in_block():
    for lam in partitions_upto(10):
        for e in (2, 3):
            a = block_of_partition(lam, 1, e)
            assert block_of_partition(partition_in_block(a, 1), 1, e) == a


def test_is_block_examples():
    S = (0, 1)
    assert is_block(A0 + A1, S)
    assert is_block(A0 + A1 - const_one(2), S)
    assert not is_block(-1 * A0, S)


def test_s_core_examples():
    a = block_of_partition(LAM, 1, 3)
    assert s_core_of_block(a, (1,)) == (block_of_partition(Partition((4, 2, 1, 1)), 1, 3), 1)
    core, h = s_core_of_block(a, (1,))
    assert s_core_of_block(core, (1,)) == (core, 0)
    # alpha0+alpha1 itself is not a core block (alpha0+alpha1-1 = 0 is a block), so h = 3
    assert s_core_of_block(A0 + A1 + 2 * const_one(2), (0, 1)) == (zero(2), 3)


def test_core_block_examples():
    assert not is_core_block(A0 + A1, (0, 1))
    for lam in partitions_upto(12):
        for e in (2, 3):
            assert is_core_block(block_of_partition(lam, 0, e), (0,)) == is_core(lam, e)
    # e = 1: only 0
    for n in range(6):
        a = BlockVector(1, (n,))
        assert is_core_block(a, (0, 0)) == (n == 0)


def test_enumerate_examples():
    assert enumerate_blocks((0,), 3, 0) == {zero(3)}
    assert enumerate_blocks((0,), 2, 2) == {A0 + A1}
    assert A0 + A1 in enumerate_blocks((0, 1), 2, 2)
    with pytest.raises(ResourceLimitError):
        enumerate_blocks((0,), 2, 5, limits=Limits(max_enum_n=4))


def test_level_one_blocks_generator():
    for e in (2, 3, 4):
        for s in (0, 2):
            got = set(level_one_blocks(s, e, 9))
            want = set()
            for n in range(10):
                want |= enumerate_blocks((s,), e, n)
            assert got == want


def test_same_block_same_core():
    for n in range(13):
        for e in (2, 3, 4):
            seen = {}
            for lam in partitions(n):
                a = block_of_partition(lam, 0, e)
                assert seen.setdefault(a, e_core(lam, e)) == e_core(lam, e)


def test_dp_matches_enumeration():
    for S, e in (((0, 0), 2), ((0, 1), 3), ((0, 2), 4), ((0, 0, 1), 3)):
        for n in range(7):
            enum = enumerate_blocks(S, e, n)
            for a in enum:
                assert is_block(a, S)
            for b in enumerate_blocks((0,), e, n) | {n * alpha(0, e)}:
                assert is_block(b, S) == (b in enum)


def test_e0_membership():
    a, S = superlevel_counterexample_e0(2, 0)
    assert not is_block(a, S)
    assert is_block(block_of_partition(Partition((2, 1)), 0, 0) + block_of_partition(Partition((1,)), 3, 0), (0, 3))
    assert is_core_block(alpha(0, 0), (0,))


def test_block_size_guard():
    with pytest.raises(ResourceLimitError):
        is_block(BlockVector(2, (40, 40)), (0, 1), limits=Limits(max_block_size=64))


@given(block_st(3), st.integers(-3, 3), st.sampled_from([(0,), (0, 1), (0, 1, 2)]))
def test_weight_plus_constant(a, h, S):
    assert block_weight(a + h * const_one(3), S) == block_weight(a, S) + len(S) * h


@given(block_st(4, -3, 3), st.sampled_from([(0,), (1,), (0, 2)]))
def test_s_core_idempotent(a, S):
    if not is_block(a, S):
        return
    core, h = s_core_of_block(a, S)
    assert h >= 0 and core + h * const_one(4) == a
    assert is_core_block(core, S)
    assert s_core_of_block(core, S) == (core, 0)


def test_core_blocks_one_per_class():
    # in a window, each class modulo 1 holds at most one core block
    S, e = (0, 1), 2
    seen = {}
    for c0 in range(-3, 8):
        for c1 in range(-3, 8):
            a = BlockVector(e, (c0, c1))
            if is_core_block(a, S):
                key = c0 - c1
                assert key not in seen
                seen[key] = a
    assert seen
