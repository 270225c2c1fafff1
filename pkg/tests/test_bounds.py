import random
from itertools import combinations_with_replacement
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from coreblocks.bounds import (
    N_bounds,
    N_closed_form,
    N_exact,
    N_prime,
    Q_bound,
    idealbound_antishift_check,
    idealbound_shift_check,
    maximise_weight,
    pair_matrix,
    pair_weight,
    q_form,
    q_form_k,
    spectrum,
    superadditivity_check,
    superlevel_inclusion_check,
    tuple_weight,
    verify_spectrum,
)
from coreblocks.config import Limits
from coreblocks.errors import DomainError, ResourceLimitError
from coreblocks.multipartition import SubsetTuple

PENTAGON = SubsetTuple.from_sets(5, [{1, 2}, {1, 3}, {3, 5}, {4, 5}, {2, 4}])
FOUR = SubsetTuple.from_sets(5, [{1, 3}, {2, 4}, {1, 5}, {2, 5}])


def brute_N(r, e):
    """Independent oracle: max over multisets of r subsets, straight from the definition."""
    return max(tuple_weight(SubsetTuple(e, T)) for T in combinations_with_replacement(range(1 << e), r))


def test_pair_weight_examples():
    full = 0b1111
    for E in range(16):
        assert pair_weight(E, E) == 0 and pair_weight(E, 0) == 0 and pair_weight(E, full) == 0
    assert pair_weight(0b01, 0b10, 2) == 1
    with pytest.raises(DomainError):
        pair_weight(0b100, 0b1, 2)


@given(st.integers(1, 8).flatmap(lambda e: st.tuples(st.just(e), st.integers(0, (1 << e) - 1), st.integers(0, (1 << e) - 1))))
def test_pair_weight_complement(args):
    e, E, F = args
    full = (1 << e) - 1
    assert pair_weight(E, F) == pair_weight(E ^ full, F ^ full) == pair_weight(F, E)


def test_tuple_weight_examples():
    assert tuple_weight(PENTAGON) == 15
    assert tuple_weight(FOUR) == 9
    assert tuple_weight(SubsetTuple.from_sets(3, [{1}, {2}, {3}])) == 3
    assert str(FOUR) == "{1,3} {2,4} {1,5} {2,5}"


def test_N_against_brute_force():
    for e in range(1, 5):
        for r in range(2, 5):
            b = brute_N(r, e)
            assert N_exact(r, e, "full") == b
            assert N_exact(r, e, "equal_size") == b
            assert N_exact(r, e, "enumerate") == b


def test_N_examples():
    for e in range(1, 9):
        assert N_exact(2, e) == e // 2
    for r in range(2, 8):
        assert N_exact(r, 2) == r * r // 4
    assert N_exact(5, 5) == 15


def test_witness_achieves_value():
    for r, e in ((5, 5), (4, 6), (3, 7), (6, 4)):
        for strategy in ("full", "equal_size"):
            if strategy == "full" and e > 6:
                continue
            v, T = maximise_weight(r, e, strategy)
            assert T.r == r and tuple_weight(T) == v


def test_closed_form_examples():
    assert N_closed_form(3, 11) == 11
    assert N_closed_form(4, 5) == 9
    assert N_closed_form(6, 6) == 27
    assert N_closed_form(5, 7) is None


def test_closed_form_matches_exact():
    for r in range(2, 7):
        for e in range(1, 9):
            cf = N_closed_form(r, e)
            if cf is not None:
                assert cf == N_exact(r, e), (r, e)


def test_bounds_examples():
    assert N_bounds(2, 5) == (2, 2)
    for e in (2, 4, 6, 8):
        assert N_bounds(4, e) == (2 * e, 2 * e)
    lo, hi = N_bounds(3, 8)
    assert (lo, hi) == (8, 8) and N_prime(3, 8) == 9
    assert lo <= N_exact(3, 8) <= hi


def test_guards():
    with pytest.raises(ResourceLimitError):
        N_exact(7, 7, "full")
    with pytest.raises(ResourceLimitError):
        N_exact(9, 5)
    with pytest.raises(ResourceLimitError):
        N_exact(3, 6, "enumerate")
    assert N_exact(7, 7, "full", Limits(full_max_e=7, full_max_r=7)) == N_exact(7, 7)
    with pytest.raises(DomainError):
        N_exact(3, 4, "bogus")


def test_q_form_examples():
    assert q_form({0b011: 5}) == 0
    for e in range(2, 7):
        for k in range(1, e):
            x = {m: 1 for m in range(1 << e) if m.bit_count() == k}
            assert 2 * q_form_k(x, e, k) == k * comb(e - 1, k) * comb(e, k)
    with pytest.raises(DomainError):
        q_form_k({0b1: 1, 0b11: 1}, 2, 1)


@given(st.integers(2, 5), st.lists(st.integers(0, 31), min_size=1, max_size=6))
def test_q_form_expansion(e, masks):
    masks = [m % (1 << e) for m in masks]
    x = {}
    for m in masks:
        x[m] = x.get(m, 0) + 1
    assert q_form(x, e) == tuple_weight(SubsetTuple(e, tuple(masks)))


def test_q_form_spectral_bound():
    rng = random.Random(0)
    for e in range(2, 8):
        for k in range(1, e):
            masks = [m for m in range(1 << e) if m.bit_count() == k]
            for _ in range(50):
                x = {m: rng.randint(0, 3) for m in rng.sample(masks, min(len(masks), 4))}
                n1 = sum(x.values())
                assert 2 * e * q_form_k(x, e, k) <= n1 * n1 * k * (e - k)


def test_spectrum_examples():
    assert spectrum(4, 2).as_dict() == {6: 1, 0: 2, -2: 3}
    for e in range(2, 9):
        assert spectrum(e, 1).as_dict() == {e - 1: 1, -1: e - 1}
    with pytest.raises(DomainError):
        spectrum(4, 4)


def test_spectrum_all():
    for e in range(2, 9):
        for k in range(1, e):
            assert verify_spectrum(e, k)
            rep = spectrum(e, k)
            assert sum(m for _, m in rep.eigen) == comb(e, k)
            assert sum(v * m for v, m in rep.eigen) == 0


def test_spectrum_numeric_crosscheck():
    # float eigenvalues only as an independent sanity check of the exact identities
    for e, k in ((4, 2), (5, 2), (6, 3)):
        _, A = pair_matrix(e, k)
        got = sorted(np.round(np.linalg.eigvalsh(A.astype(float))).astype(int).tolist())
        want = sorted(v for v, m in spectrum(e, k).eigen for _ in range(m))
        assert got == want


def test_superadditivity_examples():
    assert superadditivity_check(2, 6)
    assert superadditivity_check(3, 5)
    assert superadditivity_check(1, 6)


def test_superlevel_inclusion_examples():
    assert superlevel_inclusion_check(2, 2, (0, 1), 4).passed
    assert superlevel_inclusion_check(2, 3, (0, 0), 3).passed
    with pytest.raises(DomainError):
        superlevel_inclusion_check(2, 0, (0, 1), 3)


def test_Q_vs_N():
    for r in range(2, 6):
        assert Q_bound(r, 5)[0] == N_exact(r, 5)
    v, T = Q_bound(4, 6)
    assert all(m.bit_count() == 3 for m in T.sets) and tuple_weight(T) == v


def test_ideal_bound_shifts():
    assert idealbound_shift_check(0, 5) is True
    assert idealbound_shift_check(1, 5) is True
    assert idealbound_antishift_check(2, 5) is True
    assert idealbound_antishift_check(3, 5) is True
