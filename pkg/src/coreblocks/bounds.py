"""The weight of r-tuples of subsets of {1..e}, the constant N(r, e) and its bounds.

N(r, e) is the largest tuple weight of r subsets of {1..e}. Writing the tuple as
an e x r incidence matrix (rows = elements, columns = subsets),

    weight = sum_{j<k} min(|E_j|, |E_k|) - sum_rows C(row popcount, 2),

so the maximum can be found exactly by a dynamic programme that adds one row at
a time and only remembers the multiset of column sums. The literal multiset
enumeration is kept as a small-case cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product
from math import comb
from typing import Mapping

import numpy as np

from .blocks import BlockVector, alpha, block_of_partition, block_weight, is_block
from .config import DEFAULT_LIMITS, Limits
from .errors import DomainError, ResourceLimitError
from .multipartition import SubsetTuple, pair_weight, tuple_weight
from .partition_core import Partition

__all__ = [
    "SubsetTuple", "pair_weight", "tuple_weight", "N_prime", "N_bounds", "N_closed_form",
    "N_exact", "maximise_weight", "Q_bound", "q_form", "q_form_k", "pair_matrix",
    "SpectrumReport", "spectrum", "verify_spectrum", "superadditivity_check",
    "superlevel_inclusion_check", "superlevel_counterexample_e0", "idealbound_shift_check",
    "idealbound_antishift_check",
]


def N_prime(r: int, e: int) -> int:
    return r * r * (e * e // 4) // (2 * e)


def N_bounds(r: int, e: int):
    if r < 2 or e < 2:
        raise DomainError("bounds need r, e >= 2")
    lower = (e // 2) * (r * r // 4)
    upper = N_prime(r, e)
    if r >= 3:
        upper = min(upper, (r - 1) * r * e // 6)
    return lower, upper


def N_closed_form(r: int, e: int):
    if r < 2 or e < 1:
        raise DomainError("needs r >= 2, e >= 1")
    if e == 1:
        return 0
    if r == 2:
        return e // 2
    if r == 3:
        return e
    if r == 4:
        return 2 * e if e % 2 == 0 else 2 * e - 1
    table = {
        2: r * r // 4,
        3: r * r // 3,
        4: r * r // 2,
        5: 3 * r * r // 5,
        6: 3 * (r * r // 4),
    }
    if e in table:
        return table[e]
    if r % 2 == 0 and e % 2 == 0:
        return e * r * r // 8
    return None


# ---------------------------------------------------------------------------
# exact maximisation

def _replay(r, e, layers, final):
    """Rebuild an actual tuple of subsets from the parent pointers of the DP."""
    steps = []
    state = final
    for parents in reversed(layers):
        prev, ones = parents[state]
        steps.append((prev, ones))
        state = prev
    steps.reverse()
    labels = list(range(r))
    sets = [0] * r
    for row, (prev, ones) in enumerate(steps):
        sums = list(prev)
        pos = 0
        for (v, c), m in zip(_groups(prev), ones):
            for p in range(pos + c - m, pos + c):
                sets[labels[p]] |= 1 << row
                sums[p] += 1
            pos += c
        order = sorted(range(r), key=lambda p: sums[p])
        labels = [labels[p] for p in order]
    return SubsetTuple(e, tuple(sets))


def _groups(state):
    out = []
    for v in state:
        if out and out[-1][0] == v:
            out[-1][1] += 1
        else:
            out.append([v, 1])
    return [tuple(g) for g in out]


def _row_dp(r: int, e: int, k: int | None = None):
    """min over e x r 0/1 matrices of sum_rows C(popcount, 2), per multiset of column sums.

    With k given, columns are capped at k and only states that can still reach
    all-k are kept. Returns (costs of final states, parent layers).
    """
    start = (0,) * r
    cur = {start: 0}
    layers = []
    for row in range(e):
        remaining = e - row - 1
        nxt, parents = {}, {}
        for state, cost in cur.items():
            groups = _groups(state)
            for ones in product(*(range(c + 1) for _, c in groups)):
                new = []
                for (v, c), m in zip(groups, ones):
                    new += [v] * (c - m) + [v + 1] * m
                new.sort()
                if k is not None and (new[-1] > k or new[0] + remaining < k):
                    continue
                t = tuple(new)
                n1 = sum(ones)
                val = cost + n1 * (n1 - 1) // 2
                if t not in nxt or val < nxt[t]:
                    nxt[t] = val
                    parents[t] = (state, ones)
        cur = nxt
        layers.append(parents)
    return cur, layers


def _pairs_min(state):
    # sum_{j<k} min(k_j, k_k) for ascending column sums
    r = len(state)
    return sum(v * (r - 1 - j) for j, v in enumerate(state))


def _check_guard(r, e, strategy, limits):
    if strategy == "full":
        ok = e <= limits.full_max_e and r <= limits.full_max_r
    elif strategy == "equal_size":
        ok = e <= limits.equal_max_e and r <= limits.equal_max_r
    else:
        ok = e <= limits.enum_max_e and r <= limits.enum_max_r
    if not ok:
        raise ResourceLimitError(f"N({r},{e}) with strategy {strategy!r} exceeds the configured limits")


def _max_equal_k(r, e, k):
    if r == 0:
        return 0, SubsetTuple(e, ())
    costs, layers = _row_dp(r, e, k)
    final = (k,) * r
    val = comb(r, 2) * k - costs[final]
    return val, _replay(r, e, layers, final)


def _max_enumerate(r, e):
    masks = range(1 << e)
    A = [[pair_weight(E, F) for F in masks] for E in masks]
    best, arg = -1, None
    for combo in combinations_with_replacement(masks, r):
        w = 0
        for a, b in combinations(combo, 2):
            w += A[a][b]
        if w > best:
            best, arg = w, combo
    return best, SubsetTuple(e, arg)


def maximise_weight(r: int, e: int, strategy: str = "equal_size", limits: Limits = DEFAULT_LIMITS):
    """(N(r, e), a tuple of subsets achieving it).

    strategy 'full': all subsets; 'equal_size': subsets of one common size k <= e/2;
    'enumerate': literal multiset enumeration in non-decreasing mask order.
    """
    if r < 1 or e < 1:
        raise DomainError("needs r, e >= 1")
    _check_guard(r, e, strategy, limits)
    if strategy == "enumerate":
        return _max_enumerate(r, e)
    if strategy == "full":
        costs, layers = _row_dp(r, e)
        best, arg = None, None
        for state in sorted(costs):
            v = _pairs_min(state) - costs[state]
            if best is None or v > best:
                best, arg = v, state
        return best, _replay(r, e, layers, arg)
    if strategy != "equal_size":
        raise DomainError(f"unknown strategy {strategy!r}")
    best, wit = 0, SubsetTuple(e, (0,) * r)
    for k in range(e // 2, 0, -1):
        # spectral bound q_{e,k} <= r^2 k (e-k) / 2e
        if r * r * k * (e - k) // (2 * e) <= best:
            continue
        v, t = _max_equal_k(r, e, k)
        if v > best:
            best, wit = v, t
    return best, wit


def N_exact(r: int, e: int, strategy: str = "equal_size", limits: Limits = DEFAULT_LIMITS) -> int:
    if r < 2:
        raise DomainError("N(r, e) needs r >= 2")
    return maximise_weight(r, e, strategy, limits)[0]


def Q_bound(r: int, e: int, limits: Limits = DEFAULT_LIMITS):
    """Maximum restricted to subsets of size floor(e/2); returns (value, witness)."""
    if e < 2:
        raise DomainError("needs e >= 2")
    if r <= 1:
        return 0, SubsetTuple(e, (0,) * r)
    return _max_equal_k(r, e, e // 2)


# ---------------------------------------------------------------------------
# quadratic forms and spectra

def q_form(x: Mapping[int, int], e: int | None = None) -> int:
    """1/2 x^T A x with A_{E,F} = pair_weight(E, F); x maps bitmask -> count."""
    items = [(m, c) for m, c in x.items() if c]
    if any(c < 0 for _, c in items):
        raise DomainError("counts must be non-negative")
    total = 0
    for (E, a), (F, b) in combinations(items, 2):
        total += pair_weight(E, F, e) * a * b
    return total


def q_form_k(x: Mapping[int, int], e: int, k: int) -> int:
    if any(c and m.bit_count() != k for m, c in x.items()):
        raise DomainError(f"all subsets must have size {k}")
    return q_form(x, e)


def pair_matrix(e: int, k: int | None = None):
    """(masks, A) for all subsets of {1..e}, or only the k-subsets."""
    masks = [m for m in range(1 << e) if k is None or m.bit_count() == k]
    A = np.array([[pair_weight(E, F) for F in masks] for E in masks], dtype=np.int64)
    return masks, A


@dataclass(frozen=True)
class SpectrumReport:
    e: int
    k: int
    eigen: tuple  # ((value, multiplicity), ...)
    checks: dict = field(default_factory=dict, compare=False)

    def as_dict(self):
        return {v: m for v, m in self.eigen}


def _check_k(e, k):
    if not 1 <= k <= e - 1:
        raise DomainError(f"k must satisfy 1 <= k <= e-1, got k={k}, e={e}")


def spectrum(e: int, k: int) -> SpectrumReport:
    _check_k(e, k)
    top = k * comb(e - 1, k)
    neg = -comb(e - 2, k - 1)
    eig = [(top, 1), (0, comb(e, k) - e), (neg, e - 1)]
    return SpectrumReport(e, k, tuple((v, m) for v, m in eig if m))


def verify_spectrum(e: int, k: int) -> bool:
    """Exact integer checks that A_{e,k} has the closed-form spectrum.

    A 1 = top 1, trace A = 0, A^2 + C(e-2,k-1) A is a multiple of J (so A acts
    as -C(e-2,k-1) on the complement of 1 up to its kernel), and trace A^2
    matches sum lambda^2 mult. Together with the multiplicities summing to
    C(e,k) these pin down the spectrum.
    """
    rep = spectrum(e, k)
    _, A = pair_matrix(e, k)
    n = A.shape[0]
    top = k * comb(e - 1, k)
    c = comb(e - 2, k - 1)
    ones = np.ones(n, dtype=np.int64)
    A2 = A @ A
    M = A2 + c * A
    checks = {
        "eigenvector_one": bool(np.array_equal(A @ ones, top * ones)),
        "trace_zero": int(np.trace(A)) == 0,
        "annihilating": bool((M == M[0, 0]).all()),
        "trace_square": int(np.trace(A2)) == sum(v * v * m for v, m in rep.eigen),
        "multiplicities": sum(m for _, m in rep.eigen) == n,
        "trace_sum": sum(v * m for v, m in rep.eigen) == 0,
    }
    rep.checks.update(checks)
    return all(checks.values())


# ---------------------------------------------------------------------------
# table-level checks

def superadditivity_check(r: int, e_max: int, table: Mapping | None = None, limits: Limits = DEFAULT_LIMITS) -> bool:
    """N(r, e + f) >= N(r, e) + N(r, f) for all e + f <= e_max."""
    def N(e):
        if table is not None and (r, e) in table:
            return table[(r, e)]
        if e == 1 or r < 2:
            return 0
        return N_exact(r, e, limits=limits)

    vals = {e: N(e) for e in range(1, e_max + 1)}
    return all(vals[a + b] >= vals[a] + vals[b] for a in range(1, e_max) for b in range(1, e_max - a + 1))


@dataclass
class CheckResult:
    passed: bool
    checked: int = 0
    counterexample: object = None
    detail: str = ""


def superlevel_inclusion_check(r: int, e: int, S, coeff_bound: int, N: int | None = None,
                    limits: Limits = DEFAULT_LIMITS) -> CheckResult:
    """Every alpha with coefficients in [-B, B] and w(alpha) > N(r,e) - r is a block."""
    S = tuple(S)
    if len(S) != r:
        raise DomainError("multicharge length must be r")
    if e < 1:
        raise DomainError("the superlevel inclusion is stated for e >= 1")
    if N is None:
        N = N_exact(r, e, limits=limits) if e > 1 else 0
    checked = 0
    for coeffs in product(range(-coeff_bound, coeff_bound + 1), repeat=e):
        a = BlockVector(e, coeffs)
        if block_weight(a, S) > N - r:
            checked += 1
            if not is_block(a, S, limits=limits):
                return CheckResult(False, checked, a, f"w={block_weight(a, S)} > {N - r}")
    return CheckResult(True, checked)


def superlevel_counterexample_e0(h: int, s: int = 0):
    """e = 0, S = (0, s): alpha = alpha^0((h^h)) + alpha_{h+s+1}. Returns (alpha, S)."""
    if h < 1 or s < 0:
        raise DomainError("needs h >= 1, s >= 0")
    lam = Partition((h,) * h)
    a = block_of_partition(lam, 0, 0) + alpha(h + s + 1, 0)
    return a, (0, s)


def idealbound_shift_check(r: int, e: int, limits: Limits = DEFAULT_LIMITS):
    """If Q(r,e) = N'(r,e) then Q(r + C(e,k), e) = N'(r + C(e,k), e), k = floor(e/2).

    Returns None when the hypothesis fails, else whether the conclusion holds."""
    k = e // 2
    if Q_bound(r, e, limits)[0] != N_prime(r, e):
        return None
    r2 = r + comb(e, k)
    return Q_bound(r2, e, limits)[0] == N_prime(r2, e)


def idealbound_antishift_check(r: int, e: int, limits: Limits = DEFAULT_LIMITS):
    """Complement of a 0/1 optimum: if x in {0,1}^{P_{e,k}} has |x| = r and q(x) = N'(r,e),
    then its complement reaches N'(C(e,k) - r, e). Returns None when no such x exists."""
    k = e // 2
    masks = [m for m in range(1 << e) if m.bit_count() == k]
    target = N_prime(r, e)
    for chosen in combinations(masks, r):
        x = dict.fromkeys(chosen, 1)
        if q_form(x, e) == target:
            rest = {m: 1 for m in masks if m not in x}
            r2 = len(masks) - r
            return q_form(rest, e) == N_prime(r2, e) == Q_bound(r2, e, limits)[0]
    return None
