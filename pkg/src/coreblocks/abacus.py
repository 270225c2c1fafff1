"""Charged beta-numbers, e-abaci, e-cores, e-quotients and the x/y coordinates of cores.

Position p = i + j*e of the beta-set is drawn as a bead at (runner i, level j).
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InvalidBetaError, NotACoreError
from .partition_core import Partition, check_modulus, residue_counts


@dataclass(frozen=True)
class BetaSequence:
    """beta_a = s + lam_a - a. Only the entries before the standard tail are stored."""

    charge: int
    window: tuple = ()

    def __post_init__(self):
        w = tuple(int(b) for b in self.window)
        if any(x <= y for x, y in zip(w, w[1:])):
            raise InvalidBetaError(f"beta-numbers must be strictly decreasing: {w}")
        # canonical window: drop trailing entries that already follow s - a
        while w and w[-1] == self.charge - len(w):
            w = w[:-1]
        if w and w[-1] < self.charge - len(w):
            # would collide with the tail s-(len+1), s-(len+2), ...
            raise InvalidBetaError(f"window {w} runs into the tail for charge {self.charge}")
        object.__setattr__(self, "window", w)

    def head(self, n: int):
        w = self.window
        return list(w[:n]) + [self.charge - a for a in range(len(w) + 1, n + 1)]

    def __contains__(self, x) -> bool:
        return x in self.window or x <= self.charge - len(self.window) - 1

    def __str__(self):
        return "(" + ",".join(map(str, self.head(len(self.window) + 3))) + ",…)"


def beta_number(lam: Partition, s: int) -> BetaSequence:
    return BetaSequence(s, tuple(s + p - a for a, p in enumerate(lam.parts, 1)))


def partition_from_beta(beta) -> tuple:
    """Inverse of beta_number; returns (partition, charge).

    Accepts a BetaSequence, or a finite strictly decreasing prefix whose
    continuation is understood to go down by one at each step.
    """
    if isinstance(beta, BetaSequence):
        s, seq = beta.charge, list(beta.window)
    else:
        seq = [int(b) for b in beta]
        if not seq:
            raise InvalidBetaError("empty beta prefix")
        if any(x <= y for x, y in zip(seq, seq[1:])):
            raise InvalidBetaError(f"beta-numbers must be strictly decreasing: {seq}")
        s = seq[-1] + len(seq)
    parts = [b - s + a for a, b in enumerate(seq, 1)]
    return Partition(tuple(p for p in parts if p > 0)), s


@dataclass(frozen=True)
class AbacusProfile:
    """Charged e-abacus. Every position j < floor is a bead on every runner;
    runners[i] lists the bead positions j >= floor on runner i."""

    e: int
    charge: int
    floor: int
    runners: tuple

    def has_bead(self, i: int, j: int) -> bool:
        return j < self.floor or j in self.runners[i]

    def top(self, i: int) -> int:
        """Highest bead position on runner i."""
        r = self.runners[i]
        return max(r) if r else self.floor - 1

    def gaps(self, i: int | None = None) -> int:
        """Number of in-runner gaps (empty positions below some bead)."""
        if i is None:
            return sum(self.gaps(k) for k in range(self.e))
        return self.top(i) - self.floor + 1 - len(self.runners[i])

    def is_gap_free(self) -> bool:
        return self.gaps() == 0

    def beta_set(self, lo: int):
        """All beta elements >= lo*e (lo <= floor)."""
        assert lo <= self.floor
        out = [i + j * self.e for i in range(self.e) for j in range(lo, self.floor)]
        out += [i + j * self.e for i, r in enumerate(self.runners) for j in r]
        return sorted(out, reverse=True)

    def render(self) -> str:
        lo = min(self.floor, 0) - 1
        hi = max(max(self.top(i) for i in range(self.e)) + 1, 0)
        width = len(str(self.e - 1))
        lines = []
        for i in reversed(range(self.e)):
            cells = []
            for j in range(lo, hi + 1):
                if j == 0:
                    cells.append("|")
                cells.append("O" if self.has_bead(i, j) else "·")
            lines.append(f"{i:>{width}} " + "".join(cells))
        return "\n".join(lines)


def _profile_from_beta(positions, floor, e, s) -> AbacusProfile:
    runners = [[] for _ in range(e)]
    for p in positions:
        j, i = divmod(p, e)
        if j >= floor:
            runners[i].append(j)
    return AbacusProfile(e, s, floor, tuple(tuple(sorted(r)) for r in runners))


def _need_e(e):
    check_modulus(e)
    if e < 1:
        raise DomainError("an e-abacus needs e >= 1")


def abacus_profile(lam: Partition, s: int, e: int) -> AbacusProfile:
    _need_e(e)
    h = lam.height
    floor = (s - h) // e
    # window entries plus the part of the tail sitting at levels >= floor
    pos = [s + p - a for a, p in enumerate(lam.parts, 1)]
    pos += list(range(s - h - 1, floor * e - 1, -1))
    return _profile_from_beta(pos, floor, e, s)


def partition_from_runners(runners, floor, e):
    """Partition and charge of an abacus given by per-runner bead levels >= floor."""
    prof = AbacusProfile(e, 0, floor, tuple(tuple(sorted(r)) for r in runners))
    return partition_from_beta(prof.beta_set(floor - 1))


def is_core(lam: Partition, e: int) -> bool:
    check_modulus(e)
    if e == 0:
        return True
    return abacus_profile(lam, 0, e).is_gap_free()


def e_core(lam: Partition, e: int) -> Partition:
    _need_e(e)
    prof = abacus_profile(lam, 0, e)
    runners = [range(prof.floor, prof.floor + len(r)) for r in prof.runners]
    core, s = partition_from_runners(runners, prof.floor, e)
    assert s == 0
    return core


def e_weight(lam: Partition, e: int) -> int:
    check_modulus(e)
    if e == 0:
        return 0
    prof = abacus_profile(lam, 0, e)
    w = 0
    for r in prof.runners:
        # each bead contributes the number of gaps below it
        for k, j in enumerate(r):
            w += j - prof.floor - k
    return w


@dataclass(frozen=True)
class EQuotient:
    e: int
    charge: int
    parts: tuple

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def size(self):
        return sum(p.size for p in self.parts)

    def __str__(self):
        return "|".join(str(p) for p in self.parts)


def _runner_partition(levels, floor):
    # a runner read as a level-one abacus; its own charge is floor + #beads
    c = floor + len(levels)
    js = sorted(levels, reverse=True)
    return Partition(tuple(p for p in (j - c + a for a, j in enumerate(js, 1)) if p > 0))


def e_quotient(lam: Partition, s: int, e: int) -> EQuotient:
    prof = abacus_profile(lam, s, e)
    return EQuotient(e, s, tuple(_runner_partition(r, prof.floor) for r in prof.runners))


def from_core_and_quotient(core: Partition, q, s: int, e: int) -> Partition:
    _need_e(e)
    quot = tuple(q)
    if len(quot) != e:
        raise DomainError(f"quotient has {len(quot)} components, expected {e}")
    prof = abacus_profile(core, s, e)
    if not prof.is_gap_free():
        raise NotACoreError(f"{core} is not a {e}-core")
    x = [prof.top(i) + 1 for i in range(e)]
    lo = min(x[i] - quot[i].height for i in range(e)) - 1
    runners = []
    for i, mu in enumerate(quot):
        levels = [x[i] + mu.part(a) - a for a in range(1, mu.height + 1)]
        levels += list(range(lo, x[i] - mu.height))
        runners.append(levels)
    lam, charge = partition_from_runners(runners, lo, e)
    assert charge == s
    return lam


def x_empty(s: int, e: int):
    _need_e(e)
    q, sp = divmod(s, e)  # floor division: sp in 0..e-1
    return tuple(q + 1 if i < sp else q for i in range(e))


def x_vector(lam: Partition, s: int, e: int):
    prof = abacus_profile(lam, s, e)
    if not prof.is_gap_free():
        raise NotACoreError(f"{lam} is not a {e}-core")
    # first gap on runner i, i.e. (b_i - i)/e + 1 for the largest bead b_i on it
    return tuple(prof.top(i) + 1 for i in range(e))


def y_vector(lam: Partition, s: int, e: int):
    """tuple of length e for e >= 1; finite-support dict {i: c_i - c_{i+1}} for e = 0."""
    check_modulus(e)
    if e == 0:
        c = residue_counts(lam, s, 0)
        keys = set(c) | {i - 1 for i in c}
        y = {i: c.get(i, 0) - c.get(i + 1, 0) for i in keys}
        return {i: v for i, v in sorted(y.items()) if v}
    x = x_vector(lam, s, e)
    return tuple(a - b for a, b in zip(x, x_empty(s, e)))


def _check_y0(y: dict, s: int):
    for i, v in y.items():
        ok = v in (0, 1) if i >= s else v in (0, -1)
        if not ok:
            raise DomainError(f"y_{i} = {v} out of range for e = 0, s = {s}")
    if sum(y.values()) != 0:
        raise DomainError("y-vector must sum to 0")


def core_from_y(y, s: int, e: int) -> Partition:
    check_modulus(e)
    if e == 0:
        y = {int(i): int(v) for i, v in dict(y).items() if v}
        _check_y0(y, s)
        # y_i = 1 marks a bead at i >= s, y_i = -1 a gap at i < s
        lo = min(list(y) + [s]) - 1
        hi = max(list(y) + [s])
        beta = [i for i in range(hi, lo - 1, -1) if (y.get(i, 0) == 1 if i >= s else y.get(i, 0) != -1)]
        lam, charge = partition_from_beta(beta)
        assert charge == s
        return lam
    y = tuple(int(v) for v in y)
    if len(y) != e:
        raise DomainError(f"y-vector must have {e} entries")
    if sum(y) != 0:
        raise DomainError("y-vector must sum to 0")
    x = [a + b for a, b in zip(y, x_empty(s, e))]
    lo = min(x) - 1
    runners = [range(lo, x[i]) for i in range(e)]
    lam, charge = partition_from_runners(runners, lo, e)
    assert charge == s
    return lam


def ci_from_y(y, s: int, e: int) -> dict:
    """Residue counts of the core with y-vector y, from the partial sums of y."""
    check_modulus(e)
    if e == 0:
        y = {i: v for i, v in dict(y).items() if v}
        half = sum(v * v for v in y.values()) // 2
        out = {}
        if not y:
            return out
        c = half
        for i in range(s, max(max(y), s) + 1):
            if c:
                out[i] = c
            c -= y.get(i, 0)
        c = half
        for i in range(s - 1, min(min(y), s) - 1, -1):
            c += y.get(i, 0)
            if c:
                out[i] = c
        return dict(sorted(out.items()))
    y = tuple(y)
    norm2 = sum(v * v for v in y)
    if norm2 % 2:
        raise DomainError("y-vector must sum to 0")
    c, out = norm2 // 2, {}
    for i in range(e):
        out[(s + i) % e] = c
        c -= y[(s + i) % e]
    return dict(sorted(out.items()))
