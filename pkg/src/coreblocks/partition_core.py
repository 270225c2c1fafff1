"""Partitions, Young diagrams, residues, rim hooks and the level-one charge-weight.

A node (a, b) sits in row a and column b (both 1-based); its residue for the
charge s is b - a + s, reduced mod e when e > 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import DomainError, ParseError

INT64_MAX = 2**63 - 1


def check_int64(v: int) -> int:
    # python ints never wrap; this keeps every value inside signed 64-bit range
    if not -INT64_MAX - 1 <= v <= INT64_MAX:
        raise OverflowError(f"integer {v} does not fit in 64 bits")
    return v


def check_modulus(e: int) -> int:
    if e < 0:
        raise DomainError(f"modulus must be >= 0, got {e}")
    return e


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        prev = None
        for p in parts:
            check_int64(p)
            if p <= 0:
                raise DomainError(f"parts must be positive: {parts}")
            if prev is not None and p > prev:
                raise DomainError(f"parts must be non-increasing: {parts}")
            prev = p
        check_int64(sum(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def height(self) -> int:
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def part(self, a: int) -> int:
        """lambda_a with 1-based a, zero beyond the height."""
        return self.parts[a - 1] if 1 <= a <= len(self.parts) else 0

    def nodes(self):
        return [(a, b) for a, p in enumerate(self.parts, 1) for b in range(1, p + 1)]

    def __contains__(self, node) -> bool:
        a, b = node
        return a >= 1 and b >= 1 and b <= self.part(a)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= b) for b in range(1, self.parts[0] + 1)))

    def addable_nodes(self):
        out = []
        for a in range(1, self.height + 2):
            b = self.part(a) + 1
            if a == 1 or self.part(a - 1) >= b:
                out.append((a, b))
        return out

    def removable_nodes(self):
        return [(a, p) for a, p in enumerate(self.parts, 1) if self.part(a + 1) < p]

    def __str__(self):
        return ",".join(map(str, self.parts)) if self.parts else "-"

    def __repr__(self):
        return f"Partition({self.parts})"


EMPTY = Partition(())


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("-", "", "()", "∅"):
        return EMPTY
    try:
        parts = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ParseError(f"bad partition literal {text!r}") from None
    try:
        return Partition(parts)
    except DomainError as exc:
        raise ParseError(f"bad partition literal {text!r}: {exc}") from None


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rem, cap):
        if rem == 0:
            yield ()
            return
        for p in range(min(rem, cap), 0, -1):
            for rest in rec(rem - p, p):
                yield (p,) + rest

    for parts in rec(n, max_part):
        yield Partition(parts)


def partitions_upto(n: int) -> Iterator[Partition]:
    for m in range(n + 1):
        yield from partitions(m)


def residue(node, s: int, e: int) -> int:
    a, b = node
    if a < 1 or b < 1:
        raise DomainError(f"invalid node {node}")
    r = b - a + s
    return r % e if e else r


def residue_counts(lam: Partition, s: int, e: int) -> dict:
    """c_i^s(lam). For e > 0 every residue 0..e-1 is a key; for e = 0 only the support."""
    check_modulus(e)
    counts = {i: 0 for i in range(e)}
    for a, p in enumerate(lam.parts, 1):
        for b in range(1, p + 1):
            r = b - a + s
            if e:
                r %= e
            counts[r] = counts.get(r, 0) + 1
    return counts


def weight_from_counts(counts: Mapping[int, int], charges, e: int) -> int:
    """sum_j c_{s_j} - 1/2 sum_i (c_i - c_{i+1})^2 for a residue -> coefficient map."""
    if e:
        c = [counts.get(i, 0) for i in range(e)]
        sq = sum((c[i] - c[(i + 1) % e]) ** 2 for i in range(e))
        lin = sum(c[s % e] for s in charges)
    else:
        support = [i for i, v in counts.items() if v]
        sq = 0
        if support:
            for i in range(min(support) - 1, max(support) + 1):
                sq += (counts.get(i, 0) - counts.get(i + 1, 0)) ** 2
        lin = sum(counts.get(s, 0) for s in charges)
    assert sq % 2 == 0
    return check_int64(lin - sq // 2)


def charge_weight(lam: Partition, s: int, e: int) -> int:
    return weight_from_counts(residue_counts(lam, s, e), (s,), e)


def _beta(lam: Partition, length: int, s: int = 0):
    return [s + lam.part(a) - a for a in range(1, length + 1)]


def _from_beta(beta, s: int = 0) -> Partition:
    beta = sorted(beta, reverse=True)
    return Partition(tuple(p for p in (b - s + a for a, b in enumerate(beta, 1)) if p > 0))


def removable_rim_hooks(lam: Partition, l: int):
    """All l-rim hooks as (node, partition after removal), read off the beta-numbers.

    The hook at (a, b) corresponds to the bead of row a moving from x to x - l.
    """
    if l < 1:
        raise DomainError("hook length must be >= 1")
    h = lam.height
    beta = _beta(lam, h + l)
    bset = set(beta)
    out = []
    for a in range(1, h + 1):
        x = beta[a - 1]
        if x - l in bset:
            continue
        leg = sum(1 for y in bset if x - l < y < x)
        b = lam.part(a) - (l - 1 - leg)
        new = [y for y in beta if y != x] + [x - l]
        out.append(((a, b), _from_beta(new)))
    return out


def rim_hook_nodes(lam: Partition, node) -> set:
    """The geometric rim hook r_(a,b): nodes (a',b') >= (a,b) with (a'+1,b'+1) outside lam."""
    a, b = node
    if node not in lam:
        raise DomainError(f"{node} is not a node of {lam}")
    return {
        (x, y)
        for (x, y) in lam.nodes()
        if x >= a and y >= b and (x + 1, y + 1) not in lam
    }


def add_rim_hook_results(lam: Partition, l: int):
    """All partitions obtained by wrapping one l-rim hook onto lam."""
    if l < 1:
        raise DomainError("hook length must be >= 1")
    beta = _beta(lam, lam.height + l)
    bset = set(beta)
    out = []
    for x in beta:
        if x + l not in bset:
            new = [y for y in beta if y != x] + [x + l]
            out.append(_from_beta(new))
    return out
