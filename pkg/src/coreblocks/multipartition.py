"""Multipartitions, multicores, their weight and reduced multicores.

Components and charges are indexed from 0 in code (j = 0..r-1). For e-multicores
x[j][i] is the first-gap position of runner i in the abacus of component j at
charge s_j, and gamma_{i,jk} = x[j][i] - x[k][i].
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .abacus import core_from_y, e_core, is_core, x_empty, x_vector, y_vector
from .blocks import BlockVector, block_of_partition, block_weight
from .errors import DomainError, HypothesisError, ParseError
from .partition_core import Partition, check_modulus, parse_partition


@dataclass(frozen=True)
class Multipartition:
    components: tuple

    def __post_init__(self):
        comps = tuple(c if isinstance(c, Partition) else Partition(tuple(c)) for c in self.components)
        if not comps:
            raise DomainError("a multipartition needs r >= 1 components")
        object.__setattr__(self, "components", comps)

    @property
    def r(self):
        return len(self.components)

    @property
    def size(self):
        return sum(c.size for c in self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, j):
        return self.components[j]

    def __str__(self):
        return "|".join(str(c) for c in self.components)


def parse_multipartition(text: str) -> Multipartition:
    if not text.strip():
        raise ParseError("empty multipartition literal")
    return Multipartition(tuple(parse_partition(t) for t in text.split("|")))


def _arity(lam: Multipartition, S):
    S = tuple(int(s) for s in S)
    if len(S) != lam.r:
        raise DomainError(f"multicharge has {len(S)} entries but the multipartition has {lam.r}")
    return S


def multi_block(lam: Multipartition, S, e: int) -> BlockVector:
    S = _arity(lam, S)
    out = BlockVector(e)
    for comp, s in zip(lam, S):
        out = out + block_of_partition(comp, s, e)
    return out


def is_multicore(lam: Multipartition, e: int) -> bool:
    return all(is_core(c, e) for c in lam)


def multicore_of(lam: Multipartition, e: int) -> Multipartition:
    check_modulus(e)
    if e == 0:
        return lam
    return Multipartition(tuple(e_core(c, e) for c in lam))


@dataclass(frozen=True)
class GammaTable:
    e: int
    x: tuple  # x[j][i]

    @property
    def r(self):
        return len(self.x)

    def gamma(self, i, j, k) -> int:
        return self.x[j][i % self.e] - self.x[k][i % self.e]

    def gamma_il(self, i, l, j, k) -> int:
        return self.gamma(i, j, k) - self.gamma(l, j, k)

    def max_gamma(self, j, k) -> int:
        return max(self.gamma(i, j, k) for i in range(self.e))


def _need_multicore(lam, e):
    if e < 1:
        raise DomainError("needs e >= 1")
    if not is_multicore(lam, e):
        raise HypothesisError("multicore", f"{lam} is not an {e}-multicore")


def gamma_table(lam: Multipartition, S, e: int) -> GammaTable:
    S = _arity(lam, S)
    _need_multicore(lam, e)
    return GammaTable(e, tuple(x_vector(c, s, e) for c, s in zip(lam, S)))


def u_jk(lam: Multipartition, S, e: int, j: int, k: int) -> int:
    S = _arity(lam, S)
    _need_multicore(lam, e)
    if S[j] == S[k]:
        return 0
    y = y_vector(lam[j], S[j], e)
    i = (S[k] - S[j]) % e or e
    return -sum(y[(S[j] + t) % e] for t in range(i))


def _weight_pairwise(lam, S, e):
    total = 0
    for j, k in combinations(range(lam.r), 2):
        a = block_of_partition(lam[j], S[j], e) + block_of_partition(lam[k], S[k], e)
        total += block_weight(a, (S[j], S[k]))
    return total


def _weight_two_sets(lam, S, e):
    g = gamma_table(lam, S, e)
    vals = {(i, l): g.gamma_il(i, l, 0, 1) for i in range(e) for l in range(e)}
    if max(vals.values()) > 2:
        raise HypothesisError("gamma_il<=2", "some gamma_{il,12} exceeds 2")
    first = {i for (i, l), v in vals.items() if v == 2}
    second = {l for (i, l), v in vals.items() if v == 2}
    return min(len(first), len(second))


def multi_weight(lam: Multipartition, S, e: int, method: str = "definition") -> int:
    """method: 'definition', 'pairwise' (multicores) or 'two_sets' (bicores with gamma_il <= 2)."""
    S = _arity(lam, S)
    if method == "definition":
        return block_weight(multi_block(lam, S, e), S)
    if method == "pairwise":
        if not is_multicore(lam, e):
            raise HypothesisError("multicore", f"{lam} is not an {e}-multicore")
        return _weight_pairwise(lam, S, e)
    if method == "two_sets":
        if lam.r != 2:
            raise HypothesisError("r=2", "the two-set formula needs r = 2")
        _need_multicore(lam, e)
        return _weight_two_sets(lam, S, e)
    raise DomainError(f"unknown weight method {method!r}")


def reduction_shift(lam: Multipartition, S, e: int):
    """Integers t with max_i gamma_{i,jk} + t_j - t_k <= 1 for all j, k, or None.

    Difference constraints t_j - t_k <= 1 - max_i gamma_{i,jk}, solved by
    Bellman-Ford from a virtual source (edge k -> j of that weight).
    """
    g = gamma_table(lam, S, e)
    r = g.r
    edges = [(k, j, 1 - g.max_gamma(j, k)) for j in range(r) for k in range(r) if j != k]
    dist = [0] * r
    for _ in range(r):
        changed = False
        for k, j, w in edges:
            if dist[k] + w < dist[j]:
                dist[j] = dist[k] + w
                changed = True
        if not changed:
            return tuple(dist)
    # still relaxing after r rounds: negative cycle
    return None


def is_reduced_multicore(lam: Multipartition, S, e: int) -> bool:
    return reduction_shift(lam, S, e) is not None


# ---------------------------------------------------------------------------
# subsets of {1..e} as bitmasks; element i <-> bit i-1 <-> residue i-1

@dataclass(frozen=True)
class SubsetTuple:
    e: int
    sets: tuple  # bitmasks

    def __post_init__(self):
        if self.e < 1:
            raise DomainError("e must be >= 1")
        sets = tuple(int(m) for m in self.sets)
        for m in sets:
            if m < 0 or m >> self.e:
                raise DomainError(f"mask {m:b} does not fit in {self.e} bits")
        object.__setattr__(self, "sets", sets)

    @classmethod
    def from_sets(cls, e, sets):
        return cls(e, tuple(sum(1 << (i - 1) for i in E) for E in sets))

    @property
    def r(self):
        return len(self.sets)

    def as_sets(self):
        return [sorted(i + 1 for i in range(self.e) if m >> i & 1) for m in self.sets]

    def matrix(self):
        """e x r 0/1 matrix, rows indexed by elements of {1..e}."""
        return [[m >> i & 1 for m in self.sets] for i in range(self.e)]

    def __str__(self):
        return " ".join("{" + ",".join(map(str, E)) + "}" for E in self.as_sets())


def pair_weight(E: int, F: int, e: int | None = None) -> int:
    if e is not None and (E >> e or F >> e):
        raise DomainError("mask does not fit in e bits")
    return min(E.bit_count(), F.bit_count()) - (E & F).bit_count()


def tuple_weight(T: SubsetTuple) -> int:
    return sum(pair_weight(E, F) for E, F in combinations(T.sets, 2))


def build_reduced_multicore(M, b=None):
    """Reduced multicore attached to a subset tuple (or e x r 0/1 matrix).

    b[i] (i = 0..e-1, b[i] = i mod e) is the largest bead of runner i in the
    components that do not contain element i+1; components containing it get
    b[i] + e instead. Returns (multicharge, multipartition).
    """
    if not isinstance(M, SubsetTuple):
        rows = [list(row) for row in M]
        e = len(rows)
        r = len(rows[0]) if rows else 0
        M = SubsetTuple(e, tuple(sum(rows[i][j] << i for i in range(e)) for j in range(r)))
    e = M.e
    b = list(range(e)) if b is None else [int(v) for v in b]
    if len(b) != e or any((v - i) % e for i, v in enumerate(b)):
        raise DomainError("b must have e entries with b[i] = i mod e")
    S, comps = [], []
    for m in M.sets:
        x = [(b[i] + (m >> i & 1) * e - i) // e + 1 for i in range(e)]
        s = sum(x)
        y = [a - c for a, c in zip(x, x_empty(s, e))]
        S.append(s)
        comps.append(core_from_y(y, s, e))
    return tuple(S), Multipartition(tuple(comps))
