"""The lattice Q = sum Z alpha_i, weights on it, block membership and core blocks.

Level one is decided by the weight alone (w_s(alpha) >= 0). At level r >= 2 a
vector is a block when it splits as a sum of level-one blocks, one per charge;
this is decided by a small dynamic programme over the level-one blocks lying
below alpha.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .abacus import ci_from_y, core_from_y
from .config import DEFAULT_LIMITS, Limits
from .errors import DomainError, ParseError, ResourceLimitError
from .partition_core import (
    Partition,
    add_rim_hook_results,
    check_int64,
    check_modulus,
    partitions,
    residue_counts,
    weight_from_counts,
)


@dataclass(frozen=True)
class BlockVector:
    """alpha = sum_i c_i alpha_i. For e > 0 `coeffs` is a length-e tuple;
    for e = 0 it is a sorted tuple of (i, c) pairs with c != 0."""

    e: int
    coeffs: tuple = ()

    def __post_init__(self):
        e = check_modulus(self.e)
        c = self.coeffs
        if e:
            if isinstance(c, Mapping):
                bad = [i for i in c if not 0 <= i < e]
                if bad:
                    raise DomainError(f"residues {bad} out of range for e={e}")
                c = tuple(c.get(i, 0) for i in range(e))
            elif not c:
                c = (0,) * e
            c = tuple(int(v) for v in c)
            if len(c) != e:
                raise DomainError(f"expected {e} coefficients, got {len(c)}")
        else:
            items = c.items() if isinstance(c, Mapping) else c
            acc = {}
            for i, v in items:
                acc[int(i)] = acc.get(int(i), 0) + int(v)
            c = tuple(sorted((i, v) for i, v in acc.items() if v))
        object.__setattr__(self, "coeffs", c)
        for v in self.values():
            check_int64(v)

    # basic access
    def values(self):
        return list(self.coeffs) if self.e else [v for _, v in self.coeffs]

    def __getitem__(self, i: int) -> int:
        if self.e:
            return self.coeffs[i % self.e]
        for k, v in self.coeffs:
            if k == i:
                return v
        return 0

    def as_dict(self) -> dict:
        if self.e:
            return dict(enumerate(self.coeffs))
        return dict(self.coeffs)

    def support(self):
        if self.e:
            return [i for i, v in enumerate(self.coeffs) if v]
        return [i for i, _ in self.coeffs]

    @property
    def size(self) -> int:
        return sum(self.values())

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.values())

    def __le__(self, other) -> bool:
        # componentwise order, used for "lies below"
        if self.e != other.e:
            return NotImplemented
        keys = set(self.as_dict()) | set(other.as_dict())
        return all(self[i] <= other[i] for i in keys)

    # arithmetic
    def _combine(self, other, sign):
        if not isinstance(other, BlockVector) or other.e != self.e:
            raise DomainError("block vectors with different moduli")
        if self.e:
            return BlockVector(self.e, tuple(a + sign * b for a, b in zip(self.coeffs, other.coeffs)))
        d = self.as_dict()
        for i, v in other.coeffs:
            d[i] = d.get(i, 0) + sign * v
        return BlockVector(0, d)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self * -1

    def __mul__(self, k: int):
        if self.e:
            return BlockVector(self.e, tuple(k * v for v in self.coeffs))
        return BlockVector(0, {i: k * v for i, v in self.coeffs})

    __rmul__ = __mul__

    # formatting
    def __str__(self):
        if self.e:
            return ",".join(map(str, self.coeffs))
        return ",".join(f"{i}:{v}" for i, v in self.coeffs) or "0"

    def pretty(self) -> str:
        terms = [f"{v}α{i}" if v != 1 else f"α{i}" for i, v in sorted(self.as_dict().items()) if v]
        return "+".join(terms).replace("+-", "-") or "0"

    def to_json(self) -> dict:
        if self.e:
            return {"e": self.e, "coeffs": list(self.coeffs)}
        return {"e": 0, "coeffs": {str(i): v for i, v in self.coeffs}}

    @classmethod
    def from_json(cls, obj) -> "BlockVector":
        if isinstance(obj, str):
            obj = json.loads(obj)
        c = obj["coeffs"]
        if isinstance(c, dict):
            c = {int(i): v for i, v in c.items()}
        return cls(int(obj["e"]), c)


def parse_block(text: str, e: int) -> BlockVector:
    """"3,5,3" for e > 0; "i:c,i:c" (or "0") for e = 0; a JSON object is also accepted."""
    text = text.strip()
    try:
        if text.startswith("{"):
            bv = BlockVector.from_json(text)
            if bv.e != e:
                raise ParseError(f"literal has e={bv.e}, expected {e}")
            return bv
        if e:
            return BlockVector(e, tuple(int(t) for t in text.split(",")))
        if text == "0":
            return BlockVector(0)
        pairs = [t.split(":") for t in text.split(",")]
        return BlockVector(0, [(int(i), int(v)) for i, v in pairs])
    except (ValueError, KeyError, TypeError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"bad block literal {text!r}: {exc}") from None


def alpha(i: int, e: int) -> BlockVector:
    return BlockVector(e, {i % e if e else i: 1})


def zero(e: int) -> BlockVector:
    return BlockVector(e)


def const_one(e: int) -> BlockVector:
    return BlockVector(e, (1,) * e) if e else BlockVector(0)


def _charges(S):
    S = (S,) if isinstance(S, int) else tuple(int(s) for s in S)
    if not S:
        raise DomainError("multicharge must have r >= 1 entries")
    return S


def block_weight(a: BlockVector, S) -> int:
    return weight_from_counts(a.as_dict(), _charges(S), a.e)


def block_of_partition(lam: Partition, s: int, e: int) -> BlockVector:
    return BlockVector(e, residue_counts(lam, s, e))


def _differences_ok(a: BlockVector, s: int) -> bool:
    # e = 0: c_i - c_{i+1} in {0,1} for i >= s and in {0,-1} for i < s
    supp = a.support()
    if not supp:
        return True
    for i in range(min(supp) - 1, max(supp) + 1):
        d = a[i] - a[i + 1]
        if d not in ((0, 1) if i >= s else (0, -1)):
            return False
    return True


def is_level_one_block(a: BlockVector, s: int) -> bool:
    w = block_weight(a, (s,))
    if a.e:
        return w >= 0
    return w == 0 and _differences_ok(a, s)


def _y_of(a: BlockVector):
    if a.e:
        return tuple(a[i] - a[i + 1] for i in range(a.e))
    supp = a.support()
    if not supp:
        return {}
    y = {i: a[i] - a[i + 1] for i in range(min(supp) - 1, max(supp) + 1)}
    return {i: v for i, v in y.items() if v}


def core_partition_of_block(a: BlockVector, s: int, e: int | None = None) -> Partition:
    if e is not None and e != a.e:
        raise DomainError(f"block has e={a.e}, got e={e}")
    if not is_level_one_block(a, s):
        raise DomainError(f"{a.pretty()} is not a block for charge {s}")
    w = block_weight(a, (s,))
    hat = a - w * const_one(a.e) if a.e else a
    return core_from_y(_y_of(hat), s, a.e)


def partition_in_block(a: BlockVector, s: int) -> Partition:
    """Some partition lying in the level-one block a: its core with w e-rim hooks added."""
    lam = core_partition_of_block(a, s)
    if a.e:
        for _ in range(block_weight(a, (s,))):
            lam = add_rim_hook_results(lam, a.e)[0]
    return lam


def parametrise(a: BlockVector, s: int):
    """alpha -> (y, w) with y the y-vector of the core of alpha."""
    if not a.e:
        raise DomainError("parametrisation needs e >= 1")
    w = block_weight(a, (s,))
    if w < 0:
        raise DomainError(f"{a.pretty()} is not a block for charge {s}")
    return _y_of(a), w


def deparametrise(y, w: int, s: int, e: int) -> BlockVector:
    if e < 1:
        raise DomainError("parametrisation needs e >= 1")
    y = tuple(int(v) for v in y)
    if len(y) != e or sum(y) != 0:
        raise DomainError("y must have e entries summing to 0")
    if w < 0:
        raise DomainError("w must be >= 0")
    half = sum(v * v for v in y) // 2
    out = const_one(e) * (half + w)
    partial = 0
    for i in range(1, e):
        partial += y[(s + i - 1) % e]
        out = out - partial * alpha(s + i, e)
    return out


# ---------------------------------------------------------------------------
# level r >= 2

def _rotate(t, s, e):
    # c^s_i = c^0_{i-s}
    return tuple(t[(i - s) % e] for i in range(e))


@lru_cache(maxsize=None)
def _cores_by_y(e: int, max_size: int):
    """Residue-count tuples (charge 0) of all e-cores of size <= max_size."""
    out = []
    bound = 1
    while bound * bound <= 2 * max_size:
        bound += 1

    def rec(prefix, norm):
        if len(prefix) == e - 1:
            last = -sum(prefix)
            y = prefix + (last,)
            if norm + last * last > 2 * max_size:
                return
            c = ci_from_y(y, 0, e)
            t = tuple(c[i] for i in range(e))
            if sum(t) <= max_size:
                out.append(t)
            return
        for v in range(-bound, bound + 1):
            if norm + v * v <= 2 * max_size:
                rec(prefix + (v,), norm + v * v)

    rec((), 0)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _level_one_tuples(e: int, s: int, max_size: int):
    """Coefficient tuples of all level-one blocks of size <= max_size (e >= 1)."""
    out = []
    for core in _cores_by_y(e, max_size):
        n = sum(core)
        core = _rotate(core, s % e, e)
        for k in range((max_size - n) // e + 1):
            out.append(tuple(v + k for v in core))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _partition_contents(max_size: int):
    """Charge-0 content vectors (e = 0) of all partitions of size <= max_size."""
    out = set()
    for n in range(max_size + 1):
        for lam in partitions(n):
            out.add(tuple(sorted(residue_counts(lam, 0, 0).items())))
    return tuple(sorted(out))


def level_one_blocks(s: int, e: int, max_size: int):
    """All level-one blocks of size <= max_size, as BlockVectors."""
    if e:
        return [BlockVector(e, t) for t in _level_one_tuples(e, s % e, max_size)]
    return [BlockVector(0, [(i + s, v) for i, v in t]) for t in _partition_contents(max_size)]


def _guard(a: BlockVector, limits: Limits):
    if a.size > limits.max_block_size:
        raise ResourceLimitError(f"|alpha| = {a.size} exceeds the limit {limits.max_block_size}")


@lru_cache(maxsize=200_000)
def _member_pos(t: tuple, S: tuple, e: int) -> bool:
    # t nonnegative, e >= 1, r >= 2; S sorted residues
    n = sum(t)
    reach = {(0,) * e}
    for s in S[:-1]:
        cands = [b for b in _level_one_tuples(e, s, n) if all(x <= y for x, y in zip(b, t))]
        nxt = set()
        for p in reach:
            for b in cands:
                q = tuple(x + y for x, y in zip(p, b))
                if all(x <= y for x, y in zip(q, t)):
                    nxt.add(q)
        reach = nxt
    last = S[-1]
    for p in reach:
        rest = {i: y - x for i, (x, y) in enumerate(zip(p, t))}
        if weight_from_counts(rest, (last,), e) >= 0:
            return True
    return False


def _member_e0(a: BlockVector, S: tuple) -> bool:
    d = a.as_dict()
    n = a.size
    contents = _partition_contents(n)
    reach = {()}
    for s in S[:-1]:
        cands = []
        for t in contents:
            if all(d.get(i + s, 0) >= v for i, v in t):
                cands.append({i + s: v for i, v in t})
        nxt = set()
        for p in reach:
            pd = dict(p)
            for c in cands:
                q = dict(pd)
                for i, v in c.items():
                    q[i] = q.get(i, 0) + v
                if all(d.get(i, 0) >= v for i, v in q.items()):
                    nxt.add(tuple(sorted(q.items())))
        reach = nxt
    for p in reach:
        rest = a - BlockVector(0, p)
        if is_level_one_block(rest, S[-1]):
            return True
    return False


def is_block(a: BlockVector, S, e: int | None = None, limits: Limits = DEFAULT_LIMITS) -> bool:
    """alpha in Q_+^S, i.e. alpha = sum_j alpha_j with alpha_j a level-one block for s_j."""
    S = _charges(S)
    if e is not None and e != a.e:
        raise DomainError(f"block has e={a.e}, got e={e}")
    if not a.is_nonnegative():
        return False
    if len(S) == 1:
        return is_level_one_block(a, S[0])
    _guard(a, limits)
    if a.e:
        return _member_pos(a.coeffs, tuple(sorted(s % a.e for s in S)), a.e)
    return _member_e0(a, tuple(sorted(S)))


def s_core_of_block(a: BlockVector, S, limits: Limits = DEFAULT_LIMITS):
    """(alpha - h*1, h) with h the largest k such that alpha - k*1 is a block."""
    S = _charges(S)
    e = a.e
    if e < 1:
        raise DomainError("the S-core needs e >= 1")
    one = const_one(e)
    # alpha - k*1 is a block for k <= max_j w_{s_j}(alpha): put all of it in one component
    k = max(block_weight(a, (s,)) for s in S)
    cur = a - k * one
    _guard(cur, limits)
    assert is_block(cur, S, limits=limits)
    while is_block(cur - one, S, limits=limits):
        cur = cur - one
        k += 1
    return cur, k


def is_core_block(a: BlockVector, S, e: int | None = None, limits: Limits = DEFAULT_LIMITS) -> bool:
    if not is_block(a, S, e, limits):
        return False
    if a.e == 0:
        return True
    return not is_block(a - const_one(a.e), S, limits=limits)


def enumerate_blocks(S, e: int, n: int, limits: Limits = DEFAULT_LIMITS):
    """{alpha^S(Lambda) : Lambda an r-partition of n}, by direct enumeration of partitions."""
    S = _charges(S)
    if n > limits.max_enum_n:
        raise ResourceLimitError(f"n = {n} exceeds the enumeration limit {limits.max_enum_n}")
    per_size = {}
    for s in set(S):
        per_size[s] = [
            {block_of_partition(lam, s, e) for lam in partitions(m)} for m in range(n + 1)
        ]
    # layer[m] = blocks of the first j components with total size m
    layer = {m: per_size[S[0]][m] for m in range(n + 1)}
    for s in S[1:]:
        nxt = {m: set() for m in range(n + 1)}
        for m1 in range(n + 1):
            for m2 in range(n + 1 - m1):
                for a in layer[m1]:
                    for b in per_size[s][m2]:
                        nxt[m1 + m2].add(a + b)
        layer = nxt
    return layer[n]
