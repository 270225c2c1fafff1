"""The shift sigma of order d on blocks and on partitions (charge 0 throughout).

On blocks sigma(alpha_i) = alpha_{i - ehat}, so the coefficient of alpha_i in
sigma(alpha) is c_{i + ehat}. On partitions sigma rotates the runners of the
charge-0 e-abacus: runner i of the result is runner i + ehat of the input.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .abacus import partition_from_runners, abacus_profile, core_from_y, e_core, is_core, x_vector
from .blocks import (
    BlockVector,
    block_of_partition,
    block_weight,
    core_partition_of_block,
    is_level_one_block,
    partition_in_block,
)
from .errors import DomainError, HypothesisError
from .partition_core import Partition


@dataclass(frozen=True)
class ShiftParam:
    e: int
    ehat: int

    def __post_init__(self):
        if self.e < 2:
            raise DomainError("the shift needs e >= 2")
        if not 1 <= self.ehat <= self.e - 1:
            raise DomainError(f"ehat must lie in 1..{self.e - 1}")

    @property
    def d(self) -> int:
        return self.e // gcd(self.e, self.ehat)

    @property
    def divides(self) -> bool:
        return self.e % self.ehat == 0

    def require_divides(self):
        if not self.divides:
            raise HypothesisError("ehat|e", f"{self.ehat} does not divide {self.e}")


def _same_e(a: BlockVector, p: ShiftParam):
    if a.e != p.e:
        raise DomainError(f"block has e={a.e}, shift has e={p.e}")


def sigma_block(a: BlockVector, p: ShiftParam) -> BlockVector:
    _same_e(a, p)
    return BlockVector(p.e, tuple(a[i + p.ehat] for i in range(p.e)))


def sigma_core(lam: Partition, p: ShiftParam) -> Partition:
    """The e-core whose x-vector is x(lam) rotated by ehat."""
    x = x_vector(lam, 0, p.e)
    # at charge 0, x(empty) = 0 so y = x
    return core_from_y(tuple(x[(i + p.ehat) % p.e] for i in range(p.e)), 0, p.e)


def sigma_partition(lam: Partition, p: ShiftParam) -> Partition:
    prof = abacus_profile(lam, 0, p.e)
    runners = [prof.runners[(i + p.ehat) % p.e] for i in range(p.e)]
    out, s = partition_from_runners(runners, prof.floor, p.e)
    assert s == 0
    return out


def shift_block_membership(a: BlockVector, p: ShiftParam) -> str:
    """'block-and-core', 'block-not-core' or 'not-block' for sigma(alpha), alpha a charge-0 block."""
    _same_e(a, p)
    if not is_level_one_block(a, 0):
        raise DomainError(f"{a.pretty()} is not a block for charge 0")
    # w(sigma alpha) = w(alpha) + c_ehat - c_0
    w = block_weight(a, (0,)) + a[p.ehat] - a[0]
    if w > 0:
        return "block-not-core"
    return "block-and-core" if w == 0 else "not-block"


def pi_project(a: BlockVector, p: ShiftParam) -> BlockVector:
    _same_e(a, p)
    p.require_divides()
    return BlockVector(p.ehat, tuple(sum(a[j + k * p.ehat] for k in range(p.d)) for j in range(p.ehat)))


def is_stuttering_block(a: BlockVector, p: ShiftParam) -> bool:
    return sigma_block(a, p) == a


def is_stuttering_partition(lam: Partition, p: ShiftParam) -> bool:
    return sigma_partition(lam, p) == lam


def stuttering_witness(a: BlockVector, p: ShiftParam) -> Partition:
    """A sigma-fixed partition lying in alpha: start from the core of alpha and slide
    the top bead of each runner 0, ehat, ..., (d-1)ehat up by w/d."""
    _same_e(a, p)
    p.require_divides()
    if not is_level_one_block(a, 0):
        raise DomainError(f"{a.pretty()} is not a block for charge 0")
    if sigma_block(a, p) != a:
        raise HypothesisError("sigma(alpha)=alpha", "alpha is not fixed by sigma")
    w = block_weight(a, (0,))
    if w % p.d:
        raise HypothesisError("d|w", f"d={p.d} does not divide w={w}")
    core = core_partition_of_block(a, 0)
    prof = abacus_profile(core, 0, p.e)
    lo = prof.floor - 1
    beads = [sorted(set(r) | {lo}) for r in prof.runners]
    for t in range(p.d):
        i = t * p.ehat
        beads[i][-1] += w // p.d
    lam, s = partition_from_runners(beads, lo, p.e)
    assert s == 0
    return lam


@dataclass
class EhatReport:
    core_applicable: bool = False
    core_holds: bool = True
    share_applicable: bool = False
    share_holds: bool = True

    @property
    def passed(self):
        return self.core_holds and self.share_holds


def ehat_core_checks(lam: Partition, p: ShiftParam) -> EhatReport:
    """(a) an e-core with sigma-fixed block is an ehat-core;
    (b) lam and a partition lying in sigma(alpha(lam)) share their ehat-core."""
    p.require_divides()
    rep = EhatReport()
    a = block_of_partition(lam, 0, p.e)
    sa = sigma_block(a, p)
    if is_core(lam, p.e) and sa == a:
        rep.core_applicable = True
        rep.core_holds = is_core(lam, p.ehat)
    if is_level_one_block(sa, 0):
        rep.share_applicable = True
        mu = partition_in_block(sa, 0)
        rep.share_holds = e_core(lam, p.ehat) == e_core(mu, p.ehat)
    return rep
