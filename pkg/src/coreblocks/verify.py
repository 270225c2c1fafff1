"""Exhaustive desk-scale checks, grouped into named suites.

Each suite returns a list of Case records; a case covers one parameter point
(e.g. one (e, s) pair) and keeps the first counterexample it met.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product

import numpy as np

from . import abacus as ab
from . import blocks as bl
from . import bounds as bd
from . import shift as sh
from .config import Config
from .multipartition import SubsetTuple, build_reduced_multicore, multi_weight, tuple_weight
from .partition_core import (
    Partition,
    charge_weight,
    partitions,
    partitions_upto,
    removable_rim_hooks,
)


@dataclass
class Case:
    suite: str
    case_id: str
    passed: bool = True
    checked: int = 0
    counterexample: str | None = None

    def fail(self, what):
        if self.passed:
            self.counterexample = str(what)
        self.passed = False

    def check(self, cond, what):
        self.checked += 1
        if not cond:
            self.fail(what)


@dataclass
class SuiteReport:
    suite: str
    cases: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.cases)

    def to_json(self):
        return {"suite": self.suite, "passed": self.passed, "cases": [asdict(c) for c in self.cases]}


def hook_removal_weight(lam: Partition, e: int) -> int:
    """e-weight by repeatedly removing some e-rim hook (independent of the abacus code)."""
    w = 0
    while True:
        hooks = removable_rim_hooks(lam, e)
        if not hooks:
            return w
        lam = hooks[0][1]
        w += 1


# ---------------------------------------------------------------------------

def suite_roundtrips(n_max=12, e_max=6, charges=range(-2, 3)):
    cases = []
    parts = list(partitions_upto(n_max))
    for s in charges:
        c = Case("roundtrips", f"beta s={s}")
        for lam in parts:
            c.check(ab.partition_from_beta(ab.beta_number(lam, s)) == (lam, s), lam)
        cases.append(c)
    for e in range(1, e_max + 1):
        for s in charges:
            c = Case("roundtrips", f"e={e} s={s}")
            for lam in parts:
                core = ab.e_core(lam, e)
                q = ab.e_quotient(lam, s, e)
                c.check(ab.from_core_and_quotient(core, q, s, e) == lam, f"core/quotient {lam}")
                c.check(q.size == ab.e_weight(lam, e), f"quotient size {lam}")
                if ab.is_core(lam, e):
                    c.check(ab.core_from_y(ab.y_vector(lam, s, e), s, e) == lam, f"y {lam}")
                a = bl.block_of_partition(lam, s, e)
                y, w = bl.parametrise(a, s)
                c.check(bl.deparametrise(y, w, s, e) == a, f"parametrise {lam}")
                c.check(y == ab.y_vector(core, s, e), f"parametrise y {lam}")
            cases.append(c)
    for s in charges:
        c = Case("roundtrips", f"e=0 s={s}")
        for lam in parts:
            y = ab.y_vector(lam, s, 0)
            c.check(ab.core_from_y(y, s, 0) == lam, f"y {lam}")
            c.check(ab.ci_from_y(y, s, 0) == {i: v for i, v in ab.residue_counts(lam, s, 0).items() if v},
                    f"ci {lam}")
        cases.append(c)
    return cases


def suite_weights(n_max=12, e_max=8):
    cases = []
    parts = list(partitions_upto(n_max))
    for e in range(1, e_max + 1):
        c = Case("weights", f"e={e}")
        for lam in parts:
            we = hook_removal_weight(lam, e)
            c.check(ab.e_weight(lam, e) == we, f"abacus weight {lam}")
            c.check(charge_weight(lam, 0, e) == we, f"charge weight {lam}")
            c.check(charge_weight(lam, e + 1, e) == we, f"charge weight s={e + 1} {lam}")
        cases.append(c)
    c = Case("weights", "e=0")
    for lam in parts:
        c.check(charge_weight(lam, 0, 0) == 0 and ab.e_weight(lam, 0) == 0, lam)
    cases.append(c)
    return cases


def _window_blocks(e, s, n):
    """{alpha : |alpha| = n, coefficients in [-n, n], w_s(alpha) >= 0} via numpy."""
    axes = np.arange(-n, n + 1, dtype=np.int64)
    if e == 1:
        return {(n,)} if n >= 0 else set()
    grid = np.stack(np.meshgrid(*([axes] * (e - 1)), indexing="ij"), axis=-1).reshape(-1, e - 1)
    last = n - grid.sum(axis=1)
    keep = (last >= -n) & (last <= n)
    C = np.concatenate([grid[keep], last[keep, None]], axis=1)
    diff = C - np.roll(C, -1, axis=1)
    w = C[:, s % e] - (diff * diff).sum(axis=1) // 2
    return {tuple(int(v) for v in row) for row in C[w >= 0]}


def suite_level_one(n_max=12, es=(2, 3, 4, 5), charges=(0, 1)):
    cases = []
    for e in es:
        for s in charges:
            c = Case("level-one", f"e={e} s={s}")
            for n in range(n_max + 1):
                window = _window_blocks(e, s, n)
                enum = {a.coeffs for a in bl.enumerate_blocks((s,), e, n)}
                c.check(window == enum, f"n={n}: {sorted(window ^ enum)[:3]}")
            cases.append(c)
    # e = 0: support in [s-3, s+3], coefficients in [-1, 4]; blocks there are
    # exactly the partitions inside a 4x4 box
    for s in charges:
        c = Case("level-one", f"e=0 s={s}")
        idx = list(range(s - 3, s + 4))
        enum = set()
        for lam in partitions_upto(16):
            if lam.height <= 4 and lam.part(1) <= 4:
                enum.add(bl.block_of_partition(lam, s, 0))
        for coeffs in product(range(-1, 5), repeat=len(idx)):
            a = bl.BlockVector(0, list(zip(idx, coeffs)))
            by_w = bl.block_weight(a, (s,)) >= 0
            c.check(by_w == (a in enum) == bl.is_level_one_block(a, s), a)
        cases.append(c)
    return cases


WEIGHT_MEMBERSHIP_WINDOWS = [
    (2, 2, [(0, 0), (0, 1)], 10),
    (2, 3, [(0, 0), (0, 1), (0, 2)], 6),
    (3, 2, [(0, 0, 0), (0, 0, 1), (0, 1, 1)], 10),
]


def suite_weight_membership(cases_spec=WEIGHT_MEMBERSHIP_WINDOWS, enum_n=8):
    cases = []
    for r, e, charge_list, B in cases_spec:
        for S in charge_list:
            c = Case("theorem0", f"r={r} e={e} S={S}")
            for coeffs in product(range(-B, B + 1), repeat=e):
                a = bl.BlockVector(e, coeffs)
                c.check(bl.is_block(a, S) == (bl.block_weight(a, S) >= 0), a.pretty())
            # the DP itself against plain enumeration of multipartitions
            for n in range(enum_n + 1):
                enum = bl.enumerate_blocks(S, e, n)
                for coeffs in product(range(n + 1), repeat=e):
                    if sum(coeffs) == n:
                        a = bl.BlockVector(e, coeffs)
                        c.check(bl.is_block(a, S) == (a in enum), f"dp/enum {a.pretty()}")
            cases.append(c)
    return cases


SUPERLEVEL_WINDOWS = [
    (2, 2, [(0, 0), (0, 1)], 10),
    (2, 3, [(0, 0), (0, 1), (0, 2)], 6),
    (3, 2, [(0, 0, 0), (0, 0, 1), (0, 1, 1)], 10),
    (2, 4, [(0, 0), (0, 1), (0, 2), (0, 3)], 4),
]


def suite_superlevel(cases_spec=SUPERLEVEL_WINDOWS, hs=(2, 3, 4)):
    cases = []
    for r, e, charge_list, B in cases_spec:
        N = bd.N_exact(r, e)
        for S in charge_list:
            c = Case("theoremC", f"r={r} e={e} S={S}")
            res = bd.superlevel_inclusion_check(r, e, S, B, N=N)
            c.checked = res.checked
            if not res.passed:
                c.fail(res.counterexample.pretty())
            cases.append(c)
    c = Case("theoremC", "e=0 control")
    for h in hs:
        a, S = bd.superlevel_counterexample_e0(h, 0)
        c.check(bl.block_weight(a, S) == h - 1, f"weight h={h}")
        c.check(not bl.is_block(a, S), f"block h={h}")
        # for S = (0, s), s > 0, the weight drops to h - 1 - s and it is still no block
        for s in (1, 2):
            a, S = bd.superlevel_counterexample_e0(h, s)
            c.check(bl.block_weight(a, S) == h - 1 - s and not bl.is_block(a, S), f"h={h} s={s}")
    cases.append(c)
    return cases


def suite_spectra(e_max=8):
    cases = []
    for e in range(2, e_max + 1):
        c = Case("spectra", f"e={e}")
        for k in range(1, e):
            c.check(bd.verify_spectrum(e, k), f"k={k}")
        cases.append(c)
    return cases


def bound_table(r_max=6, e_max=8, limits=None):
    """{(r, e): N(r, e)} for 2 <= r <= r_max, 1 <= e <= e_max (equal_size strategy)."""
    kw = {} if limits is None else {"limits": limits}
    return {(r, e): bd.N_exact(r, e, **kw) for r in range(2, r_max + 1) for e in range(1, e_max + 1)}


def suite_bounds_table(r_max=6, e_max=8):
    cases = []
    table = bound_table(r_max, e_max)
    lim = bd.DEFAULT_LIMITS
    c = Case("bounds-table", "closed forms")
    for (r, e), v in table.items():
        cf = bd.N_closed_form(r, e)
        if cf is not None:
            c.check(cf == v, f"N({r},{e}) = {v} vs closed {cf}")
    cases.append(c)
    c = Case("bounds-table", "full = equal_size")
    for (r, e), v in table.items():
        if e <= lim.full_max_e and r <= lim.full_max_r:
            c.check(bd.N_exact(r, e, "full") == v, f"N({r},{e})")
        if e <= 4 and r <= 4:
            c.check(bd.N_exact(r, e, "enumerate") == v, f"enumerate N({r},{e})")
    cases.append(c)
    c = Case("bounds-table", "sandwich")
    for (r, e), v in table.items():
        if e >= 2:
            lo, hi = bd.N_bounds(r, e)
            c.check(lo <= v <= hi, f"N({r},{e}) = {v} not in [{lo},{hi}]")
    cases.append(c)
    c = Case("bounds-table", "superadditivity")
    for r in range(2, r_max + 1):
        c.check(bd.superadditivity_check(r, e_max, table), f"r={r}")
    cases.append(c)
    c = Case("bounds-table", "witnesses")
    pent = SubsetTuple.from_sets(5, [{1, 2}, {1, 3}, {3, 5}, {4, 5}, {2, 4}])
    four = SubsetTuple.from_sets(5, [{1, 3}, {2, 4}, {1, 5}, {2, 5}])
    for T, want in ((pent, 15), (four, 9)):
        S, L = build_reduced_multicore(T)
        c.check(tuple_weight(T) == want, f"tuple weight {T}")
        c.check(multi_weight(L, S, 5) == want, f"multicore weight {T}")
    cases.append(c)
    c = Case("bounds-table", "Q vs N at e=5")
    for r in range(2, 6):
        c.check(bd.Q_bound(r, 5)[0] == table.get((r, 5), bd.N_exact(r, 5)), f"r={r}")
    c.check(all(bd.idealbound_shift_check(r, 5) for r in (0, 1)), "ideal-bound shift r=0,1")
    c.check(all(bd.idealbound_antishift_check(r, 5) for r in (2, 3)), "antishift r=2,3")
    cases.append(c)
    return cases


def _shift_params(es, divides_only=False):
    for e in es:
        for eh in range(1, e):
            p = sh.ShiftParam(e, eh)
            if p.divides or not divides_only:
                yield p


def suite_shift(n_max=12, es=(2, 3, 4), seed=0):
    cases = []
    parts = list(partitions_upto(n_max))
    rng = random.Random(seed)
    for p in _shift_params(es):
        e = p.e
        c = Case("shift", f"e={e} ehat={p.ehat}")
        one = bl.const_one(e)
        for lam in parts:
            a = bl.block_of_partition(lam, 0, e)
            sl = sh.sigma_partition(lam, p)
            # sigma^d = id
            t = lam
            for _ in range(p.d):
                t = sh.sigma_partition(t, p)
            c.check(t == lam, f"order {lam}")
            c.check(ab.e_weight(sl, e) == ab.e_weight(lam, e), f"weight {lam}")
            q, q2 = ab.e_quotient(lam, 0, e), ab.e_quotient(sl, 0, e)
            c.check(all(q2[i] == q[(i + p.ehat) % e] for i in range(e)), f"quotient {lam}")
            good = a[0] == a[p.ehat]
            c.check((sl.size == lam.size) == good == (bl.block_of_partition(sl, 0, e) == sh.sigma_block(a, p)),
                    f"size criterion {lam}")
            core = ab.e_core(lam, e)
            c.check(ab.e_core(sl, e) == sh.sigma_core(core, p), f"core of sigma {lam}")
            # alpha(sigma~ core) = sigma alpha(core) + (c0 - c_ehat) 1
            ac = bl.block_of_partition(core, 0, e)
            delta = ac[0] - ac[p.ehat]
            c.check(bl.block_of_partition(sh.sigma_core(core, p), 0, e) == sh.sigma_block(ac, p) + delta * one,
                    f"alpha of shifted core {lam}")
            c.check(bl.s_core_of_block(sh.sigma_block(a, p), (0,))[0] ==
                    bl.block_of_partition(sh.sigma_core(core, p), 0, e), f"core shift {lam}")
            cls = sh.shift_block_membership(a, p)
            sa = sh.sigma_block(a, p)
            c.check((cls != "not-block") == bl.is_level_one_block(sa, 0), f"membership {lam}")
            c.check((cls == "block-and-core") == (bl.block_weight(sa, (0,)) == 0), f"core class {lam}")
            if p.divides:
                c.check(sh.pi_project(sa, p) == sh.pi_project(a, p), f"pi sigma {lam}")
                c.check(sh.pi_project(a, p) == bl.block_of_partition(lam, 0, p.ehat), f"pi residues {lam}")
        for _ in range(200):
            a = bl.BlockVector(e, [rng.randint(-6, 6) for _ in range(e)])
            sa = sh.sigma_block(a, p)
            c.check(bl.block_weight(sa, (0,)) == bl.block_weight(a, (0,)) + a[p.ehat] - a[0], f"weight shift {a}")
            c.check(sh.sigma_block(a + one, p) == sa + one, f"sigma 1 {a}")
            t = a
            for _ in range(p.d):
                t = sh.sigma_block(t, p)
            c.check(t == a, f"block order {a}")
        cases.append(c)
    return cases


def suite_stuttering(n_max=12, es=(2, 4, 6), core_max=20):
    cases = []
    for p in _shift_params(es, divides_only=True):
        e = p.e
        c = Case("stuttering", f"e={e} ehat={p.ehat}")
        for n in range(n_max + 1):
            by_block = {}
            for lam in partitions(n):
                by_block.setdefault(bl.block_of_partition(lam, 0, e), []).append(lam)
            for a, lams in by_block.items():
                fixed = [lam for lam in lams if sh.is_stuttering_partition(lam, p)]
                w = bl.block_weight(a, (0,))
                crit = sh.is_stuttering_block(a, p) and w % p.d == 0
                c.check(bool(fixed) == crit, f"equivalence {a.pretty()}")
                for lam in fixed:
                    c.check(ab.e_weight(lam, e) % p.d == 0, f"d | weight {lam}")
                if crit:
                    wit = sh.stuttering_witness(a, p)
                    c.check(bl.block_of_partition(wit, 0, e) == a and sh.is_stuttering_partition(wit, p),
                            f"witness {a.pretty()}")
                for lam in lams:
                    c.check(sh.ehat_core_checks(lam, p).passed, f"ehat checks {lam}")
        # (a) on e-cores up to core_max
        for m in range(core_max + 1):
            for lam in partitions(m):
                if ab.is_core(lam, e):
                    rep = sh.ehat_core_checks(lam, p)
                    c.check(rep.core_holds, f"ehat core {lam}")
        cases.append(c)
    return cases


SUITES = {
    "roundtrips": lambda cfg: suite_roundtrips(cfg.max_n, min(6, cfg.max_e)),
    "weights": lambda cfg: suite_weights(cfg.max_n, cfg.max_e),
    "level-one": lambda cfg: suite_level_one(cfg.max_n, tuple(e for e in (2, 3, 4, 5) if e <= cfg.max_e)),
    "theorem0": lambda cfg: suite_weight_membership(),
    "theoremC": lambda cfg: suite_superlevel(),
    "spectra": lambda cfg: suite_spectra(cfg.max_e),
    "bounds-table": lambda cfg: suite_bounds_table(cfg.max_r, cfg.max_e),
    "shift": lambda cfg: suite_shift(cfg.max_n, tuple(e for e in (2, 3, 4) if e <= cfg.max_e), cfg.seed),
    "stuttering": lambda cfg: suite_stuttering(cfg.max_n, tuple(e for e in (2, 4, 6) if e <= cfg.max_e)),
}


def run_suite(name: str, cfg: Config) -> SuiteReport:
    return SuiteReport(name, SUITES[name](cfg))


def _run(args):
    return run_suite(*args)


def run_suites(names, cfg: Config):
    names = sorted(SUITES) if "all" in names else sorted(set(names))
    if cfg.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(cfg.jobs) as ex:
            reports = list(ex.map(_run, [(n, cfg) for n in names]))
    else:
        reports = [run_suite(n, cfg) for n in names]
    for r in reports:
        r.cases.sort(key=lambda c: c.case_id)
    return sorted(reports, key=lambda r: r.suite)
