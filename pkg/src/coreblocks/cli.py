"""coreblocks command line.

Exit codes: 0 ok, 1 domain error or failed verification, 2 usage/parse error,
3 resource limit. Literals starting with '-' (e.g. block "-1,2") go after '--'.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import abacus as ab
from . import blocks as bl
from . import bounds as bd
from . import shift as sh
from . import verify
from .config import Config
from .errors import DomainError, ParseError, ResourceLimitError
from .multipartition import multi_block, multi_weight, parse_multipartition
from .partition_core import parse_partition


def _charges(text):
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ParseError(f"bad multicharge {text!r}") from None


def _need_e(args):
    if args.e is None:
        raise ParseError("this command needs -e")
    return args.e


def _emit(args, payload, text, rows=None):
    """payload -> json; rows (list of lists, first is the header) -> tsv; text otherwise."""
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "tsv":
        if rows is None:
            rows = [list(payload), [payload[k] for k in payload]]
        for row in rows:
            print("\t".join("" if v is None else str(v) for v in row))
    else:
        print(text)


def _multi(args, text):
    """Multipartition literal with its multicharge (from -S, or -s repeated)."""
    lam = parse_multipartition(text)
    S = _charges(args.S) if args.S else (args.s,) * lam.r
    return lam, S


# ---------------------------------------------------------------------------

def cmd_core(args):
    lam = parse_partition(args.partition)
    core = ab.e_core(lam, _need_e(args))
    _emit(args, {"core": str(core), "weight": ab.e_weight(lam, args.e)}, str(core))


def cmd_quotient(args):
    lam = parse_partition(args.partition)
    q = ab.e_quotient(lam, args.s, _need_e(args))
    _emit(args, {"quotient": [str(p) for p in q], "charge": args.s}, str(q))


def cmd_weight(args):
    e = _need_e(args)
    if args.block:
        a = bl.parse_block(args.literal, e)
        S = _charges(args.S) if args.S else (args.s,)
        w = bl.block_weight(a, S)
    elif "|" in args.literal:
        lam, S = _multi(args, args.literal)
        w = multi_weight(lam, S, e, args.method)
    else:
        w = ab.e_weight(parse_partition(args.literal), e)
    _emit(args, {"weight": w}, str(w))


def cmd_block(args):
    e = _need_e(args)
    if args.test:
        a = bl.parse_block(args.literal, e)
        S = _charges(args.S) if args.S else (args.s,)
        member = bl.is_block(a, S, limits=args.config.limits)
        core = member and bl.is_core_block(a, S, limits=args.config.limits)
        payload = {"block": a.to_json(), "charges": list(S), "is_block": member,
                   "is_core_block": core, "weight": bl.block_weight(a, S)}
        text = ("core-block" if core else "block") if member else "not-block"
        _emit(args, payload, text)
        return
    if "|" in args.literal:
        lam, S = _multi(args, args.literal)
        a = multi_block(lam, S, e)
    else:
        a = bl.block_of_partition(parse_partition(args.literal), args.s, e)
    _emit(args, {"block": a.to_json()}, str(a))


def cmd_score(args):
    e = _need_e(args)
    a = bl.parse_block(args.block, e)
    S = _charges(args.S) if args.S else (args.s,)
    core, h = bl.s_core_of_block(a, S, limits=args.config.limits)
    _emit(args, {"core": core.to_json(), "h": h}, f"{core} {h}")


def cmd_shift(args):
    e = _need_e(args)
    if args.ehat is None:
        raise ParseError("shift needs --ehat")
    if args.s != 0:
        raise DomainError("the shift is only defined at charge 0")
    p = sh.ShiftParam(e, args.ehat)
    if args.block:
        a = bl.parse_block(args.literal, e)
        sa = sh.sigma_block(a, p)
        cls = sh.shift_block_membership(a, p) if bl.is_level_one_block(a, 0) else None
        _emit(args, {"sigma": sa.to_json(), "class": cls}, f"{sa} {cls}" if cls else str(sa))
    elif args.core:
        out = sh.sigma_core(parse_partition(args.literal), p)
        _emit(args, {"sigma_core": str(out)}, str(out))
    else:
        out = sh.sigma_partition(parse_partition(args.literal), p)
        _emit(args, {"sigma": str(out)}, str(out))


def cmd_abacus(args):
    lam = parse_partition(args.partition)
    prof = ab.abacus_profile(lam, args.s, _need_e(args))
    payload = {"e": prof.e, "charge": prof.charge, "floor": prof.floor,
               "runners": [list(r) for r in prof.runners]}
    _emit(args, payload, prof.render())


def _bound_row(r, e, strategy, limits):
    value, wit = bd.maximise_weight(r, e, strategy, limits)
    lo, hi = bd.N_bounds(r, e) if e >= 2 else (0, 0)
    return [r, e, value, lo, hi, bd.N_closed_form(r, e), str(wit)]


BOUND_HEADER = ["r", "e", "N", "lower", "upper", "closed_form", "witness"]


def cmd_bound(args):
    lim = args.config.limits
    if args.table:
        rows = [_bound_row(r, e, args.strategy, lim)
                for r in range(2, args.config.max_r + 1) for e in range(1, args.config.max_e + 1)]
        payload = [dict(zip(BOUND_HEADER, row)) for row in rows]
        text = "\n".join("\t".join("" if v is None else str(v) for v in row) for row in [BOUND_HEADER] + rows)
        _emit(args, payload, text, [BOUND_HEADER] + rows)
        return
    if args.r is None or args.e_pos is None:
        raise ParseError("bound needs r and e (or --table)")
    r, e = args.r, args.e_pos
    if args.exact:
        v = bd.N_exact(r, e, args.strategy, lim)
        _emit(args, {"r": r, "e": e, "N": v}, str(v))
    elif args.closed:
        v = bd.N_closed_form(r, e)
        if v is None:
            raise DomainError(f"no closed form known for (r, e) = ({r}, {e})")
        _emit(args, {"r": r, "e": e, "closed_form": v}, str(v))
    elif args.bounds:
        lo, hi = bd.N_bounds(r, e)
        _emit(args, {"r": r, "e": e, "lower": lo, "upper": hi}, f"{lo} {hi}")
    else:
        row = _bound_row(r, e, args.strategy, lim)
        _emit(args, dict(zip(BOUND_HEADER, row)), "\t".join("" if v is None else str(v) for v in row),
              [BOUND_HEADER, row])


def cmd_verify(args):
    reports = verify.run_suites([args.suite], args.config)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        print(json.dumps({"passed": ok, "suites": [r.to_json() for r in reports]}, sort_keys=True))
    else:
        sep = "\t" if args.format == "tsv" else " "
        for r in reports:
            for c in r.cases:
                line = [r.suite, c.case_id, "PASS" if c.passed else "FAIL", c.checked]
                if not c.passed:
                    line.append(c.counterexample)
                print(sep.join(map(str, line)))
        print("PASS" if ok else "FAIL")
    return 0 if ok else 1


# ---------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-e", type=int, default=None, help="modulus e (0 means no reduction)")
    common.add_argument("-s", type=int, default=0, help="charge")
    common.add_argument("-S", default=None, help="multicharge, e.g. 0,1")
    common.add_argument("--ehat", type=int, default=None)
    common.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-n", type=int, default=12)
    common.add_argument("--max-e", type=int, default=8)
    common.add_argument("--max-r", type=int, default=6)
    common.add_argument("--jobs", type=int, default=1)

    p = argparse.ArgumentParser(prog="coreblocks", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    q = sub.add_parser("core", parents=[common], help="e-core of a partition")
    q.add_argument("partition")
    q.set_defaults(func=cmd_core)

    q = sub.add_parser("quotient", parents=[common], help="charged e-quotient")
    q.add_argument("partition")
    q.set_defaults(func=cmd_quotient)

    q = sub.add_parser("weight", parents=[common], help="weight of a partition, multipartition or block")
    q.add_argument("literal")
    q.add_argument("--block", action="store_true", help="read the literal as a block vector")
    q.add_argument("--method", choices=("definition", "pairwise", "two_sets"), default="definition")
    q.set_defaults(func=cmd_weight)

    q = sub.add_parser("block", parents=[common], help="block of a (multi)partition, or --test a block")
    q.add_argument("literal")
    q.add_argument("--test", action="store_true", help="test membership of a block literal")
    q.set_defaults(func=cmd_block)

    q = sub.add_parser("score", parents=[common], help="S-core block alpha - h*1 and h")
    q.add_argument("block")
    q.set_defaults(func=cmd_score)

    q = sub.add_parser("shift", parents=[common], help="shift of a partition, block (--block) or core (--core)")
    q.add_argument("literal")
    g = q.add_mutually_exclusive_group()
    g.add_argument("--block", action="store_true")
    g.add_argument("--core", action="store_true")
    q.set_defaults(func=cmd_shift)

    q = sub.add_parser("abacus", parents=[common], help="render the charged e-abacus")
    q.add_argument("partition")
    q.set_defaults(func=cmd_abacus)

    q = sub.add_parser("bound", parents=[common], help="N(r, e): exact, closed form, bounds or a table")
    q.add_argument("r", type=int, nargs="?")
    q.add_argument("e_pos", metavar="e", type=int, nargs="?")
    g = q.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true")
    g.add_argument("--closed", action="store_true")
    g.add_argument("--bounds", action="store_true")
    g.add_argument("--table", action="store_true", help="rows for 2<=r<=max-r, 1<=e<=max-e")
    q.add_argument("--strategy", choices=("full", "equal_size", "enumerate"), default="equal_size")
    q.set_defaults(func=cmd_bound)

    q = sub.add_parser("verify", parents=[common], help="run a verification suite")
    q.add_argument("suite", choices=sorted(verify.SUITES) + ["all"])
    q.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.config = Config(max_n=args.max_n, max_e=args.max_e, max_r=args.max_r,
                             fmt=args.format, jobs=args.jobs, seed=args.seed)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        return args.func(args) or 0
    except ParseError as exc:
        print(f"coreblocks: parse error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"coreblocks: resource limit: {exc}", file=sys.stderr)
        return 3
    except (DomainError, OverflowError) as exc:
        print(f"coreblocks: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
