"""Table of N(r, e) with bounds, closed forms and witnesses, plus Q(r, e) vs N(r, e).

    python scripts/bound_table.py --max-r 8 --max-e 10 --out results/bounds.tsv
"""
import argparse
import csv
import sys
import time

from coreblocks.bounds import N_bounds, N_closed_form, Q_bound, maximise_weight
from coreblocks.errors import ResourceLimitError


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-r", type=int, default=6)
    ap.add_argument("--max-e", type=int, default=8)
    ap.add_argument("--strategy", default="equal_size", choices=["equal_size", "full"])
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    out = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.writer(out, delimiter="\t", lineterminator="\n")
    w.writerow(["r", "e", "N", "lower", "upper", "closed_form", "Q", "Q==N", "seconds", "witness"])
    for r in range(2, args.max_r + 1):
        for e in range(1, args.max_e + 1):
            t0 = time.time()
            try:
                n, wit = maximise_weight(r, e, args.strategy)
            except ResourceLimitError as exc:
                print(f"# skip r={r} e={e}: {exc}", file=sys.stderr)
                continue
            lo, hi = N_bounds(r, e) if e >= 2 else (0, 0)
            q = Q_bound(r, e)[0] if e >= 2 else 0
            cf = N_closed_form(r, e)
            w.writerow([r, e, n, lo, hi, "" if cf is None else cf, q, int(q == n),
                        f"{time.time() - t0:.2f}", wit])
    if args.out:
        out.close()


if __name__ == "__main__":
    main()
