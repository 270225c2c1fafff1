"""Membership vs weight on coefficient windows, for chosen (r, e) and multicharges.

Prints, per multicharge, how many window points are blocks, how many have
w >= 0, the smallest weight of a non-block, and whether the superlevel set
{w > N(r,e) - r} lies inside the blocks.

    python scripts/membership_windows.py -r 2 -e 4 -B 4
    python scripts/membership_windows.py -r 3 -e 3 -B 3 -S 0,0,1
"""
import argparse
from itertools import product

from coreblocks.blocks import BlockVector, block_weight, is_block
from coreblocks.bounds import N_exact


def charges_for(r, e):
    # multicharges (0, s_2, ..., s_r) with 0 <= s_2 <= ... < e
    out = []
    for rest in product(range(e), repeat=r - 1):
        if list(rest) == sorted(rest):
            out.append((0,) + rest)
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("-r", type=int, default=2)
    ap.add_argument("-e", type=int, default=3)
    ap.add_argument("-B", type=int, default=4, help="coefficients range over [-B, B]")
    ap.add_argument("-S", default=None, help="one multicharge, e.g. 0,1; default: all up to symmetry")
    args = ap.parse_args()

    r, e, B = args.r, args.e, args.B
    N = N_exact(r, e)
    charge_list = [tuple(int(t) for t in args.S.split(","))] if args.S else charges_for(r, e)
    print(f"r={r} e={e} N={N} window [-{B},{B}]^{e}")
    print("S\tblocks\tw>=0\tmin_w_nonblock\tsuperlevel_inside")
    for S in charge_list:
        n_block = n_pos = 0
        min_bad = None
        inside = True
        for coeffs in product(range(-B, B + 1), repeat=e):
            a = BlockVector(e, coeffs)
            w = block_weight(a, S)
            b = is_block(a, S)
            n_block += b
            n_pos += w >= 0
            if not b and w >= 0:
                min_bad = w if min_bad is None else min(min_bad, w)
            if w > N - r and not b:
                inside = False
        print(f"{','.join(map(str, S))}\t{n_block}\t{n_pos}\t{'' if min_bad is None else min_bad}\t{inside}")


if __name__ == "__main__":
    main()
