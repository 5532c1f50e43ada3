#!/usr/bin/env python3
"""Sweep moduli and report the largest irreducible size seen up to a bound.

Evidence gathering for the finiteness conjectures: a clean sweep proves
nothing beyond the scanned bound, and the output says so.

Example:
    python scripts/evidence_sweep.py --max-modulus 9 --extra 3
"""

import argparse

from quiddity.enumeration import evidence_scan


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--min-modulus", type=int, default=2)
    ap.add_argument("--max-modulus", type=int, default=8)
    ap.add_argument("--extra", type=int, default=3,
                    help="scan sizes up to modulus + extra")
    ap.add_argument("--allow-large", action="store_true")
    args = ap.parse_args()

    print(f"{'N':>3}  {'n_max':>5}  {'largest irreducible':>19}  counts per size")
    for n_mod in range(args.min_modulus, args.max_modulus + 1):
        rep = evidence_scan(n_mod, n_mod + args.extra, allow_large=args.allow_large)
        counts = " ".join(f"{k}:{v}" for k, v in sorted(rep.per_size.items()) if v)
        print(f"{n_mod:>3}  {rep.n_max:>5}  {str(rep.max_irreducible_size):>19}  {counts}")
    print("note: evidence only; sizes beyond each scan bound are untested")


if __name__ == "__main__":
    main()
