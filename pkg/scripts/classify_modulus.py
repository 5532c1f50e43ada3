#!/usr/bin/env python3
"""Classify solution classes for one modulus and print a summary table.

Example:
    python scripts/classify_modulus.py 8 --sizes 3..8 --irreducible-only
"""

import argparse
import json
import sys
from pathlib import Path

from quiddity.enumeration import SearchConfig, classify


def parse_sizes(text):
    if ".." in text:
        lo, hi = text.split("..")
        return tuple(range(int(lo), int(hi) + 1))
    return tuple(int(s) for s in text.split(","))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("modulus", type=int)
    ap.add_argument("--sizes", default="3..8")
    ap.add_argument("--irreducible-only", action="store_true")
    ap.add_argument("--allow-large", action="store_true")
    ap.add_argument("--json", type=Path, default=None, help="also dump the report here")
    args = ap.parse_args()

    report = classify(SearchConfig(
        modulus=args.modulus, sizes=parse_sizes(args.sizes),
        irreducible_only=args.irreducible_only, allow_large=args.allow_large))
    print(f"modulus {args.modulus}  ({report.elapsed_s:.2f}s)")
    print(f"{'n':>3}  {'classes':>8}  {'reducible':>9}  {'irreducible':>11}")
    for s in report.sizes:
        total = "-" if s.total_classes is None else s.total_classes
        red = "-" if s.reducible_count is None else s.reducible_count
        print(f"{s.size:>3}  {total:>8}  {red:>9}  {len(s.irreducible):>11}")
        for rep in s.irreducible:
            print(" " * 6 + ",".join(map(str, rep)))
    if args.json:
        args.json.write_text(report.to_json() + "\n")
        print(f"wrote {args.json}", file=sys.stderr)


if __name__ == "__main__":
    main()
