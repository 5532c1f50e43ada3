#!/usr/bin/env python3
"""Which solutions are quiddities of all-triangle weighted dissections?

Characterizing the triangulation-compatible solutions for a general modulus
is open.  This experiment enumerates every triangulation of an n-gon with
every +/-1 weight assignment, collects the resulting quiddities mod N, and
compares them against the solution classes of that size.  Observations
only; no characterization is claimed.

Example:
    python scripts/triangulation_search.py --modulus 5 --max-size 8
"""

import argparse
from itertools import product

from quiddity.enumeration import enumerate_solutions
from quiddity.solutions import canonicalize, is_solution


def triangulations(vertices):
    """All triangulations of the convex polygon on the given labels."""
    if len(vertices) < 3:
        yield []
        return
    a, b = vertices[0], vertices[-1]
    for i in range(1, len(vertices) - 1):
        apex = vertices[i]
        for left in triangulations(vertices[:i + 1]):
            for right in triangulations(vertices[i:]):
                yield [(a, apex, b)] + left + right


def quiddities(size, n_mod):
    found = set()
    for tris in triangulations(list(range(size))):
        for weights in product((1, n_mod - 1), repeat=len(tris)):
            acc = [0] * size
            for (x, y, z), w in zip(tris, weights):
                acc[x] += w
                acc[y] += w
                acc[z] += w
            found.add(canonicalize(tuple(a % n_mod for a in acc)))
    return found


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--modulus", type=int, default=5)
    ap.add_argument("--max-size", type=int, default=8)
    args = ap.parse_args()
    n_mod = args.modulus

    for size in range(3, args.max_size + 1):
        reachable = quiddities(size, n_mod)
        classes = {canonicalize(s) for s in enumerate_solutions(n_mod, size)}
        non_solutions = {q for q in reachable if not is_solution(q, n_mod)}
        compatible = reachable & classes
        missed = sorted(classes - reachable)
        print(f"n={size}: {len(classes)} solution classes, "
              f"{len(compatible)} triangulation-compatible, {len(missed)} not")
        for q in missed[:10]:
            print("   unreachable: " + ",".join(map(str, q)))
        if non_solutions:
            print(f"   !! {len(non_solutions)} quiddities are not solutions")
    print("observations only; nothing here is a characterization")


if __name__ == "__main__":
    main()
