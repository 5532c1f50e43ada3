#!/usr/bin/env python3
"""Survey minimal constant solutions: sizes, irreducibility, and the open
questions around the prime-power constant family.

For each modulus the table lists, per residue k, the minimal size of the
constant solution (k, ..., k) and whether it is irreducible.  For prime
power moduli N = l^e the script also compares the known constant solution
of length 2*l^(e-1) with the true minimal size, since whether the two agree
in general is open; the output is experimental data, not a theorem.
"""

import argparse

from quiddity.modmat import psl2_order
from quiddity.monomial import minimal_monomial
from quiddity.solutions import is_irreducible


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-modulus", type=int, default=13)
    ap.add_argument("--family-bound", type=int, default=512,
                    help="check prime-power families with l^e up to this")
    args = ap.parse_args()

    for n_mod in range(2, args.max_modulus + 1):
        rows = []
        for k in range(n_mod):
            rec = minimal_monomial(n_mod, k)
            rows.append(f"k={k}: size {rec.minimal_size}"
                        + (" irreducible" if rec.irreducible else " reducible"))
        print(f"modulus {n_mod}")
        for r in rows:
            print("   " + r)

    print("\nprime-power constant families (length 2*l^(e-1) vs true minimum):")
    for l in range(2, 9):
        e = 2
        while l ** e <= args.family_bound:
            n_mod = l ** e
            family_len = 2 * l ** (e - 1)
            true_min = psl2_order(l, n_mod)
            minimal = "minimal" if true_min == family_len else f"NOT minimal (true {true_min})"
            irr = ""
            if family_len <= 40:
                irr = ", irreducible" if is_irreducible((l,) * family_len, n_mod) \
                    else ", reducible"
            print(f"   l={l} e={e} (N={n_mod}): family length {family_len}, {minimal}{irr}")
            e += 1


if __name__ == "__main__":
    main()
