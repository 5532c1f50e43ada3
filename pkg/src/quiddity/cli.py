"""Command-line surface.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success or a
passing verification, 1 a verification mismatch, 2 usage errors (including
searches over the work budget without --allow-large).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from . import enumeration, monomial
from .dissections import (
    MODULUS_KIND,
    build_dissection,
    eliminate_quads,
    quiddity,
    random_dissection,
    to_svg,
    triangulate,
)
from .enumeration import SearchConfig, WorkLimitExceeded
from .solutions import (
    canonicalize,
    find_decomposition,
    is_irreducible,
    is_reversal_symmetric,
    normalize_seq,
    oplus,
    solution_sign,
)

ENV_MODULUS = "QUIDDITY_MODULUS"


class UsageError(Exception):
    pass


def _parse_seq(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.strip().split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text.strip()!r}")


def _modulus(args) -> int:
    n = args.modulus
    if n is None and os.environ.get(ENV_MODULUS):
        n = int(os.environ[ENV_MODULUS])
    if n is None:
        raise UsageError("no modulus given (use --modulus or " + ENV_MODULUS + ")")
    if n == 1 or n < 0:
        raise UsageError(f"modulus must be 0 (integer mode) or >= 2, got {n}")
    return n


def _parse_sizes(args) -> tuple[int, ...]:
    if args.size is not None:
        return (args.size,)
    if args.sizes is not None:
        if ".." in args.sizes:
            lo, hi = args.sizes.split("..")
            return tuple(range(int(lo), int(hi) + 1))
        return tuple(int(s) for s in args.sizes.split(","))
    raise UsageError("give --size or --sizes")


def _emit(args, payload: dict, text_lines: list[str], csv_rows=None):
    fmt = getattr(args, "format", "text")
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    elif fmt == "csv":
        if csv_rows is None:
            raise UsageError("csv output is not defined for this command")
        for row in csv_rows:
            print(",".join(str(x) for x in row))
    else:
        for line in text_lines:
            print(line)


def _seq_payload(seq, n_mod: int) -> dict:
    sign = solution_sign(seq, n_mod)
    return {
        "modulus": n_mod,
        "seq": list(seq),
        "sign": sign,
        "canonical": list(canonicalize(seq)),
    }


# ---------------------------------------------------------------------------
# subcommands


def cmd_check(args) -> int:
    n = _modulus(args)
    seq = normalize_seq(_parse_seq(args.seq), n)
    sign = solution_sign(seq, n)
    payload = _seq_payload(seq, n)
    payload["solution"] = sign is not None
    if sign is None:
        _emit(args, payload, ["not a solution"])
    else:
        _emit(args, payload, [f"solution, sign={'+1' if sign > 0 else '-1'}"])
    return 0


def cmd_sum(args) -> int:
    n = _modulus(args)
    a = normalize_seq(_parse_seq(args.left), n)
    b = normalize_seq(_parse_seq(args.right), n)
    out = oplus(a, b, n)
    payload = _seq_payload(out, n)
    _emit(args, payload, [",".join(map(str, out))])
    return 0


def cmd_canon(args) -> int:
    n = _modulus(args)
    seq = normalize_seq(_parse_seq(args.seq), n)
    rep = canonicalize(seq)
    _emit(args, _seq_payload(rep, n), [",".join(map(str, rep))])
    return 0


def cmd_reduce(args) -> int:
    n = _modulus(args)
    if n == 0:
        raise UsageError("the splitting search is modular-only (modulus >= 2)")
    seq = normalize_seq(_parse_seq(args.seq), n)
    if solution_sign(seq, n) is None:
        raise UsageError(f"{','.join(map(str, seq))} is not a solution mod {n}")
    whitelist = None
    if args.right:
        whitelist = [_parse_seq(args.right)]
    w = find_decomposition(seq, n, whitelist)
    if w is None:
        payload = {"modulus": n, "seq": list(seq), "irreducible": is_irreducible(seq, n)}
        _emit(args, payload, ["irreducible" if payload["irreducible"]
                              else "no splitting (size 2 is never split)"])
        return 0
    payload = {
        "modulus": n,
        "seq": list(seq),
        "irreducible": False,
        "witness": {"left": list(w.left), "right": list(w.right), "transform": w.transform},
    }
    left = ",".join(map(str, w.left))
    right = ",".join(map(str, w.right))
    _emit(args, payload, [f"({left}) (+) ({right})  [dihedral transform {w.transform}]"])
    return 0


def cmd_enumerate(args) -> int:
    n = _modulus(args)
    if n < 2:
        raise UsageError("enumeration needs a modulus >= 2")
    alphabet = _parse_seq(args.alphabet) if args.alphabet else None
    sols = enumeration.enumerate_solutions(
        n, args.size, alphabet,
        shard_depth=args.shard_depth, shard_index=args.shard_index,
        shard_count=args.shard_count, allow_large=args.allow_large)
    payload = {"modulus": n, "n": args.size, "count": len(sols),
               "solutions": [list(s) for s in sols]}
    _emit(args, payload,
          [",".join(map(str, s)) for s in sols],
          csv_rows=[s for s in sols])
    return 0


def _classify_report(args, n: int):
    sizes = _parse_sizes(args)
    config = SearchConfig(
        modulus=n, sizes=sizes,
        irreducible_only=args.irreducible_only,
        shard_depth=args.shard_depth, shard_index=args.shard_index,
        shard_count=args.shard_count,
        keep_witnesses=getattr(args, "witnesses", False),
        allow_large=args.allow_large)
    jobs = getattr(args, "jobs", 1)
    if jobs > 1 and config.shard_count == 1:
        if not args.irreducible_only:
            raise UsageError("--jobs merges irreducible class sets only; add "
                             "--irreducible-only (or shard explicitly and merge "
                             "full reports yourself)")
        config = SearchConfig(
            modulus=n, sizes=sizes, irreducible_only=args.irreducible_only,
            shard_depth=max(args.shard_depth, 1), shard_index=0, shard_count=jobs,
            keep_witnesses=getattr(args, "witnesses", False),
            allow_large=args.allow_large)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(enumeration.run_shard, [config] * jobs, range(jobs)))
        merged = enumeration.merge_class_sets(reports)
        sizes_reports = []
        for size in sorted(sizes):
            irr = sorted(merged.get(size, set()))
            cyclic = sum(1 if is_reversal_symmetric(rep) else 2 for rep in irr)
            sizes_reports.append(enumeration.SizeReport(size, None, irr, None, cyclic))
        return enumeration.ClassificationReport(n, sizes_reports,
                                                sum(r.elapsed_s for r in reports))
    return enumeration.classify(config)


def cmd_classify(args) -> int:
    n = _modulus(args)
    report = _classify_report(args, n)
    lines = []
    rows = []
    for s in report.sizes:
        head = f"n={s.size}:"
        if s.total_classes is not None:
            head += f" {s.total_classes} classes, {s.reducible_count} reducible,"
        head += f" {len(s.irreducible)} irreducible"
        lines.append(head)
        for rep in s.irreducible:
            lines.append("  " + ",".join(map(str, rep)))
            rows.append((s.size,) + rep)
    _emit(args, report.to_dict(), lines, csv_rows=rows)
    return 0


def cmd_verify(args) -> int:
    n = _modulus(args)
    sizes = None
    if args.sizes is not None or args.size is not None:
        sizes = _parse_sizes(args)
    report = enumeration.verify_expected(n, sizes, allow_large=args.allow_large)
    lines = [f"modulus {n}, sizes {report.sizes[0]}..{report.sizes[-1]}: "
             + ("PASS" if report.passed else "FAIL")]
    for s in report.missing:
        lines.append("missing: " + ",".join(map(str, s)))
    for s in report.extra:
        lines.append("extra:   " + ",".join(map(str, s)))
    _emit(args, report.to_dict(), lines)
    return 0 if report.passed else 1


def cmd_monomial(args) -> int:
    n = _modulus(args)
    if n < 2:
        raise UsageError("monomial analysis needs a modulus >= 2")
    if args.k is not None:
        rec = monomial.minimal_monomial(n, args.k)
        lines = [f"k={rec.k}: minimal size {rec.minimal_size}, "
                 + ("irreducible" if rec.irreducible else "reducible")]
        if rec.witness:
            lines.append("  witness: (%s) (+) (%s)" % (
                ",".join(map(str, rec.witness.left)),
                ",".join(map(str, rec.witness.right))))
        _emit(args, rec.to_dict(), lines)
        return 0
    report = monomial.monomial_theorem_report(n)
    lines = [f"modulus {n}: " + ("PASS" if report.passed else "FAIL")]
    for c in report.checks:
        lines.append(("  ok  " if c.passed else "  BAD ") + c.description)
    _emit(args, report.to_dict(), lines)
    return 0 if report.passed else 1


def _dissect_common(args, d) -> int:
    q = quiddity(d)
    payload = d.to_dict()
    payload["quiddity"] = list(q)
    if args.format == "svg":
        print(to_svg(d))
        return 0
    lines = [f"{d.kind} dissection of an {d.n}-gon; quiddity " + ",".join(map(str, q))]
    for c in d.cells:
        w = "" if c.weight is None else f" weight {c.weight}"
        lines.append("  cell " + "-".join(map(str, c.vertices)) + w)
    for a, b in d.pairs:
        lines.append(f"  split pair: cells {a} and {b}")
    _emit(args, payload, lines)
    return 0


def cmd_dissect(args) -> int:
    n = _modulus(args)
    if n not in MODULUS_KIND:
        raise UsageError("dissection models exist for moduli 2, 3 and 4")
    if args.random is not None:
        d = random_dissection(args.random, MODULUS_KIND[n], args.seed)
        return _dissect_common(args, d)
    if not args.seq:
        raise UsageError("give a sequence or --random N")
    seq = normalize_seq(_parse_seq(args.seq), n)
    try:
        d = build_dissection(seq, n)
    except ValueError as exc:
        raise UsageError(str(exc))
    return _dissect_common(args, d)


def cmd_triangulate(args) -> int:
    n = _modulus(args)
    if n not in MODULUS_KIND:
        raise UsageError("dissection models exist for moduli 2, 3 and 4")
    seq = normalize_seq(_parse_seq(args.seq), n)
    try:
        if args.via_rewrite:
            d = eliminate_quads(build_dissection(seq, n))
        else:
            d = triangulate(seq, n)
    except ValueError as exc:
        raise UsageError(str(exc))
    return _dissect_common(args, d)


def cmd_evidence(args) -> int:
    n = _modulus(args)
    if n < 2:
        raise UsageError("evidence scans need a modulus >= 2")
    report = enumeration.evidence_scan(n, args.n_max, allow_large=args.allow_large)
    lines = [f"modulus {n}, scanned sizes 3..{report.n_max} ({report.note})"]
    for size, count in sorted(report.per_size.items()):
        lines.append(f"  n={size}: {count} irreducible classes")
    lines.append(f"largest irreducible size found: {report.max_irreducible_size}")
    _emit(args, report.to_dict(), lines)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_common(p, formats=("text", "json")):
    p.add_argument("--modulus", "-N", type=int, default=None,
                   help="modulus (0 = integer mode); falls back to $" + ENV_MODULUS)
    p.add_argument("--format", choices=formats, default="text")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quiddity",
                                 description="solution calculus for the +/-identity "
                                             "congruence on products of elementary matrices")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test whether a sequence is a solution")
    _add_common(p)
    p.add_argument("seq")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sum", help="glue two sequences")
    _add_common(p)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("canon", help="canonical representative under rotation/reversal")
    _add_common(p)
    p.add_argument("seq")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("reduce", help="find a splitting witness or report irreducible")
    _add_common(p)
    p.add_argument("seq")
    p.add_argument("--right", default=None,
                   help="restrict the right part to this class (comma-separated)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("enumerate", help="all solutions of one size")
    _add_common(p, formats=("text", "json", "csv"))
    p.add_argument("--size", "-n", type=int, required=True)
    p.add_argument("--alphabet", default=None, help="restrict entries, e.g. 2,3")
    p.add_argument("--shard-depth", type=int, default=0)
    p.add_argument("--shard-index", type=int, default=0)
    p.add_argument("--shard-count", type=int, default=1)
    p.add_argument("--allow-large", action="store_true",
                   help="override the work budget (prints a warning)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="canonical classes per size, with irreducibility")
    _add_common(p, formats=("text", "json", "csv"))
    p.add_argument("--size", type=int, default=None)
    p.add_argument("--sizes", default=None, help="e.g. 3..8 or 3,4,5")
    p.add_argument("--irreducible-only", action="store_true")
    p.add_argument("--witnesses", action="store_true",
                   help="record a splitting witness for each reducible class")
    p.add_argument("--shard-depth", type=int, default=0)
    p.add_argument("--shard-index", type=int, default=0)
    p.add_argument("--shard-count", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1, help="fan shards out over processes")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="compare classification against the packaged lists")
    _add_common(p)
    p.add_argument("--size", type=int, default=None)
    p.add_argument("--sizes", default=None)
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("monomial", help="constant-tuple solutions")
    _add_common(p)
    p.add_argument("--k", type=int, default=None,
                   help="residue; omit to run the irreducibility fact checks")
    p.set_defaults(func=cmd_monomial)

    p = sub.add_parser("dissect", help="realize a solution as a polygon dissection")
    _add_common(p, formats=("text", "json", "svg"))
    p.add_argument("seq", nargs="?")
    p.add_argument("--random", type=int, default=None, metavar="NGON",
                   help="generate a random dissection instead")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_dissect)

    p = sub.add_parser("triangulate", help="all-triangle dissection for a solution")
    _add_common(p, formats=("text", "json", "svg"))
    p.add_argument("seq")
    p.add_argument("--via-rewrite", action="store_true",
                   help="mod 3: build any dissection, then fan quads away")
    p.set_defaults(func=cmd_triangulate)

    p = sub.add_parser("evidence", help="finiteness-conjecture scan (evidence only)")
    _add_common(p)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_evidence)

    return ap


_NEGATIVE_SEQ = re.compile(r"^-\d+(,-?\d+)*$")


def _shield_negative_seqs(argv):
    # a sequence like -1,-1,-1 would otherwise parse as an option; a leading
    # space makes argparse treat it as positional, and int() strips it
    return [" " + tok if _NEGATIVE_SEQ.match(tok) else tok for tok in argv]


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_shield_negative_seqs(list(argv)))
    if getattr(args, "allow_large", False):
        print("warning: work budget override active", file=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except WorkLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
