"""Exhaustive enumeration and classification of solutions.

The core search fixes a prefix (a1, ..., a_{n-2}) and solves for the last
two entries instead of scanning them: if P is the product of the prefix
factors, the tail factors must multiply to eps * P^{-1}, which pins both
remaining entries whenever eps * P[0][0] == -1 (the determinant makes the
fourth entry agree automatically).  That cuts the search space from N^n to
N^{n-2} prefixes.  Prefix products are walks on the finite group SL2(Z/NZ),
so the DFS runs on a precomputed index table with the tail solutions
attached to each group element.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field, replace
from functools import lru_cache
from importlib import resources
from itertools import product as iter_product

from .modmat import IDENTITY, check_modulus, generator, generator_product, mat_mul, pm_identity_sign, residue
from .solutions import (
    Seq,
    canonicalize,
    find_decomposition,
    is_irreducible,
    is_reversal_symmetric,
    Witness,
)

DEFAULT_WORK_LIMIT = 4_000_000  # prefix probes per size; ~seconds of CPU


class WorkLimitExceeded(RuntimeError):
    """Raised when a search would exceed its probe budget without an override."""


@lru_cache(maxsize=None)
def _group_tables(n: int):
    """BFS closure of the generator factors inside SL2(Z/NZ).

    Returns (elements, step, tails): ``step[a][g]`` is the index of
    generator(a) * elements[g], and ``tails[g]`` lists the (a_{n-1}, a_n)
    pairs completing any prefix whose product is elements[g] to a solution.
    """
    index = {IDENTITY: 0}
    elements = [IDENTITY]
    gens = [generator(a, n) for a in range(n)]
    step = [[] for _ in range(n)]
    head = 0
    while head < len(elements):
        m = elements[head]
        for a in range(n):
            t = mat_mul(gens[a], m, n)
            j = index.get(t)
            if j is None:
                j = len(elements)
                index[t] = j
                elements.append(t)
            step[a].append(j)
        head += 1
    minus_one = residue(-1, n)
    signs = (1,) if minus_one == 1 else (1, -1)
    tails = []
    for p11, p12, p21, _ in elements:
        pairs = []
        for eps in signs:
            if (eps * p11 - minus_one) % n == 0:
                pairs.append(((-eps * p21) % n, (eps * p12) % n))
        tails.append(tuple(pairs))
    return elements, step, tails


def _check_work(count: int, work_limit: int, allow_large: bool):
    if count > work_limit and not allow_large:
        raise WorkLimitExceeded(
            f"search needs {count} prefix probes, over the budget of {work_limit}; "
            "pass the large-search override to run it anyway")


def enumerate_solutions(n_mod: int, size: int, alphabet=None,
                        shard_depth: int = 0, shard_index: int = 0, shard_count: int = 1,
                        work_limit: int = DEFAULT_WORK_LIMIT,
                        allow_large: bool = False) -> list[Seq]:
    """All size-``size`` solution tuples mod ``n_mod``, sorted.

    ``alphabet`` restricts every entry to the given residues (default: all).
    Sharding splits the fixed-depth DFS prefixes round-robin; the shards are
    disjoint and their union over all indices is the full result.
    """
    check_modulus(n_mod)
    if n_mod < 2:
        raise ValueError("enumeration needs a modulus >= 2")
    if size < 2:
        raise ValueError("solutions exist only for size >= 2")
    if not (0 <= shard_index < shard_count):
        raise ValueError("shard index out of range")
    if alphabet is None:
        alphabet = tuple(range(n_mod))
    else:
        alphabet = tuple(sorted({a % n_mod for a in alphabet}))
        if not alphabet:
            return []
    _check_work(len(alphabet) ** (size - 2), work_limit, allow_large)

    _, step, tails = _group_tables(n_mod)
    allowed = None
    if len(alphabet) != n_mod:
        allowed = set(alphabet)

    out: list[Seq] = []
    path: list[int] = []
    rows = [(a, step[a]) for a in alphabet]

    def dfs(remaining: int, g: int):
        if remaining == 0:
            pairs = tails[g]
            if pairs:
                base = tuple(path)
                for u, v in pairs:
                    if allowed is None or (u in allowed and v in allowed):
                        out.append(base + (u, v))
            return
        remaining -= 1
        for a, row in rows:
            path.append(a)
            dfs(remaining, row[g])
            path.pop()

    if shard_count == 1:
        dfs(size - 2, 0)
    else:
        # split by DFS prefix, round-robin on the prefix rank; a sharding
        # depth of at least 1 keeps shards disjoint whenever a prefix exists
        depth = min(max(shard_depth, 1), size - 2)
        for rank, prefix in enumerate(iter_product(alphabet, repeat=depth)):
            if rank % shard_count != shard_index:
                continue
            g = 0
            for a in prefix:
                g = step[a][g]
            path[:] = list(prefix)
            dfs(size - 2 - depth, g)
            path.clear()
    out.sort()
    return out


def enumerate_naive(n_mod: int, size: int) -> list[Seq]:
    """Plain N^size filter; the independent cross-check for the DFS search."""
    check_modulus(n_mod)
    out = [seq for seq in iter_product(range(n_mod), repeat=size)
           if pm_identity_sign(generator_product(seq, n_mod), n_mod) is not None]
    return out


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class SearchConfig:
    modulus: int
    sizes: tuple[int, ...]
    irreducible_only: bool = False
    shard_depth: int = 0
    shard_index: int = 0
    shard_count: int = 1
    keep_witnesses: bool = False
    work_limit: int = DEFAULT_WORK_LIMIT
    allow_large: bool = False

    def __post_init__(self):
        check_modulus(self.modulus)
        if self.modulus < 2:
            raise ValueError("classification needs a modulus >= 2")
        if not self.sizes or min(self.sizes) < 2:
            raise ValueError("sizes must all be >= 2")
        if not (0 <= self.shard_index < self.shard_count):
            raise ValueError("shard index out of range")


@dataclass
class SizeReport:
    size: int
    total_classes: int | None
    irreducible: list[Seq]
    reducible_count: int | None
    cyclic_irreducible_count: int
    witnesses: dict[Seq, Witness] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {
            "n": self.size,
            "total_classes": self.total_classes,
            "irreducible": [list(s) for s in self.irreducible],
            "reducible_count": self.reducible_count,
            "cyclic_irreducible_count": self.cyclic_irreducible_count,
        }
        if self.witnesses:
            d["witnesses"] = {
                ",".join(map(str, k)): {
                    "left": list(w.left), "right": list(w.right),
                    "transform": w.transform}
                for k, w in self.witnesses.items()}
        return d


@dataclass
class ClassificationReport:
    modulus: int
    sizes: list[SizeReport]
    elapsed_s: float

    def to_dict(self, with_timing: bool = True) -> dict:
        d = {"modulus": self.modulus, "sizes": [s.to_dict() for s in self.sizes]}
        if with_timing:
            d["elapsed_s"] = self.elapsed_s
        return d

    def to_json(self, with_timing: bool = True) -> str:
        return json.dumps(self.to_dict(with_timing), sort_keys=True)

    def irreducible_classes(self) -> set[Seq]:
        return {rep for s in self.sizes for rep in s.irreducible}


def _irreducible_alphabet(n_mod: int, size: int) -> tuple[int, ...]:
    # Entries +/-1 make any solution of size >= 4 reducible, and entry 0 any
    # of size >= 5, so those letters cannot occur in an irreducible one.
    one, minus = 1 % n_mod, (n_mod - 1) % n_mod
    if size == 3:
        return tuple(sorted({one, minus}))
    banned = {one, minus} if size == 4 else {0, one, minus}
    return tuple(a for a in range(n_mod) if a not in banned)


def classify(config: SearchConfig) -> ClassificationReport:
    """Canonical solution classes per size, each tested for irreducibility.

    With ``irreducible_only`` the per-size alphabet drops letters that force
    reducibility, so reducible classes are neither listed nor counted.
    """
    t0 = time.perf_counter()
    n_mod = config.modulus
    size_reports = []
    for size in sorted(config.sizes):
        alphabet = None
        if config.irreducible_only and size >= 3:
            alphabet = _irreducible_alphabet(n_mod, size)
        tuples = enumerate_solutions(
            n_mod, size, alphabet,
            config.shard_depth, config.shard_index, config.shard_count,
            config.work_limit, config.allow_large)
        classes = sorted({canonicalize(s) for s in tuples})
        irreducible = []
        witnesses = {}
        for rep in classes:
            if size == 2 or not is_irreducible(rep, n_mod):
                if config.keep_witnesses and size >= 3:
                    witnesses[rep] = find_decomposition(rep, n_mod)
            else:
                irreducible.append(rep)
        cyclic = sum(1 if is_reversal_symmetric(rep) else 2 for rep in irreducible)
        if config.irreducible_only:
            total = reducible = None
        else:
            total = len(classes)
            reducible = total - len(irreducible)
        size_reports.append(SizeReport(size, total, irreducible, reducible, cyclic, witnesses))
    return ClassificationReport(n_mod, size_reports, time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# reference lists


def load_reference(n_mod: int) -> list[tuple[Seq, str]]:
    """Packaged list of known irreducible classes for moduli 2..7."""
    if not 2 <= n_mod <= 7:
        raise ValueError(f"no packaged reference list for modulus {n_mod}")
    text = resources.files("quiddity.data").joinpath(f"irreducible_mod{n_mod}.json").read_text()
    payload = json.loads(text)
    if payload["modulus"] != n_mod:
        raise ValueError("reference file modulus mismatch")
    return [(tuple(e["seq"]), e["label"]) for e in payload["entries"]]


def reference_classes(n_mod: int) -> dict[int, set[Seq]]:
    """Reference lists canonicalized and grouped by size (orbit-level sets)."""
    by_size: dict[int, set[Seq]] = {}
    for seq, _ in load_reference(n_mod):
        by_size.setdefault(len(seq), set()).add(canonicalize(seq))
    return by_size


def default_verify_sizes(n_mod: int) -> tuple[int, ...]:
    top = max(8, max(reference_classes(n_mod)))
    return tuple(range(3, top + 1))


@dataclass
class VerifyReport:
    modulus: int
    sizes: tuple[int, ...]
    passed: bool
    missing: list[Seq]  # expected but not found
    extra: list[Seq]    # found but not expected
    found: ClassificationReport

    def to_dict(self, with_timing: bool = True) -> dict:
        return {
            "modulus": self.modulus,
            "sizes": list(self.sizes),
            "passed": self.passed,
            "missing": [list(s) for s in self.missing],
            "extra": [list(s) for s in self.extra],
            "classification": self.found.to_dict(with_timing),
        }


def verify_expected(n_mod: int, sizes=None, work_limit: int = DEFAULT_WORK_LIMIT,
                    allow_large: bool = False) -> VerifyReport:
    """Compare the classified irreducibles against the packaged reference list.

    The comparison is orbit-level set equality over the scanned sizes:
    a class is compared through its canonical representative, so the
    reference presentation (which lists some classes through several
    rotations) cannot skew the diff.
    """
    expected = reference_classes(n_mod)
    sizes = tuple(sizes) if sizes is not None else default_verify_sizes(n_mod)
    report = classify(SearchConfig(
        modulus=n_mod, sizes=sizes, irreducible_only=True,
        work_limit=work_limit, allow_large=allow_large))
    found = report.irreducible_classes()
    want = {rep for size, reps in expected.items() if size in sizes for rep in reps}
    missing = sorted(want - found, key=lambda s: (len(s), s))
    extra = sorted(found - want, key=lambda s: (len(s), s))
    return VerifyReport(n_mod, sizes, not missing and not extra, missing, extra, report)


@dataclass
class EvidenceReport:
    """Scan summary for the finiteness/size-bound conjectures.

    Evidence only: a clean scan up to n_max proves nothing beyond n_max.
    """

    modulus: int
    n_max: int
    per_size: dict[int, int]          # irreducible class count per size
    max_irreducible_size: int | None
    note: str = "evidence only; sizes beyond the scan bound are untested"

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "n_max": self.n_max,
            "irreducible_classes_per_size": {str(k): v for k, v in sorted(self.per_size.items())},
            "max_irreducible_size": self.max_irreducible_size,
            "note": self.note,
        }


def evidence_scan(n_mod: int, n_max: int | None = None,
                  work_limit: int = DEFAULT_WORK_LIMIT,
                  allow_large: bool = False) -> EvidenceReport:
    """Classify sizes 3..n_max (default N+3) and summarize irreducible counts."""
    check_modulus(n_mod)
    if n_mod < 2:
        raise ValueError("evidence scan needs a modulus >= 2")
    if n_max is None:
        n_max = n_mod + 3
    report = classify(SearchConfig(
        modulus=n_mod, sizes=tuple(range(3, n_max + 1)), irreducible_only=True,
        work_limit=work_limit, allow_large=allow_large))
    per_size = {s.size: len(s.irreducible) for s in report.sizes}
    with_any = [s for s, c in per_size.items() if c]
    return EvidenceReport(n_mod, n_max, per_size, max(with_any) if with_any else None)


def run_shard(config: SearchConfig, shard_index: int) -> ClassificationReport:
    """Classify one shard of a sharded config (helper for process pools)."""
    return classify(replace(config, shard_index=shard_index))


def merge_class_sets(reports) -> dict[int, set[Seq]]:
    """Union of per-size irreducible class sets across shard reports."""
    merged: dict[int, set[Seq]] = {}
    for rep in reports:
        for s in rep.sizes:
            merged.setdefault(s.size, set()).update(s.irreducible)
    return merged


__all__ = [
    "DEFAULT_WORK_LIMIT",
    "WorkLimitExceeded",
    "enumerate_solutions",
    "enumerate_naive",
    "SearchConfig",
    "SizeReport",
    "ClassificationReport",
    "classify",
    "load_reference",
    "reference_classes",
    "default_verify_sizes",
    "VerifyReport",
    "verify_expected",
    "EvidenceReport",
    "evidence_scan",
    "run_shard",
    "merge_class_sets",
]
