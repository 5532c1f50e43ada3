"""Constant-tuple ("monomial") solutions.

The minimal length of a constant solution (k, ..., k) equals the order of
[[k, -1], [1, 0]] in PSL2(Z/NZ).  This module computes minimal monomial
records, the square and prime-power constant families, the all-twos closed
form, the boundary classification for tuples shaped (a, k, ..., k, b), and
the irreducibility facts for prime and semiprime moduli.
"""

from __future__ import annotations

from dataclasses import dataclass

from .modmat import (
    Mat,
    check_modulus,
    generator,
    generator_product,
    is_prime,
    mat_mul,
    pm_identity_sign,
    psl2_order,
    residue,
    semiprime_parts,
)
from .solutions import Seq, Witness, find_decomposition, is_irreducible

DEFAULT_MULT_BUDGET = 200_000  # generator multiplications per request


@dataclass(frozen=True)
class MonomialRecord:
    modulus: int
    k: int
    minimal_size: int
    irreducible: bool
    witness: Witness | None

    def to_dict(self) -> dict:
        d = {
            "modulus": self.modulus,
            "k": self.k,
            "minimal_size": self.minimal_size,
            "irreducible": self.irreducible,
        }
        if self.witness is not None:
            d["witness"] = {
                "left": list(self.witness.left),
                "right": list(self.witness.right),
                "transform": self.witness.transform,
            }
        return d


def minimal_monomial(n_mod: int, k: int) -> MonomialRecord:
    """Minimal constant solution for residue k, with its reducibility status."""
    check_modulus(n_mod)
    if n_mod < 2:
        raise ValueError("monomial analysis needs a modulus >= 2")
    k = residue(k, n_mod)
    size = psl2_order(k, n_mod)
    seq = (k,) * size
    if size < 3:
        return MonomialRecord(n_mod, k, size, False, None)
    witness = find_decomposition(seq, n_mod)
    return MonomialRecord(n_mod, k, size, witness is None, witness)


def square_constant_solution(l: int) -> tuple[int, Seq]:
    """For N = l^2 the 2l-tuple (l, ..., l) is a solution; returns (N, tuple).

    It is irreducible exactly when l = 2: for l >= 3 it splits off
    (-l, l, l, -l), leaving the boundary-shifted (2l, l, ..., l, 2l) part.
    """
    if l < 2:
        raise ValueError("need l >= 2")
    n_mod = l * l
    seq = (l,) * (2 * l)
    if pm_identity_sign(generator_product(seq, n_mod), n_mod) is None:
        raise RuntimeError("square constant family failed its solution check")
    return n_mod, seq


def prime_power_constant_solution(l: int, exp: int,
                                  mult_budget: int = DEFAULT_MULT_BUDGET) -> tuple[int, Seq]:
    """For N = l^exp (exp >= 2) the 2*l^(exp-1)-tuple (l, ..., l) is a solution."""
    if l < 2 or exp < 2:
        raise ValueError("need l >= 2 and exponent >= 2")
    n_mod = l ** exp
    size = 2 * l ** (exp - 1)
    if size > mult_budget:
        raise ValueError(f"{size} generator multiplications exceed the budget {mult_budget}")
    seq = (l,) * size
    if pm_identity_sign(generator_product(seq, n_mod), n_mod) is None:
        raise RuntimeError("prime-power constant family failed its solution check")
    return n_mod, seq


def all_twos_matrix(size: int) -> Mat:
    """Integer-mode closed form for the all-twos product: [[n+1, -n], [n, -n+1]]."""
    if size < 1:
        raise ValueError("need size >= 1")
    return (size + 1, -size, size, -size + 1)


def boundary_pairs(n_mod: int, k: int, size: int) -> set[tuple[int, int]]:
    """All (a, b) with (a, k, ..., k, b) of the given size a solution.

    Brute force over (a, b) by design: this doubles as the oracle for the
    closed-form boundary facts (a = b with a*(a-k) = 0; for k = 2 exactly
    a = b = 2 when size = 0 mod N and a = b = 0 when size = 2 mod N).
    """
    check_modulus(n_mod)
    if n_mod < 2:
        raise ValueError("boundary scan needs a modulus >= 2")
    if size < 3:
        raise ValueError("boundary shape needs size >= 3")
    k = residue(k, n_mod)
    mid = (1, 0, 0, 1)
    for _ in range(size - 2):
        mid = mat_mul(generator(k, n_mod), mid, n_mod)
    out = set()
    for a in range(n_mod):
        left = mat_mul(mid, generator(a, n_mod), n_mod)
        for b in range(n_mod):
            if pm_identity_sign(mat_mul(generator(b, n_mod), left, n_mod), n_mod) is not None:
                out.add((a, b))
    return out


@dataclass
class TheoremCheck:
    description: str
    passed: bool
    details: dict


@dataclass
class MonomialTheoremReport:
    modulus: int
    checks: list[TheoremCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "passed": self.passed,
            "checks": [
                {"description": c.description, "passed": c.passed, "details": c.details}
                for c in self.checks
            ],
        }


def monomial_theorem_report(n_mod: int) -> MonomialTheoremReport:
    """Check the general monomial irreducibility facts for one modulus.

    For prime N every nonzero minimal monomial is irreducible; for N = p*q
    the p- and q-monomial minimals are irreducible; for any N >= 3 both
    (2, ..., 2) and (N-2, ..., N-2) of length N are irreducible.
    """
    check_modulus(n_mod)
    if n_mod < 2:
        raise ValueError("monomial analysis needs a modulus >= 2")
    checks = []
    if is_prime(n_mod):
        records = {k: minimal_monomial(n_mod, k) for k in range(1, n_mod)}
        checks.append(TheoremCheck(
            "prime modulus: every nonzero minimal monomial is irreducible",
            all(r.irreducible for r in records.values()),
            {"minimal_sizes": {k: r.minimal_size for k, r in records.items()}}))
        checks.append(TheoremCheck(
            "prime modulus: minimal sizes never exceed the modulus",
            all(r.minimal_size <= n_mod for r in records.values()),
            {}))
    parts = semiprime_parts(n_mod)
    if parts:
        p, q = parts
        rec = {k: minimal_monomial(n_mod, k) for k in (p, q)}
        checks.append(TheoremCheck(
            "product of two distinct primes: the prime-residue minimal monomials are irreducible",
            all(r.irreducible for r in rec.values()),
            {"minimal_sizes": {k: r.minimal_size for k, r in rec.items()}}))
    if n_mod >= 3:
        twos = (2,) * n_mod
        anti = (residue(n_mod - 2, n_mod),) * n_mod
        checks.append(TheoremCheck(
            "the all-twos tuple of length N is an irreducible solution",
            is_irreducible(twos, n_mod), {}))
        checks.append(TheoremCheck(
            "the all-(N-2)s tuple of length N is an irreducible solution",
            is_irreducible(anti, n_mod), {}))
    return MonomialTheoremReport(n_mod, checks)


__all__ = [
    "DEFAULT_MULT_BUDGET",
    "MonomialRecord",
    "minimal_monomial",
    "square_constant_solution",
    "prime_power_constant_solution",
    "all_twos_matrix",
    "boundary_pairs",
    "TheoremCheck",
    "MonomialTheoremReport",
    "monomial_theorem_report",
]
