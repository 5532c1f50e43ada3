"""Exact 2x2 arithmetic over Z/NZ and over Z.

Matrices are plain 4-tuples ``(a, b, c, d)`` for the row-major matrix
[[a, b], [c, d]].  The modulus convention used across the package:

* ``N >= 2``: standard modular mode, residues stored in ``[0, N-1]``;
* ``N == 0``: integer mode, arbitrary-precision arithmetic, no reduction;
* ``N == 1``: rejected (every tuple would solve everything).
"""

from __future__ import annotations

Mat = tuple[int, int, int, int]

IDENTITY: Mat = (1, 0, 0, 1)


def check_modulus(n: int) -> int:
    """Validate a modulus; 0 means integer mode, 1 and negatives are rejected."""
    if n == 1 or n < 0:
        raise ValueError(f"modulus must be 0 (integer mode) or >= 2, got {n}")
    return n


def residue(x: int, n: int) -> int:
    """Least nonnegative representative of x mod n (identity in integer mode)."""
    return x % n if n else x


def generator(a: int, n: int) -> Mat:
    """The elementary factor [[a, -1], [1, 0]]."""
    return (residue(a, n), residue(-1, n), residue(1, n), 0)


def mat_mul(x: Mat, y: Mat, n: int) -> Mat:
    a, b, c, d = x
    e, f, g, h = y
    if n:
        return (
            (a * e + b * g) % n,
            (a * f + b * h) % n,
            (c * e + d * g) % n,
            (c * f + d * h) % n,
        )
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def mat_det(m: Mat, n: int) -> int:
    return residue(m[0] * m[3] - m[1] * m[2], n)


def pm_identity_sign(m: Mat, n: int) -> int | None:
    """Return +1 if m == Id, -1 if m == -Id, else None.

    Mod 2 the two coincide; +1 is reported.
    """
    if m[1] != 0 or m[2] != 0 or m[0] != m[3]:
        return None
    if m[0] == residue(1, n):
        return 1
    if m[0] == residue(-1, n):
        return -1
    return None


def generator_product(seq, n: int) -> Mat:
    """Product of the elementary factors for a1, ..., ak, the a1 factor rightmost.

    Integer mode never overflows: Python integers are unbounded.
    """
    check_modulus(n)
    if not seq:
        raise ValueError("empty sequence")
    m = IDENTITY
    for a in seq:
        # extending the word multiplies the new factor on the left
        m = mat_mul(generator(a, n), m, n)
    return m


def continuant(seq, n: int) -> int:
    """Tridiagonal determinant of a1, ..., ak via K_i = a_i*K_{i-1} - K_{i-2}.

    Conventions K_{-1} = 0 and K_0 = 1, so the empty sequence gives 1.
    """
    check_modulus(n)
    prev, cur = 0, 1  # K_{-1}, K_0
    for a in seq:
        prev, cur = cur, residue(a * cur - prev, n)
    return cur


def continuant_matrix(seq, n: int) -> Mat:
    """Assemble the generator product of a1..ak from four continuants (k >= 2)."""
    check_modulus(n)
    seq = tuple(seq)
    if len(seq) < 2:
        raise ValueError("need at least 2 entries")
    return (
        continuant(seq, n),
        residue(-continuant(seq[1:], n), n),
        continuant(seq[:-1], n),
        residue(-continuant(seq[1:-1], n), n),
    )


def sl2_group_order(n: int) -> int:
    """|SL2(Z/NZ)| = N^3 * prod over primes p|N of (1 - 1/p^2)."""
    if n < 2:
        raise ValueError("need N >= 2")
    order = n ** 3
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            order = order // (p * p) * (p * p - 1)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        order = order // (m * m) * (m * m - 1)
    return order


def psl2_order(k: int, n: int) -> int:
    """Order of [[k, -1], [1, 0]] in PSL2(Z/NZ).

    Computed by iterated multiplication with a +/-Id test; the group is finite,
    so the |SL2| bound can never be hit.
    """
    check_modulus(n)
    if n < 2:
        raise ValueError("psl2_order needs N >= 2")
    g = generator(k, n)
    m = g
    bound = sl2_group_order(n)
    for i in range(1, bound + 1):
        if pm_identity_sign(m, n) is not None:
            return i
        m = mat_mul(m, g, n)
    raise RuntimeError(f"no power of the k={k} factor reached +/-Id within |SL2(Z/{n}Z)|")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def semiprime_parts(n: int) -> tuple[int, int] | None:
    """Return (p, q) if n = p*q with p < q distinct primes, else None."""
    d = 2
    while d * d < n:
        if n % d == 0:
            q = n // d
            if is_prime(d) and is_prime(q):
                return (d, q)
            return None
        d += 1
    return None


__all__ = [
    "Mat",
    "IDENTITY",
    "check_modulus",
    "residue",
    "generator",
    "mat_mul",
    "mat_det",
    "pm_identity_sign",
    "generator_product",
    "continuant",
    "continuant_matrix",
    "sl2_group_order",
    "psl2_order",
    "is_prime",
    "semiprime_parts",
]
