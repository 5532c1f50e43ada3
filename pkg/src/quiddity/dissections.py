"""Polygon dissections realizing solutions as quiddities (moduli 2, 3, 4).

A dissection cuts a convex polygon with vertices 1..n (in cyclic order) by
pairwise non-crossing diagonals into triangles and quadrilaterals.  Cells
carry no weights for modulus 2 (the quiddity is the parity of the triangle
count at each vertex); for moduli 3 and 4 cells are weighted and the
quiddity sums the weights of the cells at each vertex.  Vertex subsets of a
convex polygon are kept sorted: sorted order is their cyclic order.

Kinds:

* ``plain-34``       (mod 2): unweighted triangles and quadrilaterals;
* ``weighted-first`` (mod 3): triangles weigh +/-1, quadrilaterals 0;
* ``weighted-second``(mod 4): triangles weigh +/-1, quadrilaterals 0 or 2,
  plus quadrilaterals split into two paired weight-2 triangles along a
  shared diagonal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import cos, pi, sin

from .solutions import (
    Seq,
    apply_dihedral,
    canonicalize,
    find_decomposition,
    normalize_seq,
    solution_sign,
)

KIND_PLAIN = "plain-34"
KIND_FIRST = "weighted-first"
KIND_SECOND = "weighted-second"

KIND_MODULUS = {KIND_PLAIN: 2, KIND_FIRST: 3, KIND_SECOND: 4}
MODULUS_KIND = {m: k for k, m in KIND_MODULUS.items()}


@dataclass(frozen=True)
class Cell:
    vertices: tuple[int, ...]
    weight: int | None = None


@dataclass(frozen=True)
class Dissection:
    n: int
    kind: str
    cells: tuple[Cell, ...]
    pairs: tuple[tuple[int, int], ...] = ()

    @property
    def modulus(self) -> int:
        return KIND_MODULUS[self.kind]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind,
            "cells": [{"vertices": list(c.vertices), "weight": c.weight}
                      for c in self.cells],
            "pairs": [list(p) for p in self.pairs],
        }


def from_dict(d: dict) -> Dissection:
    return Dissection(
        d["n"], d["kind"],
        tuple(Cell(tuple(c["vertices"]), c.get("weight")) for c in d["cells"]),
        tuple(tuple(p) for p in d["pairs"]))


def _cell_edges(vertices: tuple[int, ...]):
    k = len(vertices)
    return [tuple(sorted((vertices[i], vertices[(i + 1) % k]))) for i in range(k)]


def _is_side(edge: tuple[int, int], n: int) -> bool:
    a, b = edge
    return b - a == 1 or (a == 1 and b == n)


def validate(d: Dissection) -> list[str]:
    """All invariant violations, empty when the dissection is well formed."""
    bad: list[str] = []
    if d.kind not in KIND_MODULUS:
        return [f"unknown kind {d.kind!r}"]
    if d.n < 3:
        bad.append(f"polygon needs at least 3 vertices, got {d.n}")
    edge_use: dict[tuple[int, int], int] = {}
    cover = 0
    for i, c in enumerate(d.cells):
        v = c.vertices
        if len(v) not in (3, 4) or len(set(v)) != len(v):
            bad.append(f"cell {i} must list 3 or 4 distinct vertices: {v}")
            continue
        if list(v) != sorted(v):
            bad.append(f"cell {i} vertices must be sorted (convex cyclic order): {v}")
            continue
        if v[0] < 1 or v[-1] > d.n:
            bad.append(f"cell {i} has labels outside 1..{d.n}: {v}")
            continue
        cover += len(v) - 2
        for e in _cell_edges(v):
            edge_use[e] = edge_use.get(e, 0) + 1
    if not bad:
        if cover != d.n - 2:
            bad.append(f"cells cover {cover} triangle-equivalents, polygon needs {d.n - 2}")
        for e, count in sorted(edge_use.items()):
            want = 1 if _is_side(e, d.n) else 2
            if count != want:
                what = "side" if want == 1 else "diagonal"
                bad.append(f"{what} {e} borders {count} cells, expected {want}")
        for v in range(1, d.n + 1):
            side = tuple(sorted((v, v % d.n + 1)))
            if side not in edge_use:
                bad.append(f"polygon side {side} not covered by any cell")
        diagonals = sorted(e for e in edge_use if not _is_side(e, d.n))
        for i, (a, b) in enumerate(diagonals):
            for c2, d2 in diagonals[i + 1:]:
                if a < c2 < b < d2 or c2 < a < d2 < b:
                    bad.append(f"diagonals {(a, b)} and {(c2, d2)} cross")
    bad.extend(_check_weights(d))
    return bad


def _check_weights(d: Dissection) -> list[str]:
    bad: list[str] = []
    paired = [idx for pair in d.pairs for idx in pair]
    if d.kind != KIND_SECOND and d.pairs:
        bad.append(f"kind {d.kind} admits no split-quadrilateral pairs")
    if len(set(paired)) != len(paired):
        bad.append("a cell appears in more than one pair")
    for i, c in enumerate(d.cells):
        tri = len(c.vertices) == 3
        w = c.weight
        if d.kind == KIND_PLAIN:
            if w is not None:
                bad.append(f"cell {i}: plain dissections carry no weights")
        elif d.kind == KIND_FIRST:
            legal = (1, 2) if tri else (0,)
            if w not in legal:
                bad.append(f"cell {i}: weight {w} illegal mod 3 for this shape")
        else:
            if tri:
                legal = (2,) if i in paired else (1, 3)
            else:
                legal = (0, 2)
            if w not in legal:
                bad.append(f"cell {i}: weight {w} illegal mod 4 for this shape")
                if tri and w == 2:
                    bad.append(f"cell {i}: weight-2 triangles occur only in split pairs")
    for a, b in d.pairs:
        if not (0 <= a < len(d.cells) and 0 <= b < len(d.cells)) or a == b:
            bad.append(f"pair ({a}, {b}) is not two distinct cell indices")
            continue
        ca, cb = d.cells[a], d.cells[b]
        if len(ca.vertices) != 3 or len(cb.vertices) != 3:
            bad.append(f"pair ({a}, {b}) must join two triangles")
            continue
        if ca.weight != 2 or cb.weight != 2:
            bad.append(f"pair ({a}, {b}) triangles must both weigh 2")
        shared = set(ca.vertices) & set(cb.vertices)
        union = tuple(sorted(set(ca.vertices) | set(cb.vertices)))
        if len(shared) != 2 or len(union) != 4:
            bad.append(f"pair ({a}, {b}) triangles must share exactly one edge")
            continue
        if sorted(shared) not in ([union[0], union[2]], [union[1], union[3]]):
            bad.append(f"pair ({a}, {b}) shared edge must be the quadrilateral's diagonal")
    return bad


def quiddity(d: Dissection) -> Seq:
    """Per-vertex value: triangle-count parity (mod 2) or weight sum (mod 3/4)."""
    bad = validate(d)
    if bad:
        raise ValueError("invalid dissection: " + "; ".join(bad))
    n_mod = d.modulus
    acc = [0] * (d.n + 1)
    for c in d.cells:
        if d.kind == KIND_PLAIN:
            amount = 1 if len(c.vertices) == 3 else 0
        else:
            amount = c.weight
        for v in c.vertices:
            acc[v] += amount
    return tuple(a % n_mod for a in acc[1:])


# ---------------------------------------------------------------------------
# attaching a cell on the (n, 1) edge


def cell_base_solution(spec, kind: str) -> Seq:
    """The solution glued onto the quiddity when a cell of this spec is attached."""
    n_mod = KIND_MODULUS[kind]
    shape, arg = spec
    if shape == "triangle":
        w = 1 if kind == KIND_PLAIN else arg
        return (w % n_mod,) * 3
    if shape == "quad":
        w = 0 if kind == KIND_PLAIN else arg
        return (w % n_mod,) * 4
    if shape == "split_quad":
        return (0, 2, 0, 2) if arg == 0 else (2, 0, 2, 0)
    raise ValueError(f"unknown cell spec {spec!r}")


def _legal_spec(spec, kind: str) -> bool:
    shape, arg = spec
    if kind == KIND_PLAIN:
        return shape in ("triangle", "quad") and arg is None
    if kind == KIND_FIRST:
        return (shape == "triangle" and arg in (1, 2)) or (shape == "quad" and arg == 0)
    if kind == KIND_SECOND:
        return ((shape == "triangle" and arg in (1, 3))
                or (shape == "quad" and arg in (0, 2))
                or (shape == "split_quad" and arg in (0, 1)))
    return False


def attach_cell(d: Dissection, spec) -> Dissection:
    """Grow the polygon by one cell sitting outside the (n, 1) edge.

    The new vertices take the next labels, so the new quiddity equals the
    old one glued with the cell's base solution.
    """
    if not _legal_spec(spec, d.kind):
        raise ValueError(f"cell spec {spec!r} not legal for kind {d.kind}")
    shape, arg = spec
    n = d.n
    if shape == "triangle":
        w = None if d.kind == KIND_PLAIN else arg
        return Dissection(n + 1, d.kind, d.cells + (Cell((1, n, n + 1), w),), d.pairs)
    if shape == "quad":
        w = None if d.kind == KIND_PLAIN else arg
        return Dissection(n + 2, d.kind, d.cells + (Cell((1, n, n + 1, n + 2), w),), d.pairs)
    i = len(d.cells)
    if arg == 0:  # diagonal (n, n+2): glues (0, 2, 0, 2)
        new = (Cell((n, n + 1, n + 2), 2), Cell((1, n, n + 2), 2))
    else:         # diagonal (1, n+1): glues (2, 0, 2, 0)
        new = (Cell((1, n, n + 1), 2), Cell((1, n + 1, n + 2), 2))
    return Dissection(n + 2, d.kind, d.cells + new, d.pairs + ((i, i + 1),))


def relabel(d: Dissection, transform: int) -> Dissection:
    """Rotate/reflect vertex labels; the quiddity transforms the same way."""
    n = d.n
    if not 0 <= transform < 2 * n:
        raise ValueError("transform index out of range")

    def new_label(v: int) -> int:
        p = v - 1
        if transform < n:
            return (p - transform) % n + 1
        return (n - 1 - p - (transform - n)) % n + 1

    cells = tuple(Cell(tuple(sorted(new_label(v) for v in c.vertices)), c.weight)
                  for c in d.cells)
    return Dissection(n, d.kind, cells, d.pairs)


# ---------------------------------------------------------------------------
# constructive builders


def _base_cases(n_mod: int) -> dict[Seq, Dissection]:
    kind = MODULUS_KIND[n_mod]

    def t(*cells, pairs=()):
        n = max(v for vertices, _ in cells for v in vertices)
        return Dissection(n, kind, tuple(Cell(v, w) for v, w in cells), pairs)

    if n_mod == 2:
        return {
            (1, 1, 1): t(((1, 2, 3), None)),
            (0, 0, 0, 0): t(((1, 2, 3, 4), None)),
            (0, 1, 0, 1): t(((1, 2, 3), None), ((1, 3, 4), None)),
        }
    if n_mod == 3:
        return {
            (1, 1, 1): t(((1, 2, 3), 1)),
            (2, 2, 2): t(((1, 2, 3), 2)),
            (0, 0, 0, 0): t(((1, 2, 3, 4), 0)),
            (1, 2, 1, 2): t(((1, 2, 4), 1), ((2, 3, 4), 1)),
            (0, 1, 0, 2): t(((1, 2, 3), 1), ((1, 3, 4), 2)),
        }
    return {
        (1, 1, 1): t(((1, 2, 3), 1)),
        (3, 3, 3): t(((1, 2, 3), 3)),
        (0, 0, 0, 0): t(((1, 2, 3, 4), 0)),
        (2, 2, 2, 2): t(((1, 2, 3, 4), 2)),
        (0, 2, 0, 2): t(((1, 2, 3), 2), ((1, 3, 4), 2), pairs=((0, 1),)),
        (1, 2, 1, 2): t(((1, 2, 4), 1), ((2, 3, 4), 1)),
        (0, 1, 0, 3): t(((1, 2, 3), 1), ((1, 3, 4), 3)),
        (2, 3, 2, 3): t(((1, 2, 3), 3), ((1, 3, 4), 3)),
    }


def _attachable_classes(n_mod: int) -> list[Seq]:
    if n_mod == 2:
        return [(1, 1, 1), (0, 0, 0, 0)]
    if n_mod == 3:
        return [(1, 1, 1), (2, 2, 2), (0, 0, 0, 0)]
    return [(1, 1, 1), (3, 3, 3), (0, 0, 0, 0), (2, 2, 2, 2), (0, 2, 0, 2)]


def _spec_for(part: Seq, kind: str):
    if len(part) == 3:
        return ("triangle", None if kind == KIND_PLAIN else part[0])
    if part == (0, 2, 0, 2):
        return ("split_quad", 0)
    if part == (2, 0, 2, 0):
        return ("split_quad", 1)
    return ("quad", None if kind == KIND_PLAIN else part[0])


def _match_exact(d: Dissection, target: Seq) -> Dissection:
    got = quiddity(d)
    for t in range(2 * d.n):
        if apply_dihedral(got, t) == target:
            return relabel(d, t)
    raise RuntimeError(f"quiddity {got} not equivalent to target {target}")


def build_dissection(seq, n_mod: int) -> Dissection:
    """A dissection whose quiddity is exactly the given solution.

    Size 3/4 classes come from a fixed realization table; larger solutions
    split off an attachable part (the cells that can sit on one edge), the
    rest is built recursively and the cell re-attached.  The split always
    exists for moduli 2..4, so a search failure is reported as a bug, never
    mapped to a quiet error.
    """
    if n_mod not in MODULUS_KIND:
        raise ValueError("dissection models exist for moduli 2, 3 and 4 only")
    kind = MODULUS_KIND[n_mod]
    seq = normalize_seq(seq, n_mod)
    if len(seq) < 3:
        raise ValueError("dissections need size >= 3")
    if solution_sign(seq, n_mod) is None:
        raise ValueError(f"{seq} is not a solution mod {n_mod}")
    if len(seq) <= 4:
        base = _base_cases(n_mod)[canonicalize(seq)]
        return _match_exact(base, seq)
    witness = find_decomposition(seq, n_mod, _attachable_classes(n_mod))
    if witness is None:
        raise RuntimeError(
            f"no attachable split for {seq} mod {n_mod}; the classification "
            "guarantees one, so this is a bug")
    inner = build_dissection(witness.left, n_mod)
    grown = attach_cell(inner, _spec_for(witness.right, kind))
    return _match_exact(grown, seq)


def triangulate(seq, n_mod: int) -> Dissection:
    """An all-triangle dissection with the given quiddity.

    Preconditions: mod 2 and mod 3 need a nonzero entry, mod 4 an entry
    +/-1 (the all-twos square famously has no triangulation).  Works by
    peeling one +/-1 entry as an outer triangle and recursing; when the
    peeled remainder degenerates, another position is tried, which always
    succeeds for these moduli.
    """
    if n_mod not in MODULUS_KIND:
        raise ValueError("dissection models exist for moduli 2, 3 and 4 only")
    kind = MODULUS_KIND[n_mod]
    seq = normalize_seq(seq, n_mod)
    if solution_sign(seq, n_mod) is None:
        raise ValueError(f"{seq} is not a solution mod {n_mod}")
    units = (1,) if n_mod == 2 else (1, n_mod - 1)
    ok = any(a in units for a in seq) if n_mod == 4 else any(seq)
    if not ok:
        raise ValueError(f"{seq} mod {n_mod} admits no all-triangle dissection")
    n = len(seq)
    if n == 3:
        return _match_exact(_base_cases(n_mod)[canonicalize(seq)], seq)
    for t in range(2 * n):
        c = apply_dihedral(seq, t)
        eps = c[-1]
        if eps not in units:
            continue
        rest = ((c[0] - eps) % n_mod,) + c[1:n - 2] + ((c[n - 2] - eps) % n_mod,)
        good = any(a in units for a in rest) if n_mod == 4 else any(rest)
        if not good:
            continue
        inner = triangulate(rest, n_mod)
        grown = attach_cell(inner, ("triangle", None if kind == KIND_PLAIN else eps))
        return _match_exact(grown, seq)
    raise RuntimeError(
        f"no peelable position in {seq} mod {n_mod}; the triangulation "
        "argument guarantees one, so this is a bug")


def eliminate_quads(d: Dissection) -> Dissection:
    """Rewrite a mod-3 dissection into triangles without changing the quiddity.

    Each step finds a triangle sharing a diagonal with a weight-0 quad and
    replaces the pair by a fan of three triangles from the triangle's apex
    with weights (eps, -eps, eps); iterated until no quads remain.  An
    all-zero quiddity (an all-quad dissection) has no such step and is
    rejected.
    """
    if d.kind != KIND_FIRST:
        raise ValueError("quad elimination is defined for weighted-first dissections")
    if not any(quiddity(d)):
        raise ValueError("all-zero quiddity: quad elimination needs a triangle to start from")
    while True:
        quads = [i for i, c in enumerate(d.cells) if len(c.vertices) == 4]
        if not quads:
            return d
        step = _find_quad_step(d, quads)
        if step is None:
            raise RuntimeError("quads remain but none borders a triangle; "
                               "impossible in a valid dissection with triangles")
        d = _rewrite_step(d, *step)


def _find_quad_step(d: Dissection, quads):
    edge_owner: dict[tuple[int, int], list[int]] = {}
    for i, c in enumerate(d.cells):
        for e in _cell_edges(c.vertices):
            edge_owner.setdefault(e, []).append(i)
    for qi in quads:
        for e in _cell_edges(d.cells[qi].vertices):
            owners = edge_owner[e]
            if len(owners) != 2:
                continue
            other = owners[0] if owners[1] == qi else owners[1]
            if len(d.cells[other].vertices) == 3:
                return (other, qi, e)
    return None


def _rewrite_step(d: Dissection, ti: int, qi: int, shared) -> Dissection:
    tri, quad = d.cells[ti], d.cells[qi]
    eps = tri.weight
    apex = next(v for v in tri.vertices if v not in shared)
    q = quad.vertices
    edges = _cell_edges(q)
    rest = [e for e in edges if e != shared]
    new_cells = []
    for e in rest:
        adjacent = bool(set(e) & set(shared))
        new_cells.append(Cell(tuple(sorted((apex,) + e)), eps if adjacent else (-eps) % 3))
    cells = tuple(c for i, c in enumerate(d.cells) if i not in (ti, qi)) + tuple(new_cells)
    out = Dissection(d.n, d.kind, cells, d.pairs)
    bad = validate(out)
    if bad:
        raise RuntimeError("rewrite produced an invalid dissection: " + "; ".join(bad))
    return out


# ---------------------------------------------------------------------------
# random generation and rendering


def random_dissection(n: int, kind: str, seed: int) -> Dissection:
    """Seed-deterministic valid dissection of an n-gon of the given kind."""
    if kind not in KIND_MODULUS:
        raise ValueError(f"unknown kind {kind!r}")
    if n < 3:
        raise ValueError("need n >= 3")
    rng = random.Random(seed)
    cells: list[Cell] = []
    pairs: list[tuple[int, int]] = []

    def fill(chain: list[int]):
        k = len(chain)
        if k < 3:
            return
        shape = "triangle" if k == 3 else rng.choice(["triangle", "quad"])
        if shape == "triangle":
            i = rng.randrange(1, k - 1)
            picks = (chain[0], chain[i], chain[-1])
            _emit_triangle(picks)
            fill(chain[:i + 1])
            fill(chain[i:])
        else:
            i, j = sorted(rng.sample(range(1, k - 1), 2))
            picks = (chain[0], chain[i], chain[j], chain[-1])
            _emit_quad(picks)
            fill(chain[:i + 1])
            fill(chain[i:j + 1])
            fill(chain[j:])

    def _emit_triangle(v):
        v = tuple(sorted(v))
        if kind == KIND_PLAIN:
            cells.append(Cell(v, None))
        elif kind == KIND_FIRST:
            cells.append(Cell(v, rng.choice((1, 2))))
        else:
            cells.append(Cell(v, rng.choice((1, 3))))

    def _emit_quad(v):
        v = tuple(sorted(v))
        if kind == KIND_PLAIN:
            cells.append(Cell(v, None))
        elif kind == KIND_FIRST:
            cells.append(Cell(v, 0))
        else:
            choice = rng.choice(("w0", "w2", "split"))
            if choice == "split":
                a, b, c, e = v
                t1, t2 = rng.choice((((a, b, c), (a, c, e)), ((a, b, e), (b, c, e))))
                idx = len(cells)
                cells.append(Cell(t1, 2))
                cells.append(Cell(t2, 2))
                pairs.append((idx, idx + 1))
            else:
                cells.append(Cell(v, 0 if choice == "w0" else 2))

    fill(list(range(1, n + 1)))
    return Dissection(n, kind, tuple(cells), tuple(pairs))


def to_svg(d: Dissection, size: int = 400) -> str:
    """Regular-polygon drawing; purely presentational."""
    cx = cy = size / 2
    r = size * 0.42
    pos = {}
    for v in range(1, d.n + 1):
        ang = -pi / 2 + 2 * pi * (v - 1) / d.n
        pos[v] = (cx + r * cos(ang), cy + r * sin(ang))
    q = quiddity(d)
    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
             f'viewBox="0 0 {size} {size}">']
    drawn = set()
    for c in d.cells:
        for a, b in _cell_edges(c.vertices):
            if (a, b) in drawn:
                continue
            drawn.add((a, b))
            (x1, y1), (x2, y2) = pos[a], pos[b]
            lines.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" '
                         'stroke="black" stroke-width="1"/>')
    for c in d.cells:
        if c.weight is None:
            continue
        xs = [pos[v][0] for v in c.vertices]
        ys = [pos[v][1] for v in c.vertices]
        lines.append(f'<text x="{sum(xs) / len(xs):.1f}" y="{sum(ys) / len(ys):.1f}" '
                     f'font-size="12" text-anchor="middle" fill="blue">{c.weight}</text>')
    for v in range(1, d.n + 1):
        x, y = pos[v]
        dx, dy = x - cx, y - cy
        lx, ly = cx + dx * 1.12, cy + dy * 1.12
        lines.append(f'<text x="{lx:.1f}" y="{ly:.1f}" font-size="12" '
                     f'text-anchor="middle">{q[v - 1]}</text>')
    lines.append("</svg>")
    return "\n".join(lines)


__all__ = [
    "KIND_PLAIN",
    "KIND_FIRST",
    "KIND_SECOND",
    "KIND_MODULUS",
    "MODULUS_KIND",
    "Cell",
    "Dissection",
    "from_dict",
    "validate",
    "quiddity",
    "cell_base_solution",
    "attach_cell",
    "relabel",
    "build_dissection",
    "triangulate",
    "eliminate_quads",
    "random_dissection",
    "to_svg",
]
