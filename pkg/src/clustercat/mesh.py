"""The k-linear mesh category of a finite translation quiver.

Morphism spaces are computed degree by degree for each source ``x``:

    A_d(x, y) = (⊕_{a: z -> y} A_{d-1}(x, z)) / {(f·σ(a))_a : f in A_{d-2}(x, τy)}

which is exactly the degree-d part of paths modulo the mesh ideal (every
element of the ideal ends either in an arrow or in a full mesh at y).
Coordinates are exact rationals.  This is an oracle independent of the
hammock computations in :mod:`clustercat.homs`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .errors import NoStabilization
from .knitting import TranslationQuiver

Vec = list[Fraction]


@dataclass
class _Piece:
    """``A_d(x, y)``: dimension plus the right-multiplication data into it."""

    dim: int
    blocks: list[tuple[tuple[int, int], int, int]]  # (arrow, offset, size)
    proj: list[list[Fraction]]  # dim x (sum of block sizes)

    def right_mult(self, arrow: tuple[int, int], v: Vec) -> Vec:
        for a, off, size in self.blocks:
            if a == arrow:
                cols = range(off, off + size)
                return [sum((row[c] * v[c - off] for c in cols), Fraction(0)) for row in self.proj]
        raise KeyError(arrow)


@dataclass
class LinearizedCategory:
    tq: TranslationQuiver
    length: int  # first degree at which every path space vanishes
    pieces: dict[int, dict[tuple[int, int], _Piece]] = field(default_factory=dict)

    def piece(self, x: int, d: int, y: int) -> _Piece | None:
        return self.pieces[x].get((d, y))

    def graded_dims(self, x: int, y: int) -> dict[int, int]:
        return {d: p.dim for (d, w), p in self.pieces[x].items() if w == y and p.dim}

    def hom_dim(self, x: int, y: int) -> int:
        return sum(self.graded_dims(x, y).values())

    def identity(self, x: int) -> dict[int, Vec]:
        return {0: [Fraction(1)]}

    def basis(self, x: int, y: int) -> list[dict[int, Vec]]:
        """Homogeneous basis of Hom(x, y): one unit vector per coordinate."""
        out = []
        for d, k in sorted(self.graded_dims(x, y).items()):
            for i in range(k):
                v = [Fraction(0)] * k
                v[i] = Fraction(1)
                out.append({d: v})
        return out

    def lift_path(self, x: int, d: int, y: int, i: int) -> list[tuple[int, int]]:
        """A path of arrows whose class is the i-th basis vector of A_d(x, y)."""
        path: list[tuple[int, int]] = []
        while d > 0:
            p = self.pieces[x][(d, y)]
            # the i-th quotient coordinate is a free column of the presentation
            col = _free_columns(p)[i]
            for a, off, size in p.blocks:
                if off <= col < off + size:
                    path.append(a)
                    y, i, d = a[0], col - off, d - 1
                    break
        path.reverse()
        return path

    def push(self, x: int, d: int, v: Vec, path: list[tuple[int, int]]) -> tuple[int, Vec] | None:
        """Compose ``v in A_d(x, ·)`` with the arrows of ``path``."""
        for a in path:
            d += 1
            p = self.pieces[x].get((d, a[1]))
            if p is None or p.dim == 0:
                return None
            v = p.right_mult(a, v)
        return d, v

    def compose(self, f: dict[int, Vec], g: dict[int, Vec], x: int, y: int, w: int) -> dict[int, Vec]:
        """``g ∘ f`` for ``f: x -> y`` and ``g: y -> w``."""
        out: dict[int, Vec] = {}
        for e, gv in g.items():
            for i, coeff in enumerate(gv):
                if not coeff:
                    continue
                path = self.lift_path(y, e, w, i) if e else []
                for d, fv in f.items():
                    res = self.push(x, d, fv, path)
                    if res is None:
                        continue
                    dd, vv = res
                    acc = out.setdefault(dd, [Fraction(0)] * len(vv))
                    for k, c in enumerate(vv):
                        acc[k] += coeff * c
        return {d: v for d, v in out.items() if any(v)}

    def arrow_morphism(self, arrow: tuple[int, int]) -> dict[int, Vec]:
        x, y = arrow
        v = self.push(x, 0, [Fraction(1)], [arrow])
        return {} if v is None else {v[0]: v[1]}

    def flatten(self, m: dict[int, Vec], x: int, y: int) -> Vec:
        out: Vec = []
        for d, k in sorted(self.graded_dims(x, y).items()):
            out.extend(m.get(d, [Fraction(0)] * k))
        return out


def _free_columns(p: _Piece) -> list[int]:
    # each projection row is e_c minus pivot corrections: c is its leading unit
    cols = []
    for row in p.proj:
        cols.append(next(c for c, val in enumerate(row) if val == 1 and _is_unit_col(p.proj, c)))
    return cols


def _is_unit_col(proj: list[list[Fraction]], c: int) -> bool:
    return sum(1 for row in proj if row[c] != 0) == 1


def linearize(
    tq: TranslationQuiver, length_cap: int | None = None, coxeter: int | None = None
) -> LinearizedCategory:
    """Path spaces of ``tq`` modulo the mesh ideal, built degree by degree.

    Paths out of each vertex are extended until every path of some length
    dies.  Without an explicit cap the bound is ``4 (h + 2)`` per τ-orbit,
    with the vertex count standing in for the Coxeter number ``h`` when it
    is not given.
    """
    orbits = _count_tau_orbits(tq)
    if length_cap is None:
        h = coxeter if coxeter is not None else len(tq.vertices)
        length_cap = 4 * (h + 2) * max(orbits, 1)
    lc = LinearizedCategory(tq, 0)
    in_arrows = {v: sorted((s, v) for s in tq.pred[v]) for v in tq.vertices}
    longest = 0
    for x in tq.vertices:
        pieces: dict[tuple[int, int], _Piece] = {(0, x): _Piece(1, [], [[Fraction(1)]])}
        d = 0
        while True:
            d += 1
            if d > length_cap:
                raise NoStabilization(f"paths from {x} survive past length {length_cap}")
            nonzero = False
            for y in tq.vertices:
                blocks = []
                off = 0
                for a in in_arrows[y]:
                    prev = pieces.get((d - 1, a[0]))
                    size = prev.dim if prev else 0
                    if size:
                        blocks.append((a, off, size))
                        off += size
                if off == 0:
                    continue
                rels = []
                ty = tq.tau.get(y)
                src = pieces.get((d - 2, ty)) if ty is not None else None
                if src is not None and src.dim:
                    for i in range(src.dim):
                        e = [Fraction(0)] * src.dim
                        e[i] = Fraction(1)
                        rel = [Fraction(0)] * off
                        for a, o, size in blocks:
                            s_arrow = (ty, a[0])
                            mid = pieces[(d - 1, a[0])]
                            img = mid.right_mult(s_arrow, e)
                            rel[o:o + size] = img
                        rels.append(rel)
                proj = linalg.quotient_map(rels, off)
                if proj:
                    pieces[(d, y)] = _Piece(len(proj), blocks, proj)
                    nonzero = True
            if not nonzero:
                break
        longest = max(longest, d)
        lc.pieces[x] = pieces
    lc.length = longest
    return lc


def _count_tau_orbits(tq: TranslationQuiver) -> int:
    seen: set[int] = set()
    count = 0
    for v in tq.vertices:
        if v in seen:
            continue
        count += 1
        stack = [v]
        while stack:
            w = stack.pop()
            if w in seen:
                continue
            seen.add(w)
            for nb in (tq.tau.get(w), tq.tau_inv.get(w)):
                if nb is not None:
                    stack.append(nb)
    return count


def mesh_relation(lc: LinearizedCategory, y: int) -> dict[int, Vec]:
    """Evaluate ``sum_a σ(a)·a`` at ``y`` in the quotient (should be zero)."""
    tq = lc.tq
    ty = tq.tau[y]
    total: dict[int, Vec] = {}
    for z in tq.pred[y]:
        f = lc.arrow_morphism((ty, z))
        g = lc.arrow_morphism((z, y))
        for d, v in lc.compose(f, g, ty, z, y).items():
            acc = total.setdefault(d, [Fraction(0)] * len(v))
            for k, c in enumerate(v):
                acc[k] += c
    return {d: v for d, v in total.items() if any(v)}


def end_quiver(lc: LinearizedCategory, members: list[int]) -> dict[tuple[int, int], int]:
    """Arrow multiplicities of the quiver of End(⊕T)^op.

    Arrows ``T_i -> T_j`` count ``dim rad(T_i, T_j) - dim rad^2(T_i, T_j)``
    inside the full subcategory on ``members``; arrows follow irreducible
    maps of add T.
    """
    rad: dict[tuple[int, int], list[dict[int, Vec]]] = {}
    for a in members:
        for b in members:
            rad[(a, b)] = [m for m in lc.basis(a, b) if 0 not in m]
    out: dict[tuple[int, int], int] = {}
    for a in members:
        for b in members:
            r = len(rad[(a, b)])
            if not r:
                continue
            comps = []
            for c in members:
                for f in rad[(a, c)]:
                    for g in rad[(c, b)]:
                        h = lc.compose(f, g, a, c, b)
                        if h:
                            comps.append(lc.flatten(h, a, b))
            arrows = r - (linalg.rank(comps) if comps else 0)
            if arrows:
                out[(a, b)] = arrows
    return out
