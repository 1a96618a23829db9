"""Tilting sets, configurations, complements and the exchange graph."""

from __future__ import annotations

import itertools
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .dynkin import DynkinType, alternating_orientation, coxeter_data
from .errors import CountViolation, PreconditionViolated, SizeViolation
from .homs import cluster_homs, ext_derived, ext_mod, hom_derived
from .knitting import (
    ClusterCategory,
    DerivedObject,
    ModuleCategory,
    TranslationQuiver,
    f_normalize,
    functor_f,
    knit_module_ar_quiver,
    zq_window,
)
from .mesh import linearize

TiltingSet = tuple[int, ...]


# -- maximal cliques -----------------------------------------------------------


def _bits(xs: Iterable[int]) -> int:
    out = 0
    for x in xs:
        out |= 1 << x
    return out


def _members(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bron_kerbosch(adj: Sequence[int], candidates: int | None = None) -> Iterator[TiltingSet]:
    """Maximal cliques of a graph given as neighbour bitmasks.

    Tomita pivoting; the pivot is the vertex of ``P ∪ X`` with most
    neighbours in ``P`` (smallest id on ties) and branches are taken in
    ascending vertex order, so the output order is deterministic.
    """
    if candidates is None:
        candidates = (1 << len(adj)) - 1
    stack = [(0, candidates, 0)]
    while stack:
        r, p, x = stack.pop()
        if not p:
            if not x:
                yield tuple(_members(r))
            continue
        pivot = max(_members(p | x), key=lambda u: (bin(p & adj[u]).count("1"), -u))
        branches = []
        for v in _members(p & ~adj[pivot]):
            bit = 1 << v
            branches.append((r | bit, p & adj[v], x & adj[v]))
            p &= ~bit
            x |= bit
        stack.extend(reversed(branches))


def _cliques_parallel(adj: Sequence[int], threads: int) -> list[TiltingSet]:
    # split on the lowest member: clique containing v with no smaller vertex
    n = len(adj)

    def branch(v: int) -> list[TiltingSet]:
        lower = (1 << v) - 1
        p = adj[v] & ~lower
        x = adj[v] & lower
        out = []
        for c in bron_kerbosch(adj, p):
            clique = tuple(sorted((v,) + c))
            if not any(all(adj[u] >> w & 1 for w in clique) for u in _members(x)):
                out.append(clique)
        return out

    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(branch, range(n)))
    isolated = [(v,) for v in range(n) if not adj[v]]
    return sorted(set(itertools.chain(isolated, *parts)))


def maximal_cliques(adj: Sequence[int], threads: int = 1) -> list[TiltingSet]:
    if threads > 1:
        return _cliques_parallel(adj, threads)
    return sorted(bron_kerbosch(adj))


# -- the compatibility graph ------------------------------------------------------


def compatibility_graph(cc: ClusterCategory) -> list[int]:
    """Neighbour bitmasks: ``x ~ y`` iff ``x != y`` and ``Ext^1_C(x, y) = 0``."""
    ext = cluster_homs(cc).ext
    n = len(cc)
    return [_bits(y for y in range(n) if y != x and ext[x][y] == 0) for x in range(n)]


def compatibility_edges(cc: ClusterCategory) -> list[tuple[int, int]]:
    adj = compatibility_graph(cc)
    return [(x, y) for x in range(len(cc)) for y in _members(adj[x]) if x < y]


_TILTING: dict[int, tuple[ClusterCategory, list[TiltingSet]]] = {}


def enumerate_tilting_sets(cc: ClusterCategory, threads: int = 1) -> list[TiltingSet]:
    hit = _TILTING.get(id(cc))
    if hit and hit[0] is cc:
        return hit[1]
    cliques = maximal_cliques(compatibility_graph(cc), threads)
    for c in cliques:
        if len(c) != cc.rank:
            raise SizeViolation(f"maximal compatible set {c} has {len(c)} members")
    _TILTING[id(cc)] = (cc, cliques)
    return cliques


def is_ext_configuration(cc: ClusterCategory, members: Iterable[int]) -> bool:
    ext = cluster_homs(cc).ext
    t = set(members)
    if any(ext[x][y] for x in t for y in t):
        return False
    return all(any(ext[x][z] for x in t) for z in range(len(cc)) if z not in t)


def exceptional_complex_fvector(cc: ClusterCategory) -> list[int]:
    """Face counts by size (the empty face first) of the complex of
    exceptional sets."""
    faces: set[frozenset[int]] = set()
    for t in enumerate_tilting_sets(cc):
        for k in range(len(t) + 1):
            faces.update(frozenset(c) for c in itertools.combinations(t, k))
    out = [0] * (cc.rank + 1)
    for f in faces:
        out[len(f)] += 1
    return out


def almost_complete_sets(cc: ClusterCategory) -> list[TiltingSet]:
    out = set()
    for t in enumerate_tilting_sets(cc):
        for i in range(len(t)):
            out.add(t[:i] + t[i + 1:])
    return sorted(out)


def complements(cc: ClusterCategory, tbar: Iterable[int]) -> tuple[int, int]:
    ext = cluster_homs(cc).ext
    tb = sorted(set(tbar))
    if len(tb) != cc.rank - 1 or any(ext[a][b] for a in tb for b in tb):
        raise PreconditionViolated(f"{tb} is not an almost complete tilting set")
    found = [x for x in range(len(cc)) if x not in tb and all(ext[x][y] == 0 for y in tb)]
    if len(found) != 2:
        raise CountViolation(f"{tb} has {len(found)} complements")
    return found[0], found[1]


@dataclass
class ExchangeGraph:
    vertices: list[TiltingSet]
    edges: list[tuple[int, int]]  # indices into vertices, i < j

    def degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        nb: dict[int, list[int]] = {i: [] for i in range(len(self.vertices))}
        for a, b in self.edges:
            nb[a].append(b)
            nb[b].append(a)
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w in nb[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self.vertices)

    def exchange_data(self, cc: ClusterCategory) -> list[tuple[TiltingSet, int, int]]:
        """For each edge, the shared part and the two exchanged objects."""
        out = []
        for a, b in self.edges:
            ta, tb = set(self.vertices[a]), set(self.vertices[b])
            (m,), (ms,) = ta - tb, tb - ta
            out.append((tuple(sorted(ta & tb)), m, ms))
        return out


def exchange_graph(cc: ClusterCategory, threads: int = 1) -> ExchangeGraph:
    sets = enumerate_tilting_sets(cc, threads)
    pos = {t: i for i, t in enumerate(sets)}
    edges = set()
    for tbar in almost_complete_sets(cc):
        x, y = complements(cc, tbar)
        a = pos[tuple(sorted(tbar + (x,)))]
        b = pos[tuple(sorted(tbar + (y,)))]
        edges.add((min(a, b), max(a, b)))
    return ExchangeGraph(sets, sorted(edges))


def tilting_modules(cc: ClusterCategory) -> list[TiltingSet]:
    """Basic tilting kQ-modules, as sets of cluster-object indices."""
    mc = cc.mc
    mods = [k for k in range(len(cc)) if cc.is_module(k)]
    adj = [0] * len(cc)
    for x in mods:
        for y in mods:
            u, v = cc.module_vertex(x), cc.module_vertex(y)
            if x != y and ext_mod(mc, u, v) == 0 and ext_mod(mc, v, u) == 0:
                adj[x] |= 1 << y
    cands = _bits(mods)
    return sorted(c for c in bron_kerbosch(adj, cands) if len(c) == cc.rank)


def tilting_module_embedding(cc: ClusterCategory) -> dict:
    sets = set(enumerate_tilting_sets(cc))
    mods = tilting_modules(cc)
    return {
        "count": len(mods),
        "all_tilting_in_c": all(m in sets for m in mods),
        "all_ext_configurations": all(is_ext_configuration(cc, m) for m in mods),
        "injective": len(set(mods)) == len(mods),
    }


# -- D-windows ------------------------------------------------------------------


class DWindow:
    """A finite window of ZQ with derived-category Ext between its vertices."""

    def __init__(self, mc: ModuleCategory, lo: int, hi: int):
        self.mc = mc
        self.lo, self.hi = lo, hi
        self.quiver = zq_window(mc, lo, hi)
        self.labels: dict[int, DerivedObject] = self.quiver.labels
        self.vertices = sorted(self.labels)
        self.at = {x: v for v, x in self.labels.items()}

    def coords(self, v: int) -> tuple[int, int]:
        rank = self.mc.dtype.rank
        return v // rank + self.lo, v % rank + 1

    def vid(self, k: int, i: int) -> int:
        return (k - self.lo) * self.mc.dtype.rank + i - 1

    def ext(self, u: int, v: int) -> int:
        return ext_derived(self.mc, self.labels[u], self.labels[v])

    def f_image(self, v: int, power: int = 1) -> int | None:
        return self.at.get(functor_f(self.mc, self.labels[v], power))

    def interior(self, margin: int) -> list[int]:
        return [v for v in self.vertices if self.lo + margin <= self.coords(v)[0] <= self.hi - margin]


def window_e1(w: DWindow, members: Iterable[int]) -> bool:
    t = list(members)
    return all(w.ext(x, y) == 0 for x in t for y in t)


def window_maximal(w: DWindow, members: Iterable[int], among: Iterable[int] | None = None) -> bool:
    t = set(members)
    pool = w.vertices if among is None else among
    return all(any(w.ext(x, z) or w.ext(z, x) for x in t) for z in pool if z not in t)


def window_e2_failures(w: DWindow, members: Iterable[int], among: Iterable[int] | None = None) -> list[int]:
    t = set(members)
    pool = w.vertices if among is None else among
    return [z for z in pool if z not in t and not any(w.ext(x, z) for x in t)]


def is_window_ext_configuration(w: DWindow, members: Iterable[int], among: Iterable[int] | None = None) -> bool:
    t = set(members)
    return window_e1(w, t) and not window_e2_failures(w, t, among)


def f_stable_in_window(w: DWindow, members: Iterable[int]) -> bool:
    t = set(members)
    for v in t:
        for p in (1, -1):
            img = w.f_image(v, p)
            if img is not None and img not in t:
                return False
    return True


def figure_window(mc: ModuleCategory) -> tuple[DWindow, list[int], list[int], int]:
    """A fixed A3 window holding a maximal Ext-orthogonal set that is not
    an Ext-configuration.

    Returns the window, the displayed vertices, the chosen members and the
    witness vertex N.  Plot x-coordinates map to ZQ coordinates (k, i): the
    middle row at x is (k, 2) with x = 2k + 1, the outer rows at x are
    (k, 1) (bottom) and (k, 3) (top) with x = 2k + 2.
    """
    if str(mc.dtype) != "A3" or mc.orientation.arrows != {(1, 2), (3, 2)}:
        raise PreconditionViolated("this window is laid out for A3 with arrows 1->2, 3->2")
    w = DWindow(mc, -1, 23)
    top = [w.vid((x - 2) // 2, 3) for x in range(0, 47, 2)]
    mid = [w.vid((x - 1) // 2, 2) for x in range(1, 48, 2)]
    bot = [w.vid((x - 2) // 2, 1) for x in range(2, 49, 2)]
    filled = (
        [w.vid((x - 2) // 2, 3) for x in (0, 8, 12, 20, 26, 32, 38, 44)]
        + [w.vid((x - 1) // 2, 2) for x in (1, 7, 13, 19, 25, 31, 37, 43)]
        + [w.vid((x - 2) // 2, 1) for x in (2, 6, 14, 18, 26, 32, 38, 44)]
    )
    return w, sorted(top + mid + bot), sorted(filled), w.vid(9, 1)


def find_d_tilting_not_config(mc: ModuleCategory, periods: int = 3) -> tuple[DWindow, TiltingSet, list[int]] | None:
    """Search a D-window for a maximal Ext-orthogonal set that fails E2.

    Maximality is window-relative.  E2 is only tested at vertices far enough
    from both window edges that every possible Ext-witness lies inside.
    """
    h, _ = coxeter_data(mc.dtype)
    margin = h + 2
    w = DWindow(mc, 0, periods * h + 2 * margin)
    vs = w.vertices
    pos = {v: k for k, v in enumerate(vs)}
    adj = [0] * len(vs)
    for a in vs:
        for b in vs:
            if a != b and w.ext(a, b) == 0 and w.ext(b, a) == 0 and w.ext(a, a) == 0:
                adj[pos[a]] |= 1 << pos[b]
    inner = w.interior(margin)
    for c in bron_kerbosch(adj):
        members = tuple(vs[k] for k in c)
        bad = window_e2_failures(w, members, inner)
        if bad:
            return w, members, bad
    return None


# -- lifting C-configurations to D --------------------------------------------------


def lifted_configuration(cc: ClusterCategory, w: DWindow, members: Iterable[int]) -> list[int]:
    t = {cc.objects[k] for k in members}
    return [v for v in w.vertices if f_normalize(cc.mc, w.labels[v]) in t]


def check_lifts(cc: ClusterCategory) -> dict:
    """For every tilting set of C: its preimage in a D-window is F-stable
    and satisfies E1 and, away from the edges, E2."""
    h, _ = coxeter_data(cc.dtype)
    margin = h + 2
    w = DWindow(cc.mc, -2 * margin, 2 * margin)
    inner = w.interior(margin)
    stable = e1 = e2 = True
    for t in enumerate_tilting_sets(cc):
        pre = lifted_configuration(cc, w, t)
        stable &= f_stable_in_window(w, pre)
        e1 &= window_e1(w, pre)
        e2 &= not window_e2_failures(w, pre, inner)
    return {"f_stable": stable, "e1": e1, "e2": e2}


# -- Hom-configurations -------------------------------------------------------------


def zdelta_quotient(dtype: DynkinType, period: int) -> TranslationQuiver:
    """ZΔ modulo τ^period, built on the alternating slice.

    Vertex ``(k, i)`` has id ``k * rank + i - 1``.
    """
    q, _ = alternating_orientation(dtype)
    n = dtype.rank
    vid = lambda k, i: (k % period) * n + i - 1  # noqa: E731
    arrows = set()
    for k in range(period):
        for i, j in q.arrows:
            arrows.add((vid(k, j), vid(k, i)))
            arrows.add((vid(k, i), vid(k + 1, j)))
    tau = {vid(k, i): vid(k - 1, i) for k in range(period) for i in dtype.vertices}
    verts = list(range(period * n))
    return TranslationQuiver(verts, sorted(arrows), tau, {v: divmod(v, n) for v in verts})


@dataclass
class HomConfigurations:
    period: int
    m: int
    quiver: TranslationQuiver
    configurations: list[TiltingSet]

    def tau_shift(self, v: int, k: int) -> int:
        for _ in range(k):
            v = self.quiver.tau[v]
        return v

    def is_stable(self, c: TiltingSet) -> bool:
        return sorted(self.tau_shift(v, self.m) for v in c) == list(c)

    def per_domain(self, c: TiltingSet, rank: int) -> list[int]:
        """Members in each of the fundamental domains for τ^m."""
        doms = self.period // self.m
        counts = [0] * doms
        for v in c:
            counts[(v // rank) // self.m] += 1
        return counts


def hom_configurations(dtype: DynkinType, copies: int = 2, max_rank: int = 4) -> HomConfigurations:
    if dtype.rank > max_rank:
        raise PreconditionViolated(f"Hom-configuration enumeration is limited to rank <= {max_rank}")
    h, m = coxeter_data(dtype)
    period = copies * m
    tq = zdelta_quotient(dtype, period)
    lc = linearize(tq, coxeter=h)
    verts = tq.vertices
    hom = [[lc.hom_dim(x, y) for y in verts] for x in verts]
    adj = [
        _bits(y for y in verts if y != x and hom[x][y] == 0 and hom[y][x] == 0) for x in verts
    ]
    configs = [
        c
        for c in bron_kerbosch(adj)
        if all(any(hom[z][x] for x in c) for z in verts)
    ]
    return HomConfigurations(period, m, tq, sorted(configs))


def quotient_hom_from_derived(dtype: DynkinType, period: int) -> list[list[int]]:
    """Hom dimensions on ZΔ/τ^period summed from Hom in D over τ^period-orbits."""
    q, _ = alternating_orientation(dtype)
    mc = knit_module_ar_quiver(q)
    h, _ = coxeter_data(dtype)
    reach = h + 2
    copies = reach // period + 2
    w = DWindow(mc, -copies * period, copies * period)
    n = dtype.rank
    out = [[0] * (period * n) for _ in range(period * n)]
    for k in range(period):
        for i in dtype.vertices:
            x = w.labels[w.vid(k, i)]
            for k2 in range(-copies * period, copies * period + 1):
                for j in dtype.vertices:
                    y = w.labels[w.vid(k2, j)]
                    d = hom_derived(mc, x, y)
                    if d:
                        out[k * n + i - 1][(k2 % period) * n + j - 1] += d
    return out
