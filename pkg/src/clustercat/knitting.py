"""AR-quivers: knitting mod kQ, windows of ZQ, and the cluster quotient.

Conventions: the projective ``P_i`` has ``(dim P_i)_j`` equal to the number
of paths ``i -> j`` in Q, so an arrow ``i -> j`` of Q gives an irreducible
map ``P_j -> P_i``.  The projective slice of the AR-quiver is therefore a
copy of Q^op; the ZQ windows below are built on that slice.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Union

from .dynkin import (
    Orientation,
    Root,
    coxeter_data,
    positive_roots,
    root_key,
    root_label,
)
from .errors import KnittingDiverged


@dataclass
class TranslationQuiver:
    """Finite quiver with a partial translation.

    ``tau`` maps a vertex to its translate where defined.  Labels are
    arbitrary payloads attached to vertices (roots, derived objects, ...).
    """

    vertices: list[int]
    arrows: list[tuple[int, int]]
    tau: dict[int, int]
    labels: dict[int, Hashable] = field(default_factory=dict)

    @cached_property
    def succ(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {v: [] for v in self.vertices}
        for s, t in self.arrows:
            out[s].append(t)
        return out

    @cached_property
    def pred(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {v: [] for v in self.vertices}
        for s, t in self.arrows:
            out[t].append(s)
        return out

    @cached_property
    def tau_inv(self) -> dict[int, int]:
        return {y: x for x, y in self.tau.items()}

    def sigma(self, arrow: tuple[int, int]) -> tuple[int, int] | None:
        """Polarization: ``x -> y`` maps to ``tau(y) -> x`` when tau(y) exists."""
        x, y = arrow
        if y not in self.tau:
            return None
        return (self.tau[y], x)

    def check_translation(self) -> list[str]:
        """Return violated axioms (empty list when the quiver is valid)."""
        problems = []
        if any(s == t for s, t in self.arrows):
            problems.append("loop")
        if len(set(self.arrows)) != len(self.arrows):
            problems.append("multiple arrows")
        for x, tx in self.tau.items():
            if set(self.pred[x]) != set(self.succ[tx]):
                problems.append(f"mesh mismatch at {x}")
        if len(set(self.tau.values())) != len(self.tau):
            problems.append("tau not injective")
        return problems

    def is_stable(self) -> bool:
        return set(self.tau) == set(self.vertices) and set(self.tau.values()) == set(
            self.vertices
        )

    def topological_order(self) -> list[int]:
        indeg = {v: len(self.pred[v]) for v in self.vertices}
        heap = [v for v in self.vertices if indeg[v] == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            v = heapq.heappop(heap)
            order.append(v)
            for w in self.succ[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    heapq.heappush(heap, w)
        if len(order) != len(self.vertices):
            raise ValueError("quiver has an oriented cycle")
        return order


# -- mod kQ ----------------------------------------------------------------


@dataclass(frozen=True)
class ModuleVertex:
    root: Root
    projective: int | None = None
    injective: int | None = None


class ModuleCategory:
    """The knitted AR-quiver of mod kQ together with tau on vertices."""

    def __init__(self, q: Orientation, quiver: TranslationQuiver, modules: list[ModuleVertex]):
        self.orientation = q
        self.dtype = q.dtype
        self.quiver = quiver
        self.modules = modules
        self.index = {m.root: v for v, m in enumerate(modules)}
        n = self.dtype.rank
        self.proj = {m.projective: v for v, m in enumerate(modules) if m.projective}
        self.inj = {m.injective: v for v, m in enumerate(modules) if m.injective}
        assert len(self.proj) == n and len(self.inj) == n

    def __len__(self) -> int:
        return len(self.modules)

    def dim(self, v: int) -> Root:
        return self.modules[v].root

    def tau(self, v: int) -> int | None:
        return self.quiver.tau.get(v)

    def tau_inv(self, v: int) -> int | None:
        return self.quiver.tau_inv.get(v)

    def is_projective(self, v: int) -> bool:
        return self.modules[v].projective is not None

    def is_injective(self, v: int) -> bool:
        return self.modules[v].injective is not None


def knit_module_ar_quiver(q: Orientation) -> ModuleCategory:
    """Knit the AR-quiver of mod kQ from the projectives.

    Vertex ids are assigned at creation; the frontier is processed in
    ascending id order among vertices whose predecessors are all done.
    """
    dtype = q.dtype
    n = dtype.rank
    t = len(positive_roots(dtype))
    proj_dims = {i: q.paths_from(i) for i in dtype.vertices}
    inj_dims = {q.paths_to(i): i for i in dtype.vertices}

    roots: list[Root] = [proj_dims[i] for i in dtype.vertices]
    proj_of = {v: v + 1 for v in range(n)}
    arrows: list[tuple[int, int]] = [(j - 1, i - 1) for i, j in sorted(q.arrows)]
    tau: dict[int, int] = {}
    succ: dict[int, list[int]] = {v: [] for v in range(n)}
    pred: dict[int, list[int]] = {v: [] for v in range(n)}
    for s, d in arrows:
        succ[s].append(d)
        pred[d].append(s)

    processed: set[int] = set()
    while True:
        ready = [
            v for v in range(len(roots)) if v not in processed and all(p in processed for p in pred[v])
        ]
        if not ready:
            break
        x = min(ready)
        processed.add(x)
        if roots[x] in inj_dims:
            continue
        middle = list(succ[x])
        dim = tuple(
            sum(roots[e][k] for e in middle) - roots[x][k] for k in range(n)
        )
        if any(c < 0 for c in dim) or not any(dim):
            raise KnittingDiverged(f"mesh at {roots[x]} produced {dim}")
        z = len(roots)
        roots.append(dim)
        tau[z] = x
        succ[z], pred[z] = [], []
        for e in middle:
            arrows.append((e, z))
            succ[e].append(z)
            pred[z].append(e)
        if len(roots) > t:
            raise KnittingDiverged(f"more than {t} vertices knitted")

    if len(roots) != t or len(set(roots)) != t:
        raise KnittingDiverged(f"knitted {len(roots)} vertices, expected {t}")
    modules = [
        ModuleVertex(r, proj_of.get(v), inj_dims.get(r)) for v, r in enumerate(roots)
    ]
    quiver = TranslationQuiver(
        list(range(t)), arrows, tau, {v: r for v, r in enumerate(roots)}
    )
    return ModuleCategory(q, quiver, modules)


# -- derived category --------------------------------------------------------


@dataclass(frozen=True, order=True)
class DerivedObject:
    root: Root
    shift: int

    def __str__(self) -> str:
        return f"{root_label(self.root)}[{self.shift}]"


def tau_derived(mc: ModuleCategory, x: DerivedObject) -> DerivedObject:
    v = mc.index[x.root]
    if mc.is_projective(v):
        i = mc.modules[v].projective
        return DerivedObject(mc.dim(mc.inj[i]), x.shift - 1)
    return DerivedObject(mc.dim(mc.tau(v)), x.shift)


def tau_inv_derived(mc: ModuleCategory, x: DerivedObject) -> DerivedObject:
    v = mc.index[x.root]
    if mc.is_injective(v):
        i = mc.modules[v].injective
        return DerivedObject(mc.dim(mc.proj[i]), x.shift + 1)
    return DerivedObject(mc.dim(mc.tau_inv(v)), x.shift)


def shift(x: DerivedObject, k: int = 1) -> DerivedObject:
    return DerivedObject(x.root, x.shift + k)


def functor_f(mc: ModuleCategory, x: DerivedObject, power: int = 1) -> DerivedObject:
    """Apply ``F = tau^{-1}[1]`` (negative powers apply ``F^{-1}``)."""
    for _ in range(abs(power)):
        if power > 0:
            x = shift(tau_inv_derived(mc, x), 1)
        else:
            x = tau_derived(mc, shift(x, -1))
    return x


def in_fundamental_domain(mc: ModuleCategory, x: DerivedObject) -> bool:
    if x.shift == 0:
        return True
    return x.shift == 1 and mc.is_projective(mc.index[x.root])


# -- cluster category ---------------------------------------------------------


@dataclass(frozen=True)
class Module:
    root: Root

    @property
    def kind(self) -> str:
        return "module"


@dataclass(frozen=True)
class ShiftedProjective:
    vertex: int

    @property
    def kind(self) -> str:
        return "shifted"


ClusterObject = Union[Module, ShiftedProjective]


def f_normalize(mc: ModuleCategory, x: DerivedObject) -> ClusterObject:
    """Move ``x`` along its F-orbit into the fundamental domain."""
    while not in_fundamental_domain(mc, x):
        x = functor_f(mc, x, -1 if x.shift >= 1 else 1)
    if x.shift == 0:
        return Module(x.root)
    return ShiftedProjective(mc.modules[mc.index[x.root]].projective)


def lift(mc: ModuleCategory, x: ClusterObject) -> DerivedObject:
    """Representative of ``x`` in the fundamental domain."""
    if isinstance(x, Module):
        return DerivedObject(x.root, 0)
    return DerivedObject(mc.dim(mc.proj[x.vertex]), 1)


def gamma_label(x: ClusterObject, rank: int | None = None) -> Root:
    if isinstance(x, Module):
        return x.root
    return simple_root_of_rank(rank, x.vertex)


def simple_root_of_rank(rank: int | None, i: int) -> Root:
    if rank is None:
        raise ValueError("rank required to label a shifted projective")
    v = [0] * rank
    v[i - 1] = -1
    return tuple(v)


def gamma_inverse(a: Root) -> ClusterObject:
    if sum(a) == -1 and min(a) == -1:
        return ShiftedProjective(a.index(-1) + 1)
    return Module(tuple(a))


def zq_window(mc: ModuleCategory, lo: int, hi: int) -> TranslationQuiver:
    """Vertices ``(n, i)`` for ``lo <= n <= hi`` labelled by derived objects.

    ``(0, i)`` is ``P_i``; ``(n, i)`` is ``tau^{-n} P_i``.  Vertex ids are
    ``(n - lo) * rank + (i - 1)``.
    """
    if not lo <= 0 <= hi:
        raise ValueError("window must contain the projective slice")
    dtype = mc.dtype
    rank = dtype.rank
    labels: dict[int, DerivedObject] = {}
    for i in dtype.vertices:
        base = DerivedObject(mc.dim(mc.proj[i]), 0)
        x = base
        for k in range(0, hi + 1):
            labels[(k - lo) * rank + i - 1] = x
            x = tau_inv_derived(mc, x)
        x = base
        for k in range(0, lo - 1, -1):
            labels[(k - lo) * rank + i - 1] = x
            x = tau_derived(mc, x)
    vid = lambda k, i: (k - lo) * rank + i - 1  # noqa: E731
    arrows = []
    # arrow i -> j of Q gives P_j -> P_i on the slice
    slice_arrows = [(j, i) for i, j in mc.orientation.arrows]
    for k in range(lo, hi + 1):
        for a, b in sorted(slice_arrows):
            arrows.append((vid(k, a), vid(k, b)))
            if k + 1 <= hi:
                arrows.append((vid(k, b), vid(k + 1, a)))
    tau = {vid(k, i): vid(k - 1, i) for k in range(lo + 1, hi + 1) for i in dtype.vertices}
    verts = sorted(labels)
    return TranslationQuiver(verts, sorted(arrows), tau, labels)


def window_coords(lo: int, rank: int, v: int) -> tuple[int, int]:
    return v // rank + lo, v % rank + 1


class ClusterCategory:
    """Indecomposables of C = D/F indexed 0..N-1 in graded-lex gamma order."""

    def __init__(self, q: Orientation, mc: ModuleCategory | None = None):
        self.orientation = q
        self.dtype = q.dtype
        self.rank = q.dtype.rank
        self.mc = mc or knit_module_ar_quiver(q)
        objs: list[ClusterObject] = [Module(m.root) for m in self.mc.modules]
        objs += [ShiftedProjective(i) for i in self.dtype.vertices]
        objs.sort(key=lambda x: root_key(gamma_label(x, self.rank)))
        self.objects = objs
        self.index = {x: k for k, x in enumerate(objs)}
        self._build_quiver()

    def __len__(self) -> int:
        return len(self.objects)

    def label(self, k: int) -> Root:
        return gamma_label(self.objects[k], self.rank)

    def labels(self) -> list[Root]:
        return [self.label(k) for k in range(len(self))]

    def by_root(self, a: Root) -> int:
        return self.index[gamma_inverse(tuple(a))]

    def name(self, k: int) -> str:
        return root_label(self.label(k))

    def _tau_object(self, x: ClusterObject) -> ClusterObject:
        mc = self.mc
        if isinstance(x, ShiftedProjective):
            return Module(mc.dim(mc.inj[x.vertex]))
        v = mc.index[x.root]
        if mc.is_projective(v):
            return ShiftedProjective(mc.modules[v].projective)
        return Module(mc.dim(mc.tau(v)))

    def _build_quiver(self) -> None:
        h, _ = coxeter_data(self.dtype)
        window = zq_window(self.mc, 0, h + 2)
        arrows = []
        for s, t in window.arrows:
            src = window.labels[s]
            if not in_fundamental_domain(self.mc, src):
                continue
            arrows.append(
                (self.index[f_normalize(self.mc, src)], self.index[f_normalize(self.mc, window.labels[t])])
            )
        arrows = sorted(set(arrows))
        self.tau = [self.index[self._tau_object(x)] for x in self.objects]
        self.tau_inv = [0] * len(self.tau)
        for k, tk in enumerate(self.tau):
            self.tau_inv[tk] = k
        self.quiver = TranslationQuiver(
            list(range(len(self.objects))),
            arrows,
            {k: tk for k, tk in enumerate(self.tau)},
            {k: self.label(k) for k in range(len(self.objects))},
        )

    def tau_power(self, k: int, power: int) -> int:
        perm = self.tau if power >= 0 else self.tau_inv
        for _ in range(abs(power)):
            k = perm[k]
        return k

    def tau_orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        orbits = []
        for k in range(len(self)):
            if k in seen:
                continue
            orb = [k]
            seen.add(k)
            j = self.tau[k]
            while j != k:
                orb.append(j)
                seen.add(j)
                j = self.tau[j]
            orbits.append(orb)
        return orbits

    def is_module(self, k: int) -> bool:
        return isinstance(self.objects[k], Module)

    def module_vertex(self, k: int) -> int:
        """Vertex of the module AR-quiver for a module object."""
        return self.mc.index[self.objects[k].root]

    def object_of_module(self, v: int) -> int:
        return self.index[Module(self.mc.dim(v))]


def cluster_ar_quiver(q: Orientation) -> ClusterCategory:
    return ClusterCategory(q)


def mesh_additive(tq: TranslationQuiver, dims: dict[int, Iterable[int]]) -> bool:
    """Check ``dim x + dim tau x == sum of dims of the middle`` at every mesh."""
    for x, tx in tq.tau.items():
        mid = [dims[e] for e in tq.pred[x]]
        lhs = [a + b for a, b in zip(dims[x], dims[tx])]
        rhs = [sum(c) for c in zip(*mid)] if mid else [0] * len(lhs)
        if lhs != rhs:
            return False
    return True
