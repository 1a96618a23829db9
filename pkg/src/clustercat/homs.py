"""Hom and Ext dimensions in mod kQ, D and C.

Hom in mod kQ comes from hammocks (starting functions) on the knitted
AR-quiver; Ext^1 from the Euler form; everything in D and C is reduced to
those two numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .dynkin import euler_form
from .errors import NegativeExt, NegativeHammock
from .knitting import (
    ClusterCategory,
    DerivedObject,
    ModuleCategory,
    functor_f,
    lift,
)


@dataclass
class Hammock:
    source: int
    values: list[int]
    ending: bool = False

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def support(self) -> list[int]:
        return [v for v, x in enumerate(self.values) if x]


def starting_function(mc: ModuleCategory, u: int) -> Hammock:
    """``V -> dim Hom(U, V)`` by mesh additivity from ``U``.

    For ``V != U`` the almost split sequence ending in ``V`` gives
    ``s(V) = sum of s over the predecessors - s(tau V)``; for projective V
    the tau-term is absent.
    """
    tq = mc.quiver
    vals = [0] * len(mc)
    for v in tq.topological_order():
        if v == u:
            vals[v] = 1
            continue
        s = sum(vals[p] for p in tq.pred[v])
        tv = tq.tau.get(v)
        if tv is not None:
            s -= vals[tv]
        if s < 0:
            raise NegativeHammock(f"s_{u}({v}) = {s}")
        vals[v] = s
    return Hammock(u, vals)


def ending_function(mc: ModuleCategory, u: int) -> Hammock:
    """``V -> dim Hom(V, U)``: the dual recursion on the opposite quiver."""
    tq = mc.quiver
    vals = [0] * len(mc)
    for v in reversed(tq.topological_order()):
        if v == u:
            vals[v] = 1
            continue
        s = sum(vals[w] for w in tq.succ[v])
        tv = tq.tau_inv.get(v)
        if tv is not None:
            s -= vals[tv]
        if s < 0:
            raise NegativeHammock(f"e_{u}({v}) = {s}")
        vals[v] = s
    return Hammock(u, vals, ending=True)


def sectional_slice(mc: ModuleCategory, u: int, forward: bool = True) -> set[int]:
    """Vertices reachable from ``u`` by sectional paths.

    A path is sectional when it never contains ``x -> y -> tau^{-1} x``.
    """
    tq = mc.quiver
    nxt = tq.succ if forward else tq.pred
    skip = tq.tau_inv if forward else tq.tau
    states = {(u, None)}
    stack = [(u, None)]
    while stack:
        v, prev = stack.pop()
        for w in nxt[v]:
            if prev is not None and skip.get(prev) == w:
                continue
            if (w, v) not in states:
                states.add((w, v))
                stack.append((w, v))
    return {v for v, _ in states}


class HomTables:
    """Memoized Hom/Ext tables for one module category.

    Tables are filled eagerly on first access, so after warm-up the object
    is read-only and safe to share.
    """

    def __init__(self, mc: ModuleCategory):
        self.mc = mc

    @cached_property
    def hom(self) -> list[list[int]]:
        return [starting_function(self.mc, u).values for u in range(len(self.mc))]

    @cached_property
    def hom_dual(self) -> list[list[int]]:
        """``hom_dual[v][u] = e_v(u)``; equal to ``hom[u][v]`` when correct."""
        return [ending_function(self.mc, v).values for v in range(len(self.mc))]

    @cached_property
    def ext(self) -> list[list[int]]:
        mc = self.mc
        q = mc.orientation
        out = []
        for u in range(len(mc)):
            row = []
            for v in range(len(mc)):
                e = self.hom[u][v] - euler_form(mc.dim(u), mc.dim(v), q)
                if e < 0:
                    raise NegativeExt(f"Ext({mc.dim(u)}, {mc.dim(v)}) = {e}")
                row.append(e)
            out.append(row)
        return out


_TABLES: dict[int, HomTables] = {}


def tables(mc: ModuleCategory) -> HomTables:
    key = id(mc)
    t = _TABLES.get(key)
    if t is None or t.mc is not mc:
        t = _TABLES[key] = HomTables(mc)
    return t


def hom_mod(mc: ModuleCategory, m: int, n: int) -> int:
    return tables(mc).hom[m][n]


def ext_mod(mc: ModuleCategory, m: int, n: int) -> int:
    return tables(mc).ext[m][n]


def hom_derived(mc: ModuleCategory, x: DerivedObject, y: DerivedObject) -> int:
    d = y.shift - x.shift
    if d not in (0, 1):
        return 0
    m, n = mc.index[x.root], mc.index[y.root]
    return hom_mod(mc, m, n) if d == 0 else ext_mod(mc, m, n)


def ext_derived(mc: ModuleCategory, x: DerivedObject, y: DerivedObject) -> int:
    return hom_derived(mc, x, DerivedObject(y.root, y.shift + 1))


def hom_c(cc: ClusterCategory, x: int, y: int) -> int:
    """Sum of ``Hom_D(F^i x, y)`` over ``i in {-1, 0}``."""
    mc = cc.mc
    xh, yh = lift(mc, cc.objects[x]), lift(mc, cc.objects[y])
    return hom_derived(mc, xh, yh) + hom_derived(mc, functor_f(mc, xh, -1), yh)


def ext1_c(cc: ClusterCategory, x: int, y: int) -> int:
    mc = cc.mc
    if cc.is_module(x) and cc.is_module(y):
        m, n = cc.module_vertex(x), cc.module_vertex(y)
        return ext_mod(mc, m, n) + ext_mod(mc, n, m)
    if not cc.is_module(x) and not cc.is_module(y):
        return 0
    if cc.is_module(x):
        x, y = y, x
    p = mc.proj[cc.objects[x].vertex]
    return hom_mod(mc, p, cc.module_vertex(y))


class ClusterHoms:
    """Full Hom_C / Ext^1_C matrices over the objects of a cluster category."""

    def __init__(self, cc: ClusterCategory):
        self.cc = cc
        n = len(cc)
        self.hom = [[hom_c(cc, x, y) for y in range(n)] for x in range(n)]
        self.ext = [[ext1_c(cc, x, y) for y in range(n)] for x in range(n)]


_CHOMS: dict[int, ClusterHoms] = {}


def cluster_homs(cc: ClusterCategory) -> ClusterHoms:
    t = _CHOMS.get(id(cc))
    if t is None or t.cc is not cc:
        t = _CHOMS[id(cc)] = ClusterHoms(cc)
    return t


def ext_table(cc: ClusterCategory) -> list[list[int]]:
    return cluster_homs(cc).ext
