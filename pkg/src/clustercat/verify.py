"""The invariant battery behind ``clustercat verify``."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import dynkin
from .cluster import check_exchange_conjecture, verify_cluster_tilting_bijection
from .dynkin import Orientation, alternating_orientation, compatibility_degree
from .homs import cluster_homs, hom_derived, tables
from .knitting import ClusterCategory, functor_f, lift, mesh_additive
from .mesh import linearize, mesh_relation
from .tilting import (
    almost_complete_sets,
    check_lifts,
    complements,
    enumerate_tilting_sets,
    exchange_graph,
    is_ext_configuration,
)
from .triangles import verify_exchange_edges


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


def _roots(cc: ClusterCategory) -> tuple[bool, str]:
    d = cc.dtype
    n = d.rank
    expected = {"A": n * (n + 1) // 2, "D": n * (n - 1), "E": {6: 36, 7: 63, 8: 120}.get(n)}[d.series]
    roots = dynkin.positive_roots(d)
    aps = set(dynkin.almost_positive_roots(d))
    _, bip = alternating_orientation(d)
    bij = all({dynkin.sigma(d, i, a) for a in aps} == aps for i in d.vertices)
    bij &= all({dynkin.tau_pm(d, s, a, bip) for a in aps} == aps for s in "+-")
    euler = all(dynkin.euler_form(r, r, cc.orientation) == 1 for r in roots)
    ok = len(roots) == expected and bij and euler
    return ok, f"{len(roots)} positive roots (expected {expected}); sigma/tau bijective: {bij}"


def _knitting(cc: ClusterCategory) -> tuple[bool, str]:
    mc = cc.mc
    mq, cq = mc.quiver, cc.quiver
    ok = len(mc) == len(dynkin.positive_roots(cc.dtype))
    ok &= not mq.check_translation() and not cq.check_translation() and cq.is_stable()
    ok &= mesh_additive(mq, {v: mc.dim(v) for v in mq.vertices})
    agrees = all(
        cc.tau[cc.object_of_module(v)] == cc.object_of_module(mc.tau(v))
        for v in range(len(mc))
        if not mc.is_projective(v)
    )
    ok &= agrees and sum(len(o) for o in cc.tau_orbits()) == len(cc)
    return ok, f"{len(mc)} modules, {len(cc)} objects, {len(cq.arrows)} arrows in the cluster quiver"


def _homs(cc: ClusterCategory) -> tuple[bool, str]:
    t = tables(cc.mc)
    ch = cluster_homs(cc)
    n = len(cc)
    dual = all(t.hom[u][v] == t.hom_dual[v][u] for u in range(len(cc.mc)) for v in range(len(cc.mc)))
    sym = all(ch.ext[x][y] == ch.ext[y][x] for x in range(n) for y in range(n))
    serre = all(ch.ext[x][y] == ch.hom[y][cc.tau[x]] for x in range(n) for y in range(n))
    inv = all(ch.ext[cc.tau[x]][cc.tau[y]] == ch.ext[x][y] for x in range(n) for y in range(n))
    ends = all(ch.hom[x][x] == 1 and ch.ext[x][x] == 0 for x in range(n))
    few = True
    for x in range(n):
        xh = lift(cc.mc, cc.objects[x])
        for y in range(n):
            yh = lift(cc.mc, cc.objects[y])
            nz = [i for i in range(-4, 5) if hom_derived(cc.mc, functor_f(cc.mc, xh, i), yh)]
            few &= set(nz) <= {-1, 0} and len(nz) <= 1
    ok = dual and sym and serre and inv and ends and few
    return ok, f"hammock duality {dual}, symmetry {sym}, Serre {serre}, tau-invariance {inv}, F-window {few}"


def _compatibility(cc: ClusterCategory) -> tuple[bool, str]:
    q, bip = alternating_orientation(cc.dtype)
    if q != cc.orientation:
        return True, "skipped: orientation is not alternating"
    ext = cluster_homs(cc).ext
    labels = cc.labels()
    bad = [
        (labels[x], labels[y])
        for x in range(len(cc))
        for y in range(len(cc))
        if x != y and ext[x][y] != compatibility_degree(cc.dtype, labels[x], labels[y], bip)
    ]
    swapped = all(
        compatibility_degree(cc.dtype, a, b, bip) == compatibility_degree(cc.dtype, a, b, bip.swapped())
        for a in labels
        for b in labels
        if a != b
    )
    return not bad and swapped, f"{len(bad)} mismatches between Ext and the degree; bipartition swap invariant: {swapped}"


def _oracle(cc: ClusterCategory) -> tuple[bool, str]:
    mc = cc.mc
    h = cc.dtype.coxeter_number
    lm = linearize(mc.quiver, coxeter=h)
    lc = linearize(cc.quiver, coxeter=h)
    t = tables(mc)
    ch = cluster_homs(cc)
    mod = all(lm.hom_dim(u, v) == t.hom[u][v] for u in range(len(mc)) for v in range(len(mc)))
    clu = all(lc.hom_dim(x, y) == ch.hom[x][y] for x in range(len(cc)) for y in range(len(cc)))
    mesh = all(not mesh_relation(lc, y) for y in cc.quiver.vertices)
    return mod and clu and mesh, f"module dims {mod}, cluster dims {clu}, mesh relations vanish {mesh}, length {lc.length}"


def _tilting(cc: ClusterCategory) -> tuple[bool, str]:
    sets = enumerate_tilting_sets(cc)
    configs = all(is_ext_configuration(cc, t) for t in sets)
    acts = almost_complete_sets(cc)
    for tb in acts:
        complements(cc, tb)
    eg = exchange_graph(cc)
    regular = set(eg.degrees()) <= {cc.rank}
    lifts = check_lifts(cc) if cc.rank <= 5 else {"skipped": True}
    ok = configs and regular and eg.is_connected() and all(lifts.values())
    return ok, (
        f"{len(sets)} tilting sets, {len(acts)} almost complete sets with 2 complements each, "
        f"{len(eg.edges)} exchange edges, lifts {lifts}"
    )


def _triangles(cc: ClusterCategory) -> tuple[bool, str]:
    rep = verify_exchange_edges(cc)
    inside = sum(r.in_tbar for r in rep)
    disjoint = sum(r.disjoint for r in rep)
    lifted = sum(-1 in r.triangles.rotation.values() for r in rep)
    return inside == len(rep), (
        f"{inside}/{len(rep)} edges with middle terms in the shared part, {disjoint} disjoint, "
        f"{lifted} needed the lifted computation"
    )


def _cluster(cc: ClusterCategory) -> tuple[bool, str]:
    rep = verify_cluster_tilting_bijection(cc.dtype)
    ok = all(v for k, v in rep.items() if isinstance(v, bool))
    return ok, ", ".join(f"{k}={v}" for k, v in rep.items())


def _conjecture(cc: ClusterCategory) -> tuple[bool, str]:
    rep = check_exchange_conjecture(cc.dtype)
    fails = [e for e in rep if not e.holds or not e.disjoint]
    detail = f"{len(rep) - len(fails)}/{len(rep)} edges satisfy the exchange relation"
    for e in fails[:5]:
        detail += f"; FAIL {e.lhs} != {e.rhs}"
    return not fails, detail


SUITES: dict[str, Callable[[ClusterCategory], tuple[bool, str]]] = {
    "roots": _roots,
    "knitting": _knitting,
    "homs": _homs,
    "compatibility": _compatibility,
    "oracle": _oracle,
    "tilting": _tilting,
    "triangles": _triangles,
    "cluster": _cluster,
    "conjecture": _conjecture,
}


def run_suites(q: Orientation, names: list[str] | None = None) -> list[SuiteResult]:
    cc = ClusterCategory(q)
    out = []
    for name in names or list(SUITES):
        t0 = time.perf_counter()
        try:
            ok, detail = SUITES[name](cc)
        except Exception as exc:  # a failing suite must not hide the others
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(SuiteResult(name, ok, detail, time.perf_counter() - t0))
    return out
