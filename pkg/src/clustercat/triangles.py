"""Exchange pairs, frames and the middle terms of exchange triangles."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from .errors import PreconditionViolated, RotationNotFound
from .dynkin import positive_roots
from .homs import (
    cluster_homs,
    ending_function,
    ext_derived,
    ext_mod,
    hom_derived,
    hom_mod,
    starting_function,
)
from .knitting import (
    ClusterCategory,
    DerivedObject,
    ModuleCategory,
    f_normalize,
    functor_f,
    lift,
    shift,
)
from .tilting import exchange_graph


def is_exchange_pair(cc: ClusterCategory, x: int, y: int) -> bool:
    return x != y and cluster_homs(cc).ext[x][y] == 1


@dataclass(frozen=True)
class Frame:
    base: int
    kind: str
    members: frozenset[int]


def frame(mc: ModuleCategory, u: int, kind: str = "starting") -> Frame:
    """``F_s(U) = {V : s_U(V) != 0 = s_U(τV)}``; the ending frame uses
    ``e_U`` and ``τ^{-1}``.  A missing translate counts as 0."""
    if kind == "starting":
        vals, step = starting_function(mc, u).values, mc.tau
    elif kind == "ending":
        vals, step = ending_function(mc, u).values, mc.tau_inv
    else:
        raise ValueError(f"unknown frame kind {kind!r}")
    members = set()
    for v, s in enumerate(vals):
        w = step(v)
        if s and (w is None or vals[w] == 0):
            members.add(v)
    return Frame(u, kind, frozenset(members))


def middle_by_frames(mc: ModuleCategory, m: int, mstar: int) -> list[int]:
    return sorted(frame(mc, mstar, "starting").members & frame(mc, m, "ending").members)


def unique_extension_middle(mc: ModuleCategory, m: int, mstar: int) -> list[int]:
    """Indecomposable summands of X in the non-split ``0 -> M* -> X -> M -> 0``.

    Requires ``dim Ext^1(M, M*) = 1``; every summand then occurs once.
    """
    e = ext_mod(mc, m, mstar)
    if e != 1:
        raise PreconditionViolated(f"Ext^1({mc.dim(m)}, {mc.dim(mstar)}) has dimension {e}")
    return [
        v
        for v in range(len(mc))
        if hom_mod(mc, mstar, v)
        and hom_mod(mc, v, m)
        and ext_mod(mc, v, mstar) == 0
        and ext_mod(mc, m, v) == 0
    ]


@dataclass
class ExchangeTriangleResult:
    m: int
    m_star: int
    b: list[int]  # middle of M* -> B -> M
    b_prime: list[int]  # middle of M -> B' -> M*
    rotation: dict[str, int] = field(default_factory=dict)

    def to_json(self, cc: ClusterCategory) -> dict:
        return {
            "M": cc.name(self.m),
            "Mstar": cc.name(self.m_star),
            "B": [cc.name(k) for k in self.b],
            "Bprime": [cc.name(k) for k in self.b_prime],
        }


def _rotated_middle(cc: ClusterCategory, end: int, start: int) -> tuple[list[int], int]:
    """Middle term of the non-split triangle ``start -> E -> end``."""
    mc = cc.mc
    period = lcm(*(len(o) for o in cc.tau_orbits()))
    for t in range(period):
        a, b = cc.tau_power(end, t), cc.tau_power(start, t)
        if not (cc.is_module(a) and cc.is_module(b)):
            continue
        u, v = cc.module_vertex(a), cc.module_vertex(b)
        if ext_mod(mc, u, v) != 1:
            continue
        mid = unique_extension_middle(mc, u, v)
        return sorted(cc.tau_power(cc.object_of_module(w), -t) for w in mid), t
    raise RotationNotFound(f"no rotation of ({cc.name(start)}, {cc.name(end)}) into mod kQ")


def derived_class(x: DerivedObject) -> tuple[int, ...]:
    sign = -1 if x.shift % 2 else 1
    return tuple(sign * c for c in x.root)


def lifted_triangle(cc: ClusterCategory, end: int, start: int) -> tuple[DerivedObject, DerivedObject, list[DerivedObject]]:
    """Lift ``start -> E -> end`` to a triangle ``Y -> E -> X -> Y[1]`` in D.

    X lifts ``end``; ``Y[1]`` is the F-translate of a lift of ``τ_C start``
    receiving the non-zero map from X.  The summands of E are the
    indecomposables V with ``Hom(Y, V) != 0 != Hom(V, X)`` and
    ``Ext^1(V, Y) = 0 = Ext^1(X, V)``; any such V sits in degree ``X.shift``
    or one below.
    """
    mc = cc.mc
    xh = lift(mc, cc.objects[end])
    base = lift(mc, cc.objects[cc.tau[start]])
    targets = [functor_f(mc, base, k) for k in (-1, 0, 1)]
    hits = [t for t in targets if hom_derived(mc, xh, t) == 1]
    if len(hits) != 1:
        raise PreconditionViolated(f"no unique lift of the map {cc.name(end)} -> tau {cc.name(start)}")
    yh = shift(hits[0], -1)
    cands = [
        DerivedObject(r, s)
        for s in (xh.shift - 1, xh.shift)
        for r in positive_roots(cc.dtype)
    ]
    mid = [
        v
        for v in cands
        if hom_derived(mc, yh, v)
        and hom_derived(mc, v, xh)
        and ext_derived(mc, v, yh) == 0
        and ext_derived(mc, xh, v) == 0
    ]
    return xh, yh, mid


def derived_middle(cc: ClusterCategory, end: int, start: int) -> list[int]:
    xh, yh, mid = lifted_triangle(cc, end, start)
    total = [sum(c) for c in zip(*(derived_class(v) for v in mid))] or [0] * cc.rank
    expect = [a + b for a, b in zip(derived_class(xh), derived_class(yh))]
    if total != expect:
        raise PreconditionViolated(f"class of the lifted middle term {total} != {expect}")
    return sorted(cc.index[f_normalize(cc.mc, v)] for v in mid)


def exchange_triangles(cc: ClusterCategory, x: int, y: int, fallback: bool = True) -> ExchangeTriangleResult:
    """Both exchange triangles for the pair ``M = x``, ``M* = y``.

    Middle terms come from a rotation into mod kQ.  When no rotation exists
    and ``fallback`` is set, the triangle is lifted to D instead; the
    rotation entry for that side is then -1.
    """
    if not is_exchange_pair(cc, x, y):
        raise PreconditionViolated(f"({cc.name(x)}, {cc.name(y)}) is not an exchange pair")
    mesh = lambda v: sorted(cc.quiver.pred[v])  # noqa: E731
    if cc.tau[y] == x:
        # B vanishes: M -> M*[1] is an isomorphism
        return ExchangeTriangleResult(x, y, [], mesh(y))
    if cc.tau[x] == y:
        return ExchangeTriangleResult(x, y, mesh(x), [])
    b, t = _middle(cc, x, y, fallback)
    bp, tp = _middle(cc, y, x, fallback)
    return ExchangeTriangleResult(x, y, b, bp, {"b": t, "b_prime": tp})


def _middle(cc: ClusterCategory, end: int, start: int, fallback: bool) -> tuple[list[int], int]:
    try:
        return _rotated_middle(cc, end, start)
    except RotationNotFound:
        if not fallback:
            raise
        return derived_middle(cc, end, start), -1


@dataclass
class EdgeReport:
    tbar: tuple[int, ...]
    m: int
    m_star: int
    triangles: ExchangeTriangleResult
    in_tbar: bool
    disjoint: bool


def verify_exchange_edges(cc: ClusterCategory) -> list[EdgeReport]:
    out = []
    for tbar, m, ms in exchange_graph(cc).exchange_data(cc):
        res = exchange_triangles(cc, m, ms)
        tb = set(tbar)
        out.append(
            EdgeReport(
                tbar,
                m,
                ms,
                res,
                set(res.b) <= tb and set(res.b_prime) <= tb,
                not set(res.b) & set(res.b_prime),
            )
        )
    return out
