"""Acceptance criteria, one check per criterion.

Run under pytest (one PASS/FAIL line per criterion is printed) or directly
with ``python tests/test_acceptance.py``.  Criterion 12 is a stretch goal:
its line is printed but it never fails the run.
"""

import itertools
import sys
import time
from fractions import Fraction
from math import prod
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from clustercat.cluster import (  # noqa: E402
    Seed,
    check_exchange_conjecture,
    enumerate_seeds,
    matrix_from_quiver,
    mutate_matrix,
    verify_cluster_tilting_bijection,
)
from clustercat.dynkin import DynkinType, alternating_orientation, compatibility_degree, coxeter_data  # noqa: E402
from clustercat.errors import LaurentViolation  # noqa: E402
from clustercat.homs import cluster_homs, ext_mod, hom_mod, sectional_slice, tables  # noqa: E402
from clustercat.mesh import end_quiver, linearize  # noqa: E402
from clustercat.tilting import (  # noqa: E402
    almost_complete_sets,
    check_lifts,
    complements,
    enumerate_tilting_sets,
    exceptional_complex_fvector,
    exchange_graph,
    f_stable_in_window,
    figure_window,
    hom_configurations,
    is_ext_configuration,
    window_e1,
    window_e2_failures,
    window_maximal,
)
from clustercat.triangles import frame, unique_extension_middle, verify_exchange_edges  # noqa: E402

from conftest import category  # noqa: E402

FIVE = ["A1", "A2", "A3", "A4", "D4"]
BOTH = ("alternating", "linear")


def c1():
    cc = category("A3")
    eg = exchange_graph(cc)
    fv = exceptional_complex_fvector(cc)
    objects = (len(cc), len(category("A3", "linear")))
    ok = (
        objects == (9, 9)
        and len(eg.vertices) == 14
        and set(eg.degrees()) == {3}
        and eg.is_connected()
        and len(eg.edges) == 21
        and fv == [1, 9, 21, 14]
    )
    return ok, f"objects {objects}, tilting sets {len(eg.vertices)}, edges {len(eg.edges)}, f-vector {tuple(fv)}"


def c2():
    t0 = time.perf_counter()
    total = 0
    bad = []
    for name in ["A1", "A2", "A3", "A4", "A5", "D4", "D5"]:
        for kind in BOTH:
            cc = category(name, kind)
            for tb in almost_complete_sets(cc):
                total += 1
                try:
                    complements(cc, tb)
                except Exception as exc:  # report, do not stop
                    bad.append(f"{name}/{kind} {tb}: {exc}")
    dt = time.perf_counter() - t0
    return not bad and dt < 60, f"{total} almost complete sets, {len(bad)} without two complements, {dt:.1f}s"


def c3():
    pairs = bad = 0
    for name in FIVE:
        d = DynkinType.parse(name)
        q, bip = alternating_orientation(d)
        cc = category(name)
        ext = cluster_homs(cc).ext
        labels = cc.labels()
        for x, y in itertools.permutations(range(len(cc)), 2):
            pairs += 1
            bad += ext[x][y] != compatibility_degree(d, labels[x], labels[y], bip)
    return bad == 0, f"{pairs} ordered pairs, {bad} mismatches"


def c4():
    pairs = bad = 0
    for name in FIVE:
        for kind in BOTH:
            cc = category(name, kind)
            ch = cluster_homs(cc)
            for x, y in itertools.product(range(len(cc)), repeat=2):
                pairs += 1
                bad += ch.ext[x][y] != ch.ext[y][x] or ch.ext[x][y] != ch.hom[y][cc.tau[x]]
    return bad == 0, f"{pairs} pairs, {bad} violations of symmetry or Serre duality"


def c5():
    t0 = time.perf_counter()
    pairs = bad = 0
    for name in FIVE:
        for kind in BOTH:
            cc = category(name, kind)
            h = cc.dtype.coxeter_number
            lm = linearize(cc.mc.quiver, coxeter=h)
            lc = linearize(cc.quiver, coxeter=h)
            t = tables(cc.mc)
            ch = cluster_homs(cc)
            for u, v in itertools.product(range(len(cc.mc)), repeat=2):
                pairs += 1
                bad += lm.hom_dim(u, v) != t.hom[u][v]
            for x, y in itertools.product(range(len(cc)), repeat=2):
                pairs += 1
                bad += lc.hom_dim(x, y) != ch.hom[x][y]
    dt = time.perf_counter() - t0
    return bad == 0 and dt < 120, f"{pairs} pairs, {bad} disagreements, {dt:.1f}s"


def c6():
    equal = True
    for name in FIVE:
        cc = category(name)
        sets = set(enumerate_tilting_sets(cc))
        # every subset of ind C, of any size
        configs = {
            c
            for k in range(len(cc) + 1)
            for c in itertools.combinations(range(len(cc)), k)
            if is_ext_configuration(cc, c)
        }
        equal &= configs == sets
    lifts = all(all(check_lifts(category(n)).values()) for n in ["A2", "A3", "D4"])
    mc = category("A3").mc
    w, shown, filled, n = figure_window(mc)
    inner = [v for v in shown if v in set(w.interior(2))]
    fig = (
        window_e1(w, filled)
        and window_maximal(w, filled, shown)
        and window_e2_failures(w, filled, inner) == [n]
        and not f_stable_in_window(w, filled)
    )
    return equal and lifts and fig, (
        f"tilting = Ext-configurations {equal}, lifts F-stable {lifts}, "
        f"window set failing E2 only at N={w.coords(n)}: {fig}"
    )


def c7():
    d = DynkinType.parse("A3")
    hc = hom_configurations(d)
    stable = all(hc.is_stable(c) and hc.per_domain(c, 3) == [3, 3] for c in hc.configurations)
    table = {n: coxeter_data(DynkinType.parse(n))[1] for n in ["A3", "A5", "D4", "D6", "E6", "E7", "E8"]}
    expect = {"A3": 3, "A5": 5, "D4": 5, "D6": 9, "E6": 11, "E7": 17, "E8": 29}
    ok = hc.m == 3 and bool(hc.configurations) and stable and table == expect
    return ok, f"m = {hc.m}, {len(hc.configurations)} Hom-configurations, all tau^3-stable with 3+3: {stable}, m-table {table == expect}"


def c8():
    slices = True
    for kind in BOTH:
        mc = category("A4", kind).mc
        slices &= all(
            frame(mc, u, "starting").members == sectional_slice(mc, u, True)
            and frame(mc, u, "ending").members == sectional_slice(mc, u, False)
            for u in range(len(mc))
        )
    additive = guard = True
    edges = inside = 0
    for name in ["A1", "A2", "A3", "A4", "A5", "D4", "D5"]:
        for kind in BOTH:
            cc = category(name, kind)
            mc = cc.mc
            for m, ms in itertools.product(range(len(mc)), repeat=2):
                if ext_mod(mc, m, ms) != 1:
                    continue
                mid = unique_extension_middle(mc, m, ms)
                total = [sum(c) for c in zip(*(mc.dim(v) for v in mid))] or [0] * mc.dtype.rank
                additive &= len(set(mid)) == len(mid) and total == [a + b for a, b in zip(mc.dim(m), mc.dim(ms))]
                guard &= all(hom_mod(mc, ms, v) == 1 and hom_mod(mc, v, m) == 1 for v in mid)
            for r in verify_exchange_edges(cc):
                edges += 1
                inside += r.in_tbar
    ok = slices and additive and guard and inside == edges
    return ok, (
        f"A4 frames = slices {slices}, multiplicity-free and additive {additive}, "
        f"Hom = 1 guard {guard}, {inside}/{edges} edges with middle terms in the shared part"
    )


def c9():
    counts = {}
    try:
        for name in ["A1", "A2", "A3"]:
            q = alternating_orientation(DynkinType.parse(name))[0]
            en = enumerate_seeds(Seed.initial(matrix_from_quiver(q)))
            counts[name] = (len(en.clusters), len(en.variables))
        reps = {n: verify_cluster_tilting_bijection(DynkinType.parse(n)) for n in ["A2", "A3", "A4"]}
    except LaurentViolation as exc:
        return False, f"LaurentViolation: {exc}"
    bij = all(all(v for v in r.values() if isinstance(v, bool)) for r in reps.values())
    ok = counts == {"A1": (2, 2), "A2": (5, 5), "A3": (14, 9)} and bij
    return ok, f"(clusters, variables) {counts}, bijection with full edge agreement for A2-A4: {bij}"


def c10():
    cc = category("A3", "linear")
    x = matrix_from_quiver(cc.orientation)
    xp = mutate_matrix(x, 2)
    mats = x == ((0, 1, 0), (-1, 0, 1), (0, -1, 0)) and xp == ((0, -1, 1), (1, 0, -1), (-1, 1, 0))
    lc = linearize(cc.quiver, coxeter=cc.dtype.coxeter_number)
    p3, p2, p1, s1 = (cc.by_root(r) for r in [(0, 0, 1), (0, 1, 1), (1, 1, 1), (1, 0, 0)])
    path = end_quiver(lc, [p3, p2, p1]) == {(p3, p2): 1, (p2, p1): 1}
    cycle = end_quiver(lc, [p3, p1, s1]) == {(p3, p1): 1, (p1, s1): 1, (s1, p3): 1}
    return mats and path and cycle, f"X and X' {mats}, linear quiver {path}, oriented 3-cycle {cycle}"


def c11():
    t0 = time.perf_counter()
    lines = []
    total = 0
    for name in ["A2", "A3", "A4", "D4"]:
        for e in check_exchange_conjecture(DynkinType.parse(name)):
            total += 1
            if not (e.holds and e.disjoint):
                lines.append(f"{name}: {e.lhs} != {e.rhs}")
    dt = time.perf_counter() - t0
    detail = f"{total - len(lines)}/{total} edges satisfy x x* = prod(B) + prod(B'), {dt:.1f}s"
    if lines:
        detail += "; " + "; ".join(lines)
    return not lines and dt < 120, detail


def _catalan(h: int, exponents: list[int]) -> int:
    return int(prod(Fraction(h + e + 1, e + 1) for e in exponents))


def c12():
    d4_expected = _catalan(6, [1, 3, 3, 5])
    d4 = len(enumerate_tilting_sets(category("D4")))
    q = alternating_orientation(DynkinType.parse("D4"))[0]
    d4_clusters = len(enumerate_seeds(Seed.initial(matrix_from_quiver(q))).clusters)
    t0 = time.perf_counter()
    e6 = category("E6")
    e6_sets = len(enumerate_tilting_sets(e6))
    q6 = alternating_orientation(e6.dtype)[0]
    e6_clusters = len(enumerate_seeds(Seed.initial(matrix_from_quiver(q6))).clusters)
    dt = time.perf_counter() - t0
    ok = d4 == d4_clusters == d4_expected == 50 and e6_sets == e6_clusters == _catalan(12, [1, 4, 5, 7, 8, 11]) and dt < 600
    return ok, f"D4 {d4} tilting sets / {d4_clusters} clusters (formula {d4_expected}); E6 {e6_sets}/{e6_clusters} in {dt:.1f}s"


CRITERIA = [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12]
STRETCH = {12}


def report(n: int) -> tuple[bool, str]:
    try:
        ok, detail = CRITERIA[n - 1]()
    except Exception as exc:  # a crash is a failure with its reason shown
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    tag = " (stretch, non-gating)" if n in STRETCH else ""
    return ok, f"criterion {n:2d}{tag}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("n", range(1, 13))
def test_criterion(n, capsys):
    ok, line = report(n)
    with capsys.disabled():
        print("\n" + line)
    if n not in STRETCH:
        assert ok, line


if __name__ == "__main__":
    results = [report(n) for n in range(1, 13)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for (ok, _), n in zip(results, range(1, 13)) if n not in STRETCH) else 1)
