"""Command-line front end: ``clustercat <command> --type A3 ...``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import serialize
from .cluster import (
    Seed,
    denominator_vector,
    enumerate_seeds,
    matrix_from_quiver,
    mutate_seed,
)
from .dynkin import (
    DynkinType,
    Orientation,
    almost_positive_roots,
    alternating_orientation,
    parse_root,
    positive_roots,
    root_label,
)
from .errors import ClusterCatError
from .homs import cluster_homs
from .knitting import ClusterCategory
from .mesh import end_quiver, linearize
from .tilting import complements, enumerate_tilting_sets, exchange_graph
from .triangles import exchange_triangles
from .verify import SUITES, run_suites


class UsageError(Exception):
    pass


def parse_orientation(dtype: DynkinType, text: str) -> Orientation:
    """``alternating``, ``linear`` or an arrow list such as ``1>2,3>2``."""
    if text == "alternating":
        return alternating_orientation(dtype)[0]
    if text == "linear":
        return Orientation.linear(dtype)
    arrows = []
    for part in text.split(","):
        try:
            i, j = part.split(">")
            arrows.append((int(i), int(j)))
        except ValueError:
            raise UsageError(f"--orientation: cannot read arrow {part!r}") from None
    return Orientation(dtype, frozenset(arrows))


def _category(args) -> ClusterCategory:
    dtype = DynkinType.parse(args.type)
    return ClusterCategory(parse_orientation(dtype, args.orientation))


def _object(cc: ClusterCategory, text: str, flag: str) -> int:
    try:
        return cc.by_root(parse_root(text, cc.rank))
    except (ValueError, KeyError):
        raise UsageError(f"{flag}: {text!r} is not an object of C") from None


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_roots(args) -> None:
    dtype = DynkinType.parse(args.type)
    parse_orientation(dtype, args.orientation)  # roots do not depend on it, but reject bad input
    roots = almost_positive_roots(dtype) if args.almost else positive_roots(dtype)
    if args.format == "json":
        _emit(serialize.dumps([serialize.root_json(r) for r in roots]))
    else:
        _emit("\n".join(root_label(r) for r in roots))


def cmd_ar_quiver(args) -> None:
    cc = _category(args)
    if args.module:
        if args.format == "dot":
            _emit(serialize.module_quiver_dot(cc.mc, args.tau))
        elif args.format == "json":
            _emit(serialize.dumps(serialize.module_quiver_json(cc.mc)))
        else:
            mc = cc.mc
            _emit("\n".join(f"{root_label(mc.dim(s))} -> {root_label(mc.dim(t))}" for s, t in mc.quiver.arrows))
        return
    if args.format == "dot":
        _emit(serialize.cluster_quiver_dot(cc, args.tau))
    elif args.format == "json":
        _emit(serialize.dumps(serialize.cluster_quiver_json(cc)))
    else:
        _emit("\n".join(f"{cc.name(s)} -> {cc.name(t)}" for s, t in cc.quiver.arrows))


def cmd_cluster_objects(args) -> None:
    cc = _category(args)
    if args.format == "json":
        rows = [
            {"id": k, "kind": cc.objects[k].kind, "root": list(cc.label(k)), "tau": cc.tau[k]}
            for k in range(len(cc))
        ]
        _emit(serialize.dumps(rows))
    else:
        _emit(serialize.to_tsv(
            ["id", "label", "kind", "tau"],
            [(k, cc.name(k), cc.objects[k].kind, cc.name(cc.tau[k])) for k in range(len(cc))],
        ))


def cmd_ext_table(args) -> None:
    cc = _category(args)
    ext = cluster_homs(cc).ext
    names = [cc.name(k) for k in range(len(cc))]
    if args.format == "json":
        _emit(serialize.dumps(serialize.matrix_json(names, ext)))
    else:
        _emit(serialize.to_tsv([""] + names, [[names[i]] + row for i, row in enumerate(ext)]))


def cmd_tilting_list(args) -> None:
    cc = _category(args)
    sets = enumerate_tilting_sets(cc, args.threads)
    if args.count:
        _emit(str(len(sets)))
    elif args.format == "json":
        _emit(serialize.dumps([[cc.name(k) for k in t] for t in sets]))
    else:
        _emit("\n".join(" ".join(cc.name(k) for k in t) for t in sets))


def cmd_complements(args) -> None:
    cc = _category(args)
    tbar = [_object(cc, p, "--tbar") for p in args.tbar.split("|") if p.strip()]
    a, b = complements(cc, tbar)
    if args.format == "json":
        _emit(serialize.dumps([cc.name(a), cc.name(b)]))
    else:
        _emit(f"{cc.name(a)}\n{cc.name(b)}")


def cmd_exchange_graph(args) -> None:
    cc = _category(args)
    eg = exchange_graph(cc, args.threads)
    if args.format == "dot":
        _emit(serialize.exchange_graph_dot(cc, eg))
    elif args.format == "json":
        _emit(serialize.dumps(serialize.exchange_graph_json(cc, eg)))
    else:
        _emit(f"{len(eg.vertices)} vertices, {len(eg.edges)} edges, connected: {eg.is_connected()}")


def cmd_triangle(args) -> None:
    cc = _category(args)
    parts = args.pair.split("|")
    if len(parts) != 2:
        raise UsageError("--pair: expected two roots separated by '|'")
    x, y = (_object(cc, p, "--pair") for p in parts)
    res = exchange_triangles(cc, x, y)
    _emit(serialize.dumps(res.to_json(cc)))


def cmd_end_quiver(args) -> None:
    cc = _category(args)
    members = [_object(cc, p, "--set") for p in args.set.split("|") if p.strip()]
    if len(set(members)) != len(members):
        raise UsageError("--set: repeated object")
    arrows = end_quiver(linearize(cc.quiver, coxeter=cc.dtype.coxeter_number), members)
    if args.format == "dot":
        _emit(serialize.end_quiver_dot(cc, members, arrows))
    elif args.format == "json":
        rows = [[cc.name(a), cc.name(b), m] for (a, b), m in sorted(arrows.items())]
        _emit(serialize.dumps({"vertices": [cc.name(k) for k in members], "arrows": rows}))
    else:
        _emit("\n".join(f"{cc.name(a)} -> {cc.name(b)}" + (f" x{m}" if m > 1 else "")
                         for (a, b), m in sorted(arrows.items())))


def _initial_seed(args) -> Seed:
    dtype = DynkinType.parse(args.type)
    return Seed.initial(matrix_from_quiver(parse_orientation(dtype, args.orientation)))


def cmd_cluster_mutate(args) -> None:
    s = _initial_seed(args)
    try:
        seq = [int(k) for k in args.seq.split(",") if k.strip()]
    except ValueError:
        raise UsageError(f"--seq: cannot read {args.seq!r}") from None
    for k in seq:
        if not 1 <= k <= s.rank:
            raise UsageError(f"--seq: index {k} out of range 1..{s.rank}")
        s = mutate_seed(s, k)
    if args.format == "json":
        _emit(serialize.dumps({"variables": [str(v) for v in s.variables], "matrix": [list(r) for r in s.matrix]}))
    else:
        lines = [f"x{i + 1} = {v}" for i, v in enumerate(s.variables)]
        lines += [" ".join(f"{c:3d}" for c in row) for row in s.matrix]
        _emit("\n".join(lines))


def cmd_cluster_enumerate(args) -> None:
    en = enumerate_seeds(_initial_seed(args))
    clusters = sorted(sorted(str(v) for v in c) for c in en.clusters)
    variables = [{"variable": str(v), "denominator": list(denominator_vector(v))} for v in en.variables]
    if args.format == "json":
        _emit(serialize.dumps({"clusters": clusters, "variables": variables}))
    else:
        _emit(f"{len(en.clusters)} clusters, {len(en.variables)} variables")
        _emit("\n".join(f"{v['variable']}\t{root_label(tuple(v['denominator']))}" for v in variables))


def cmd_verify(args) -> int:
    dtype = DynkinType.parse(args.type)
    names = list(SUITES) if args.suite == "all" else args.suite.split(",")
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"--suite: unknown suite(s) {', '.join(unknown)}")
    results = run_suites(parse_orientation(dtype, args.orientation), names)
    width = max(len(r.name) for r in results)
    for r in results:
        _emit(f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}  {r.seconds:6.2f}s  {r.detail}")
    return 0 if all(r.passed for r in results) else 1


def cmd_report(args) -> None:
    from .plotting import plot_ar_quiver, plot_exchange_graph, plot_ext_heatmap
    from .tilting import exceptional_complex_fvector

    cc = _category(args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    eg = exchange_graph(cc, args.threads)
    en = enumerate_seeds(Seed.initial(matrix_from_quiver(cc.orientation)))
    census = [
        ("type", str(cc.dtype)),
        ("orientation", ",".join(f"{i}>{j}" for i, j in cc.orientation.sorted_arrows())),
        ("objects", len(cc)),
        ("tau_orbits", len(cc.tau_orbits())),
        ("tilting_sets", len(eg.vertices)),
        ("exchange_edges", len(eg.edges)),
        ("f_vector", " ".join(map(str, exceptional_complex_fvector(cc)))),
        ("clusters", len(en.clusters)),
        ("cluster_variables", len(en.variables)),
    ]
    (out / "census.tsv").write_text(serialize.to_tsv(["quantity", "value"], census))
    ext = cluster_homs(cc).ext
    names = [cc.name(k) for k in range(len(cc))]
    (out / "ext_table.tsv").write_text(serialize.to_tsv([""] + names, [[names[i]] + r for i, r in enumerate(ext)]))
    (out / "tilting_sets.tsv").write_text(
        serialize.to_tsv(["index", "members"], [(i, " ".join(cc.name(k) for k in t)) for i, t in enumerate(eg.vertices)])
    )
    figures = [
        plot_ar_quiver(cc, out / "ar_quiver.png"),
        plot_exchange_graph(cc, eg, out / "exchange_graph.png"),
        plot_ext_heatmap(cc, out / "ext_heatmap.png"),
    ]
    _emit(serialize.to_tsv(["quantity", "value"], census).rstrip("\n"))
    _emit("\n".join(f"wrote {p}" for p in [out / "census.tsv", out / "ext_table.tsv", out / "tilting_sets.tsv", *figures]))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", required=True, help="Dynkin type, e.g. A3, D4, E6")
    common.add_argument(
        "--orientation", default="alternating", help="alternating, linear, or arrows like 1>2,3>2"
    )
    common.add_argument("--format", choices=["text", "json", "dot", "tsv"], default="text")
    common.add_argument("--threads", type=int, default=1)

    p = argparse.ArgumentParser(prog="clustercat", description="Exact cluster categories of Dynkin quivers.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("roots", parents=[common], help="positive or almost positive roots")
    s.add_argument("--almost", action="store_true")
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("ar-quiver", parents=[common], help="AR-quiver of C (or of mod kQ with --module)")
    s.add_argument("--module", action="store_true")
    s.add_argument("--tau", action="store_true", help="draw tau as dashed edges in DOT output")
    s.set_defaults(func=cmd_ar_quiver)

    s = sub.add_parser("cluster-objects", parents=[common], help="indecomposables of C with tau")
    s.set_defaults(func=cmd_cluster_objects)

    s = sub.add_parser("ext-table", parents=[common], help="dim Ext^1 between all objects of C")
    s.set_defaults(func=cmd_ext_table)

    s = sub.add_parser("tilting", help="tilting sets")
    tsub = s.add_subparsers(dest="tilting_command", required=True)
    t = tsub.add_parser("list", parents=[common])
    t.add_argument("--count", action="store_true")
    t.set_defaults(func=cmd_tilting_list)

    s = sub.add_parser("complements", parents=[common], help="the two complements of an almost complete set")
    s.add_argument("--tbar", required=True, help="roots separated by '|', e.g. '3|123'")
    s.set_defaults(func=cmd_complements)

    s = sub.add_parser("exchange-graph", parents=[common], help="tilting sets joined by single exchanges")
    s.set_defaults(func=cmd_exchange_graph)

    s = sub.add_parser("triangle", parents=[common], help="both exchange triangles of a pair")
    s.add_argument("--pair", required=True, help="two roots separated by '|', e.g. '2|-2'")
    s.set_defaults(func=cmd_triangle)

    s = sub.add_parser("end-quiver", parents=[common], help="quiver of End(T)^op for a set of objects")
    s.add_argument("--set", required=True, help="roots separated by '|', e.g. '3|23|123'")
    s.set_defaults(func=cmd_end_quiver)

    s = sub.add_parser("cluster", help="cluster algebra of the quiver")
    csub = s.add_subparsers(dest="cluster_command", required=True)
    c = csub.add_parser("mutate", parents=[common])
    c.add_argument("--seq", required=True, help="1-based mutation sequence, e.g. 2,1,3")
    c.set_defaults(func=cmd_cluster_mutate)
    c = csub.add_parser("enumerate", parents=[common])
    c.set_defaults(func=cmd_cluster_enumerate)

    s = sub.add_parser("verify", parents=[common], help="run the invariant suites")
    s.add_argument("--suite", default="all", help=f"all or a comma list of: {', '.join(SUITES)}")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("report", parents=[common], help="write TSV tables and PNG figures")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_report)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"clustercat: error: {exc}", file=sys.stderr)
        return 2
    except ClusterCatError as exc:
        print(f"clustercat: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
