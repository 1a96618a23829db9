"""JSON, DOT and TSV renderings of the computed structures."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Sequence

from .dynkin import Root, root_label
from .knitting import ClusterCategory, DerivedObject, ModuleCategory, TranslationQuiver
from .tilting import ExchangeGraph


def root_json(a: Root) -> dict:
    return {"coeffs": list(a)}


def cluster_quiver_json(cc: ClusterCategory) -> dict:
    tq = cc.quiver
    return {
        "vertices": [
            {"id": k, "kind": cc.objects[k].kind, "root": list(cc.label(k))} for k in tq.vertices
        ],
        "arrows": [list(a) for a in tq.arrows],
        "tau": [[k, cc.tau[k]] for k in tq.vertices],
    }


def module_quiver_json(mc: ModuleCategory) -> dict:
    tq = mc.quiver
    return {
        "vertices": [{"id": v, "kind": "module", "root": list(mc.dim(v))} for v in tq.vertices],
        "arrows": [list(a) for a in tq.arrows],
        "tau": [[v, t] for v, t in sorted(tq.tau.items())],
    }


def window_json(tq: TranslationQuiver) -> dict:
    verts = []
    for v in tq.vertices:
        x: DerivedObject = tq.labels[v]
        verts.append({"id": v, "kind": "derived", "root": list(x.root), "shift": x.shift})
    return {
        "vertices": verts,
        "arrows": [list(a) for a in tq.arrows],
        "tau": [[v, t] for v, t in sorted(tq.tau.items())],
    }


def quiver_from_json(data: dict) -> TranslationQuiver:
    verts = [v["id"] for v in data["vertices"]]
    labels = {v["id"]: tuple(v["root"]) for v in data["vertices"]}
    return TranslationQuiver(
        verts, [tuple(a) for a in data["arrows"]], {a: b for a, b in data["tau"]}, labels
    )


def matrix_json(labels: Sequence[str], matrix: Sequence[Sequence[int]]) -> dict:
    return {"labels": list(labels), "matrix": [list(r) for r in matrix]}


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(
    nodes: Sequence[int],
    edges: Iterable[tuple[int, int]],
    labels: dict[int, str] | None = None,
    name: str = "G",
    directed: bool = True,
    dashed: Iterable[tuple[int, int]] = (),
    multiplicity: dict[tuple[int, int], int] | None = None,
) -> str:
    """Graphviz text with nodes and edges in sorted order."""
    labels = labels or {}
    kw, op = ("digraph", "->") if directed else ("graph", "--")
    lines = [f"{kw} {name} {{"]
    for v in sorted(nodes):
        lines.append(f"  n{v} [label={_quote(labels.get(v, str(v)))}];")
    for s, t in sorted(edges):
        mult = (multiplicity or {}).get((s, t), 1)
        for _ in range(mult):
            lines.append(f"  n{s} {op} n{t};")
    for s, t in sorted(dashed):
        lines.append(f"  n{s} {op} n{t} [style=dashed, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cluster_quiver_dot(cc: ClusterCategory, with_tau: bool = False) -> str:
    tq = cc.quiver
    dashed = [(k, cc.tau[k]) for k in tq.vertices] if with_tau else []
    return export_dot(tq.vertices, tq.arrows, {k: cc.name(k) for k in tq.vertices}, "ARC", dashed=dashed)


def module_quiver_dot(mc: ModuleCategory, with_tau: bool = False) -> str:
    tq = mc.quiver
    dashed = sorted(tq.tau.items()) if with_tau else []
    return export_dot(tq.vertices, tq.arrows, {v: root_label(mc.dim(v)) for v in tq.vertices}, "ARM", dashed=dashed)


def tilting_label(cc: ClusterCategory, members: Iterable[int]) -> str:
    return "{" + ",".join(cc.name(k) for k in sorted(members)) + "}"


def exchange_graph_dot(cc: ClusterCategory, eg: ExchangeGraph) -> str:
    labels = {i: tilting_label(cc, t) for i, t in enumerate(eg.vertices)}
    return export_dot(range(len(eg.vertices)), eg.edges, labels, "Exchange", directed=False)


def exchange_graph_json(cc: ClusterCategory, eg: ExchangeGraph) -> dict:
    return {
        "vertices": [[cc.name(k) for k in t] for t in eg.vertices],
        "edges": [list(e) for e in eg.edges],
    }


def end_quiver_dot(cc: ClusterCategory, members: Sequence[int], arrows: dict[tuple[int, int], int]) -> str:
    return export_dot(
        members, arrows.keys(), {k: cc.name(k) for k in members}, "EndT", multiplicity=arrows
    )


def to_tsv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, delimiter="\t", lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"
