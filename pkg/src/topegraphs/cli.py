"""Command-line interface.

Exit codes: 0 affirmative answer, 1 well-formed negative answer,
2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bridge import covectors_of, tope_graph
from .errors import (
    EnumerationAborted,
    NoTopes,
    NotPartialCube,
    NotPartialCubeSystem,
    TopeGraphError,
)
from .formats import load_partial_cubes, load_system, write_pce, write_pcg, write_svs
from .minors import (
    FAMILIES,
    contract,
    enumerate_partial_cubes,
    excluded_family,
    generate,
    pc_minor,
    restrict,
)
from .recognize import classify_graph, graph_rank, is_com_bounded_rank
from .signs import system_rank
from .zones import zone_graph


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _one(path: str):
    graphs = load_partial_cubes(path)
    if len(graphs) != 1:
        raise UsageError(f"{path}: expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def _witness_dict(w) -> dict:
    return {
        "restricted_signs": {str(f): s for f, s in sorted(w.restricted_signs.items())},
        "contracted_classes": sorted(w.contracted_classes),
        "vertex_subset": list(w.vertex_subset),
    }


def _emit_graph(pc, fmt: str) -> str:
    return write_pcg(pc) if fmt == "pcg" else write_pce(pc)


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def cmd_recognize(args, out) -> int:
    code = 0
    for pc in load_partial_cubes(args.file):
        report = classify_graph(pc)
        d = report.as_dict()
        ok = report.is_com
        bounded = None
        if args.rank is not None:
            res = is_com_bounded_rank(pc, args.rank)
            bounded = ok = res.ok
            if not res.ok:
                d["certificate"] = _witness_dict(res.witness)
        if not ok:
            code = 1
        if args.json:
            out.write(json.dumps(d, sort_keys=False) + "\n")
            continue
        classes = [c for c, f in (("COM", "is_com"), ("OM", "is_om"), ("AOM", "is_aom"), ("LOP", "is_lop")) if d[f]]
        out.write(f"partial cube: {_yn(d['is_partial_cube'])}\n")
        for c, f in (("COM", "is_com"), ("OM", "is_om"), ("AOM", "is_aom"), ("LOP", "is_lop")):
            out.write(f"{c}: {_yn(d[f])}\n")
        out.write(f"rank: {d['rank']}\n")
        out.write(f"classes: {', '.join(classes) if classes else 'none'}\n")
        if bounded is not None:
            out.write(f"COM of rank <= {args.rank}: {_yn(bounded)}\n")
        cert = d["certificate"]
        if cert is not None:
            if "subgraph" in cert:
                sub = " ".join(map(str, cert["subgraph"]))
                out.write(f"certificate: antipodal subgraph {{{sub}}} has no gate for vertex {cert['vertex']}\n")
            else:
                out.write("certificate: excluded minor " + json.dumps(cert) + "\n")
    return code


def cmd_minor(args, out) -> int:
    host, pattern = _one(args.host), _one(args.pattern)
    w = pc_minor(host, pattern)
    if args.json:
        out.write(json.dumps({"minor": w is not None, "witness": None if w is None else _witness_dict(w)}) + "\n")
    elif w is None:
        out.write("no pc-minor\n")
    else:
        d = _witness_dict(w)
        signs = " ".join(f"{f}{s}" for f, s in d["restricted_signs"].items()) or "-"
        out.write("pc-minor found\n")
        out.write(f"restrict: {signs}\n")
        out.write(f"contract: {' '.join(map(str, d['contracted_classes'])) or '-'}\n")
        out.write(f"seed vertices: {' '.join(map(str, d['vertex_subset']))}\n")
    return 0 if w is not None else 1


def cmd_contract(args, out) -> int:
    out.write(_emit_graph(contract(_one(args.file), args.cls), args.format))
    return 0


def cmd_restrict(args, out) -> int:
    out.write(_emit_graph(restrict(_one(args.file), args.cls, args.sign), args.format))
    return 0


def cmd_zone(args, out) -> int:
    z = zone_graph(_one(args.file), args.cls)
    if args.json:
        out.write(json.dumps({
            "well_embedded": z.well_embedded,
            "vertex_count": z.graph.vertex_count,
            "edges": [list(e) for e in z.graph.sorted_edges],
            "class_partition": {str(h): b for h, b in sorted(z.class_partition.items())},
        }) + "\n")
    else:
        out.write(f"# well-embedded: {_yn(z.well_embedded)}\n")
        out.write(write_pcg(z.graph))
    return 0 if z.well_embedded else 1


def cmd_covectors(args, out) -> int:
    out.write(write_svs(covectors_of(_one(args.file))))
    return 0


def cmd_topes(args, out) -> int:
    try:
        res = tope_graph(load_system(args.file))
    except (NoTopes, NotPartialCubeSystem) as e:
        out.write(f"not a partial cube system: {e}\n")
        return 1
    out.write(_emit_graph(res.pc, args.format))
    return 0


def cmd_rank(args, out) -> int:
    if args.file.endswith(".svs"):
        r = system_rank(load_system(args.file))
    else:
        r = graph_rank(_one(args.file))
    out.write(f"{r}\n")
    return 0


def cmd_gen(args, out) -> int:
    if args.family == "excluded":
        if args.rank is None:
            raise UsageError("gen excluded needs --rank")
        graphs = excluded_family(args.kind, args.rank)
    else:
        if args.n is None:
            raise UsageError("gen needs --n")
        graphs = [generate(args.family, args.n, args.m)]
    for g in graphs:
        if args.format == "svs":
            out.write(write_svs(covectors_of(g)))
        else:
            out.write(_emit_graph(g, args.format))
    return 0


def cmd_enumerate(args, out) -> int:
    for g in enumerate_partial_cubes(args.max_vertices, args.max_seconds):
        out.write(_emit_graph(g, args.format))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="topegraphs", description="Partial cubes and tope graphs of COMs, OMs, AOMs and LOPs.")
    sub = p.add_subparsers(dest="verb", parser_class=_Parser)
    sub.required = True

    def graph_fmt(sp, default="pce"):
        sp.add_argument("--format", choices=("pcg", "pce"), default=default)

    sp = sub.add_parser("recognize", help="classify a graph")
    sp.add_argument("file")
    sp.add_argument("--rank", type=int, help="also test COM of rank <= r via excluded minors")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("minor", help="test for a pc-minor")
    sp.add_argument("host")
    sp.add_argument("pattern")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_minor)

    sp = sub.add_parser("contract", help="contract one class")
    sp.add_argument("file")
    sp.add_argument("--class", dest="cls", type=int, required=True)
    graph_fmt(sp)
    sp.set_defaults(func=cmd_contract)

    sp = sub.add_parser("restrict", help="restrict to one halfspace")
    sp.add_argument("file")
    sp.add_argument("--class", dest="cls", type=int, required=True)
    sp.add_argument("--sign", choices=("+", "-"), required=True)
    graph_fmt(sp)
    sp.set_defaults(func=cmd_restrict)

    sp = sub.add_parser("zone", help="zone graph of one class")
    sp.add_argument("file")
    sp.add_argument("--class", dest="cls", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_zone)

    sp = sub.add_parser("covectors", help="covector system of a graph")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_covectors)

    sp = sub.add_parser("topes", help="tope graph of a sign system")
    sp.add_argument("file")
    graph_fmt(sp)
    sp.set_defaults(func=cmd_topes)

    sp = sub.add_parser("rank", help="rank of a graph or sign system")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_rank)

    sp = sub.add_parser("gen", help="generate a named graph")
    sp.add_argument("family", choices=FAMILIES + ("excluded",))
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--kind", choices=("Q_minus_r", "Q_mm_r"), default="Q_minus_r")
    sp.add_argument("--rank", type=int)
    sp.add_argument("--format", choices=("pcg", "pce", "svs"), default="pcg")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("enumerate", help="all partial cubes up to a size")
    sp.add_argument("--max-vertices", type=int, required=True)
    sp.add_argument("--max-seconds", type=float)
    graph_fmt(sp, "pcg")
    sp.set_defaults(func=cmd_enumerate)
    return p


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as e:
        err.write(f"usage error: {e}\n")
        return 2
    except NotPartialCube as e:
        err.write(f"not a partial cube: {e.reason}\n")
        return 2
    except EnumerationAborted as e:
        err.write(f"aborted: {e}\n")
        return 2
    except TopeGraphError as e:
        err.write(f"error: {e}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
