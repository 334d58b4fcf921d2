"""Command-line front end.

Subcommands build structures from files, run operation scripts, answer
witness queries, emit certificates and labels, and run benchmarks.  Exit
codes: 0 ok, 2 file or parse problem, 3 op-script violation, 4 oracle
mismatch under --check.

Op scripts are line-oriented: DELETE u v, DELV u, QUERY u v, QUERYALL,
WITNESS-E u v k a1 b1 .. ak bk, WITNESS-V u v k s1 .. sk.  '#' starts a
comment.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import bench as benchmod
from .edge_deletion import EdgeDecremental, k_edge_witness
from .graph import Graph, ParseError, norm_edge, oracle_components, oracle_connected, parse_edge_list
from .labels import LabelB, decode, mark, parse_label, serialize_label
from .layout import LinearLayout, format_layout, greedy_path_cover, layout_from_path_cover, parse_layout
from .certificate import sparse_certificate
from .tree_variant import TreeDecremental
from .tree_witness import LcaIndex, k_edge_witness_tree, k_vertex_witness_tree
from .vertex_deletion import LayoutDecremental

EXIT_OK = 0
EXIT_FILE = 2
EXIT_SCRIPT = 3
EXIT_MISMATCH = 4


class ScriptViolation(Exception):
    pass


class OracleMismatch(Exception):
    pass


# -- file plumbing -----------------------------------------------------------


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None


def _load_graph(path: str) -> Graph:
    return parse_edge_list(_read_text(path))


def _load_layout(g: Graph, path: str) -> LinearLayout:
    n, order = parse_layout(_read_text(path))
    if n != g.n:
        raise ParseError(f"layout has {n} vertices, graph has {g.n}")
    return LinearLayout(g, order)


def _parse_edge_token(tok: str) -> tuple[int, int]:
    sep = "," if "," in tok else "-"
    a, _, b = tok.partition(sep)
    try:
        u, v = int(a), int(b)
    except ValueError:
        raise ParseError(f"bad edge token {tok!r}; want 'a,b'") from None
    return norm_edge(u, v)


def parse_ops(text: str) -> list[tuple]:
    """Parse an op script into (name, *int args) tuples."""
    arity = {"DELETE": 2, "DELV": 1, "QUERY": 2, "QUERYALL": 0}
    ops: list[tuple] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        name = parts[0].upper()
        try:
            args = [int(t) for t in parts[1:]]
        except ValueError:
            raise ParseError(f"non-integer argument in {parts[0]}", lineno) from None
        if name in arity:
            if len(args) != arity[name]:
                raise ParseError(f"{name} wants {arity[name]} arguments", lineno)
        elif name in ("WITNESS-E", "WITNESS-V"):
            if len(args) < 3:
                raise ParseError(f"{name} wants u v k ...", lineno)
            k = args[2]
            want = 3 + (2 * k if name == "WITNESS-E" else k)
            if k < 0 or len(args) != want:
                raise ParseError(f"{name} with k={k} wants {want} arguments", lineno)
        else:
            raise ParseError(f"unknown op {parts[0]!r}", lineno)
        ops.append((name, *args))
    return ops


# -- op-script execution -------------------------------------------------------


class _ScriptRun:
    """Shared engine/oracle state for one op-script execution."""

    def __init__(self, g: Graph, algo: str, check: bool,
                 layout: LinearLayout | None = None, lazy_holes: bool = False):
        self.g = g
        self.algo = algo
        self.check = check
        try:
            if algo == "et":
                self.eng = EdgeDecremental(g)
            elif algo == "tree":
                self.eng = TreeDecremental(g, fast_tree=True)
            elif algo == "layout":
                self.eng = LayoutDecremental(g, layout, lazy_holes=lazy_holes)
            elif algo == "oracle":
                self.eng = None
            else:
                raise ValueError(f"unknown algo {algo!r}")
        except ValueError as e:
            raise ScriptViolation(str(e)) from None
        self.dead_edges: set[tuple[int, int]] = set()
        self.dead_vertices: set[int] = set()

    # everything the oracle needs to mirror the engine
    def _live_graph(self) -> Graph:
        edges = [e for e in self.g.edges
                 if e not in self.dead_edges
                 and e[0] not in self.dead_vertices
                 and e[1] not in self.dead_vertices]
        return Graph(self.g.n, edges)

    def _require_live_vertex(self, u: int) -> None:
        if not (1 <= u <= self.g.n):
            raise ScriptViolation(f"vertex {u} out of range 1..{self.g.n}")
        if u in self.dead_vertices:
            raise ScriptViolation(f"vertex {u} was deleted")

    def _oracle_connected(self, u: int, v: int) -> bool:
        return oracle_connected(self.g, self.dead_edges, self.dead_vertices, u, v)

    def run(self, ops: Sequence[tuple], out) -> None:
        for op in ops:
            name = op[0]
            try:
                line = self._step(name, op[1:])
            except ValueError as e:
                raise ScriptViolation(str(e)) from None
            if line is not None:
                print(line, file=out)

    def _step(self, name: str, args: Sequence[int]) -> str | None:
        if name == "DELETE":
            u, v = args
            if self.algo == "layout":
                raise ScriptViolation("DELETE is not supported by the layout engine")
            e = norm_edge(u, v)
            if e not in self.g.edges or e in self.dead_edges:
                raise ScriptViolation(f"({u},{v}) is not a live edge")
            if self.eng is not None:
                self.eng.delete_edge(u, v)
            self.dead_edges.add(e)
            return None
        if name == "DELV":
            (u,) = args
            if self.algo not in ("layout", "oracle"):
                raise ScriptViolation(f"DELV is not supported by the {self.algo} engine")
            self._require_live_vertex(u)
            if self.eng is not None:
                self.eng.delete_vertex(u)
            self.dead_vertices.add(u)
            return None
        if name == "QUERY":
            u, v = args
            self._require_live_vertex(u)
            self._require_live_vertex(v)
            if self.eng is None:
                res = self._oracle_connected(u, v)
            else:
                res = self.eng.connected(u, v)
                if self.check and res != self._oracle_connected(u, v):
                    raise OracleMismatch(f"QUERY {u} {v}: engine says {res}")
            return "true" if res else "false"
        if name == "QUERYALL":
            def want() -> bool:
                comp = oracle_components(self.g, self.dead_edges, self.dead_vertices)
                live = [v for v in range(1, self.g.n + 1) if v not in self.dead_vertices]
                return len({comp[v] for v in live}) <= 1

            if self.eng is None:
                res = want()
            else:
                res = self.eng.connected_all()
                if self.check and res != want():
                    raise OracleMismatch(f"QUERYALL: engine says {res}")
            return "true" if res else "false"
        if name == "WITNESS-E":
            u, v, k = args[0], args[1], args[2]
            edges = [norm_edge(args[3 + 2 * i], args[4 + 2 * i]) for i in range(k)]
            self._require_live_vertex(u)
            self._require_live_vertex(v)
            if u == v:
                raise ScriptViolation("WITNESS-E wants two distinct vertices")
            live = self._live_graph()
            for e in edges:
                if e not in live.edges:
                    raise ScriptViolation(f"({e[0]},{e[1]}) is not a live edge")
            res = k_edge_witness(live, u, v, edges)
            if self.check and res != (not oracle_connected(live, edges, (), u, v)):
                raise OracleMismatch(f"WITNESS-E {u} {v}: engine says {res}")
            return "cut" if res else "not-a-cut"
        if name == "WITNESS-V":
            u, v, k = args[0], args[1], args[2]
            cut = list(args[3:])
            for w in (u, v, *cut):
                self._require_live_vertex(w)
            if u == v:
                raise ScriptViolation("WITNESS-V wants two distinct vertices")
            if u in cut or v in cut:
                raise ScriptViolation("WITNESS-V cut set must avoid u and v")
            live = self._live_graph()
            probe = LayoutDecremental(live)
            for w in set(cut):
                probe.delete_vertex(w)
            res = not probe.connected(u, v)
            if self.check and res != (not oracle_connected(live, (), cut, u, v)):
                raise OracleMismatch(f"WITNESS-V {u} {v}: engine says {res}")
            return "cut" if res else "not-a-cut"
        raise AssertionError(name)


# -- subcommand handlers -----------------------------------------------------


def _cmd_decremental(args) -> int:
    g = _load_graph(args.graph)
    ops = parse_ops(_read_text(args.script))
    run = _ScriptRun(g, args.algo, args.check)
    run.run(ops, sys.stdout)
    return EXIT_OK


def _cmd_layout_decremental(args) -> int:
    g = _load_graph(args.graph)
    layout = _load_layout(g, args.layout)
    ops = parse_ops(_read_text(args.script))
    run = _ScriptRun(g, "layout", args.check, layout=layout, lazy_holes=args.lazy_holes)
    run.run(ops, sys.stdout)
    return EXIT_OK


def _cmd_oracle_check(args) -> int:
    g = _load_graph(args.graph)
    ops = parse_ops(_read_text(args.script))
    run = _ScriptRun(g, "oracle", check=False)
    run.run(ops, sys.stdout)
    return EXIT_OK


def _cmd_witness_e(args) -> int:
    g = _load_graph(args.graph)
    edges = [_parse_edge_token(t) for t in args.edges]
    g.check_vertex(args.u)
    g.check_vertex(args.v)
    if args.u == args.v:
        raise ScriptViolation("u and v must differ")
    for e in edges:
        if e not in g.edges:
            raise ScriptViolation(f"({e[0]},{e[1]}) is not an edge")
    print("cut" if k_edge_witness(g, args.u, args.v, edges) else "not-a-cut")
    return EXIT_OK


def _cmd_tree_witness(args) -> int:
    g = _load_graph(args.graph)
    try:
        idx = LcaIndex(g)
    except ValueError as e:
        raise ScriptViolation(str(e)) from None
    if args.kind == "vertex":
        cut = [int(t) for t in args.cut]
        res = k_vertex_witness_tree(idx, args.u, args.v, cut)
    else:
        cut_edges = [_parse_edge_token(t) for t in args.cut]
        res = k_edge_witness_tree(idx, args.u, args.v, cut_edges)
    print("cut" if res else "not-a-cut")
    return EXIT_OK


def _cmd_certificate(args) -> int:
    g = _load_graph(args.graph)
    if args.k < 1:
        raise ScriptViolation("k must be at least 1")
    cert = sparse_certificate(g, args.k)
    lines = [f"p {g.n} {len(cert.subgraph.edges)}"]
    lines += [f"{u} {v}" for u, v in sorted(cert.subgraph.edges)]
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_labels_mark(args) -> int:
    g = _load_graph(args.graph)
    if args.layout:
        layout = _load_layout(g, args.layout)
    else:
        try:
            layout = layout_from_path_cover(g, greedy_path_cover(g))
        except ValueError as e:
            raise ScriptViolation(str(e)) from None
    try:
        labs = mark(g, layout)
    except ValueError as e:
        raise ScriptViolation(str(e)) from None
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for v in range(1, g.n + 1):
        blob = serialize_label(labs[v])
        (outdir / f"label_{v}.bin").write_bytes(blob)
        print(f"{v} {len(blob)} {labs[v].record_count()}")
    return EXIT_OK


def _cmd_labels_decode(args) -> int:
    def load(path: str) -> LabelB:
        try:
            lab = parse_label(Path(path).read_bytes())
        except OSError as e:
            raise ParseError(f"cannot read {path}: {e.strerror}") from None
        except ValueError as e:
            raise ParseError(f"{path}: {e}") from None
        if not isinstance(lab, LabelB):
            raise ParseError(f"{path} is not a layout label")
        return lab

    lu, lv = load(args.u), load(args.v)
    slabs = [load(p) for p in args.cut]
    try:
        res = decode(lu, lv, slabs)
    except ValueError as e:
        raise ScriptViolation(str(e)) from None
    print("cut" if res else "not-a-cut")
    return EXIT_OK


def _cmd_layout_emit(args) -> int:
    g = _load_graph(args.graph)
    try:
        layout = layout_from_path_cover(g, greedy_path_cover(g))
    except ValueError as e:
        raise ScriptViolation(str(e)) from None
    sys.stdout.write(format_layout(layout))
    return EXIT_OK


def _cmd_bench(args) -> int:
    if args.plot and not args.out:
        raise ScriptViolation("--plot needs --out to place the figure")
    try:
        rows = benchmod.run_trials(
            args.algo, args.n, args.k, args.seed,
            p=args.p, measure=args.measure, trials=args.trials, jobs=args.jobs,
        )
    except ValueError as e:
        raise ScriptViolation(str(e)) from None
    if args.out:
        with open(args.out, "w", newline="") as fh:
            benchmod.write_csv(rows, fh)
        print(f"wrote {args.out}")
        if args.plot:
            from .plotting import render_bench_png

            png = render_bench_png(args.out)
            print(f"wrote {png}")
    else:
        benchmod.write_csv(rows, sys.stdout)
    return EXIT_OK


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="decrem",
        description="Decremental connectivity engines, witness queries, and benchmarks.",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("decremental", help="run an op script on a deletion engine")
    p.add_argument("--algo", choices=("et", "tree", "layout"), default="et")
    p.add_argument("--check", action="store_true", help="verify every query against the oracle")
    p.add_argument("graph")
    p.add_argument("script")
    p.set_defaults(func=_cmd_decremental)

    p = sub.add_parser("layout-decremental", help="vertex-deletion engine with an explicit layout")
    p.add_argument("--check", action="store_true")
    p.add_argument("--lazy-holes", action="store_true")
    p.add_argument("graph")
    p.add_argument("layout")
    p.add_argument("script")
    p.set_defaults(func=_cmd_layout_decremental)

    p = sub.add_parser("oracle-check", help="run an op script on the BFS oracle only")
    p.add_argument("graph")
    p.add_argument("script")
    p.set_defaults(func=_cmd_oracle_check)

    p = sub.add_parser("witness-e", help="does the edge set disconnect u from v?")
    p.add_argument("graph")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.add_argument("edges", nargs="*", metavar="a,b")
    p.set_defaults(func=_cmd_witness_e)

    p = sub.add_parser("tree-witness", help="cut queries on a tree")
    p.add_argument("graph")
    p.add_argument("kind", choices=("vertex", "edge"))
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.add_argument("cut", nargs="*", metavar="s|a,b")
    p.set_defaults(func=_cmd_tree_witness)

    p = sub.add_parser("certificate", help="sparse k-connectivity certificate")
    p.add_argument("graph")
    p.add_argument("k", type=int)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_certificate)

    p = sub.add_parser("layout", help="emit a greedy path-cover layout")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_layout_emit)

    lp = sub.add_parser("labels", help="connectivity labels over a layout")
    lsub = lp.add_subparsers(dest="labels_cmd", required=True)
    p = lsub.add_parser("mark", help="write one binary label per vertex")
    p.add_argument("graph")
    p.add_argument("--layout")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_labels_mark)
    p = lsub.add_parser("decode", help="answer a cut query from label files")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("cut", nargs="*", metavar="s.bin")
    p.set_defaults(func=_cmd_labels_decode)

    p = sub.add_parser("bench", help="seeded benchmark, CSV out")
    p.add_argument("--algo", choices=("et", "tree", "layout"), default="et")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--measure", action="store_true",
                   help="record wall times (off by default so output is reproducible)")
    p.add_argument("--out")
    p.add_argument("--plot", action="store_true", help="render a PNG next to the CSV")
    p.set_defaults(func=_cmd_bench)

    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FILE
    except ScriptViolation as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SCRIPT
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SCRIPT
    except OracleMismatch as e:
        print(f"oracle mismatch: {e}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
