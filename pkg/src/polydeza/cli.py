"""Command-line entry point: ``polydeza {gen,classify,transform,convert,verify,fixtures}``.

Exit codes: 0 success, 1 violations found, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from . import fixtures as fx
from .classify import SCHEMA_VERSION, graph_record, run_suite, table_csv
from .codecs import (
    G6_HEADER,
    PC_HEADER,
    decode_planar_code,
    encode_planar_code,
    read_graph6,
    write_graph6,
)
from .errors import BadConfig, FormatLoss, PolydezaError
from .generate import (
    MAX_ORDER,
    default_threads,
    gen_cubic_polyhedra,
    gen_quadrangulations,
    gen_quartic_polyhedra,
    gen_triangulations,
)
from .graph import PlaneGraph, dual, embed
from .populations import parse_population
from .transforms import (
    SquarePyramid,
    TSite,
    face_sites,
    line_graph,
    medial,
    medial_preimage,
    radial,
    t_construct,
    t_decompose,
)

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
FORMATS = ("planar_code", "graph6")


@dataclass(frozen=True)
class RunConfig:
    command: str
    format: str = "planar_code"
    max_n: int | None = None
    threads: int = 1
    deterministic: bool = False
    input: str | None = None
    output: str | None = None
    suite: str | None = None
    population: str | None = None

    def __post_init__(self):
        if self.max_n is not None and not 1 <= self.max_n <= MAX_ORDER:
            raise BadConfig(f"--max-n must be in 1..{MAX_ORDER}")
        if self.threads < 1:
            raise BadConfig("--threads must be at least 1")
        if self.deterministic and self.threads != 1:
            raise BadConfig("--deterministic implies a single thread")
        if self.format not in FORMATS:
            raise BadConfig(f"unknown format {self.format!r}")


def _config(args, **extra) -> RunConfig:
    threads = getattr(args, "threads", None)
    if threads is None:
        threads = default_threads()
    det = getattr(args, "deterministic", False)
    if det:
        threads = 1
    return RunConfig(
        command=args.command,
        format=getattr(args, "format", None) or "planar_code",
        max_n=getattr(args, "max_n", None),
        threads=threads,
        deterministic=det,
        input=getattr(args, "input", None),
        output=getattr(args, "output", None),
        **extra,
    )


# I/O -------------------------------------------------------------------------

def _read_bytes(path: str | None) -> bytes:
    if path in (None, "-"):
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _write_bytes(path: str | None, data: bytes) -> None:
    if path in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(path).write_bytes(data)


def _sniff(data: bytes, path: str | None, fmt: str | None) -> str:
    if fmt and fmt != "auto":
        return fmt
    if data.startswith(PC_HEADER):
        return "planar_code"
    if data.startswith(G6_HEADER):
        return "graph6"
    if path and Path(path).suffix in (".g6", ".graph6"):
        return "graph6"
    if path and Path(path).suffix in (".pc", ".plc", ".planar_code"):
        return "planar_code"
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError:
        return "planar_code"
    if all(63 <= ord(ch) <= 126 for line in text.splitlines() for ch in line.strip()):
        return "graph6"
    return "planar_code"


def read_graphs(path: str | None, fmt: str | None = None) -> list:
    data = _read_bytes(path)
    if _sniff(data, path, fmt) == "graph6":
        return read_graph6(data[len(G6_HEADER):] if data.startswith(G6_HEADER) else data)
    return decode_planar_code(data)


def _as_plane(g) -> PlaneGraph:
    if isinstance(g, PlaneGraph):
        return g
    pg = embed(g, max_n=max(g.n, 24))
    if pg is None:
        raise BadConfig("input graph is not planar")
    return pg


def encode_graphs(graphs: list, fmt: str, allow_loss: bool) -> bytes:
    if fmt == "graph6":
        if any(isinstance(g, PlaneGraph) for g in graphs) and not allow_loss:
            raise FormatLoss("graph6 drops the embedding; pass --allow-loss")
        abstract = [g.to_abstract() if isinstance(g, PlaneGraph) else g for g in graphs]
        return write_graph6(abstract).encode("ascii")
    return encode_planar_code([_as_plane(g) for g in graphs])


def _dump_json(obj, path: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


# commands --------------------------------------------------------------------

_GEN = {
    "quad": lambda a, t, d: gen_quadrangulations(a.max_n, not a.no_b, t, d),
    "quartic": lambda a, t, d: gen_quartic_polyhedra(a.max_n, t, d),
    "tri": lambda a, t, d: gen_triangulations(a.max_n, a.min_degree, t, d),
    "cubic": lambda a, t, d: gen_cubic_polyhedra(a.max_n, a.min_face, t, d),
}


def cmd_gen(args) -> int:
    cfg = _config(args)
    if args.no_b and args.gen_class != "quad":
        raise BadConfig("--no-b only applies to --class quad")
    start = time.perf_counter()
    graphs = list(_GEN[args.gen_class](args, cfg.threads, cfg.deterministic))
    if cfg.format == "graph6":
        print("warning: graph6 output drops embeddings", file=sys.stderr)
    _write_bytes(cfg.output, encode_graphs(graphs, cfg.format, allow_loss=True))
    summary = {
        "schema_version": SCHEMA_VERSION,
        "command": "gen",
        "class": args.gen_class,
        "max_n": cfg.max_n,
        "format": cfg.format,
        "total": len(graphs),
        "counts": {str(n): c for n, c in sorted(Counter(g.n for g in graphs).items())},
        "wall_time_s": round(time.perf_counter() - start, 3),
    }
    path = args.summary
    if path is None and cfg.output not in (None, "-"):
        path = cfg.output + ".summary.json"
    if path is None:
        print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    else:
        _dump_json(summary, path)
    return EXIT_OK


def cmd_classify(args) -> int:
    graphs = read_graphs(args.input, args.format)
    records = []
    for i, g in enumerate(graphs):
        rec = graph_record(g)
        rec["index"] = i
        records.append(rec)
    _dump_json({"schema_version": SCHEMA_VERSION, "records": records}, args.output)
    return EXIT_OK


def _site(g: PlaneGraph, spec: str | None) -> TSite:
    if spec is None:
        return face_sites(g)[0]
    try:
        u, v, w = (int(x) for x in spec.split(","))
    except ValueError:
        raise BadConfig(f"site must be 'u,v,w', got {spec!r}") from None
    site = TSite(g, u, v, w)
    site.validate()
    return site


def cmd_transform(args) -> int:
    graphs = read_graphs(args.input, args.in_format)
    out: list = []
    notes: list[dict] = []
    op = args.op
    if op == "t-construct":
        other = read_graphs(args.input2, args.in_format) if args.input2 else graphs[1:2]
        if not graphs or not other:
            raise BadConfig("t-construct needs two host graphs (--input2 or two graphs in the input)")
        g1, g2 = _as_plane(graphs[0]), _as_plane(other[0])
        out.append(t_construct(_site(g1, args.site1), _site(g2, args.site2)))
    else:
        for i, g in enumerate(graphs):
            if op == "line":
                if args.format == "planar_code":
                    pg = _as_plane(g)
                    if pg.to_abstract().regularity() != 3:
                        raise BadConfig("the line graph of a non-cubic graph has no embedding here; use --format graph6")
                    out.append(medial(pg))
                else:
                    out.append(line_graph(g))
                continue
            pg = _as_plane(g)
            if op == "dual":
                out.append(dual(pg))
            elif op == "medial":
                out.append(medial(pg))
            elif op == "radial":
                out.append(radial(pg))
            elif op == "medial-preimage":
                pre = medial_preimage(pg)
                if pre is None:
                    notes.append({"index": i, "medial_preimage": None})
                else:
                    out.extend(pre)
                    notes.append({"index": i, "medial_preimage": 2})
            elif op == "t-decompose":
                res = t_decompose(pg)
                if isinstance(res, SquarePyramid):
                    notes.append({"index": i, "square_pyramid": {"apex": res.apex, "cycle": list(res.cycle)}})
                else:
                    out.extend([res.g1, res.g2])
                    notes.append({
                        "index": i,
                        "pair": list(res.pair),
                        "sites": [[res.site1.u, res.site1.v, res.site1.w], [res.site2.u, res.site2.v, res.site2.w]],
                    })
    _write_bytes(args.output, encode_graphs(out, args.format, args.allow_loss))
    if notes:
        print(json.dumps({"schema_version": SCHEMA_VERSION, "op": op, "notes": notes}, sort_keys=True), file=sys.stderr)
    return EXIT_OK


def cmd_convert(args) -> int:
    graphs = read_graphs(args.input, args.in_format)
    if args.to == "planar_code":
        graphs = [_as_plane(g) for g in graphs]
    _write_bytes(args.output, encode_graphs(graphs, args.to, args.allow_loss))
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = _config(args, suite=args.suite, population=args.population)
    threads = None if cfg.deterministic else cfg.threads
    pop = parse_population(args.population, threads)
    start = time.perf_counter()
    rep = run_suite(args.suite, pop)
    report = rep.as_dict()
    report["wall_time_s"] = round(time.perf_counter() - start, 3)
    _dump_json(report, args.report)
    if args.csv:
        Path(args.csv).write_text(table_csv(pop))
    status = "pass" if rep.passed else f"FAIL ({len(rep.violations)} violations)"
    print(f"{args.suite} on {args.population}: {rep.checked} checked, {status}", file=sys.stderr)
    return EXIT_OK if rep.passed else EXIT_VIOLATIONS


def cmd_fixtures(args) -> int:
    if args.action == "list":
        man = fx.shipped_manifest()
        for name in fx.FIXTURE_NAMES:
            e = man[name]
            print(f"{name}\tn={e['n']}\tq={e['q']}\tf={e['f']}")
        return EXIT_OK
    if args.action == "export":
        if not args.dir:
            raise BadConfig("fixtures export needs --dir")
        fx.write_corpus(args.dir)
        return EXIT_OK
    if args.action == "check":
        bad = fx.check_corpus()
        for name in bad:
            print(f"mismatch: {name}", file=sys.stderr)
        return EXIT_VIOLATIONS if bad else EXIT_OK
    # show
    if args.name not in fx.FIXTURE_NAMES:
        raise BadConfig(f"unknown fixture {args.name!r}")
    _write_bytes(args.output, encode_graphs([fx.fixture(args.name)], args.format, args.allow_loss))
    return EXIT_OK


# parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polydeza", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def threads_flags(sp):
        sp.add_argument("--threads", type=int, default=None, help="worker processes (default: $POLYDEZA_THREADS or 1)")
        sp.add_argument("--deterministic", action="store_true", help="force a single thread")

    g = sub.add_parser("gen", help="generate a class of plane graphs")
    g.add_argument("--class", dest="gen_class", required=True, choices=sorted(_GEN))
    g.add_argument("--max-n", type=int, required=True)
    g.add_argument("--no-b", action="store_true", help="quadrangulations without separating 4-cycles")
    g.add_argument("--min-degree", type=int, default=3, choices=(3, 4, 5), help="tri: minimum degree")
    g.add_argument("--min-face", type=int, default=3, choices=(3, 4, 5), help="cubic: shortest face")
    g.add_argument("--format", choices=FORMATS, default="planar_code")
    g.add_argument("--output", "-o", default="-")
    g.add_argument("--summary", default=None, help="summary JSON (default: OUTPUT.summary.json)")
    threads_flags(g)
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("classify", help="per-graph JSON records")
    c.add_argument("input", nargs="?", default="-")
    c.add_argument("--format", choices=("auto",) + FORMATS, default="auto")
    c.add_argument("--output", "-o", default="-")
    c.set_defaults(func=cmd_classify)

    t = sub.add_parser("transform", help="dual, medial, radial, line graph, T-construction")
    t.add_argument("--op", required=True, choices=(
        "dual", "medial", "radial", "line", "medial-preimage", "t-construct", "t-decompose"))
    t.add_argument("input", nargs="?", default="-")
    t.add_argument("--input2", default=None, help="second host for t-construct")
    t.add_argument("--site1", default=None, help="u,v,w with v,u,w consecutive on a face of the first host")
    t.add_argument("--site2", default=None)
    t.add_argument("--in-format", choices=("auto",) + FORMATS, default="auto")
    t.add_argument("--format", choices=FORMATS, default="planar_code")
    t.add_argument("--allow-loss", action="store_true")
    t.add_argument("--output", "-o", default="-")
    t.set_defaults(func=cmd_transform)

    v = sub.add_parser("convert", help="re-encode between graph6 and planar_code")
    v.add_argument("input", nargs="?", default="-")
    v.add_argument("--to", required=True, choices=FORMATS)
    v.add_argument("--in-format", choices=("auto",) + FORMATS, default="auto")
    v.add_argument("--allow-loss", action="store_true", help="permit dropping embeddings")
    v.add_argument("--output", "-o", default="-")
    v.set_defaults(func=cmd_convert)

    r = sub.add_parser("verify", help="run a verification suite over a population")
    r.add_argument("--suite", required=True)
    r.add_argument("--population", required=True)
    r.add_argument("--report", default="-")
    r.add_argument("--csv", default=None, help="also write table row counts per order")
    threads_flags(r)
    r.set_defaults(func=cmd_verify)

    f = sub.add_parser("fixtures", help="the shipped fixture corpus")
    f.add_argument("action", choices=("list", "show", "export", "check"))
    f.add_argument("name", nargs="?")
    f.add_argument("--dir", default=None)
    f.add_argument("--format", choices=FORMATS, default="planar_code")
    f.add_argument("--allow-loss", action="store_true")
    f.add_argument("--output", "-o", default="-")
    f.set_defaults(func=cmd_fixtures)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except OSError as exc:
        print(f"polydeza: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (PolydezaError, KeyError) as exc:
        print(f"polydeza: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
