"""Command-line interface: ``python -m defectcolor <command>``.

Graphs travel between commands one per line, either as JSON embeddings
(``{"n": ..., "rotations": ...}``, possibly with extra keys such as a
coloring) or as graph6 strings, which are embedded on the fly.

Exit codes: 0 success, 1 infeasible or invalid coloring, 2 bad input,
3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, TextIO

from . import __version__
from .coloring import coloring_from_json, verify
from .corpus import (
    FormatError,
    NonPlanar,
    TooLarge,
    UnknownName,
    embed,
    embedding_from_dict,
    embedding_to_dict,
    gen_named,
    gen_random,
    parse_graph6,
    write_dot,
    write_graph6,
)
from .discharge import ConservationBroken, audit, check_lemmas, dot_labels
from .graph import EmbeddingError, PlanarEmbedding, heavy_edges
from .reducer import ExtensionFailed, NoLowVertex
from .solver import GirthTooSmall, exact_solve, reduce_solve

OK, INFEASIBLE, BAD_INPUT, BREACH = 0, 1, 2, 3
FAMILIES = ("random", "cycle", "path", "star", "grid", "dodecahedron", "subdivided")


class InputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# input


def read_records(stream: TextIO) -> Iterator[tuple[PlanarEmbedding, dict]]:
    """Yield (embedding, raw record) for every graph in the stream."""
    text = stream.read()
    stripped = text.strip()
    if not stripped:
        return
    if stripped.startswith("{") or stripped.startswith("["):
        try:
            data = json.loads(stripped)
            items = data if isinstance(data, list) else [data]
        except json.JSONDecodeError:
            items = [json.loads(line) for line in stripped.splitlines() if line.strip()]
        for item in items:
            yield embedding_from_dict(item), item
        return
    for line in stripped.splitlines():
        if not line.strip():
            continue
        n, edges = parse_graph6(line)
        yield embed(edges, n), {}


# ---------------------------------------------------------------------------
# commands


def cmd_gen(args, out: TextIO) -> int:
    for i in range(args.count):
        seed = args.seed + i
        if args.family == "random":
            if args.n is None:
                raise InputError("--n is required for the random family")
            emb = gen_random(args.n, seed)
        elif args.family == "grid":
            emb = gen_named("grid", args.m, args.n)
        elif args.family == "dodecahedron":
            emb = gen_named("dodecahedron")
        elif args.family == "subdivided":
            emb = gen_named(f"subdivided({args.base})")
        else:
            if args.n is None:
                raise InputError(f"--n is required for the {args.family} family")
            emb = gen_named(args.family, args.n)
        if args.format == "graph6":
            out.write(write_graph6(emb) + "\n")
        else:
            out.write(json.dumps(embedding_to_dict(emb)) + "\n")
    return OK


def cmd_solve(args, out: TextIO) -> int:
    code = OK
    for emb, _ in read_records(args.input):
        if args.strategy == "reduce":
            if (args.d1, args.d2) != (3, 4):
                raise InputError("the reduce strategy only targets (d1, d2) = (3, 4)")
            report = reduce_solve(emb, strategy=args.reduction, max_depth=args.depth)
        else:
            report = exact_solve(emb, args.d1, args.d2)
        record = embedding_to_dict(emb)
        record.update(report.to_dict(with_trace=args.trace))
        out.write(json.dumps(record) + "\n")
        if not report.feasible:
            code = INFEASIBLE
    return code


def cmd_verify(args, out: TextIO) -> int:
    code = OK
    external = None
    if args.coloring:
        with open(args.coloring) as fh:
            external = coloring_from_json(fh.read())
    for emb, record in read_records(args.input):
        if external is not None:
            colors = external
        elif "coloring" in record:
            colors = coloring_from_json(record["coloring"])
        else:
            raise InputError("no coloring given (use --coloring or pipe solve output)")
        verdict = verify(emb, colors, args.d1, args.d2)
        out.write(json.dumps({"valid": verdict.valid, "problems": verdict.describe()}) + "\n")
        if not verdict.valid:
            code = INFEASIBLE
    return code


def cmd_audit(args, out: TextIO) -> int:
    for emb, _ in read_records(args.input):
        report = audit(emb)
        if args.report == "dot":
            out.write(write_dot(emb, dot_labels(report, emb)))
        else:
            out.write(report.to_json() + "\n")
    return OK


def cmd_classify(args, out: TextIO) -> int:
    from .discharge import match_special_faces

    for emb, _ in read_records(args.input):
        vertices = [
            {"vertex": v, "degree": c.degree, "tag": c.tag.value, "plus_neighbors": c.plus_neighbors, "label": c.label}
            for v, c in enumerate(emb.classes)
        ]
        special = {f"f{i}": name for i, name in sorted(match_special_faces(emb).items())}
        out.write(json.dumps({
            "vertices": vertices,
            "heavy_edges": [list(e) for e in sorted(heavy_edges(emb))],
            "special_faces": special,
        }) + "\n")
    return OK


def cmd_lemmas(args, out: TextIO) -> int:
    for emb, _ in read_records(args.input):
        found = check_lemmas(emb, no_1_vertex=args.no_1_vertex)
        out.write(json.dumps([v.to_dict() for v in found]) + "\n")
    return OK


def _bench_one(job: tuple[int, int, str]) -> dict:
    n, seed, strategy = job
    emb = gen_random(n, seed)
    t0 = time.perf_counter()
    report = reduce_solve(emb, strategy=strategy)
    t1 = time.perf_counter()
    aud = audit(emb, lemmas=False)
    t2 = time.perf_counter()
    return {
        "n": n,
        "seed": seed,
        "feasible": report.feasible and verify(emb, report.coloring, 3, 4).valid,
        "fallbacks": report.stats["fallbacks"],
        "conserved": aud.final_total == -8,
        "solve_ms": (t1 - t0) * 1000,
        "audit_ms": (t2 - t1) * 1000,
    }


def cmd_bench(args, out: TextIO) -> int:
    if args.corpus != "random":
        raise InputError("only the random corpus is benchmarked")
    jobs = [(args.n, args.seed + i, args.reduction) for i in range(args.count)]
    t0 = time.perf_counter()
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_bench_one, jobs, chunksize=8))
    else:
        rows = [_bench_one(j) for j in jobs]
    summary = {
        "count": len(rows),
        "failures": sum(1 for r in rows if not r["feasible"]),
        "fallbacks": sum(r["fallbacks"] for r in rows),
        "conservation_failures": sum(1 for r in rows if not r["conserved"]),
        "solve_ms": round(sum(r["solve_ms"] for r in rows), 1),
        "audit_ms": round(sum(r["audit_ms"] for r in rows), 1),
        "wall_s": round(time.perf_counter() - t0, 3),
    }
    out.write(json.dumps(summary) + "\n")
    if summary["conservation_failures"]:
        return BREACH
    return INFEASIBLE if summary["failures"] else OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="defectcolor", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--seed", type=int, default=0, help="seed for all randomness (default 0)")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp):
        sp.add_argument("--input", type=argparse.FileType("r"), default=sys.stdin,
                        help="graph file (default: standard input)")
        return sp

    g = sub.add_parser("gen", help="generate graphs")
    g.add_argument("--family", choices=FAMILIES, default="random")
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int, help="rows for the grid family")
    g.add_argument("--base", default="dodecahedron", help="base graph for the subdivided family")
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--format", choices=("json", "graph6"), default="json")
    g.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    s = with_input(sub.add_parser("solve", help="find a (d1, d2)-coloring"))
    s.add_argument("--d1", type=int, default=3)
    s.add_argument("--d2", type=int, default=4)
    s.add_argument("--strategy", choices=("exact", "reduce"), default="exact")
    s.add_argument("--reduction", choices=("vertex", "edge", "gadget"), default="vertex",
                   help="reduction used by the reduce strategy")
    s.add_argument("--depth", type=int, default=6, help="recoloring search depth")
    s.add_argument("--trace", action="store_true", help="include the reduction trace")

    v = with_input(sub.add_parser("verify", help="check colorings"))
    v.add_argument("--d1", type=int, default=3)
    v.add_argument("--d2", type=int, default=4)
    v.add_argument("--coloring", help="JSON file with [{vertex, color}, ...]")

    a = with_input(sub.add_parser("audit", help="run the discharging audit"))
    a.add_argument("--report", choices=("json", "dot"), default="json")

    with_input(sub.add_parser("classify", help="vertex classes, heavy edges, special faces"))

    le = with_input(sub.add_parser("lemmas", help="structural lemma violations"))
    le.add_argument("--no-1-vertex", action="store_true", help="also flag 1-vertices")

    b = sub.add_parser("bench", help="solve and audit a generated corpus")
    b.add_argument("--corpus", choices=("random",), default="random")
    b.add_argument("--n", type=int, default=200)
    b.add_argument("--count", type=int, default=50)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--reduction", choices=("vertex", "edge", "gadget"), default="vertex")
    b.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    return p


COMMANDS = {
    "gen": cmd_gen,
    "solve": cmd_solve,
    "verify": cmd_verify,
    "audit": cmd_audit,
    "classify": cmd_classify,
    "lemmas": cmd_lemmas,
    "bench": cmd_bench,
}


def run(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code == 0 else BAD_INPUT
    err.write(f"# defectcolor {__version__} seed={args.seed}: {shlex.join(['defectcolor', *argv])}\n")
    try:
        return COMMANDS[args.command](args, out)
    except (ConservationBroken, ExtensionFailed, AssertionError) as exc:
        err.write(f"error: internal invariant breach: {exc}\n")
        return BREACH
    except (EmbeddingError, FormatError, NonPlanar, TooLarge, GirthTooSmall, NoLowVertex,
            UnknownName, InputError, json.JSONDecodeError, KeyError, ValueError, OSError) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return BAD_INPUT


def main() -> None:
    sys.exit(run())
