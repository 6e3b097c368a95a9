"""Command-line front end: ``solve``, ``gen``, ``verify`` and ``bench``.

Sets go to standard output, diagnostics to standard error.
Exit codes: 0 ok, 1 usage, 2 input/parse, 3 limit or timeout, 4 verify mismatch.
"""
from __future__ import annotations

import argparse
import csv
import os
import sys
import time

from .hypergraph import (Hypergraph, ParseError, complement, format_sets, parse_hypergraph,
                         remove_superset_edges, resolve_bits, sort_edges, write_hypergraph)
from .generators import FAMILIES, InstanceSpec, generate
from .sink import MhsSink, canonical
from .solve import ALGORITHMS, run

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_LIMIT, EXIT_MISMATCH = 0, 1, 2, 3, 4

TIME_LIMIT_ENV = "DUALIZE_TIME_LIMIT"

CSV_HEADER = ["instance", "algorithm", "prune", "bits", "m", "total_size", "mhs", "nodes", "seconds"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _on_off(text: str) -> bool:
    if text not in ("on", "off"):
        raise argparse.ArgumentTypeError("expected on or off")
    return text == "on"


def _default_time_limit():
    raw = os.environ.get(TIME_LIMIT_ENV)
    if not raw:
        return None
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"{TIME_LIMIT_ENV}={raw!r} is not a number") from None


def _add_instance_flags(p):
    p.add_argument("input", nargs="?", default="-", help="instance file, or - for stdin")
    p.add_argument("--coedges", action="store_true",
                   help="input lines are complements of the hyperedges")
    p.add_argument("--complement", action="store_true",
                   help="solve on co-edge storage (cRS / cDFS)")
    p.add_argument("--minimize", action="store_true", help="drop edges that contain another edge")
    p.add_argument("--sort-edges", choices=["input", "size-asc"], default="input")


def _add_search_flags(p):
    p.add_argument("--prune", type=_on_off, default=True, metavar="on|off")
    p.add_argument("--bits", choices=["auto", "on", "off"], default="auto")
    p.add_argument("--engine", choices=["auto", "lists", "bitset"], default="auto",
                   help="crit/uncov storage: linked lists or edge bitsets")
    p.add_argument("--time-limit", type=float, default=None, metavar="SECONDS",
                   help=f"abort after this many seconds (default: ${TIME_LIMIT_ENV})")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dualize", description="Enumerate minimal hitting sets of a hypergraph.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="print every minimal hitting set")
    _add_instance_flags(p)
    _add_search_flags(p)
    p.add_argument("-a", "--algorithm", choices=ALGORITHMS, default="rs")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--max-outputs", type=int, default=None, metavar="N")
    p.add_argument("-o", "--output", default="-")

    p = sub.add_parser("gen", help="write a benchmark instance")
    p.add_argument("family", type=str.upper, choices=FAMILIES)
    p.add_argument("n", type=int)
    p.add_argument("m", type=int, nargs="?", help="RANDOM only: edge count")
    p.add_argument("p", type=float, nargs="?", help="RANDOM only: inclusion probability")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default="-")

    p = sub.add_parser("verify", help="cross-check algorithms on one instance")
    _add_instance_flags(p)
    _add_search_flags(p)
    p.add_argument("--algorithms", default="rs,dfs,dl,brute",
                   help="comma list; prefix c (crs, cdfs) to run on co-edge storage")

    p = sub.add_parser("bench", help="time algorithms over generated or listed instances")
    p.add_argument("specs", nargs="*", help="generator specs such as TH:40 or RANDOM:30:200:0.8:1")
    p.add_argument("--instances", help="file with one spec or instance path per line")
    p.add_argument("--algorithms", default="rs,dfs")
    p.add_argument("--prune", default="on,off", help="comma list of on/off")
    p.add_argument("--bits", choices=["auto", "on", "off"], default="auto")
    p.add_argument("--engine", choices=["auto", "lists", "bitset"], default="auto")
    p.add_argument("--time-limit", type=float, default=None, metavar="SECONDS",
                   help="per-run limit; runs over it are recorded as timeout")
    p.add_argument("--ratios", help="write prune on/off ratios as CSV here (default: stderr)")
    p.add_argument("-o", "--output", default="-")
    return parser


def _open_out(path):
    if path == "-":
        return sys.stdout, False
    return open(path, "w", newline=""), True


def _load(args) -> Hypergraph:
    try:
        if args.input == "-":
            H = parse_hypergraph(sys.stdin.buffer.read(), coedges=args.coedges)
        else:
            with open(args.input, "rb") as fh:
                H = parse_hypergraph(fh.read(), coedges=args.coedges)
    except OSError as exc:
        raise ParseError(0, str(exc)) from None
    if args.minimize:
        H = remove_superset_edges(H)
    H = sort_edges(H, args.sort_edges)
    if args.complement:
        H = complement(H)
    return H


def _deadline(limit):
    return None if limit is None else time.perf_counter() + limit


def cmd_solve(args) -> int:
    H = _load(args)
    limit = args.time_limit if args.time_limit is not None else _default_time_limit()
    out, close = _open_out(args.output)
    labels = H.labels
    try:
        if args.count_only:
            sink = MhsSink("count", args.max_outputs, deadline=_deadline(limit))
        else:
            def write(s):
                out.write(format_sets([s], labels))
            sink = MhsSink("stream", args.max_outputs, callback=write, deadline=_deadline(limit))
        stats = run(H, args.algorithm, sink, prune=args.prune, bits=args.bits, engine=args.engine)
    finally:
        if close:
            out.close()
        else:
            out.flush()
    print(f"edges={H.m} verts={H.n} size={H.real_total_size()} mhs={sink.count} "
          f"nodes={stats.nodes} seconds={stats.seconds:.6f}", file=sys.stderr)
    if stats.aborted:
        print(f"dualize: stopped early ({stats.aborted})", file=sys.stderr)
        return EXIT_LIMIT
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.family == "RANDOM":
        if args.m is None or args.p is None:
            raise UsageError("RANDOM needs n, m and p")
        spec = InstanceSpec("RANDOM", args.n, args.m, args.p, args.seed)
    else:
        if args.m is not None:
            raise UsageError(f"{args.family} takes only n")
        spec = InstanceSpec(args.family, args.n)
    try:
        H = generate(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out, close = _open_out(args.output)
    try:
        write_hypergraph(H, out)
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_verify(args) -> int:
    H = _load(args)
    names = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    plan = []
    for name in names:
        flip = name.startswith("c") and name[1:] in ("rs", "dfs")
        algo = name[1:] if flip else name
        if algo not in ALGORITHMS:
            raise UsageError(f"unknown algorithm {name!r}")
        plan.append((name, algo, flip))
    if len(plan) < 2:
        raise UsageError("verify needs at least two algorithms")
    limit = args.time_limit if args.time_limit is not None else _default_time_limit()
    results = {}
    for name, algo, flip in plan:
        target = complement(H) if flip else H
        sink = MhsSink("collect", deadline=_deadline(limit))
        try:
            stats = run(target, algo, sink, prune=args.prune, bits=args.bits, engine=args.engine)
        except ValueError as exc:
            raise UsageError(f"{name}: {exc}") from None
        if stats.aborted:
            print(f"{name}: stopped early ({stats.aborted})", file=sys.stderr)
            return EXIT_LIMIT
        results[name] = canonical(sink.sets)
        print(f"{name}: mhs={len(results[name])} nodes={stats.nodes} seconds={stats.seconds:.6f}",
              file=sys.stderr)
    base_name = plan[0][0]
    base = results[base_name]
    for name, _, _ in plan[1:]:
        other = results[name]
        if other != base:
            a, b = set(base), set(other)
            only = sorted(a - b)
            where, diff = (base_name, only[0]) if only else (name, sorted(b - a)[0])
            print(f"mismatch between {base_name} and {name}: first differing set "
                  f"{format_sets([diff], H.labels).strip()} (only in {where})", file=sys.stderr)
            return EXIT_MISMATCH
    print(f"ok: {len(plan)} algorithms agree on {len(base)} sets", file=sys.stderr)
    return EXIT_OK


def _bench_instances(args):
    lines = list(args.specs)
    if args.instances:
        with open(args.instances) as fh:
            lines += [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    out = []
    for line in lines:
        if os.path.exists(line):
            with open(line, "rb") as fh:
                out.append((os.path.basename(line), parse_hypergraph(fh.read())))
        else:
            try:
                spec = InstanceSpec.parse(line)
                out.append((spec.name, spec.build()))
            except ValueError as exc:
                raise UsageError(str(exc)) from None
    return out


def cmd_bench(args) -> int:
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    for a in algorithms:
        if a not in ALGORITHMS:
            raise UsageError(f"unknown algorithm {a!r}")
    prunes = []
    for tok in args.prune.split(","):
        tok = tok.strip()
        if tok not in ("on", "off"):
            raise UsageError(f"--prune expects on/off values, got {tok!r}")
        prunes.append(tok == "on")
    instances = _bench_instances(args)
    out, close = _open_out(args.output)
    ratio_rows = []
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for name, H in instances:
            bits = "on" if resolve_bits(H, args.bits) else "off"
            for algo in algorithms:
                timing = {}
                for prune in prunes:
                    sink = MhsSink("count", deadline=_deadline(args.time_limit))
                    stats = run(H, algo, sink, prune=prune, bits=args.bits, engine=args.engine)
                    seconds = "timeout" if stats.aborted else f"{stats.seconds:.6f}"
                    writer.writerow([name, algo, "on" if prune else "off", bits, H.m,
                                     H.real_total_size(), sink.count, stats.nodes, seconds])
                    if not stats.aborted:
                        timing[prune] = stats
                if True in timing and False in timing:
                    on, off = timing[True], timing[False]
                    t_ratio = on.seconds / off.seconds if off.seconds > 0 else float("nan")
                    n_ratio = on.nodes / off.nodes if off.nodes else float("nan")
                    ratio_rows.append([name, algo, f"{t_ratio:.3f}", f"{n_ratio:.3f}"])
    finally:
        if close:
            out.close()
        else:
            out.flush()
    if args.ratios:
        fh = open(args.ratios, "w", newline="")
    else:
        fh = sys.stderr
    try:
        writer = csv.writer(fh, lineterminator="\n")
        if ratio_rows or args.ratios:
            writer.writerow(["instance", "algorithm", "time_ratio", "node_ratio"])
        writer.writerows(ratio_rows)
    finally:
        if args.ratios:
            fh.close()
    return EXIT_OK


COMMANDS = {"solve": cmd_solve, "gen": cmd_gen, "verify": cmd_verify, "bench": cmd_bench}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if getattr(args, "max_outputs", None) is not None and args.max_outputs < 0:
            raise UsageError("--max-outputs must be non-negative")
        if getattr(args, "time_limit", None) is not None and args.time_limit <= 0:
            raise UsageError("--time-limit must be positive")
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"dualize: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"dualize: cannot read instance: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
