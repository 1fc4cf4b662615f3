"""Command-line entry point.

Every subcommand prints one JSON report on standard output.  Vertex ids in
all output are 1-indexed, matching the graph file format.  Exit status is 0
on success, 1 when the domain answer is negative or inconclusive, and 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
import warnings
from pathlib import Path

from minseps import classc, configs, generators, holes, mwis, semimatching, separators
from minseps.graph import GraphFormatError, WeightedGraph, dump_graph, load_graph, load_weights

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class Report:
    def __init__(self, argv, no_timings: bool):
        self.command = list(argv)
        self.input_sha256 = None
        self.timings = {}
        self.counts = {}
        self.no_timings = no_timings

    def timed(self, phase, fn, *args, **kwargs):
        t0 = time.perf_counter()
        out = fn(*args, **kwargs)
        self.timings[phase] = round(time.perf_counter() - t0, 6)
        return out

    def payload(self, result) -> dict:
        out = {"command": self.command, "input_sha256": self.input_sha256}
        if not self.no_timings:
            out["timings"] = self.timings
        out["counts"] = self.counts
        out["result"] = result
        return out


def _read_graph(path: str, report: Report):
    data = Path(path).read_bytes()
    report.input_sha256 = hashlib.sha256(data).hexdigest()
    return load_graph(data)


def _one_indexed(value):
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    if isinstance(value, int):
        return value + 1
    if isinstance(value, dict):
        return {k: (v if k in ("k", "n", "seed", "density", "family") else _one_indexed(v))
                for k, v in value.items()}
    return [_one_indexed(v) for v in value]


# --- subcommands ------------------------------------------------------------------

def cmd_gen(args, report):
    fam = generators.FAMILIES[args.family]
    if args.family in ("cycle", "chordal") and args.n is None and args.k is None:
        raise UsageError(f"--n is required for family {args.family}")
    if args.family not in ("cycle", "chordal") and args.k is None:
        raise UsageError(f"--k is required for family {args.family}")
    g, meta = fam(k=args.k, n=args.n, seed=args.seed)
    text = dump_graph(g, [f"family {args.family}"])
    out = Path(args.output)
    out.write_text(text)
    side = out.with_name(out.name + ".meta.json")
    side.write_text(json.dumps(_one_indexed(meta), indent=2, sort_keys=True) + "\n")
    report.input_sha256 = hashlib.sha256(text.encode()).hexdigest()
    report.counts = {"vertices": g.n, "edges": g.m}
    return {"file": str(out), "meta": str(side)}, EXIT_OK


def cmd_check_class(args, report):
    g = _read_graph(args.graph, report)
    res = report.timed("check", configs.is_in_class_C, g, args.budget)
    return res.to_json(1), EXIT_OK if res.in_class is True else EXIT_DOMAIN


def _warn_if_disconnected(g):
    from minseps.graph import is_connected
    if not is_connected(g):
        print("warning: input graph is disconnected; the empty set is not reported",
              file=sys.stderr)


def cmd_seps(args, report):
    g = _read_graph(args.graph, report)
    _warn_if_disconnected(g)
    stats = {} if args.stats else None
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        if args.method in ("brute", "expansion"):
            seps = report.timed("enumerate", separators.oracle_minimal_separators, g, args.method)
        elif args.method == "cliquesep":
            seps = report.timed("enumerate", separators.clique_minimal_separators, g)
        elif args.method == "semimatching":
            if args.k is None:
                raise UsageError("--k is required for --method semimatching")
            seps = report.timed("enumerate", semimatching.enumerate_separators_semimatching,
                                g, args.k, args.jobs, stats)
        else:
            seps = report.timed("enumerate", classc.enumerate_all_minimal_separators_classC,
                                g, args.jobs, stats)
    report.counts["separators"] = len(seps)
    if stats:
        report.counts.update(stats)
    return [s.to_json(1) for s in seps], EXIT_OK


def _load_seps(path: str, n: int):
    data = json.loads(Path(path).read_text())
    if isinstance(data, dict):
        data = data.get("result", [])
    out = []
    for item in data:
        vs = item["set"] if isinstance(item, dict) else item
        if any(not isinstance(v, int) or not 1 <= v <= n for v in vs):
            raise GraphFormatError(f"separator {vs} has an out-of-range vertex")
        out.append(tuple(sorted(v - 1 for v in vs)))
    return out


def cmd_pmc(args, report):
    g = _read_graph(args.graph, report)
    if args.seps:
        seps = _load_seps(args.seps, g.n)
    else:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            seps = report.timed("separators", separators.oracle_minimal_separators,
                                g, "expansion")
    pmcs = report.timed("pmcs", mwis.enumerate_pmcs, g, seps)
    report.counts.update({"separators": len(seps), "pmcs": len(pmcs)})
    return [[v + 1 for v in p.vertices] for p in pmcs], EXIT_OK


def cmd_mwis(args, report):
    g = _read_graph(args.graph, report)
    weights = ()
    if args.weights:
        weights = load_weights(Path(args.weights).read_bytes(), g.n)
    wg = WeightedGraph(g, weights)
    try:
        if args.method == "brute":
            res = report.timed("solve", mwis.brute_force_mwis, wg)
        else:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                if args.method == "classc":
                    seps = report.timed("separators",
                                        classc.enumerate_all_minimal_separators_classC,
                                        g, args.jobs)
                else:
                    seps = report.timed("separators", separators.oracle_minimal_separators,
                                        g, "expansion")
            pmcs = report.timed("pmcs", mwis.enumerate_pmcs, g, seps)
            report.counts.update({"separators": len(seps), "pmcs": len(pmcs)})
            res = report.timed("solve", mwis.mwis_via_pmc, wg, pmcs, seps)
    except mwis.IntegrityError as exc:
        return {"error": str(exc)}, EXIT_DOMAIN
    return res.to_json(1), EXIT_OK


def cmd_verify_decomposition(args, report):
    g = _read_graph(args.graph, report)
    res = report.timed("verify", holes.verify_decomposition, g, args.max_len, args.budget)
    report.counts["checked"] = res["checked"]
    out = {"checked": res["checked"],
           "failures": [_one_indexed(f) for f in res["failures"]]}
    return out, EXIT_OK if not res["failures"] else EXIT_DOMAIN


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="minseps", description=__doc__.splitlines()[0])
    p.add_argument("--no-timings", action="store_true", help="omit wall-clock timings")
    p.add_argument("--bare", action="store_true", help="print only the result payload")
    p.add_argument("--format", choices=["json"], default="json")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("gen", help="generate a graph family")
    s.add_argument("--family", required=True, choices=sorted(generators.FAMILIES))
    s.add_argument("--k", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("check-class", help="test for square, prism, pyramid, theta, even wheel")
    s.add_argument("graph")
    s.add_argument("--budget", type=int, default=None, help="hole search step budget")
    s.set_defaults(func=cmd_check_class)

    s = sub.add_parser("seps", help="enumerate minimal separators")
    s.add_argument("graph")
    s.add_argument("--method", default="classc",
                   choices=["brute", "expansion", "cliquesep", "semimatching", "classc"])
    s.add_argument("--k", type=int)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--stats", action="store_true")
    s.set_defaults(func=cmd_seps)

    s = sub.add_parser("pmc", help="enumerate potential maximal cliques")
    s.add_argument("graph")
    s.add_argument("--seps", help="JSON separator list (a seps report or a list of sets)")
    s.set_defaults(func=cmd_pmc)

    s = sub.add_parser("mwis", help="maximum weighted independent set")
    s.add_argument("graph")
    s.add_argument("--weights")
    s.add_argument("--method", default="pmc", choices=["brute", "pmc", "classc"])
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_mwis)

    s = sub.add_parser("verify-decomposition",
                       help="check the sector condition for every hole and major vertex")
    s.add_argument("graph")
    s.add_argument("--max-len", type=int, default=12)
    s.add_argument("--budget", type=int, default=None)
    s.set_defaults(func=cmd_verify_decomposition)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    report = Report(argv, args.no_timings)
    try:
        result, code = args.func(args, report)
    except (GraphFormatError, UsageError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"minseps: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = result if args.bare else report.payload(result)
    json.dump(out, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
