"""Command-line front end: ``kegraph analyze | check | fuzz | gen``.

Exit codes: 0 for K-E / all checks passing, 1 for not K-E / a failed check
or fuzz disagreement, 2 for errors and indeterminate results.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from pathlib import Path

from . import generators
from .analysis import CHECKS, METHODS, Analysis, check_saturation_prop, is_ke, run_check
from .budget import Budget
from .errors import BudgetExceeded, GraphError, RecognizerDisagreement
from .graph import FORMATS, Graph, read_graph, serialize_graph, write_graph
from .independence import independence_report
from .matching import mu_report

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    """A user-facing error; reported on stderr with exit code 2."""


# -- helpers -------------------------------------------------------------------


def _positive_int(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _positive_float(text):
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _budget(args) -> Budget:
    return Budget.start(args.max_items, args.timeout)


def _load(args) -> Graph:
    if args.fixture and args.input:
        raise CliError("give either an input file or --fixture, not both")
    if args.fixture:
        return generators.fixture(args.fixture)
    if not args.input:
        raise CliError("no input graph (pass a file or --fixture NAME)")
    if args.input == "-":
        from .graph import parse_graph, sniff_format

        text = sys.stdin.read()
        return parse_graph(text, args.format or sniff_format(text))
    return read_graph(args.input, args.format)


def _emit(args, payload: dict, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        for line in text_lines:
            print(line)


def _fmt(value):
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return "{" + ", ".join(_fmt(v) for v in value) + "}"
    return str(value)


def _table(rows):
    width = max((len(k) for k, _ in rows), default=0)
    return [f"{k.ljust(width)}  {_fmt(v)}" for k, v in rows]


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "m": g.m, "labels": list(g.labels) if g.labels is not None else None}


# -- analyze --------------------------------------------------------------------


def cmd_analyze(args) -> int:
    g = _load(args)
    budget = _budget(args)
    ctx = Analysis(g, budget)
    try:
        report = is_ke(g, args.method, ctx=ctx)
    except RecognizerDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        if args.json and exc.report is not None:
            print(json.dumps(exc.report.to_json(), indent=2))
        return EXIT_ERROR
    ind = independence_report(g, budget)
    mu = mu_report(g, ctx.matching)
    payload = {"command": "analyze", "graph": _graph_json(g)}
    payload.update(report.to_json())
    payload["independence"] = ind.to_json()
    payload["matching"] = mu.to_json()
    verdict = report.verdict
    if report.indeterminate and verdict is None:
        status = "indeterminate"
    else:
        status = {True: "ke", False: "not-ke", None: "indeterminate"}[verdict]
    payload["status"] = status
    lines = [f"graph: n={g.n} m={g.m}"]
    lines += _table([
        ("K-E", verdict),
        *[(f"  {m}", report.verdicts.get(m)) for m in METHODS if m in report.verdicts],
        ("alpha", ind.alpha),
        ("mu", mu.mu),
        ("deficiency", mu.deficiency),
        ("|Omega|", ind.omega_count),
        ("core", None if ind.core is None else ind.core.names()),
        ("d", ind.d),
        ("alpha_c", ind.alpha_c),
        ("exposed", g.names(mu.exposed)),
        ("mu-critical", g.names(mu.mu_critical)),
        ("matching", mu.matching.names()),
    ])
    if report.indeterminate:
        lines.append(f"indeterminate: {', '.join(report.indeterminate)}")
    if report.decomposition is not None:
        dec = report.decomposition.to_json()
        lines.append(f"decomposition: S={_fmt(dec['S'])} H={_fmt(dec['H']['vertices'])}")
    if report.witness is not None:
        w = report.witness.to_json()
        lines.append(f"witness: {w['kind']} cycles={w['cycles']} "
                     f"{'join' if w['kind'] == 'posy' else 'stem'}={w.get('join', w.get('stem'))}")
    if report.theorem1_violation is not None:
        v = report.theorem1_violation.to_json()
        lines.append(f"theorem1 violation: M={v['matching']} S={v['S']} edge={v['edge']}")
    _emit(args, payload, lines)
    if verdict is None:
        return EXIT_ERROR
    return EXIT_OK if verdict else EXIT_NO


# -- check ------------------------------------------------------------------------


def _overall(reports):
    statuses = [r.status for r in reports]
    if "fail" in statuses:
        return "fail", EXIT_NO
    if "indeterminate" in statuses:
        return "indeterminate", EXIT_ERROR
    return "pass", EXIT_OK


def cmd_check(args) -> int:
    g = _load(args)
    ctx = Analysis(g, _budget(args))
    if args.vertex is not None:
        if args.property != "saturation":
            raise CliError("--vertex only applies to --property saturation")
        reports = [check_saturation_prop(g, args.vertex, ctx=ctx)]
    else:
        reports = run_check(g, args.property, ctx=ctx)
    status, code = _overall(reports)
    payload = {"command": "check", "graph": _graph_json(g), "status": status,
               "checks": [r.to_json() for r in reports]}
    lines = []
    for r in reports:
        extra = f"  ({r.note})" if r.note else ""
        lines.append(f"{r.property:<11} {r.status}{extra}")
        if r.property == "identities":
            lines.append("            " + ", ".join(f"{k}={v}" for k, v in r.details["values"].items()))
    lines.append(f"overall     {status}")
    _emit(args, payload, lines)
    return code


# -- fuzz ---------------------------------------------------------------------------


def _all_graphs(n):
    pairs = [(u, v) for v in range(n) for u in range(v)]
    for code in range(1 << len(pairs)):
        yield Graph(n, [pairs[k] for k in range(len(pairs)) if code >> k & 1])


def _fuzz_one(g, budget):
    """``(ke verdict or None, failures, indeterminate?)`` for one graph."""
    ctx = Analysis(g, budget)
    failures = []
    try:
        report = is_ke(g, "all", ctx=ctx)
    except RecognizerDisagreement as exc:
        return None, [f"recognizers disagree: {exc.verdicts}"], False
    indeterminate = bool(report.indeterminate)
    for r in run_check(g, "all", ctx=ctx):
        if r.status == "fail":
            failures.append(f"{r.property} failed")
        elif r.status == "indeterminate":
            indeterminate = True
    return report.verdict, failures, indeterminate


def cmd_fuzz(args) -> int:
    p_list = [float(p) for p in args.p_list.split(",")] if args.p_list else [0.1, 0.3, 0.5, 0.8]
    for p in p_list:
        if not 0.0 <= p <= 1.0:
            raise CliError(f"edge probability {p} outside [0, 1]")
    if args.n_max < 1:
        raise CliError("--n-max must be at least 1")
    samples = args.samples if args.samples is not None else (0 if args.exhaustive is not None else 200)
    corpus = []
    if args.exhaustive is not None:
        if not 0 <= args.exhaustive <= 8:
            raise CliError("--exhaustive supports 0..8 vertices")
        corpus.append((f"exhaustive n={args.exhaustive}", _all_graphs(args.exhaustive)))
    rng = random.Random(args.seed)

    def randoms():
        for i in range(samples):
            n = rng.randint(1, args.n_max)
            p = p_list[i % len(p_list)]
            yield generators.gnp(n, p, seed=rng.getrandbits(32))

    corpus.append((f"random n<={args.n_max} seed={args.seed}", randoms()))
    out_dir = Path(args.out_dir)
    total = ke = failures = indeterminate = 0
    failed = []
    for label, graphs in corpus:
        for g in graphs:
            total += 1
            try:
                verdict, errs, undecided = _fuzz_one(g, _budget(args))
            except BudgetExceeded:
                verdict, errs, undecided = None, [], True
            ke += verdict is True
            indeterminate += undecided
            if errs:
                failures += 1
                out_dir.mkdir(parents=True, exist_ok=True)
                path = out_dir / f"fuzz-fail-{len(failed):04d}.txt"
                write_graph(g, path)
                failed.append({"source": label, "index": total - 1, "file": str(path),
                               "problems": errs})
    payload = {"command": "fuzz", "seed": args.seed, "graphs": total, "ke": ke,
               "notKe": total - ke - indeterminate, "disagreements": failures,
               "indeterminate": indeterminate, "failures": failed,
               "status": "pass" if failures == 0 else "fail"}
    lines = [f"graphs checked   {total}", f"K-E              {ke}",
             f"disagreements    {failures}", f"indeterminate    {indeterminate}"]
    lines += [f"reproducer: {f['file']}  {'; '.join(f['problems'])}" for f in failed]
    _emit(args, payload, lines)
    return EXIT_OK if failures == 0 else EXIT_NO


# -- gen -----------------------------------------------------------------------------


def cmd_gen(args) -> int:
    choices = [("fixture", args.fixture), ("path", args.path), ("cycle", args.cycle),
               ("complete", args.complete), ("complete_bipartite", args.complete_bipartite),
               ("empty", args.empty), ("gnp", args.gnp), ("gnm", args.gnm),
               ("bipartite_gnp", args.bipartite_gnp)]
    picked = [(k, v) for k, v in choices if v is not None]
    if len(picked) != 1:
        raise CliError("choose exactly one generator")
    kind, params = picked[0]
    if not isinstance(params, list):
        params = [params]
    g = generators.generate(kind, *params, seed=args.seed)
    if args.output:
        write_graph(g, args.output, args.format or "edge-list")
    payload = {"command": "gen", "generator": kind, "params": [str(p) for p in params],
               "seed": args.seed, "output": args.output, "n": g.n, "m": g.m}
    if args.json:
        print(json.dumps(payload, indent=2))
    elif not args.output:
        sys.stdout.write(serialize_graph(g, args.format or "edge-list"))
    else:
        print(f"wrote {args.output} (n={g.n}, m={g.m})")
    return EXIT_OK


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kegraph", description="Recognize König-Egerváry graphs and check their structure.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-items", type=_positive_int, default=None,
                        help="cap on enumerated objects per enumeration "
                             "(default 10^6, env KEGRAPH_BUDGET)")
    common.add_argument("--timeout", type=_positive_float, default=None,
                        help="wall-clock seconds per graph (default 60, env KEGRAPH_TIMEOUT)")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("input", nargs="?", help="graph file ('-' for stdin)")
    source.add_argument("--fixture", choices=generators.FIXTURES, help="use a bundled fixture")
    source.add_argument("--format", choices=FORMATS, default=None,
                        help="input format (sniffed when omitted)")

    p = sub.add_parser("analyze", parents=[common, source], help="full K-E analysis")
    p.add_argument("--method", choices=METHODS + ("all",), default="all")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", parents=[common, source], help="run structural checks")
    p.add_argument("--property", choices=tuple(CHECKS) + ("all",), default="all")
    p.add_argument("--vertex", default=None,
                   help="vertex id or label for --property saturation (default: every vertex)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("fuzz", parents=[common], help="randomized cross-validation")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--samples", type=int, default=None,
                   help="random graphs (default 200, or 0 with --exhaustive)")
    p.add_argument("--p-list", default=None, help="comma-separated edge densities")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", type=int, default=None, metavar="N",
                   help="also check every labeled graph on N vertices")
    p.add_argument("--out-dir", default="kegraph-repro", help="where reproducers are written")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("gen", help="write a generated graph or fixture")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--fixture", choices=generators.FIXTURES)
    g.add_argument("--path", type=int, metavar="N")
    g.add_argument("--cycle", type=int, metavar="N")
    g.add_argument("--complete", type=int, metavar="N")
    g.add_argument("--complete-bipartite", type=int, nargs=2, metavar=("A", "B"))
    g.add_argument("--empty", type=int, metavar="N")
    g.add_argument("--gnp", nargs=2, metavar=("N", "P"))
    g.add_argument("--gnm", nargs=2, type=int, metavar=("N", "M"))
    g.add_argument("--bipartite-gnp", nargs=3, metavar=("A", "B", "P"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None, help="output file (stdout when omitted)")
    p.add_argument("--format", choices=FORMATS, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, GraphError, OSError, ValueError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except KeyboardInterrupt:
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
