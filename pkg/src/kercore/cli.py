"""Command-line front end.

    kercore analyze GRAPH            invariants, structure and law summary
    kercore verify GRAPH [--laws]    check laws, dump witnesses on failure
    kercore search LAW [spec flags]  seeded counterexample search
    kercore generate --out FILE      write a generated graph plus ground truth

Reports are JSON with sorted keys and sorted vertex lists. Exit codes:
0 pass, 1 law violation, 2 input or usage error, 3 guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .errors import GenerationError, GraphFormatError, GuardExceeded, InternalInconsistency
from .facts import Facts
from .graph import dump_graph, read_graph
from .laws import LAWS, check_all, search_counterexample
from .randgen import GADGET_KINDS, GenSpec, gen_almost_bipartite, gen_non_ke_almost_bipartite

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _sorted_list(s) -> list[int]:
    return sorted(s)


def _recognition_fields(f: Facts) -> dict:
    rec = f.odd_cycle_recognition
    if rec is None:
        return {"odd_cycle": None, "decomposition": None}
    dec = rec.decomposition
    return {
        "odd_cycle": list(rec.cycle.vertices),
        "decomposition": {
            "parts": {str(y): _sorted_list(p) for y, p in dec.parts.items()},
            "n1": _sorted_list(dec.n1),
        },
    }


def analysis_report(f: Facts, laws=None) -> dict:
    """Everything ``analyze`` prints, except input echo and timing."""
    G = f.graph
    report = {
        "n": G.n,
        "m": G.m,
        "classes": {
            "bipartite": f.bipartite,
            "almost_bipartite": f.almost_bipartite,
            "unicyclic": f.unicyclic,
            "connected": f.connected,
        },
        **_recognition_fields(f),
        "alpha": f.alpha,
        "mu": f.mu,
        "ke": f.ke,
        "d": f.d,
        "ker": _sorted_list(f.ker),
        "core": _sorted_list(f.core),
        "corona": _sorted_list(f.corona),
    }
    skipped = []
    try:
        report["id"] = f.id
    except GuardExceeded as exc:
        report["id"] = None
        skipped.append(f"id: {exc}")
    report["guards"] = skipped
    if laws != []:
        report["laws"] = {r.law_id: r.verdict for r in check_all(f, laws)}
    return report


def _emit(report: dict, pretty: bool, out=None) -> None:
    out = out or sys.stdout
    if not pretty:
        out.write(json.dumps(report, sort_keys=True) + "\n")
        return
    for key in sorted(report):
        value = report[key]
        if isinstance(value, dict) and value and all(not isinstance(v, (dict, list)) for v in value.values()):
            out.write(f"{key}:\n")
            for k in sorted(value):
                out.write(f"  {k:<20} {json.dumps(value[k])}\n")
        else:
            out.write(f"{key:<22} {json.dumps(value, sort_keys=True)}\n")


def _parse_laws(text: str | None):
    if text is None or text == "all":
        return None
    if text == "none":
        return []
    ids = [x.strip() for x in text.split(",") if x.strip()]
    unknown = [x for x in ids if x not in LAWS]
    if unknown:
        raise UsageError(f"unknown law(s): {', '.join(unknown)}; known: {', '.join(LAWS)}")
    return ids


def _timed(report: dict, start: float, args) -> dict:
    if not args.no_timing:
        report["timing"] = {"seconds": round(time.perf_counter() - start, 4)}
    return report


def cmd_analyze(args) -> int:
    start = time.perf_counter()
    G = read_graph(args.graph)
    f = Facts(G)
    report = {"input": str(args.graph), **analysis_report(f, _parse_laws(args.laws))}
    _emit(_timed(report, start, args), args.pretty)
    return EXIT_VIOLATION if "fail" in report.get("laws", {}).values() else EXIT_OK


def cmd_verify(args) -> int:
    start = time.perf_counter()
    G = read_graph(args.graph)
    results = check_all(Facts(G), _parse_laws(args.laws))
    report = {
        "input": str(args.graph),
        "n": G.n,
        "m": G.m,
        "results": [r.to_dict() for r in results],
    }
    _emit(_timed(report, start, args), args.pretty)
    if any(r.failed for r in results):
        return EXIT_VIOLATION
    if any(r.guard_skipped for r in results):
        return EXIT_GUARD
    return EXIT_OK


def _spec_from_args(args) -> GenSpec:
    gadgets = tuple(args.gadgets.split(",")) if args.gadgets else GADGET_KINDS
    spec = GenSpec(
        cycle_len=args.cycle_len,
        gadgets=gadgets,
        min_size=args.min_size,
        max_size=args.max_size,
        edge_density=args.density,
        force_non_ke=args.force_non_ke,
        max_n=args.max_n,
        max_m=args.max_m,
        seed=args.seed,
    )
    try:
        spec.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return spec


def cmd_search(args) -> int:
    if args.law not in LAWS:
        raise UsageError(f"unknown law {args.law!r}; known: {', '.join(LAWS)}")
    spec = _spec_from_args(args)
    report = search_counterexample(args.law, spec, args.trials, args.seed, workers=args.workers)
    out = report.to_dict(timing=not args.no_timing)
    if args.summary:
        out.pop("instances")
    _emit(out, args.pretty)
    return EXIT_VIOLATION if report.found else EXIT_OK


def ground_truth(generated) -> dict:
    """The certified structure of a generated instance, in report field names."""
    G, cycle, dec = generated
    truth = {
        "n": G.n,
        "m": G.m,
        "classes": {"almost_bipartite": True, "bipartite": False, "connected": True},
        "odd_cycle": list(cycle.vertices),
        "decomposition": {
            "parts": {str(y): _sorted_list(p) for y, p in dec.parts.items()},
            "n1": _sorted_list(dec.n1),
        },
    }
    if generated.spec.force_non_ke:
        truth["ke"] = False
    return truth


def cmd_generate(args) -> int:
    spec = _spec_from_args(args)
    make = gen_non_ke_almost_bipartite if spec.force_non_ke else gen_almost_bipartite
    generated = make(spec)
    out = Path(args.out)
    dump_graph(generated.graph, out, comment=f"seed={spec.seed}")
    sidecar = out.with_name(out.name + ".truth.json")
    payload = {"spec": spec.to_dict(), "truth": ground_truth(generated)}
    sidecar.write_text(json.dumps(payload, sort_keys=True, indent=1) + "\n")
    _emit({"graph": str(out), "truth": str(sidecar), "n": generated.graph.n, "m": generated.graph.m}, args.pretty)
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--pretty", action="store_true", help="human-readable table instead of JSON")
    p.add_argument("--no-timing", action="store_true", help="omit timing so output is byte-stable")


def _add_spec_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cycle-len", type=int, default=None, help="odd cycle length (random odd length if omitted)")
    p.add_argument("--gadgets", default=None, help=f"comma list from {','.join(GADGET_KINDS)}")
    p.add_argument("--min-size", type=int, default=1, help="smallest gadget (vertices, root included)")
    p.add_argument("--max-size", type=int, default=5, help="largest gadget")
    p.add_argument("--density", type=float, default=0.3, help="extra-edge probability in random gadgets")
    p.add_argument("--force-non-ke", action="store_true", help="only gadgets that make the graph non-KE")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-m", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kercore", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report invariants of an edge-list graph")
    p.add_argument("graph", type=Path)
    p.add_argument("--laws", default="all", help="comma-separated law ids, 'all', or 'none'")
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check laws on an edge-list graph")
    p.add_argument("graph", type=Path)
    p.add_argument("--laws", default="all", help="comma-separated law ids, 'all', or 'none'")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="seeded counterexample search for one law")
    p.add_argument("law", help=f"one of {', '.join(LAWS)}")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--summary", action="store_true", help="omit per-instance records")
    _add_spec_flags(p)
    _add_common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("generate", help="write a generated almost bipartite graph and its ground truth")
    p.add_argument("--out", required=True, type=Path)
    _add_spec_flags(p)
    _add_common(p)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (GraphFormatError, UsageError, OSError, ValueError) as exc:
        print(f"kercore: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardExceeded as exc:
        print(f"kercore: guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except GenerationError as exc:
        print(f"kercore: generation failed: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInconsistency as exc:
        print(f"kercore: internal inconsistency: {exc} {exc.details}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
