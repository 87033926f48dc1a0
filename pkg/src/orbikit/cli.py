"""Command-line entry point.

Exit codes: 0 for success or a passing verdict, 1 for a failing verdict,
2 for bad input (argparse usage errors included).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .covergraph import (
    Word,
    abelianize,
    covering_graph,
    get_case,
    graph_member,
    lift_check,
    sheets_and_rank,
    to_dot,
    y_generators,
)
from .covergraph.cases import congruence_member, h_congruence_member
from .errors import OrbikitError
from .orbifold import out_of_scope_report
from .portrait import load_portrait
from .quotient_sim import oracle_table_json, oracle_table_text, oracle_vs_bound
from .toruslift import IntMatrix2, TorusLift, certify_rate

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _emit(args, payload: dict, text: str) -> None:
    print(dumps(payload) if args.format == "json" else text)


def cmd_classify(args) -> int:
    report = out_of_scope_report(load_portrait(args.input))
    _emit(args, report.to_json(), report.to_text())
    if args.expect_rate and report.verdict == "EXCEPTIONAL":
        return EXIT_FAIL
    return EXIT_OK


def cmd_subgroup(args) -> int:
    case = get_case(args.case)
    word = Word.parse(args.word)
    which = args.which.upper()
    if which == "G":
        gens = case.x_generators
        vec = abelianize(word, gens)
        by_congruence = congruence_member(case, vec)
        residue = case.congruence_text(vec)
    else:
        gens = tuple(y_generators(case, args.n_extra))
        vec = abelianize(word, gens)
        by_congruence = h_congruence_member(case, vec)
        residue = case.congruence_text(vec[: case.rank])
    by_graph = graph_member(covering_graph(case, which, args.n_extra), word)
    if by_graph != by_congruence:
        raise OrbikitError(f"congruence and folded graph disagree on {word} (internal error)")
    verdict = "member" if by_congruence else "not a member"
    payload = {
        "case": case.tag,
        "which": which,
        "word": str(word),
        "abelianization": list(vec),
        "member": by_congruence,
        "congruence": residue,
    }
    _emit(args, payload, f"{verdict} ({residue})")
    return EXIT_OK


def _parse_pairs(text: str | None, what: str) -> dict[str, str]:
    out = {}
    if not text:
        return out
    for item in text.split(","):
        key, sep, value = item.partition("=")
        if not sep or not key.strip() or not value.strip():
            raise OrbikitError(f"bad {what} entry {item!r}; expected name=value")
        out[key.strip()] = value.strip()
    return out


def cmd_lift_check(args) -> int:
    case = get_case(args.case)
    assignment = {
        y: abelianize(Word.parse(w), case.x_generators)
        for y, w in _parse_pairs(args.map, "--map").items()
    }
    punctures = _parse_pairs(args.puncture, "--puncture")
    ok = lift_check(case, assignment, punctures)
    payload = {
        "case": case.tag,
        "map": {y: list(v) for y, v in assignment.items()},
        "punctures": punctures,
        "lifts": ok,
    }
    text = "lift exists: f_*(H) lies in G" if ok else "no lift: f_*(H) leaves G"
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAIL


def _lift_from_args(args) -> TorusLift:
    return TorusLift(IntMatrix2.parse(args.matrix), args.case, getattr(args, "degree", None))


def cmd_certify(args) -> int:
    cert = certify_rate(_lift_from_args(args), N=args.n, eps=args.eps)
    _emit(args, cert.to_json(), cert.to_text())
    return EXIT_OK if cert.passed else EXIT_FAIL


def cmd_simulate(args) -> int:
    lift = _lift_from_args(args)
    rows = oracle_vs_bound(lift, args.n)
    _emit(args, oracle_table_json(lift, rows), oracle_table_text(lift, rows))
    return EXIT_OK if all(r.dominates for r in rows) else EXIT_FAIL


def cmd_graph(args) -> int:
    case = get_case(args.case)
    graph = covering_graph(case, args.which, args.n_extra)
    sheets, rank = sheets_and_rank(graph)
    dot = to_dot(graph, name=f"{case.tag}_{args.which.upper()}")
    if args.dot == "-":
        sys.stdout.write(dot)
        return EXIT_OK
    if args.dot:
        Path(args.dot).write_text(dot)
    payload = {
        "case": case.tag,
        "which": args.which.upper(),
        "n_extra": args.n_extra,
        "vertices": graph.n_vertices,
        "edges": len(graph.edges),
        "sheets": sheets,
        "rank": rank,
        "dot": args.dot,
    }
    text = f"case {case.label} {args.which.upper()}: {sheets} sheets, rank {rank}"
    if args.dot:
        text += f"; DOT written to {args.dot}"
    _emit(args, payload, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="orbikit", description="Thurston-map orbifold toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[fmt], help="classify a critical portrait")
    p.add_argument("--input", required=True, help="portrait JSON file")
    p.add_argument("--expect-rate", action="store_true", help="exit 1 on an exceptional portrait")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("subgroup", parents=[fmt], help="membership of a word in G (or H)")
    p.add_argument("--case", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--which", choices=("G", "H", "g", "h"), default="G")
    p.add_argument("--n-extra", type=int, default=0, help="extra punctures of Y (H only)")
    p.set_defaults(func=cmd_subgroup)

    p = sub.add_parser("lift-check", parents=[fmt], help="lifting criterion for a generator assignment")
    p.add_argument("--case", required=True)
    p.add_argument("--map", required=True, help="Y-generator images as words, e.g. a=b,b=a")
    p.add_argument("--puncture", default="", help="puncture targets, e.g. g1=c,g2=a")
    p.set_defaults(func=cmd_lift_check)

    for name, helptext, default_n in (
        ("certify", "exact growth-rate certificate", 20),
        ("simulate", "brute-force quotient fixed points vs the bound", 8),
    ):
        p = sub.add_parser(name, parents=[fmt], help=helptext)
        p.add_argument("--case", required=True)
        p.add_argument("--matrix", required=True, help="row-major a,b,c,d")
        p.add_argument("--degree", type=int, default=None)
        p.add_argument("--n", type=int, default=default_n)
        if name == "certify":
            p.add_argument("--eps", type=float, default=0.05)
            p.set_defaults(func=cmd_certify)
        else:
            p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("graph", parents=[fmt], help="folded covering graph, optionally as DOT")
    p.add_argument("--case", required=True)
    p.add_argument("--which", choices=("G", "H", "g", "h"), default="G")
    p.add_argument("--n-extra", type=int, default=0)
    p.add_argument("--dot", default=None, help="output path, or - for stdout")
    p.set_defaults(func=cmd_graph)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (OrbikitError, ValueError, OSError, json.JSONDecodeError) as exc:
        name = getattr(exc, "n", None)
        suffix = f" (n={name})" if name is not None else ""
        print(f"orbikit {args.command}: {type(exc).__name__}: {exc}{suffix}", file=sys.stderr)
        return EXIT_INPUT


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
