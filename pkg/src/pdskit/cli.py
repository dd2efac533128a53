"""pds-kit command line: verify, paley, sieve, search, atlas.

Exit status is 0 for valid/feasible/found, 1 for invalid/infeasible/none
found, and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import feasibility
from .gf import paley_pds
from .groups import format_element, format_group, parse_group
from .pds import SCHEMA, PdsParams, load_candidates, paley_params, verify_pds
from .search import BRUTE, ORBIT, SearchProblem, search


class UsageError(Exception):
    pass


def _emit(out, text: str):
    out.write(text + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def cmd_verify(args, out) -> int:
    text = Path(args.path).read_text(encoding="utf-8") if args.path else sys.stdin.read()
    try:
        candidates = load_candidates(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot parse candidate set: {exc}") from exc
    ok = True
    for D in candidates:
        report = verify_pds(D)
        ok &= report.is_pds
        _emit(out, _dump(report.to_dict()) if args.json else report.summary())
    return 0 if ok else 1


def cmd_paley(args, out) -> int:
    try:
        D = paley_pds(args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(out, D.to_json())
    return 0


def cmd_sieve(args, out) -> int:
    verdict = feasibility.sieve(args.v)
    _emit(out, verdict.to_json() if args.json else str(verdict))
    return 1 if verdict.kind == feasibility.INFEASIBLE else 0


def _parse_params(text: str) -> PdsParams:
    try:
        v, k, lam, mu = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--params expects v,k,lambda,mu, got {text!r}") from exc
    return PdsParams(v, k, lam, mu)


def cmd_search(args, out) -> int:
    try:
        G = parse_group(args.group)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.paley == (args.params is not None):
        raise UsageError("give exactly one of --paley or --params")
    try:
        target = paley_params(G.v) if args.paley else _parse_params(args.params)
        problem = SearchProblem(G, target, mode=args.mode, limit=args.limit)
        result = search(problem)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    if args.json:
        _emit(out, _dump({
            "schema": SCHEMA,
            "group": format_group(G),
            "target": list(target.as_tuple()),
            "mode": args.mode,
            "nodes_explored": result.nodes_explored,
            "complete": result.complete,
            "solutions": [D.to_dict() for D in result.solutions],
        }))
    else:
        state = "complete" if result.complete else "truncated"
        _emit(out, f"{len(result.solutions)} solution(s) for {target} in {format_group(G)} "
                   f"({args.mode} mode, {result.nodes_explored} nodes, {state})")
        for D in result.solutions:
            _emit(out, "{" + ", ".join(format_element(g) for g in D.sorted_members()) + "}")
    return 0 if result.solutions else 1


def cmd_atlas(args, out) -> int:
    for verdict in feasibility.atlas(args.max):
        if args.json:
            _emit(out, verdict.to_json())
        else:
            _emit(out, f"{verdict.v}\t{verdict.kind}\t{verdict.rule or '-'}\t{verdict.detail}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pds-kit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify a CandidateSet JSON (file or stdin)")
    p.add_argument("path", nargs="?")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("paley", help="emit the nonzero squares of F_q as CandidateSet JSON")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_paley)

    p = sub.add_parser("sieve", help="existence verdict for Paley-type PDSs of order v")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sieve)

    p = sub.add_parser("search", help="exhaustive PDS search in a group")
    p.add_argument("--group", required=True)
    p.add_argument("--paley", action="store_true", help="target Paley parameters for |G|")
    p.add_argument("--params", help="explicit target v,k,lambda,mu")
    p.add_argument("--mode", choices=[ORBIT, BRUTE], default=ORBIT)
    p.add_argument("--limit", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("atlas", help="sieve verdicts for every v = 1 (mod 4) up to --max")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_atlas)
    return parser


def run(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"pds-kit {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    sys.exit(run())


if __name__ == "__main__":
    main()
