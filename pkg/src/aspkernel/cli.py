"""Command line front end: ``asp solve|check|query|ground|analyze|explain``.

Exit codes: 0 success (or query ``yes``), 1 ``no`` / not stable,
2 ``unknown``, 3 usage or parse error, 4 search node cap exceeded,
5 inconsistent answer set under ``--forbid-inconsistent``.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence, TextIO

from . import analysis
from .engine import (InconsistentAnswerSetError, ResourceLimitExceeded,
                     UniverseTooLarge, brute_force_answer_sets,
                     enumerate_answer_sets, is_stable, node_cap_from_env,
                     stable_closure, violated_constraints)
from .grounder import GroundProgram, ground
from .query import answer_query
from .syntax import ParseError, parse_literal, parse_literal_set, parse_program

EXIT_OK, EXIT_NO, EXIT_UNKNOWN, EXIT_USAGE, EXIT_CAP, EXIT_INCONSISTENT = range(6)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    command: str
    inputs: list[str]
    max_models: Optional[int] = None
    node_cap: int = 10**6
    output: str = "text"
    oracle: bool = False
    forbid_inconsistent: bool = False
    prune: bool = False
    model: Optional[str] = None
    literal: Optional[str] = None
    query: Optional[str] = None

    def __post_init__(self):
        if self.node_cap < 1:
            raise UsageError("--node-cap must be at least 1")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="asp", description="Answer set programming kernel")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("inputs", nargs="+", metavar="FILE")
        p.add_argument("--node-cap", type=int, default=None)
        return p

    solve = command("solve", "enumerate answer sets")
    solve.add_argument("--max-models", type=int, default=None)
    solve.add_argument("--json", action="store_true")
    solve.add_argument("--oracle", action="store_true",
                       help="use brute-force subset enumeration")
    solve.add_argument("--forbid-inconsistent", action="store_true")

    check = command("check", "test whether a set of literals is stable")
    check.add_argument("--model", required=True)

    # the query text is given last: asp query FILE... "?- drinks."
    sub_q = sub.add_parser("query", help="answer a ground query yes/no/unknown")
    sub_q.add_argument("args", nargs="+", metavar="FILE... QUERY")
    sub_q.add_argument("--node-cap", type=int, default=None)

    g = command("ground", "print the ground program")
    g.add_argument("--prune", action="store_true")

    command("analyze", "stratification, categoricity and supportedness")

    explain = command("explain", "print the rule justifying a literal")
    explain.add_argument("--model", required=True)
    explain.add_argument("--literal", required=True)
    return parser


def parse_args(argv: Sequence[str]) -> RunConfig:
    ns = build_parser().parse_args(argv)
    cap = ns.node_cap if ns.node_cap is not None else node_cap_from_env()
    if ns.command == "query":
        if len(ns.args) < 2:
            raise UsageError("query needs at least one FILE and a QUERY")
        return RunConfig("query", ns.args[:-1], node_cap=cap, query=ns.args[-1])
    return RunConfig(
        command=ns.command, inputs=ns.inputs, node_cap=cap,
        max_models=getattr(ns, "max_models", None),
        output="json" if getattr(ns, "json", False) else "text",
        oracle=getattr(ns, "oracle", False),
        forbid_inconsistent=getattr(ns, "forbid_inconsistent", False),
        prune=getattr(ns, "prune", False),
        model=getattr(ns, "model", None),
        literal=getattr(ns, "literal", None))


def _load(config: RunConfig, prune: bool = False) -> GroundProgram:
    chunks = []
    for path in config.inputs:
        try:
            with open(path, encoding="utf-8") as f:
                chunks.append(f.read())
        except OSError as e:
            raise UsageError(f"cannot read {path}: {e.strerror}") from e
    text = "\n".join(chunks)
    return ground(parse_program(text), prune_rules=prune)


def _model(g: GroundProgram, text: str) -> frozenset:
    s = parse_literal_set(text)
    universe = g.all_literals()
    unknown = sorted(str(l) for l in s if l not in universe)
    if unknown:
        raise UsageError(f"unknown literal(s) in model: {', '.join(unknown)}")
    return s


def _braces(lits) -> str:
    return "{" + ", ".join(sorted(map(str, lits))) + "}"


def cmd_solve(config: RunConfig, out: TextIO, err: TextIO) -> int:
    g = _load(config)
    if config.oracle:
        models = brute_force_answer_sets(g, config.max_models,
                                         forbid_inconsistent=config.forbid_inconsistent)
    else:
        models = enumerate_answer_sets(g, config.max_models, node_cap=config.node_cap,
                                       forbid_inconsistent=config.forbid_inconsistent)
    if config.output == "json":
        doc = {"answer_sets": [m.strings() for m in models],
               "consistent": [m.consistent for m in models],
               "count": len(models)}
        out.write(json.dumps(doc) + "\n")
    else:
        for m in models:
            out.write(f"{m}\n")
    noun = "answer set" if len(models) == 1 else "answer sets"
    err.write(f"{len(models)} {noun}\n")
    return EXIT_OK


def cmd_check(config: RunConfig, out: TextIO, err: TextIO) -> int:
    g = _load(config)
    s = _model(g, config.model)
    if is_stable(g, s):
        out.write("stable\n")
        return EXIT_OK
    out.write("not stable\n")
    mismatch = stable_closure(g, s) ^ s
    if mismatch:
        out.write(f"mismatch: {_braces(mismatch)}\n")
    for c in violated_constraints(g, s):
        out.write(f"violated constraint: {c}\n")
    return EXIT_NO


def cmd_query(config: RunConfig, out: TextIO, err: TextIO) -> int:
    g = _load(config)
    models = enumerate_answer_sets(g, node_cap=config.node_cap)
    if not models:
        err.write("warning: no answer sets\n")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        verdict = answer_query(g, config.query, answer_sets=models)
    out.write(f"{verdict}\n")
    return verdict.exit_code


def cmd_ground(config: RunConfig, out: TextIO, err: TextIO) -> int:
    g = _load(config, prune=config.prune)
    for line in sorted(str(r) for r in g.rules + g.constraints):
        out.write(line + "\n")
    return EXIT_OK


def cmd_analyze(config: RunConfig, out: TextIO, err: TextIO) -> int:
    g = _load(config)
    levels = analysis.stratify(g)
    if levels is None:
        out.write("stratified: no\n")
    else:
        out.write("stratified: yes\n")
        shown = ", ".join(f"{l}={n}" for l, n in sorted(levels.items(),
                                                         key=lambda kv: str(kv[0])))
        out.write(f"levels: {shown}\n")
    models = enumerate_answer_sets(g, node_cap=config.node_cap)
    out.write(f"categorical: {'yes' if len(models) == 1 else 'no'}\n")
    out.write(f"answer sets: {len(models)}\n")
    for m in models:
        problems = analysis.support_violations(g, m)
        out.write(f"{m}: {'supported' if not problems else 'NOT supported'}\n")
        for p in problems:
            out.write(f"  {p}\n")
    return EXIT_OK


def cmd_explain(config: RunConfig, out: TextIO, err: TextIO) -> int:
    g = _load(config)
    s = _model(g, config.model)
    l = parse_literal(config.literal)
    try:
        j = analysis.justify(g, s, l)
    except analysis.NotAnAnswerSetError as e:
        out.write(f"{e}\n")
        return EXIT_NO
    if j is None:
        out.write(f"{l} is not in the model\n")
        return EXIT_NO
    out.write(f"{j}\n")
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve, "check": cmd_check, "query": cmd_query,
    "ground": cmd_ground, "analyze": cmd_analyze, "explain": cmd_explain,
}


def run(config: RunConfig, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    try:
        return COMMANDS[config.command](config, out, err)
    except (UsageError, ParseError, UniverseTooLarge) as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE
    except ResourceLimitExceeded as e:
        err.write(f"error: {e}\n")
        return EXIT_CAP
    except InconsistentAnswerSetError as e:
        err.write(f"error: {e}\n")
        return EXIT_INCONSISTENT


def main(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout,
         err: TextIO = sys.stderr) -> int:
    try:
        config = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE
    return run(config, out, err)


if __name__ == "__main__":
    sys.exit(main())
