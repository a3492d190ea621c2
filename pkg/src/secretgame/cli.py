"""Command-line entry point: play, demo, buildkey, collide, lab, serve.

Exit codes: 0 success, 1 usage error, 2 internal invariant violation
(a strategy failing to recover a secret, which must never happen).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import core, solvers
from .core import GameError
from .demo import STRATEGIES, demo_to_doc, run_demo
from .enumeration import DEFAULT_LIMIT, consistent_candidates
from .quantifier_lab import (
    EXISTS_FORALL,
    STATEMENTS,
    BoundedUniverse,
    evaluate,
    render_report,
)
from .wire import encode_vector

USAGE_ERROR = 1
INVARIANT_ERROR = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad flags; the contract here is 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _fmt(vec) -> str:
    return "(" + ", ".join(str(v) for v in vec) + ")"


def _candidate_phrase(count: int, truncated: bool) -> str:
    if truncated:
        return f">= {count} candidates remain"
    if count == 1:
        return "1 candidate remains"
    return f"{count} candidates remain"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="secretgame", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_seed=True):
        p.add_argument("-n", "--dimension", type=int, default=4)
        if with_seed:
            p.add_argument("--seed", type=int, default=None)
            p.add_argument("--max-entry", type=int, default=9)

    p_play = sub.add_parser("play", help="play against a hidden secret")
    add_common(p_play)
    p_play.add_argument("--no-count", action="store_true", help="skip candidate counting")

    p_demo = sub.add_parser("demo", help="machine plays both sides")
    p_demo.add_argument("strategy", choices=STRATEGIES)
    add_common(p_demo)
    p_demo.add_argument("--secret", type=int, nargs="+", default=None)
    p_demo.add_argument("--format", choices=("text", "structured"), default="text")

    p_key = sub.add_parser("buildkey", help="decoding question for a secret")
    p_key.add_argument("secret", type=int, nargs="+")
    p_key.add_argument("--format", choices=("text", "structured"), default="text")

    p_col = sub.add_parser("collide", help="two secrets a question cannot separate")
    p_col.add_argument("question", type=int, nargs="+")
    p_col.add_argument("--format", choices=("text", "structured"), default="text")

    p_lab = sub.add_parser("lab", help="evaluate a quantifier statement on a grid")
    p_lab.add_argument("statement", choices=STATEMENTS)
    p_lab.add_argument("-n", "--dimension", type=int, default=4)
    p_lab.add_argument("--qmax", type=int, default=1)
    p_lab.add_argument("--smax", type=int, required=True)
    p_lab.add_argument("--max-rows", type=int, default=10)
    p_lab.add_argument("--format", choices=("text", "structured"), default="text")

    p_serve = sub.add_parser("serve", help="run the HTTP API")
    p_serve.add_argument("--host", default=os.environ.get("HOST", "127.0.0.1"))
    p_serve.add_argument("--port", type=int, default=int(os.environ.get("PORT", "8000")))
    p_serve.add_argument("--static", default=None, help="directory of UI assets to serve")

    return parser


def cmd_play(args) -> int:
    session = core.new_session(args.dimension, seed=args.seed, max_entry=args.max_entry)
    n = session.dimension
    print(f"I picked a secret sequence of {n} positive integers (entries up to {args.max_entry}).")
    print(f"Commands: ask q1 .. q{n} | guess s1 .. s{n} | hint [followup] | reveal | quit")
    while session.status == core.OPEN:
        try:
            line = input("> ").strip()
        except EOFError:
            print()
            return 0
        if not line:
            continue
        tokens = line.split()
        command, rest = tokens[0].lower(), tokens[1:]
        try:
            if command == "quit":
                return 0
            if command == "reveal":
                secret = core.reveal(session)
                print(f"The secret was {_fmt(secret)}.")
                return 0
            if command == "hint":
                _print_hint(session, rest)
                continue
            if command in ("ask", "guess"):
                try:
                    entries = [int(t) for t in rest]
                except ValueError:
                    print(f"{command} needs {n} positive integers")
                    continue
                if command == "ask":
                    response = core.ask(session, entries)
                    if args.no_count:
                        print(response)
                    else:
                        cs = consistent_candidates(session.transcript, limit=DEFAULT_LIMIT)
                        print(f"{response} ({_candidate_phrase(cs.count, cs.truncated)})")
                else:
                    if core.guess(session, entries):
                        print(
                            f"Correct! The secret was {_fmt(session.secret)} "
                            f"({len(session.transcript)} questions, "
                            f"{session.guesses_used} wrong guesses)."
                        )
                        return 0
                    print("Not it. Keep asking.")
                continue
            print(f"unknown command {command!r} (ask / guess / hint / reveal / quit)")
        except GameError as exc:
            print(str(exc))
    return 0


def _print_hint(session, rest) -> None:
    if rest and rest[0] == "followup":
        if len(session.transcript) != 1:
            print("follow-up hint needs exactly one asked question")
            return
        q1, r1 = session.transcript[0]
        plan = solvers.adaptive_followup(q1, r1)
        print(f"try: ask {' '.join(str(v) for v in plan.followup)}")
        return
    asked = {q for q, _ in session.transcript}
    for q in solvers.nonadaptive_questions(session.dimension):
        if q not in asked:
            print(f"try: ask {' '.join(str(v) for v in q)}")
            return
    print("all scan questions asked; solve the system or try hint followup")


def cmd_demo(args) -> int:
    if args.secret is None and args.seed is None:
        print("demo needs --secret or --seed", file=sys.stderr)
        return USAGE_ERROR
    run = run_demo(
        args.strategy,
        dimension=args.dimension,
        secret=args.secret,
        seed=args.seed,
        max_entry=args.max_entry,
    )
    if args.format == "structured":
        print(json.dumps(demo_to_doc(run), indent=2))
    else:
        print(f"strategy: {run.strategy}")
        print(f"secret:   {_fmt(run.secret)}")
        for i, step in enumerate(run.steps):
            print(f"Q{i + 1}: {_fmt(step.question)} -> {step.response}")
            print(f"    {step.note}")
        verdict = "OK" if run.match else "MISMATCH"
        print(f"recovered: {_fmt(run.recovered)}  [{len(run.steps)} questions]  {verdict}")
    if not run.match:
        return INVARIANT_ERROR
    return 0


def cmd_buildkey(args) -> int:
    question, basis = solvers.build_decoding_question(args.secret)
    if args.format == "structured":
        print(json.dumps({"question": encode_vector(question), "basis": encode_vector(basis)}))
    else:
        print(f"q = {_fmt(question)}, basis {_fmt(basis)}")
    return 0


def cmd_collide(args) -> int:
    witness = solvers.collision_witness(args.question)
    response = core.scalar_product(args.question, witness.s)
    if args.format == "structured":
        print(
            json.dumps(
                {
                    "s": encode_vector(witness.s),
                    "t": encode_vector(witness.t),
                    "response": str(response),
                }
            )
        )
    else:
        print(f"s={_fmt(witness.s)} t={_fmt(witness.t)} response={response}")
    return 0


def cmd_lab(args) -> int:
    universe = BoundedUniverse(n=args.dimension, q_max=args.qmax, s_max=args.smax)
    report = evaluate(args.statement, universe)
    if args.format == "structured":
        print(json.dumps(render_report(report, "structured"), indent=2))
    else:
        print(render_report(report, "text", max_rows=args.max_rows))
    return 0


def cmd_serve(args) -> int:
    from .service import serve

    serve(args.host, args.port, static_dir=args.static)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    handlers = {
        "play": cmd_play,
        "demo": cmd_demo,
        "buildkey": cmd_buildkey,
        "collide": cmd_collide,
        "lab": cmd_lab,
        "serve": cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except GameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
