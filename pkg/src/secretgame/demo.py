"""Machine-vs-machine playback of one strategy, with per-step commentary.

Backs both ``demo`` on the command line and the walkthrough screen in the
web UI, which steps through the returned rounds one click at a time.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import core, solvers
from .core import GameError, Vector
from .enumeration import enumerate_candidates
from .wire import encode_int, encode_vector

NONADAPTIVE = "nonadaptive"
ADAPTIVE = "adaptive"
ONEKEY = "onekey"
STRATEGIES = (NONADAPTIVE, ADAPTIVE, ONEKEY)


@dataclass(frozen=True)
class DemoStep:
    question: Vector
    response: int
    note: str


@dataclass(frozen=True)
class DemoRun:
    strategy: str
    dimension: int
    secret: Vector
    steps: tuple[DemoStep, ...]
    construction: dict
    recovered: Vector
    match: bool


def _fmt(vec) -> str:
    return "(" + ", ".join(str(v) for v in vec) + ")"


def run_demo(
    strategy: str,
    dimension: int = 4,
    secret=None,
    seed: int | None = None,
    max_entry: int = 9,
) -> DemoRun:
    """Play one full game against a fresh session and report every round."""
    if strategy not in STRATEGIES:
        raise GameError(f"unknown strategy {strategy!r}")
    session = core.new_session(dimension, secret=secret, seed=seed, max_entry=max_entry)
    n = session.dimension
    steps: list[DemoStep] = []
    construction: dict = {}

    if strategy == NONADAPTIVE:
        questions = solvers.nonadaptive_questions(n)
        responses = []
        for i, q in enumerate(questions):
            r = core.ask(session, q)
            responses.append(r)
            steps.append(DemoStep(q, r, f"scan question {i + 1} of {n}: all ones, entry {i + 1} doubled"))
        recovered = solvers.nonadaptive_solve(responses)
        construction = {
            "system": f"response i = secret_i + sum(secret); invert via s_i = r_i - sum(r)/{n + 1}"
        }
    elif strategy == ADAPTIVE:
        q1 = tuple([1] * n)
        r1 = core.ask(session, q1)
        steps.append(DemoStep(q1, r1, "any first question works; all ones keeps the response small"))
        plan = solvers.adaptive_followup(q1, r1)
        r2 = core.ask(session, plan.followup)
        steps.append(
            DemoStep(
                plan.followup,
                r2,
                f"base B = {r1} + 1 = {plan.base}; powers of B read the secret off as base-B digits",
            )
        )
        recovered = solvers.adaptive_decode(plan, r2)
        construction = {"base": plan.base}
    else:  # ONEKEY
        question, basis = solvers.build_decoding_question(session.secret)
        r = core.ask(session, question)
        steps.append(
            DemoStep(
                question,
                r,
                f"coprime basis {_fmt(basis)} above the secret; "
                f"question entry i is the product of the other basis values",
            )
        )
        construction = {"basis": basis}
        # recover by enumeration: the construction guarantees a unique solution
        candidates = enumerate_candidates(question, r, limit=2)
        if candidates.count != 1:  # pragma: no cover - construction proof
            raise GameError("decoding question failed to decode the secret")
        recovered = candidates.candidates[0]

    return DemoRun(
        strategy=strategy,
        dimension=n,
        secret=session.secret,
        steps=tuple(steps),
        construction=construction,
        recovered=recovered,
        match=recovered == session.secret,
    )


def demo_to_doc(run: DemoRun) -> dict:
    """Wire form of a demo run (integers as decimal strings)."""
    construction = {}
    for key, value in run.construction.items():
        if isinstance(value, int):
            construction[key] = encode_int(value)
        elif isinstance(value, tuple):
            construction[key] = encode_vector(value)
        else:
            construction[key] = value
    return {
        "strategy": run.strategy,
        "n": encode_int(run.dimension),
        "secret": encode_vector(run.secret),
        "steps": [
            {
                "question": encode_vector(step.question),
                "response": encode_int(step.response),
                "note": step.note,
            }
            for step in run.steps
        ],
        "construction": construction,
        "recovered": encode_vector(run.recovered),
        "questions_used": encode_int(len(run.steps)),
        "match": run.match,
    }
