"""Top-level acceptance suite: one test per criterion.

Every theorem the library encodes is checked here at desk scale, either
exhaustively over a small grid or against independent oracles, with a
wall-clock budget per criterion. A summary line per criterion is printed
at the end of the run (see conftest).
"""

import json
import random
import time
from itertools import product
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from helpers import brute_force_candidates, dot, exact_determinant
from secretgame.core import new_session, scalar_product
from secretgame.enumeration import decodes, enumerate_candidates
from secretgame.quantifier_lab import (
    BoundedUniverse,
    eval_exists_forall,
    eval_forall_exists,
)
from secretgame.service import create_app
from secretgame.solvers import (
    adaptive_followup,
    adaptive_solve,
    build_decoding_question,
    collision_witness,
    nonadaptive_questions,
    nonadaptive_solve,
)
from wire_scenarios import SCENARIOS, run_scenario

pytestmark = pytest.mark.acceptance

GOLDEN_DIR = Path(__file__).parent / "golden"


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds
        self.start = time.monotonic()

    def check(self):
        elapsed = time.monotonic() - self.start
        assert elapsed < self.seconds, f"took {elapsed:.2f}s, budget {self.seconds}s"


def test_dollar_bill_fixture():
    budget = Budget(1.0)
    question = (1, 5, 10, 20)
    for response, expected in zip(range(36, 41), [(k, 1, 1, 1) for k in range(1, 6)]):
        found = enumerate_candidates(question, response)
        assert found.candidates == (expected,), f"response {response}"
        assert brute_force_candidates(question, response) == [expected]
    ambiguous = enumerate_candidates(question, 41)
    assert set(ambiguous.candidates) == {(1, 2, 1, 1), (6, 1, 1, 1)}
    assert brute_force_candidates(question, 41) == [(1, 2, 1, 1), (6, 1, 1, 1)]
    budget.check()


def test_nonadaptive_round_trip():
    budget = Budget(1.0)
    questions = nonadaptive_questions(4)

    def closed_form(w, x, y, z):
        # the published inversion of the 4-question system
        assert (4 * w - x - y - z) % 5 == 0
        return (
            (4 * w - x - y - z) // 5,
            (4 * x - w - y - z) // 5,
            (4 * y - w - x - z) // 5,
            (4 * z - w - x - y) // 5,
        )

    cases = list(product(range(1, 4), repeat=4))
    assert len(cases) == 81
    rng = random.Random(20260809)
    cases += [tuple(rng.randint(1, 10**6) for _ in range(4)) for _ in range(100)]
    for secret in cases:
        responses = tuple(dot(q, secret) for q in questions)
        solved = nonadaptive_solve(responses)
        assert solved == secret
        assert closed_form(*responses) == secret
    budget.check()


def test_unbreakable_secret_exhaustive():
    budget = Budget(30.0)
    checked = 0
    for n, s_max in ((4, 4), (5, 3)):
        for secret in product(range(1, s_max + 1), repeat=n):
            question, basis = build_decoding_question(secret)
            assert decodes(question, secret), (secret, question)
            assert all(a > s for a, s in zip(basis, secret))
            checked += 1
    assert checked == 4**4 + 3**5
    budget.check()


def test_master_key_refutation_exhaustive():
    budget = Budget(1.0)
    checked = 0
    for n in (4, 2):
        for question in product(range(1, 5), repeat=n):
            witness = collision_witness(question)
            assert witness.s != witness.t
            assert scalar_product(question, witness.s) == scalar_product(question, witness.t)
            checked += 1
    assert checked == 4**4 + 4**2
    budget.check()


def test_adaptive_two_question_theorem():
    budget = Budget(30.0)
    grid = list(product(range(1, 4), repeat=4))
    for first_question in grid:
        for secret in grid:
            session = new_session(4, secret=secret)
            assert adaptive_solve(session, first_question) == secret
            assert len(session.transcript) == 2
    rng = random.Random(4261)
    for _ in range(100):
        secret = tuple(rng.randint(1, 10**4) for _ in range(4))
        first_question = tuple(rng.randint(1, 10**4) for _ in range(4))
        session = new_session(4, secret=secret)
        assert adaptive_solve(session, first_question) == secret
        assert len(session.transcript) == 2
        # the follow-up question and its response must outgrow 64 bits
        assert max(session.transcript[1][0]) > 2**64
        assert session.transcript[1][1] > 2**64
    budget.check()


def test_quantifier_lab():
    budget = Budget(60.0)
    refuted = eval_exists_forall(BoundedUniverse(n=4, q_max=3, s_max=4))
    assert refuted.verdict is False
    assert len(refuted.evidence) == 81
    for entry in refuted.evidence:
        assert entry.inner is not None
        assert not decodes(entry.outer, entry.inner)

    affirmed = eval_forall_exists(BoundedUniverse(n=4, q_max=1, s_max=2))
    assert affirmed.verdict is True
    assert len(affirmed.evidence) == 16
    for entry in affirmed.evidence:
        assert decodes(entry.inner, entry.outer)

    degenerate = eval_exists_forall(BoundedUniverse(n=4, q_max=3, s_max=1))
    assert degenerate.verdict is True
    assert "artifact" in degenerate.unbounded_note

    line = eval_exists_forall(BoundedUniverse(n=1, q_max=2, s_max=5))
    assert line.verdict is True
    assert "dimension 1" in line.unbounded_note
    budget.check()


def test_followup_injectivity():
    rng = random.Random(1789)
    seen = 0
    while seen < 500:
        n = rng.randint(2, 4)
        question = tuple(rng.randint(1, 8) for _ in range(n))
        response = sum(question) + rng.randint(1, 40)
        candidates = enumerate_candidates(question, response).candidates
        if len(candidates) < 2:
            continue
        plan = adaptive_followup(question, response)
        followup_responses = {dot(plan.followup, t) for t in candidates}
        assert len(followup_responses) == len(candidates)
        seen += 1


def test_determinant_check():
    for n in range(1, 7):
        matrix = nonadaptive_questions(n)
        assert exact_determinant(matrix) == n + 1


def test_wire_conformance():
    for name in sorted(SCENARIOS):
        client = TestClient(create_app())
        trace = run_scenario(client, SCENARIOS[name])
        golden = json.loads((GOLDEN_DIR / f"{name}.json").read_text())
        assert trace == golden, f"scenario {name} drifted from its golden file"
    # the big follow-up entry crosses the wire as a 21-digit decimal string
    golden = json.loads((GOLDEN_DIR / "hint_followup_bigint.json").read_text())
    hint_question = golden[2]["body"]["question"]
    assert hint_question[3] == str(5802868**3)
    assert len(hint_question[3]) >= 20

    # scrub check: no open-session response may carry the secret
    client = TestClient(create_app())
    secret = ["8", "6", "7", "5"]
    client.post("/sessions", json={"n": "4", "secret": secret})
    responses = [
        client.post("/sessions/s-1/ask", json={"question": ["1", "1", "1", "1"]}),
        client.post("/sessions/s-1/guess", json={"secret": ["1", "1", "1", "1"]}),
        client.get("/sessions/s-1"),
        client.get("/sessions/s-1/hint?strategy=nonadaptive"),
    ]
    for response in responses:
        payload = response.json()
        arrays = _arrays_in(payload)
        assert secret not in arrays
        assert "secret" not in payload


def _arrays_in(node, out=None):
    if out is None:
        out = []
    if isinstance(node, list):
        out.append(node)
        for item in node:
            _arrays_in(item, out)
    elif isinstance(node, dict):
        for value in node.values():
            _arrays_in(value, out)
    return out
