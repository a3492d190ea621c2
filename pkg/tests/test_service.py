import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from secretgame import core
from secretgame.service import SessionStore, create_app, session_from_doc, session_to_doc
from secretgame.wire import ValidationError
from wire_scenarios import SCENARIOS, run_scenario

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture()
def client():
    return TestClient(create_app())


def _collect_arrays(node, out):
    if isinstance(node, list):
        out.append(node)
        for item in node:
            _collect_arrays(item, out)
    elif isinstance(node, dict):
        for value in node.values():
            _collect_arrays(value, out)


class TestGoldenTraces:
    @pytest.mark.parametrize("name", sorted(SCENARIOS))
    def test_trace_matches_golden(self, name):
        client = TestClient(create_app())
        trace = run_scenario(client, SCENARIOS[name])
        golden = json.loads((GOLDEN_DIR / f"{name}.json").read_text())
        assert trace == golden

    def test_bigint_question_entry_survives_the_wire(self, client):
        client.post("/sessions", json={"n": "4", "secret": ["1234567", "89", "4567890", "321"]})
        client.post("/sessions/s-1/ask", json={"question": ["1", "1", "1", "1"]})
        hint = client.get("/sessions/s-1/hint?strategy=followup").json()
        base = 5802867 + 1
        assert hint["question"] == [str(base**i) for i in range(4)]
        assert len(hint["question"][3]) >= 20


class TestErrors:
    def test_unknown_session_is_404(self, client):
        response = client.get("/sessions/nope")
        assert response.status_code == 404
        assert response.json()["error_code"] == "SessionNotFound"

    def test_non_positive_secret_is_400(self, client):
        response = client.post("/sessions", json={"n": "4", "secret": ["0", "1", "1", "1"]})
        assert response.status_code == 400
        assert response.json()["error_code"] == "NonPositiveEntry"

    def test_ask_after_reveal_is_409(self, client):
        client.post("/sessions", json={"n": "4", "secret": ["1", "1", "1", "1"]})
        client.post("/sessions/s-1/reveal", json={})
        response = client.post("/sessions/s-1/ask", json={"question": ["1", "1", "1", "1"]})
        assert response.status_code == 409
        assert response.json()["error_code"] == "GameOver"

    def test_dimension_mismatch_is_400(self, client):
        client.post("/sessions", json={"n": "4", "secret": ["1", "1", "1", "1"]})
        response = client.post("/sessions/s-1/ask", json={"question": ["1", "1"]})
        assert response.status_code == 400
        assert response.json()["error_code"] == "DimensionMismatch"

    def test_garbage_integer_is_400(self, client):
        response = client.post("/sessions", json={"n": "4", "secret": ["1", "1.5", "1", "1"]})
        assert response.status_code == 400
        assert response.json()["error_code"] == "ValidationError"

    def test_missing_dimension_is_400(self, client):
        response = client.post("/sessions", json={"secret": ["1", "1", "1", "1"]})
        assert response.status_code == 400
        assert response.json()["error_code"] == "ValidationError"

    def test_oversized_universe_is_413(self, client):
        body = {"statement": "exists_forall", "n": "4", "q_max": "100", "s_max": "100"}
        response = client.post("/lab", json=body)
        assert response.status_code == 413
        assert response.json()["error_code"] == "UniverseTooLarge"

    def test_bad_hint_strategy_is_400(self, client):
        client.post("/sessions", json={"n": "4", "secret": ["1", "1", "1", "1"]})
        response = client.get("/sessions/s-1/hint?strategy=psychic")
        assert response.status_code == 400

    def test_followup_hint_needs_exactly_one_round(self, client):
        client.post("/sessions", json={"n": "4", "secret": ["1", "1", "1", "1"]})
        response = client.get("/sessions/s-1/hint?strategy=followup")
        assert response.status_code == 400
        assert response.json()["error_code"] == "HintUnavailable"
        client.post("/sessions/s-1/ask", json={"question": ["1", "1", "1", "1"]})
        client.post("/sessions/s-1/ask", json={"question": ["2", "1", "1", "1"]})
        response = client.get("/sessions/s-1/hint?strategy=followup")
        assert response.status_code == 400

    def test_exhausted_nonadaptive_hints(self, client):
        client.post("/sessions", json={"n": "1", "secret": ["3"]})
        client.post("/sessions/s-1/ask", json={"question": ["2"]})
        response = client.get("/sessions/s-1/hint?strategy=nonadaptive")
        assert response.status_code == 400
        assert response.json()["error_code"] == "HintUnavailable"

    def test_demo_requires_secret_or_seed(self, client):
        response = client.post("/demo", json={"strategy": "adaptive", "n": "4"})
        assert response.status_code == 400


class TestSecretHiding:
    SECRET = ["7", "3", "9", "2"]

    def _assert_scrubbed(self, payload):
        arrays = []
        _collect_arrays(payload, arrays)
        assert self.SECRET not in arrays
        assert "secret" not in payload

    def test_open_session_responses_never_contain_the_secret(self, client):
        created = client.post("/sessions", json={"n": "4", "secret": self.SECRET})
        self._assert_scrubbed(created.json())
        asked = client.post("/sessions/s-1/ask", json={"question": ["1", "1", "1", "1"]})
        self._assert_scrubbed(asked.json())
        wrong = client.post("/sessions/s-1/guess", json={"secret": ["1", "1", "1", "1"]})
        self._assert_scrubbed(wrong.json())
        hint = client.get("/sessions/s-1/hint?strategy=nonadaptive")
        self._assert_scrubbed(hint.json())
        view = client.get("/sessions/s-1")
        self._assert_scrubbed(view.json())

    def test_secret_appears_after_reveal(self, client):
        client.post("/sessions", json={"n": "4", "secret": self.SECRET})
        revealed = client.post("/sessions/s-1/reveal", json={})
        assert revealed.json()["secret"] == self.SECRET
        assert client.get("/sessions/s-1").json()["secret"] == self.SECRET


class TestBehaviour:
    def test_replaying_requests_reproduces_every_response(self):
        script = [
            ("POST", "/sessions", {"n": "4", "seed": "99", "max_entry": "9"}),
            ("POST", "/sessions/s-1/ask", {"question": ["1", "1", "1", "1"]}),
            ("POST", "/sessions/s-1/ask", {"question": ["2", "1", "1", "1"]}),
            ("POST", "/sessions", {"n": "2", "seed": "5", "max_entry": "4"}),
            ("POST", "/sessions/s-2/ask", {"question": ["3", "4"]}),
            ("GET", "/sessions/s-1", None),
            ("POST", "/sessions/s-1/reveal", {}),
        ]
        first = run_scenario(TestClient(create_app()), script)
        second = run_scenario(TestClient(create_app()), script)
        assert first == second

    def test_candidate_count_is_non_increasing(self, client):
        client.post("/sessions", json={"n": "4", "secret": ["3", "1", "4", "1"]})
        counts = []
        for question in (["1", "1", "1", "1"], ["2", "1", "1", "1"], ["1", "7", "2", "9"]):
            response = client.post("/sessions/s-1/ask", json={"question": question}).json()
            counts.append(int(response["candidate_count"]))
        assert counts == sorted(counts, reverse=True)
        assert counts[-1] >= 1

    def test_seeded_creation_matches_core(self, client):
        client.post("/sessions", json={"n": "4", "seed": "3082", "max_entry": "9"})
        revealed = client.post("/sessions/s-1/reveal", json={}).json()
        expected = core.new_session(4, seed=3082, max_entry=9).secret
        assert revealed["secret"] == [str(v) for v in expected]

    def test_sessions_are_independent(self, client):
        client.post("/sessions", json={"n": "4", "secret": ["1", "1", "1", "1"]})
        client.post("/sessions", json={"n": "2", "secret": ["5", "6"]})
        a = client.post("/sessions/s-1/ask", json={"question": ["1", "5", "10", "20"]}).json()
        b = client.post("/sessions/s-2/ask", json={"question": ["1", "1"]}).json()
        assert a["response"] == "36"
        assert b["response"] == "11"

    def test_accepts_plain_json_integers_on_input(self, client):
        response = client.post("/sessions", json={"n": 4, "secret": [1, 2, 3, 4]})
        assert response.status_code == 200
        assert response.json()["n"] == "4"

    def test_session_view_repeats_per_round_counts(self, client):
        client.post("/sessions", json={"n": "4", "secret": ["6", "1", "1", "1"]})
        asked = client.post("/sessions/s-1/ask", json={"question": ["1", "5", "10", "20"]}).json()
        view = client.get("/sessions/s-1").json()
        row = view["transcript"][0]
        assert row["candidate_count"] == asked["candidate_count"] == "2"
        assert row["truncated"] is False
        # a refresh reproduces the same screen state
        assert client.get("/sessions/s-1").json() == view


class TestSessionDocs:
    def test_round_trip(self):
        store = SessionStore()
        session = store.create(4, secret=(1, 2, 3, 4))
        core.ask(session, (1, 1, 1, 1))
        core.guess(session, (4, 3, 2, 1))
        doc = session_to_doc(session)
        restored = session_from_doc(doc)
        assert restored == session

    def test_inconsistent_transcript_rejected(self):
        store = SessionStore()
        session = store.create(4, secret=(1, 2, 3, 4))
        core.ask(session, (1, 1, 1, 1))
        doc = session_to_doc(session)
        doc["transcript"][0]["response"] = "11"
        with pytest.raises(ValidationError):
            session_from_doc(doc)
