"""Session-oriented HTTP JSON API for playing the game and running the lab.

Sessions live in memory behind a thread-safe store. Every integer in a
request or response body is a decimal string (see ``wire``); the secret
of an open session never appears in any response.
"""

from __future__ import annotations

import threading
from contextlib import contextmanager

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import core, solvers
from .core import GameError, GameSession
from .demo import STRATEGIES, demo_to_doc, run_demo
from .enumeration import DEFAULT_LIMIT, consistent_candidates
from .quantifier_lab import (
    STATEMENTS,
    BoundedUniverse,
    evaluate,
    report_to_doc,
)
from .wire import ValidationError, decode_int, decode_vector, encode_int, encode_vector

DEFAULT_MAX_ENTRY = 9
GRID_GUARD = 10**6


class SessionNotFound(GameError):
    error_code = "SessionNotFound"


class UniverseTooLarge(GameError):
    error_code = "UniverseTooLarge"


class HintUnavailable(GameError):
    error_code = "HintUnavailable"


_STATUS_CODES = {
    "SessionNotFound": 404,
    "GameOver": 409,
    "UniverseTooLarge": 413,
}


class SessionStore:
    """Thread-safe in-memory session map with monotonic ids.

    Ids are deterministic ("s-1", "s-2", ...) so that replaying a recorded
    request sequence against a fresh store reproduces every response
    bit-for-bit. Mutating requests hold the session's own lock.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._sessions: dict[str, GameSession] = {}
        self._session_locks: dict[str, threading.Lock] = {}
        self._counts: dict[str, list[tuple[int, bool]]] = {}
        self._counter = 0

    def create(self, dimension, secret=None, seed=None, max_entry=DEFAULT_MAX_ENTRY) -> GameSession:
        with self._lock:
            self._counter += 1
            session_id = f"s-{self._counter}"
            session = core.new_session(
                dimension, secret=secret, seed=seed, max_entry=max_entry, session_id=session_id
            )
            self._sessions[session_id] = session
            self._session_locks[session_id] = threading.Lock()
            return session

    def get(self, session_id: str) -> GameSession:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise SessionNotFound(f"no session with id {session_id!r}")
        return session

    @contextmanager
    def exclusive(self, session_id: str):
        session = self.get(session_id)
        with self._session_locks[session_id]:
            yield session

    def round_counts(self, session: GameSession) -> list[tuple[int, bool]]:
        """Surviving-candidate count after each round, cached per session.

        Counts are derived data, computed lazily so imported sessions get
        them too. Callers must hold the session's lock.
        """
        counts = self._counts.setdefault(session.id, [])
        while len(counts) < len(session.transcript):
            prefix = session.transcript[: len(counts) + 1]
            survivors = consistent_candidates(prefix, limit=DEFAULT_LIMIT)
            counts.append((survivors.count, survivors.truncated))
        return counts


def session_to_doc(session: GameSession) -> dict:
    """Full session state as a structured document, secret included.

    This is the persistence/export form, not a wire response; open-session
    responses are built by the endpoints and never carry the secret.
    """
    return {
        "id": session.id,
        "n": encode_int(session.dimension),
        "secret": encode_vector(session.secret),
        "status": session.status,
        "guesses_used": encode_int(session.guesses_used),
        "transcript": [
            {"question": encode_vector(q), "response": encode_int(r)}
            for q, r in session.transcript
        ],
    }


def session_from_doc(doc: dict) -> GameSession:
    """Rebuild a session from its export, checking transcript consistency."""
    secret = decode_vector(doc["secret"], "secret")
    n = decode_int(doc["n"], "n", minimum=1)
    status = doc["status"]
    if status not in (core.OPEN, core.WON, core.REVEALED):
        raise ValidationError(f"unknown status {status!r}")
    transcript = []
    for i, row in enumerate(doc.get("transcript", [])):
        q = decode_vector(row["question"], f"transcript[{i}].question")
        r = decode_int(row["response"], f"transcript[{i}].response")
        if core.scalar_product(q, secret) != r:
            raise ValidationError(f"transcript[{i}] response does not match the secret")
        transcript.append((q, r))
    session = GameSession(
        id=doc["id"],
        dimension=n,
        secret=core.validate_vector(secret, n, role="secret"),
        transcript=transcript,
        status=status,
        guesses_used=decode_int(doc.get("guesses_used", "0"), "guesses_used", minimum=0),
    )
    return session


def _session_summary(session: GameSession) -> dict:
    return {"id": session.id, "n": encode_int(session.dimension), "status": session.status}


def _session_view(session: GameSession, round_counts) -> dict:
    view = {
        "n": encode_int(session.dimension),
        "status": session.status,
        "guesses_used": encode_int(session.guesses_used),
        "transcript": [
            {
                "question": encode_vector(q),
                "response": encode_int(r),
                "candidate_count": encode_int(count),
                "truncated": truncated,
            }
            for (q, r), (count, truncated) in zip(session.transcript, round_counts)
        ],
    }
    if session.status != core.OPEN:
        view["secret"] = encode_vector(session.secret)
    return view


def _require_object(payload) -> dict:
    if not isinstance(payload, dict):
        raise ValidationError("request body must be a JSON object")
    return payload


def create_app(store: SessionStore | None = None, static_dir: str | None = None) -> FastAPI:
    """Build the API application around the given (or a fresh) store."""
    store = store if store is not None else SessionStore()
    app = FastAPI(title="secretgame", docs_url=None, redoc_url=None)
    app.state.store = store

    # the UI may be served from any static host, so allow cross-origin use
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(GameError)
    async def on_game_error(_request: Request, exc: GameError):
        status = _STATUS_CODES.get(exc.error_code, 400)
        return JSONResponse(
            status_code=status,
            content={"error_code": exc.error_code, "message": str(exc)},
        )

    @app.exception_handler(RequestValidationError)
    async def on_malformed(_request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"error_code": "ValidationError", "message": "malformed request body"},
        )

    @app.post("/sessions")
    async def create_session(request: Request):
        body = _require_object(await request.json())
        n = decode_int(body.get("n"), "n", minimum=1)
        secret = body.get("secret")
        if secret is not None:
            secret = decode_vector(secret, "secret")
        seed = body.get("seed")
        if seed is not None:
            seed = decode_int(seed, "seed", minimum=0)
        max_entry = decode_int(body.get("max_entry", DEFAULT_MAX_ENTRY), "max_entry", minimum=1)
        session = store.create(n, secret=secret, seed=seed, max_entry=max_entry)
        return _session_summary(session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        with store.exclusive(session_id) as session:
            return _session_view(session, store.round_counts(session))

    @app.post("/sessions/{session_id}/ask")
    async def ask_question(session_id: str, request: Request):
        body = _require_object(await request.json())
        question = decode_vector(body.get("question"), "question")
        with store.exclusive(session_id) as session:
            response = core.ask(session, question)
            count, truncated = store.round_counts(session)[-1]
        return {
            "response": encode_int(response),
            "candidate_count": encode_int(count),
            "truncated": truncated,
        }

    @app.post("/sessions/{session_id}/guess")
    async def submit_guess(session_id: str, request: Request):
        body = _require_object(await request.json())
        secret = decode_vector(body.get("secret"), "secret")
        with store.exclusive(session_id) as session:
            correct = core.guess(session, secret)
            return {
                "correct": correct,
                "status": session.status,
                "guesses_used": encode_int(session.guesses_used),
            }

    @app.post("/sessions/{session_id}/reveal")
    async def reveal_secret(session_id: str):
        with store.exclusive(session_id) as session:
            secret = core.reveal(session)
            return {"secret": encode_vector(secret), "status": session.status}

    @app.get("/sessions/{session_id}/hint")
    def get_hint(session_id: str, strategy: str = ""):
        if strategy not in ("nonadaptive", "followup"):
            raise ValidationError(f"strategy must be nonadaptive or followup, got {strategy!r}")
        with store.exclusive(session_id) as session:
            if session.status != core.OPEN:
                raise HintUnavailable(f"session {session_id} is {session.status}")
            if strategy == "nonadaptive":
                asked = {q for q, _ in session.transcript}
                for q in solvers.nonadaptive_questions(session.dimension):
                    if q not in asked:
                        return {"question": encode_vector(q)}
                raise HintUnavailable("all scan questions have been asked")
            if len(session.transcript) != 1:
                raise HintUnavailable("follow-up hint needs exactly one asked question")
            q1, r1 = session.transcript[0]
            plan = solvers.adaptive_followup(q1, r1)
            return {"question": encode_vector(plan.followup)}

    @app.post("/lab")
    async def run_lab(request: Request):
        body = _require_object(await request.json())
        statement = body.get("statement")
        if statement not in STATEMENTS:
            raise ValidationError(f"statement must be one of {STATEMENTS}, got {statement!r}")
        n = decode_int(body.get("n"), "n", minimum=1)
        s_max = decode_int(body.get("s_max"), "s_max", minimum=1)
        q_max = decode_int(body.get("q_max", 1), "q_max", minimum=1)
        for name, bound in (("q_max", q_max), ("s_max", s_max)):
            if bound**n > GRID_GUARD:
                raise UniverseTooLarge(
                    f"{name}^n = {bound}^{n} exceeds the {GRID_GUARD} element guard"
                )
        report = evaluate(statement, BoundedUniverse(n=n, q_max=q_max, s_max=s_max))
        return report_to_doc(report)

    @app.post("/demo")
    async def run_demo_endpoint(request: Request):
        body = _require_object(await request.json())
        strategy = body.get("strategy")
        if strategy not in STRATEGIES:
            raise ValidationError(f"strategy must be one of {STRATEGIES}, got {strategy!r}")
        n = decode_int(body.get("n"), "n", minimum=1)
        secret = body.get("secret")
        if secret is not None:
            secret = decode_vector(secret, "secret")
        seed = body.get("seed")
        if seed is not None:
            seed = decode_int(seed, "seed", minimum=0)
        if secret is None and seed is None:
            raise ValidationError("demo needs a secret or a seed")
        max_entry = decode_int(body.get("max_entry", DEFAULT_MAX_ENTRY), "max_entry", minimum=1)
        run = run_demo(strategy, dimension=n, secret=secret, seed=seed, max_entry=max_entry)
        return demo_to_doc(run)

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app


def serve(host: str, port: int, static_dir: str | None = None) -> None:
    """Run the API under uvicorn until interrupted."""
    import uvicorn

    uvicorn.run(create_app(static_dir=static_dir), host=host, port=port, log_level="info")
