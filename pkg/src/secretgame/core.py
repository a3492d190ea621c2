"""Domain types, the scalar-product oracle, and game-session state.

A secret and a question are both sequences of n positive integers. The
oracle's only output is the scalar product q . s, computed exactly with
unbounded integers: the adaptive strategy produces question entries of
magnitude (r+1)**(n-1), which overflows any fixed width.
"""

from __future__ import annotations

import random
import uuid
from dataclasses import dataclass, field

Vector = tuple[int, ...]

OPEN = "open"
WON = "won"
REVEALED = "revealed"

MAX_SEED = 2**64 - 1


class GameError(Exception):
    """Base class for all domain errors. ``error_code`` is the wire name."""

    error_code = "GameError"


class DimensionMismatch(GameError):
    error_code = "DimensionMismatch"


class NonPositiveEntry(GameError):
    error_code = "NonPositiveEntry"


class GameOver(GameError):
    error_code = "GameOver"


def validate_dimension(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DimensionMismatch(f"dimension must be a positive integer, got {n!r}")
    return n


def validate_vector(entries, dimension: int | None = None, *, role: str = "vector") -> Vector:
    """Check positivity and (optionally) length; return the entries as a tuple.

    Raises NonPositiveEntry for entries < 1 and DimensionMismatch when the
    length differs from ``dimension``.
    """
    vec = tuple(entries)
    if dimension is not None and len(vec) != dimension:
        raise DimensionMismatch(
            f"{role} has {len(vec)} entries, expected {dimension}"
        )
    if len(vec) < 1:
        raise DimensionMismatch(f"{role} must have at least one entry")
    for i, value in enumerate(vec):
        if not isinstance(value, int) or isinstance(value, bool):
            raise NonPositiveEntry(f"{role} entry {i + 1} is not an integer: {value!r}")
        if value < 1:
            raise NonPositiveEntry(f"{role} entry {i + 1} must be >= 1, got {value}")
    return vec


def scalar_product(question, secret) -> int:
    """Exact scalar product q1*s1 + ... + qn*sn of two equal-length vectors."""
    q = validate_vector(question, role="question")
    s = validate_vector(secret, len(q), role="secret")
    return sum(qi * si for qi, si in zip(q, s))


@dataclass
class GameSession:
    """One game: a hidden secret plus the transcript of asked questions.

    The secret must never be shown to callers while ``status`` is "open";
    status only ever moves open -> won or open -> revealed.
    """

    id: str
    dimension: int
    secret: Vector
    transcript: list[tuple[Vector, int]] = field(default_factory=list)
    status: str = OPEN
    guesses_used: int = 0


def new_session(
    dimension: int,
    secret=None,
    seed: int | None = None,
    max_entry: int = 9,
    session_id: str | None = None,
) -> GameSession:
    """Create an open session with the given secret or a seeded random one.

    Random entries are uniform on [1, max_entry]; the same
    (dimension, seed, max_entry) always produces the same secret. With no
    seed a fresh unpredictable one is drawn.
    """
    n = validate_dimension(dimension)
    if secret is not None:
        chosen = validate_vector(secret, n, role="secret")
    else:
        if not isinstance(max_entry, int) or isinstance(max_entry, bool) or max_entry < 1:
            raise NonPositiveEntry(f"max_entry must be >= 1, got {max_entry!r}")
        if seed is None:
            seed = random.SystemRandom().randint(0, MAX_SEED)
        if not isinstance(seed, int) or isinstance(seed, bool) or not 0 <= seed <= MAX_SEED:
            raise NonPositiveEntry(f"seed must be an unsigned 64-bit integer, got {seed!r}")
        rng = random.Random(seed)
        chosen = tuple(rng.randint(1, max_entry) for _ in range(n))
    if session_id is None:
        session_id = "sess-" + uuid.uuid4().hex[:12]
    return GameSession(id=session_id, dimension=n, secret=chosen)


def _require_open(session: GameSession) -> None:
    if session.status != OPEN:
        raise GameOver(f"session {session.id} is {session.status}")


def ask(session: GameSession, question) -> int:
    """Ask one question; the response is appended to the transcript."""
    _require_open(session)
    q = validate_vector(question, session.dimension, role="question")
    response = scalar_product(q, session.secret)
    session.transcript.append((q, response))
    return response


def guess(session: GameSession, secret) -> bool:
    """Submit a guess. A correct one wins; a wrong one is counted."""
    _require_open(session)
    s = validate_vector(secret, session.dimension, role="guess")
    if s == session.secret:
        session.status = WON
        return True
    session.guesses_used += 1
    return False


def reveal(session: GameSession) -> Vector:
    """Give up: close the session and return the secret."""
    _require_open(session)
    session.status = REVEALED
    return session.secret
