"""Exact enumeration of every secret consistent with observed responses.

Because all entries are positive, the solution set of q . t = r is finite:
coordinate i can use at most (r - sum of the other q entries) / q_i. A
depth-first search over coordinates with that bound emits candidates in
lexicographic order, which keeps all outputs deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator

from .core import GameError, Vector, scalar_product, validate_vector

DEFAULT_LIMIT = 10_000


class CandidateLimitExceeded(GameError):
    error_code = "CandidateLimitExceeded"


@dataclass(frozen=True)
class CandidateSet:
    """Solutions found so far, in lexicographic order.

    When ``truncated`` is false the tuple is the complete solution set;
    otherwise exactly ``limit`` members were kept and more exist.
    """

    candidates: tuple[Vector, ...]
    truncated: bool = False

    @property
    def count(self) -> int:
        return len(self.candidates)

    def __len__(self) -> int:
        return len(self.candidates)

    def __contains__(self, item) -> bool:
        return tuple(item) in self.candidates

    def __iter__(self):
        return iter(self.candidates)


def _solutions(q: Vector, r: int) -> Iterator[Vector]:
    """Yield all positive t with q . t = r, in lexicographic order."""
    n = len(q)
    # suffix[i] = q[i] + ... + q[n-1], the minimum cost of coordinates i..n-1
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + q[i]

    prefix = [0] * n

    def walk(i: int, remaining: int) -> Iterator[Vector]:
        if i == n - 1:
            value, leftover = divmod(remaining, q[i])
            if leftover == 0 and value >= 1:
                prefix[i] = value
                yield tuple(prefix)
            return
        top = (remaining - suffix[i + 1]) // q[i]
        for value in range(1, top + 1):
            prefix[i] = value
            yield from walk(i + 1, remaining - q[i] * value)

    if r >= suffix[0]:
        yield from walk(0, r)


def enumerate_candidates(
    question,
    response: int,
    limit: int | None = None,
    strict: bool = False,
) -> CandidateSet:
    """All positive-integer solutions t of question . t = response.

    With a ``limit``, search stops once limit solutions are in hand and one
    more is known to exist; the overflow is reported through the
    ``truncated`` flag, or as CandidateLimitExceeded when ``strict``.
    """
    q = validate_vector(question, role="question")
    if response < 1:
        raise GameError(f"response must be >= 1, got {response}")
    gen = _solutions(q, response)
    if limit is None:
        return CandidateSet(tuple(gen))
    if limit < 1:
        raise GameError(f"limit must be >= 1, got {limit}")
    found = tuple(islice(gen, limit + 1))
    if len(found) <= limit:
        return CandidateSet(found)
    if strict:
        raise CandidateLimitExceeded(f"more than {limit} candidates for response {response}")
    return CandidateSet(found[:limit], truncated=True)


def consistent_candidates(
    transcript,
    limit: int | None = None,
    strict: bool = False,
) -> CandidateSet:
    """Secrets consistent with every (question, response) round.

    Enumerates the first round, then filters by the later rounds'
    equations. Exact whenever the first-round enumeration was not
    truncated.
    """
    rounds = list(transcript)
    if not rounds:
        raise ValueError("transcript must contain at least one round")
    first_q, first_r = rounds[0]
    base = enumerate_candidates(first_q, first_r, limit=limit, strict=strict)
    rest = [(validate_vector(q, role="question"), r) for q, r in rounds[1:]]
    survivors = tuple(
        t
        for t in base.candidates
        if all(sum(qi * ti for qi, ti in zip(q, t)) == r for q, r in rest)
    )
    return CandidateSet(survivors, truncated=base.truncated)


def decodes(question, secret) -> bool:
    """True iff the question's response is produced by no other secret.

    The search aborts as soon as a second solution turns up, since only
    uniqueness matters here.
    """
    q = validate_vector(question, role="question")
    s = validate_vector(secret, len(q), role="secret")
    first_two = list(islice(_solutions(q, scalar_product(q, s)), 2))
    return len(first_two) == 1
