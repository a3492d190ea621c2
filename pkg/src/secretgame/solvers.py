"""Four provably-correct strategies for recovering the secret.

* nonadaptive: ask the n all-ones-plus-e_i questions up front and invert
  the linear system exactly in integers.
* decoding question ("one key per secret"): the complementary products of
  a coprime basis above the secret decode it in a single question.
* collision witness ("no master key"): any fixed question in dimension
  >= 2 confuses at least two secrets.
* adaptive: any first question plus a base-(r1+1) positional follow-up
  recovers the secret in exactly two questions.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .core import GameError, GameSession, Vector, ask, scalar_product, validate_vector
from .numtheory import coprime_basis_above


class InconsistentResponses(GameError):
    error_code = "InconsistentResponses"


class InvalidDigit(GameError):
    error_code = "InvalidDigit"


class NoCollisionInDimensionOne(GameError):
    error_code = "NoCollisionInDimensionOne"


@dataclass(frozen=True)
class CollisionWitness:
    """Two distinct secrets the producing question cannot tell apart."""

    s: Vector
    t: Vector


@dataclass(frozen=True)
class AdaptivePlan:
    """First question, observed-response base B = r1 + 1, and the power
    follow-up (B**0, ..., B**(n-1))."""

    first: Vector
    base: int
    followup: Vector


def nonadaptive_questions(n: int) -> tuple[Vector, ...]:
    """Question i is all ones with entry i bumped to 2 (i = 1..n)."""
    if n < 1:
        raise GameError(f"dimension must be >= 1, got {n}")
    return tuple(
        tuple(2 if j == i else 1 for j in range(n)) for i in range(n)
    )


def nonadaptive_solve(responses) -> Vector:
    """Invert the all-ones-plus-identity system exactly.

    Response i equals s_i + sum(s), so sum over i gives
    (n+1) * sum(s) and each entry is s_i = r_i - sum(r) / (n+1). At n=4
    this is the closed form s1 = (4w - x - y - z) / 5 and its rotations.
    Responses that no positive secret produces are rejected.
    """
    rs = list(responses)
    n = len(rs)
    if n < 1:
        raise InconsistentResponses("need at least one response")
    for r in rs:
        if not isinstance(r, int) or isinstance(r, bool) or r < 1:
            raise InconsistentResponses(f"responses must be positive integers, got {r!r}")
    total, leftover = divmod(sum(rs), n + 1)
    if leftover != 0:
        raise InconsistentResponses(
            f"response sum {sum(rs)} is not divisible by {n + 1}"
        )
    secret = tuple(r - total for r in rs)
    if any(e < 1 for e in secret):
        raise InconsistentResponses("responses imply a non-positive secret entry")
    return secret


def build_decoding_question(secret) -> tuple[Vector, Vector]:
    """One question guaranteed to decode the given secret, plus its basis.

    With a1..an pairwise coprime and ai > si, the question
    q_i = prod(a_j, j != i) decodes s: each a_i divides every other term
    of q . (s - t) = 0 and is coprime to q_i, so a_i | (s_i - t_i); the
    bound a_i > s_i then forces t_i >= s_i for all i, and the zero sum
    forces equality. Returns (question, basis).
    """
    s = validate_vector(secret, role="secret")
    basis = coprime_basis_above(s)
    question = tuple(
        prod(a for j, a in enumerate(basis) if j != i) for i in range(len(s))
    )
    return question, basis


def collision_witness(question) -> CollisionWitness:
    """Two secrets with equal responses to the given question.

    Bump entry n-1 of the all-ones secret by q_n, or entry n by q_(n-1):
    both cost exactly q_(n-1) * q_n over the all-ones response. Impossible
    in dimension 1, where the response q * s pins s.
    """
    q = validate_vector(question, role="question")
    n = len(q)
    if n < 2:
        raise NoCollisionInDimensionOne(
            "every question decodes every secret in dimension 1"
        )
    s = [1] * n
    t = [1] * n
    s[n - 2] = 1 + q[n - 1]
    t[n - 1] = 1 + q[n - 2]
    return CollisionWitness(s=tuple(s), t=tuple(t))


def adaptive_followup(first_question, first_response: int) -> AdaptivePlan:
    """Choose the follow-up after seeing the first response.

    Every candidate coordinate is at most r1, so with B = r1 + 1 the
    question (B**0, ..., B**(n-1)) reads the candidate off as base-B
    digits; no two candidates can share a follow-up response.
    """
    q1 = validate_vector(first_question, role="question")
    minimum = sum(q1)
    if first_response < minimum:
        raise InconsistentResponses(
            f"response {first_response} is below the minimum {minimum} for this question"
        )
    base = first_response + 1
    followup = tuple(base**i for i in range(len(q1)))
    return AdaptivePlan(first=q1, base=base, followup=followup)


def adaptive_decode(plan: AdaptivePlan, second_response: int) -> Vector:
    """Read the secret out of the follow-up response as base-B digits.

    Digits are little-endian and must all land in [1, B-1]; a zero digit
    or leftover value means no positive secret produced the responses.
    """
    n = len(plan.followup)
    base = plan.base
    digits = []
    value = second_response
    for position in range(n):
        value, digit = divmod(value, base)
        if digit == 0:
            raise InvalidDigit(f"digit {position + 1} of {second_response} is zero in base {base}")
        digits.append(digit)
    if value != 0:
        raise InvalidDigit(f"{second_response} has more than {n} digits in base {base}")
    return tuple(digits)


def adaptive_solve(session: GameSession, first_question) -> Vector:
    """Recover the session secret in exactly two questions."""
    q1 = validate_vector(first_question, session.dimension, role="question")
    r1 = ask(session, q1)
    plan = adaptive_followup(q1, r1)
    r2 = ask(session, plan.followup)
    secret = adaptive_decode(plan, r2)
    if scalar_product(q1, secret) != r1:
        raise InconsistentResponses(
            "decoded secret does not reproduce the first response"
        )
    return secret
