"""Secret-sequence scalar-product guessing game: exact oracle, candidate
enumeration, provably-correct solver strategies, and a bounded-universe
quantifier lab."""

from .core import (
    DimensionMismatch,
    GameError,
    GameOver,
    GameSession,
    NonPositiveEntry,
    Vector,
    ask,
    guess,
    new_session,
    reveal,
    scalar_product,
)
from .enumeration import (
    CandidateLimitExceeded,
    CandidateSet,
    consistent_candidates,
    decodes,
    enumerate_candidates,
)
from .numtheory import coprime_basis_above, gcd, is_prime, next_prime_above
from .quantifier_lab import (
    BoundedUniverse,
    QuantifierReport,
    eval_exists_forall,
    eval_forall_exists,
    render_report,
)
from .solvers import (
    AdaptivePlan,
    CollisionWitness,
    InconsistentResponses,
    InvalidDigit,
    NoCollisionInDimensionOne,
    adaptive_decode,
    adaptive_followup,
    adaptive_solve,
    build_decoding_question,
    collision_witness,
    nonadaptive_questions,
    nonadaptive_solve,
)

__version__ = "0.1.0"
