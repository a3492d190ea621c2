"""Evaluate the two quantifier orderings of "one question decodes the
secret" over finite grids, with per-element witnesses.

Let D(q, s) be "question q decodes secret s". The two statements

    exists q, forall s, D(q, s)      (a master key)
    forall s, exists q, D(q, s)      (no unbreakable secret)

differ only in quantifier order but have opposite truth values over all
positive-integer sequences of length >= 2. Here q and s range over
bounded grids while the inner check D stays exact (the solution set it
inspects is never truncated), so small-grid verdicts can diverge from the
unbounded ones; ``unbounded_note`` always says whether they do.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import GameError, Vector
from .enumeration import decodes
from .solvers import build_decoding_question, collision_witness
from .wire import ValidationError, decode_int, decode_vector, encode_int, encode_vector

EXISTS_FORALL = "exists_forall"
FORALL_EXISTS = "forall_exists"
STATEMENTS = (EXISTS_FORALL, FORALL_EXISTS)


@dataclass(frozen=True)
class BoundedUniverse:
    """Finite grids: questions over [1, q_max]^n, secrets over [1, s_max]^n."""

    n: int
    q_max: int
    s_max: int

    def __post_init__(self):
        if self.n < 1 or self.q_max < 1 or self.s_max < 1:
            raise GameError("universe bounds must all be >= 1")

    def questions(self):
        return product(range(1, self.q_max + 1), repeat=self.n)

    def secrets(self):
        return product(range(1, self.s_max + 1), repeat=self.n)


@dataclass(frozen=True)
class EvidenceEntry:
    """One outer-quantifier element and its inner witness/counterexample.

    ``inner`` is the failing secret (exists_forall refuted) or the
    decoding question (forall_exists affirmed); None when the outer
    element alone settles its case, as for an affirmed exists.
    """

    outer: Vector
    inner: Vector | None


@dataclass(frozen=True)
class QuantifierReport:
    statement: str
    universe: BoundedUniverse
    verdict: bool
    evidence: tuple[EvidenceEntry, ...]
    unbounded_note: str


def _exists_forall_note(n: int, verdict: bool) -> str:
    if n == 1:
        return (
            "Matches the unbounded statement in dimension 1: the response "
            "q*s determines s, so every question is a master key."
        )
    if not verdict:
        return (
            "Matches the unbounded statement: for dimension >= 2 no single "
            "question decodes every positive-integer secret; every question "
            "has a collision pair."
        )
    return (
        "Bounded-universe artifact: this secret grid is too small to "
        "contain a collision pair. Over all positive-integer secrets the "
        "statement is FALSE for dimension >= 2."
    )


def _forall_exists_note() -> str:
    return (
        "Matches the unbounded statement: the coprime-product construction "
        "yields a decoding question for every secret, so no secret is safe "
        "from a single well-chosen question."
    )


def _failing_secret(q: Vector, universe: BoundedUniverse) -> Vector | None:
    """A grid secret that q fails to decode, or None if q decodes them all.

    Prefers the constructed collision secret (all ones except entry n-1)
    when it fits the grid; otherwise scans the grid in lexicographic
    order. Either way the returned secret verifiably fails ``decodes``.
    """
    if universe.n >= 2:
        witness = collision_witness(q).s
        if max(witness) <= universe.s_max and not decodes(q, witness):
            return witness
    for s in universe.secrets():
        if not decodes(q, s):
            return s
    return None


def eval_exists_forall(universe: BoundedUniverse) -> QuantifierReport:
    """Is there one grid question that decodes every grid secret?

    True: evidence is the first such question in lexicographic order.
    False: evidence maps every grid question to a secret it fails on.
    """
    entries: list[EvidenceEntry] = []
    verdict = False
    for q in universe.questions():
        failing = _failing_secret(q, universe)
        if failing is None:
            verdict = True
            entries = [EvidenceEntry(outer=q, inner=None)]
            break
        entries.append(EvidenceEntry(outer=q, inner=failing))
    return QuantifierReport(
        statement=EXISTS_FORALL,
        universe=universe,
        verdict=verdict,
        evidence=tuple(entries),
        unbounded_note=_exists_forall_note(universe.n, verdict),
    )


def eval_forall_exists(universe: BoundedUniverse) -> QuantifierReport:
    """Does every grid secret have some decoding question?

    Always true: each secret is mapped to its constructed coprime-product
    question, re-verified through the enumeration engine. The witness
    question is deliberately not restricted to [1, q_max]^n.
    """
    entries = []
    for s in universe.secrets():
        question, _basis = build_decoding_question(s)
        if not decodes(question, s):  # pragma: no cover - construction proof
            raise GameError(f"constructed question failed to decode {s}")
        entries.append(EvidenceEntry(outer=s, inner=question))
    return QuantifierReport(
        statement=FORALL_EXISTS,
        universe=universe,
        verdict=True,
        evidence=tuple(entries),
        unbounded_note=_forall_exists_note(),
    )


def evaluate(statement: str, universe: BoundedUniverse) -> QuantifierReport:
    if statement == EXISTS_FORALL:
        return eval_exists_forall(universe)
    if statement == FORALL_EXISTS:
        return eval_forall_exists(universe)
    raise GameError(f"unknown statement {statement!r}")


def report_to_doc(report: QuantifierReport) -> dict:
    """Structured (JSON-ready) form; integers become decimal strings."""
    return {
        "statement": report.statement,
        "universe": {
            "n": encode_int(report.universe.n),
            "q_max": encode_int(report.universe.q_max),
            "s_max": encode_int(report.universe.s_max),
        },
        "verdict": report.verdict,
        "evidence": [
            {
                "outer": encode_vector(entry.outer),
                "inner": encode_vector(entry.inner) if entry.inner is not None else None,
            }
            for entry in report.evidence
        ],
        "unbounded_note": report.unbounded_note,
    }


def report_from_doc(doc: dict) -> QuantifierReport:
    """Inverse of ``report_to_doc``."""
    statement = doc["statement"]
    if statement not in STATEMENTS:
        raise ValidationError(f"unknown statement {statement!r}")
    u = doc["universe"]
    universe = BoundedUniverse(
        n=decode_int(u["n"], "n", minimum=1),
        q_max=decode_int(u["q_max"], "q_max", minimum=1),
        s_max=decode_int(u["s_max"], "s_max", minimum=1),
    )
    evidence = tuple(
        EvidenceEntry(
            outer=decode_vector(row["outer"], "outer"),
            inner=decode_vector(row["inner"], "inner") if row.get("inner") is not None else None,
        )
        for row in doc["evidence"]
    )
    return QuantifierReport(
        statement=statement,
        universe=universe,
        verdict=bool(doc["verdict"]),
        evidence=evidence,
        unbounded_note=doc["unbounded_note"],
    )


def render_report(report: QuantifierReport, format: str = "text", max_rows: int = 10):
    """Serialize a report: human text, or the structured document."""
    if format == "structured":
        return report_to_doc(report)
    if format != "text":
        raise GameError(f"unknown format {format!r}")
    u = report.universe
    verdict = "TRUE" if report.verdict else "FALSE"
    if report.statement == EXISTS_FORALL:
        head = f"∃q ∀s : {verdict}"
        ranges = f"q in [1,{u.q_max}]^{u.n}, s in [1,{u.s_max}]^{u.n}"
        if report.verdict:
            label = "master key in this grid"
        else:
            label = "counterexamples"
    else:
        head = f"∀s ∃q : {verdict}"
        ranges = f"s in [1,{u.s_max}]^{u.n}, q unrestricted"
        label = "decoding questions"
    lines = [f"{head}   ({ranges})", f"note: {report.unbounded_note}"]
    shown = report.evidence[:max_rows]
    lines.append(f"{label} (showing {len(shown)} of {len(report.evidence)}):")
    for entry in shown:
        outer = "(" + ", ".join(str(v) for v in entry.outer) + ")"
        if entry.inner is None:
            lines.append(f"  {outer} decodes every grid secret")
        else:
            inner = "(" + ", ".join(str(v) for v in entry.inner) + ")"
            if report.statement == EXISTS_FORALL:
                lines.append(f"  q={outer} fails on s={inner}")
            else:
                lines.append(f"  s={outer} decoded by q={inner}")
    return "\n".join(lines)
