"""Classical truth-value dynamics of a sentence system.

A truth token is one sentence plus a hypothesized truth value.  Reading
that sentence's claim forces a value on its target, giving a
deterministic single-step map on the 2n tokens; iterating it always
enters a cycle (the token graph is functional).  Brute-force enumeration
of the 2^n classical assignments classifies a system as grounded
(exactly one consistent assignment), bistable (several) or paradoxical
(none).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .dsl import SentenceSystem
from .errors import TooLarge

CLASSIFY_MAX_SENTENCES = 20

GROUNDED = "grounded"
BISTABLE = "bistable"
PARADOXICAL = "paradoxical"


class TruthToken(NamedTuple):
    sentence: int
    value: bool

    def label(self) -> str:
        return f"{self.sentence}:{'true' if self.value else 'false'}"


def all_tokens(n: int) -> tuple[TruthToken, ...]:
    """All 2n tokens in sentence-major order: 1:true, 1:false, 2:true, ..."""
    return tuple(TruthToken(s, v) for s in range(1, n + 1) for v in (True, False))


@dataclass(frozen=True)
class Walk:
    """An inference walk: a tail of ``tail_len`` tokens followed by a cycle."""

    steps: tuple[TruthToken, ...]
    tail_len: int
    cycle_len: int

    @property
    def cycle(self) -> tuple[TruthToken, ...]:
        return self.steps[self.tail_len:]


@dataclass(frozen=True)
class Classification:
    consistent_assignments: tuple[tuple[bool, ...], ...]
    verdict: str


def infer_step(system: SentenceSystem, token: TruthToken) -> TruthToken:
    """One inference step: if the hypothesized sentence is true its claim
    holds, otherwise its claim fails (value XNOR polarity)."""
    claim = system.claim_for(token.sentence)
    return TruthToken(claim.target, token.value == claim.asserts_true)


def walk(system: SentenceSystem, start: TruthToken) -> Walk:
    """Iterate infer_step from ``start`` until a token repeats.

    Terminates within 2n+1 steps since only 2n tokens exist.
    """
    if not 1 <= start.sentence <= system.n:
        raise ValueError(f"start sentence {start.sentence} outside 1..{system.n}")
    seen: dict[TruthToken, int] = {}
    steps: list[TruthToken] = []
    token = start
    while token not in seen:
        seen[token] = len(steps)
        steps.append(token)
        token = infer_step(system, token)
    tail_len = seen[token]
    return Walk(tuple(steps), tail_len, len(steps) - tail_len)


def check_assignment(system: SentenceSystem, assignment: Iterable[bool]) -> bool:
    """True iff every claim comes out right: subject's value equals the
    truth of its assertion about the target."""
    values = tuple(assignment)
    if len(values) != system.n:
        raise ValueError(f"assignment length {len(values)} != system size {system.n}")
    return all(
        values[c.subject - 1] == (values[c.target - 1] == c.asserts_true)
        for c in system.claims
    )


def classify(system: SentenceSystem) -> Classification:
    """Brute-force classification over all 2^n assignments (n <= 20)."""
    n = system.n
    if n > CLASSIFY_MAX_SENTENCES:
        raise TooLarge(n, CLASSIFY_MAX_SENTENCES)
    consistent = tuple(
        assignment
        for assignment in itertools.product((True, False), repeat=n)
        if check_assignment(system, assignment)
    )
    if not consistent:
        verdict = PARADOXICAL
    elif len(consistent) == 1:
        verdict = GROUNDED
    else:
        verdict = BISTABLE
    return Classification(consistent, verdict)


def classification_to_json(system: SentenceSystem, classification: Classification) -> dict:
    """JSON form with the walks from every start token alongside the verdict."""
    def fmt(value: bool) -> str:
        return "true" if value else "false"

    walks = []
    for token in all_tokens(system.n):
        w = walk(system, token)
        walks.append(
            {
                "start": token.label(),
                "tail": [t.label() for t in w.steps[: w.tail_len]],
                "cycle": [t.label() for t in w.cycle],
            }
        )
    return {
        "verdict": classification.verdict,
        "assignments": [[fmt(v) for v in a] for a in classification.consistent_assignments],
        "walks": walks,
    }
