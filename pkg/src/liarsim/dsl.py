"""Line-oriented DSL for self-referential sentence systems.

Grammar (one claim per line, keywords case-insensitive, whitespace free):

    line  := "(" INT ")" "sentence" "(" INT ")" "is" ("true" | "false")

Blank lines and lines starting with "#" are ignored.  Subjects must cover
1..n exactly once and every target must point inside the system.  The
canonical form emitted by :func:`format_system` is lowercase, one claim
per line in subject order, LF separated.  Files conventionally use the
``.liar`` extension.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    DuplicateSubject,
    EmptySystem,
    MalformedLine,
    MissingSubject,
    TargetOutOfRange,
)


class Claim(NamedTuple):
    """One sentence's assertion: sentence ``subject`` says ``target`` is true/false."""

    subject: int
    target: int
    asserts_true: bool


@dataclass(frozen=True)
class SentenceSystem:
    claims: tuple[Claim, ...]

    def __post_init__(self):
        n = len(self.claims)
        if n == 0:
            raise EmptySystem()
        seen = set()
        for claim in self.claims:
            if claim.subject in seen:
                raise DuplicateSubject(claim.subject)
            seen.add(claim.subject)
        for i in range(1, n + 1):
            if i not in seen:
                raise MissingSubject(i)
        for claim in self.claims:
            if not 1 <= claim.target <= n:
                raise TargetOutOfRange(claim.subject, claim.target)
        # store in subject order so equality is structural
        object.__setattr__(self, "claims", tuple(sorted(self.claims)))

    @property
    def n(self) -> int:
        return len(self.claims)

    def claim_for(self, sentence: int) -> Claim:
        return self.claims[sentence - 1]


_TOKEN = re.compile(r"\(|\)|\d+|[A-Za-z]+")


def _parse_line(raw: str, lineno: int) -> Claim:
    tokens = _TOKEN.findall(raw)
    if _TOKEN.sub("", raw).strip():
        raise MalformedLine(lineno, raw)
    if len(tokens) != 9:
        raise MalformedLine(lineno, raw)
    l1, subj, r1, kw_sentence, l2, tgt, r2, kw_is, value = tokens
    ok = (
        l1 == "(" and r1 == ")" and l2 == "(" and r2 == ")"
        and subj.isdigit() and tgt.isdigit()
        and kw_sentence.lower() == "sentence"
        and kw_is.lower() == "is"
        and value.lower() in ("true", "false")
    )
    if not ok:
        raise MalformedLine(lineno, raw)
    return Claim(int(subj), int(tgt), value.lower() == "true")


def parse(text: str) -> SentenceSystem:
    """Parse DSL text into a validated SentenceSystem.

    Raises MalformedLine, DuplicateSubject, MissingSubject,
    TargetOutOfRange or EmptySystem; the first two carry the offending
    line number.
    """
    by_subject: dict[int, Claim] = {}
    lines: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        claim = _parse_line(raw, lineno)
        if claim.subject in by_subject:
            raise DuplicateSubject(claim.subject, lineno)
        by_subject[claim.subject] = claim
        lines[claim.subject] = lineno
    if not by_subject:
        raise EmptySystem()
    n = len(by_subject)
    for i in range(1, n + 1):
        if i not in by_subject:
            raise MissingSubject(i)
    for claim in by_subject.values():
        if not 1 <= claim.target <= n:
            raise TargetOutOfRange(claim.subject, claim.target, lines[claim.subject])
    return SentenceSystem(tuple(by_subject[i] for i in range(1, n + 1)))


def format_system(system: SentenceSystem) -> str:
    """Canonical text: one claim per line in subject order, lowercase, LF."""
    return "\n".join(
        f"({c.subject}) sentence ({c.target}) is {'true' if c.asserts_true else 'false'}"
        for c in system.claims
    )


# The four stock systems exercised throughout the package and the console.
SINGLE_LIAR = "(1) sentence (1) is false"
DOUBLE_LIAR_A = "(1) sentence (2) is false\n(2) sentence (1) is true"
DOUBLE_LIAR_B = "(1) sentence (2) is true\n(2) sentence (1) is true"
DOUBLE_LIAR_C = "(1) sentence (2) is false\n(2) sentence (1) is false"

PRESETS = {
    "single_liar": SINGLE_LIAR,
    "double_liar_a": DOUBLE_LIAR_A,
    "double_liar_b": DOUBLE_LIAR_B,
    "double_liar_c": DOUBLE_LIAR_C,
}
