"""Stateful measurement/evolution sessions on a quantized sentence system.

A session starts in the model's undisturbed superposition.  Hypothesizing
a truth value projects and renormalizes the state (probability by the
Born rule), evolving applies U(dt), and releasing restores the initial
superposition at time zero.  A seeded three-outcome sampling mode
(true / false / indeterminate, the last being the complement of the two
truth projectors) is provided for statistics on top of the deterministic
hypothesis semantics.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dsl import SentenceSystem
from .errors import BadRange, NegativeDuration, ZeroAmplitudeOutcome
from .inference import TruthToken, walk
from .linalg import norm2
from .quantize import QuantumModel, evolution_at, is_double_liar_a, quantize_cycle, quantize_double_liar_a

# Below this squared amplitude a hypothesis counts as impossible.
ZERO_AMPLITUDE = 1e-12


@dataclass(frozen=True)
class Event:
    kind: str  # measure | sample | evolve | release
    payload: dict
    at_time: float


@dataclass(frozen=True)
class TraceTable:
    """Sampled token probabilities over a time window."""

    columns: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]

    def to_csv(self) -> str:
        lines = [",".join(self.columns)]
        lines.extend(",".join(f"{x:.12g}" for x in row) for row in self.rows)
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"columns": list(self.columns), "rows": [list(row) for row in self.rows]}


class Session:
    """Mutable simulation state; single writer, independent sessions are safe."""

    def __init__(self, system: SentenceSystem, model: QuantumModel):
        self.system = system
        self.model = model
        self.state = model.psi0.copy()
        self.time = 0.0
        self.log: list[Event] = []

    def probabilities(self) -> dict[TruthToken, float]:
        """Born probability of every token in the current state."""
        return {
            token: norm2(p @ self.state)
            for token, p in self.model.projectors.items()
        }

    def hypothesize(self, sentence: int, value: bool) -> float:
        """Make a sentence true or false: project, renormalize, return the
        probability of the chosen outcome.  Time does not advance."""
        projected = self.model.projector(sentence, value) @ self.state
        prob = norm2(projected)
        if prob <= ZERO_AMPLITUDE:
            raise ZeroAmplitudeOutcome(sentence, value)
        self.state = projected / math.sqrt(prob)
        self.log.append(
            Event("measure", {"sentence": sentence, "value": value, "probability": prob}, self.time)
        )
        return prob

    def measure_sample(self, sentence: int, rng_seed=None) -> str:
        """Seeded Born sampling of {true, false, indeterminate} for one sentence.

        The indeterminate outcome is the complement of the two truth
        projectors; collapse and renormalization follow the sampled outcome.
        """
        p_true_op = self.model.projector(sentence, True)
        p_false_op = self.model.projector(sentence, False)
        proj_true = p_true_op @ self.state
        proj_false = p_false_op @ self.state
        p_true = norm2(proj_true)
        p_false = norm2(proj_false)
        p_indet = max(0.0, 1.0 - p_true - p_false)

        r = np.random.default_rng(rng_seed).random()
        if r < p_true:
            outcome, projected, prob = "true", proj_true, p_true
        elif r < p_true + p_false or p_indet <= ZERO_AMPLITUDE:
            outcome, projected, prob = "false", proj_false, p_false
        else:
            outcome = "indeterminate"
            projected = self.state - proj_true - proj_false
            prob = p_indet
        if prob <= ZERO_AMPLITUDE:
            # r landed on an outcome of vanishing weight; fall back to the likeliest
            outcome, projected, prob = max(
                (("true", proj_true, p_true), ("false", proj_false, p_false)),
                key=lambda item: item[2],
            )
        self.state = projected / math.sqrt(norm2(projected))
        self.log.append(
            Event(
                "sample",
                {"sentence": sentence, "outcome": outcome, "probability": prob, "seed": rng_seed},
                self.time,
            )
        )
        return outcome

    def evolve(self, dt: float) -> None:
        """Advance the state by U(dt) and the clock by dt (dt >= 0)."""
        if dt < 0:
            raise NegativeDuration(dt)
        self.state = evolution_at(self.model, dt) @ self.state
        self.time += dt
        self.log.append(Event("evolve", {"dt": dt}, self.time))

    def release(self) -> None:
        """Stop observing: restore the initial superposition at time 0."""
        self.state = self.model.psi0.copy()
        self.time = 0.0
        self.log.append(Event("release", {}, self.time))

    def trace(self, t0: float, t1: float, dt: float) -> TraceTable:
        """Token probabilities for the window [t0, t1] sampled every dt,
        treating the current state as the state at t = 0.  Pure: the
        session itself is untouched."""
        if dt <= 0 or t0 > t1:
            raise BadRange(f"need t0 <= t1 and dt > 0, got t0={t0}, t1={t1}, dt={dt}")
        w, v = np.linalg.eigh(self.model.hamiltonian)
        coeff = v.conj().T @ self.state
        tokens = self.model.tokens
        projs = [self.model.projectors[t] for t in tokens]
        n_rows = int(math.floor((t1 - t0) / dt + 1e-9)) + 1
        rows = []
        for k in range(n_rows):
            t = t0 + k * dt
            st = v @ (np.exp(-1j * w * t) * coeff)
            rows.append((t, *(norm2(p @ st) for p in projs)))
        columns = ("t", *(f"p_{tok.sentence}_{'true' if tok.value else 'false'}" for tok in tokens))
        return TraceTable(columns, tuple(rows))


def create_session(system: SentenceSystem) -> Session:
    """Fresh session for a system: the classic double liar gets its tensor
    model, everything else the flat model over the cycle reached from
    (1, true)."""
    if is_double_liar_a(system):
        model, _ = quantize_double_liar_a()
    else:
        w = walk(system, TruthToken(1, True))
        model = quantize_cycle(system, w.steps[w.tail_len])
    return Session(system, model)
