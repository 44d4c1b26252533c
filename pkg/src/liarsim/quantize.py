"""Hilbert-space models of sentence systems.

The inference cycle of length L becomes an orthonormal basis of C^L (or
of a cycle subspace inside a larger tensor space).  The discrete unitary
advances the cycle by one step, the initial state is the equal-weight
positive-phase superposition of the cycle basis states, and the
Hamiltonian is obtained from the discrete unitary through the scaled
principal logarithm

    H = (i / tau) * ln(U_D),        tau = pi / 2,

so that the continuous evolution U(t) = exp(-iHt) interpolates the
discrete steps: U(tau) = U_D, and inference outcomes sit at t = n*tau.
The initial state is a zero-eigenvalue eigenstate of H, hence strictly
time invariant.  On any complement of the cycle subspace U_D acts as the
identity, so H vanishes there.

Two-sentence systems also get their dedicated small models: the
symmetric/antisymmetric entangled pair states on C2 (x) C2 for the
always-agreeing and always-disagreeing double liars, and the full
C4 (x) C4 embedding (flattened to C16) for the classic double liar,
whose four truth states must come out mutually orthogonal.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dsl import DOUBLE_LIAR_A, SentenceSystem, parse
from .errors import NotNormalized, StartNotOnCycle
from .inference import TruthToken, all_tokens, walk
from .linalg import (
    as_vector,
    exp_hermitian,
    matrix_to_json,
    principal_log_unitary,
    tensor_product,
    vector_to_json,
)

TAU = math.pi / 2


@dataclass(frozen=True, eq=False)
class QuantumModel:
    """Immutable quantum model of one sentence system.

    ``basis_labels[k]`` is the truth token at cycle position k and
    ``cycle_indices[k]`` the flat basis index it occupies (equal to k for
    flat models).  ``projectors`` maps every token of the system, in
    sentence-major order, to its measurement projector; tokens never
    visited by the cycle get the zero matrix in flat models.
    """

    dim: int
    basis_labels: tuple[TruthToken, ...]
    cycle_indices: tuple[int, ...]
    psi0: np.ndarray
    projectors: dict[TruthToken, np.ndarray]
    u_discrete: np.ndarray
    hamiltonian: np.ndarray
    tau: float = TAU

    @property
    def cycle_len(self) -> int:
        return len(self.basis_labels)

    @property
    def tokens(self) -> tuple[TruthToken, ...]:
        return tuple(self.projectors)

    def projector(self, sentence: int, value: bool) -> np.ndarray:
        try:
            return self.projectors[TruthToken(sentence, value)]
        except KeyError:
            raise ValueError(f"no projector for sentence {sentence}") from None

    def cycle_basis_vector(self, k: int) -> np.ndarray:
        b = np.zeros(self.dim, dtype=np.complex128)
        b[self.cycle_indices[k]] = 1.0
        return b


@dataclass(frozen=True)
class TensorEmbedding:
    """Row-major flattening of a tensor-product basis (indices 1-based)."""

    factor_dims: tuple[int, ...]

    def flat_index(self, *multi: int) -> int:
        if len(multi) != len(self.factor_dims):
            raise ValueError(f"expected {len(self.factor_dims)} indices")
        flat = 0
        for idx, d in zip(multi, self.factor_dims):
            if not 1 <= idx <= d:
                raise ValueError(f"index {idx} outside 1..{d}")
            flat = flat * d + (idx - 1)
        return flat + 1

    def multi_index(self, flat: int) -> tuple[int, ...]:
        k = flat - 1
        out = []
        for d in reversed(self.factor_dims):
            out.append(k % d + 1)
            k //= d
        return tuple(reversed(out))


def _cycle_shift(length: int) -> np.ndarray:
    u = np.zeros((length, length), dtype=np.complex128)
    u[(np.arange(length) + 1) % length, np.arange(length)] = 1.0
    return u


def _hamiltonian_from(u_discrete: np.ndarray, tau: float) -> np.ndarray:
    # eigenvalue 1 of U_D maps to 0 exactly, so any complement subspace
    # (and the equal superposition itself) gets H = 0
    return (1j / tau) * principal_log_unitary(u_discrete)


def quantize_cycle(system: SentenceSystem, start: TruthToken) -> QuantumModel:
    """Flat model in C^L over the inference cycle through ``start``.

    ``start`` must lie on its own cycle (tail-free walk); the basis is
    the cycle in walk order, the discrete unitary the cyclic shift by
    one, and each token's projector the sum of the basis projectors it
    labels (zero if the cycle never visits it).
    """
    w = walk(system, start)
    if w.tail_len > 0:
        raise StartNotOnCycle(start.sentence, start.value, w.tail_len)
    length = w.cycle_len
    labels = w.steps
    position = {token: k for k, token in enumerate(labels)}

    projectors: dict[TruthToken, np.ndarray] = {}
    for token in all_tokens(system.n):
        p = np.zeros((length, length), dtype=np.complex128)
        if token in position:
            k = position[token]
            p[k, k] = 1.0
        projectors[token] = p

    u = _cycle_shift(length)
    psi0 = np.full(length, 1.0 / math.sqrt(length), dtype=np.complex128)
    return QuantumModel(
        dim=length,
        basis_labels=labels,
        cycle_indices=tuple(range(length)),
        psi0=psi0,
        projectors=projectors,
        u_discrete=u,
        hamiltonian=_hamiltonian_from(u, TAU),
    )


_CASE_A_SYSTEM = parse(DOUBLE_LIAR_A)


def is_double_liar_a(system: SentenceSystem) -> bool:
    return system.claims == _CASE_A_SYSTEM.claims


def quantize_double_liar_a() -> tuple[QuantumModel, TensorEmbedding]:
    """The 16-dimensional tensor model of the classic double liar.

    Each sentence gets a 4-dimensional factor whose 3rd/4th basis
    directions carry its true/false states (the first two are pure
    orthogonality markers), flattened row-major to C16.  The four truth
    states of the inference cycle are then mutually orthogonal:

        (1,true) -> e10,  (2,false) -> e8,  (1,false) -> e13,  (2,true) -> e3

    with psi0 = (e3 + e8 + e10 + e13) / 2.  The discrete unitary shifts
    that 4-cycle and leaves the 12-dimensional complement alone.
    """
    emb = TensorEmbedding((4, 4))
    e33 = np.zeros((4, 4), dtype=np.complex128)
    e33[2, 2] = 1.0
    e44 = np.zeros((4, 4), dtype=np.complex128)
    e44[3, 3] = 1.0
    eye4 = np.eye(4, dtype=np.complex128)

    projectors = {
        TruthToken(1, True): tensor_product(e33, eye4),
        TruthToken(1, False): tensor_product(e44, eye4),
        TruthToken(2, True): tensor_product(eye4, e33),
        TruthToken(2, False): tensor_product(eye4, e44),
    }
    # sentence-major key order, matching the flat models
    projectors = {t: projectors[t] for t in all_tokens(2)}

    labels = (TruthToken(1, True), TruthToken(2, False), TruthToken(1, False), TruthToken(2, True))
    factor_pairs = ((3, 2), (2, 4), (4, 1), (1, 3))
    cycle = tuple(emb.flat_index(i, j) - 1 for i, j in factor_pairs)

    u = np.eye(16, dtype=np.complex128)
    for k, idx in enumerate(cycle):
        u[:, idx] = 0.0
        u[cycle[(k + 1) % 4], idx] = 1.0

    psi0 = np.zeros(16, dtype=np.complex128)
    psi0[list(cycle)] = 0.5

    model = QuantumModel(
        dim=16,
        basis_labels=labels,
        cycle_indices=cycle,
        psi0=psi0,
        projectors=projectors,
        u_discrete=u,
        hamiltonian=_hamiltonian_from(u, TAU),
    )
    return model, emb


def entangled_pair_state(kind: str) -> np.ndarray:
    """Two-sentence entangled states in C2 (x) C2, basis (TT, TF, FT, FF).

    Kind "B" couples equal truth values symmetrically,
    (TT + FF)/sqrt(2); kind "C" couples opposite values
    antisymmetrically, (TF - FT)/sqrt(2).
    """
    inv = 1.0 / math.sqrt(2)
    if kind == "B":
        return np.array([inv, 0.0, 0.0, inv], dtype=np.complex128)
    if kind == "C":
        return np.array([0.0, inv, -inv, 0.0], dtype=np.complex128)
    raise ValueError(f"kind must be 'B' or 'C', got {kind!r}")


def pair_projector(sentence: int, value: bool) -> np.ndarray:
    """Truth projector for one factor of the C2 (x) C2 pair space."""
    if sentence not in (1, 2):
        raise ValueError(f"sentence must be 1 or 2, got {sentence}")
    single = np.diag([1.0, 0.0]) if value else np.diag([0.0, 1.0])
    eye2 = np.eye(2)
    if sentence == 1:
        return tensor_product(single, eye2)
    return tensor_product(eye2, single)


def single_liar_state(c_true: complex, c_false: complex) -> np.ndarray:
    """Weighted superposition (c_true, c_false) in the (|T>, |F>) basis."""
    v = as_vector([c_true, c_false])
    total = float(np.sum(np.abs(v) ** 2))
    if abs(total - 1.0) > 1e-10:
        raise NotNormalized(f"|c_true|^2 + |c_false|^2 = {total}, expected 1")
    return v


def evolution_at(model: QuantumModel, t: float) -> np.ndarray:
    """Continuous evolution U(t) = exp(-iHt); U(tau) is the cycle shift."""
    return exp_hermitian(model.hamiltonian, t)


def model_to_json(model: QuantumModel) -> dict:
    return {
        "dim": model.dim,
        "tau": model.tau,
        "basis": {str(k): token.label() for k, token in enumerate(model.basis_labels)},
        "psi0": vector_to_json(model.psi0),
        "projectors": {token.label(): matrix_to_json(p) for token, p in model.projectors.items()},
        "u_discrete": matrix_to_json(model.u_discrete),
        "hamiltonian": matrix_to_json(model.hamiltonian),
    }
