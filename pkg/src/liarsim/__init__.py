"""Truth dynamics of self-referential sentence systems.

Parse liar-style sentence systems, classify their classical truth
behavior, build the matching Hilbert-space model, and run interactive
measurement/evolution sessions on it.
"""

from .dsl import (
    DOUBLE_LIAR_A,
    DOUBLE_LIAR_B,
    DOUBLE_LIAR_C,
    PRESETS,
    SINGLE_LIAR,
    Claim,
    SentenceSystem,
    format_system,
    parse,
)
from .errors import LiarError
from .inference import (
    BISTABLE,
    GROUNDED,
    PARADOXICAL,
    Classification,
    TruthToken,
    Walk,
    check_assignment,
    classify,
    infer_step,
    walk,
)
from .linalg import eig_normal, exp_hermitian, principal_log_unitary, tensor_product
from .quantize import (
    QuantumModel,
    TensorEmbedding,
    entangled_pair_state,
    evolution_at,
    pair_projector,
    quantize_cycle,
    quantize_double_liar_a,
    single_liar_state,
)
from .session import Session, TraceTable, create_session

__version__ = "0.1.0"

__all__ = [
    "BISTABLE",
    "Claim",
    "Classification",
    "DOUBLE_LIAR_A",
    "DOUBLE_LIAR_B",
    "DOUBLE_LIAR_C",
    "GROUNDED",
    "LiarError",
    "PARADOXICAL",
    "PRESETS",
    "QuantumModel",
    "SINGLE_LIAR",
    "SentenceSystem",
    "Session",
    "TensorEmbedding",
    "TraceTable",
    "TruthToken",
    "Walk",
    "check_assignment",
    "classify",
    "create_session",
    "eig_normal",
    "entangled_pair_state",
    "evolution_at",
    "exp_hermitian",
    "format_system",
    "infer_step",
    "pair_projector",
    "parse",
    "principal_log_unitary",
    "quantize_cycle",
    "quantize_double_liar_a",
    "single_liar_state",
    "tensor_product",
    "walk",
]
