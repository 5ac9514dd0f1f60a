"""Braid-group gate calculus for Majorana zero-mode qubits.

Compute the unitary of any braid of Majorana modes on the fermionic Fock
space, reduce gates to the even-parity (dense) qubit encoding, evaluate
closed-form gate families, re-express gate sets under a different Majorana
pairing, and synthesise braid words for target gates by exhaustive
enumeration of the finite braid image.
"""

from .braid import (
    BraidRelationReport,
    BraidWord,
    Orientation,
    RelationCheck,
    conjugate_gamma,
    generator_unitary,
    verify_braid_relations,
    word_unitary,
)
from .encoding import (
    EncodedGate,
    canonicalize_phase,
    dense_reduce,
    equal_up_to_phase,
    equal_up_to_phase_or_adjoint,
    parity_sector_indices,
    phase_distance,
    sector_block,
)
from .fock import (
    FockSpace,
    PairingDefinition,
    ParityOperator,
    gamma_matrix,
    ladder_matrix,
    number_matrix,
    parity_matrix,
)
from .gates import (
    braid_index_kind,
    closed_form,
    kron_chain,
    named_gate,
    rotation_x,
)
from .synthesis import (
    GroupIndex,
    NotRepresentable,
    PoleReport,
    canonical_key,
    enumerate_image,
    pole_reachability,
    synthesize,
)
from .transform import (
    GateSet,
    generator_gateset,
    repairing_braid,
    transform_gateset,
)

__version__ = "0.1.0"

__all__ = [
    "BraidRelationReport",
    "BraidWord",
    "EncodedGate",
    "FockSpace",
    "GateSet",
    "GroupIndex",
    "NotRepresentable",
    "Orientation",
    "PairingDefinition",
    "ParityOperator",
    "PoleReport",
    "RelationCheck",
    "braid_index_kind",
    "canonical_key",
    "canonicalize_phase",
    "closed_form",
    "conjugate_gamma",
    "dense_reduce",
    "enumerate_image",
    "equal_up_to_phase",
    "equal_up_to_phase_or_adjoint",
    "gamma_matrix",
    "generator_gateset",
    "generator_unitary",
    "kron_chain",
    "ladder_matrix",
    "named_gate",
    "number_matrix",
    "parity_matrix",
    "parity_sector_indices",
    "phase_distance",
    "pole_reachability",
    "repairing_braid",
    "rotation_x",
    "sector_block",
    "synthesize",
    "transform_gateset",
    "verify_braid_relations",
    "word_unitary",
    "__version__",
]
