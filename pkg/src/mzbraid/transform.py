"""Re-expressing gate sets under a different Majorana pairing.

Two pairing definitions over the same Majoranas give two qubit bases, and
a gate computed under one definition acquires a different matrix under the
other.  The change of definition is itself a braid: physically rearrange
the Majoranas so that the target pairing becomes the adjacent one, then
conjugate every gate by that braid's unitary.

``repairing_braid`` compiles the rearrangement into a braid word by
bubble-sorting the flattened ``from`` pair list into the flattened ``to``
list with adjacent transpositions (lowest index first).  Because operator
transport composes in the Heisenberg order (see ``braid.conjugate_gamma``),
the recorded swap sequence is reversed to obtain the word whose transport
moves each Majorana of ``to``-pair ``k`` onto slot ``k``'s positions.

``transform_gateset`` applies ``W^dag G W`` (side ``"left"``, the default)
or ``W G W^dag`` (side ``"right"``); published tables are ambiguous about
the side, so both are exposed and the tests record which side reproduces
which fixture.
"""

from dataclasses import dataclass

import numpy as np

from .braid import BraidWord, generator_unitary, word_unitary
from .encoding import sector_block
from .fock import PairingDefinition

_SIDES = ("left", "right")


@dataclass(frozen=True, eq=False)
class GateSet:
    """Labelled gates sharing one pairing definition and encoding."""

    definition: PairingDefinition
    gates: tuple[tuple[str, np.ndarray], ...]
    encoding: str = "sparse"

    def __post_init__(self):
        if self.encoding not in ("sparse", "dense"):
            raise ValueError(f"unknown encoding {self.encoding!r}")
        dim = 2 ** self.definition.modes
        if self.encoding == "dense":
            dim //= 2
        gates = tuple(
            (str(label), np.asarray(matrix, dtype=complex))
            for label, matrix in self.gates
        )
        object.__setattr__(self, "gates", gates)
        for label, matrix in gates:
            if matrix.shape != (dim, dim):
                raise ValueError(
                    f"gate {label!r} must be {dim}x{dim} for encoding "
                    f"{self.encoding!r}, got {matrix.shape}"
                )

    @property
    def dim(self) -> int:
        dim = 2 ** self.definition.modes
        return dim // 2 if self.encoding == "dense" else dim

    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.gates)

    def matrix(self, label: str) -> np.ndarray:
        for name, matrix in self.gates:
            if name == label:
                return matrix
        raise KeyError(label)


def generator_gateset(
    defn: PairingDefinition, orientation: int = 1, encoding: str = "sparse"
) -> GateSet:
    """All braid-generator unitaries of ``defn`` as a labelled gate set."""
    gates = []
    for i in range(1, defn.mf_count):
        matrix = generator_unitary(defn, i, orientation)
        if encoding == "dense":
            matrix = sector_block(matrix, defn.modes, "even")
        gates.append((f"U{i}", matrix))
    return GateSet(definition=defn, gates=tuple(gates), encoding=encoding)


def repairing_braid(
    from_def: PairingDefinition, to_def: PairingDefinition
) -> BraidWord:
    """Braid word rearranging ``from_def``'s pairing into ``to_def``'s.

    The word's operator transport sends each Majorana of ``to``-pair ``k``
    onto the two slots of pair ``k`` (up to sign), so conjugating a gate
    set by this word re-expresses it under the new definition.  Identical
    definitions give the empty word.
    """
    if from_def.mf_count != to_def.mf_count:
        raise ValueError(
            f"definitions pair different Majorana counts: "
            f"{from_def.mf_count} vs {to_def.mf_count}"
        )
    arrangement = [i for pair in from_def.pairs for i in pair]
    target = [i for pair in to_def.pairs for i in pair]
    swaps: list[int] = []
    for position, wanted in enumerate(target):
        current = arrangement.index(wanted)
        while current > position:
            # Swap slots (current, current+1) in 1-based terms: letter `current`.
            swaps.append(current)
            arrangement[current - 1], arrangement[current] = (
                arrangement[current],
                arrangement[current - 1],
            )
            current -= 1
    return BraidWord(tuple(reversed(swaps)), from_def.mf_count)


def transform_gateset(
    gateset: GateSet,
    word: BraidWord,
    orientation: int = 1,
    side: str = "left",
    new_definition: PairingDefinition | None = None,
) -> GateSet:
    """Conjugate every gate of a set by a braid word's unitary.

    ``side="left"`` applies ``W^dag G W``; ``side="right"`` applies
    ``W G W^dag``.  Dense gate sets are conjugated by the dense reduction
    of ``W`` (braid unitaries conserve parity, so the reduction exists).
    ``new_definition`` relabels the resulting set, defaulting to the old
    definition.
    """
    if side not in _SIDES:
        raise ValueError(f"side must be one of {_SIDES}, got {side!r}")
    if word.mf_count != gateset.definition.mf_count:
        raise ValueError(
            f"word is over {word.mf_count} strands but gate set has "
            f"{gateset.definition.mf_count} Majoranas"
        )
    w = word_unitary(gateset.definition, word, orientation)
    if gateset.encoding == "dense":
        w = sector_block(w, gateset.definition.modes, "even")
    w_dag = w.conj().T
    if side == "left":
        transformed = tuple(
            (label, w_dag @ matrix @ w) for label, matrix in gateset.gates
        )
    else:
        transformed = tuple(
            (label, w @ matrix @ w_dag) for label, matrix in gateset.gates
        )
    return GateSet(
        definition=new_definition or gateset.definition,
        gates=transformed,
        encoding=gateset.encoding,
    )
