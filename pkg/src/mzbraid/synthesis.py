"""Exhaustive synthesis of braid words for target gates.

The gates reachable by braiding a fixed number of Majoranas form a finite
group up to global phase, so the whole image can be enumerated: breadth-
first closure from the identity, multiplying by every generator and every
inverse, with each product reduced to a canonical representative (global
phase removed, entries rounded to a 1e-8 grid) and hashed byte-exactly.
BFS order makes the stored word for each element shortest, with ties
broken lexicographically by letters (generation order -g, ..., -1, 1, ..., g).

Synthesis is then a table lookup: a hit returns the stored word, a miss is
a certificate that the target is *not* representable at that Majorana
count and encoding, because the table is the complete closure.
"""

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .braid import BraidWord, generator_unitary
from .encoding import canonicalize_phase, sector_block
from .fock import PairingDefinition

KEY_DECIMALS = 8
DEFAULT_ELEMENT_CAP = 10_000_000

_POLES = {
    "+z": np.array([1.0, 0.0], dtype=complex),
    "-z": np.array([0.0, 1.0], dtype=complex),
    "+x": np.array([1.0, 1.0], dtype=complex) / np.sqrt(2.0),
    "-x": np.array([1.0, -1.0], dtype=complex) / np.sqrt(2.0),
    "+y": np.array([1.0, 1.0j], dtype=complex) / np.sqrt(2.0),
    "-y": np.array([1.0, -1.0j], dtype=complex) / np.sqrt(2.0),
}


def canonical_key(matrix: np.ndarray, decimals: int = KEY_DECIMALS) -> bytes:
    """Byte-exact hash key of a unitary modulo global phase.

    Canonicalizes the phase, rounds every entry to the given decimal grid,
    normalises negative zeros, and returns the raw bytes.  Braid-image
    entries sit far from grid midpoints, so rounding is stable against the
    float error accumulated by matrix products.
    """
    canonical, _ = canonicalize_phase(np.asarray(matrix, dtype=complex))
    rounded = np.round(canonical, decimals) + 0.0
    return rounded.tobytes()


def key_to_matrix(key: bytes, dim: int) -> np.ndarray:
    """Reconstruct the canonical matrix stored in a table key."""
    return np.frombuffer(key, dtype=complex).reshape(dim, dim).copy()


@dataclass(eq=False)
class GroupIndex:
    """Complete closure of the braid image with shortest words.

    ``table`` maps canonical key bytes to the letters of the shortest
    braid word realising that projective element; ``matrices`` maps the
    same keys to the full-precision canonical matrices (the key itself
    only keeps the rounded grid values).
    """

    mf_count: int
    encoding: str
    orientation: int
    dim: int
    table: dict[bytes, tuple[int, ...]]
    matrices: dict[bytes, np.ndarray]

    @property
    def order(self) -> int:
        return len(self.table)

    def lookup(self, matrix: np.ndarray) -> tuple[int, ...] | None:
        return self.table.get(canonical_key(matrix))

    def items(self) -> Iterator[tuple[np.ndarray, tuple[int, ...]]]:
        for key, word in self.table.items():
            yield self.matrices[key], word


@dataclass(frozen=True)
class NotRepresentable:
    """Certificate that a target is outside the enumerated braid image."""

    mf_count: int
    encoding: str
    orientation: int
    image_order: int

    def __str__(self) -> str:
        return (
            f"target is not realisable by braiding {self.mf_count} Majoranas "
            f"in the {self.encoding} encoding (orientation {self.orientation:+d}); "
            f"the full image has {self.image_order} elements up to phase"
        )


@dataclass(frozen=True)
class PoleReport:
    """Bloch-sphere poles reached from |0> by the enumerated image."""

    reached_poles: tuple[str, ...]
    off_pole_count: int

    @property
    def complete(self) -> bool:
        return self.off_pole_count == 0 and len(self.reached_poles) == 6


def _generator_matrices(
    mf_count: int, encoding: str, orientation: int
) -> list[tuple[int, np.ndarray]]:
    defn = PairingDefinition.adjacent(mf_count // 2)
    letters = [l for l in range(-(mf_count - 1), mf_count) if l != 0]
    out = []
    for letter in letters:
        sign = orientation if letter > 0 else -orientation
        matrix = generator_unitary(defn, abs(letter), sign)
        if encoding == "dense":
            matrix = sector_block(matrix, defn.modes, "even")
        out.append((letter, matrix))
    return out


def enumerate_image(
    mf_count: int,
    encoding: str = "dense",
    orientation: int = 1,
    cap: int = DEFAULT_ELEMENT_CAP,
) -> GroupIndex:
    """Enumerate every gate reachable by braiding, up to global phase.

    Runs a breadth-first closure from the identity over all generators and
    inverses.  Words are stored at first visit, so each element keeps a
    shortest word (lexicographically least among equals).  Raises
    ``RuntimeError`` if the closure exceeds ``cap`` elements.
    """
    if mf_count not in (4, 6, 8):
        raise ValueError(f"mf_count must be 4, 6 or 8, got {mf_count}")
    if encoding not in ("sparse", "dense"):
        raise ValueError(f"unknown encoding {encoding!r}")
    if orientation not in (1, -1):
        raise ValueError(f"orientation must be +1 or -1, got {orientation!r}")
    generators = _generator_matrices(mf_count, encoding, orientation)
    dim = generators[0][1].shape[0]
    identity = np.eye(dim, dtype=complex)
    table: dict[bytes, tuple[int, ...]] = {canonical_key(identity): ()}
    matrices: dict[bytes, np.ndarray] = {canonical_key(identity): identity}
    frontier: list[tuple[np.ndarray, tuple[int, ...]]] = [(identity, ())]
    while frontier:
        next_frontier: list[tuple[np.ndarray, tuple[int, ...]]] = []
        for matrix, word in frontier:
            for letter, gen in generators:
                # Appending a letter means it acts last: left-multiply.
                product = gen @ matrix
                key = canonical_key(product)
                if key in table:
                    continue
                if len(table) >= cap:
                    raise RuntimeError(
                        f"closure exceeded the element cap ({cap}); "
                        f"raise `cap` to keep enumerating"
                    )
                grown = word + (letter,)
                table[key] = grown
                matrices[key] = canonicalize_phase(product)[0]
                next_frontier.append((product, grown))
        frontier = next_frontier
    return GroupIndex(
        mf_count=mf_count,
        encoding=encoding,
        orientation=orientation,
        dim=dim,
        table=table,
        matrices=matrices,
    )


def synthesize(
    target: np.ndarray, index: GroupIndex, unitarity_tol: float = 1e-8
) -> BraidWord | NotRepresentable:
    """Find the shortest braid word realising ``target`` up to global phase.

    Returns a ``BraidWord`` on a table hit and a ``NotRepresentable``
    certificate on a miss.  Raises ``ValueError`` for shape or unitarity
    problems with the target.
    """
    target = np.asarray(target, dtype=complex)
    if target.shape != (index.dim, index.dim):
        raise ValueError(
            f"target must be {index.dim}x{index.dim} for this index, "
            f"got {target.shape}"
        )
    dev = np.max(np.abs(target.conj().T @ target - np.eye(index.dim)))
    if dev > unitarity_tol:
        raise ValueError(f"target is not unitary (deviation {dev:.3e})")
    letters = index.lookup(target)
    if letters is None:
        return NotRepresentable(
            mf_count=index.mf_count,
            encoding=index.encoding,
            orientation=index.orientation,
            image_order=index.order,
        )
    return BraidWord(letters, index.mf_count)


def pole_reachability(index: GroupIndex, tolerance: float = 1e-6) -> PoleReport:
    """Classify the orbit of |0> under a single-qubit dense image.

    Every image element is applied to |0> and the result matched against
    the six Bloch poles up to phase; states matching no pole are counted.
    The default tolerance absorbs the key grid's rounding (order 1e-8)
    while distinct poles overlap at 1/sqrt(2).
    """
    if index.dim != 2:
        raise ValueError("pole reachability needs a single-qubit (dim 2) index")
    start = np.array([1.0, 0.0], dtype=complex)
    reached: set[str] = set()
    off_pole = 0
    for matrix, _ in index.items():
        state = matrix @ start
        state = state / np.linalg.norm(state)
        for name, pole in _POLES.items():
            if abs(np.vdot(pole, state)) >= 1.0 - tolerance:
                reached.add(name)
                break
        else:
            off_pole += 1
    return PoleReport(
        reached_poles=tuple(sorted(reached)), off_pole_count=off_pole
    )
