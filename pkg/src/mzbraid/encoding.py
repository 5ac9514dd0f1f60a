"""Parity sectors and the dense (even-parity) qubit encoding.

Braid unitaries conserve total fermion parity, so they are block diagonal
with respect to the even/odd occupation sectors.  The *dense* encoding
keeps only the even block: with ``m`` modes, the last mode is the ancilla
whose occupation is fixed by evenness, and the remaining ``m - 1`` data
modes index the ``2**(m-1)`` dense basis states.  Dense basis order is by
the data bits ``n_1 ... n_{m-1}`` read as an integer, e.g. for two modes
``|0~> = |00>`` and ``|1~> = |11>``.

The *sparse* encoding is the untouched ``2**m`` Fock representation.
"""

from dataclasses import dataclass

import numpy as np

from .fock import PairingDefinition

_SECTORS = ("even", "odd")


@dataclass(frozen=True, eq=False)
class EncodedGate:
    """A unitary together with the encoding it lives in.

    ``encoding`` is ``"sparse"`` (full Fock space, dim ``2**m``) or
    ``"dense"`` (even-parity block, dim ``2**(m-1)``).  Unitarity is
    validated to 1e-12 at construction.
    """

    matrix: np.ndarray
    encoding: str
    definition: PairingDefinition

    def __post_init__(self):
        matrix = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", matrix)
        if self.encoding not in ("sparse", "dense"):
            raise ValueError(f"unknown encoding {self.encoding!r}")
        expected = 2 ** self.definition.modes
        if self.encoding == "dense":
            expected //= 2
        if matrix.shape != (expected, expected):
            raise ValueError(
                f"{self.encoding} gate for {self.definition.mf_count} Majoranas "
                f"must be {expected}x{expected}, got {matrix.shape}"
            )
        dev = np.max(np.abs(matrix.conj().T @ matrix - np.eye(expected)))
        if dev > 1e-12:
            raise ValueError(f"matrix is not unitary (deviation {dev:.3e})")

    @property
    def mf_count(self) -> int:
        return self.definition.mf_count

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def parity_sector_indices(defn: PairingDefinition) -> tuple[list[int], list[int]]:
    """Fock indices of the even and odd total-occupation sectors (ascending)."""
    even, odd = [], []
    for index in range(2 ** defn.modes):
        (even if index.bit_count() % 2 == 0 else odd).append(index)
    return even, odd


def _sector_fock_indices(modes: int, sector: str) -> list[int]:
    # Dense state d carries data bits n_1..n_{m-1}; the ancilla bit makes the
    # total occupation parity match the sector.  The resulting Fock indices
    # are automatically ascending in d.
    if sector not in _SECTORS:
        raise ValueError(f"sector must be one of {_SECTORS}, got {sector!r}")
    want_odd = 1 if sector == "odd" else 0
    indices = []
    for data in range(2 ** (modes - 1)):
        ancilla = (data.bit_count() + want_odd) % 2
        indices.append(2 * data + ancilla)
    return indices


def sector_block(
    matrix: np.ndarray,
    modes: int,
    sector: str = "even",
    tolerance: float = 1e-12,
) -> np.ndarray:
    """Extract one parity block of a parity-conserving operator.

    Raises ``ValueError`` when the matrix couples the sectors by more than
    ``tolerance`` (it would not act as a unitary on the block).
    """
    matrix = np.asarray(matrix, dtype=complex)
    dim = 2 ** modes
    if matrix.shape != (dim, dim):
        raise ValueError(f"expected a {dim}x{dim} matrix, got {matrix.shape}")
    keep = _sector_fock_indices(modes, sector)
    other = "odd" if sector == "even" else "even"
    drop = _sector_fock_indices(modes, other)
    cross = max(
        float(np.max(np.abs(matrix[np.ix_(keep, drop)]))),
        float(np.max(np.abs(matrix[np.ix_(drop, keep)]))),
    )
    if cross > tolerance:
        raise ValueError(
            f"matrix couples parity sectors (cross-sector mass {cross:.3e})"
        )
    return matrix[np.ix_(keep, keep)].copy()


def dense_reduce(gate: EncodedGate, sector: str = "even") -> EncodedGate:
    """Restrict a sparse gate to one parity sector (default: the even block).

    The reduction is a homomorphism: reducing a product equals the product
    of reductions.
    """
    if gate.encoding != "sparse":
        raise ValueError("dense_reduce expects a sparse-encoded gate")
    block = sector_block(gate.matrix, gate.definition.modes, sector)
    return EncodedGate(matrix=block, encoding="dense", definition=gate.definition)


def canonicalize_phase(
    matrix: np.ndarray, magnitude_tol: float = 1e-6
) -> tuple[np.ndarray, complex]:
    """Remove the global phase of a matrix in a reproducible way.

    Scans row-major for the first entry whose magnitude is within
    ``magnitude_tol`` of the largest, divides the matrix by that entry's
    phase (making it real positive), and returns ``(canonical, phase)``
    with ``matrix == phase * canonical``.
    """
    matrix = np.asarray(matrix, dtype=complex)
    flat = matrix.ravel()
    magnitudes = np.abs(flat)
    largest = float(magnitudes.max(initial=0.0))
    if largest == 0.0:
        raise ValueError("cannot canonicalize the zero matrix")
    pick = int(np.argmax(magnitudes >= largest - magnitude_tol))
    phase = flat[pick] / magnitudes[pick]
    return matrix / phase, complex(phase)


def phase_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Max entrywise distance between two matrices after phase alignment."""
    ca, _ = canonicalize_phase(a)
    cb, _ = canonicalize_phase(b)
    if ca.shape != cb.shape:
        raise ValueError(f"shape mismatch: {ca.shape} vs {cb.shape}")
    return float(np.max(np.abs(ca - cb)))


def equal_up_to_phase(a: np.ndarray, b: np.ndarray, tolerance: float = 1e-9) -> bool:
    """Whether two same-shaped unitaries differ only by a global phase.

    Uses the trace criterion ``|tr(a^dag b)| >= dim - tolerance``, which for
    unitary inputs is equivalent to entrywise phase alignment.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return bool(abs(np.trace(a.conj().T @ b)) >= a.shape[0] - tolerance)


def equal_up_to_phase_or_adjoint(
    a: np.ndarray, b: np.ndarray, tolerance: float = 1e-9
) -> bool:
    """Phase equality ignoring braid orientation (matches ``b`` or ``b^dag``)."""
    b = np.asarray(b, dtype=complex)
    return equal_up_to_phase(a, b, tolerance) or equal_up_to_phase(
        a, b.conj().T, tolerance
    )
