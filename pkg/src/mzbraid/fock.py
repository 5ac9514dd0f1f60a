"""Fermionic Fock-space operators for Majorana-mode qubit systems.

Conventions, fixed once and used by every other module:

* ``m`` spinless fermionic modes span a ``2**m``-dimensional Fock space.
  The basis state ``|n_1 n_2 ... n_m>`` sits at integer index
  ``sum_j n_j * 2**(m - j)`` (``n_1`` is the most significant bit) and is
  defined as the ordered product ``adag_1**n_1 * ... * adag_m**n_m |vac>``.
  All fermionic signs (Jordan-Wigner strings) follow from that creation
  order: ``a_j`` acting on an occupied mode picks up ``(-1)**(n_1+...+n_{j-1})``.
* A pairing definition assigns the ``2m`` Majorana operators to modes.
  Pair ``(p_k, q_k)`` defines mode ``k`` through
  ``a_k = (gamma_{p_k} + 1j * gamma_{q_k}) / 2``, equivalently
  ``gamma_{p_k} = a_k + adag_k`` and ``gamma_{q_k} = 1j * (adag_k - a_k)``.
  With this normalisation every Majorana operator is Hermitian, squares to
  the identity, and distinct ones anticommute:
  ``{gamma_i, gamma_j} = 2 * delta_ij * I``.
* Mode occupation relates to a Majorana pair by
  ``adag_k a_k = (I + 1j * gamma_{p_k} gamma_{q_k}) / 2``, so even
  occupation of mode ``k`` is the ``-1`` eigenspace of
  ``1j * gamma_{p_k} gamma_{q_k}``.

All operators are returned as dense ``numpy`` arrays of ``complex`` dtype;
every function is pure and returns a fresh array.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

_ANNIHILATE = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
_PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
_ID2 = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class FockSpace:
    """Fock space of ``modes`` spinless fermionic modes (dimension ``2**modes``)."""

    modes: int

    def __post_init__(self):
        if not isinstance(self.modes, int) or self.modes < 1:
            raise ValueError("modes must be a positive integer")

    @property
    def dim(self) -> int:
        return 2 ** self.modes

    def occupation(self, index: int, mode: int) -> int:
        """Occupation number of ``mode`` (1-based) in basis state ``index``."""
        if not 0 <= index < self.dim:
            raise ValueError(f"basis index {index} outside 0..{self.dim - 1}")
        if not 1 <= mode <= self.modes:
            raise ValueError(f"mode index {mode} outside 1..{self.modes}")
        return (index >> (self.modes - mode)) & 1


@dataclass(frozen=True)
class PairingDefinition:
    """Assignment of ``2m`` Majorana operators to ``m`` fermionic modes.

    ``pairs[k-1] == (p_k, q_k)`` means mode ``k`` is built from Majoranas
    ``p_k`` (real part) and ``q_k`` (imaginary part).  The pairs must be
    disjoint and cover ``{1, ..., 2m}`` exactly.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(p), int(q)) for p, q in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not pairs:
            raise ValueError("a pairing definition needs at least one pair")
        flat = [i for pair in pairs for i in pair]
        if sorted(flat) != list(range(1, len(flat) + 1)):
            raise ValueError(
                f"pairs must partition 1..{len(flat)} exactly, got {pairs}"
            )

    @classmethod
    def adjacent(cls, modes: int) -> "PairingDefinition":
        """The standard pairing ((1,2), (3,4), ...): neighbours form modes."""
        if modes < 1:
            raise ValueError("modes must be a positive integer")
        return cls(tuple((2 * k - 1, 2 * k) for k in range(1, modes + 1)))

    @property
    def modes(self) -> int:
        return len(self.pairs)

    @property
    def mf_count(self) -> int:
        return 2 * len(self.pairs)

    def space(self) -> FockSpace:
        return FockSpace(len(self.pairs))

    def pair_of(self, majorana_index: int) -> int:
        """Mode number (1-based) whose pair contains ``majorana_index``."""
        for k, pair in enumerate(self.pairs, start=1):
            if majorana_index in pair:
                return k
        raise ValueError(
            f"majorana index {majorana_index} outside 1..{self.mf_count}"
        )


@dataclass(frozen=True, eq=False)
class ParityOperator:
    """Total fermion-parity operator together with its sign convention.

    ``matrix`` is the product over modes of ``1j * gamma_p gamma_q``; it is
    diagonal in the occupation basis.  ``even_sign`` records which eigenvalue
    the even-occupation sector carries (it alternates with the mode count),
    so callers partition sectors without baking in a global sign.
    """

    matrix: np.ndarray
    even_sign: int


@lru_cache(maxsize=None)
def _ladder_cached(modes: int, j: int) -> np.ndarray:
    factors = [_PAULI_Z] * (j - 1) + [_ANNIHILATE] + [_ID2] * (modes - j)
    out = factors[0]
    for factor in factors[1:]:
        out = np.kron(out, factor)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def _gamma_cached(pairs: tuple[tuple[int, int], ...], i: int) -> np.ndarray:
    modes = len(pairs)
    for k, (p, q) in enumerate(pairs, start=1):
        if i == p or i == q:
            a = _ladder_cached(modes, k)
            adag = a.conj().T
            out = a + adag if i == p else 1j * (adag - a)
            out.setflags(write=False)
            return out
    raise ValueError(f"majorana index {i} outside 1..{2 * modes}")


def ladder_matrix(space: FockSpace, j: int) -> np.ndarray:
    """Annihilation operator ``a_j`` on ``space``, as a dense matrix.

    Built as the Jordan-Wigner product Z x ... x Z x A x I x ... x I with
    the single-mode annihilator A = [[0, 1], [0, 0]] in slot ``j``; the
    Z-string realises the sign ``(-1)**(n_1 + ... + n_{j-1})``.
    """
    if not 1 <= j <= space.modes:
        raise ValueError(f"mode index {j} outside 1..{space.modes}")
    return _ladder_cached(space.modes, j).copy()


def gamma_matrix(defn: PairingDefinition, i: int) -> np.ndarray:
    """Majorana operator ``gamma_i`` under the pairing ``defn``.

    Returns ``a_k + adag_k`` when ``i`` is the real member of pair ``k`` and
    ``1j * (adag_k - a_k)`` when it is the imaginary member.
    """
    if not 1 <= i <= defn.mf_count:
        raise ValueError(f"majorana index {i} outside 1..{defn.mf_count}")
    return _gamma_cached(defn.pairs, i).copy()


def number_matrix(defn: PairingDefinition, k: int) -> np.ndarray:
    """Occupation-number operator ``adag_k a_k`` for mode ``k``."""
    if not 1 <= k <= defn.modes:
        raise ValueError(f"mode index {k} outside 1..{defn.modes}")
    a = ladder_matrix(defn.space(), k)
    return a.conj().T @ a


def parity_matrix(defn: PairingDefinition) -> ParityOperator:
    """Total-parity operator: product over pairs of ``1j * gamma_p gamma_q``."""
    product = np.eye(2 ** defn.modes, dtype=complex)
    for p, q in defn.pairs:
        product = product @ (1j * gamma_matrix(defn, p) @ gamma_matrix(defn, q))
    even_sign = int(round(product[0, 0].real))
    return ParityOperator(matrix=product, even_sign=even_sign)
