"""Closed-form dense gates for braid generators on the standard pairing.

For ``n + 2`` Majoranas under the adjacent pairing, the dense (even-parity)
gate of each braid generator has an explicit tensor-product form on the
``n/2`` data qubits (dimension ``2**(n/2)``).  With ``S = diag(1, 1j)``:

* ``i < n`` odd (both Majoranas inside data pair ``(i+1)/2``):
  ``I x ... x S x ... x I`` with ``S`` in slot ``(i+1)/2``.
* ``i < n`` even (straddles data pairs ``i/2`` and ``i/2 + 1``):
  ``(I + 1j * (X x X on those slots)) / sqrt(2)``.
* ``i == n`` (couples the last data pair to the ancilla pair):
  ``(I + 1j * (X on slot n/2)) / sqrt(2)``.
* ``i == n + 1`` (inside the ancilla pair): defined recursively by
  ``F(n) = F(n-2) (+) 1j * F(n-2)^dag`` with ``F(2) = S``, a diagonal
  matrix with entries in ``{1, 1j}``.

These forms equal the dense reduction of the corresponding braid
unitaries up to global phase and orientation; the cross-validation lives
in the test suite, keeping this module exact and exponential-free.
"""

import math

import numpy as np

IDENTITY_2 = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PHASE_S = np.array([[1, 0], [0, 1j]], dtype=complex)
GATE_T = np.array([[1, 0], [0, np.exp(1j * np.pi / 4)]], dtype=complex)
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2.0)

_SQRT2 = math.sqrt(2.0)

_ANGLE_TOKENS = {
    "pi": math.pi,
    "-pi": -math.pi,
    "pi/2": math.pi / 2,
    "-pi/2": -math.pi / 2,
    "pi/4": math.pi / 4,
    "-pi/4": -math.pi / 4,
}


def kron_chain(*factors: np.ndarray) -> np.ndarray:
    """Tensor product of the given matrices, left to right."""
    if not factors:
        raise ValueError("kron_chain needs at least one factor")
    out = np.asarray(factors[0], dtype=complex)
    for factor in factors[1:]:
        out = np.kron(out, np.asarray(factor, dtype=complex))
    return out


def rotation_x(theta: float) -> np.ndarray:
    """Single-qubit x-rotation cos(theta/2) I - 1j sin(theta/2) X."""
    return math.cos(theta / 2) * IDENTITY_2 - 1j * math.sin(theta / 2) * PAULI_X


def named_gate(name: str) -> np.ndarray:
    """Look up a 2x2 gate by name.

    Accepts I, X, Y, Z, H, S, Sdg (also written "S†"/"Sdag"), T, and
    ``Rx(angle)`` where the angle is a float literal or one of
    ``pi, -pi, pi/2, -pi/2, pi/4, -pi/4``.
    """
    text = name.strip()
    plain = {
        "I": IDENTITY_2,
        "X": PAULI_X,
        "Y": PAULI_Y,
        "Z": PAULI_Z,
        "H": HADAMARD,
        "S": PHASE_S,
        "Sdg": PHASE_S.conj().T,
        "Sdag": PHASE_S.conj().T,
        "S†": PHASE_S.conj().T,
        "T": GATE_T,
    }
    if text in plain:
        return plain[text].copy()
    if text.lower().startswith("rx(") and text.endswith(")"):
        body = text[3:-1].strip().replace(" ", "")
        if body in _ANGLE_TOKENS:
            return rotation_x(_ANGLE_TOKENS[body])
        try:
            return rotation_x(float(body))
        except ValueError:
            raise ValueError(f"cannot parse rotation angle {body!r}") from None
    raise ValueError(f"unknown gate name {name!r}")


def braid_index_kind(n: int, i: int) -> str:
    """Classify generator ``i`` of the ``n + 2`` Majorana dense family.

    Returns one of ``nonancillary-odd``, ``nonancillary-even``,
    ``ancillary-even``, ``ancillary-odd``.
    """
    _validate_family(n, i)
    region = "nonancillary" if i < n else "ancillary"
    parity = "odd" if i % 2 == 1 else "even"
    return f"{region}-{parity}"


def _validate_family(n: int, i: int) -> None:
    if n < 2 or n % 2 != 0:
        raise ValueError(f"n must be an even integer >= 2, got {n}")
    if not 1 <= i <= n + 1:
        raise ValueError(f"generator index {i} outside 1..{n + 1}")


def _direct_sum(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros((a.shape[0] + b.shape[0], a.shape[1] + b.shape[1]), dtype=complex)
    out[: a.shape[0], : a.shape[1]] = a
    out[a.shape[0] :, a.shape[1] :] = b
    return out


def closed_form(n: int, i: int) -> np.ndarray:
    """Dense gate of braid generator ``i`` for ``n + 2`` Majoranas.

    ``n`` is twice the data-qubit count; the result is ``2**(n/2)``
    dimensional.  See the module docstring for the four families.
    """
    _validate_family(n, i)
    qubits = n // 2
    if i < n and i % 2 == 1:
        slot = (i + 1) // 2
        factors = [IDENTITY_2] * qubits
        factors[slot - 1] = PHASE_S
        return kron_chain(*factors)
    if i < n and i % 2 == 0:
        slot = i // 2
        factors = [IDENTITY_2] * qubits
        factors[slot - 1] = PAULI_X
        factors[slot] = PAULI_X
        return (np.eye(2 ** qubits, dtype=complex) + 1j * kron_chain(*factors)) / _SQRT2
    if i == n:
        factors = [IDENTITY_2] * qubits
        factors[qubits - 1] = PAULI_X
        return (np.eye(2 ** qubits, dtype=complex) + 1j * kron_chain(*factors)) / _SQRT2
    # i == n + 1: recursive ancillary-odd family.
    if n == 2:
        return PHASE_S.copy()
    inner = closed_form(n - 2, n - 1)
    return _direct_sum(inner, 1j * inner.conj().T)
