"""Tests for parity sectors, the dense (even-sector) reduction, and
phase-insensitive matrix comparison."""

import numpy as np
import pytest

from mzbraid.braid import BraidWord, generator_unitary, word_unitary
from mzbraid.encoding import (
    EncodedGate,
    canonicalize_phase,
    dense_reduce,
    equal_up_to_phase,
    equal_up_to_phase_or_adjoint,
    parity_sector_indices,
    phase_distance,
    sector_block,
)
from mzbraid.fock import PairingDefinition, gamma_matrix, number_matrix

SQ2 = np.sqrt(2.0)


def random_unitary(rng, dim):
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


# ---------------------------------------------------------------------------
# Sector bookkeeping


def test_sector_indices_two_modes():
    defn = PairingDefinition.adjacent(2)
    even, odd = parity_sector_indices(defn)
    assert even == [0, 3]
    assert odd == [1, 2]


def test_sector_indices_three_modes():
    defn = PairingDefinition.adjacent(3)
    even, odd = parity_sector_indices(defn)
    assert even == [0, 3, 5, 6]
    assert odd == [1, 2, 4, 7]
    assert sorted(even + odd) == list(range(8))


def test_dense_order_tracks_data_bits():
    # Dense basis state d carries data bits n_1..n_{m-1}; the ancilla mode
    # fixes overall parity. For three modes the ancilla occupation over the
    # even sector therefore reads (0, 1, 1, 0) in dense order.
    defn = PairingDefinition.adjacent(3)
    anc = number_matrix(defn, 3)
    block = sector_block(anc, defn.modes, "even")
    assert np.allclose(np.diag(block), [0, 1, 1, 0], atol=1e-15)
    assert np.allclose(block, np.diag(np.diag(block)), atol=1e-15)


def test_sector_block_rejects_parity_mixing():
    defn = PairingDefinition.adjacent(2)
    # gamma_1 is unitary but flips parity: all its weight is cross-sector.
    with pytest.raises(ValueError):
        sector_block(gamma_matrix(defn, 1), defn.modes, "even")


def test_sector_block_odd_sector():
    defn = PairingDefinition.adjacent(2)
    u2 = generator_unitary(defn, 2)
    odd = sector_block(u2, defn.modes, "odd")
    want = np.array([[1, 1j], [1j, 1]], dtype=complex) / SQ2
    assert np.max(np.abs(odd - want)) <= 1e-12


# ---------------------------------------------------------------------------
# Dense reduction


def test_dense_fixture_inner_exchange():
    defn = PairingDefinition.adjacent(2)
    gate = EncodedGate(generator_unitary(defn, 2), "sparse", defn)
    dense = dense_reduce(gate)
    want = np.array([[1, 1j], [1j, 1]], dtype=complex) / SQ2
    assert np.max(np.abs(dense.matrix - want)) <= 1e-12
    assert dense.encoding == "dense"
    assert dense.definition == defn


def test_dense_fixture_first_exchange_is_phase_gate():
    defn = PairingDefinition.adjacent(2)
    gate = EncodedGate(generator_unitary(defn, 1, orientation=-1), "sparse", defn)
    dense = dense_reduce(gate)
    s = np.array([[1, 0], [0, 1j]], dtype=complex)
    assert equal_up_to_phase(dense.matrix, s)


def test_dense_reduction_is_homomorphism():
    rng = np.random.default_rng(42)
    defn = PairingDefinition.adjacent(3)
    letters = [l for l in range(-5, 6) if l != 0]
    for _ in range(10):
        a = BraidWord(tuple(rng.choice(letters, size=rng.integers(1, 8))), 6)
        b = BraidWord(tuple(rng.choice(letters, size=rng.integers(1, 8))), 6)
        da = dense_reduce(EncodedGate(word_unitary(defn, a), "sparse", defn)).matrix
        db = dense_reduce(EncodedGate(word_unitary(defn, b), "sparse", defn)).matrix
        dab = dense_reduce(
            EncodedGate(
                word_unitary(defn, BraidWord(a.letters + b.letters, 6)),
                "sparse",
                defn,
            )
        ).matrix
        assert np.max(np.abs(dab - db @ da)) <= 1e-12


def test_dense_reduce_rejects_dense_input():
    defn = PairingDefinition.adjacent(2)
    gate = EncodedGate(np.eye(2, dtype=complex), "dense", defn)
    with pytest.raises(ValueError):
        dense_reduce(gate)


def test_encoded_gate_validation():
    defn = PairingDefinition.adjacent(2)
    with pytest.raises(ValueError):
        EncodedGate(np.eye(3, dtype=complex), "sparse", defn)  # wrong dim
    with pytest.raises(ValueError):
        EncodedGate(np.eye(4, dtype=complex) * 2.0, "sparse", defn)  # not unitary
    with pytest.raises(ValueError):
        EncodedGate(np.eye(4, dtype=complex), "weird", defn)  # unknown encoding
    gate = EncodedGate(np.eye(2, dtype=complex), "dense", defn)
    assert gate.mf_count == 4
    assert gate.dim == 2


# ---------------------------------------------------------------------------
# Phase canonicalisation and comparison


def test_canonicalize_phase_fixture():
    target = np.array([[1, 0], [0, -1j]], dtype=complex)
    rotated = np.exp(1j * np.pi / 4) * target
    canonical, phase = canonicalize_phase(rotated)
    assert np.max(np.abs(canonical - target)) <= 1e-12
    assert phase == pytest.approx(np.exp(1j * np.pi / 4), abs=1e-12)
    assert np.max(np.abs(phase * canonical - rotated)) <= 1e-12


def test_canonicalize_phase_uses_first_largest_entry():
    # Both entries have magnitude 1; the row-major first one is made
    # real positive.
    m = np.array([[0, 1j], [-1, 0]], dtype=complex)
    canonical, _ = canonicalize_phase(m)
    assert canonical[0, 1] == pytest.approx(1.0)
    assert canonical[1, 0] == pytest.approx(1j)


def test_canonicalize_phase_idempotent():
    rng = np.random.default_rng(3)
    for dim in (2, 4):
        u = random_unitary(rng, dim)
        once, _ = canonicalize_phase(u)
        twice, phase = canonicalize_phase(once)
        assert np.max(np.abs(once - twice)) <= 1e-12
        assert phase == pytest.approx(1.0, abs=1e-12)


def test_canonicalize_phase_rejects_zero_matrix():
    with pytest.raises(ValueError):
        canonicalize_phase(np.zeros((2, 2), dtype=complex))


def test_equal_up_to_phase_is_equivalence():
    rng = np.random.default_rng(11)
    u = random_unitary(rng, 4)
    v = np.exp(0.739j) * u
    w = np.exp(-2.1j) * v
    assert equal_up_to_phase(u, u)
    assert equal_up_to_phase(u, v) and equal_up_to_phase(v, u)
    assert equal_up_to_phase(u, w)
    assert not equal_up_to_phase(u, random_unitary(rng, 4))


def test_equal_up_to_phase_dim_mismatch():
    with pytest.raises(ValueError):
        equal_up_to_phase(np.eye(2, dtype=complex), np.eye(4, dtype=complex))


def test_equal_up_to_phase_or_adjoint():
    s = np.array([[1, 0], [0, 1j]], dtype=complex)
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    assert equal_up_to_phase_or_adjoint(s, s.conj().T)
    assert equal_up_to_phase_or_adjoint(s, 1j * s)
    assert not equal_up_to_phase_or_adjoint(s, x)


def test_phase_distance():
    rng = np.random.default_rng(5)
    u = random_unitary(rng, 4)
    assert phase_distance(u, np.exp(1.3j) * u) <= 1e-12
    v = random_unitary(rng, 4)
    d_uv = phase_distance(u, v)
    assert d_uv > 1e-3
    assert phase_distance(v, u) == pytest.approx(d_uv, abs=1e-12)
