"""Tests for the Fock-space backend: ladder operators, Majorana matrices,
number and parity operators, and pairing-definition bookkeeping.

The ladder matrices are checked against an independent oracle that builds
annihilation operators directly from occupation bit patterns, so the
Jordan-Wigner construction in the package is cross-validated rather than
compared with itself.
"""

import numpy as np
import pytest

from mzbraid.fock import (
    FockSpace,
    PairingDefinition,
    gamma_matrix,
    ladder_matrix,
    number_matrix,
    parity_matrix,
)

ALG_TOL = 1e-12


def oracle_annihilation(modes: int, j: int) -> np.ndarray:
    """Annihilation operator for mode j built by bit twiddling.

    Basis index encodes occupations MSB-first: bit (modes - k) holds n_k.
    Acting on an occupied state removes the bit and picks up a sign equal
    to the parity of the occupations of all earlier modes.
    """
    dim = 2**modes
    out = np.zeros((dim, dim), dtype=complex)
    bit = modes - j
    for src in range(dim):
        if not (src >> bit) & 1:
            continue
        dst = src & ~(1 << bit)
        earlier = src >> (bit + 1)  # occupations of modes 1..j-1
        sign = -1.0 if bin(earlier).count("1") % 2 else 1.0
        out[dst, src] = sign
    return out


# ---------------------------------------------------------------------------
# FockSpace / PairingDefinition bookkeeping


def test_fock_space_dimensions():
    assert FockSpace(1).dim == 2
    assert FockSpace(3).dim == 8


def test_fock_space_occupation_bits():
    space = FockSpace(3)
    # index 6 = 110b: modes 1 and 2 occupied, mode 3 empty
    assert [space.occupation(6, k) for k in (1, 2, 3)] == [1, 1, 0]
    assert [space.occupation(1, k) for k in (1, 2, 3)] == [0, 0, 1]


def test_fock_space_rejects_bad_args():
    with pytest.raises(ValueError):
        FockSpace(0)
    space = FockSpace(2)
    with pytest.raises(ValueError):
        space.occupation(4, 1)
    with pytest.raises(ValueError):
        space.occupation(0, 3)


def test_adjacent_pairing():
    defn = PairingDefinition.adjacent(3)
    assert defn.pairs == ((1, 2), (3, 4), (5, 6))
    assert defn.modes == 3
    assert defn.mf_count == 6
    assert defn.space().dim == 8


def test_pair_of_lookup():
    defn = PairingDefinition(((1, 3), (2, 4)))
    assert defn.pair_of(1) == 1
    assert defn.pair_of(3) == 1
    assert defn.pair_of(4) == 2
    with pytest.raises(ValueError):
        defn.pair_of(5)


@pytest.mark.parametrize(
    "pairs",
    [
        ((1, 2), (2, 3)),  # index used twice
        (),  # empty
        ((1, 2), (3, 5)),  # out of range
        ((1, 1), (2, 3)),  # degenerate pair
        ((0, 1), (2, 3)),  # indices must start at 1
    ],
)
def test_pairing_definition_rejects_invalid(pairs):
    with pytest.raises(ValueError):
        PairingDefinition(pairs)


# ---------------------------------------------------------------------------
# Ladder operators against the bit-twiddling oracle


@pytest.mark.parametrize("modes", [1, 2, 3, 4])
def test_ladder_matches_oracle(modes):
    space = FockSpace(modes)
    for j in range(1, modes + 1):
        got = ladder_matrix(space, j)
        want = oracle_annihilation(modes, j)
        assert np.array_equal(got, want)


def test_ladder_fixture_single_mode():
    a = ladder_matrix(FockSpace(1), 1)
    assert np.array_equal(a, np.array([[0, 1], [0, 0]], dtype=complex))


def test_ladder_fixture_string_sign():
    # a_2 |11> = -|10>: the string over mode 1 contributes the minus sign.
    a2 = ladder_matrix(FockSpace(2), 2)
    col = a2[:, 3]
    assert np.array_equal(col, np.array([0, 0, -1, 0], dtype=complex))
    # a_1 |11> = +|01>: nothing precedes mode 1.
    a1 = ladder_matrix(FockSpace(2), 1)
    assert np.array_equal(a1[:, 3], np.array([0, 1, 0, 0], dtype=complex))


@pytest.mark.parametrize("modes", [1, 2, 3, 4])
def test_canonical_anticommutation_relations(modes):
    space = FockSpace(modes)
    eye = np.eye(space.dim)
    ops = [ladder_matrix(space, j) for j in range(1, modes + 1)]
    for i, ai in enumerate(ops):
        assert np.max(np.abs(ai @ ai)) == 0.0
        for j, aj in enumerate(ops):
            anti = ai @ aj + aj @ ai
            assert np.max(np.abs(anti)) <= ALG_TOL
            mixed = ai @ aj.conj().T + aj.conj().T @ ai
            want = eye if i == j else np.zeros_like(eye)
            assert np.max(np.abs(mixed - want)) <= ALG_TOL


def test_ladder_rejects_bad_mode():
    space = FockSpace(2)
    with pytest.raises(ValueError):
        ladder_matrix(space, 0)
    with pytest.raises(ValueError):
        ladder_matrix(space, 3)


# ---------------------------------------------------------------------------
# Majorana matrices


def test_gamma_single_mode_fixtures():
    defn = PairingDefinition.adjacent(1)
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    y = np.array([[0, -1j], [1j, 0]], dtype=complex)
    assert np.allclose(gamma_matrix(defn, 1), x, atol=ALG_TOL)
    assert np.allclose(gamma_matrix(defn, 2), y, atol=ALG_TOL)


@pytest.mark.parametrize(
    "defn",
    [
        PairingDefinition.adjacent(2),
        PairingDefinition(((1, 3), (2, 4))),
        PairingDefinition(((1, 4), (2, 3))),
        PairingDefinition.adjacent(4),
    ],
    ids=lambda d: "-".join(f"{p}{q}" for p, q in d.pairs),
)
def test_gamma_matches_ladder_combination(defn):
    # gamma_{p_k} = a_k + a_k^dag and gamma_{q_k} = -i(a_k - a_k^dag),
    # with the ladder taken from the independent oracle.
    modes = defn.modes
    for k, (p, q) in enumerate(defn.pairs, start=1):
        a = oracle_annihilation(modes, k)
        adg = a.conj().T
        assert np.allclose(gamma_matrix(defn, p), a + adg, atol=ALG_TOL)
        assert np.allclose(gamma_matrix(defn, q), -1j * (a - adg), atol=ALG_TOL)


@pytest.mark.parametrize("modes", [1, 2, 3, 4, 5])
def test_gamma_algebra(modes):
    defn = PairingDefinition.adjacent(modes)
    dim = 2**modes
    eye = np.eye(dim)
    gammas = [gamma_matrix(defn, i) for i in range(1, 2 * modes + 1)]
    for i, gi in enumerate(gammas):
        assert np.max(np.abs(gi - gi.conj().T)) <= ALG_TOL  # Hermitian
        assert np.max(np.abs(gi @ gi - eye)) <= ALG_TOL  # squares to identity
        for gj in gammas[i + 1 :]:
            anti = gi @ gj + gj @ gi
            assert np.max(np.abs(anti)) <= ALG_TOL


def test_gamma_rejects_out_of_range():
    defn = PairingDefinition.adjacent(2)
    with pytest.raises(ValueError):
        gamma_matrix(defn, 0)
    with pytest.raises(ValueError):
        gamma_matrix(defn, 5)


def test_gamma_result_is_caller_owned():
    # Returned arrays must be private copies: mutating one must not leak
    # into later calls.
    defn = PairingDefinition.adjacent(2)
    first = gamma_matrix(defn, 1)
    first[0, 0] = 99.0
    again = gamma_matrix(defn, 1)
    assert again[0, 0] == 0.0


# ---------------------------------------------------------------------------
# Number and parity operators


@pytest.mark.parametrize("modes", [1, 2, 3])
def test_number_operator_diagonal(modes):
    defn = PairingDefinition.adjacent(modes)
    space = defn.space()
    for k in range(1, modes + 1):
        num = number_matrix(defn, k)
        assert np.max(np.abs(num - np.diag(np.diag(num)))) == 0.0
        diag = np.real(np.diag(num))
        want = [space.occupation(s, k) for s in range(space.dim)]
        assert np.allclose(diag, want, atol=ALG_TOL)


def test_number_operator_from_pair_identity():
    # (1 + i gamma_p gamma_q) / 2 reproduces the occupation projector for
    # non-adjacent pairings too.
    defn = PairingDefinition(((1, 3), (2, 4)))
    eye = np.eye(4)
    for k, (p, q) in enumerate(defn.pairs, start=1):
        gp = gamma_matrix(defn, p)
        gq = gamma_matrix(defn, q)
        combo = 0.5 * (eye + 1j * (gp @ gq))
        assert np.allclose(combo, number_matrix(defn, k), atol=ALG_TOL)


def test_parity_single_mode_fixture():
    op = parity_matrix(PairingDefinition.adjacent(1))
    assert np.allclose(op.matrix, np.diag([-1.0, 1.0]), atol=ALG_TOL)
    assert op.even_sign == -1


def test_parity_two_modes_fixture():
    op = parity_matrix(PairingDefinition.adjacent(2))
    assert np.allclose(op.matrix, np.diag([1.0, -1.0, -1.0, 1.0]), atol=ALG_TOL)
    assert op.even_sign == 1


@pytest.mark.parametrize("modes", [1, 2, 3, 4])
def test_parity_structure(modes):
    defn = PairingDefinition.adjacent(modes)
    op = parity_matrix(defn)
    dim = 2**modes
    assert np.max(np.abs(op.matrix @ op.matrix - np.eye(dim))) <= ALG_TOL
    assert op.even_sign == (-1) ** modes
    diag = np.real(np.diag(op.matrix))
    for s in range(dim):
        occupied = bin(s).count("1")
        assert diag[s] == pytest.approx(op.even_sign * (-1) ** occupied)


def test_parity_independent_of_pairing_choice():
    # Total parity only depends on which modes exist, not on how the
    # Majoranas are paired up.
    a = parity_matrix(PairingDefinition.adjacent(2))
    b = parity_matrix(PairingDefinition(((1, 3), (2, 4))))
    assert np.allclose(a.matrix, b.matrix, atol=ALG_TOL)
    assert a.even_sign == b.even_sign
