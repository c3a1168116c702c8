"""Mutually unbiased bases: unbiasedness, displacement operators, stabilizer
structure, label transport under conjugation, and the 2-design identity."""

import math

import numpy as np
import pytest

from wigner_codes import (
    INFINITY,
    MubSet,
    canonical_basis_labels,
    clock_op,
    conjugated_mub_label,
    overlap_deviation,
    shift_op,
    stabilizer_projector,
    weyl_op,
)
from conftest import SUPPORTED_Q, get_field, get_mub


@pytest.mark.parametrize("q", SUPPORTED_Q)
def test_bases_are_mutually_unbiased(q):
    assert overlap_deviation(get_mub(q)) < 1e-9


@pytest.mark.parametrize("q", SUPPORTED_Q)
def test_each_basis_is_orthonormal_and_complete(q):
    m = get_mub(q)
    for b in range(q + 1):
        u = m.basis_matrix(b)
        np.testing.assert_allclose(u.conj().T @ u, np.eye(q), atol=1e-12)
        total = sum(m.projector(b, v) for v in range(q))
        np.testing.assert_allclose(total, np.eye(q), atol=1e-12)


def test_qubit_bases_are_the_pauli_eigenbases():
    m = get_mub(2)
    s = 1 / math.sqrt(2)
    np.testing.assert_allclose(m.basis_matrix(INFINITY), np.eye(2), atol=1e-15)
    f = get_field(2)
    np.testing.assert_allclose(
        m.basis_matrix(f.zero), np.array([[s, s], [s, -s]]), atol=1e-15
    )
    np.testing.assert_allclose(
        m.basis_matrix(f.one), np.array([[s, s], [1j * s, -1j * s]]), atol=1e-15
    )


def test_canonical_label_order():
    f = get_field(4)
    labels = canonical_basis_labels(f)
    assert labels[0] is INFINITY
    assert labels[1] == f.zero
    assert [e.index for e in labels[2:]] == [e.index for e in f.alpha_powers]
    m = get_mub(4)
    assert m.position(INFINITY) == 0
    assert m.position(f.zero) == 1
    assert m.label_at(2) == f.one
    with pytest.raises(ValueError, match="basis label"):
        m.position(get_field(2).one)


def test_teichmuller_coordinates():
    m = get_mub(4)
    f = m.field
    assert [m.teich_index(v) for v in f.elements] == [0, 1, 2, 3]
    with pytest.raises(ValueError, match="characteristic 2"):
        get_mub(3).teich_index(get_field(3).one)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_shift_and_clock_relations(q):
    f = get_field(q)
    for x in f.elements:
        for z in f.elements:
            sx, cz = shift_op(f, x), clock_op(f, z)
            # commuting the clock past the shift costs the phase omega^tr(x z)
            lhs = cz @ sx
            rhs = f.omega_power((x * z).trace()) * (sx @ cz)
            np.testing.assert_allclose(lhs, rhs, atol=1e-12)
    # shifts and clocks are separately abelian one-parameter groups
    a, b = f.alpha, f.one
    np.testing.assert_allclose(
        shift_op(f, a) @ shift_op(f, b), shift_op(f, a + b), atol=1e-12
    )
    np.testing.assert_allclose(
        clock_op(f, a) @ clock_op(f, b), clock_op(f, a + b), atol=1e-12
    )


@pytest.mark.parametrize("q", [2, 3, 4])
def test_unphased_weyl_composition(q):
    f = get_field(q)
    els = f.elements
    for x in els:
        for z in els:
            d1 = weyl_op(f, x, z, phased=False).matrix
            for xp in els:
                for zp in els:
                    d2 = weyl_op(f, xp, zp, phased=False).matrix
                    expect = f.omega_power((xp * z).trace()) * weyl_op(
                        f, x + xp, z + zp, phased=False
                    ).matrix
                    np.testing.assert_allclose(d1 @ d2, expect, atol=1e-12)


@pytest.mark.parametrize("q", [3, 5])
def test_displacements_commute_iff_symplectic_form_vanishes(q):
    f = get_field(q)
    ops = [(x, z, weyl_op(f, x, z).matrix) for x in f.elements for z in f.elements]
    for x, z, d1 in ops:
        for xp, zp, d2 in ops:
            form = (x * zp - xp * z).trace()
            commute = np.allclose(d1 @ d2, d2 @ d1, atol=1e-12)
            assert commute == (form == 0)


def test_phased_weyl_is_order_p_in_odd_characteristic():
    f = get_field(3)
    for x in f.elements:
        for z in f.elements:
            d = weyl_op(f, x, z).matrix
            np.testing.assert_allclose(
                np.linalg.matrix_power(d, 3), np.eye(3), atol=1e-12
            )


def test_phased_weyl_rejected_in_characteristic_two():
    f = get_field(4)
    with pytest.raises(ValueError, match="p = 2"):
        weyl_op(f, f.one, f.zero, phased=True)
    # unphased operators remain available
    assert weyl_op(f, f.one, f.zero).matrix.shape == (4, 4)


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_basis_vectors_are_common_displacement_eigenvectors(q):
    m = get_mub(q)
    f = m.field
    rng = np.random.default_rng(q)
    for b in m.labels:
        vs = f.elements if q <= 5 else [f.from_index(int(i)) for i in rng.integers(0, q, 3)]
        for v in vs:
            psi = m.vector(b, v)
            for k in (f.one, f.alpha):
                d = (
                    weyl_op(f, f.zero, k).matrix
                    if b is INFINITY
                    else weyl_op(f, k, k * b).matrix
                )
                out = d @ psi
                assert abs(abs(np.vdot(psi, out)) - 1.0) < 1e-9


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_stabilizer_projector_matches_mub_projector(q):
    m = get_mub(q)
    f = m.field
    rng = np.random.default_rng(q + 1)
    for b in m.labels:
        vs = f.elements if q <= 5 else [f.from_index(int(i)) for i in rng.integers(0, q, 3)]
        for v in vs:
            np.testing.assert_allclose(
                stabilizer_projector(f, b, v), m.projector(b, v), atol=1e-9
            )


def test_stabilizer_projector_rejects_even_field_labels():
    f = get_field(4)
    with pytest.raises(ValueError, match="odd characteristic"):
        stabilizer_projector(f, f.zero, f.one)
    # the infinity label works at any q
    np.testing.assert_allclose(
        stabilizer_projector(f, INFINITY, f.one), get_mub(4).projector(INFINITY, 1), atol=1e-12
    )


@pytest.mark.parametrize("q", [3, 9])
def test_conjugation_transports_labels(q):
    m = get_mub(q)
    f = m.field
    rng = np.random.default_rng(2 * q)
    pairs = (
        [(x, z) for x in f.elements for z in f.elements]
        if q == 3
        else [tuple(f.from_index(int(i)) for i in rng.integers(0, q, 2)) for _ in range(6)]
    )
    for x, z in pairs:
        u = weyl_op(f, x, z).matrix
        for b in m.labels:
            for vi in (0, 1, q - 1):
                v = f.from_index(vi)
                b2, v2 = conjugated_mub_label(f, x, z, b, v)
                assert b2 is b if b is INFINITY else b2 == b
                np.testing.assert_allclose(
                    u @ m.projector(b, v) @ u.conj().T, m.projector(b2, v2), atol=1e-9
                )


def test_conjugated_label_rejected_in_characteristic_two():
    f = get_field(2)
    with pytest.raises(ValueError, match="odd characteristic"):
        conjugated_mub_label(f, f.one, f.zero, f.zero, f.one)


@pytest.mark.parametrize("q", [2, 3])
def test_projector_family_is_a_2_design(q):
    m = get_mub(q)
    total = np.zeros((q * q, q * q), dtype=complex)
    for b in range(q + 1):
        for v in range(q):
            p = m.projector(b, v)
            total += np.kron(p, p)
    swap = np.zeros((q * q, q * q))
    for i in range(q):
        for j in range(q):
            swap[i * q + j, j * q + i] = 1.0
    np.testing.assert_allclose(total, np.eye(q * q) + swap, atol=1e-12)


def test_overlap_deviation_detects_a_broken_set():
    m = get_mub(3)
    mats = m._mats.copy()
    mats[2] = mats[1]  # duplicate a basis: cross overlaps collapse to identity
    broken = MubSet(m.field, mats, None)
    assert overlap_deviation(broken) > 0.5


def test_vector_accepts_positions_and_indices():
    m = get_mub(3)
    f = m.field
    np.testing.assert_array_equal(m.vector(0, 2), m.vector(INFINITY, f.from_index(2)))
    np.testing.assert_array_equal(m.basis_matrix(1), m.basis_matrix(f.zero))
