"""Face operators: the overlap dictionary Tr(A^r A^s) = q - delta, trace
normalizations, the three distance formulas, bipartite facet states,
conjugation transport, orbits, and reduced-purity statistics."""

import math
from fractions import Fraction

import numpy as np
import pytest

from wigner_codes import (
    INFINITY,
    FaceLabel,
    canonical_basis_labels,
    conjugate_label,
    face_operator,
    fs_distance,
    hs_distance,
    hs_inner,
    identity_offset,
    jam_state,
    max_entangled,
    partial_trace_first,
    predicted_overlap,
    predicted_overlap_unit_trace,
    purity_stats,
    simplex_code,
    trace_distance,
    unit_trace_face_operator,
    weyl_op,
    wh_orbit,
)
from conftest import get_field, get_mub


def random_facet(field, rng) -> FaceLabel:
    vals = [field.from_index(int(i)) for i in rng.integers(0, field.q, field.q + 1)]
    return FaceLabel.facet(vals)


def random_label(field, rng, size) -> FaceLabel:
    order = canonical_basis_labels(field)
    pos = sorted(rng.choice(field.q + 1, size=size, replace=False))
    vals = [field.from_index(int(i)) for i in rng.integers(0, field.q, size)]
    return FaceLabel(bases=tuple(order[p] for p in pos), values=tuple(vals))


# -- labels --------------------------------------------------------------------


def test_label_validation():
    f = get_field(3)
    with pytest.raises(ValueError, match="one value per"):
        FaceLabel(bases=(INFINITY,), values=(f.one, f.zero))
    with pytest.raises(ValueError, match="field elements"):
        FaceLabel(bases=(INFINITY,), values=(1,))
    with pytest.raises(ValueError, match="different fields"):
        FaceLabel(bases=(INFINITY, f.zero), values=(f.one, get_field(5).one))
    with pytest.raises(ValueError, match="canonical order"):
        FaceLabel(bases=(f.zero, INFINITY), values=(f.one, f.one))
    with pytest.raises(ValueError, match="canonical order"):
        FaceLabel(bases=(f.zero, f.zero), values=(f.one, f.one))
    with pytest.raises(ValueError, match="basis label"):
        FaceLabel(bases=(get_field(5).one,), values=(f.one,))
    with pytest.raises(ValueError, match="4 values"):
        FaceLabel.facet((f.one, f.zero))


def test_label_properties():
    f = get_field(3)
    w = simplex_code(f).codewords[5]
    lab = FaceLabel.facet(w.symbols)
    assert lab.size == 4 and lab.is_facet
    assert lab.word() == w
    small = FaceLabel(bases=(INFINITY, f.one), values=(f.one, f.alpha))
    assert small.size == 2 and not small.is_facet
    with pytest.raises(ValueError, match="full-length"):
        small.word()
    with pytest.raises(ValueError, match="different bases"):
        lab.delta(small)
    assert lab.delta(lab) == 0


# -- trace normalizations --------------------------------------------------------


@pytest.mark.parametrize("q", [2, 3, 5, 8])
def test_trace_identities_for_every_size(q):
    m = get_mub(q)
    f = m.field
    rng = np.random.default_rng(q)
    for size in range(1, q + 2):
        lab = random_label(f, rng, size)
        a = face_operator(m, lab)
        assert a.scale == 1.0
        expected_trace = math.sqrt(q * q - q * size + size)
        assert np.trace(a.matrix).real == pytest.approx(expected_trace, abs=1e-9)
        assert hs_inner(a.matrix, a.matrix).real == pytest.approx(q, abs=1e-9)
        u = unit_trace_face_operator(m, lab)
        assert np.trace(u.matrix).real == pytest.approx(1.0, abs=1e-9)
        assert hs_inner(u.matrix, u.matrix).real == pytest.approx(q, abs=1e-9)


def test_facet_operators_have_unit_trace_automatically():
    # at full size q+1 the J=1 normalization already gives trace 1
    for q in (2, 3, 4, 7):
        assert identity_offset(q, q + 1) == pytest.approx((q + 1 - 1.0) / q)
        m = get_mub(q)
        lab = random_facet(m.field, np.random.default_rng(0))
        assert np.trace(face_operator(m, lab).matrix).real == pytest.approx(1.0, abs=1e-9)


def test_hermiticity():
    m = get_mub(4)
    rng = np.random.default_rng(9)
    for size in (1, 3, 5):
        a = face_operator(m, random_label(m.field, rng, size)).matrix
        np.testing.assert_allclose(a, a.conj().T, atol=1e-12)


def test_field_mismatch_rejected():
    m = get_mub(3)
    lab = random_facet(get_field(5), np.random.default_rng(0))
    with pytest.raises(ValueError, match="different fields"):
        face_operator(m, lab)
    with pytest.raises(ValueError, match="different fields"):
        unit_trace_face_operator(m, lab)


# -- the overlap dictionary ------------------------------------------------------


def test_overlap_equals_q_minus_delta_exhaustive_qubit():
    m = get_mub(2)
    f = m.field
    labels = [
        FaceLabel.facet([f.from_index(i), f.from_index(j), f.from_index(k)])
        for i in (0, 1)
        for j in (0, 1)
        for k in (0, 1)
    ]
    ops = [face_operator(m, lab).matrix for lab in labels]
    for r, lr in enumerate(labels):
        for s, ls in enumerate(labels):
            got = hs_inner(ops[r], ops[s]).real
            assert got == pytest.approx(predicted_overlap(2, lr.delta(ls)), abs=1e-9)


@pytest.mark.parametrize("q", [3, 4, 5])
def test_overlap_dictionary_all_sizes(q):
    m = get_mub(q)
    f = m.field
    rng = np.random.default_rng(17 * q)
    order = canonical_basis_labels(f)
    for size in range(1, q + 2):
        pos = sorted(rng.choice(q + 1, size=size, replace=False))
        bases = tuple(order[p] for p in pos)
        for _ in range(12):
            vr = tuple(f.from_index(int(i)) for i in rng.integers(0, q, size))
            vs = tuple(f.from_index(int(i)) for i in rng.integers(0, q, size))
            lr, ls = FaceLabel(bases, vr), FaceLabel(bases, vs)
            d = lr.delta(ls)
            a_r = face_operator(m, lr).matrix
            a_s = face_operator(m, ls).matrix
            assert hs_inner(a_r, a_s).real == pytest.approx(q - d, abs=1e-9)
            u_r = unit_trace_face_operator(m, lr).matrix
            u_s = unit_trace_face_operator(m, ls).matrix
            assert hs_inner(u_r, u_s).real == pytest.approx(
                predicted_overlap_unit_trace(q, size, d), abs=1e-9
            )


# -- distances -------------------------------------------------------------------


@pytest.mark.parametrize("q", [2, 3, 5])
def test_distance_formulas_match_matrix_and_vector_computations(q):
    m = get_mub(q)
    f = m.field
    rng = np.random.default_rng(5 * q + 1)
    for i in range(30):
        lr = random_facet(f, rng)
        ls = random_facet(f, rng)
        while ls == lr:
            ls = random_facet(f, rng)
        d = lr.delta(ls)
        a_r, a_s = face_operator(m, lr), face_operator(m, ls)
        diff = a_r.matrix - a_s.matrix
        assert math.sqrt(hs_inner(diff, diff).real) == pytest.approx(
            hs_distance(q, d), abs=1e-9
        )
        jr, js = jam_state(a_r), jam_state(a_s)
        ov = np.vdot(jr, js)
        assert abs(ov.imag) < 1e-9
        assert ov.real == pytest.approx(1.0 - d / q, abs=1e-9)
        assert math.sqrt(2.0 - 2.0 * abs(ov)) == pytest.approx(fs_distance(q, d), abs=1e-9)
        assert math.sqrt(1.0 - abs(ov) ** 2) == pytest.approx(trace_distance(q, d), abs=1e-9)
        if i < 8:
            # the closed form really is half the trace norm of the difference
            rho = np.outer(jr, jr.conj()) - np.outer(js, js.conj())
            tn = 0.5 * np.abs(np.linalg.eigvalsh(rho)).sum()
            assert tn == pytest.approx(trace_distance(q, d), abs=1e-9)


def test_jam_states_are_normalized_and_code_states_orthonormal():
    for q in (2, 3):
        m = get_mub(q)
        states = [
            jam_state(face_operator(m, FaceLabel.facet(w.symbols)))
            for w in simplex_code(m.field).codewords
        ]
        g = np.array([[np.vdot(a, b) for b in states] for a in states])
        np.testing.assert_allclose(g, np.eye(q * q), atol=1e-9)


def test_jam_state_reduction_is_a_squared_over_q():
    m = get_mub(4)
    lab = random_facet(m.field, np.random.default_rng(3))
    op = face_operator(m, lab)
    psi = jam_state(op)
    rho = partial_trace_first(np.outer(psi, psi.conj()))
    np.testing.assert_allclose(rho, op.matrix @ op.matrix / 4.0, atol=1e-12)
    assert np.vdot(psi, psi).real == pytest.approx(1.0, abs=1e-12)
    # the maximally entangled reference state is itself a jam state precursor
    assert max_entangled(4).shape == (16,)


# -- conjugation and orbits -------------------------------------------------------


def test_conjugate_label_matches_matrix_conjugation():
    q = 3
    m = get_mub(q)
    f = m.field
    rng = np.random.default_rng(77)
    labels = [FaceLabel.facet([f.zero] * (q + 1)), random_facet(f, rng)]
    for lab in labels:
        base = face_operator(m, lab).matrix
        for x in f.elements:
            for z in f.elements:
                u = weyl_op(f, x, z).matrix
                moved = conjugate_label(lab, x, z)
                np.testing.assert_allclose(
                    u @ base @ u.conj().T, face_operator(m, moved).matrix, atol=1e-9
                )


def test_conjugate_label_requires_odd_characteristic_and_facets():
    f = get_field(4)
    lab = random_facet(f, np.random.default_rng(0))
    with pytest.raises(ValueError, match="odd characteristic"):
        conjugate_label(lab, f.one, f.zero)
    f3 = get_field(3)
    small = FaceLabel(bases=(INFINITY,), values=(f3.one,))
    with pytest.raises(ValueError, match="facet"):
        conjugate_label(small, f3.one, f3.zero)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_orbit_of_any_facet_is_its_code_coset(q):
    m = get_mub(q)
    f = m.field
    rng = np.random.default_rng(q + 40)
    start = random_facet(f, rng)
    orbit = wh_orbit(m, start)
    assert len(orbit) == q * q
    words = {lab.word() for lab in orbit}
    expected = {start.word() + c for c in simplex_code(f).codewords}
    assert words == expected


def test_orbit_matches_label_transport_in_odd_characteristic():
    q = 3
    m = get_mub(q)
    f = m.field
    start = random_facet(f, np.random.default_rng(12))
    via_labels = {
        conjugate_label(start, x, z) for x in f.elements for z in f.elements
    }
    assert wh_orbit(m, start) == via_labels


def test_orbit_rejects_partial_labels():
    f = get_field(3)
    small = FaceLabel(bases=(INFINITY,), values=(f.one,))
    with pytest.raises(ValueError, match="facet"):
        wh_orbit(get_mub(3), small)


# -- purity ----------------------------------------------------------------------


def test_qutrit_mean_purity_is_59_over_81():
    stats = purity_stats(get_mub(3))
    assert stats.exhaustive and stats.count == 81
    assert stats.mean == pytest.approx(float(Fraction(59, 81)), abs=1e-9)
    assert stats.haar_mean == pytest.approx(0.6)


def test_sampled_purity_agrees_with_exhaustive():
    m = get_mub(3)
    exact = purity_stats(m).mean
    sampled = purity_stats(m, max_exhaustive=1, samples=600, seed=4)
    assert not sampled.exhaustive
    assert sampled.stderr > 0
    assert abs(sampled.mean - exact) < 5 * sampled.stderr


def test_closed_form_purity_equals_honest_partial_trace():
    m = get_mub(4)
    rng = np.random.default_rng(21)
    for _ in range(5):
        op = face_operator(m, random_facet(m.field, rng))
        psi = jam_state(op)
        rho = partial_trace_first(np.outer(psi, psi.conj()))
        honest = hs_inner(rho, rho).real
        closed = hs_inner(op.matrix @ op.matrix, op.matrix @ op.matrix).real / 16.0
        assert honest == pytest.approx(closed, abs=1e-12)


@pytest.mark.parametrize("q", [3, 5])
def test_code_facets_give_maximally_entangled_states_at_odd_q(q):
    m = get_mub(q)
    for w in simplex_code(m.field).codewords[:: max(1, q - 1)]:
        psi = jam_state(face_operator(m, FaceLabel.facet(w.symbols)))
        rho = partial_trace_first(np.outer(psi, psi.conj()))
        assert hs_inner(rho, rho).real == pytest.approx(1.0 / q, abs=1e-9)
