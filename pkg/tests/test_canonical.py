"""Canonical factorization: eigenphases, chamber folding, reconstruction."""

from __future__ import annotations

import numpy as np
import pytest

from unidisc import canonical, gates
from unidisc.errors import InconsistentSpectrum, NotUnitary

from conftest import haar_unitary

PI = np.pi


def test_wrap_angle_range():
    x = np.linspace(-20, 20, 4001)
    w = canonical.wrap_angle(x)
    assert (w > -PI - 1e-12).all() and (w <= PI + 1e-12).all()
    assert np.allclose(np.exp(1j * w), np.exp(1j * x), atol=1e-12)


def test_eigenphase_relations_round_trip():
    rng = np.random.default_rng(2)
    for _ in range(300):
        d = rng.uniform(-PI / 2, PI / 2, size=3)
        e = canonical.eigenphases_from_d(d)
        assert abs(e.sum()) < 1e-12
        back = canonical.d_from_eigenphases(e)
        assert np.abs(back - d).max() < 1e-12


def test_d_from_eigenphases_rejects_nonzero_sum():
    with pytest.raises(InconsistentSpectrum):
        canonical.d_from_eigenphases(np.array([0.3, 0.1, 0.0, 0.0]))


def test_interaction_unitary_is_bell_diagonal():
    rng = np.random.default_rng(4)
    for _ in range(50):
        d = canonical.random_interaction_vector(rng)
        w = canonical.interaction_unitary(d)
        assert canonical.is_diagonal_form(w)
        phase, lam = canonical.bell_diagonal_phases(w)
        assert abs(phase) < 1e-12
        assert np.abs(lam - canonical.eigenphases_from_d(d)).max() < 1e-12


def test_bell_diagonal_phases_recovers_global_phase():
    d = np.array([0.4, 0.2, 0.1])
    w = np.exp(1j * 0.7) * canonical.interaction_unitary(d)
    phase, lam = canonical.bell_diagonal_phases(w)
    rebuilt = np.exp(1j * phase) * canonical.interaction_unitary(canonical.d_from_eigenphases(lam))
    assert np.abs(rebuilt - w).max() < 1e-12


def test_is_diagonal_form_rejects_cnot():
    # the computational-basis CNOT needs local factors first
    assert not canonical.is_diagonal_form(gates.CNOT)


def test_named_gate_interaction_classes():
    cases = {
        "cnot": (PI / 4, 0, 0),
        "cz": (PI / 4, 0, 0),
        "swap": (PI / 4, PI / 4, PI / 4),
        "iswap": (PI / 4, PI / 4, 0),
        "sqrt_swap": (PI / 8, PI / 8, PI / 8),
        "identity": (0, 0, 0),
    }
    for name, want in cases.items():
        form = canonical.canonical_decompose(gates.named_gate(name))
        assert np.abs(form.d - np.array(want)).max() < 1e-10, name


def test_reconstruction_on_haar_sample():
    rng = np.random.default_rng(21)
    for _ in range(200):
        w = haar_unitary(rng)
        form = canonical.canonical_decompose(w)
        assert np.abs(form.reconstruct() - w).max() < 1e-8
        assert canonical.in_weyl_chamber(form.d)


def test_chamber_needs_negative_vz_for_conjugate_classes():
    # vx > vy > |vz| > 0 with vz < 0 is not locally equivalent to its
    # conjugate, so folding must not silently flip the sign
    d = np.array([0.7, 0.5, -0.3])
    w = canonical.interaction_unitary(d)
    form = canonical.canonical_decompose(w)
    assert np.abs(form.d - d).max() < 1e-10
    assert np.abs(form.reconstruct() - w).max() < 1e-10


def test_boundary_vz_sign_is_normalized():
    # on the vx = pi/4 face both signs describe the same class; the fold
    # settles on vz >= 0
    d = np.array([PI / 4, 0.3, -0.2])
    form = canonical.canonical_decompose(canonical.interaction_unitary(d))
    assert form.d[2] >= 0
    assert np.abs(form.d - np.array([PI / 4, 0.3, 0.2])).max() < 1e-10


def test_decomposition_invariant_under_local_unitaries():
    rng = np.random.default_rng(33)
    for _ in range(50):
        d = canonical.random_interaction_vector(rng)
        w = canonical.interaction_unitary(d)
        k1 = np.kron(haar_unitary(rng, 2), haar_unitary(rng, 2))
        k2 = np.kron(haar_unitary(rng, 2), haar_unitary(rng, 2))
        form = canonical.canonical_decompose(k1 @ w @ k2)
        assert np.abs(form.d - d).max() < 1e-8


def test_global_phase_is_recovered():
    # the phase is pinned only modulo pi: a sign flip of one local factor
    # absorbs the other half turn, and reconstruction stays exact either way
    rng = np.random.default_rng(8)
    w = haar_unitary(rng)
    shifted = np.exp(1j * 1.234) * w
    form = canonical.canonical_decompose(shifted)
    base = canonical.canonical_decompose(w)
    delta = form.phase - base.phase - 1.234
    assert canonical.wrap_angle(2 * delta) == pytest.approx(0.0, abs=1e-8)
    assert np.abs(form.reconstruct() - shifted).max() < 1e-10


def test_weyl_vector_round_trip():
    rng = np.random.default_rng(55)
    for _ in range(100):
        d = canonical.random_interaction_vector(rng)
        form = canonical.canonical_decompose(canonical.interaction_unitary(d))
        assert np.abs(form.d - d).max() < 1e-10


def test_canonical_decompose_rejects_non_unitary():
    with pytest.raises(NotUnitary):
        canonical.canonical_decompose(np.ones((4, 4), dtype=complex))


def test_local_factors_have_unit_determinant_shape():
    form = canonical.canonical_decompose(gates.CNOT)
    for m in (form.ua, form.ub, form.va, form.vb):
        assert m.shape == (2, 2)
        assert abs(abs(np.linalg.det(m)) - 1) < 1e-10
