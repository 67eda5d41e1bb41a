"""States, Bell basis, product factoring, priors."""

from __future__ import annotations

import numpy as np
import pytest

from unidisc import states
from unidisc.errors import InvalidState, NotAProductState, NotUnitary

from conftest import haar_unitary, random_state


def test_bell_basis_is_orthonormal():
    b = states.BELL_BASIS
    assert np.allclose(b.conj().T @ b, np.eye(4), atol=1e-15)


def test_bell_basis_columns_are_the_four_bell_states():
    b = states.BELL_BASIS
    s = 1 / np.sqrt(2)
    assert np.allclose(b[:, 0], [s, 0, 0, s])
    assert np.allclose(b[:, 1], [s, 0, 0, -s])
    assert np.allclose(b[:, 2], [0, s, -s, 0])
    assert np.allclose(b[:, 3], [0, s, s, 0])


def test_bell_round_trip():
    rng = np.random.default_rng(11)
    for _ in range(50):
        s = random_state(rng)
        c = states.computational_to_bell(s)
        assert np.allclose(states.bell_to_computational(c), s, atol=1e-14)


def test_check_state_rejects_unnormalized():
    with pytest.raises(InvalidState):
        states.check_state(np.array([1.0, 1.0, 0.0, 0.0]))


def test_check_unitary_rejects_non_unitary():
    with pytest.raises(NotUnitary):
        states.check_unitary(np.eye(4) * 1.1, 4)
    with pytest.raises(NotUnitary):
        states.check_unitary(np.eye(2), 4)


def test_concurrence_extremes():
    assert states.concurrence(np.array([1, 0, 0, 0], dtype=complex)) == pytest.approx(0.0, abs=1e-15)
    phi1 = states.BELL_BASIS[:, 0]
    assert states.concurrence(phi1) == pytest.approx(1.0, abs=1e-15)


def test_concurrence_vanishes_exactly_on_products():
    rng = np.random.default_rng(5)
    for _ in range(100):
        a = random_state(rng, 2)
        b = random_state(rng, 2)
        assert states.concurrence(np.kron(a, b)) < 1e-14


def test_factor_product_state_round_trip():
    rng = np.random.default_rng(7)
    for _ in range(100):
        a = random_state(rng, 2)
        b = random_state(rng, 2)
        ps = states.factor_product_state(np.kron(a, b))
        assert np.abs(ps.joint() - np.kron(a, b)).max() < 1e-12


def test_factor_product_state_rejects_entangled():
    phi1 = states.BELL_BASIS[:, 0]
    with pytest.raises(NotAProductState):
        states.factor_product_state(phi1)


def test_balanced_real_bell_vector_is_product():
    # w1 + w3 = w2 + w4 = 1/2 makes the concurrence cancel identically
    rng = np.random.default_rng(13)
    for _ in range(200):
        q1, q2 = rng.uniform(0, 1, size=2)
        w = np.array([q1 / 2, q2 / 2, (1 - q1) / 2, (1 - q2) / 2])
        s = states.bell_to_computational(np.sqrt(w))
        ps = states.factor_product_state(s)
        assert np.abs(ps.joint() - s).max() < 1e-10


def test_priors_validation():
    with pytest.raises(ValueError):
        states.Priors(q1=0.7, q2=0.7)
    with pytest.raises(ValueError):
        states.Priors(q1=-0.1, q2=1.1)
    p = states.Priors(q1=0.3, q2=0.7)
    assert p.q1 == 0.3


def test_success_probability_pure_endpoints():
    p = states.Priors()
    assert states.success_probability_pure(p, 0.0) == pytest.approx(1.0)
    assert states.success_probability_pure(p, 1.0) == pytest.approx(0.5)
    # skewed priors never drop below the better prior
    p = states.Priors(q1=0.9, q2=0.1)
    assert states.success_probability_pure(p, 1.0) == pytest.approx(0.9)


def test_overlap_matches_direct_expression():
    rng = np.random.default_rng(3)
    u = haar_unitary(rng)
    s = random_state(rng)
    assert states.overlap(u, s) == pytest.approx(np.vdot(s, u @ s))
