"""Brute-force oracle: determinism, agreement with geometry, Helstrom."""

from __future__ import annotations

import numpy as np
import pytest

from unidisc import canonical, hull, oracle
from unidisc.errors import InvalidArgument
from unidisc.states import Priors, concurrence

from conftest import haar_unitary, random_state

FAST = oracle.OracleConfig(coarse_samples=4000, refine_sweeps=45)


def test_same_seed_same_bits():
    u = canonical.interaction_unitary(np.array([0.5, 0.3, 0.1]))
    a = oracle.brute_fidelity_global(u, FAST)
    b = oracle.brute_fidelity_global(u, FAST)
    assert a.value == b.value
    assert np.array_equal(a.argmin, b.argmin)
    assert a.evaluations == b.evaluations
    c = oracle.brute_fidelity_product(u, FAST)
    d = oracle.brute_fidelity_product(u, FAST)
    assert c.value == d.value and np.array_equal(c.argmin, d.argmin)


def test_different_seed_still_converges():
    u = canonical.interaction_unitary(np.array([np.pi / 4, 0, 0]))
    for seed in (1, 2, 3):
        cfg = oracle.OracleConfig(seed=seed, coarse_samples=4000, refine_sweeps=45)
        res = oracle.brute_fidelity_global(u, cfg)
        assert res.value == pytest.approx(np.cos(np.pi / 4), abs=1e-7)


def test_argmin_reevaluates_to_value():
    rng = np.random.default_rng(91)
    u = haar_unitary(rng)
    res = oracle.brute_fidelity_global(u, FAST)
    assert abs(np.vdot(res.argmin, u @ res.argmin)) == pytest.approx(res.value, abs=1e-12)
    res = oracle.brute_fidelity_product(u, FAST)
    assert abs(np.vdot(res.argmin, u @ res.argmin)) == pytest.approx(res.value, abs=1e-12)


def test_product_argmin_is_a_product_state():
    rng = np.random.default_rng(93)
    for _ in range(5):
        u = haar_unitary(rng)
        res = oracle.brute_fidelity_product(u, FAST)
        assert concurrence(res.argmin) < 1e-10
        ps = oracle.oracle_product_state(res)
        assert np.abs(ps.joint() - res.argmin).max() < 1e-8


def test_oracle_matches_hull_geometry():
    rng = np.random.default_rng(97)
    for _ in range(10):
        d = canonical.random_interaction_vector(rng)
        e = canonical.eigenphases_from_d(d)
        u = canonical.interaction_unitary(d)
        h = hull.analyze(e)
        rg = oracle.brute_fidelity_global(u, FAST)
        rp = oracle.brute_fidelity_product(u, FAST)
        assert rg.value == pytest.approx(h.f_global, abs=1e-5)
        assert rp.value == pytest.approx(h.f_local, abs=1e-5)
        # oracles search a superset of inputs, so they can only go lower
        assert rg.value <= h.f_global + 1e-7
        assert rp.value <= h.f_local + 1e-7


def test_global_oracle_never_beats_spectrum_distance():
    # the numerical range of a unitary is the hull of its eigenvalues, so
    # the true minimum is the spectrum distance even off the diagonal form
    rng = np.random.default_rng(101)
    for _ in range(5):
        u = haar_unitary(rng)
        dist, _ = hull.distance_to_origin(hull.convex_hull(np.linalg.eigvals(u)))
        res = oracle.brute_fidelity_global(u, FAST)
        assert res.value == pytest.approx(dist, abs=1e-5)
        assert res.value >= dist - 1e-9


def test_helstrom_closed_form_and_eigenvalues_agree():
    rng = np.random.default_rng(103)
    for _ in range(100):
        s1 = random_state(rng)
        s2 = random_state(rng)
        q1 = rng.uniform(0.05, 0.95)
        p = Priors(q1=q1, q2=1 - q1)
        val = oracle.brute_helstrom(p, s1, s2)
        ov = abs(np.vdot(s1, s2))
        assert val == pytest.approx((1 + np.sqrt(1 - 4 * q1 * (1 - q1) * ov**2)) / 2, abs=1e-12)


def test_helstrom_orthogonal_and_identical_states():
    p = Priors()
    e1 = np.array([1, 0, 0, 0], dtype=complex)
    e2 = np.array([0, 1, 0, 0], dtype=complex)
    assert oracle.brute_helstrom(p, e1, e2) == pytest.approx(1.0)
    assert oracle.brute_helstrom(p, e1, e1) == pytest.approx(0.5)


def test_oracle_config_validation():
    with pytest.raises(InvalidArgument):
        oracle.OracleConfig(coarse_samples=0)
    with pytest.raises(InvalidArgument):
        oracle.OracleConfig(refine_shrink=1.5)


def test_refined_never_worse_than_coarse():
    rng = np.random.default_rng(107)
    u = haar_unitary(rng)
    cfg = oracle.OracleConfig(seed=7, coarse_samples=2000, refine_sweeps=0)
    coarse_only = oracle.brute_fidelity_global(u, cfg)
    cfg2 = oracle.OracleConfig(seed=7, coarse_samples=2000, refine_sweeps=50)
    refined = oracle.brute_fidelity_global(u, cfg2)
    assert refined.value <= coarse_only.value + 1e-15
