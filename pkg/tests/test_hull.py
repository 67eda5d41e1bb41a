"""Hull construction, containment, distances, witness weights."""

from __future__ import annotations

import numpy as np
import pytest

from unidisc import canonical, hull
from unidisc.errors import TargetNotInHull

PI = np.pi


def test_convex_hull_dedup_and_orientation():
    pts = np.array([1, 1j, -1, -1j, 1 + 1e-12j])
    poly = hull.convex_hull(pts)
    assert len(poly) == 4
    v = poly.vertices
    # counterclockwise: every edge turns left around the interior
    n = len(v)
    for i in range(n):
        assert hull._cross(v[i], v[(i + 1) % n], v[(i + 2) % n]) > 0


def test_convex_hull_degenerate_cases():
    assert len(hull.convex_hull(np.array([1 + 0j, 1 + 0j]))) == 1
    seg = hull.convex_hull(np.array([1 + 0j, -1 + 0j]))
    assert len(seg) == 2
    collinear = hull.convex_hull(np.array([0j, 0.5 + 0j, 1 + 0j]))
    assert len(collinear) == 2


def test_contains_origin_cases():
    assert hull.contains_origin(hull.convex_hull(np.array([1, -1 + 0j])))
    assert hull.contains_origin(hull.convex_hull(np.array([1, 1j, -1 - 1j])))
    assert not hull.contains_origin(hull.convex_hull(np.array([1, 1j, 0.5 + 0.5j])))
    assert hull.contains_origin(hull.convex_hull(np.array([0j])))


def test_distance_zero_iff_contained():
    rng = np.random.default_rng(17)
    for _ in range(500):
        pts = np.exp(1j * rng.uniform(0, 2 * PI, size=4))
        poly = hull.convex_hull(pts)
        dist, nearest = hull.distance_to_origin(poly)
        inside = hull.contains_origin(poly)
        assert (dist == 0.0) == inside
        if not inside:
            assert abs(nearest) == pytest.approx(dist, abs=1e-14)


def test_global_hull_distance_matches_support_minimum():
    # brute check: distance to hull equals the minimum of |sum w_j p_j|
    rng = np.random.default_rng(29)
    grid = np.linspace(0, 1, 41)
    for _ in range(50):
        e = canonical.eigenphases_from_d(canonical.random_interaction_vector(rng))
        p = hull.spectrum_points(e)
        poly = hull.global_hull(e)
        dist, _ = hull.distance_to_origin(poly)
        best = 1.0
        for a in grid:
            for b in grid[grid <= 1 - a]:
                for c in grid[grid <= 1 - a - b]:
                    w = np.array([a, b, c, 1 - a - b - c])
                    best = min(best, abs(np.dot(w, p)))
        assert dist <= best + 1e-9
        assert dist >= best - 0.02  # grid resolution


def test_local_hull_vertices_are_chord_midpoints():
    e = canonical.eigenphases_from_d(np.array([0.6, 0.3, 0.1]))
    p = hull.spectrum_points(e)
    mids = {(a, b) for a in (0, 2) for b in (1, 3)}
    expected = np.array([(p[a] + p[b]) / 2 for a, b in sorted(mids)])
    poly = hull.local_hull(e)
    for v in poly.vertices:
        assert np.abs(expected - v).min() < 1e-12


def test_local_hull_inside_global_hull():
    rng = np.random.default_rng(41)
    for _ in range(200):
        e = canonical.eigenphases_from_d(canonical.random_interaction_vector(rng))
        fg, _ = hull.distance_to_origin(hull.global_hull(e))
        fl, _ = hull.distance_to_origin(hull.local_hull(e))
        assert fg <= fl + 1e-12


def test_global_equals_local_distance_in_chamber():
    rng = np.random.default_rng(43)
    for _ in range(500):
        e = canonical.eigenphases_from_d(canonical.random_interaction_vector(rng))
        fg, _ = hull.distance_to_origin(hull.global_hull(e))
        fl, _ = hull.distance_to_origin(hull.local_hull(e))
        assert abs(fg - fl) < 1e-12


def test_witness_weights_global():
    rng = np.random.default_rng(47)
    for _ in range(200):
        e = canonical.eigenphases_from_d(canonical.random_interaction_vector(rng))
        p = hull.spectrum_points(e)
        dist, nearest = hull.distance_to_origin(hull.global_hull(e))
        w = hull.witness_weights(e, nearest, local=False)
        assert w.min() >= 0 and abs(w.sum() - 1) < 1e-12
        assert abs(np.dot(w, p) - nearest) < 1e-8


def test_witness_weights_local_structure():
    rng = np.random.default_rng(53)
    for _ in range(200):
        e = canonical.eigenphases_from_d(canonical.random_interaction_vector(rng))
        p = hull.spectrum_points(e)
        dist, nearest = hull.distance_to_origin(hull.local_hull(e))
        w = hull.witness_weights(e, nearest, local=True)
        assert abs(w[0] + w[2] - 0.5) < 1e-12
        assert abs(w[1] + w[3] - 0.5) < 1e-12
        assert abs(np.dot(w, p) - nearest) < 1e-8


def test_witness_weights_rejects_unreachable_target():
    e = np.zeros(4)  # spectrum is the single point 1
    with pytest.raises(TargetNotInHull):
        hull.witness_weights(e, -1.0, local=False)
    with pytest.raises(TargetNotInHull):
        hull.witness_weights(e, -1.0, local=True)


def test_parallelogram_is_only_an_upper_bound_off_chamber():
    # outside the ordered chamber the alternation argument fails: here the
    # parallelogram sits strictly farther from the origin than the best
    # product state, whose overlap is cos(vx + vz) by direct construction
    e = canonical.eigenphases_from_d(np.array([0.3, 0.0, 0.2]))
    fg, _ = hull.distance_to_origin(hull.global_hull(e))
    fl, _ = hull.distance_to_origin(hull.local_hull(e))
    assert fg == pytest.approx(np.cos(0.5), abs=1e-12)
    assert fl > fg + 0.05


def test_analyze_bundles_consistent_numbers():
    e = canonical.eigenphases_from_d(np.array([PI / 4, 0.0, 0.0]))
    h = hull.analyze(e)
    assert h.f_global == pytest.approx(np.cos(PI / 4), abs=1e-12)
    assert h.f_local == pytest.approx(h.f_global, abs=1e-12)
    assert not h.contains_origin_global
    p = hull.spectrum_points(e)
    assert abs(np.dot(h.weights_global, p) - h.nearest_global) < 1e-9
    assert abs(np.dot(h.weights_local, p) - h.nearest_local) < 1e-9
