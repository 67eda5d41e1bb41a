"""Convex geometry of eigenphase spectra on the unit circle.

The single-shot fidelity of a Bell-diagonal unitary with eigenphases
(lam1..lam4) is the Euclidean distance from the origin to the convex hull of
the four spectrum points exp(-i lam_j).  Restricting inputs to product states
with real Bell coefficients constrains the hull weights to w1 + w3 = w2 + w4 =
1/2, which turns the feasible set into the Minkowski average of the two
segments [p1, p3] and [p2, p4]: a parallelogram whose vertices are the chord
midpoints (p_a + p_b)/2 with a in {1, 3} and b in {2, 4}.

All polygons here have at most four vertices, so the hull construction is a
small monotone chain rather than a general-purpose library call.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .config import TOL_GEOM
from .errors import InvalidArgument, TargetNotInHull

Array = np.ndarray


def _check_quad(e: Array) -> Array:
    e = np.asarray(e, dtype=float)
    if e.shape != (4,):
        raise InvalidArgument(f"expected 4 eigenphases, got shape {e.shape}")
    return e


def spectrum_points(e: Array) -> Array:
    """The unit-circle points exp(-i lam_j), by Bell index."""
    return np.exp(-1j * _check_quad(e))


@dataclass(frozen=True)
class Polygon:
    """A convex polygon in the complex plane.

    ``vertices`` are deduplicated and ordered counterclockwise; degenerate
    cases keep one vertex (a point) or two (a segment).
    """

    vertices: Array

    def __len__(self) -> int:
        return len(self.vertices)


def _cross(o: complex, a: complex, b: complex) -> float:
    return (a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (b.real - o.real)


def convex_hull(points: Array, tol: float = TOL_GEOM) -> Polygon:
    """Convex hull of a handful of complex points (monotone chain).

    Points closer than ``tol`` are merged; collinear interior points are
    dropped.
    """
    pts = list(np.asarray(points, dtype=complex).ravel())
    kept: list[complex] = []
    for p in sorted(pts, key=lambda z: (z.real, z.imag)):
        if all(abs(p - q) > tol for q in kept):
            kept.append(p)
    if len(kept) == 1:
        return Polygon(vertices=np.array(kept))
    if len(kept) == 2:
        return Polygon(vertices=np.array(kept))

    def half(seq: list[complex]) -> list[complex]:
        out: list[complex] = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= 1e-15:
                out.pop()
            out.append(p)
        return out

    lower = half(kept)
    upper = half(kept[::-1])
    verts = lower[:-1] + upper[:-1]
    if len(verts) == 2:
        return Polygon(vertices=np.array(verts))
    return Polygon(vertices=np.array(verts))


def global_hull(e: Array, tol: float = TOL_GEOM) -> Polygon:
    """Convex hull of the four spectrum points."""
    return convex_hull(spectrum_points(e), tol=tol)


def local_hull(e: Array, tol: float = TOL_GEOM) -> Polygon:
    """Parallelogram of chord midpoints (p_a + p_b)/2, a in {1,3}, b in {2,4}.

    For the SWAP-class quadruple (pi/4, pi/4, -3pi/4, pi/4) the segment
    [p1, p3] passes through the origin while [p2, p4] degenerates to a point,
    so the parallelogram collapses to a segment touching the origin.
    """
    p = spectrum_points(e)
    mids = np.array([(p[a] + p[b]) / 2 for a in (0, 2) for b in (1, 3)])
    return convex_hull(mids, tol=tol)


def _nearest_on_segment(a: complex, b: complex) -> complex:
    d = b - a
    dd = abs(d) ** 2
    if dd < 1e-30:
        return a
    t = -(a.real * d.real + a.imag * d.imag) / dd
    t = min(max(t, 0.0), 1.0)
    return a + t * d


def contains_origin(poly: Polygon, tol: float = TOL_GEOM) -> bool:
    """Whether the origin lies in the polygon (boundary counts, within tol)."""
    v = poly.vertices
    if len(v) == 1:
        return bool(abs(v[0]) <= tol)
    if len(v) == 2:
        return bool(abs(_nearest_on_segment(v[0], v[1])) <= tol)
    n = len(v)
    for i in range(n):
        if _cross(v[i], v[(i + 1) % n], 0j) < -tol:
            return False
    return True


def distance_to_origin(poly: Polygon, tol: float = TOL_GEOM) -> tuple[float, complex]:
    """Distance from the origin to the polygon, with the nearest point.

    Returns exactly ``(0.0, 0j)`` when contains_origin holds, so the
    "distance is zero iff the origin is contained" equivalence is never broken
    by rounding.
    """
    v = poly.vertices
    if contains_origin(poly, tol=tol):
        return 0.0, 0j
    if len(v) == 1:
        return float(abs(v[0])), complex(v[0])
    n = len(v)
    best = None
    for i in range(n if n > 2 else 1):
        p = _nearest_on_segment(v[i], v[(i + 1) % n])
        if best is None or abs(p) < abs(best):
            best = p
    return float(abs(best)), complex(best)


def witness_weights(e: Array, target: complex, local: bool, tol: float = TOL_GEOM) -> Array:
    """Convex weights on the spectrum points that reproduce ``target``.

    Global weights are any distribution w >= 0, sum w = 1 with
    sum_j w_j exp(-i lam_j) = target, found over vertex subsets in index
    order (smallest supports first) so the result is deterministic.  Local
    weights additionally satisfy w1 + w3 = w2 + w4 = 1/2 and come from the
    two-parameter chord chart of the parallelogram.  Raises TargetNotInHull
    when no weights reproduce the target within ``tol``.
    """
    e = _check_quad(e)
    p = spectrum_points(e)
    target = complex(target)
    if local:
        return _local_weights(p, target, tol)
    for size in (1, 2, 3, 4):
        for idx in combinations(range(4), size):
            a = np.array([[p[j].real for j in idx], [p[j].imag for j in idx], [1.0] * size])
            rhs = np.array([target.real, target.imag, 1.0])
            sol, *_ = np.linalg.lstsq(a, rhs, rcond=None)
            if sol.min() < -1e-9:
                continue
            w = np.zeros(4)
            w[list(idx)] = np.clip(sol, 0.0, None)
            s = w.sum()
            if s <= 0:
                continue
            w = w / s
            if abs(np.dot(w, p) - target) <= tol:
                return w
    raise TargetNotInHull(f"target {target} is not a convex combination of the spectrum (tol {tol:.0e})")


def _local_weights(p: Array, target: complex, tol: float) -> Array:
    # chart: (q1, q2) in [0,1]^2 with point a1 q1 + a2 q2 + c
    a1 = (p[0] - p[2]) / 2
    a2 = (p[1] - p[3]) / 2
    c = (p[2] + p[3]) / 2 - target
    amat = np.array([[a1.real, a2.real], [a1.imag, a2.imag]])
    rhs = -np.array([c.real, c.imag])

    def value(q: Array) -> float:
        z = amat @ q - rhs
        return float(z @ z)

    candidates = []
    sol, *_ = np.linalg.lstsq(amat, rhs, rcond=None)
    candidates.append(np.clip(sol, 0.0, 1.0))
    for axis in (0, 1):
        col = amat[:, 1 - axis]
        cc = float(col @ col)
        for fixed in (0.0, 1.0):
            r = rhs - amat[:, axis] * fixed
            t = float(col @ r) / cc if cc > 1e-30 else 0.0
            q = np.empty(2)
            q[axis] = fixed
            q[1 - axis] = min(max(t, 0.0), 1.0)
            candidates.append(q)
    q = min(candidates, key=value)
    if np.sqrt(value(q)) > tol:
        raise TargetNotInHull(f"target {target} is outside the local parallelogram (tol {tol:.0e})")
    q1, q2 = q
    return np.array([q1 / 2, q2 / 2, (1 - q1) / 2, (1 - q2) / 2])


@dataclass(frozen=True)
class HullAnalysis:
    """Joint geometric picture of a spectrum: both hulls and both distances."""

    eigenphases: Array
    hull_global: Polygon
    hull_local: Polygon
    contains_origin_global: bool
    contains_origin_local: bool
    f_global: float
    f_local: float
    nearest_global: complex
    nearest_local: complex
    weights_global: Array
    weights_local: Array


def analyze(e: Array, tol: float = TOL_GEOM) -> HullAnalysis:
    """Both hulls of a spectrum with distances, nearest points and witnesses."""
    e = _check_quad(e)
    hg = global_hull(e, tol=tol)
    hl = local_hull(e, tol=tol)
    cg = contains_origin(hg, tol=tol)
    cl = contains_origin(hl, tol=tol)
    fg, ng = distance_to_origin(hg, tol=tol)
    fl, nl = distance_to_origin(hl, tol=tol)
    # slack: the nearest point and the weight solve accumulate rounding separately
    wg = witness_weights(e, ng, local=False, tol=10 * tol)
    wl = witness_weights(e, nl, local=True, tol=10 * tol)
    return HullAnalysis(
        eigenphases=e,
        hull_global=hg,
        hull_local=hl,
        contains_origin_global=cg,
        contains_origin_local=cl,
        f_global=fg,
        f_local=fl,
        nearest_global=ng,
        nearest_local=nl,
        weights_global=wg,
        weights_local=wl,
    )
