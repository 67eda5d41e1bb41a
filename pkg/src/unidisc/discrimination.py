"""Single-shot discrimination of two two-qubit unitaries.

Given U1, U2 applied to a chosen pure input, the best achievable guessing
probability is governed by F = min |<psi|U1' U2|psi>| with U1' the adjoint of
U1, minimized over the allowed input class: all pure states (global scenario)
or product states psi_a x psi_b (local scenario).  When the product U1' U2 is
diagonal in the Bell basis both minima reduce to convex geometry on its
eigenphase spectrum; otherwise a brute-force oracle takes over.

The parallelogram value returned for the local scenario equals the true
product-state minimum whenever the spectrum points alternate around the unit
circle, which holds for every interaction vector in the ordered chamber
pi/4 >= vx >= vy >= |vz|.  Outside that position it is still an achievable
overlap, hence an upper bound on the local minimum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .canonical import bell_diagonal_phases, d_from_eigenphases, is_diagonal_form, wrap_angle
from .config import MAX_REPETITIONS, TOL_GEOM, TOL_IDENTICAL, TOL_PERFECT
from .errors import IdenticalUnitaries, InvalidArgument, NonDiagonalProduct, RepetitionLimitExceeded
from .hull import HullAnalysis, _nearest_on_segment, analyze, contains_origin, convex_hull
from .oracle import OracleConfig, brute_fidelity_global, brute_fidelity_product, oracle_product_state
from .states import Priors, ProductState, bell_to_computational, check_unitary, factor_product_state

Array = np.ndarray


def _product_unitary(u1: Array, u2: Array) -> Array:
    u1 = check_unitary(u1, 4)
    u2 = check_unitary(u2, 4)
    return u1.conj().T @ u2


def distinguishability(priors: Priors, fidelity: float) -> float:
    """Trace-norm bias D = sqrt(1 - 4 q1 q2 F^2) between the output states."""
    if not 0.0 <= fidelity <= 1.0 + 1e-12:
        raise InvalidArgument(f"fidelity must lie in [0, 1], got {fidelity}")
    f = min(fidelity, 1.0)
    return float(np.sqrt(max(1.0 - 4.0 * priors.q1 * priors.q2 * f * f, 0.0)))


def _global_witness(weights: Array) -> Array:
    return bell_to_computational(np.sqrt(weights))


def _local_witness(weights: Array) -> ProductState:
    # real Bell coefficients with w1 + w3 = w2 + w4 = 1/2 always factor
    return factor_product_state(bell_to_computational(np.sqrt(weights)))


def fidelity_global(
    u1: Array,
    u2: Array,
    strict_diagonal: bool = False,
    oracle_config: OracleConfig | None = None,
) -> tuple[float, Array]:
    """Worst-case overlap over all pure inputs, with a minimizing input.

    Uses the eigenphase hull when U1' U2 is Bell-diagonal, otherwise the
    brute-force oracle.  ``strict_diagonal`` turns the fallback into a
    NonDiagonalProduct error.
    """
    prod = _product_unitary(u1, u2)
    if is_diagonal_form(prod):
        _, lam = bell_diagonal_phases(prod)
        h = analyze(lam)
        return h.f_global, _global_witness(h.weights_global)
    if strict_diagonal:
        raise NonDiagonalProduct("U1' U2 is not diagonal in the Bell basis")
    res = brute_fidelity_global(prod, oracle_config)
    return res.value, res.argmin


def fidelity_local(
    u1: Array,
    u2: Array,
    strict_diagonal: bool = False,
    oracle_config: OracleConfig | None = None,
) -> tuple[float, ProductState]:
    """Worst-case overlap over product inputs, with a minimizing product state."""
    prod = _product_unitary(u1, u2)
    if is_diagonal_form(prod):
        _, lam = bell_diagonal_phases(prod)
        h = analyze(lam)
        return h.f_local, _local_witness(h.weights_local)
    if strict_diagonal:
        raise NonDiagonalProduct("U1' U2 is not diagonal in the Bell basis")
    res = brute_fidelity_product(prod, oracle_config)
    return res.value, oracle_product_state(res)


def _chord_minimum(u: Array) -> tuple[float, Array]:
    """min_psi |<psi|u|psi>| for one qubit: distance to the eigenvalue chord."""
    u = check_unitary(u, 2)
    z, v = np.linalg.eig(u)
    v = v / np.linalg.norm(v, axis=0, keepdims=True)
    if abs(z[0] - z[1]) < 1e-12:
        return float(abs(z[0])), v[:, 0]
    # unitary matrices are normal; re-orthogonalize against rounding
    v1 = v[:, 1] - np.vdot(v[:, 0], v[:, 1]) * v[:, 0]
    v1 /= np.linalg.norm(v1)
    nearest = _nearest_on_segment(complex(z[0]), complex(z[1]))
    t = abs(nearest - z[0]) / abs(z[1] - z[0])
    psi = np.sqrt(1.0 - t) * v[:, 0] + np.sqrt(t) * v1
    return float(abs(nearest)), psi


def local_unitary_fidelity(ua: Array, ub: Array) -> tuple[float, ProductState]:
    """Worst-case overlap for a pair differing by single-qubit unitaries.

    When U1' U2 = ua x ub the product-input minimum factorizes: each factor
    contributes the distance from the origin to the chord between its two
    eigenvalues, minimized by a weighted superposition of the eigenvectors.
    An entangled input can still do strictly better for such pairs, so this
    bounds only the local scenario.
    """
    fa, psa = _chord_minimum(ua)
    fb, psb = _chord_minimum(ub)
    return fa * fb, ProductState(alice=psa, bob=psb)


def min_repetitions_for_perfect(
    u1: Array,
    u2: Array,
    max_repetitions: int = MAX_REPETITIONS,
    tol: float = TOL_GEOM,
) -> int:
    """Smallest N with zero worst-case overlap for N parallel uses.

    N uses multiply every eigenphase by N, so the question is when the hull
    of {exp(-i N lam_j)} first contains the origin.  The circular spread of
    the spectrum gives the lower bound N >= pi / spread; from there the hull
    containment check is authoritative.  Raises IdenticalUnitaries when the
    spectrum is a single point (no N works) and RepetitionLimitExceeded past
    ``max_repetitions``.
    """
    prod = _product_unitary(u1, u2)
    z = np.linalg.eigvals(prod)
    z = z / np.abs(z)
    lam = -np.angle(z)
    theta = np.sort(np.angle(z))
    gaps = np.diff(theta, append=theta[0] + 2 * np.pi)
    spread = 2 * np.pi - gaps.max()
    if spread <= TOL_IDENTICAL:
        raise IdenticalUnitaries("the two unitaries differ by at most a global phase")
    start = max(1, int(np.ceil(np.pi / spread - 1e-9)))
    two_pi = 2 * np.pi
    for n in range(start, max_repetitions + 1):
        ang = np.sort((-n * lam) % two_pi)
        g = np.diff(ang, append=ang[0] + two_pi)
        if g.max() > np.pi + 2 * tol:
            continue
        # cheap angular test passed; the hull decides
        if contains_origin(convex_hull(np.exp(1j * ang)), tol=tol):
            return n
    raise RepetitionLimitExceeded(f"no perfect repetition count up to {max_repetitions}")


@dataclass(frozen=True)
class DiscriminationReport:
    """Everything the analysis produces for one pair of unitaries."""

    priors: Priors
    diagonal_form: bool
    method_global: str
    method_local: str
    spectrum_phases: Array
    interaction: Array | None
    fidelity_global: float
    fidelity_local: float
    distinguishability_global: float
    distinguishability_local: float
    success_global: float
    success_local: float
    perfect_global: bool
    perfect_local: bool
    min_repetitions: int | None
    repetition_status: str
    input_global: Array
    input_local: ProductState
    weights_global: Array | None
    weights_local: Array | None
    hull_analysis: HullAnalysis | None


def full_report(
    u1: Array,
    u2: Array,
    priors: Priors | None = None,
    strict_diagonal: bool = False,
    oracle_config: OracleConfig | None = None,
    max_repetitions: int = MAX_REPETITIONS,
) -> DiscriminationReport:
    """Run the complete single-shot analysis for one pair of unitaries."""
    priors = priors or Priors()
    prod = _product_unitary(u1, u2)
    diagonal = is_diagonal_form(prod)
    if diagonal:
        _, lam = bell_diagonal_phases(prod)
        h = analyze(lam)
        fg, fl = h.f_global, h.f_local
        wit_g = _global_witness(h.weights_global)
        wit_l = _local_witness(h.weights_local)
        spectrum = lam
        interaction = d_from_eigenphases(lam)
        perfect_g, perfect_l = h.contains_origin_global, h.contains_origin_local
        method = "hull"
        wg, wl = h.weights_global, h.weights_local
    else:
        if strict_diagonal:
            raise NonDiagonalProduct("U1' U2 is not diagonal in the Bell basis")
        res_g = brute_fidelity_global(prod, oracle_config)
        res_l = brute_fidelity_product(prod, oracle_config)
        fg, fl = res_g.value, res_l.value
        wit_g = res_g.argmin
        wit_l = oracle_product_state(res_l)
        spectrum = np.sort(wrap_angle(-np.angle(np.linalg.eigvals(prod))))[::-1]
        interaction = None
        perfect_g = fg <= TOL_PERFECT
        perfect_l = fl <= TOL_PERFECT
        method = "oracle"
        wg = wl = None
        h = None
    try:
        nrep: int | None = min_repetitions_for_perfect(u1, u2, max_repetitions=max_repetitions)
        rep_status = "found"
    except IdenticalUnitaries:
        nrep = None
        rep_status = "identical"
    except RepetitionLimitExceeded:
        nrep = None
        rep_status = "limit_exceeded"
    return DiscriminationReport(
        priors=priors,
        diagonal_form=diagonal,
        method_global=method,
        method_local=method,
        spectrum_phases=spectrum,
        interaction=interaction,
        fidelity_global=fg,
        fidelity_local=fl,
        distinguishability_global=distinguishability(priors, fg),
        distinguishability_local=distinguishability(priors, fl),
        success_global=(1.0 + distinguishability(priors, fg)) / 2.0,
        success_local=(1.0 + distinguishability(priors, fl)) / 2.0,
        perfect_global=perfect_g,
        perfect_local=perfect_l,
        min_repetitions=nrep,
        repetition_status=rep_status,
        input_global=wit_g,
        input_local=wit_l,
        weights_global=wg,
        weights_local=wl,
        hull_analysis=h,
    )
