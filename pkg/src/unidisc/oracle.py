"""Brute-force optimizers used to validate the geometric answers.

These deliberately avoid any spectral insight: they minimize |<psi|U|psi>|
directly over state vectors, by seeded random sampling followed by a batched
coordinate pattern search.  Same configuration, same result, bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DisagreementError, InvalidArgument
from .states import Priors, ProductState, check_state, check_unitary

Array = np.ndarray


@dataclass(frozen=True)
class OracleConfig:
    """Search budget and seed for the brute-force minimizers."""

    seed: int = 12345
    coarse_samples: int = 20000
    refine_starts: int = 32
    refine_sweeps: int = 60
    refine_step: float = 0.3
    refine_shrink: float = 0.5
    tol: float = 1e-6

    def __post_init__(self) -> None:
        if self.coarse_samples < 1 or self.refine_starts < 1 or self.refine_sweeps < 0:
            raise InvalidArgument("oracle budgets must be positive")
        if not 0 < self.refine_shrink < 1:
            raise InvalidArgument(f"refine_shrink must be in (0, 1), got {self.refine_shrink}")


@dataclass(frozen=True)
class OracleResult:
    value: float
    argmin: Array
    evaluations: int
    converged: bool


def _overlap_batch(u: Array, states: Array) -> Array:
    # |<psi|U|psi>| for a batch of row vectors
    return np.abs(np.einsum("ni,ij,nj->n", states.conj(), u, states))


def _pattern_search(
    u: Array,
    to_states,
    x: Array,
    cfg: OracleConfig,
) -> tuple[float, Array, int, bool]:
    """Batched coordinate descent on a chart.

    ``x`` has shape (starts, dims); ``to_states(x)`` maps chart points to
    normalized state rows.  Each start keeps its own step, halved after any
    full sweep that improved nothing for it.
    """
    nstarts, dims = x.shape
    vals = _overlap_batch(u, to_states(x))
    steps = np.full(nstarts, cfg.refine_step)
    evals = nstarts
    for _ in range(cfg.refine_sweeps):
        improved = np.zeros(nstarts, dtype=bool)
        for k in range(dims):
            for sgn in (1.0, -1.0):
                cand = x.copy()
                cand[:, k] += sgn * steps
                cv = _overlap_batch(u, to_states(cand))
                evals += nstarts
                better = cv < vals - 1e-15
                x[better] = cand[better]
                vals[better] = cv[better]
                improved |= better
        steps[~improved] *= cfg.refine_shrink
        if steps.max() < 1e-12:
            break
    best = int(np.argmin(vals))
    converged = bool(steps[best] < cfg.tol)
    return float(vals[best]), x[best].copy(), evals, converged


def brute_fidelity_global(u: Array, config: OracleConfig | None = None) -> OracleResult:
    """min over all pure inputs of |<psi|U|psi>|, found numerically.

    The chart is the raw real/imaginary parts of the amplitudes, normalized
    on evaluation, so the search space has no boundary.
    """
    cfg = config or OracleConfig()
    u = check_unitary(u, 4)
    rng = np.random.default_rng(cfg.seed)
    z = rng.normal(size=(cfg.coarse_samples, 4)) + 1j * rng.normal(size=(cfg.coarse_samples, 4))
    z /= np.linalg.norm(z, axis=1, keepdims=True)
    vals = _overlap_batch(u, z)
    order = np.argsort(vals, kind="stable")[: cfg.refine_starts]
    x0 = np.concatenate([z[order].real, z[order].imag], axis=1)

    def to_states(x: Array) -> Array:
        s = x[:, :4] + 1j * x[:, 4:]
        return s / np.linalg.norm(s, axis=1, keepdims=True)

    value, xbest, evals, converged = _pattern_search(u, to_states, x0, cfg)
    state = to_states(xbest[None, :])[0]
    return OracleResult(value=value, argmin=state, evaluations=cfg.coarse_samples + evals, converged=converged)


def _angles_to_products(x: Array) -> Array:
    # chart: Bloch angles (theta_a, phi_a, theta_b, phi_b)
    ca, sa = np.cos(x[:, 0] / 2), np.sin(x[:, 0] / 2)
    cb, sb = np.cos(x[:, 2] / 2), np.sin(x[:, 2] / 2)
    a = np.stack([ca, sa * np.exp(1j * x[:, 1])], axis=1)
    b = np.stack([cb, sb * np.exp(1j * x[:, 3])], axis=1)
    return np.einsum("ni,nj->nij", a, b).reshape(-1, 4)


def brute_fidelity_product(u: Array, config: OracleConfig | None = None) -> OracleResult:
    """min over product inputs psi_a x psi_b of |<psi|U|psi>|.

    Works on the four-angle Bloch chart, which covers every product state up
    to irrelevant phases; the chart is periodic so steps never need clamping.
    ``argmin`` is the product state as a length-4 vector.
    """
    cfg = config or OracleConfig()
    u = check_unitary(u, 4)
    rng = np.random.default_rng(cfg.seed)
    n = cfg.coarse_samples
    x = np.empty((n, 4))
    x[:, 0] = np.arccos(rng.uniform(-1.0, 1.0, size=n))
    x[:, 2] = np.arccos(rng.uniform(-1.0, 1.0, size=n))
    x[:, 1] = rng.uniform(0.0, 2 * np.pi, size=n)
    x[:, 3] = rng.uniform(0.0, 2 * np.pi, size=n)
    vals = _overlap_batch(u, _angles_to_products(x))
    order = np.argsort(vals, kind="stable")[: cfg.refine_starts]
    value, xbest, evals, converged = _pattern_search(u, _angles_to_products, x[order].copy(), cfg)
    state = _angles_to_products(xbest[None, :])[0]
    return OracleResult(value=value, argmin=state, evaluations=n + evals, converged=converged)


def oracle_product_state(result: OracleResult) -> ProductState:
    """Factor an oracle argmin from the product search into its two qubits."""
    from .states import factor_product_state

    return factor_product_state(result.argmin)


def brute_helstrom(priors: Priors, s1: Array, s2: Array) -> float:
    """Optimal success probability for discriminating two known pure states.

    Computes the trace norm of q1 |s1><s1| - q2 |s2><s2| two independent
    ways: the closed form sqrt(1 - 4 q1 q2 |<s1|s2>|^2) and a direct
    eigenvalue sum.  The two must agree to 1e-8 or the call fails loudly;
    the closed form is returned.
    """
    s1 = check_state(s1)
    s2 = check_state(s2)
    if s1.shape != s2.shape:
        raise InvalidArgument("states must have the same dimension")
    ov = abs(np.vdot(s1, s2))
    closed = float(np.sqrt(max(1.0 - 4.0 * priors.q1 * priors.q2 * ov * ov, 0.0)))
    m = priors.q1 * np.outer(s1, s1.conj()) - priors.q2 * np.outer(s2, s2.conj())
    direct = float(np.sum(np.abs(np.linalg.eigvalsh(m))))
    if abs(closed - direct) > 1e-8:
        raise DisagreementError(f"trace-norm routes disagree: closed {closed!r} vs eigenvalue {direct!r}")
    return (1.0 + closed) / 2.0
