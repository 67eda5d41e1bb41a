"""Numerical tolerances used throughout the package.

Every geometric or algebraic predicate in the library takes an explicit
tolerance argument whose default is drawn from this module, so a caller can
tighten or relax individual checks without monkey-patching.
"""

from __future__ import annotations

from dataclasses import dataclass

#: Deviation from unitarity, max-norm of U†U - I.
TOL_UNITARY = 1e-10

#: Deviation from unit norm for state vectors.
TOL_STATE = 1e-10

#: Residual allowed when factoring a product state or a product unitary.
TOL_PRODUCT = 1e-8

#: Slack for convex-geometry predicates (containment, witness residuals).
TOL_GEOM = 1e-9

#: Max-norm reconstruction error allowed for the canonical decomposition.
TOL_RECONSTRUCT = 1e-8

#: An F value at or below this counts as perfect discrimination when the
#: value comes from an optimizer rather than from exact geometry.
TOL_PERFECT = 1e-6

#: Two unitaries closer than this (up to global phase) count as identical.
TOL_IDENTICAL = 1e-10

#: Hard cap for the repetition search in min_repetitions_for_perfect.
MAX_REPETITIONS = 10**6


@dataclass(frozen=True)
class Tolerances:
    """Bundle of the default tolerances, for callers that pass them around."""

    unitary: float = TOL_UNITARY
    state: float = TOL_STATE
    product: float = TOL_PRODUCT
    geom: float = TOL_GEOM
    reconstruct: float = TOL_RECONSTRUCT
    perfect: float = TOL_PERFECT
    identical: float = TOL_IDENTICAL


DEFAULT_TOLERANCES = Tolerances()
