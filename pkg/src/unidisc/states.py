"""Two-qubit state algebra in the Bell basis.

The fixed Bell basis used everywhere in this package is

    |Phi1> = (|00> + |11>)/sqrt(2)
    |Phi2> = (|00> - |11>)/sqrt(2)
    |Phi3> = (|01> - |10>)/sqrt(2)
    |Phi4> = (|01> + |10>)/sqrt(2)

with computational components ordered |00>, |01>, |10>, |11>.  The order and
signs matter: the concurrence sign pattern and the pairing used by the local
hull both refer to these indices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import TOL_PRODUCT, TOL_STATE, TOL_UNITARY
from .errors import InvalidArgument, InvalidState, NotAProductState, NotUnitary

Array = np.ndarray

_SQ2 = np.sqrt(2.0)

#: Columns are |Phi1>..|Phi4> in computational order |00>,|01>,|10>,|11>.
BELL_BASIS = np.array(
    [
        [1.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 1.0],
        [0.0, 0.0, -1.0, 1.0],
        [1.0, -1.0, 0.0, 0.0],
    ]
) / _SQ2

#: Sign of sigma_y (x) sigma_y on |Phi_j>; fixes the concurrence sign pattern.
BELL_SPIN_FLIP_SIGNS = np.array([-1.0, 1.0, -1.0, 1.0])


def check_state(s: Array, tol: float = TOL_STATE) -> Array:
    """Return ``s`` as a complex length-4 vector, or raise InvalidState."""
    s = np.asarray(s, dtype=complex)
    if s.shape != (4,):
        raise InvalidState(f"expected a length-4 state vector, got shape {s.shape}")
    norm = np.linalg.norm(s)
    if abs(norm - 1.0) > tol:
        raise InvalidState(f"state norm {norm} deviates from 1 by more than {tol}")
    return s


def check_single_qubit_state(s: Array, tol: float = TOL_STATE) -> Array:
    """Return ``s`` as a complex length-2 unit vector, or raise InvalidState."""
    s = np.asarray(s, dtype=complex)
    if s.shape != (2,):
        raise InvalidState(f"expected a length-2 state vector, got shape {s.shape}")
    norm = np.linalg.norm(s)
    if abs(norm - 1.0) > tol:
        raise InvalidState(f"state norm {norm} deviates from 1 by more than {tol}")
    return s


def check_unitary(u: Array, dim: int | None = None, tol: float = TOL_UNITARY) -> Array:
    """Return ``u`` as a complex square matrix after a unitarity check.

    Parameters
    ----------
    u : array_like
        Candidate unitary.
    dim : int, optional
        Required dimension; any square matrix is accepted when omitted.
    tol : float
        Allowed max-norm deviation of U†U from the identity.
    """
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise NotUnitary(f"expected a square matrix, got shape {u.shape}")
    if dim is not None and u.shape != (dim, dim):
        raise NotUnitary(f"expected a {dim}x{dim} matrix, got shape {u.shape}")
    dev = np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0])))
    if dev > tol:
        raise NotUnitary(f"U†U deviates from identity by {dev:.3e} (tol {tol:.0e})")
    return u


def bell_to_computational(c: Array) -> Array:
    """Map Bell-basis coefficients to computational amplitudes.

    >>> bell_to_computational([1, 0, 0, 0])  # doctest: +NORMALIZE_WHITESPACE
    array([0.70710678+0.j, 0. +0.j, 0. +0.j, 0.70710678+0.j])
    """
    c = np.asarray(c, dtype=complex)
    if c.shape != (4,):
        raise InvalidState(f"expected 4 Bell coefficients, got shape {c.shape}")
    return BELL_BASIS @ c


def computational_to_bell(s: Array) -> Array:
    """Map computational amplitudes to Bell-basis coefficients.

    The Bell basis is real, so the transform is the plain transpose.
    """
    s = np.asarray(s, dtype=complex)
    if s.shape != (4,):
        raise InvalidState(f"expected 4 amplitudes, got shape {s.shape}")
    return BELL_BASIS.T @ s


def concurrence(s: Array) -> float:
    """Concurrence of a pure two-qubit state.

    In Bell coefficients ``c`` this is ``|-c1^2 + c2^2 - c3^2 + c4^2|`` (squares
    of the complex coefficients, not of their moduli); it vanishes exactly on
    product states.

    >>> round(concurrence([1, 0, 0, 0]), 12)   # |00>
    0.0
    >>> round(concurrence(bell_to_computational([1, 0, 0, 0])), 12)
    1.0
    """
    s = check_state(s)
    c = computational_to_bell(s)
    return float(abs(np.sum(BELL_SPIN_FLIP_SIGNS * c * c)))


@dataclass(frozen=True)
class ProductState:
    """A two-qubit product state |alice> (x) |bob>."""

    alice: Array
    bob: Array

    def __post_init__(self) -> None:
        object.__setattr__(self, "alice", check_single_qubit_state(self.alice))
        object.__setattr__(self, "bob", check_single_qubit_state(self.bob))

    def joint(self) -> Array:
        """The length-4 computational state vector."""
        return np.kron(self.alice, self.bob)


def factor_product_state(s: Array, tol: float = TOL_PRODUCT) -> ProductState:
    """Factor a product state into its single-qubit tensor factors.

    The amplitude matrix ``M[i, j] = <ij|s>`` of a product state has rank one;
    the factors are read off its dominant singular pair.  Raises
    NotAProductState when the reconstruction misses ``s`` (up to a global
    phase) by more than ``tol`` in max norm.
    """
    s = check_state(s)
    m = s.reshape(2, 2)
    u, _, vh = np.linalg.svd(m)
    alice = u[:, 0]
    bob = vh[0, :]
    joint = np.kron(alice, bob)
    z = np.vdot(s, joint)
    if abs(z) < 1.0 - tol:
        raise NotAProductState(
            f"state is entangled: product overlap {abs(z):.6f}, concurrence {concurrence(s):.3e}"
        )
    # absorb the SVD phase ambiguity into alice so joint() reproduces s itself
    alice = alice * (z.conjugate() / abs(z))
    joint = np.kron(alice, bob)
    dev = np.max(np.abs(joint - s))
    if dev > tol:
        raise NotAProductState(f"product reconstruction misses the state by {dev:.3e}")
    return ProductState(alice=alice, bob=bob)


def overlap(u: Array, s: Array) -> complex:
    """The matrix element <s|U|s>."""
    u = check_unitary(u, dim=4)
    s = check_state(s)
    return complex(np.vdot(s, u @ s))


@dataclass(frozen=True)
class Priors:
    """Prior probabilities (q1, q2) for the two hypotheses."""

    q1: float = 0.5
    q2: float = 0.5

    def __post_init__(self) -> None:
        if not (0.0 <= self.q1 <= 1.0 and 0.0 <= self.q2 <= 1.0):
            raise InvalidArgument(f"priors must lie in [0, 1], got ({self.q1}, {self.q2})")
        if abs(self.q1 + self.q2 - 1.0) > 1e-12:
            raise InvalidArgument(f"priors must sum to 1, got {self.q1 + self.q2}")


def success_probability_pure(p: Priors, fidelity: float) -> float:
    """Optimal single-shot success probability for two pure hypotheses.

    For hypotheses occurring with priors (q1, q2) whose outputs overlap with
    modulus ``fidelity``, the best measurement succeeds with probability

        (1 + sqrt(1 - 4 q1 q2 fidelity^2)) / 2.

    >>> round(success_probability_pure(Priors(), np.sqrt(2) / 2), 6)
    0.853553
    """
    if not 0.0 <= fidelity <= 1.0 + 1e-12:
        raise InvalidArgument(f"fidelity must lie in [0, 1], got {fidelity}")
    f = min(float(fidelity), 1.0)
    radicand = max(1.0 - 4.0 * p.q1 * p.q2 * f * f, 0.0)
    return 0.5 * (1.0 + float(np.sqrt(radicand)))
