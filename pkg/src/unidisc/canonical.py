"""Canonical (Cartan) form of two-qubit unitaries.

Any two-qubit unitary W factors as

    W = exp(i phase) (ua (x) ub) W[d] (va (x) vb)†

where the interaction part

    W[d] = exp(-i (vx XX + vy YY + vz ZZ)),   d = (vx, vy, vz),

is diagonal in the Bell basis with eigenphases

    lam1 =  vx - vy + vz        on |Phi1>
    lam2 = -vx + vy + vz        on |Phi2>
    lam3 = -vx - vy - vz        on |Phi3>
    lam4 =  vx + vy - vz        on |Phi4>

so that W[d] = sum_j exp(-i lam_j) |Phi_j><Phi_j|.

The interaction vector is folded into the Weyl chamber

    pi/4 >= vx >= vy >= |vz|,

with vz >= 0 whenever the local-equivalence class allows it.  Classes that are
not locally equivalent to their complex conjugate (Makhlin's second invariant
nonzero) genuinely need vz < 0; for those the sign is kept rather than silently
returning a different gate, so the reconstruction identity above always holds
exactly.  On the vx = pi/4 boundary the sign of vz is normalized to be
nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import TOL_GEOM, TOL_RECONSTRUCT, TOL_UNITARY
from .errors import DecompositionFailed, InconsistentSpectrum, InvalidArgument, NonDiagonalProduct
from .states import BELL_BASIS, check_unitary

Array = np.ndarray

PI4 = np.pi / 4

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

#: Bell basis with phases (|Phi1>, -i|Phi2>, |Phi3>, -i|Phi4>).  In this basis
#: W[d] stays diagonal with the same eigenphase order, and every local product
#: u (x) v becomes a real orthogonal matrix, which is what the decomposition
#: below exploits.
MAGIC_BASIS = BELL_BASIS.astype(complex) @ np.diag([1.0, -1.0j, 1.0, -1.0j])

#: Quarter-turn local rotations used to permute interaction axes:
#: conjugating by exp(-i pi/4 sigma_l) (x) itself swaps the other two axes.
_AXIS_SWAP_ROT = tuple(
    np.cos(PI4) * np.eye(2) - 1j * np.sin(PI4) * PAULIS[l] for l in range(3)
)


def wrap_angle(x: Array | float) -> Array | float:
    """Wrap angles to the interval (-pi, pi]."""
    return -np.mod(-np.asarray(x) + np.pi, 2 * np.pi) + np.pi


def eigenphases_from_d(d: Array) -> Array:
    """Eigenphases (lam1..lam4) of W[d] on the Bell states, by index.

    >>> eigenphases_from_d([np.pi / 4, 0, 0]) / np.pi
    array([ 0.25, -0.25, -0.25,  0.25])
    """
    d = _check_d(d)
    vx, vy, vz = d
    return np.array([vx - vy + vz, -vx + vy + vz, -vx - vy - vz, vx + vy - vz])


def d_from_eigenphases(e: Array, tol: float = TOL_GEOM) -> Array:
    """Invert the linear eigenphase map.

    The quadruple must sum to zero (mod 2 pi) within ``tol``; the returned
    vector solves vx = (lam1+lam4)/2, vy = (lam2+lam4)/2, vz = (lam1+lam2)/2.
    When the sum is exactly zero the round trip through eigenphases_from_d is
    exact; a residual multiple of 2 pi lands entirely on lam3.
    """
    e = np.asarray(e, dtype=float)
    if e.shape != (4,):
        raise InvalidArgument(f"expected 4 eigenphases, got shape {e.shape}")
    gap = wrap_angle(np.sum(e))
    if abs(gap) > tol:
        raise InconsistentSpectrum(f"eigenphases sum to {np.sum(e)}, not 0 mod 2pi (tol {tol:.0e})")
    l1, l2, _, l4 = e
    return np.array([(l1 + l4) / 2, (l2 + l4) / 2, (l1 + l2) / 2])


def interaction_unitary(d: Array) -> Array:
    """The interaction unitary W[d] = sum_j exp(-i lam_j) |Phi_j><Phi_j|.

    Equal to expm(-i (vx XX + vy YY + vz ZZ)); built here from the Bell
    projectors, which is exact and needs no matrix exponential.
    """
    lam = eigenphases_from_d(d)
    return (BELL_BASIS * np.exp(-1j * lam)) @ BELL_BASIS.T


def _check_d(d: Array) -> Array:
    d = np.asarray(d, dtype=float)
    if d.shape != (3,):
        raise InvalidArgument(f"expected an interaction vector of shape (3,), got {d.shape}")
    return d


def in_weyl_chamber(d: Array, tol: float = TOL_GEOM) -> bool:
    """Whether ``d`` lies in the canonical cell pi/4 >= vx >= vy >= |vz|.

    vz carries a sign: classes that are not locally equivalent to their
    complex conjugate genuinely need vz < 0, and only on the vx = pi/4 face,
    where a mirror move connects the two signs, is the cell normalized to
    vz >= 0.
    """
    vx, vy, vz = _check_d(d)
    if not (PI4 + tol >= vx and vx >= vy - tol and vy >= abs(vz) - tol):
        return False
    if vz < -tol and vx >= PI4 - 1e-9:
        return False  # the boundary face stores the vz >= 0 representative
    return True


def random_interaction_vector(rng: np.random.Generator) -> Array:
    """Draw d uniformly from the Weyl chamber pi/4 >= vx >= vy >= vz >= 0."""
    return np.sort(rng.uniform(0.0, PI4, size=3))[::-1].copy()


def is_diagonal_form(w: Array, tol: float = TOL_GEOM) -> bool:
    """Whether ``w`` is diagonal in the Bell basis (up to ``tol``)."""
    w = check_unitary(w, dim=4)
    wb = BELL_BASIS.T @ w @ BELL_BASIS
    off = wb - np.diag(np.diag(wb))
    return bool(np.max(np.abs(off)) <= tol)


def bell_diagonal_phases(w: Array, tol: float = TOL_GEOM) -> tuple[float, Array]:
    """Split a Bell-diagonal unitary into a global phase and eigenphases.

    Returns ``(phase, lam)`` with ``w = exp(i phase) sum_j exp(-i lam_j)
    |Phi_j><Phi_j|``, each ``lam_j`` in (-pi, pi] and ``sum(lam) = 0`` exactly
    (the phase is chosen among the four branch candidates that make the
    wrapped quadruple sum to zero).  Raises NonDiagonalProduct otherwise.
    """
    w = check_unitary(w, dim=4)
    wb = BELL_BASIS.T @ w @ BELL_BASIS
    off = wb - np.diag(np.diag(wb))
    dev = float(np.max(np.abs(off)))
    if dev > tol:
        raise NonDiagonalProduct(f"unitary is not Bell-diagonal: off-diagonal {dev:.3e} (tol {tol:.0e})")
    raw = -np.angle(np.diag(wb))
    mean = float(np.sum(raw)) / 4.0
    for k in range(4):
        shift = mean + k * np.pi / 2
        lam = wrap_angle(raw - shift)
        if abs(np.sum(lam)) <= 1e-6:
            lam = lam - np.sum(lam) / 4.0  # remove float residue exactly
            return -float(shift), lam
    raise DecompositionFailed("could not branch-align Bell eigenphases to a zero-sum quadruple")


@dataclass(frozen=True)
class CanonicalForm:
    """Result of canonical_decompose: W = exp(i phase) (ua (x) ub) W[d] (va (x) vb)†."""

    d: Array
    ua: Array
    ub: Array
    va: Array
    vb: Array
    phase: float

    def reconstruct(self) -> Array:
        """Rebuild the two-qubit unitary from the stored factors."""
        left = np.kron(self.ua, self.ub)
        right = np.kron(self.va, self.vb).conj().T
        return np.exp(1j * self.phase) * (left @ interaction_unitary(self.d) @ right)


def _diag_complex_symmetric_unitary(m: Array) -> tuple[Array, Array]:
    """Diagonalize a complex symmetric unitary with a real orthogonal basis.

    Returns ``(p, mu)`` with ``p`` in SO(4) and ``p.T @ m @ p = diag(mu)``.
    Real and imaginary parts of such an ``m`` are commuting real symmetric
    matrices; a generic fixed-seed linear mix of the two separates every
    eigenspace that can be separated, and jointly degenerate directions are
    free, so the verification below succeeds for any valid input.
    """
    a = (m.real + m.real.T) / 2
    b = (m.imag + m.imag.T) / 2
    rng = np.random.default_rng(0)
    mp = m
    for trial in range(200):
        if trial == 0:
            mix = a
        else:
            mix = rng.normal() * a + rng.normal() * b
        _, p = np.linalg.eigh(mix)
        diag = p.T @ mp @ p
        off = diag - np.diag(np.diag(diag))
        if np.max(np.abs(off)) <= 1e-11:
            if np.linalg.det(p) < 0:
                p = p.copy()
                p[:, -1] = -p[:, -1]
            return p, np.diag(p.T @ mp @ p).copy()
        if trial == 99:
            # last resort: break exact ties that the mixes cannot see
            noise = rng.normal(size=(4, 4)) * 1e-13
            mp = m + (noise + noise.T) / 2 + 1j * 0.0
            a = (mp.real + mp.real.T) / 2
            b = (mp.imag + mp.imag.T) / 2
    raise DecompositionFailed("simultaneous diagonalization of the magic Gram matrix failed")


def _factor_local_product(x: Array, tol: float = 1e-8) -> tuple[Array, Array]:
    """Split a 4x4 tensor product of single-qubit unitaries into its factors.

    The input may carry an arbitrary global phase; the returned pair (a, b)
    satisfies a (x) b = exp(i theta) x for some theta, with each factor's
    largest entry normalized to be real and nonnegative.
    """
    t = x.reshape(2, 2, 2, 2).transpose(0, 2, 1, 3).reshape(4, 4)
    u, s, vh = np.linalg.svd(t)
    if s[1] > tol * s[0]:
        raise DecompositionFailed(f"matrix is not a local tensor product (sigma1/sigma0 = {s[1] / s[0]:.3e})")
    a = (u[:, 0] * np.sqrt(s[0])).reshape(2, 2)
    b = (vh[0, :] * np.sqrt(s[0])).reshape(2, 2)
    a = _closest_unitary(_normalize_phase(a))
    b = _closest_unitary(_normalize_phase(b))
    return a, b


def _normalize_phase(a: Array) -> Array:
    k = int(np.argmax(np.abs(a)))
    z = a.flat[k]
    return a * (z.conjugate() / abs(z))


def _closest_unitary(a: Array) -> Array:
    u, _, vh = np.linalg.svd(a)
    return u @ vh


def _move_shift(k: int, n: int, d: Array, k1: Array, k2: Array) -> tuple[Array, Array, Array]:
    """d[k] -= n pi/2, compensated on the right by (sigma_k (x) sigma_k)^n."""
    d = d.copy()
    d[k] -= n * np.pi / 2
    if n % 2:
        k2 = np.kron(PAULIS[k], PAULIS[k]) @ k2
    return d, k1, k2


def _move_flip(j: int, k: int, d: Array, k1: Array, k2: Array) -> tuple[Array, Array, Array]:
    """Flip the signs of d[j] and d[k], conjugating by sigma_l (x) 1."""
    l = 3 - j - k
    s = np.kron(PAULIS[l], np.eye(2))
    d = d.copy()
    d[j] = -d[j]
    d[k] = -d[k]
    return d, k1 @ s, s @ k2


def _move_swap(j: int, k: int, d: Array, k1: Array, k2: Array) -> tuple[Array, Array, Array]:
    """Exchange d[j] and d[k], conjugating by the quarter turn about axis l."""
    l = 3 - j - k
    u = _AXIS_SWAP_ROT[l]
    uu = np.kron(u, u)
    d = d.copy()
    d[j], d[k] = d[k], d[j]
    return d, k1 @ uu.conj().T, uu @ k2


def _fold_to_chamber(d: Array, k1: Array, k2: Array) -> tuple[Array, Array, Array]:
    """Drive d into pi/4 >= vx >= vy >= |vz| (vz >= 0 on the vx = pi/4 face)."""
    # wrap every coordinate into (-pi/4, pi/4]
    for k in range(3):
        n = int(np.ceil((d[k] - PI4) / (np.pi / 2) - 1e-13))
        if n:
            d, k1, k2 = _move_shift(k, n, d, k1, k2)
    # sort by magnitude, descending (three comparisons suffice)
    for j, k in ((0, 1), (1, 2), (0, 1)):
        if abs(d[k]) > abs(d[j]) + 1e-15:
            d, k1, k2 = _move_swap(j, k, d, k1, k2)
    # make the two leading coordinates nonnegative with pairwise sign flips
    if d[0] < 0 and d[1] < 0:
        d, k1, k2 = _move_flip(0, 1, d, k1, k2)
    elif d[0] < 0:
        d, k1, k2 = _move_flip(0, 2, d, k1, k2)
    elif d[1] < 0:
        d, k1, k2 = _move_flip(1, 2, d, k1, k2)
    # on the vx = pi/4 face the sign of vz is a gauge choice; make it positive
    if d[2] < -1e-12 and d[0] >= PI4 - 1e-9:
        d, k1, k2 = _move_shift(0, 1, d, k1, k2)
        d, k1, k2 = _move_flip(0, 2, d, k1, k2)
    return d, k1, k2


def canonical_decompose(w: Array, tol_reconstruct: float = TOL_RECONSTRUCT) -> CanonicalForm:
    """Canonical form of a two-qubit unitary.

    Parameters
    ----------
    w : array_like
        4x4 unitary (any global phase, any determinant phase).
    tol_reconstruct : float
        Max-norm error allowed between ``w`` and the reconstruction.

    Returns
    -------
    CanonicalForm
        Interaction vector in the Weyl chamber (see module docstring for the
        vz sign convention), single-qubit factors and the global phase.

    Notes
    -----
    The algorithm normalizes det w to one, moves to the magic basis where the
    Gram matrix m = V^T V of the normalized unitary becomes complex symmetric,
    diagonalizes m with a real orthogonal basis, reads half-angle eigenphases
    off the unit-circle spectrum, and folds the resulting interaction vector
    into the Weyl chamber with compensated local moves.
    """
    w = check_unitary(w, dim=4, tol=TOL_UNITARY)
    det = np.linalg.det(w)
    v = w * det ** (-0.25)
    vm = MAGIC_BASIS.conj().T @ v @ MAGIC_BASIS
    m = vm.T @ vm
    p, mu = _diag_complex_symmetric_unitary(m)

    lam = -np.angle(mu) / 2.0  # in [-pi/2, pi/2)
    # pick branches so the eigenphases sum to zero exactly (det W[d] = 1)
    k = int(round(float(np.sum(lam)) / np.pi))
    for _ in range(abs(k)):
        j = int(np.argmax(lam)) if k > 0 else int(np.argmin(lam))
        lam[j] -= np.sign(k) * np.pi
    lam[3] = -(lam[0] + lam[1] + lam[2])

    o2 = p.T
    o1 = vm @ p @ np.diag(np.exp(1j * lam))
    if np.max(np.abs(o1.imag)) > 1e-8:
        raise DecompositionFailed(f"left factor is not real orthogonal (imag {np.max(np.abs(o1.imag)):.3e})")
    k1 = MAGIC_BASIS @ o1.real.astype(complex) @ MAGIC_BASIS.conj().T
    k2 = MAGIC_BASIS @ o2.astype(complex) @ MAGIC_BASIS.conj().T

    d = np.array([(lam[0] + lam[3]) / 2, (lam[1] + lam[3]) / 2, (lam[0] + lam[1]) / 2])
    d, k1, k2 = _fold_to_chamber(d, k1, k2)

    ua, ub = _factor_local_product(k1)
    ra, rb = _factor_local_product(k2)
    va, vb = ra.conj().T, rb.conj().T

    rebuilt = np.kron(ua, ub) @ interaction_unitary(d) @ np.kron(ra, rb)
    z = np.trace(rebuilt.conj().T @ w) / 4.0
    if abs(z) < 0.5:
        raise DecompositionFailed("reconstruction lost the global phase alignment")
    phase = float(np.angle(z))
    dev = float(np.max(np.abs(np.exp(1j * phase) * rebuilt - w)))
    if dev > tol_reconstruct:
        raise DecompositionFailed(f"reconstruction error {dev:.3e} exceeds {tol_reconstruct:.0e}")
    return CanonicalForm(d=d, ua=ua, ub=ub, va=va, vb=vb, phase=phase)
