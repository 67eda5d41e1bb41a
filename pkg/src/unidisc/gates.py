"""Named two-qubit gates, in the computational basis |00>, |01>, |10>, |11>."""

from __future__ import annotations

import numpy as np

from .canonical import interaction_unitary
from .errors import InvalidArgument

Array = np.ndarray

IDENTITY: Array = np.eye(4, dtype=complex)

CNOT: Array = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)

CZ: Array = np.diag([1, 1, 1, -1]).astype(complex)

SWAP: Array = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)

ISWAP: Array = np.array(
    [[1, 0, 0, 0], [0, 0, 1j, 0], [0, 1j, 0, 0], [0, 0, 0, 1]], dtype=complex
)

SQRT_SWAP: Array = np.array(
    [
        [1, 0, 0, 0],
        [0, (1 + 1j) / 2, (1 - 1j) / 2, 0],
        [0, (1 - 1j) / 2, (1 + 1j) / 2, 0],
        [0, 0, 0, 1],
    ],
    dtype=complex,
)


def xx(theta: float) -> Array:
    """exp(-i theta XX): the pure XX interaction at strength theta."""
    return interaction_unitary(np.array([float(theta), 0.0, 0.0]))


def cphase(theta: float) -> Array:
    """Controlled phase diag(1, 1, 1, e^{i theta})."""
    return np.diag([1.0, 1.0, 1.0, np.exp(1j * float(theta))]).astype(complex)


def local_phase(theta_a: float, theta_b: float) -> Array:
    """diag(1, e^{i theta_a}) x diag(1, e^{i theta_b}): no interaction at all."""
    da = np.diag([1.0, np.exp(1j * float(theta_a))])
    db = np.diag([1.0, np.exp(1j * float(theta_b))])
    return np.kron(da, db).astype(complex)


_FIXED = {
    "identity": IDENTITY,
    "cnot": CNOT,
    "cz": CZ,
    "swap": SWAP,
    "iswap": ISWAP,
    "sqrt_swap": SQRT_SWAP,
}

_ONE_ANGLE = {"xx": xx, "cphase": cphase}

GATE_NAMES: tuple[str, ...] = tuple(sorted((*_FIXED, *_ONE_ANGLE, "local_phase")))


def named_gate(name: str, angles: tuple[float, ...] = ()) -> Array:
    """Look up a gate by name, with angles where the family needs them.

    >>> complex(named_gate("cnot")[3, 2])
    (1+0j)
    >>> float(named_gate("cphase", (3.141592653589793,))[3, 3].real)
    -1.0
    """
    key = name.strip().lower()
    if key in _FIXED:
        if angles:
            raise InvalidArgument(f"gate {name!r} takes no angles")
        return _FIXED[key].copy()
    if key in _ONE_ANGLE:
        if len(angles) != 1:
            raise InvalidArgument(f"gate {name!r} takes exactly one angle")
        return _ONE_ANGLE[key](angles[0])
    if key == "local_phase":
        if len(angles) != 2:
            raise InvalidArgument("gate 'local_phase' takes exactly two angles")
        return local_phase(angles[0], angles[1])
    raise InvalidArgument(f"unknown gate {name!r}; known: {', '.join(GATE_NAMES)}")
