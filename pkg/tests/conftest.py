"""Shared helpers for the test suite."""

from __future__ import annotations

import numpy as np

Array = np.ndarray


def haar_unitary(rng: np.random.Generator, n: int = 4) -> Array:
    """Haar-distributed n x n unitary via the QR trick."""
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def random_state(rng: np.random.Generator, n: int = 4) -> Array:
    z = rng.normal(size=n) + 1j * rng.normal(size=n)
    return z / np.linalg.norm(z)
