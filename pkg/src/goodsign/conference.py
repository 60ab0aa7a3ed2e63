"""Symmetric conference matrices: Paley construction, normalization, cores.

A conference matrix of order n is a symmetric {0, +-1} matrix with zero
diagonal satisfying ``C @ C.T == (n-1) * I`` exactly. The identity is checked
in integer arithmetic throughout; no tolerances are involved. The Paley
construction covers orders ``q + 1`` for primes ``q = 1 (mod 4)``; prime
powers would need finite-field arithmetic and are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def verify_conference(matrix: np.ndarray) -> bool:
    """True iff the matrix is a symmetric conference matrix (exact check)."""
    m = np.asarray(matrix)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        return False
    if not np.issubdtype(m.dtype, np.integer):
        if not np.array_equal(m, m.astype(np.int64)):
            return False
        m = m.astype(np.int64)
    n = m.shape[0]
    if not np.array_equal(m, m.T):
        return False
    if np.any(np.diagonal(m) != 0):
        return False
    if not np.all(np.isin(m, (-1, 0, 1))):
        return False
    return np.array_equal(m @ m.T, (n - 1) * np.eye(n, dtype=np.int64))


@dataclass(frozen=True)
class ConferenceMatrix:
    """A verified symmetric conference matrix; ``normalized`` means the first
    row (and by symmetry the first column) is all +1 off the diagonal."""

    matrix: np.ndarray
    normalized: bool

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=np.int64).copy()
        if not verify_conference(m):
            raise ValueError("not a symmetric conference matrix")
        if self.normalized and not (np.all(m[0, 1:] == 1) and np.all(m[1:, 0] == 1)):
            raise ValueError("matrix marked normalized but first row is not all +1")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def order(self) -> int:
        return self.matrix.shape[0]


def paley_conference(q: int) -> ConferenceMatrix:
    """Conference matrix of order ``q + 1`` from quadratic residues mod ``q``.

    Requires ``q`` prime with ``q = 1 (mod 4)``. The core entry (i, j) is +1
    exactly when ``j - i`` is a nonzero square mod q, which makes the result
    normalized as built.
    """
    if not _is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if q % 4 != 1:
        raise ValueError(f"q must be congruent to 1 mod 4, got {q}")
    squares = {(i * i) % q for i in range(1, q)}
    core = np.zeros((q, q), dtype=np.int64)
    for i in range(q):
        for j in range(q):
            if i != j:
                core[i, j] = 1 if (j - i) % q in squares else -1
    c = np.zeros((q + 1, q + 1), dtype=np.int64)
    c[0, 1:] = 1
    c[1:, 0] = 1
    c[1:, 1:] = core
    return ConferenceMatrix(c, normalized=True)


def normalize(c: ConferenceMatrix | np.ndarray) -> ConferenceMatrix:
    """Switch rows and columns by a +-1 diagonal so the first row becomes all +1.

    Idempotent, and the conference identity is preserved exactly.
    """
    m = c.matrix if isinstance(c, ConferenceMatrix) else np.asarray(c, dtype=np.int64)
    if not verify_conference(m):
        raise ValueError("not a symmetric conference matrix")
    d = m[0].copy()
    d[0] = 1
    switched = d[:, None] * m * d[None, :]
    return ConferenceMatrix(switched, normalized=True)


def core_matrix(c: ConferenceMatrix) -> np.ndarray:
    """Core of a normalized conference matrix: drop its first row and column.

    The core of order ``n - 1`` has +-1 off the diagonal and every row summing
    to zero.
    """
    if not c.normalized:
        raise ValueError("core requires a normalized conference matrix")
    return c.matrix[1:, 1:].copy()
