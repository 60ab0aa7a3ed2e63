"""Equitable partitions of signed graphs and their quotient matrices.

For a signing, the signed degree of a vertex into a set S is
``d(u, S) = |positive neighbours in S| - |negative neighbours in S|``.
A partition into cells is equitable when ``d(u, C_j)`` depends only on the
cell containing ``u``; the cell-level numbers form the quotient matrix B,
which satisfies ``A @ P == P @ B`` exactly in integers, P being the 0/1 cell
membership matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graphs import SignedGraph, signed_adjacency
from .spectra import eigenvalues_symmetric


@dataclass(frozen=True)
class Partition:
    """Ordered list of disjoint, non-empty cells covering ``0..n-1``."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        fixed = tuple(tuple(sorted(int(v) for v in cell)) for cell in self.cells)
        seen: set[int] = set()
        for cell in fixed:
            if not cell:
                raise ValueError("empty cell in partition")
            if seen.intersection(cell):
                raise ValueError("cells are not disjoint")
            seen.update(cell)
        n = len(seen)
        if seen != set(range(n)):
            raise ValueError("cells must cover the vertices 0..n-1 exactly")
        object.__setattr__(self, "cells", fixed)

    @staticmethod
    def from_cells(cells: Iterable[Iterable[int]]) -> "Partition":
        return Partition(tuple(tuple(c) for c in cells))

    @staticmethod
    def singletons(n: int) -> "Partition":
        return Partition(tuple((v,) for v in range(n)))

    @staticmethod
    def single_cell(n: int) -> "Partition":
        return Partition((tuple(range(n)),))

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cells)

    @property
    def size(self) -> int:
        return len(self.cells)

    def cell_index(self, v: int) -> int:
        for i, cell in enumerate(self.cells):
            if v in cell:
                return i
        raise ValueError(f"vertex {v} not in partition")


def signed_degree(sg: SignedGraph, u: int, s: Iterable[int]) -> int:
    """``d(u, S)``: positive minus negative neighbour count of ``u`` inside S."""
    if not 0 <= u < sg.graph.n:
        raise ValueError(f"vertex {u} out of range")
    members = set(s)
    for v in members:
        if not 0 <= v < sg.graph.n:
            raise ValueError(f"vertex {v} out of range")
    return sum(sg.sign(u, v) for v in sg.graph.neighbors(u) if v in members)


@dataclass(frozen=True)
class EquitabilityWitness:
    """Two vertices of one cell whose signed degrees into a cell differ."""

    cell: int
    target_cell: int
    vertex_a: int
    vertex_b: int
    degree_a: int
    degree_b: int


class NotEquitableError(ValueError):
    def __init__(self, witness: EquitabilityWitness):
        self.witness = witness
        super().__init__(
            f"partition is not equitable: d({witness.vertex_a}, C{witness.target_cell})"
            f" = {witness.degree_a} but d({witness.vertex_b}, C{witness.target_cell})"
            f" = {witness.degree_b} within cell C{witness.cell}"
        )


def is_equitable(sg: SignedGraph, p: Partition) -> tuple[bool, EquitabilityWitness | None]:
    """Whether every cell has constant signed degree into every cell.

    On failure the witness names the offending cell pair and vertex pair.
    """
    if p.n != sg.graph.n:
        raise ValueError("partition does not cover the graph's vertex set")
    for i, cell in enumerate(p.cells):
        for j, target in enumerate(p.cells):
            first = signed_degree(sg, cell[0], target)
            for u in cell[1:]:
                d = signed_degree(sg, u, target)
                if d != first:
                    return False, EquitabilityWitness(i, j, cell[0], u, first, d)
    return True, None


def characteristic_matrix(p: Partition, n: int | None = None) -> np.ndarray:
    """0/1 membership matrix P of shape (n, k): ``P[v, j] = 1`` iff v is in cell j."""
    if n is None:
        n = p.n
    if n != p.n:
        raise ValueError(f"partition covers {p.n} vertices, not {n}")
    m = np.zeros((n, p.size), dtype=np.int64)
    for j, cell in enumerate(p.cells):
        for v in cell:
            m[v, j] = 1
    return m


@dataclass(frozen=True)
class QuotientMatrix:
    """Cell-level signed-degree matrix of an equitable partition."""

    matrix: np.ndarray
    partition: Partition

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=np.int64).copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


def quotient_matrix(sg: SignedGraph, p: Partition) -> QuotientMatrix:
    """Quotient B with ``B[i, j] = d(u, C_j)`` for any u in cell i.

    Raises :class:`NotEquitableError` when the partition is not equitable;
    the quotient is undefined in that case, and nothing is averaged silently.
    """
    ok, witness = is_equitable(sg, p)
    if not ok:
        assert witness is not None
        raise NotEquitableError(witness)
    b = np.zeros((p.size, p.size), dtype=np.int64)
    for i, cell in enumerate(p.cells):
        for j, target in enumerate(p.cells):
            b[i, j] = signed_degree(sg, cell[0], target)
    return QuotientMatrix(b, p)


def verify_quotient_identity(
    sg: SignedGraph, p: Partition, b: QuotientMatrix | np.ndarray | Sequence[Sequence[int]]
) -> bool:
    """Exact integer test of ``A @ P == P @ B``."""
    bm = np.asarray(b.matrix if isinstance(b, QuotientMatrix) else b, dtype=np.int64)
    if p.n != sg.graph.n or bm.shape != (p.size, p.size):
        return False
    a = signed_adjacency(sg)
    pm = characteristic_matrix(p)
    return np.array_equal(a @ pm, pm @ bm)


def quotient_eigenvalues(b: QuotientMatrix) -> np.ndarray:
    """Eigenvalues of a quotient matrix, ascending.

    B itself is rarely symmetric, but ``|C_i| B[i,j] == |C_j| B[j,i]`` (both
    count the signed edges between the two cells), so conjugating by the
    square roots of the cell sizes produces a symmetric matrix with the same
    spectrum. The conjugate is symmetrised to scrub float roundoff and handed
    to the symmetric solver.
    """
    sizes = np.array([len(c) for c in b.partition.cells], dtype=np.float64)
    r = np.sqrt(sizes)
    s = b.matrix * (r[:, None] / r[None, :])
    return eigenvalues_symmetric((s + s.T) / 2.0)
