"""Dense symmetric eigensolver and spectral verdicts for edge signings.

The solver is a cyclic Jacobi iteration on an owned copy of the matrix:
unconditionally stable for symmetric input, no convergence tuning, and the
matrices in this package are small. Convergence is declared when the
off-diagonal Frobenius norm drops below ``1e-12`` times the initial Frobenius
norm; a hard cap of 64 sweeps guards against stalls.

The inner kernel is JIT-compiled with numba when available and falls back to
the identical pure-Python loop otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, SignedGraph, is_bipartite, signed_adjacency

JACOBI_RELATIVE_TOLERANCE = 1e-12
JACOBI_MAX_SWEEPS = 64
VERDICT_TOLERANCE = 1e-9

GOOD = "good"
NOT_GOOD = "not_good"


class JacobiConvergenceError(RuntimeError):
    """Raised when the sweep cap is hit before the off-diagonal norm target."""


def _jacobi_sweeps(a, rel_tol, max_sweeps):
    # Mutates `a` toward diagonal form. Returns (sweeps, off_norm, initial_norm).
    n = a.shape[0]
    fro = 0.0
    for i in range(n):
        for j in range(n):
            fro += a[i, j] * a[i, j]
    fro = math.sqrt(fro)
    threshold = rel_tol * fro
    sweeps = 0
    while True:
        off = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off += 2.0 * a[i, j] * a[i, j]
        off = math.sqrt(off)
        if off <= threshold or sweeps >= max_sweeps:
            return sweeps, off, fro
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + math.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app = a[p, p]
                aqq = a[q, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    if k != p and k != q:
                        akp = a[k, p]
                        akq = a[k, q]
                        a[k, p] = c * akp - s * akq
                        a[p, k] = a[k, p]
                        a[k, q] = s * akp + c * akq
                        a[q, k] = a[k, q]
        sweeps += 1


try:  # pragma: no cover - exercised implicitly everywhere
    from numba import njit

    _jacobi_sweeps = njit(cache=True, nogil=True)(_jacobi_sweeps)
except ImportError:  # pragma: no cover
    pass


@dataclass(frozen=True)
class JacobiResult:
    """Eigenvalues plus convergence diagnostics of one Jacobi run."""

    eigenvalues: tuple[float, ...]
    sweeps: int
    off_diagonal_norm: float
    initial_norm: float


def jacobi_diagonalize(a: np.ndarray) -> JacobiResult:
    """Run the cyclic Jacobi solver on a symmetric matrix.

    The input is never modified; a float64 working copy is diagonalised.
    Raises ``ValueError`` for non-square or non-symmetric input and
    ``JacobiConvergenceError`` if 64 sweeps do not reach the norm target.
    """
    m = np.asarray(a)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    if not np.array_equal(m, m.T):
        raise ValueError("matrix must be symmetric")
    work = m.astype(np.float64, copy=True)
    sweeps, off, fro = _jacobi_sweeps(work, JACOBI_RELATIVE_TOLERANCE, JACOBI_MAX_SWEEPS)
    if off > JACOBI_RELATIVE_TOLERANCE * fro:
        raise JacobiConvergenceError(
            f"no convergence after {sweeps} sweeps: off-diagonal norm {off:.3e}"
        )
    eig = np.sort(np.diagonal(work))
    return JacobiResult(tuple(float(x) for x in eig), int(sweeps), float(off), float(fro))


def eigenvalues_symmetric(a: np.ndarray) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending, as float64."""
    return np.array(jacobi_diagonalize(a).eigenvalues, dtype=np.float64)


def spectral_radius(a: np.ndarray) -> float:
    """Largest absolute eigenvalue of a symmetric matrix."""
    eig = eigenvalues_symmetric(a)
    if eig.size == 0:
        return 0.0
    return float(max(-eig[0], eig[-1], 0.0))


def _spectral_radius_inplace(work: np.ndarray) -> float:
    # Hot path for the exhaustive search: destroys `work`, skips validation.
    sweeps, off, fro = _jacobi_sweeps(work, JACOBI_RELATIVE_TOLERANCE, JACOBI_MAX_SWEEPS)
    if off > JACOBI_RELATIVE_TOLERANCE * fro:
        raise JacobiConvergenceError(
            f"no convergence after {sweeps} sweeps: off-diagonal norm {off:.3e}"
        )
    d = np.diagonal(work)
    if d.size == 0:
        return 0.0
    return float(max(-d.min(), d.max(), 0.0))


def multisets_close(a, b, tol: float) -> bool:
    """Whether two eigenvalue multisets agree elementwise after sorting."""
    xs = np.sort(np.asarray(a, dtype=np.float64))
    ys = np.sort(np.asarray(b, dtype=np.float64))
    return xs.shape == ys.shape and bool(np.all(np.abs(xs - ys) <= tol))


def multiset_within(sub, full, tol: float) -> bool:
    """Greedy sorted matching: every value of ``sub`` consumes one of ``full``."""
    xs = sorted(float(x) for x in sub)
    ys = sorted(float(y) for y in full)
    j = 0
    for x in xs:
        while j < len(ys) and ys[j] < x - tol:
            j += 1
        if j == len(ys) or abs(ys[j] - x) > tol:
            return False
        j += 1
    return True


def good_signing_bound(g: Graph, mode: str) -> tuple[float, int]:
    """The verdict bound and the degree it is based on.

    ``regular`` mode demands a d-regular graph with d > 1 and yields
    ``2*sqrt(d-1)``; ``maxdeg`` demands max degree > 1 and yields
    ``2*sqrt(max_degree-1)``.
    """
    if mode == "regular":
        d = g.regular_degree
        if d <= 1:
            raise ValueError(f"regular mode needs degree > 1, got d={d}")
    elif mode == "maxdeg":
        d = g.max_degree
        if d <= 1:
            raise ValueError(f"maxdeg mode needs max degree > 1, got {d}")
    else:
        raise ValueError(f"unknown mode {mode!r}; expected 'regular' or 'maxdeg'")
    return 2.0 * math.sqrt(d - 1), d


@dataclass(frozen=True)
class SpectralReport:
    """Eigenvalues of a signing plus the bound verdict."""

    eigenvalues: tuple[float, ...]
    rho: float
    degree: int
    bound: float
    verdict: str
    tolerance: float
    mode: str

    @property
    def is_good(self) -> bool:
        return self.verdict == GOOD

    def to_json_dict(self) -> dict:
        return {
            "eigenvalues": list(self.eigenvalues),
            "rho": self.rho,
            "degree": self.degree,
            "bound": self.bound,
            "verdict": self.verdict,
            "tolerance": self.tolerance,
            "mode": self.mode,
        }


def check_good_signing(sg: SignedGraph, mode: str = "regular") -> SpectralReport:
    """Verdict on whether a signing meets the spectral bound for its mode.

    Ties count as good: the verdict is ``good`` iff
    ``rho <= bound + VERDICT_TOLERANCE``.
    """
    bound, degree = good_signing_bound(sg.graph, mode)
    eig = eigenvalues_symmetric(signed_adjacency(sg))
    rho = float(max(-eig[0], eig[-1], 0.0)) if eig.size else 0.0
    verdict = GOOD if rho <= bound + VERDICT_TOLERANCE else NOT_GOOD
    return SpectralReport(
        eigenvalues=tuple(float(x) for x in eig),
        rho=rho,
        degree=degree,
        bound=bound,
        verdict=verdict,
        tolerance=VERDICT_TOLERANCE,
        mode=mode,
    )


@dataclass(frozen=True)
class RamanujanReport:
    """Nontrivial-eigenvalue interval test for a connected regular graph."""

    eigenvalues: tuple[float, ...]
    removed: tuple[float, ...]
    degree: int
    bound: float
    is_ramanujan: bool
    tolerance: float


def check_ramanujan(g: Graph) -> RamanujanReport:
    """Test whether the nontrivial eigenvalues lie in ``[-2*sqrt(d-1), 2*sqrt(d-1)]``.

    One occurrence of the eigenvalue closest to ``d`` is treated as trivial and
    removed; for bipartite graphs the one closest to ``-d`` is removed as well.
    Requires a connected d-regular graph with d > 1.
    """
    if not g.is_connected():
        raise ValueError("graph must be connected")
    d = g.regular_degree
    if d <= 1:
        raise ValueError(f"degree must exceed 1, got d={d}")
    eig = list(eigenvalues_symmetric(g.adjacency()))
    removed = [eig.pop(min(range(len(eig)), key=lambda i: abs(eig[i] - d)))]
    if is_bipartite(g) is not None:
        removed.append(eig.pop(min(range(len(eig)), key=lambda i: abs(eig[i] + d))))
    bound = 2.0 * math.sqrt(d - 1)
    ok = all(abs(x) <= bound + VERDICT_TOLERANCE for x in eig)
    return RamanujanReport(
        eigenvalues=tuple(float(x) for x in eig),
        removed=tuple(float(x) for x in removed),
        degree=d,
        bound=bound,
        is_ramanujan=ok,
        tolerance=VERDICT_TOLERANCE,
    )
