"""Exhaustive search over edge signings, one representative per switching class.

The spectral radius is invariant under switching (a +-1 diagonal similarity),
so it suffices to fix a spanning tree's edges to +1 and enumerate the
2^(|E|-n+1) sign patterns on the non-tree edges: distinct patterns have
distinct cycle-sign vectors and are pairwise inequivalent. The tree is built
by BFS from vertex 0 with neighbours in ascending order, and patterns follow
binary-counter order on the sorted non-tree edges (bit set means -1), so the
enumeration and all tie-breaking are deterministic.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .graphs import Edge, Graph, SignedGraph, _canon
from .spectra import VERDICT_TOLERANCE, _spectral_radius_inplace, good_signing_bound

DEFAULT_MAX_FREE_EDGES = 24


class SearchSpaceError(ValueError):
    """Raised when the number of free edges exceeds the search guard."""


def _bfs_tree_edges(g: Graph) -> set[Edge]:
    if g.n == 0:
        raise ValueError("graph has no vertices")
    seen = {0}
    tree: set[Edge] = set()
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if v not in seen:
                seen.add(v)
                tree.add(_canon(u, v))
                queue.append(v)
    if len(seen) != g.n:
        raise ValueError("graph must be connected")
    return tree


def _free_edges(g: Graph) -> tuple[list[Edge], set[Edge]]:
    tree = _bfs_tree_edges(g)
    free = [e for e in g.edge_list if e not in tree]
    return free, tree


def _signing_for_index(g: Graph, free: list[Edge], index: int) -> SignedGraph:
    signs = {e: 1 for e in g.edge_list}
    for i, e in enumerate(free):
        if (index >> i) & 1:
            signs[e] = -1
    return SignedGraph(g, signs)


def signing_class_count(g: Graph) -> int:
    """Number of switching classes: 2^(|E| - n + 1) for a connected graph."""
    free, _ = _free_edges(g)
    return 1 << len(free)


def enumerate_signing_classes(g: Graph) -> Iterator[SignedGraph]:
    """Yield one representative signing per switching class.

    Every representative has +1 on the spanning-tree edges; representatives
    are pairwise inequivalent.
    """
    free, _ = _free_edges(g)
    for index in range(1 << len(free)):
        yield _signing_for_index(g, free, index)


def _guarded_free_edges(g: Graph, max_free_edges: int) -> list[Edge]:
    free, _ = _free_edges(g)
    if len(free) > max_free_edges:
        raise SearchSpaceError(
            f"{len(free)} free edges exceed the guard of {max_free_edges}"
        )
    return free


def _class_rho(base: np.ndarray, free: list[Edge], index: int, work: np.ndarray) -> float:
    np.copyto(work, base)
    for i, (u, v) in enumerate(free):
        if (index >> i) & 1:
            work[u, v] = -1.0
            work[v, u] = -1.0
    return _spectral_radius_inplace(work)


def find_good_signing(
    g: Graph, mode: str = "regular", max_free_edges: int = DEFAULT_MAX_FREE_EDGES
) -> SignedGraph | None:
    """First enumerated signing class meeting the bound, or None after exhaustion."""
    bound, _ = good_signing_bound(g, mode)
    free = _guarded_free_edges(g, max_free_edges)
    base = g.adjacency().astype(np.float64)
    work = np.empty_like(base)
    for index in range(1 << len(free)):
        if _class_rho(base, free, index, work) <= bound + VERDICT_TOLERANCE:
            return _signing_for_index(g, free, index)
    return None


@dataclass(frozen=True)
class SearchResult:
    """Minimum spectral radius over all switching classes of a graph."""

    best_rho: float
    best_signing: SignedGraph
    classes_examined: int
    good_found: bool
    bound_used: float


def min_rho(
    g: Graph,
    mode: str = "regular",
    max_free_edges: int = DEFAULT_MAX_FREE_EDGES,
    jobs: int = 1,
) -> SearchResult:
    """Exact minimum of the spectral radius over every switching class.

    Deterministic: classes are scanned in binary-counter order and ties keep
    the smallest class index, so the result does not depend on ``jobs``. The
    class space is split into disjoint index ranges evaluated concurrently;
    the (rho, index) lexicographic-min reduction is associative and
    order-independent.
    """
    bound, _ = good_signing_bound(g, mode)
    free = _guarded_free_edges(g, max_free_edges)
    total = 1 << len(free)
    base = g.adjacency().astype(np.float64)

    def scan(lo: int, hi: int) -> tuple[float, int]:
        work = np.empty_like(base)
        best = (np.inf, -1)
        for index in range(lo, hi):
            rho = _class_rho(base, free, index, work)
            if rho < best[0]:
                best = (rho, index)
        return best

    jobs = max(1, int(jobs))
    if jobs == 1 or total < 4 * jobs:
        best_rho, best_index = scan(0, total)
    else:
        step = (total + jobs - 1) // jobs
        ranges = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(lambda r: scan(*r), ranges))
        best_rho, best_index = min(chunks)
    return SearchResult(
        best_rho=float(best_rho),
        best_signing=_signing_for_index(g, free, best_index),
        classes_examined=total,
        good_found=bool(best_rho <= bound + VERDICT_TOLERANCE),
        bound_used=float(bound),
    )
