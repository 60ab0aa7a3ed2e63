"""Simple undirected graphs, edge signings, and exact matrix primitives.

Vertices are always the integers ``0..n-1``; edges are unordered pairs kept in
canonical ``(min, max)`` order. Everything here is immutable after
construction, so values can be shared and sent between threads freely.

Adjacency matrices are plain numpy arrays: ``int64`` for exact identity
checks, ``float64`` only where an eigensolver needs them.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

import numpy as np

Edge = tuple[int, int]


def _canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1`` (no loops, no multi-edges)."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) is not canonical for n={self.n}")

    @staticmethod
    def from_edges(n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from any iterable of vertex pairs, canonicalising order."""
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            canon.add(_canon(u, v))
        return Graph(n, frozenset(canon))

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        """Edges in sorted order; the canonical iteration order everywhere."""
        return tuple(sorted(self.edges))

    @cached_property
    def _adjacency_lists(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edge_list:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adjacency_lists[v]

    def has_edge(self, u: int, v: int) -> bool:
        return _canon(u, v) in self.edges

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adjacency_lists)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @property
    def max_degree(self) -> int:
        if self.n == 0:
            raise ValueError("degree of an empty graph is undefined")
        return max(self.degrees)

    @property
    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("degree of an empty graph is undefined")
        return min(self.degrees)

    @property
    def is_regular(self) -> bool:
        return self.n > 0 and len(set(self.degrees)) <= 1

    @property
    def regular_degree(self) -> int:
        if not self.is_regular:
            raise ValueError("graph is not regular")
        return self.degrees[0]

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in self.neighbors(u):
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return len(seen) == self.n

    def adjacency(self) -> np.ndarray:
        """0/1 adjacency matrix as an exact ``int64`` array."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = 1
            a[v, u] = 1
        return a


@dataclass(frozen=True)
class SignedGraph:
    """A graph together with a total edge-sign map into ``{-1, +1}``."""

    graph: Graph
    signs: Mapping[Edge, int]

    def __post_init__(self) -> None:
        fixed = {}
        for (u, v), s in self.signs.items():
            e = _canon(int(u), int(v))
            if int(s) not in (-1, 1):
                raise ValueError(f"sign of edge {e} must be -1 or +1, got {s}")
            fixed[e] = int(s)
        if set(fixed) != self.graph.edges:
            raise ValueError("sign map must cover exactly the edge set")
        # deterministic ordering, read-only view
        ordered = {e: fixed[e] for e in self.graph.edge_list}
        object.__setattr__(self, "signs", MappingProxyType(ordered))

    @staticmethod
    def from_signs(graph: Graph, signs: Mapping[Edge, int]) -> "SignedGraph":
        return SignedGraph(graph, dict(signs))

    @staticmethod
    def from_edge_triples(n: int, triples: Iterable[Sequence[int]]) -> "SignedGraph":
        """Build a signed graph from ``(u, v, sign)`` triples."""
        signs = {}
        for u, v, s in triples:
            e = _canon(int(u), int(v))
            if e in signs and signs[e] != int(s):
                raise ValueError(f"conflicting signs for edge {e}")
            signs[e] = int(s)
        return SignedGraph(Graph(n, frozenset(signs)), signs)

    @staticmethod
    def all_plus(graph: Graph) -> "SignedGraph":
        return SignedGraph(graph, {e: 1 for e in graph.edge_list})

    @staticmethod
    def all_minus(graph: Graph) -> "SignedGraph":
        return SignedGraph(graph, {e: -1 for e in graph.edge_list})

    @staticmethod
    def from_adjacency(a: np.ndarray) -> "SignedGraph":
        """Recover the signed graph of a symmetric {0, +-1} matrix with zero diagonal."""
        m = np.asarray(a)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if not np.array_equal(m, m.T):
            raise ValueError("adjacency matrix must be symmetric")
        if np.any(np.diagonal(m) != 0):
            raise ValueError("adjacency matrix must have zero diagonal")
        n = m.shape[0]
        signs = {}
        for u in range(n):
            for v in range(u + 1, n):
                x = int(m[u, v])
                if x not in (-1, 0, 1):
                    raise ValueError(f"entry ({u}, {v}) = {x} is not in {{0, -1, +1}}")
                if x != 0:
                    signs[(u, v)] = x
        return SignedGraph(Graph(n, frozenset(signs)), signs)

    def sign(self, u: int, v: int) -> int:
        return self.signs[_canon(u, v)]

    def adjacency(self) -> np.ndarray:
        return signed_adjacency(self)

    def negated(self) -> "SignedGraph":
        """Flip every edge sign."""
        return SignedGraph(self.graph, {e: -s for e, s in self.signs.items()})

    def switched(self, diag: Sequence[int]) -> "SignedGraph":
        """Apply the switching ``sign'(uv) = d_u * sign(uv) * d_v`` for ``d`` in {-1,+1}^n."""
        d = [int(x) for x in diag]
        if len(d) != self.graph.n or any(x not in (-1, 1) for x in d):
            raise ValueError("switching vector must be a +-1 vector of length n")
        return SignedGraph(
            self.graph, {(u, v): d[u] * s * d[v] for (u, v), s in self.signs.items()}
        )


def signed_adjacency(sg: SignedGraph) -> np.ndarray:
    """Signed adjacency matrix: ``sign(uv)`` on edges, 0 elsewhere, exact ``int64``."""
    n = sg.graph.n
    a = np.zeros((n, n), dtype=np.int64)
    for (u, v), s in sg.signs.items():
        a[u, v] = s
        a[v, u] = s
    return a


def entrywise_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise matrix product; both arguments must have the same square shape."""
    x = np.asarray(a)
    y = np.asarray(b)
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise ValueError("first matrix must be square")
    if x.shape != y.shape:
        raise ValueError(f"order mismatch: {x.shape} vs {y.shape}")
    return x * y


def complete_graph(m: int) -> Graph:
    """K_m on vertices ``0..m-1``."""
    if m < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph(m, frozenset((u, v) for u in range(m) for v in range(u + 1, m)))


def cycle_graph(m: int) -> Graph:
    """C_m: the cycle 0-1-...-(m-1)-0."""
    if m < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def path_graph(m: int) -> Graph:
    """P_m: the path 0-1-...-(m-1)."""
    if m < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edges(m, [(i, i + 1) for i in range(m - 1)])


def petersen_graph() -> Graph:
    """The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i-(i+5)."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def lexicographic_product(g: Graph, h: Graph) -> Graph:
    """Graph on V(g) x V(h): (x,y) ~ (z,t) iff x ~ z in g, or x = z and y ~ t in h.

    Vertex (x, y) gets index ``x * h.n + y`` so that matrices are reproducible
    bit for bit.
    """
    k = h.n
    edges = []
    for x, z in g.edge_list:
        for y in range(k):
            for t in range(k):
                edges.append((x * k + y, z * k + t))
    for x in range(g.n):
        for y, t in h.edge_list:
            edges.append((x * k + y, x * k + t))
    return Graph.from_edges(g.n * k, edges)


def is_bipartite(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Return a bipartition ``(side0, side1)`` when one exists, else ``None``.

    Colouring is per connected component, rooted at the smallest unvisited
    vertex, so the result is deterministic.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    side0 = tuple(v for v in range(g.n) if color[v] == 0)
    side1 = tuple(v for v in range(g.n) if color[v] == 1)
    return side0, side1


@dataclass(frozen=True)
class DecompositionReport:
    """Outcome of :func:`verify_decomposition` with the violating edges listed."""

    ok: bool
    shared_edges: tuple[Edge, ...]
    missing_edges: tuple[Edge, ...]
    foreign_edges: tuple[Edge, ...]


def verify_decomposition(g: Graph, parts: Sequence[Graph | SignedGraph]) -> DecompositionReport:
    """Check that ``parts`` partition E(g): edge-disjoint and jointly covering.

    Every part must live on g's vertex set. Parts may be plain or signed
    graphs; only their edge sets matter here.
    """
    part_graphs = [p.graph if isinstance(p, SignedGraph) else p for p in parts]
    for p in part_graphs:
        if p.n != g.n:
            raise ValueError("decomposition parts must share the vertex set of g")
    counts: Counter[Edge] = Counter()
    for p in part_graphs:
        counts.update(p.edges)
    shared = tuple(sorted(e for e, c in counts.items() if c > 1))
    missing = tuple(sorted(g.edges - set(counts)))
    foreign = tuple(sorted(set(counts) - g.edges))
    ok = not shared and not missing and not foreign
    return DecompositionReport(ok, shared, missing, foreign)
