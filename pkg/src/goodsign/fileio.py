"""JSON and plain-text interchange formats, plus the per-run manifest.

Graph JSON: ``{"n": int, "edges": [[u, v], ...]}``; signed graphs carry
``[[u, v, s], ...]`` with s in {-1, 1}; partitions are
``{"cells": [[v, ...], ...]}``. Matrices travel as plain text with
newline-separated rows and space-separated entries. Floats are printed at 12
significant digits so identical inputs give byte-identical outputs.
"""

from __future__ import annotations

import json
import hashlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from .graphs import Graph, SignedGraph
from .partition import Partition
from .spectra import JACOBI_RELATIVE_TOLERANCE, VERDICT_TOLERANCE

SPECTRAL_MULTISET_TOLERANCE = 1e-8

DEFAULT_TOLERANCES = {
    "verdict": VERDICT_TOLERANCE,
    "jacobi_relative": JACOBI_RELATIVE_TOLERANCE,
    "spectral_multiset": SPECTRAL_MULTISET_TOLERANCE,
}


def fmt12(x: float) -> str:
    """Fixed 12-significant-digit rendering used for all printed eigenvalues."""
    return f"{float(x):.12g}"


def round12(obj: Any) -> Any:
    """Recursively round floats to 12 significant digits for stable JSON."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return float(fmt12(obj))
    if isinstance(obj, (np.floating,)):
        return float(fmt12(float(obj)))
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, dict):
        return {k: round12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round12(v) for v in obj]
    return obj


def dumps_json(obj: Any) -> str:
    return json.dumps(round12(obj), sort_keys=True, indent=2) + "\n"


# -- graphs ------------------------------------------------------------------


def graph_to_json_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edge_list]}


def graph_from_json_dict(d: dict) -> Graph:
    return Graph.from_edges(int(d["n"]), d.get("edges", []))


def signed_graph_to_json_dict(sg: SignedGraph) -> dict:
    return {
        "n": sg.graph.n,
        "edges": [[u, v, sg.signs[(u, v)]] for u, v in sg.graph.edge_list],
    }


def signed_graph_from_json_dict(d: dict) -> SignedGraph:
    return SignedGraph.from_edge_triples(int(d["n"]), d.get("edges", []))


def partition_to_json_dict(p: Partition) -> dict:
    return {"cells": [list(c) for c in p.cells]}


def partition_from_json_dict(d: dict) -> Partition:
    return Partition.from_cells(d["cells"])


def load_graph(path: str | Path) -> Graph:
    return graph_from_json_dict(json.loads(Path(path).read_text()))


def load_signed_graph(path: str | Path) -> SignedGraph:
    return signed_graph_from_json_dict(json.loads(Path(path).read_text()))


def load_signing_for(graph: Graph, path: str | Path) -> SignedGraph:
    """Signing file for an existing graph: signed JSON or a bare triple list.

    The signs must cover exactly the graph's edge set.
    """
    raw = json.loads(Path(path).read_text())
    triples = raw["edges"] if isinstance(raw, dict) else raw
    sg = SignedGraph.from_edge_triples(graph.n, triples)
    if sg.graph != graph:
        raise ValueError("signing does not cover exactly the graph's edge set")
    return sg


def load_partition(path: str | Path) -> Partition:
    return partition_from_json_dict(json.loads(Path(path).read_text()))


# -- matrices ----------------------------------------------------------------


def matrix_to_text(a: np.ndarray) -> str:
    """Rows newline-separated, entries space-separated; integers stay integers."""
    m = np.asarray(a)
    if np.issubdtype(m.dtype, np.integer):
        rows = [" ".join(str(int(x)) for x in row) for row in m]
    else:
        rows = [" ".join(fmt12(x) for x in row) for row in m]
    return "\n".join(rows) + "\n"


def matrix_from_text(text: str) -> np.ndarray:
    """Parse the plain-text matrix format; integral input yields int64."""
    rows = [line.split() for line in text.strip().splitlines() if line.strip()]
    if not rows:
        raise ValueError("empty matrix text")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("ragged rows in matrix text")
    try:
        return np.array([[int(x) for x in r] for r in rows], dtype=np.int64)
    except ValueError:
        return np.array([[float(x) for x in r] for r in rows], dtype=np.float64)


def load_matrix(path: str | Path) -> np.ndarray:
    return matrix_from_text(Path(path).read_text())


def sha256_of_text(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


# -- run manifest ------------------------------------------------------------


@dataclass(frozen=True)
class RunManifest:
    """Reproducibility record written alongside every file a command emits."""

    command: str
    inputs: tuple[str, ...]
    parameters: dict
    output: str
    version: str
    tolerances: dict = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))

    def to_json_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": list(self.inputs),
            "parameters": self.parameters,
            "output": self.output,
            "version": self.version,
            "tolerances": self.tolerances,
        }

    def write_alongside(self, output_path: str | Path) -> Path:
        side = Path(str(output_path) + ".manifest.json")
        side.write_text(dumps_json(self.to_json_dict()))
        return side
