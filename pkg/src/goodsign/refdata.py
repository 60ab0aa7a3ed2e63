"""Bundled reference matrices for the reproduction checks.

Each matrix was transcribed once into ``data/`` and is guarded by a sha256
manifest; loading re-verifies the checksum so a silent edit of a reference
file cannot go unnoticed.
"""

from __future__ import annotations

import json
from importlib import resources

import numpy as np

from .fileio import matrix_from_text, sha256_of_text

REFERENCE_NAMES = (
    "c6",
    "k7_case1",
    "k8_case2",
    "sign4",
    "sign4_alt",
    "sign4_product",
    "lift8",
)


def _data_root():
    return resources.files("goodsign") / "data"


def reference_checksums() -> dict[str, str]:
    return json.loads((_data_root() / "checksums.json").read_text())


def reference_matrix(name: str) -> np.ndarray:
    """Load a bundled matrix by short name, verifying its checksum."""
    if name not in REFERENCE_NAMES:
        raise KeyError(f"unknown reference matrix {name!r}")
    filename = f"{name}.txt"
    text = (_data_root() / filename).read_text()
    expected = reference_checksums()[filename]
    actual = sha256_of_text(text)
    if actual != expected:
        raise ValueError(
            f"checksum mismatch for {filename}: expected {expected}, got {actual}"
        )
    return matrix_from_text(text)
