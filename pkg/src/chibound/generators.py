"""Seeded random graphs.

All sampling goes through ``numpy.random.Generator`` backed by ``PCG64`` so a
64-bit seed fully determines the output on every platform.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph

RNG_NAME = "PCG64"


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(int(seed) & (2**64 - 1)))


def gnp_random_graph(n: int, p: float, seed=None) -> Graph:
    """Erdős–Rényi ``G(n, p)``; ``seed`` is an int or a ``numpy`` Generator."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = seed if isinstance(seed, np.random.Generator) else make_rng(0 if seed is None else seed)
    if n <= 1:
        return Graph(max(n, 0))
    upper = np.triu(rng.random((n, n)) < p, k=1)
    adj = upper | upper.T
    packed = np.packbits(adj, axis=1, bitorder="little")
    rows = [int.from_bytes(packed[v].tobytes(), "little") for v in range(n)]
    return Graph.from_rows(rows, check=False)
