"""Input coercion shared by the estimators and the CLI."""

from __future__ import annotations

import numpy as np

from .graph import Graph


def check_graph(X) -> Graph:
    """Coerce ``X`` into a :class:`Graph`.

    Accepts a ``Graph``, a square symmetric 0/1 adjacency matrix (numpy
    array, nested lists or anything exposing ``toarray``), or an object with
    ``nodes``/``edges`` in the networkx style whose nodes are ``0..n-1``.
    """
    if isinstance(X, Graph):
        return X
    if hasattr(X, "nodes") and hasattr(X, "edges") and not hasattr(X, "shape"):
        nodes = sorted(X.nodes())
        if nodes != list(range(len(nodes))):
            raise ValueError("graph nodes must be the integers 0..n-1")
        if any(u == v for u, v in X.edges()):
            raise ValueError("self-loops are not allowed")
        return Graph(len(nodes), X.edges())
    if hasattr(X, "toarray"):
        X = X.toarray()
    try:
        A = np.asarray(X)
    except Exception as exc:  # pragma: no cover - exotic inputs
        raise TypeError(f"cannot interpret {type(X).__name__} as a graph") from exc
    if A.dtype == object:
        raise TypeError(f"cannot interpret {type(X).__name__} as a graph")
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {A.shape}")
    if not np.isin(A, (0, 1)).all():
        raise ValueError("adjacency matrix entries must be 0 or 1")
    A = A.astype(bool)
    if A.diagonal().any():
        raise ValueError("adjacency matrix has a non-zero diagonal")
    if (A != A.T).any():
        raise ValueError("adjacency matrix is not symmetric")
    n = A.shape[0]
    if n == 0:
        return Graph(0)
    packed = np.packbits(A, axis=1, bitorder="little")
    return Graph.from_rows([int.from_bytes(packed[v].tobytes(), "little") for v in range(n)], check=False)


def check_graphs(X) -> list[Graph]:
    """Coerce a collection of graphs; a single graph is rejected."""
    if isinstance(X, Graph) or hasattr(X, "nodes"):
        raise TypeError("expected a sequence of graphs, got a single graph")
    if isinstance(X, np.ndarray) and X.ndim == 2:
        raise TypeError("expected a sequence of graphs, got a single adjacency matrix")
    return [check_graph(x) for x in X]


def check_positive_int(value, name: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return int(value)
