"""Immutable simple graphs on vertices ``0..n-1`` stored as adjacency bit rows.

Row ``v`` is a Python ``int`` whose bit ``u`` is set iff ``uv`` is an edge, so
neighbourhood intersection and membership tests are single big-int operations.
Besides constructors and the union/join/induced/complement operations this
module holds the exhaustive oracles (clique number, chromatic number,
chordality) that the tests and the desk-scale certification paths rely on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .exceptions import CapacityError, ContractError

#: Default size limits for the exhaustive oracles.
CLIQUE_LIMIT = 32
CHROMATIC_LIMIT = 14


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_tuple(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Simple undirected graph on ``0..n-1``.

    Instances are immutable and hashable; equality is label-sensitive
    (two isomorphic graphs with different labellings compare unequal).

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> g.m, g.edges()
    (2, [(0, 1), (1, 2)])
    """

    __slots__ = ("_n", "_rows", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        n = int(n)
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        rows = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ContractError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._n = n
        self._rows = tuple(rows)
        self._hash: Optional[int] = None

    @classmethod
    def from_rows(cls, rows: Sequence[int], *, check: bool = True) -> "Graph":
        """Build a graph directly from adjacency bit rows."""
        rows = tuple(int(r) for r in rows)
        n = len(rows)
        if check:
            full = (1 << n) - 1
            for v, r in enumerate(rows):
                if r < 0 or r & ~full:
                    raise IndexError(f"row {v} references a vertex outside 0..{n - 1}")
                if r >> v & 1:
                    raise ContractError(f"self-loop at vertex {v}")
                for u in iter_bits(r):
                    if not rows[u] >> v & 1:
                        raise ContractError(f"adjacency not symmetric at ({v}, {u})")
        g = cls.__new__(cls)
        g._n = n
        g._rows = rows
        g._hash = None
        return g

    # named graphs
    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls.from_rows([full & ~(1 << v) for v in range(n)], check=False)

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(v, v + 1) for v in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(n, [(v, (v + 1) % n) for v in range(n)])

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        return cls(leaves + 1, [(0, v) for v in range(1, leaves + 1)])

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def vertex_mask(self) -> int:
        return (1 << self._n) - 1

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return bits_to_tuple(self._rows[v])

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def max_degree(self) -> int:
        return max((r.bit_count() for r in self._rows), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in ascending lexicographic order."""
        out = []
        for u, r in enumerate(self._rows):
            for v in iter_bits(r >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def is_clique(self, vertices: Iterable[int]) -> bool:
        mask = to_mask(vertices)
        return all(mask & ~(1 << v) & ~self._rows[v] == 0 for v in iter_bits(mask))

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = to_mask(vertices)
        return all(self._rows[v] & mask == 0 for v in iter_bits(mask))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()!r})"

    def __len__(self) -> int:
        return self._n


# constructors ---------------------------------------------------------------


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g ∪ h``; the vertices of ``h`` are shifted by ``g.n``."""
    shift = g.n
    rows = list(g.rows) + [r << shift for r in h.rows]
    return Graph.from_rows(rows, check=False)


def join(g: Graph, h: Graph) -> Graph:
    """``g + h``: the disjoint union plus every edge between ``g`` and ``h``."""
    shift = g.n
    g_all = g.vertex_mask
    h_all = h.vertex_mask << shift
    rows = [r | h_all for r in g.rows] + [(r << shift) | g_all for r in h.rows]
    return Graph.from_rows(rows, check=False)


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph ``g[U]`` relabelled to ``0..|U|-1`` in ascending order."""
    verts = sorted(set(vertices))
    for v in verts:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
    return Graph.from_rows(induced_rows(g.rows, verts), check=False)


def induced_rows(rows: Sequence[int], verts: Sequence[int]) -> list[int]:
    out = []
    for v in verts:
        r = rows[v]
        new = 0
        for k, u in enumerate(verts):
            if r >> u & 1:
                new |= 1 << k
        out.append(new)
    return out


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph.from_rows([full & ~r & ~(1 << v) for v, r in enumerate(g.rows)], check=False)


# oracles --------------------------------------------------------------------


def _max_clique_size(rows: Sequence[int], cand: int, size: int, best: int) -> int:
    if not cand:
        return max(size, best)
    while cand:
        if size + cand.bit_count() <= best:
            break
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        best = _max_clique_size(rows, cand & rows[v], size + 1, best)
    return best


def exact_clique_number(g: Graph, *, limit: int = CLIQUE_LIMIT) -> int:
    """Clique number by exhaustive branch and bound (``0`` for the null graph)."""
    if g.n > limit:
        raise CapacityError(f"exact_clique_number: n={g.n} exceeds limit {limit}")
    return _max_clique_size(g.rows, g.vertex_mask, 0, 0)


def exact_chromatic_number(g: Graph, *, limit: int = CHROMATIC_LIMIT) -> int:
    """Chromatic number by backtracking over colour classes."""
    if g.n > limit:
        raise CapacityError(f"exact_chromatic_number: n={g.n} exceeds limit {limit}")
    if g.n == 0:
        return 0
    rows = g.rows
    order = sorted(range(g.n), key=lambda v: (-rows[v].bit_count(), v))
    k = max(exact_clique_number(g, limit=limit), 1)
    while not _colorable(rows, order, k):
        k += 1
    return k


def _colorable(rows: Sequence[int], order: Sequence[int], k: int) -> bool:
    classes = [0] * k

    def place(pos: int, used: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        r = rows[v]
        # a fresh colour is tried only once: all unused colours are symmetric
        for c in range(min(used + 1, k)):
            if classes[c] & r:
                continue
            classes[c] |= 1 << v
            if place(pos + 1, max(used, c + 1)):
                return True
            classes[c] &= ~(1 << v)
        return False

    return place(0, 0)


def maximum_cardinality_search(g: Graph) -> list[int]:
    """Visit order of maximum cardinality search, ties to the smallest id."""
    weight = [0] * g.n
    unvisited = g.vertex_mask
    order = []
    for _ in range(g.n):
        v = max(iter_bits(unvisited), key=lambda u: (weight[u], -u))
        order.append(v)
        unvisited &= ~(1 << v)
        for u in iter_bits(g.rows[v] & unvisited):
            weight[u] += 1
    return order


def is_chordal(g: Graph) -> bool:
    """True iff ``g`` has a perfect elimination ordering.

    The reverse of a maximum cardinality search order is a perfect
    elimination ordering exactly when the graph is chordal, so it suffices to
    check that every vertex's earlier-visited neighbours form a clique.
    """
    rows = g.rows
    seen = 0
    for v in maximum_cardinality_search(g):
        earlier = rows[v] & seen
        for w in iter_bits(earlier):
            if earlier & ~(1 << w) & ~rows[w]:
                return False
        seen |= 1 << v
    return True


@dataclass(frozen=True)
class ColoringResult:
    """A proper vertex colouring and the bound it was produced against.

    ``colors[v]`` is the colour of vertex ``v``; colours form the contiguous
    range ``0..colors_used-1``. ``certified_bound`` is the chromatic bound
    evaluated at ``omega`` when one is known, and ``bound_certified`` says
    whether the hypothesis behind that bound was actually verified.
    """

    colors: tuple[int, ...]
    colors_used: int
    certified_bound: Optional[int] = None
    clique_trace: tuple[int, ...] = ()
    bound_certified: bool = False
    omega: Optional[int] = None
    family: Optional[tuple[int, int]] = field(default=None, compare=False)


def is_proper_coloring(g: Graph, colors: Sequence[int]) -> bool:
    if len(colors) != g.n:
        return False
    return all(colors[u] != colors[v] for u, v in g.edges())


def first_fit_coloring(g: Graph, order: Optional[Sequence[int]] = None) -> ColoringResult:
    """Greedy colouring: each vertex in ``order`` gets the least colour free
    among its already-coloured neighbours (default order: ascending id)."""
    if order is None:
        order = range(g.n)
    else:
        order = list(order)
        if sorted(order) != list(range(g.n)):
            raise ContractError("order must be a permutation of the vertices")
    colors = [-1] * g.n
    classes: list[int] = []
    _first_fit_into(g.rows, order, classes, colors, 0)
    result = ColoringResult(colors=tuple(colors), colors_used=len(classes))
    assert is_proper_coloring(g, result.colors)
    return result


def _first_fit_into(
    rows: Sequence[int], order: Iterable[int], classes: list[int], colors: list[int], offset: int
) -> None:
    for v in order:
        r = rows[v]
        for c, members in enumerate(classes):
            if not members & r:
                classes[c] = members | (1 << v)
                colors[v] = offset + c
                break
        else:
            colors[v] = offset + len(classes)
            classes.append(1 << v)
