"""The forbidden families ``B(n, d)``: construction, membership and freeness.

``B(n, 0)`` is the set of ``n``-vertex graphs with a universal vertex and, for
``d > 0``, ``B(n, d)`` collects ``K_{n-m-2} + (K2 ∪ H)`` over ``2d <= m <= n-2``
and ``H`` in ``B(m, d-1)``.

Enumeration works up to isomorphism via a small canonical-form routine
(colour refinement plus individualisation); it is exact but only meant for
``n <= 8``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .exceptions import CapacityError, ContractError, DomainError
from .graph import Graph, disjoint_union, iter_bits, join

FAMILY_LIMIT = 8
FREENESS_LIMIT = 12


@dataclass(frozen=True, order=True)
class FamilyIndex:
    """Index ``(n, d)`` of ``B(n, d)``; requires ``d >= 0`` and ``n >= 2(d+1)``."""

    n: int
    d: int

    def __post_init__(self) -> None:
        if self.d < 0:
            raise DomainError(f"d must be >= 0, got {self.d}")
        if self.n < 2 * (self.d + 1):
            raise DomainError(f"n must be >= 2(d+1) = {2 * (self.d + 1)}, got n={self.n}")


def _as_index(idx) -> FamilyIndex:
    return idx if isinstance(idx, FamilyIndex) else FamilyIndex(*idx)


# canonical form ---------------------------------------------------------------


def _refine(rows: Sequence[int], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        out: list[tuple[int, ...]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((rows[v] & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) > 1:
                split = True
                out.extend(tuple(groups[k]) for k in sorted(groups))
            else:
                out.append(cell)
        if not split:
            return out
        cells = out


def _code(rows: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    n = len(order)
    for a in range(n):
        r = rows[order[a]]
        for b in range(a + 1, n):
            code = (code << 1) | (r >> order[b] & 1)
    return code


def _best_leaf(rows: Sequence[int], cells: list[tuple[int, ...]]) -> tuple[int, tuple[int, ...]]:
    cells = _refine(rows, cells)
    target = next((t for t, c in enumerate(cells) if len(c) > 1), None)
    if target is None:
        order = tuple(c[0] for c in cells)
        return _code(rows, order), order
    best: Optional[tuple[int, tuple[int, ...]]] = None
    tried: list[int] = []
    cell = cells[target]
    for v in cell:
        # twins of an already individualised vertex give the same subtree
        if any(rows[v] & ~(1 << u) == rows[u] & ~(1 << v) for u in tried):
            continue
        tried.append(v)
        rest = tuple(u for u in cell if u != v)
        leaf = _best_leaf(rows, cells[:target] + [(v,), rest] + cells[target + 1 :])
        if best is None or leaf[0] < best[0]:
            best = leaf
    assert best is not None
    return best


def canonical_form(g: Graph) -> tuple[int, int]:
    """Isomorphism invariant ``(n, code)``: equal iff the graphs are isomorphic."""
    if g.n == 0:
        return (0, 0)
    code, _ = _best_leaf(g.rows, [tuple(range(g.n))])
    return (g.n, code)


def canonical_graph(g: Graph) -> Graph:
    """The canonical relabelling of ``g`` (isomorphic graphs map to equal graphs)."""
    if g.n == 0:
        return g
    _, order = _best_leaf(g.rows, [tuple(range(g.n))])
    return induced_in_order(g, order)


def induced_in_order(g: Graph, order: Sequence[int]) -> Graph:
    pos = {v: k for k, v in enumerate(order)}
    rows = []
    for v in order:
        r = 0
        for u in iter_bits(g.rows[v]):
            if u in pos:
                r |= 1 << pos[u]
        rows.append(r)
    return Graph.from_rows(rows, check=False)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on ``n`` vertices up to isomorphism, as canonical graphs."""
    if n > FAMILY_LIMIT:
        raise CapacityError(f"nonisomorphic_graphs: n={n} exceeds limit {FAMILY_LIMIT}")
    if n == 0:
        return (Graph(0),)
    seen: dict[tuple[int, int], Graph] = {}
    for base in nonisomorphic_graphs(n - 1):
        for nbrs in range(1 << (n - 1)):
            rows = [r | ((nbrs >> v & 1) << (n - 1)) for v, r in enumerate(base.rows)]
            rows.append(nbrs)
            g = Graph.from_rows(rows, check=False)
            key = canonical_form(g)
            if key not in seen:
                seen[key] = canonical_graph(g)
    return tuple(seen[k] for k in sorted(seen))


# family enumeration -------------------------------------------------------------


@lru_cache(maxsize=None)
def _family(n: int, d: int) -> tuple[Graph, ...]:
    members: dict[tuple[int, int], Graph] = {}
    if d == 0:
        candidates: Iterator[Graph] = (join(Graph(1), h) for h in nonisomorphic_graphs(n - 1))
    else:
        k2 = Graph.complete(2)
        candidates = (
            join(Graph.complete(n - m - 2), disjoint_union(k2, h))
            for m in range(2 * d, n - 1)
            for h in _family(m, d - 1)
        )
    for g in candidates:
        key = canonical_form(g)
        if key not in members:
            members[key] = canonical_graph(g)
    return tuple(members[k] for k in sorted(members))


def enumerate_family(idx) -> tuple[Graph, ...]:
    """Members of ``B(n, d)`` up to isomorphism (canonically labelled)."""
    idx = _as_index(idx)
    if idx.n > FAMILY_LIMIT:
        raise CapacityError(f"enumerate_family: n={idx.n} exceeds limit {FAMILY_LIMIT}")
    return _family(idx.n, idx.d)


def is_member(h: Graph, idx) -> bool:
    """Decide ``h ∈ B(n, d)`` by peeling the structure off ``h``.

    For ``d >= 1`` the joined clique is exactly the set ``U`` of universal
    vertices: a vertex of ``K2 ∪ H'`` misses either all of ``H'`` or the
    ``K2``, and ``H'`` is non-empty. What remains must split into a ``K2``
    component plus a member of ``B(m, d-1)``; every ``K2`` component is tried.
    """
    idx = _as_index(idx)
    if h.n != idx.n:
        raise ContractError(f"graph has {h.n} vertices, family B({idx.n},{idx.d}) needs {idx.n}")
    return _member(h.rows, h.vertex_mask, idx.n, idx.d)


def _member(rows: Sequence[int], within: int, n: int, d: int) -> bool:
    return _decompose(rows, within, n, d) is not None


def family_witness(g: Graph, idx, *, limit: int = FREENESS_LIMIT) -> Optional[tuple[int, ...]]:
    """Lexicographically first ``n``-subset inducing a member of ``B(n, d)``."""
    idx = _as_index(idx)
    if g.n > limit:
        raise CapacityError(f"is_family_free: n={g.n} exceeds limit {limit}")
    rows = g.rows
    for subset in combinations(range(g.n), idx.n):
        within = 0
        for v in subset:
            within |= 1 << v
        if _member(rows, within, idx.n, idx.d):
            return subset
    return None


def is_family_free(g: Graph, idx, *, limit: int = FREENESS_LIMIT) -> bool:
    return family_witness(g, idx, limit=limit) is None


def decompose(h: Graph, idx) -> Optional[list[tuple[tuple[int, ...], tuple[int, int]]]]:
    """Witness of membership: per level, the joined clique and the ``K2`` used.

    Returns ``None`` when ``h`` is not a member. The final level (``d = 0``)
    appears as the universal vertices with an empty edge ``()``.
    """
    idx = _as_index(idx)
    if h.n != idx.n:
        raise ContractError(f"graph has {h.n} vertices, family needs {idx.n}")
    return _decompose(h.rows, h.vertex_mask, idx.n, idx.d)


def _decompose(rows, within, n, d):
    universal = 0
    for v in iter_bits(within):
        if within & ~(1 << v) & ~rows[v] == 0:
            universal |= 1 << v
    if d == 0:
        return [(tuple(iter_bits(universal)), ())] if universal else None
    m = n - 2 - universal.bit_count()
    if m < 2 * d:
        return None
    rest = within & ~universal
    for v in iter_bits(rest):
        nb = rows[v] & rest
        if nb.bit_count() != 1:
            continue
        w = nb.bit_length() - 1
        if w < v or rows[w] & rest != 1 << v:
            continue
        tail = _decompose(rows, rest & ~(1 << v) & ~(1 << w), m, d - 1)
        if tail is not None:
            return [(tuple(iter_bits(universal)), (v, w))] + tail
    return None
