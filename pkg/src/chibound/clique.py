"""Local search for 2-maximal cliques.

A clique ``K`` is *1-maximal* when no outside vertex is adjacent to all of
``K`` and *2-maximal* when, in addition, no member ``u`` can be traded for
two adjacent outside vertices that both see all of ``K - u``. Starting from
the empty clique, 1-improvements (add one vertex) are exhausted before each
2-improvement attempt (drop one, add two). Every move grows the clique by one
vertex, so at most ``omega(G)`` moves happen.

A 1-improvement adds the candidate with the most neighbours among the other
candidates, then the most neighbours overall; every remaining tie goes to the
smallest vertex id, which makes
the search deterministic for a fixed labelling.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .exceptions import ContractError
from .graph import Graph, bits_to_tuple, iter_bits, to_mask


class CliqueLevel(enum.Enum):
    ARBITRARY = "arbitrary"
    ONE_MAXIMAL = "one_maximal"
    TWO_MAXIMAL = "two_maximal"


@dataclass(frozen=True)
class Clique:
    vertices: tuple[int, ...]
    level: CliqueLevel = CliqueLevel.ARBITRARY
    improvements: int = field(default=0, compare=False)

    @property
    def mask(self) -> int:
        return to_mask(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


CliqueLike = Union[Clique, Iterable[int]]


def _as_mask(g: Graph, c: CliqueLike) -> int:
    verts = c.vertices if isinstance(c, Clique) else tuple(c)
    for v in verts:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
    if not g.is_clique(verts):
        raise ContractError(f"{sorted(verts)} is not a clique")
    return to_mask(verts)


# bit-parallel kernels; ``within`` restricts the search to an induced subgraph


def _common_neighbors(rows: Sequence[int], within: int, clique: int) -> int:
    cand = within & ~clique
    for v in iter_bits(clique):
        cand &= rows[v]
        if not cand:
            break
    return cand


def _one_improvement(rows: Sequence[int], within: int, clique: int) -> Optional[int]:
    # greedy: most neighbours among the candidates, then in ``within``,
    # then smallest id
    cand = _common_neighbors(rows, within, clique)
    best, best_key = None, (-1, -1)
    for v in iter_bits(cand):
        key = ((rows[v] & cand).bit_count(), (rows[v] & within).bit_count())
        if key > best_key:
            best, best_key = v, key
    return best


def _tight_sets(rows: Sequence[int], within: int, clique: int) -> list[tuple[int, int]]:
    """For each member ``u`` (ascending), the outside vertices adjacent to every
    member except ``u``, i.e. those with tightness ``|K|-1`` missing ``u``.

    Prefix and suffix intersections give all ``|K|`` sets in ``O(|K|)``
    row operations."""
    members = list(iter_bits(clique))
    outside = within & ~clique
    k = len(members)
    prefix = [outside] * (k + 1)
    for idx, v in enumerate(members):
        prefix[idx + 1] = prefix[idx] & rows[v]
    suffix = outside
    out = [(0, 0)] * k
    for idx in range(k - 1, -1, -1):
        u = members[idx]
        out[idx] = (u, prefix[idx] & suffix & ~rows[u])
        suffix &= rows[u]
    return out


def _two_improvement(
    rows: Sequence[int], within: int, clique: int
) -> Optional[tuple[int, tuple[int, int]]]:
    for u, tight in _tight_sets(rows, within, clique):
        for v in iter_bits(tight):
            partners = rows[v] & tight & ~((1 << (v + 1)) - 1)
            if partners:
                return u, (v, (partners & -partners).bit_length() - 1)
    return None


def _two_maximal_mask(rows: Sequence[int], within: int) -> tuple[int, int]:
    clique = 0
    moves = 0
    while True:
        v = _one_improvement(rows, within, clique)
        if v is not None:
            clique |= 1 << v
            moves += 1
            continue
        swap = _two_improvement(rows, within, clique)
        if swap is None:
            return clique, moves
        u, (v, w) = swap
        clique = (clique & ~(1 << u)) | (1 << v) | (1 << w)
        moves += 1


# public API


def find_1_improvement(g: Graph, c: CliqueLike) -> Optional[int]:
    """A vertex outside ``c`` adjacent to every member, or ``None``.

    Picks the candidate adjacent to the most other candidates, then the one of
    largest degree, then the smallest id."""
    return _one_improvement(g.rows, g.vertex_mask, _as_mask(g, c))


def find_2_improvement(g: Graph, c: CliqueLike) -> Optional[tuple[int, tuple[int, int]]]:
    """Return ``(u, (v, w))`` such that ``c - u + {v, w}`` is a larger clique.

    ``c`` must be 1-maximal. Among several moves the smallest ``u``, then the
    smallest ``v``, then the smallest ``w`` is returned.
    """
    mask = _as_mask(g, c)
    if _one_improvement(g.rows, g.vertex_mask, mask) is not None:
        raise ContractError("find_2_improvement requires a 1-maximal clique")
    return _two_improvement(g.rows, g.vertex_mask, mask)


def two_maximal_clique(g: Graph) -> Clique:
    clique, moves = _two_maximal_mask(g.rows, g.vertex_mask)
    return Clique(bits_to_tuple(clique), CliqueLevel.TWO_MAXIMAL, moves)


def check_conditions(g: Graph, vertices: Iterable[int]) -> tuple[bool, bool]:
    """Directly test maximality conditions (1) and (2) for a clique.

    Written as a plain scan over vertices and edges, independent of the
    bit-parallel search above.
    """
    K = sorted(set(vertices))
    inside = set(K)
    cond1 = not any(
        all(g.has_edge(v, k) for k in K) for v in range(g.n) if v not in inside
    )
    cond2 = True
    for v, w in g.edges():
        if v in inside or w in inside:
            continue
        for u in K:
            if all(g.has_edge(v, k) and g.has_edge(w, k) for k in K if k != u):
                cond2 = False
                break
        if not cond2:
            break
    return cond1, cond2


def clique_level(g: Graph, vertices: Iterable[int]) -> CliqueLevel:
    verts = tuple(vertices)
    if not g.is_clique(verts):
        raise ContractError(f"{sorted(verts)} is not a clique")
    cond1, cond2 = check_conditions(g, verts)
    if cond1 and cond2:
        return CliqueLevel.TWO_MAXIMAL
    if cond1:
        return CliqueLevel.ONE_MAXIMAL
    return CliqueLevel.ARBITRARY
