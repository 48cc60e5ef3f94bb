"""Recursive clique-partition colouring for ``B(n, d)``-free graphs.

For ``d = 0`` the graph is coloured first-fit. For ``d > 0`` a 2-maximal
clique with positions ``0..t-1`` (ascending vertex id) anchors a partition of
the remaining vertices by their non-neighbours on the clique:

* exactly one non-neighbour at position ``a``: the vertex joins ``D[a]``,
  together with clique vertex ``a``; each ``D[a]`` is independent and gets
  one colour;
* two or more: the vertex joins ``C[a, b]`` for its two smallest
  non-neighbour positions ``a < b``. Each ``C[a, b]`` is ``B(max(n-b-1, 2d),
  d-1)``-free whenever the host is ``B(n, d)``-free and is coloured
  recursively with a fresh block of colours.

Colours are allocated from a single counter (``D`` blocks first, then ``C``
blocks in lexicographic order), so they always form ``0..colors_used-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .bounds import betti_family, g_eval
from .clique import Clique, CliqueLevel, _two_maximal_mask, clique_level, two_maximal_clique
from .exceptions import CapacityError, ContractError
from .family import FREENESS_LIMIT, FamilyIndex, _as_index, is_family_free
from .graph import (
    CLIQUE_LIMIT,
    ColoringResult,
    Graph,
    _first_fit_into,
    bits_to_tuple,
    exact_clique_number,
    iter_bits,
)
from .homology import HOMOLOGY_LIMIT, FieldLike, _as_betti, betti_vanishes


@dataclass(frozen=True)
class PartitionResult:
    """Clique partition with 0-based clique positions.

    ``D[a]`` holds clique vertex ``a`` and the vertices missing only it;
    ``C[(a, b)]`` holds vertices whose two smallest missing positions are
    ``a < b`` (every pair is present, possibly empty).
    """

    clique: Clique
    D: tuple[tuple[int, ...], ...]
    C: dict[tuple[int, int], tuple[int, ...]]

    def blocks(self) -> list[tuple[int, ...]]:
        return list(self.D) + [self.C[k] for k in sorted(self.C)]


def _partition_masks(
    rows: Sequence[int], within: int, members: Sequence[int]
) -> tuple[list[int], dict[tuple[int, int], int], int]:
    """Return ``(D, C, leftover)``; ``leftover`` is non-empty only when the
    clique is not 1-maximal inside ``within``."""
    clique = 0
    for v in members:
        clique |= 1 << v
    outside = within & ~clique
    missing = [outside & ~rows[v] for v in members]
    remaining = outside
    D: list[int] = []
    C: dict[tuple[int, int], int] = {}
    t = len(members)
    for a in range(t):
        first = remaining & missing[a]
        remaining &= ~first
        for b in range(a + 1, t):
            if not first:
                break
            block = first & missing[b]
            if block:
                C[(a, b)] = block
                first &= ~block
        D.append(first | (1 << members[a]))
    return D, C, remaining


def partition_by_clique(g: Graph, clique: Optional[Sequence[int]] = None) -> PartitionResult:
    """Partition ``V(g)`` around a 2-maximal clique (found if not given).

    The two-smallest-positions rule is cross-checked against the
    set-difference construction ``C[a,b] = C'[a,b] - (earlier C' sets)``.
    """
    if g.n == 0:
        raise ContractError("partition_by_clique needs a non-empty graph")
    if clique is None:
        found = two_maximal_clique(g)
    else:
        members = tuple(sorted(set(clique)))
        found = Clique(members, clique_level(g, members))
        if found.level is CliqueLevel.ARBITRARY:
            raise ContractError("the anchor clique must be at least 1-maximal")
    members = found.vertices
    rows = g.rows
    D, C, leftover = _partition_masks(rows, g.vertex_mask, members)
    assert leftover == 0

    t = len(members)
    outside = g.vertex_mask & ~found.mask
    both = {
        (a, b): outside & ~rows[members[a]] & ~rows[members[b]]
        for a in range(t)
        for b in range(a + 1, t)
    }
    for a, b in both:
        earlier = 0
        for (k, l), block in both.items():
            if k < a or (k == a and a < l < b):
                earlier |= block
        if both[(a, b)] & ~earlier != C.get((a, b), 0):
            raise AssertionError(f"C[{a},{b}] disagrees with the set-difference construction")
    for a, block in enumerate(D):
        if any(rows[v] & block for v in iter_bits(block)):
            raise AssertionError(
                f"D[{a}] is not independent; the anchor clique is not 2-maximal"
            )
    return PartitionResult(
        clique=found,
        D=tuple(bits_to_tuple(m) for m in D),
        C={k: bits_to_tuple(C.get(k, 0)) for k in both},
    )


def _color_rec(
    rows: Sequence[int],
    within: int,
    n: int,
    d: int,
    colors: list[int],
    next_color: int,
    trace: list[int],
) -> int:
    if not within:
        return next_color
    if d == 0:
        classes: list[int] = []
        _first_fit_into(rows, iter_bits(within), classes, colors, next_color)
        return next_color + len(classes)
    clique, _ = _two_maximal_mask(rows, within)
    members = list(iter_bits(clique))
    trace.append(len(members))
    D, C, leftover = _partition_masks(rows, within, members)
    if leftover:
        raise AssertionError("local search returned a clique that is not 1-maximal")
    for block in D:
        for v in iter_bits(block):
            if rows[v] & block:
                raise AssertionError("dependent D block: clique is not 2-maximal")
            colors[v] = next_color
        next_color += 1
    for (a, b) in sorted(C):
        next_color = _color_rec(rows, C[(a, b)], max(n - b - 1, 2 * d), d - 1, colors, next_color, trace)
    return next_color


def _check_proper(rows: Sequence[int], colors: Sequence[int], used: int) -> None:
    classes = [0] * used
    for v, c in enumerate(colors):
        classes[c] |= 1 << v
    for v, c in enumerate(colors):
        if rows[v] & classes[c]:
            raise AssertionError(f"vertex {v} shares colour {c} with a neighbour")


def color(
    g: Graph,
    idx,
    *,
    omega: Optional[int] = None,
    assume_free: bool = False,
    check_free: bool = False,
) -> ColoringResult:
    """Colour ``g`` with the recursive procedure for ``B(n, d)``-free graphs.

    Always returns a proper colouring. ``certified_bound`` is ``g_{n,d}``
    at ``omega`` (computed exactly for graphs up to ``CLIQUE_LIMIT``
    vertices when not supplied). ``bound_certified`` is set when the caller
    asserts freeness or ``check_free`` verified it.
    """
    idx = _as_index(idx)
    colors = [-1] * g.n
    trace: list[int] = []
    used = _color_rec(g.rows, g.vertex_mask, idx.n, idx.d, colors, 0, trace)
    _check_proper(g.rows, colors, used)

    if omega is None and 0 < g.n <= CLIQUE_LIMIT:
        omega = exact_clique_number(g)
    bound = g_eval(idx.n, idx.d, omega) if omega else None
    certified = assume_free
    if check_free and not certified:
        if g.n > FREENESS_LIMIT:
            raise CapacityError(f"freeness check: n={g.n} exceeds limit {FREENESS_LIMIT}")
        certified = is_family_free(g, idx)
    return ColoringResult(
        colors=tuple(colors),
        colors_used=used,
        certified_bound=bound,
        clique_trace=tuple(trace),
        bound_certified=certified and bound is not None,
        omega=omega,
        family=(idx.n, idx.d),
    )


def is_triangle_free(g: Graph) -> bool:
    rows = g.rows
    return not any(rows[u] & rows[v] for u, v in g.edges())


def color_for_betti(
    g: Graph,
    idx,
    *,
    omega: Optional[int] = None,
    verify: Optional[bool] = None,
    field: FieldLike = None,
) -> ColoringResult:
    """Colour a graph whose edge ideal has ``beta_{i,j} = 0``.

    Routes through the family ``B(j, j-i-2)``. Vanishing is verified when
    ``verify`` is true (default: whenever the graph is within the homology
    capacity); for triangle-free graphs the bound tightens to ``j - 1``.
    """
    bidx = _as_betti(idx)
    fam = betti_family(bidx.i, bidx.j)
    if verify is None:
        verify = g.n <= HOMOLOGY_LIMIT
    vanishes = bool(betti_vanishes(g, bidx, field)) if verify else False
    result = color(g, fam, omega=omega, assume_free=vanishes)
    bound = result.certified_bound
    if bound is not None and is_triangle_free(g):
        bound = min(bound, bidx.j - 1)
    return ColoringResult(
        colors=result.colors,
        colors_used=result.colors_used,
        certified_bound=bound,
        clique_trace=result.clique_trace,
        bound_certified=vanishes and bound is not None,
        omega=result.omega,
        family=result.family,
    )


def refined_bound(n: int, d: int, omega: int, t: int) -> int:
    """Bound on the colours used when the root clique has ``t <= omega``
    vertices: ``t`` for the ``D`` blocks plus, for each position ``b``, ``b``
    child blocks bounded by ``g_{max(n-b-1, 2d), d-1}(omega - b + 1)``.

    Equals ``g_eval(n, d, omega)`` when ``t == omega``.
    """
    FamilyIndex(n, d)
    if not 1 <= t <= omega:
        raise ContractError(f"need 1 <= t <= omega, got t={t}, omega={omega}")
    if d == 0:
        return g_eval(n, 0, omega)
    return t + sum(
        b * g_eval(max(n - b - 1, 2 * d), d - 1, omega - b + 1) for b in range(1, t)
    )
