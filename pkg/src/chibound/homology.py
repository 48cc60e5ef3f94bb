"""Reduced homology of independence complexes and graded Betti numbers.

``Ind(G)`` has the independent sets of ``G`` as faces. Its reduced homology is
read off the augmented chain complex by rank–nullity::

    dim H~_d = f_d - rank(∂_d) - rank(∂_{d+1}),   rank(∂_0) = 1 if f_0 > 0

Ranks are exact: over the rationals by fraction-free integer elimination
(rows are divided by their content after every update), over ``GF(p)`` by
elimination modulo ``p``. The graded Betti number of the edge ideal is the
sum over ``j``-subsets ``W`` of ``dim H~_{j-i-2}(Ind(G[W]))``.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, islice
from math import comb, gcd
from typing import Iterable, Optional, Sequence, Union

from .exceptions import CapacityError, DomainError
from .graph import Graph, induced_rows

HOMOLOGY_LIMIT = 12
LINEAR_RESOLUTION_LIMIT = 8


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class HomologyField:
    """Coefficient field: ``characteristic == 0`` means the rationals."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise DomainError(f"field characteristic must be 0 or prime, got {self.characteristic}")

    @classmethod
    def parse(cls, text: str) -> "HomologyField":
        """Parse ``q``, ``f2`` or ``fp:<p>``."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(0)
        if t == "f2":
            return cls(2)
        if t.startswith("fp:"):
            try:
                return cls(int(t[3:]))
            except ValueError:
                pass
        raise DomainError(f"unknown field {text!r}; expected q, f2 or fp:<p>")

    def __str__(self) -> str:
        return "q" if self.characteristic == 0 else f"fp:{self.characteristic}"


RATIONALS = HomologyField(0)
GF2 = HomologyField(2)

FieldLike = Union[HomologyField, str, None]


def _field(field: FieldLike) -> HomologyField:
    if field is None:
        return RATIONALS
    if isinstance(field, str):
        return HomologyField.parse(field)
    return field


@dataclass(frozen=True)
class BettiIndex:
    """Bi-graded position ``(i, j)`` with ``i >= 0`` and ``j >= i + 2``."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i < 0:
            raise DomainError(f"i must be >= 0, got {self.i}")
        if self.j < self.i + 2:
            raise DomainError(f"need j >= i + 2, got (i, j) = ({self.i}, {self.j})")

    @property
    def homological_degree(self) -> int:
        return self.j - self.i - 2


def _as_betti(idx) -> BettiIndex:
    return idx if isinstance(idx, BettiIndex) else BettiIndex(*idx)


# faces and boundaries -------------------------------------------------------


def independent_sets(rows: Sequence[int], max_size: int) -> list[list[tuple[int, ...]]]:
    """Independent sets grouped by size ``1..max_size`` (index ``k`` holds size
    ``k+1``), each sorted ascending and listed in lexicographic order."""
    n = len(rows)
    by_size: list[list[tuple[int, ...]]] = [[] for _ in range(max_size)]

    def grow(face: tuple[int, ...], cand: int) -> None:
        by_size[len(face) - 1].append(face)
        if len(face) == max_size:
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grow(face + (v,), cand & ~rows[v])

    for v in range(n):
        if max_size:
            grow((v,), ((1 << n) - 1) & ~((1 << (v + 1)) - 1) & ~rows[v])
    return by_size


def _boundary(faces: list[tuple[int, ...]], facets: list[tuple[int, ...]]) -> list[dict[int, int]]:
    index = {f: k for k, f in enumerate(facets)}
    out = []
    for face in faces:
        vec = {}
        for t in range(len(face)):
            vec[index[face[:t] + face[t + 1 :]]] = -1 if t & 1 else 1
        out.append(vec)
    return out


def matrix_rank(vectors: Iterable[dict[int, int]], p: int = 0) -> int:
    """Rank of sparse integer vectors over ``Q`` (``p == 0``) or ``GF(p)``.

    Pivots are chosen Markowitz-style: the sparsest remaining row, and within
    it a unit entry in the sparsest column.
    """
    rows: list[dict[int, int]] = []
    for vec in vectors:
        if p:
            vec = {c: x % p for c, x in vec.items() if x % p}
        else:
            vec = {c: x for c, x in vec.items() if x}
        if vec:
            rows.append(vec)
    col_rows: dict[int, set[int]] = defaultdict(set)
    for r, vec in enumerate(rows):
        for c in vec:
            col_rows[c].add(r)
    alive = set(range(len(rows)))
    rank = 0
    while alive:
        r = min(alive, key=lambda k: (len(rows[k]), k))
        alive.discard(r)
        pivot_row = rows[r]
        if not pivot_row:
            continue
        c = min(pivot_row, key=lambda col: (abs(pivot_row[col]) != 1, len(col_rows[col]), col))
        for col in pivot_row:
            col_rows[col].discard(r)
        rank += 1
        a = pivot_row[c]
        inv = pow(a, -1, p) if p else 0
        for s in sorted(col_rows[c]):
            other = rows[s]
            b = other.pop(c)
            if p:
                factor = b * inv % p
                for col, x in pivot_row.items():
                    if col == c:
                        continue
                    val = (other.get(col, 0) - factor * x) % p
                    _store(other, col_rows, s, col, val)
            elif a in (1, -1):
                factor = b * a
                for col, x in pivot_row.items():
                    if col == c:
                        continue
                    _store(other, col_rows, s, col, other.get(col, 0) - factor * x)
            else:
                for col in other:
                    other[col] *= a
                for col, x in pivot_row.items():
                    if col == c:
                        continue
                    _store(other, col_rows, s, col, other.get(col, 0) - b * x)
                content = 0
                for x in other.values():
                    content = gcd(content, x)
                    if content == 1:
                        break
                if content > 1:
                    for col in other:
                        other[col] //= content
            col_rows[c].discard(s)
        del col_rows[c]
    return rank


def _store(vec: dict[int, int], col_rows, s: int, col: int, val: int) -> None:
    if val:
        vec[col] = val
        col_rows[col].add(s)
    else:
        vec.pop(col, None)
        col_rows[col].discard(s)


def _reduced_dims(rows: tuple[int, ...], top: int, p: int) -> tuple[int, ...]:
    """``dim H~_d`` for ``d = 0..top`` (faces enumerated up to dimension top+1)."""
    if not rows:
        return (0,) * (top + 1)
    faces = independent_sets(rows, top + 2)
    ranks = [1]  # augmentation C_0 -> k
    for k in range(1, top + 2):
        ranks.append(matrix_rank(_boundary(faces[k], faces[k - 1]), p) if faces[k] else 0)
    ranks.append(0)
    return tuple(len(faces[d]) - ranks[d] - ranks[d + 1] for d in range(top + 1))


@lru_cache(maxsize=1 << 18)
def _homology_dim_cached(rows: tuple[int, ...], dim: int, p: int) -> int:
    return _reduced_dims(rows, dim, p)[dim] if dim < len(rows) else 0


def homology_dim(g: Graph, dim: int, field: FieldLike = None, *, limit: int = HOMOLOGY_LIMIT) -> int:
    """``dim H~_dim(Ind(g))`` over ``field`` (rationals by default).

    >>> homology_dim(Graph.cycle(5), 1)
    1
    """
    if dim < 0:
        raise DomainError("only reduced homology in dimensions >= 0 is exposed")
    if g.n > limit:
        raise CapacityError(f"homology_dim: n={g.n} exceeds limit {limit}")
    return _homology_dim_cached(g.rows, dim, _field(field).characteristic)


def reduced_homology(g: Graph, field: FieldLike = None, *, limit: int = HOMOLOGY_LIMIT) -> tuple[int, ...]:
    """All reduced Betti numbers ``(dim H~_0, ..., dim H~_{n-1})`` of ``Ind(g)``."""
    if g.n > limit:
        raise CapacityError(f"reduced_homology: n={g.n} exceeds limit {limit}")
    if g.n == 0:
        return ()
    return _reduced_dims(g.rows, g.n - 1, _field(field).characteristic)


# Betti numbers --------------------------------------------------------------


def _subset_dim(rows: Sequence[int], subset: Sequence[int], dim: int, p: int) -> int:
    return _homology_dim_cached(tuple(induced_rows(rows, subset)), dim, p)


def _chunk_sum(rows, n, j, dim, p, start, stop) -> int:
    return sum(_subset_dim(rows, W, dim, p) for W in islice(combinations(range(n), j), start, stop))


def _chunk_witness(rows, n, j, dim, p, start, stop) -> Optional[tuple[int, ...]]:
    for W in islice(combinations(range(n), j), start, stop):
        if _subset_dim(rows, W, dim, p):
            return W
    return None


def _spans(total: int, jobs: int) -> list[tuple[int, int]]:
    step = -(-total // jobs)
    return [(a, min(a + step, total)) for a in range(0, total, step)]


def _check_capacity(g: Graph, limit: int, name: str) -> None:
    if g.n > limit:
        raise CapacityError(f"{name}: n={g.n} exceeds limit {limit}")


def betti(
    g: Graph, idx, field: FieldLike = None, *, limit: int = HOMOLOGY_LIMIT, jobs: int = 1
) -> int:
    """Graded Betti number ``beta_{i,j}`` of the edge ideal of ``g``.

    >>> betti(Graph.cycle(5), (2, 5))
    1
    """
    idx = _as_betti(idx)
    _check_capacity(g, limit, "betti")
    if idx.j > g.n:
        return 0
    p = _field(field).characteristic
    args = (g.rows, g.n, idx.j, idx.homological_degree, p)
    total = comb(g.n, idx.j)
    if jobs <= 1 or total < 2 * jobs:
        return _chunk_sum(*args, 0, total)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_chunk_sum, *args, a, b) for a, b in _spans(total, jobs)]
        return sum(f.result() for f in futures)


@dataclass(frozen=True)
class Vanishing:
    """Outcome of a vanishing test; truthy iff the Betti number is zero."""

    vanishes: bool
    witness: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.vanishes


def betti_vanishes(
    g: Graph, idx, field: FieldLike = None, *, limit: int = HOMOLOGY_LIMIT, jobs: int = 1
) -> Vanishing:
    """Test ``beta_{i,j} = 0``, stopping at the first contributing subset.

    On failure the witness is the lexicographically smallest ``j``-subset
    whose independence complex has homology in dimension ``j-i-2``.
    """
    idx = _as_betti(idx)
    _check_capacity(g, limit, "betti_vanishes")
    if idx.j > g.n:
        return Vanishing(True)
    p = _field(field).characteristic
    args = (g.rows, g.n, idx.j, idx.homological_degree, p)
    total = comb(g.n, idx.j)
    if jobs <= 1 or total < 2 * jobs:
        witness = _chunk_witness(*args, 0, total)
    else:
        # spans are contiguous in lexicographic order, so the first span with
        # a witness holds the smallest one
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_chunk_witness, *args, a, b) for a, b in _spans(total, jobs)]
            found = [f.result() for f in futures]
        witness = next((w for w in found if w is not None), None)
    return Vanishing(witness is None, witness)


def has_linear_resolution(g: Graph, field: FieldLike = None, *, limit: int = LINEAR_RESOLUTION_LIMIT) -> bool:
    """True iff ``beta_{i,j} = 0`` whenever ``j > i + 2``.

    Equivalently no induced subgraph on ``j`` vertices has ``H~_d`` of its
    independence complex nonzero for ``1 <= d <= j - 2``.
    """
    _check_capacity(g, limit, "has_linear_resolution")
    p = _field(field).characteristic
    for j in range(3, g.n + 1):
        for W in combinations(range(g.n), j):
            sub = tuple(induced_rows(g.rows, W))
            if any(_reduced_dims(sub, j - 2, p)[1:]):
                return False
    return True


def betti_table(g: Graph, field: FieldLike = None, *, limit: int = HOMOLOGY_LIMIT) -> dict[tuple[int, int], int]:
    """All nonzero ``beta_{i,j}`` of the edge ideal, keyed by ``(i, j)``."""
    _check_capacity(g, limit, "betti_table")
    p = _field(field).characteristic
    table: dict[tuple[int, int], int] = defaultdict(int)
    for j in range(2, g.n + 1):
        for W in combinations(range(g.n), j):
            dims = _reduced_dims(tuple(induced_rows(g.rows, W)), j - 2, p)
            for d, h in enumerate(dims):
                if h:
                    table[(j - d - 2, j)] += h
    return dict(sorted(table.items()))
