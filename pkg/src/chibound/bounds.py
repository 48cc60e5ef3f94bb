"""Exact evaluation of the chromatic bounding functions.

Everything is computed with Python integers, so values never overflow. The
two binomial identities (``single_bump``/``double_bump``) are evaluated as the
literal sums; their closed forms are left to the tests as oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Optional

from .exceptions import DomainError
from .family import FamilyIndex

BoundCallable = Callable[[int], int]


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise DomainError(message)


def _check_p_omega(p: int, omega: int) -> None:
    _require(p >= 1, f"p must be >= 1, got {p}")
    _require(omega >= 1, f"omega must be >= 1, got {omega}")


def wagon(p: int, omega: int) -> int:
    """Wagon's recursion ``f_1 = 1``, ``f_{p+1} = C(omega, 2) f_p + omega``."""
    _check_p_omega(p, omega)
    value = 1
    for _ in range(p - 1):
        value = comb(omega, 2) * value + omega
    return value


def pk2_bound(p: int, omega: int) -> int:
    """Bound for ``pK2``-free graphs: ``C(omega - 1 + 2(p-1), 2(p-1))``."""
    _check_p_omega(p, omega)
    return comb(omega - 1 + 2 * (p - 1), 2 * (p - 1))


def pk2_transform(p: int, f: BoundCallable, omega: int) -> int:
    """Bound for ``pK2 ∪ H``-free graphs given a bound ``f`` for ``H``-free ones.

    ``sum_{k=1}^{omega} C(omega - k + 2p - 1, 2p - 1) * f(k)``
    """
    _check_p_omega(p, omega)
    return sum(comb(omega - k + 2 * p - 1, 2 * p - 1) * f(k) for k in range(1, omega + 1))


def k2_transform(f: BoundCallable, omega: int) -> int:
    """The single-edge step: ``sum_{k=1}^{omega} (omega - k + 1) f(k)``."""
    _require(omega >= 1, f"omega must be >= 1, got {omega}")
    return sum((omega - k + 1) * f(k) for k in range(1, omega + 1))


def const_f(c: int) -> BoundCallable:
    """The bound that is 1 at ``omega = 1`` and ``c`` above it."""
    _require(c >= 1, f"c must be >= 1, got {c}")
    return lambda omega: 1 if omega == 1 else c


def const_f_bound(p: int, c: int, omega: int) -> int:
    """Closed form of ``pk2_transform(p, const_f(c), omega)``."""
    _check_p_omega(p, omega)
    _require(c >= 1, f"c must be >= 1, got {c}")
    return comb(omega + 2 * p - 2, 2 * p - 1) + c * comb(omega + 2 * p - 2, 2 * p)


def degree_bound(p: int, n: int, omega: int) -> int:
    """Bound when ``H`` is every ``n``-vertex graph with a universal vertex."""
    _require(n >= 2, f"n must be >= 2, got {n}")
    return const_f_bound(p, n - 1, omega)


def perfect_join_bound(p: int, omega: int) -> int:
    """``C(omega + 2p, 2p + 1)``: ``H``-free graphs perfect."""
    _check_p_omega(p, omega)
    return comb(omega + 2 * p, 2 * p + 1)


def diamond_bound(p: int, omega: int) -> int:
    """Bound for ``{(p+2)K2, pK2 ∪ diamond}``-free graphs."""
    _check_p_omega(p, omega)
    return comb(omega + 2 * p, 2 * p + 1) + comb(omega + 2 * p - 3, 2 * p - 1)


def perfectly_divisible_bound(p: int, omega: int) -> int:
    """``C(omega - 1 + 2p, 2p)`` for ``(p-1)K2 ∪ H`` with ``H``-free graphs
    perfectly divisible."""
    _check_p_omega(p, omega)
    return comb(omega - 1 + 2 * p, 2 * p)


def triangle_free_bound(j: int) -> int:
    _require(j >= 2, f"j must be >= 2, got {j}")
    return j - 1


# the recursive family bound ----------------------------------------------------


def _check_nd(n: int, d: int) -> None:
    _require(d >= 0, f"d must be >= 0, got {d}")
    _require(n >= 2 * (d + 1), f"n must be >= 2(d+1) = {2 * (d + 1)}, got n={n}")


@lru_cache(maxsize=None)
def _g(n: int, d: int, omega: int) -> int:
    if omega == 1:
        return 1
    if d == 0:
        return n - 1
    return sum(
        (omega - k + 1) * _g(max(n + k - omega - 2, 2 * d), d - 1, k)
        for k in range(1, omega + 1)
    )


def g_eval(n: int, d: int, omega: int) -> int:
    """Chromatic bound for graphs free of the family ``B(n, d)``.

    >>> g_eval(7, 1, 3)
    13
    """
    _check_nd(n, d)
    _require(omega >= 1, f"omega must be >= 1, got {omega}")
    return _g(n, d, omega)


def closed_form_bound(n: int, d: int, omega: int) -> int:
    _check_nd(n, d)
    _require(omega >= 1, f"omega must be >= 1, got {omega}")
    return comb(omega - 1 + 2 * d, 2 * d) + comb(n - 2, 2 * d + 1)


def sharpness_predicate(n: int, d: int, omega: int) -> bool:
    """True iff ``g_eval(n, d, omega) < closed_form_bound(n, d, omega)``."""
    _check_nd(n, d)
    _require(omega >= 1, f"omega must be >= 1, got {omega}")
    if d == 0:
        return omega == 1 and n > 2
    return n > omega + 2 * d + 1


def single_bump(n: int, m: int) -> int:
    _require(n >= 0 and m >= 0, f"n and m must be non-negative, got ({n}, {m})")
    return sum(comb(m + i, m) for i in range(n + 1))


def double_bump(n: int, m: int) -> int:
    _require(n >= 0 and m >= 0, f"n and m must be non-negative, got ({n}, {m})")
    return sum((n + 1 - i) * comb(i + m, m) for i in range(n + 1))


# syzygy indices ----------------------------------------------------------------


def betti_family(i: int, j: int) -> FamilyIndex:
    """Family index ``(j, j - i - 2)`` forbidden by ``beta_{i,j} = 0``.

    Defined for ``i + 2 <= j <= 2i + 2``; outside that band ``n = j`` would
    violate the family-domain constraint ``n >= 2(d+1)``.
    """
    _require(i >= 0, f"i must be >= 0, got {i}")
    _require(j >= i + 2, f"need j >= i + 2, got (i, j) = ({i}, {j})")
    _require(
        j <= 2 * i + 2,
        f"(i, j) = ({i}, {j}) gives n={j}, d={j - i - 2}, violating n >= 2(d+1); "
        "need j <= 2i + 2",
    )
    return FamilyIndex(j, j - i - 2)


def main_cor_bound(i: int, j: int, omega: int) -> int:
    idx = betti_family(i, j)
    _require(omega >= 1, f"omega must be >= 1, got {omega}")
    d = idx.d
    return comb(omega - 1 + 2 * d, 2 * d) + comb(j - 2, 2 * d + 1)


def is_parabolic(i: int, j: int) -> bool:
    _require(i >= 0 and j >= 0, f"indices must be non-negative, got ({i}, {j})")
    return (j - i) ** 2 >= j + i + 2


def asym_bound(i: int, j: int, omega: int) -> int:
    _require(i >= 0, f"i must be >= 0, got {i}")
    _require(j - i >= 3, f"need j - i >= 3, got (i, j) = ({i}, {j})")
    _require(omega >= 1, f"omega must be >= 1, got {omega}")
    d = j - i - 2
    return comb(omega - 1 + 2 * d, 2 * d)


# named bound functions -------------------------------------------------------


@dataclass(frozen=True)
class BoundFn:
    """A named bounding function ``omega -> int`` with bound parameters.

    ``inner`` is only used by ``pk2_transform``.

    >>> BoundFn("g", (7, 1))(3)
    13
    >>> BoundFn("pk2_transform", (1,), BoundFn("perfect"))(2)
    4
    """

    kind: str
    params: tuple[int, ...] = ()
    inner: Optional["BoundFn"] = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise DomainError(f"unknown bound function {self.kind!r}")
        arity = _KINDS[self.kind][0]
        if len(self.params) != arity:
            raise DomainError(f"{self.kind} takes {arity} parameter(s), got {len(self.params)}")
        if (self.kind == "pk2_transform") != (self.inner is not None):
            raise DomainError("an inner function is required by (and only by) pk2_transform")

    def __call__(self, omega: int) -> int:
        if self.kind == "pk2_transform":
            return pk2_transform(self.params[0], self.inner, omega)
        return _KINDS[self.kind][1](*self.params, omega)


def _perfect(omega: int) -> int:
    _require(omega >= 1, f"omega must be >= 1, got {omega}")
    return omega


def _const(c: int, omega: int) -> int:
    _require(omega >= 1, f"omega must be >= 1, got {omega}")
    return const_f(c)(omega)


_KINDS: dict[str, tuple[int, Callable[..., int]]] = {
    "wagon": (1, wagon),
    "pk2": (1, pk2_bound),
    "pk2_transform": (1, pk2_transform),
    "const_f": (2, const_f_bound),
    "degree": (2, degree_bound),
    "g": (2, g_eval),
    "closed_form": (2, closed_form_bound),
    "perfect_join": (1, perfect_join_bound),
    "diamond": (1, diamond_bound),
    "perfectly_divisible": (1, perfectly_divisible_bound),
    "triangle_free": (1, lambda j, omega: triangle_free_bound(j)),
    "main_cor": (2, main_cor_bound),
    "asym": (2, asym_bound),
    "perfect": (0, _perfect),
    "const": (1, _const),
}

BOUND_KINDS = tuple(_KINDS)
