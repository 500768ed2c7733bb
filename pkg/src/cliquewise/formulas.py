"""Closed-form extremal values and the counting inequalities behind them.

Binomials follow the convention ``C(n, k) = 0`` whenever ``k < 0`` or
``k > n``. Rational bounds are returned as :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

VARIANTS = ("vertex-path", "vertex-cycle", "edge-cycle", "edge-path")


def binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True, order=True)
class ExtremalQuery:
    """One verification cell. ``size`` is ``n`` for vertex variants, ``m`` for edge ones."""

    variant: str
    k: int
    t: int
    size: int

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if not 3 <= self.t < self.k:
            raise ValueError(f"need 3 <= t < k, got t={self.t}, k={self.k}")
        if self.variant == "vertex-cycle" and self.size < 1:
            raise ValueError("vertex-cycle needs n >= 1")
        if self.size < 0:
            raise ValueError("size must be non-negative")

    @property
    def is_edge(self) -> bool:
        return self.variant.startswith("edge")

    @property
    def forbids(self) -> str:
        return "path" if self.variant.endswith("path") else "cycle"

    def key(self) -> tuple:
        return (VARIANTS.index(self.variant), self.k, self.t, self.size)

    def as_dict(self) -> dict:
        size_name = "m" if self.is_edge else "n"
        return {"variant": self.variant, "k": self.k, "t": self.t, size_name: self.size}


class ColexDecomposition(NamedTuple):
    m: int
    r: int
    s: int


def colex_decompose(m: int) -> ColexDecomposition:
    """The unique ``(r, s)`` with ``m = C(r, 2) + s`` and ``0 <= s < r``."""
    if m < 0:
        raise ValueError("edge count must be non-negative")
    if m == 0:
        return ColexDecomposition(0, 0, 0)
    r = (1 + math.isqrt(1 + 8 * m)) // 2
    while binom(r, 2) > m:
        r -= 1
    while binom(r + 1, 2) <= m:
        r += 1
    return ColexDecomposition(m, r, m - binom(r, 2))


def path_decompose(n: int, k: int) -> tuple[int, int]:
    """``n = q(k-1) + r`` with ``0 <= r <= k-2``."""
    return divmod(n, k - 1)


def cycle_decompose(n: int, k: int) -> tuple[int, int]:
    """``n = q(k-2) + r`` with ``1 <= r <= k-2``."""
    if n < 1:
        raise ValueError("cycle decomposition needs n >= 1")
    q = (n - 1) // (k - 2)
    return q, n - q * (k - 2)


def ex_path_edges(n: int, k: int) -> int:
    if k < 2 or n < 0:
        raise ValueError("need k >= 2 and n >= 0")
    q, r = path_decompose(n, k)
    return q * binom(k - 1, 2) + binom(r, 2)


def ex_cycle_edges(n: int, k: int) -> int:
    if k < 3 or n < 1:
        raise ValueError("need k >= 3 and n >= 1")
    q, r = cycle_decompose(n, k)
    return q * binom(k - 1, 2) + binom(r, 2)


def _check_tk(k: int, t: int) -> None:
    if not 3 <= t < k:
        raise ValueError(f"need 3 <= t < k, got t={t}, k={k}")


def luo_bound(variant: str, n: int, k: int, t: int) -> Fraction:
    _check_tk(k, t)
    if variant == "path":
        return Fraction(n, k - 1) * binom(k - 1, t)
    if variant == "cycle":
        return Fraction(n - 1, k - 2) * binom(k - 1, t)
    raise ValueError(f"variant must be 'path' or 'cycle', not {variant!r}")


def max_kt_vertex(variant: str, n: int, k: int, t: int) -> int:
    _check_tk(k, t)
    if variant == "path":
        q, r = path_decompose(n, k)
    elif variant == "cycle":
        q, r = cycle_decompose(n, k)
    else:
        raise ValueError(f"variant must be 'path' or 'cycle', not {variant!r}")
    return q * binom(k - 1, t) + binom(r, t)


def kk_value(m: int, t: int) -> int:
    """Largest number of ``t``-cliques in a graph with ``m`` edges."""
    _, r, s = colex_decompose(m)
    return binom(r, t) + binom(s, t - 1)


def edge_decompose(m: int, k: int) -> tuple[int, int]:
    """``m = q C(k-1, 2) + b`` with ``0 <= b < C(k-1, 2)``."""
    return divmod(m, binom(k - 1, 2))


def max_kt_edge(m: int, k: int, t: int) -> int:
    _check_tk(k, t)
    if m < 0:
        raise ValueError("edge count must be non-negative")
    q, b = edge_decompose(m, k)
    return q * binom(k - 1, t) + kk_value(b, t)


def f_t_bound(n: int, k: int, a: int, t: int) -> int:
    return binom(k - a, t) + (n - k + a) * binom(a, t - 1)


def split_sequence(delta: int, degrees: Sequence[int]) -> list[int]:
    """Split each degree into full chunks of ``delta`` plus a remainder, sorted descending."""
    if delta < 1:
        raise ValueError("delta must be positive")
    out: list[int] = []
    for d in degrees:
        if d < 0:
            raise ValueError("degrees must be non-negative")
        a, b = divmod(d, delta)
        out.extend([delta] * a)
        out.append(b)
    out.sort(reverse=True)
    return out


def _is_descending(xs: Sequence[int]) -> bool:
    return all(xs[i] >= xs[i + 1] for i in range(len(xs) - 1))


def majorizes(x: Sequence[int], y: Sequence[int]) -> bool:
    if len(x) != len(y):
        raise ValueError("sequences must have equal length")
    if not (_is_descending(x) and _is_descending(y)):
        raise ValueError("sequences must be sorted in descending order")
    px = py = 0
    for xi, yi in zip(x, y):
        px += xi
        py += yi
        if px < py:
            return False
    return px == py


class ConvexityResult(NamedTuple):
    holds: bool
    strict: bool


def lemma_convexity(x: int, w: int, y: int, z: int, t: int) -> ConvexityResult:
    """Compare ``C(x,t) + C(w,t)`` against ``C(y,t) + C(z,t)``."""
    if min(x, w, y, z) < 0 or t < 2:
        raise ValueError("need non-negative arguments and t >= 2")
    if x + w != y + z or x < y or x < z or x < t:
        raise ValueError("need x + w = y + z, x >= y, x >= z and x >= t")
    lhs = binom(x, t) + binom(w, t)
    rhs = binom(y, t) + binom(z, t)
    return ConvexityResult(lhs >= rhs, lhs > rhs)


def lemma_team_identity(x: int, y: int, t: int) -> bool:
    """Whether ``C(x,t) + y C(x,t-1) + x C(y,t-1) <= C(x+y,t)``."""
    if min(x, y, t) < 0:
        raise ValueError("arguments must be non-negative")
    return binom(x, t) + y * binom(x, t - 1) + x * binom(y, t - 1) <= binom(x + y, t)


def vertex_clique_bound(d: int, k: int, t: int) -> int:
    """Upper bound on cliques through a vertex of degree ``d`` in a P_k-free graph."""
    if d < 0 or k < 4:
        raise ValueError("need d >= 0 and k >= 4")
    _check_tk(k, t)
    a, b = divmod(d, k - 2)
    return a * binom(k - 2, t - 1) + binom(b, t - 1)


def formula_value(query: ExtremalQuery) -> int:
    if query.variant == "vertex-path":
        return max_kt_vertex("path", query.size, query.k, query.t)
    if query.variant == "vertex-cycle":
        return max_kt_vertex("cycle", query.size, query.k, query.t)
    return max_kt_edge(query.size, query.k, query.t)
