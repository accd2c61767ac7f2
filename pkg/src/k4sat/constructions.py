"""Generators for the saturated graph families and the edge-count arithmetic
behind the K4^- edge spectrum.

The main family ``F_n(a, b)`` is built from parts ``I`` (1 vertex), ``A1``
(2), ``A2`` (a), ``B1`` (2), ``B2`` (b) and ``C`` (the remaining
``n - a - b - 5``), with edges

* all of ``A1 + A2 + C`` to ``B2``,
* all of ``A2`` to ``B1``,
* ``I`` to all of ``A1 + B1 + C``,
* a matching ``u1 v1, u2 v2`` between ``A1`` and ``B1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .graph import Graph, bits_of, build_graph

#: smallest n for which the closed-form spectrum is claimed
SPECTRUM_MIN_N = 10


@dataclass(frozen=True)
class ConstructionParams:
    n: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if min(self.n, self.a, self.b) < 0:
            raise ValueError(f"parameters must be non-negative, got {self}")
        if self.n < self.a + self.b + 5:
            raise ValueError(f"need n >= a + b + 5, got n={self.n}, a={self.a}, b={self.b}")

    @property
    def c(self) -> int:
        """Size of part ``C``."""
        return self.n - self.a - self.b - 5


@dataclass(frozen=True)
class PartLabels:
    I: tuple[int, ...]
    A1: tuple[int, ...]
    A2: tuple[int, ...]
    B1: tuple[int, ...]
    B2: tuple[int, ...]
    C: tuple[int, ...]
    M: tuple[tuple[int, int], ...] = field(default=())

    PART_NAMES = ("I", "A1", "A2", "B1", "B2", "C")

    def part_of(self, v: int) -> str:
        for name in self.PART_NAMES:
            if v in getattr(self, name):
                return name
        raise KeyError(v)

    def to_dict(self) -> dict:
        out = {name: list(getattr(self, name)) for name in self.PART_NAMES}
        out["M"] = [list(e) for e in self.M]
        return out


def construct_f(n: int, a: int, b: int) -> tuple[Graph, PartLabels]:
    """The graph ``F_n(a, b)`` with its part labels.

    Labels are assigned in the order I, A1, A2, B1, B2, C, so ``I = {0}``
    and ``A1 = {1, 2}``; the matching pairs ``A1[k]`` with ``B1[k]``.
    """
    p = ConstructionParams(n, a, b)
    nxt = iter(range(n))
    take = lambda k: tuple(next(nxt) for _ in range(k))  # noqa: E731
    I, A1, A2, B1, B2, C = take(1), take(2), take(p.a), take(2), take(p.b), take(p.c)
    M = ((A1[0], B1[0]), (A1[1], B1[1]))
    adj = [0] * n
    _join(adj, A1 + A2 + C, B2)
    _join(adj, A2, B1)
    _join(adj, I, A1 + B1 + C)
    for u, v in M:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj)), PartLabels(I, A1, A2, B1, B2, C, M)


def _join(adj: list[int], xs: tuple[int, ...], ys: tuple[int, ...]) -> None:
    """Add all edges between the disjoint vertex sets ``xs`` and ``ys``."""
    xmask, ymask = bits_of(xs), bits_of(ys)
    for x in xs:
        adj[x] |= ymask
    for y in ys:
        adj[y] |= xmask


def f_formula(n: int, a: int, b: int) -> int:
    """Closed-form edge count of ``F_n(a, b)``."""
    ConstructionParams(n, a, b)
    return b * (n - b - 3) + n + a - b + 1


def construct_star_matching(n: int) -> Graph:
    """``K_{1,n-1}`` centred at 0 plus the matching (1,2), (3,4), ..."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    star = [(0, v) for v in range(1, n)]
    matching = [(v, v + 1) for v in range(1, n - 1, 2)]
    return build_graph(n, star + matching)


def construct_complete_bipartite(n: int, i: int) -> Graph:
    """``K_{i, n-i}`` with parts ``{0..i-1}`` and ``{i..n-1}``."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"need 1 <= i <= n - 1, got n={n}, i={i}")
    adj = [0] * n
    _join(adj, tuple(range(i)), tuple(range(i, n)))
    return Graph(n, tuple(adj))


# -- spectrum arithmetic ---------------------------------------------------------


def _floor_ceil_product(k: int) -> int:
    return (k // 2) * ((k + 1) // 2)


def bipartite_threshold(n: int) -> int:
    """Largest edge count a non-bipartite K4^--saturated graph on ``n``
    vertices can have: ``floor((n-1)/2) * ceil((n-1)/2) + 2``."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return _floor_ceil_product(n - 1) + 2


def sat_number(n: int) -> int:
    return 3 * (n - 1) // 2


def ex_number(n: int) -> int:
    return _floor_ceil_product(n)


@dataclass(frozen=True)
class SpectrumSet:
    n: int
    sizes: tuple[int, ...]
    out_of_range: bool = False
    unwitnessed: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        top = self.n * (self.n - 1) // 2
        if any(not 0 <= m <= top for m in self.sizes):
            raise ValueError(f"sizes must lie in [0, {top}]")

    def __contains__(self, m: object) -> bool:
        return m in set(self.sizes)

    def to_dict(self) -> dict:
        out: dict = {"n": self.n, "sizes": list(self.sizes)}
        if self.out_of_range:
            out["warning"] = "formula-out-of-range"
        if self.unwitnessed:
            out["unwitnessed"] = list(self.unwitnessed)
        return out


def spectrum_formula(n: int) -> SpectrumSet:
    """The closed-form edge spectrum, evaluated literally.

    Includes ``i * (n - i)`` for every ``i`` in ``[1, n-1]``.  The value
    ``n - 1`` (from ``i = 1`` and ``i = n - 1``) lies below the saturation
    number and is listed in ``unwitnessed``; stars are not saturated.
    ``out_of_range`` is set for ``n < 10``.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    sizes = {sat_number(n)}
    sizes.update(range(2 * n - 4, bipartite_threshold(n) + 1))
    bipartite = {i * (n - i) for i in range(1, n)}
    sizes |= bipartite
    unwitnessed = tuple(sorted(m for m in {n - 1} if m < sat_number(n)))
    return SpectrumSet(n, tuple(sorted(sizes)), n < SPECTRUM_MIN_N, unwitnessed)


def coverage_set(n: int) -> SpectrumSet:
    """All edge counts ``f(n, a, b)`` with ``2 <= b <= (n-5)//2`` and
    ``0 <= a <= n - b - 5``."""
    if n < 9:
        raise ValueError(f"need n >= 9, got {n}")
    sizes: set[int] = set()
    for b in range(2, (n - 5) // 2 + 1):
        # f is increasing in a with unit steps
        sizes.update(range(f_formula(n, 0, b), f_formula(n, n - b - 5, b) + 1))
    return SpectrumSet(n, tuple(sorted(sizes)))


class CoverageCheck(NamedTuple):
    ok: bool
    missing: tuple[int, ...]


def target_interval(n: int) -> range:
    """``[3n - 11, bipartite_threshold(n)]`` as a range."""
    return range(3 * n - 11, bipartite_threshold(n) + 1)


def verify_coverage_interval(n: int) -> CoverageCheck:
    if n < SPECTRUM_MIN_N:
        raise ValueError(f"need n >= {SPECTRUM_MIN_N}, got {n}")
    covered = set(coverage_set(n).sizes)
    missing = tuple(m for m in target_interval(n) if m not in covered)
    return CoverageCheck(not missing, missing)


def verify_overlap_inequality(n: int) -> bool:
    """Consecutive ``b``-intervals of the coverage set touch or overlap."""
    if n < 11:
        raise ValueError(f"need n >= 11, got {n}")
    return all(
        f_formula(n, 0, b + 1) <= f_formula(n, n - b - 5, b) for b in range(2, (n - 5) // 2)
    )


def parameters_for_size(n: int, m: int) -> tuple[int, int] | None:
    """Some ``(a, b)`` with ``b >= 2`` and ``f(n, a, b) == m``, smallest ``b``
    first; ``None`` if no admissible pair exists."""
    for b in range(2, n - 4):
        lo = f_formula(n, 0, b)
        hi = f_formula(n, n - b - 5, b)
        if lo <= m <= hi:
            return m - lo, b
    return None
