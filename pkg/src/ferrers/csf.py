"""
Chromatic symmetric functions of Ferrers graphs.

A red-blue coloring of the diagram picks an edge subset S (the red boxes).
Its constitution is the list of connected components of the red boxes'
row/column incidence; a component touching r rows and columns in total
contributes p_r, and each of the b rows and columns without a red box
contributes p_1. Summing (-1)^{|S|} times that product over all colorings
gives X_G in the power-sum basis.

Complete bipartite graphs K_{n,m} here have parts of size n and m (the
diagram m^n), not n+1 and m+1 as for the tree counts.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Iterator, Sequence

from .algebra.series import series_product_egf
from .algebra.symfun import MBasisExpansion, PBasisExpansion, specialize_p
from .core import FerrersGraph, Partition
from .errors import DomainError
from .limits import ResourceGuard, check, default_guard

__all__ = [
    "RBColoring", "Constitution", "UnionFind", "constitution",
    "csf_p_basis", "csf_hook_p_basis", "csf_complete_bipartite_m_basis",
    "complete_bipartite_graph", "csf_complete_bipartite_p_basis",
    "restricted_growth_strings", "bell_number", "egf_coefficient_check",
]


class UnionFind:
    """Disjoint sets over range(size) with path halving."""

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


@dataclass(frozen=True)
class RBColoring:
    """A red-blue coloring, given by its set of red boxes."""
    red: frozenset[tuple[int, int]]

    @classmethod
    def of(cls, boxes: Iterable[tuple[int, int]]) -> RBColoring:
        return cls(frozenset(boxes))

    def validate(self, p: Partition) -> None:
        for i, j in self.red:
            if not (0 <= i < len(p) and 0 <= j < p[i]):
                raise DomainError(f"box ({i}, {j}) is outside the diagram {p}")


@dataclass(frozen=True)
class Constitution:
    """Constituents as (rows, columns) pairs plus the count of red-free lines."""
    constituents: tuple[tuple[frozenset[int], frozenset[int]], ...]
    blank_lines: int

    def sizes(self) -> list[int]:
        """Rows plus columns of each constituent."""
        return [len(r) + len(c) for r, c in self.constituents]

    def p_key(self) -> tuple[int, ...]:
        return tuple(sorted(self.sizes() + [1] * self.blank_lines, reverse=True))


def constitution(c: RBColoring, p: Partition) -> Constitution:
    c.validate(p)
    rows, cols = len(p), p[0]
    uf = UnionFind(rows + cols)
    for i, j in c.red:
        uf.union(i, rows + j)
    touched = {i for i, _ in c.red} | {rows + j for _, j in c.red}
    groups: dict[int, tuple[set[int], set[int]]] = {}
    for k in sorted(touched):
        rs, cs = groups.setdefault(uf.find(k), (set(), set()))
        if k < rows:
            rs.add(k)
        else:
            cs.add(k - rows)
    parts = sorted(((frozenset(r), frozenset(s)) for r, s in groups.values()),
                   key=lambda rc: (min(rc[0]), min(rc[1])))
    return Constitution(tuple(parts), rows + cols - len(touched))


def _mask_block(parts: tuple[int, ...], lo: int, hi: int) -> Counter:
    rows = len(parts)
    boxes = [(i, rows + j) for i, p in enumerate(parts) for j in range(p)]
    nodes = rows + parts[0]
    acc: Counter = Counter()
    for mask in range(lo, hi):
        parent = list(range(nodes))
        size = [1] * nodes
        red = 0
        bit = 0
        while mask >> bit:
            if (mask >> bit) & 1:
                red += 1
                a, b = boxes[bit]
                while parent[a] != a:
                    a = parent[a]
                while parent[b] != b:
                    b = parent[b]
                if a != b:
                    if size[a] < size[b]:
                        a, b = b, a
                    parent[b] = a
                    size[a] += size[b]
            bit += 1
        key = tuple(sorted((size[k] for k in range(nodes) if parent[k] == k), reverse=True))
        acc[key] += -1 if red & 1 else 1
    return acc


def csf_p_basis(g: FerrersGraph, box_limit: int | None = None,
                workers: int | None = None) -> PBasisExpansion:
    """
    X_G in the power-sum basis by summing over all 2^boxes red-blue colorings.

    Refuses diagrams with more than ``box_limit`` boxes (default from the
    resource guard, 24).
    """
    limit = box_limit if box_limit is not None else default_guard().csf_max_boxes
    check(g.edge_count, limit, "box count", f"the expansion sums 2^{g.edge_count} colorings")
    return _csf_cached(g.partition.parts, workers or 1)


@lru_cache(maxsize=1024)
def _csf_cached(parts: tuple[int, ...], workers: int) -> PBasisExpansion:
    total = 1 << sum(parts)
    if workers <= 1 or total < 1024:
        return PBasisExpansion(_mask_block(parts, 0, total))
    step = -(-total // workers)
    acc: Counter = Counter()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_mask_block, parts, lo, min(lo + step, total))
                   for lo in range(0, total, step)]
        for f in futures:
            for k, v in f.result().items():
                acc[k] += v
    return PBasisExpansion(acc)


def csf_hook_p_basis(m: int, n: int) -> PBasisExpansion:
    """X_G for the hook (m+1) 1^n: one row of m+1 boxes and n further rows of one."""
    if m < 0 or n < 0:
        raise DomainError(f"m and n must be non-negative, got m={m}, n={n}")
    acc: dict[tuple[int, ...], int] = {}

    def add(key, c):
        k = tuple(sorted(key, reverse=True))
        acc[k] = acc.get(k, 0) + c

    for i in range(m + n + 1):
        sign = -1 if i % 2 else 1
        ones = (1,) * (m + n - i)
        for j in range(max(0, i - n), min(m, i) + 1):
            add((j + 1, i - j + 1) + ones, sign * comb(m, j) * comb(n, i - j))
        add((i + 2,) + ones, -sign * comb(m + n, i))
    return PBasisExpansion(acc)


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Set partitions of an n-set as restricted growth strings, in lexicographic order."""
    if n == 0:
        yield ()
        return

    def rec(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(top + 2):
            prefix.append(b)
            yield from rec(prefix, max(top, b))
            prefix.pop()

    yield from rec([0], 0)


@lru_cache(maxsize=None)
def bell_number(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def _block_type_counts(n: int) -> Counter:
    out: Counter = Counter()
    for rgs in restricted_growth_strings(n):
        out[tuple(sorted(Counter(rgs).values(), reverse=True))] += 1
    return out


def csf_complete_bipartite_m_basis(n: int, m: int,
                                   guard: ResourceGuard | None = None) -> MBasisExpansion:
    """
    X_{K_{n,m}} in the monomial basis via stable partitions.

    Every stable partition of K_{n,m} is a set partition of each side; the
    pair with block sizes mu contributes r_1! r_2! ... m_mu, where r_i is
    the multiplicity of i in mu.
    """
    if n < 1 or m < 1:
        raise DomainError(f"K_{{n,m}} needs n, m >= 1, got n={n}, m={m}")
    guard = guard or default_guard()
    check(bell_number(n) * bell_number(m), guard.max_set_partition_pairs,
          "number of set-partition pairs Bell(n)*Bell(m)")
    left, right = _block_type_counts(n), _block_type_counts(m)
    acc: dict[tuple[int, ...], int] = {}
    for a, ca in left.items():
        for b, cb in right.items():
            mu = tuple(sorted(a + b, reverse=True))
            weight = prod(factorial(r) for r in Counter(mu).values())
            acc[mu] = acc.get(mu, 0) + ca * cb * weight
    return MBasisExpansion(acc)


def complete_bipartite_graph(n: int, m: int) -> FerrersGraph:
    """K_{n,m} as the Ferrers graph of the rectangle m^n."""
    if n < 1 or m < 1:
        raise DomainError(f"K_{{n,m}} needs n, m >= 1, got n={n}, m={m}")
    return FerrersGraph(Partition((m,) * n))


def csf_complete_bipartite_p_basis(n: int, m: int) -> PBasisExpansion:
    """X_{K_{n,m}} in the power-sum basis; an empty side leaves an edgeless graph."""
    if n < 0 or m < 0:
        raise DomainError(f"n and m must be non-negative, got n={n}, m={m}")
    if n == 0 or m == 0:
        return PBasisExpansion({(1,) * (n + m): 1})
    return csf_p_basis(complete_bipartite_graph(n, m))


def egf_coefficient_check(n: int, m: int, values: Sequence) -> bool:
    """
    Compare n! m! [s^n t^m] prod_i (e^{s x_i} + e^{t x_i} - 1) with
    X_{K_{n,m}} at x = values.
    """
    series = series_product_egf(values, n, m)
    lhs = series.coefficient(n, m) * factorial(n) * factorial(m)
    rhs = specialize_p(csf_complete_bipartite_p_basis(n, m), values)
    return lhs == Fraction(rhs)
