"""
Partitions, ab-words and Ferrers graphs.

A Ferrers graph has vertex classes U = {u_0..u_n} (rows) and V = {v_0..v_m}
(columns), with (u_i, v_j) an edge iff j < parts[i]. The three encodings
convert freely:

>>> p = parse_partition("4,4,2")
>>> conjugate(p).parts
(3, 3, 2, 2)
>>> str(partition_to_word(p))
'babba'
>>> word_to_partition(ABWord("babba")) == p
True
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .errors import DomainError, ParseError

__all__ = [
    "Partition", "ABWord", "FerrersGraph",
    "parse_partition", "parse_word", "conjugate",
    "word_to_partition", "partition_to_word", "graph_from_partition",
    "partitions_of", "partitions_up_to", "words_of_length", "words_up_to",
]


@dataclass(frozen=True)
class Partition:
    """Row lengths of a Ferrers diagram, largest first."""
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ParseError("partition must have at least one part")
        for i, p in enumerate(parts):
            if not isinstance(p, int) or isinstance(p, bool):
                raise ParseError(f"part {i} is not an integer: {p!r}", i)
            if p < 1:
                raise ParseError(f"part {i} must be positive, got {p}", i)
            if i and p > parts[i - 1]:
                raise ParseError(
                    f"parts must be weakly decreasing: part {i} ({p}) "
                    f"exceeds part {i - 1} ({parts[i - 1]})", i)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    @property
    def n(self) -> int:
        """Index of the last row (row count minus one)."""
        return len(self.parts) - 1

    @property
    def m(self) -> int:
        """Index of the last column (column count minus one)."""
        return self.parts[0] - 1

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def is_rectangle(self) -> bool:
        return self.parts[0] == self.parts[-1]

    def boxes(self) -> list[tuple[int, int]]:
        """All boxes (i, j) in row-major order."""
        return [(i, j) for i, p in enumerate(self.parts) for j in range(p)]


@dataclass(frozen=True)
class ABWord:
    """Border-path encoding ``a^{n_0} b a^{n_1} b ... b a^{n_m}``."""
    letters: str = ""

    def __post_init__(self):
        for i, c in enumerate(self.letters):
            if c not in "ab":
                raise ParseError(f"letter {i} is {c!r}, expected 'a' or 'b'", i)

    def __str__(self) -> str:
        return self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: ABWord | str) -> ABWord:
        return ABWord(self.letters + str(other))

    @property
    def m(self) -> int:
        """Number of b's."""
        return self.letters.count("b")

    @property
    def n(self) -> int:
        """Number of a's."""
        return self.letters.count("a")

    @property
    def runs(self) -> tuple[int, ...]:
        """The counts n_0, ..., n_m of a's between consecutive b's."""
        return tuple(len(run) for run in self.letters.split("b"))

    @classmethod
    def from_runs(cls, runs) -> ABWord:
        return cls("b".join("a" * k for k in runs))

    def conjugate(self) -> ABWord:
        """Word of the transposed diagram: reverse, then swap a and b."""
        return ABWord(self.letters[::-1].translate(str.maketrans("ab", "ba")))


def parse_partition(text: str) -> Partition:
    """Parse comma-separated decimal parts, e.g. ``"4,4,2"``."""
    if not text or not text.strip():
        raise ParseError("empty partition text")
    parts = []
    for i, token in enumerate(text.split(",")):
        token = token.strip()
        try:
            parts.append(int(token, 10))
        except ValueError:
            raise ParseError(f"part {i} is not a decimal integer: {token!r}", i) from None
    return Partition(tuple(parts))


def parse_word(text: str) -> ABWord:
    return ABWord(text.strip())


def conjugate(p: Partition) -> Partition:
    """Column heights: entry j counts the rows longer than j."""
    return Partition(tuple(sum(1 for r in p.parts if r > j) for j in range(p.parts[0])))


def word_to_partition(w: ABWord) -> Partition:
    # n_i rows of length i+1 for i < m, and n_m + 1 full rows of length m+1
    runs = w.runs
    m = len(runs) - 1
    parts = [m + 1] * (runs[m] + 1)
    for i in range(m - 1, -1, -1):
        parts.extend([i + 1] * runs[i])
    return Partition(tuple(parts))


def partition_to_word(p: Partition) -> ABWord:
    m = p.m
    runs = [p.parts.count(i + 1) for i in range(m + 1)]
    runs[m] -= 1
    return ABWord.from_runs(runs)


def graph_from_partition(p: Partition) -> FerrersGraph:
    return FerrersGraph(p)


@dataclass(frozen=True)
class FerrersGraph:
    """
    Bipartite graph of a partition.

    Vertices have integer ids for the brute-force code: u_i is ``i`` and
    v_j is ``n + 1 + j``.
    """
    partition: Partition

    @classmethod
    def from_word(cls, w: ABWord | str) -> FerrersGraph:
        if isinstance(w, str):
            w = ABWord(w)
        return cls(word_to_partition(w))

    @classmethod
    def from_text(cls, text: str) -> FerrersGraph:
        return cls(parse_partition(text))

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def m(self) -> int:
        return self.partition.m

    @property
    def row_count(self) -> int:
        return self.n + 1

    @property
    def col_count(self) -> int:
        return self.m + 1

    @property
    def vertex_count(self) -> int:
        return self.n + self.m + 2

    @property
    def edge_count(self) -> int:
        return self.partition.size

    @cached_property
    def dual(self) -> Partition:
        return conjugate(self.partition)

    @cached_property
    def word(self) -> ABWord:
        return partition_to_word(self.partition)

    def has_edge(self, i: int, j: int) -> bool:
        return 0 <= i <= self.n and 0 <= j < self.partition[i]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (row, column) pairs, i.e. the boxes of the diagram."""
        return self.partition.boxes()

    def u_degrees(self) -> tuple[int, ...]:
        return self.partition.parts

    def v_degrees(self) -> tuple[int, ...]:
        return self.dual.parts

    def u_id(self, i: int) -> int:
        return i

    def v_id(self, j: int) -> int:
        return self.n + 1 + j

    def vertex_label(self, k: int) -> str:
        return f"u{k}" if k <= self.n else f"v{k - self.n - 1}"

    def parse_vertex(self, label: str) -> int:
        """Vertex id for a label like ``u0`` or ``v3``."""
        side, idx = label[:1], label[1:]
        if side not in ("u", "v") or not idx.isdigit():
            raise ParseError(f"vertex label must look like u<i> or v<j>, got {label!r}")
        k = int(idx)
        if side == "u":
            if k > self.n:
                raise DomainError(f"no vertex u{k}; rows are u0..u{self.n}")
            return k
        if k > self.m:
            raise DomainError(f"no vertex v{k}; columns are v0..v{self.m}")
        return self.n + 1 + k

    def id_edges(self) -> list[tuple[int, int]]:
        """Edges as (u id, v id) pairs."""
        return [(i, self.n + 1 + j) for i, j in self.edges()]

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for a, b in self.id_edges():
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def transpose(self) -> FerrersGraph:
        """The isomorphic graph with the roles of U and V swapped."""
        return FerrersGraph(self.dual)

    def with_edge(self, i: int, j: int) -> FerrersGraph:
        """Add edge (u_i, v_j) between existing vertices, keeping a Ferrers shape."""
        if not (0 <= i <= self.n and 0 <= j <= self.m):
            raise DomainError(f"(u{i}, v{j}) is not a pair of existing vertices")
        if self.has_edge(i, j):
            raise DomainError(f"(u{i}, v{j}) is already an edge")
        parts = list(self.partition.parts)
        if j != parts[i] or (i > 0 and parts[i - 1] <= j):
            raise DomainError(f"adding (u{i}, v{j}) breaks monotone closure")
        parts[i] += 1
        return FerrersGraph(Partition(tuple(parts)))


def partitions_of(total: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``total`` in reverse lexicographic order."""
    if largest is None:
        largest = total

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(total, largest):
        if parts:
            yield Partition(parts)


def partitions_up_to(max_boxes: int) -> Iterator[Partition]:
    for total in range(1, max_boxes + 1):
        yield from partitions_of(total)


def words_of_length(k: int) -> Iterator[ABWord]:
    for letters in itertools.product("ab", repeat=k):
        yield ABWord("".join(letters))


def words_up_to(max_len: int) -> Iterator[ABWord]:
    for k in range(max_len + 1):
        yield from words_of_length(k)
