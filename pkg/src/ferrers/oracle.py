"""
Brute-force ground truth for every counted quantity.

Nothing here imports the closed-form modules; the graphs are treated as
plain adjacency lists. Each oracle refuses inputs beyond its guard.
"""

from __future__ import annotations

from collections import Counter, deque
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Mapping, Sequence

from .algebra.forms import Var
from .algebra.poly import IntPolynomial, interpolate
from .core import ABWord, FerrersGraph, Partition, word_to_partition
from .errors import DomainError
from .limits import ResourceGuard, check, default_guard

__all__ = [
    "ResourceGuard",
    "oracle_spanning_count_matrix_tree", "oracle_spanning_trees_enumerate",
    "oracle_weighted_spanning_sum", "oracle_hamiltonian_paths",
    "oracle_permissible_bijections", "oracle_permissible_functions",
    "oracle_rook_placements", "oracle_chromatic_value", "oracle_chromatic_poly",
    "oracle_excedance", "oracle_acyclic_unique_sink", "oracle_unique_sink_counts",
    "oracle_coloring_corollary", "oracle_csf_specialized", "oracle_constitution_bfs",
    "bareiss_determinant", "excedance_word",
]


def _guard(guard):
    return guard or default_guard()


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free elimination."""
    a = [list(row) for row in matrix]
    size = len(a)
    if size == 0:
        return 1
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for r in range(k + 1, size):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def oracle_spanning_count_matrix_tree(g: FerrersGraph, guard: ResourceGuard | None = None) -> int:
    """Kirchhoff: spanning trees = any cofactor of the Laplacian."""
    guard = _guard(guard)
    check(g.vertex_count, guard.max_vertices * 2, "vertex count")
    adj = g.adjacency()
    size = len(adj)
    lap = [[0] * size for _ in range(size)]
    for a, nbrs in enumerate(adj):
        lap[a][a] = len(nbrs)
        for b in nbrs:
            lap[a][b] -= 1
    return bareiss_determinant([row[1:] for row in lap[1:]])


def _is_spanning_tree(vertex_count: int, edges) -> bool:
    parent = list(range(vertex_count))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def oracle_spanning_trees_enumerate(g: FerrersGraph, guard: ResourceGuard | None = None
                                    ) -> list[frozenset[tuple[int, int]]]:
    """Every spanning tree as a set of (row, column) boxes."""
    guard = _guard(guard)
    check(g.edge_count, guard.max_boxes, "box count", "trees are found among edge subsets")
    boxes = g.edges()
    offset = g.n + 1
    trees = []
    for subset in combinations(boxes, g.vertex_count - 1):
        if _is_spanning_tree(g.vertex_count, [(i, offset + j) for i, j in subset]):
            trees.append(frozenset(subset))
    return trees


def _value(assignment: Mapping, side: str, k: int) -> Fraction:
    var = Var(side, k)
    if var in assignment:
        return Fraction(assignment[var])
    if str(var) in assignment:
        return Fraction(assignment[str(var)])
    raise DomainError(f"assignment has no value for variable {var}")


def oracle_weighted_spanning_sum(g: FerrersGraph, assignment: Mapping,
                                 guard: ResourceGuard | None = None) -> Fraction:
    """Sum over enumerated spanning trees of prod x_p^{deg u_p} * prod y_q^{deg v_q}."""
    xs = [_value(assignment, "x", p) for p in range(g.n + 1)]
    ys = [_value(assignment, "y", q) for q in range(g.m + 1)]
    total = Fraction(0)
    for tree in oracle_spanning_trees_enumerate(g, guard):
        w = Fraction(1)
        for i, j in tree:
            w *= xs[i] * ys[j]
        total += w
    return total


def oracle_hamiltonian_paths(g: FerrersGraph, guard: ResourceGuard | None = None) -> int:
    """Hamiltonian paths by DFS, each path and its reversal counted once."""
    guard = _guard(guard)
    check(g.vertex_count, guard.max_vertices, "vertex count")
    adj = g.adjacency()
    total_v = len(adj)
    if total_v == 1:
        return 1
    count = 0

    def dfs(v, seen, depth, start):
        nonlocal count
        if depth == total_v:
            if start < v:
                count += 1
            return
        for nb in adj[v]:
            if not seen >> nb & 1:
                dfs(nb, seen | 1 << nb, depth + 1, start)

    for s in range(total_v):
        dfs(s, 1 << s, 1, s)
    return count


def oracle_permissible_bijections(g: FerrersGraph, guard: ResourceGuard | None = None) -> int:
    """Bijections f of U and V with every (z, f(z)) an edge, by backtracking."""
    guard = _guard(guard)
    if g.n != g.m:
        raise DomainError(f"permissible bijections need n = m; got n = {g.n}, m = {g.m}")
    check(g.vertex_count, guard.max_vertices, "vertex count")
    adj = g.adjacency()
    total_v = len(adj)

    def rec(z, used):
        if z == total_v:
            return 1
        return sum(rec(z + 1, used | 1 << t) for t in adj[z] if not used >> t & 1)

    return rec(0, 0)


def oracle_permissible_functions(g: FerrersGraph, guard: ResourceGuard | None = None) -> int:
    """Self-maps f with every (z, f(z)) an edge, enumerated one by one."""
    guard = _guard(guard)
    check(g.vertex_count, guard.max_vertices // 2 + 2, "vertex count",
          "every function is listed")
    return sum(1 for _ in product(*g.adjacency()))


def oracle_rook_placements(g: FerrersGraph, rooks: int | None = None,
                           guard: ResourceGuard | None = None) -> int:
    """Non-attacking placements of ``rooks`` (default n+1) rooks on the board."""
    guard = _guard(guard)
    check(max(g.row_count, g.col_count), guard.max_vertices // 2, "board side")
    k = g.row_count if rooks is None else rooks
    cells = g.edges()
    count = 0
    for chosen in combinations(cells, k):
        if len({i for i, _ in chosen}) == k and len({j for _, j in chosen}) == k:
            count += 1
    return count


def _sides(adj) -> tuple[list[int], list[int]]:
    """2-coloring by BFS; returns (smaller class, larger class)."""
    side = [-1] * len(adj)
    for s in range(len(adj)):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in adj[a]:
                if side[b] < 0:
                    side[b] = 1 - side[a]
                    queue.append(b)
                elif side[b] == side[a]:
                    raise DomainError("graph is not bipartite")
    zero = [v for v in range(len(adj)) if side[v] == 0]
    one = [v for v in range(len(adj)) if side[v] == 1]
    return (zero, one) if len(zero) <= len(one) else (one, zero)


def _weighted_colorings(adj, weights: Sequence) -> Fraction | int:
    """
    Sum over proper colorings of prod weights[color(v)].

    Every coloring of the smaller class is listed; each vertex of the other
    (independent) class then ranges over the colors its neighbors avoid.
    """
    k = len(weights)
    head, tail = _sides(adj)
    total = 0
    for colors in product(range(k), repeat=len(head)):
        color = dict(zip(head, colors))
        term = 1
        for c in colors:
            term *= weights[c]
        for v in tail:
            banned = {color[u] for u in adj[v]}
            term *= sum(weights[c] for c in range(k) if c not in banned)
            if not term:
                break
        total += term
    return total


def oracle_chromatic_value(g: FerrersGraph, t: int, guard: ResourceGuard | None = None) -> int:
    """Number of proper colorings with t colors."""
    guard = _guard(guard)
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")
    check(t, guard.max_colorings, "number of colors")
    check(g.vertex_count, guard.max_vertices, "vertex count")
    return int(_weighted_colorings(g.adjacency(), [1] * t))


def oracle_chromatic_poly(g: FerrersGraph, guard: ResourceGuard | None = None) -> IntPolynomial:
    """Interpolate coloring counts at t = 0..|V|."""
    guard = _guard(guard)
    check(g.vertex_count, guard.max_vertices, "vertex count")
    adj = g.adjacency()
    return interpolate([int(_weighted_colorings(adj, [1] * t)) for t in range(len(adj) + 1)])


def excedance_word(perm: Sequence[int]) -> str:
    """Letter i is b iff perm[i] > i (one-based values and positions); the last entry is dropped."""
    return "".join("b" if perm[i] > i + 1 else "a" for i in range(len(perm) - 1))


@lru_cache(maxsize=None)
def _excedance_tally(k: int) -> Counter:
    return Counter(excedance_word(p) for p in permutations(range(1, k + 2)))


def oracle_excedance(w, guard: ResourceGuard | None = None) -> int:
    """[w] by listing all of S_{|w|+1}."""
    guard = _guard(guard)
    w = w if isinstance(w, ABWord) else ABWord(w)
    check(len(w) + 1, guard.max_perm_degree, "permutation degree")
    return _excedance_tally(len(w))[str(w)]


def _has_cycle(vertex_count: int, arcs) -> bool:
    indeg = [0] * vertex_count
    out = [[] for _ in range(vertex_count)]
    for a, b in arcs:
        out[a].append(b)
        indeg[b] += 1
    queue = deque(v for v in range(vertex_count) if indeg[v] == 0)
    seen = 0
    while queue:
        a = queue.popleft()
        seen += 1
        for b in out[a]:
            indeg[b] -= 1
            if indeg[b] == 0:
                queue.append(b)
    return seen < vertex_count


@lru_cache(maxsize=512)
def _sink_tally(parts: tuple[int, ...]) -> Counter:
    g = FerrersGraph(Partition(parts))
    edges = g.edges()
    ids = g.id_edges()
    index = {e: k for k, e in enumerate(edges)}
    # 4-cycles u_p v_r u_q v_s as edge index quadruples
    squares = []
    for p, q in combinations(range(g.row_count), 2):
        for r, s in combinations(range(g.partition[q]), 2):
            squares.append((index[(p, r)], index[(p, s)], index[(q, r)], index[(q, s)]))
    tally: Counter = Counter()
    for mask in range(1 << len(edges)):
        # bit set: arc u -> v, clear: arc v -> u
        up = [(mask >> k) & 1 for k in range(len(edges))]
        directed_square = any(
            (up[pr] and not up[qr] and up[qs] and not up[ps])
            or (not up[pr] and up[qr] and not up[qs] and up[ps])
            for pr, ps, qr, qs in squares)
        arcs = [(a, b) if up[k] else (b, a) for k, (a, b) in enumerate(ids)]
        cyclic = _has_cycle(g.vertex_count, arcs)
        if cyclic != directed_square:
            raise RuntimeError(
                f"4-cycle test disagrees with full cycle check on {g.partition}, mask {mask}")
        if cyclic:
            continue
        outdeg = [0] * g.vertex_count
        for a, _ in arcs:
            outdeg[a] += 1
        sinks = [v for v in range(g.vertex_count) if outdeg[v] == 0]
        if len(sinks) == 1:
            tally[sinks[0]] += 1
    return tally


def oracle_unique_sink_counts(g: FerrersGraph, guard: ResourceGuard | None = None) -> dict[str, int]:
    """For every vertex, the acyclic orientations whose only sink is that vertex."""
    guard = _guard(guard)
    check(g.edge_count, guard.max_boxes, "edge count", f"2^{g.edge_count} orientations")
    tally = _sink_tally(g.partition.parts)
    return {g.vertex_label(v): tally.get(v, 0) for v in range(g.vertex_count)}


def oracle_acyclic_unique_sink(g: FerrersGraph, sink: int | str,
                               guard: ResourceGuard | None = None) -> int:
    """
    Acyclic orientations in which ``sink`` is a sink and no other vertex is.

    Acyclicity is decided by the absence of directed 4-cycles and, for every
    orientation, also by a full topological sort; disagreement raises.
    """
    guard = _guard(guard)
    v = g.parse_vertex(sink) if isinstance(sink, str) else sink
    if not 0 <= v < g.vertex_count:
        raise DomainError(f"no vertex with id {v}")
    check(g.edge_count, guard.max_boxes, "edge count", f"2^{g.edge_count} orientations")
    return _sink_tally(g.partition.parts).get(v, 0)


@lru_cache(maxsize=512)
def _corollary_tally(parts: tuple[int, ...]) -> Counter:
    p = Partition(parts)
    boxes = p.boxes()
    index = {b: k for k, b in enumerate(boxes)}
    rows = [[index[(i, j)] for j in range(p[i])] for i in range(len(p))]
    cols = [[index[(i, j)] for i in range(len(p)) if j < p[i]] for j in range(p[0])]
    rects = [(index[(a, r)], index[(a, s)], index[(b, r)], index[(b, s)])
             for a, b in combinations(range(len(p)), 2)
             for r, s in combinations(range(p[b]), 2)]
    tally: Counter = Counter()
    for mask in range(1 << len(boxes)):
        red = [(mask >> k) & 1 for k in range(len(boxes))]
        full = [i for i, row in enumerate(rows) if all(red[k] for k in row)]
        if len(full) != 1:
            continue
        if any(not any(red[k] for k in col) for col in cols):
            continue
        if any((red[ar] and red[bs] and not red[as_] and not red[br])
               or (red[as_] and red[br] and not red[ar] and not red[bs])
               for ar, as_, br, bs in rects):
            continue
        tally[full[0]] += 1
    return tally


def oracle_coloring_corollary(p: Partition | ABWord | str, given_row: int = 0,
                              guard: ResourceGuard | None = None) -> int:
    """
    Red-blue colorings of the diagram with no red/blue alternating rectangle,
    ``given_row`` entirely red and no other row entirely red, and no column
    entirely blue.
    """
    guard = _guard(guard)
    if isinstance(p, str):
        p = ABWord(p)
    if isinstance(p, ABWord):
        p = word_to_partition(p)
    if not 0 <= given_row < len(p):
        raise DomainError(f"row {given_row} is outside rows 0..{len(p) - 1}")
    check(p.size, guard.max_boxes, "box count", f"2^{p.size} colorings")
    return _corollary_tally(p.parts).get(given_row, 0)


def oracle_csf_specialized(g: FerrersGraph, values: Sequence,
                           guard: ResourceGuard | None = None) -> Fraction:
    """Sum over proper colorings into colors 1..k of prod_v values[color(v)]."""
    guard = _guard(guard)
    check(g.vertex_count, guard.max_vertices, "vertex count")
    check(len(values), guard.max_colorings, "number of variables")
    return Fraction(_weighted_colorings(g.adjacency(), [Fraction(v) for v in values]))


def oracle_constitution_bfs(red, p: Partition) -> tuple[list[tuple[frozenset, frozenset]], int]:
    """
    Components of the red boxes by breadth-first search over boxes sharing a
    row or column; returns (components as (rows, columns), red-free lines).
    """
    red = set(red)
    for i, j in red:
        if not (0 <= i < len(p) and 0 <= j < p[i]):
            raise DomainError(f"box ({i}, {j}) is outside the diagram {p}")
    seen: set = set()
    comps = []
    for start in sorted(red):
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        rows, cols = set(), set()
        while queue:
            i, j = queue.popleft()
            rows.add(i)
            cols.add(j)
            for other in red:
                if other not in seen and (other[0] == i or other[1] == j):
                    seen.add(other)
                    queue.append(other)
        comps.append((frozenset(rows), frozenset(cols)))
    used_rows = {i for i, _ in red}
    used_cols = {j for _, j in red}
    blank = (len(p) - len(used_rows)) + (p[0] - len(used_cols))
    return comps, blank
