"""
Cross-validation of every closed form against the brute-force oracles.

Each criterion is a function returning a :class:`CriterionResult`; the CLI
``selftest`` command and ``tests/test_acceptance.py`` both run
:data:`CRITERIA`. All comparisons are exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable

from . import chromatic, csf, oracle, trees
from .algebra.forms import assignment_from_lists
from .algebra.poly import IntPolynomial
from .algebra.series import series_product_egf
from .algebra.symfun import specialize_m, specialize_p
from .core import (
    ABWord, FerrersGraph, Partition, conjugate, parse_partition,
    partition_to_word, partitions_up_to, word_to_partition, words_of_length,
    words_up_to,
)

__all__ = ["CriterionResult", "CRITERIA", "run_all"]

SEED = 20061014


@dataclass
class CriterionResult:
    number: int
    title: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checks > 0 and not self.failures

    def expect(self, ok: bool, what: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(what)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] criterion {self.number:2d}: {self.title} ({self.checks} checks"
        if self.failures:
            text += f", {len(self.failures)} failed, first: {self.failures[0]}"
        return text + ")"


def _rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 9), rng.randint(1, 9))


def _random_assignment(g: FerrersGraph, rng: random.Random):
    return assignment_from_lists([_rational(rng) for _ in range(g.row_count)],
                                 [_rational(rng) for _ in range(g.col_count)])


def _single_edge_extensions(g: FerrersGraph):
    """(i, j) with i, j >= 1 such that adding (u_i, v_j) keeps a Ferrers shape."""
    lam = g.partition.parts
    for i in range(1, g.row_count):
        j = lam[i]
        if j <= g.m and lam[i - 1] > j:
            yield i, j


def word_round_trip() -> CriterionResult:
    res = CriterionResult(1, "Round trip (4,4,2) <-> (3,3,2,2) <-> babba")
    lam = parse_partition("4,4,2")
    dual = conjugate(lam)
    res.expect(dual.parts == (3, 3, 2, 2), f"dual of (4,4,2) is {dual}")
    res.expect(str(partition_to_word(lam)) == "babba", "word of (4,4,2)")
    res.expect(word_to_partition(ABWord("babba")) == lam, "partition of babba")
    res.expect(conjugate(dual) == lam, "dual of the dual")
    res.expect(FerrersGraph(lam).v_degrees() == (3, 3, 2, 2), "column degrees")
    return res


def complete_bipartite_trees() -> CriterionResult:
    res = CriterionResult(2, "tau(K_{n+1,m+1}) = (m+1)^n (n+1)^m, n, m <= 4; matrix-tree n, m <= 3")
    for n in range(5):
        for m in range(5):
            g = FerrersGraph(Partition((m + 1,) * (n + 1)))
            expected = (m + 1) ** n * (n + 1) ** m
            res.expect(trees.spanning_tree_count(g) == expected, f"formula K_{n + 1},{m + 1}")
            if n <= 3 and m <= 3:
                res.expect(oracle.oracle_spanning_count_matrix_tree(g) == expected,
                           f"matrix-tree K_{n + 1},{m + 1}")
    return res


def spanning_counts() -> CriterionResult:
    res = CriterionResult(3, "tau formula = matrix-tree = enumeration, all shapes <= 9 boxes")
    for p in partitions_up_to(9):
        g = FerrersGraph(p)
        tau = trees.spanning_tree_count(g)
        res.expect(tau == oracle.oracle_spanning_count_matrix_tree(g), f"matrix-tree {p}")
        res.expect(tau == len(oracle.oracle_spanning_trees_enumerate(g)), f"enumeration {p}")
    return res


def weighted_sums() -> CriterionResult:
    res = CriterionResult(4, "Sigma(G) factored = enumerated and edge-addition ratio, <= 8 boxes")
    rng = random.Random(SEED)
    for p in partitions_up_to(8):
        g = FerrersGraph(p)
        sigma = trees.weighted_spanning_sum(g)
        points = [_random_assignment(g, rng) for _ in range(3)]
        brute = [oracle.oracle_weighted_spanning_sum(g, a) for a in points]
        for a, b in zip(points, brute):
            res.expect(sigma.evaluate(a) == b, f"Sigma {p}")
        if p.size == 8:
            continue
        for i, j in _single_edge_extensions(g):
            bigger = g.with_edge(i, j)
            ratio = trees.edge_addition_ratio(g, i, j)
            for a, b in zip(points, brute):
                big = oracle.oracle_weighted_spanning_sum(bigger, a)
                res.expect(big * ratio.denominator(a) == b * ratio.numerator(a),
                           f"ratio {p} + (u{i}, v{j})")
    return res


def hamiltonian_paths() -> CriterionResult:
    res = CriterionResult(5, "Hamiltonian formula = rook^2 = DFS = permissible bijections, n = m <= 3")
    for p in partitions_up_to(16):
        if len(p) != p[0] or len(p) > 4:
            continue
        g = FerrersGraph(p)
        ham = trees.hamiltonian_path_count(g)
        rooks = trees.rook_count(g)
        res.expect(ham == rooks ** 2, f"rook^2 {p}")
        res.expect(rooks == oracle.oracle_rook_placements(g), f"rook placements {p}")
        res.expect(ham == oracle.oracle_hamiltonian_paths(g), f"DFS {p}")
        res.expect(ham == oracle.oracle_permissible_bijections(g), f"bijections {p}")
    res.expect(trees.hamiltonian_path_count(FerrersGraph(Partition((2, 2)))) == 4, "K_{2,2}")
    res.expect(trees.hamiltonian_path_count(FerrersGraph(Partition((3, 3, 3)))) == 36, "K_{3,3}")
    return res


def chromatic_polynomials() -> CriterionResult:
    res = CriterionResult(6, "chi(w) = brute colorings t in 0..5 (|w| <= 7); Stirling case; recursions")
    for w in words_up_to(7):
        chi = chromatic.chromatic_polynomial(w)
        g = FerrersGraph.from_word(w)
        for t in range(6):
            res.expect(chi(t) == oracle.oracle_chromatic_value(g, t), f"chi({w})({t})")
    for n in range(5):
        for m in range(5):
            w = ABWord("b" * m + "a" * n)
            res.expect(chromatic.chromatic_complete_bipartite(n, m)
                       == chromatic.chromatic_polynomial(w), f"Stirling n={n} m={m}")
    for w in words_up_to(5):
        for k in range(1, 5):
            res.expect(chromatic.chromatic_recursion_check(w, k), f"chi recursion {w} k={k}")
    for total in range(6):
        for split in range(total + 1):
            for u in words_of_length(split):
                for v in words_of_length(total - split):
                    res.expect(chromatic.excedance_recursion_check(u, v),
                               f"excedance recursion u={u} v={v}")
    return res


def excedance_triangle() -> CriterionResult:
    res = CriterionResult(7, "[w] formula = S_{|w|+1} brute = signed linear coefficient, |w| <= 7")
    for w in words_up_to(7):
        e = chromatic.excedance_statistic(w)
        res.expect(e == oracle.oracle_excedance(w), f"brute [{w}]")
        res.expect(chromatic.linear_coefficient_statistic(w) == e, f"linear coefficient [{w}]")
    res.expect(chromatic.excedance_statistic("ba") == 3, "[ba] = 3")
    res.expect(chromatic.chromatic_polynomial("ba") == IntPolynomial((0, -3, 6, -4, 1)),
               "chi(ba) = t^4 - 4t^3 + 6t^2 - 3t")
    return res


def sink_orientations() -> CriterionResult:
    res = CriterionResult(8, "[w] = unique-sink orientations = red-blue patterns, |w| <= 5")
    for w in words_up_to(5):
        e = chromatic.excedance_statistic(w)
        g = FerrersGraph.from_word(w)
        for label, count in oracle.oracle_unique_sink_counts(g).items():
            res.expect(count == e, f"sink {label} for {w}")
        for row in range(g.row_count):
            res.expect(oracle.oracle_coloring_corollary(g.partition, row) == e,
                       f"row {row} for {w}")
    return res


def chromatic_symmetric() -> CriterionResult:
    res = CriterionResult(9, "CSF: specializations, direct oracle, duality, hook, K_{n,m} m-basis")
    rng = random.Random(SEED + 9)
    for p in partitions_up_to(9):
        g = FerrersGraph(p)
        x = csf.csf_p_basis(g)
        chi = chromatic.chromatic_polynomial(g.word)
        for t in range(5):
            res.expect(specialize_p(x, [1] * t) == chi(t), f"X({p}) at {t} ones")
        if p.size <= 8:
            for _ in range(2):
                vals = [rng.randint(0, 3) for _ in range(rng.randint(1, 3))]
                res.expect(specialize_p(x, vals) == oracle.oracle_csf_specialized(g, vals),
                           f"X({p}) at {vals}")
    for p in partitions_up_to(10):
        res.expect(csf.csf_p_basis(FerrersGraph(p)) == csf.csf_p_basis(FerrersGraph(conjugate(p))),
                   f"duality {p}")
    for m in range(6):
        for n in range(6 - m):
            hook = FerrersGraph(Partition((m + 1,) + (1,) * n))
            res.expect(csf.csf_hook_p_basis(m, n) == csf.csf_p_basis(hook), f"hook m={m} n={n}")
    for n in range(1, 4):
        for m in range(1, 4):
            mb = csf.csf_complete_bipartite_m_basis(n, m)
            pb = csf.csf_complete_bipartite_p_basis(n, m)
            for _ in range(3):
                vals = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(3)]
                res.expect(specialize_m(mb, vals) == specialize_p(pb, vals), f"K_{n},{m} at {vals}")
    return res


def egf_identity() -> CriterionResult:
    res = CriterionResult(10, "EGF prod (e^{s x} + e^{t x} - 1) coefficients, n, m <= 3, <= 3 variables")
    for k in range(4):
        for vals in _value_lists(k):
            series = series_product_egf(vals, 3, 3)
            for n in range(4):
                for m in range(4):
                    lhs = series.coefficient(n, m) * factorial(n) * factorial(m)
                    rhs = specialize_p(csf.csf_complete_bipartite_p_basis(n, m), vals)
                    res.expect(lhs == rhs, f"n={n} m={m} at {vals}")
                    res.expect(csf.egf_coefficient_check(n, m, vals), f"check n={n} m={m} {vals}")
    return res


def _value_lists(k: int):
    if k == 0:
        yield []
        return
    for rest in _value_lists(k - 1):
        for v in (0, 1, 2):
            yield rest + [v]


CRITERIA: list[Callable[[], CriterionResult]] = [
    word_round_trip, complete_bipartite_trees, spanning_counts, weighted_sums,
    hamiltonian_paths, chromatic_polynomials, excedance_triangle,
    sink_orientations, chromatic_symmetric, egf_identity,
]


def run_all() -> list[CriterionResult]:
    return [criterion() for criterion in CRITERIA]
