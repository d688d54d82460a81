"""Closed forms for spanning trees, vertebrates, rook placements and Hamiltonian paths."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Mapping

from .algebra.forms import FactoredWeightedSum, LinearForm, x, y
from .core import FerrersGraph
from .errors import DomainError

__all__ = [
    "RatioFactors", "weighted_spanning_sum", "spanning_tree_count",
    "edge_addition_ratio", "vertebrate_count", "rook_count",
    "hamiltonian_path_count",
]


def weighted_spanning_sum(g: FerrersGraph) -> FactoredWeightedSum:
    """
    Sum over spanning trees T of prod x_p^{deg_T u_p} * prod y_q^{deg_T v_q}.

    Every vertex variable appears once in the monomial part; row p >= 1
    contributes the factor y_0 + ... + y_{lambda_p - 1} and column q >= 1
    contributes x_0 + ... + x_{lambda'_q - 1}.
    """
    lam, dual = g.partition.parts, g.dual.parts
    exps = {x(p): 1 for p in range(g.n + 1)}
    exps.update({y(q): 1 for q in range(g.m + 1)})
    factors = [LinearForm.prefix("y", lam[p]) for p in range(1, g.n + 1)]
    factors += [LinearForm.prefix("x", dual[q]) for q in range(1, g.m + 1)]
    return FactoredWeightedSum.build(exps, factors)


def spanning_tree_count(g: FerrersGraph) -> int:
    return prod(g.partition.parts[1:]) * prod(g.dual.parts[1:])


@dataclass(frozen=True)
class RatioFactors:
    """Sigma(G) / Sigma(H) = (num_x / den_x) * (num_y / den_y)."""
    num_x: LinearForm
    den_x: LinearForm
    num_y: LinearForm
    den_y: LinearForm

    def numerator(self, assignment: Mapping) -> Fraction:
        return self.num_x.evaluate(assignment) * self.num_y.evaluate(assignment)

    def denominator(self, assignment: Mapping) -> Fraction:
        return self.den_x.evaluate(assignment) * self.den_y.evaluate(assignment)

    def evaluate(self, assignment: Mapping) -> Fraction:
        return self.numerator(assignment) / self.denominator(assignment)


def edge_addition_ratio(h: FerrersGraph, i: int, j: int) -> RatioFactors:
    """Ratio of weight sums when edge (u_i, v_j), i, j >= 1, is added to ``h``."""
    if i < 1 or j < 1:
        raise DomainError(f"the added edge needs i, j >= 1, got ({i}, {j})")
    h.with_edge(i, j)  # validates the extension
    num_x = LinearForm.prefix("x", i + 1)
    num_y = LinearForm.prefix("y", j + 1)
    return RatioFactors(num_x, num_x - x(i), num_y, num_y - y(j))


def vertebrate_count(g: FerrersGraph) -> int:
    """Spanning trees with a marked head in U and tail in V."""
    return prod(g.partition.parts) * prod(g.dual.parts)


def rook_count(g: FerrersGraph) -> int:
    """
    Placements of n+1 non-attacking rooks on the board.

    Rows are processed shortest first; the k-th shortest row has
    lambda - k free columns. Zero as soon as a row has no room.
    """
    total = 1
    for k, length in enumerate(reversed(g.partition.parts)):
        free = length - k
        if free <= 0:
            return 0
        total *= free
    return total


def hamiltonian_path_count(g: FerrersGraph) -> int:
    """Hamiltonian paths, up to reversal, when both vertex classes have equal size."""
    if g.n != g.m:
        raise DomainError(
            f"the Hamiltonian path formula needs |U| = |V| (n = m); "
            f"got n = {g.n}, m = {g.m}")
    return rook_count(g) ** 2
