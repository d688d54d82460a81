"""
Variables x_p, y_q and products of linear forms in them.

Spanning-tree weight sums are kept factored and compared by exact evaluation
at rational points; they are never expanded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

from ..errors import DomainError, ParseError

__all__ = [
    "Var", "x", "y", "LinearForm", "FactoredWeightedSum",
    "evaluate_factored", "assignment_from_lists", "parse_rational",
]


class Var(NamedTuple):
    side: str  # "x" for row vertices u_p, "y" for column vertices v_q
    index: int

    def __str__(self) -> str:
        return f"{self.side}{self.index}"


def x(p: int) -> Var:
    return Var("x", p)


def y(q: int) -> Var:
    return Var("y", q)


def _lookup(assignment: Mapping, var: Var):
    if var in assignment:
        return assignment[var]
    key = str(var)
    if key in assignment:
        return assignment[key]
    raise DomainError(f"assignment has no value for variable {key}")


@dataclass(frozen=True)
class LinearForm:
    """Sum of distinct variables."""
    variables: frozenset[Var]

    def __post_init__(self):
        object.__setattr__(self, "variables", frozenset(self.variables))
        if not self.variables:
            raise ValueError("a linear form needs at least one variable")

    @classmethod
    def prefix(cls, side: str, length: int) -> LinearForm:
        """``side_0 + side_1 + ... + side_{length-1}``."""
        return cls(frozenset(Var(side, k) for k in range(length)))

    def __len__(self) -> int:
        return len(self.variables)

    def __sub__(self, var: Var) -> LinearForm:
        if var not in self.variables:
            raise ValueError(f"{var} does not occur in {self}")
        return LinearForm(self.variables - {var})

    def evaluate(self, assignment: Mapping) -> Fraction:
        return sum((Fraction(_lookup(assignment, v)) for v in self.variables), Fraction(0))

    def __str__(self) -> str:
        return "(" + " + ".join(map(str, sorted(self.variables))) + ")"


@dataclass(frozen=True)
class FactoredWeightedSum:
    """``prod(var ** exp) * prod(factors)``."""
    monomial: tuple[tuple[Var, int], ...]
    factors: tuple[LinearForm, ...]

    @classmethod
    def build(cls, exponents: Mapping[Var, int], factors: Iterable[LinearForm]):
        mono = tuple(sorted((v, e) for v, e in exponents.items() if e))
        return cls(mono, tuple(factors))

    def exponents(self) -> dict[Var, int]:
        return dict(self.monomial)

    def variables(self) -> set[Var]:
        out = {v for v, _ in self.monomial}
        for f in self.factors:
            out |= f.variables
        return out

    def evaluate(self, assignment: Mapping) -> Fraction:
        value = Fraction(1)
        for var, e in self.monomial:
            value *= Fraction(_lookup(assignment, var)) ** e
        for f in self.factors:
            value *= f.evaluate(assignment)
        return value

    def __str__(self) -> str:
        mono = "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self.monomial)
        return "*".join([mono] + [str(f) for f in self.factors]) if mono else \
            "*".join(str(f) for f in self.factors) or "1"


def evaluate_factored(f: FactoredWeightedSum, assignment: Mapping) -> Fraction:
    return f.evaluate(assignment)


def assignment_from_lists(xs: Sequence, ys: Sequence) -> dict[Var, Fraction]:
    """Map x_p -> xs[p] and y_q -> ys[q]."""
    out = {x(p): Fraction(v) for p, v in enumerate(xs)}
    out.update({y(q): Fraction(v) for q, v in enumerate(ys)})
    return out


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {text!r}") from None
