"""
Symmetric functions as sparse expansions in the power-sum and monomial bases.

Only what is needed here: linear combinations, products of power sums, and
specialization at a finite point (all other variables set to zero).
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Expansion", "PBasisExpansion", "MBasisExpansion",
    "canonical", "specialize_p", "specialize_m", "monomial_symmetric",
]

Key = tuple[int, ...]


def canonical(parts: Iterable[int]) -> Key:
    key = tuple(sorted((int(p) for p in parts), reverse=True))
    if any(p < 1 for p in key):
        raise ValueError(f"partition keys need positive parts, got {key}")
    return key


class Expansion:
    """Immutable map from canonical partitions to nonzero integers."""
    basis = "?"
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Iterable[int], int] | Iterable | None = None):
        acc: dict[Key, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for mu, c in items:
            key = canonical(mu)
            acc[key] = acc.get(key, 0) + int(c)
        self._terms = {k: c for k, c in acc.items() if c}

    @property
    def terms(self) -> dict[Key, int]:
        return dict(self._terms)

    def coefficient(self, mu: Iterable[int]) -> int:
        return self._terms.get(canonical(mu), 0)

    def items(self):
        """Terms in a fixed order: by degree, then reverse lexicographic."""
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), [-p for p in kv[0]]))

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.basis, frozenset(self._terms.items())))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        acc = Counter(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return type(self)(acc)

    def __neg__(self):
        return type(self)({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int):
        return type(self)({k: c * v for k, v in self._terms.items()})

    def to_json(self) -> list[dict]:
        return [{"partition": list(k), "coeff": str(c)} for k, c in self.items()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping]):
        return cls([(d["partition"], int(d["coeff"])) for d in data])

    def __repr__(self) -> str:
        return f"{type(self).__name__}({dict(self.items())!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for k, c in reversed(self.items()):
            sym = f"{self.basis}[{','.join(map(str, k))}]"
            sign = "-" if c < 0 else "+"
            body = sym if abs(c) == 1 else f"{abs(c)}*{sym}"
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        return text + "".join(f" {s} {b}" for s, b in out[1:])


class PBasisExpansion(Expansion):
    """Linear combination of power-sum products p_mu."""
    basis = "p"
    __slots__ = ()

    @classmethod
    def power(cls, *parts: int) -> PBasisExpansion:
        return cls({tuple(parts): 1})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, PBasisExpansion):
            return NotImplemented
        acc: dict[Key, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                key = canonical(k1 + k2)
                acc[key] = acc.get(key, 0) + c1 * c2
        return PBasisExpansion(acc)

    __rmul__ = __mul__


class MBasisExpansion(Expansion):
    """Linear combination of monomial symmetric functions m_mu."""
    basis = "m"
    __slots__ = ()


def specialize_p(e: PBasisExpansion, values: Sequence) -> Fraction:
    """Evaluate with x_i = values[i-1] and every other variable zero."""
    vals = [Fraction(v) for v in values]
    cache: dict[int, Fraction] = {}

    def power_sum(r):
        if r not in cache:
            cache[r] = sum((v ** r for v in vals), Fraction(0))
        return cache[r]

    total = Fraction(0)
    for mu, c in e.items():
        term = Fraction(c)
        for r in mu:
            term *= power_sum(r)
        total += term
    return total


def monomial_symmetric(mu: Sequence[int], values: Sequence) -> Fraction:
    """m_mu at a finite point: the sum over distinct rearrangements of mu."""
    vals = [Fraction(v) for v in values]
    if len(mu) > len(vals):
        return Fraction(0)
    exps = tuple(mu) + (0,) * (len(vals) - len(mu))
    total = Fraction(0)
    for alpha in set(permutations(exps)):
        term = Fraction(1)
        for v, a in zip(vals, alpha):
            if a:
                term *= v ** a
        total += term
    return total


def specialize_m(e: MBasisExpansion, values: Sequence) -> Fraction:
    return sum((c * monomial_symmetric(mu, values) for mu, c in e.items()), Fraction(0))
