"""Truncated bivariate power series in s and t with rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

__all__ = ["BivariateSeries", "series_product_egf", "DEFAULT_ORDER"]

DEFAULT_ORDER = (6, 6)


@dataclass(frozen=True)
class BivariateSeries:
    """Coefficients of s^i t^j for i <= max_s, j <= max_t; absent means zero."""
    max_s: int
    max_t: int
    coeffs: dict[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.max_s < 0 or self.max_t < 0:
            raise ValueError("truncation orders must be non-negative")
        clean = {(i, j): Fraction(c) for (i, j), c in self.coeffs.items()
                 if c and i <= self.max_s and j <= self.max_t}
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def one(cls, max_s: int, max_t: int) -> BivariateSeries:
        return cls(max_s, max_t, {(0, 0): Fraction(1)})

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.coeffs.get((i, j), Fraction(0))

    def __add__(self, other: BivariateSeries) -> BivariateSeries:
        self._check(other)
        acc = dict(self.coeffs)
        for k, c in other.coeffs.items():
            acc[k] = acc.get(k, Fraction(0)) + c
        return BivariateSeries(self.max_s, self.max_t, acc)

    def __mul__(self, other: BivariateSeries) -> BivariateSeries:
        self._check(other)
        acc: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i <= self.max_s and j <= self.max_t:
                    acc[(i, j)] = acc.get((i, j), Fraction(0)) + c1 * c2
        return BivariateSeries(self.max_s, self.max_t, acc)

    def _check(self, other):
        if (self.max_s, self.max_t) != (other.max_s, other.max_t):
            raise ValueError("series truncation orders differ")


def _egf_factor(v: Fraction, max_s: int, max_t: int) -> BivariateSeries:
    # e^{s v} + e^{t v} - 1: the two constant terms and the -1 leave a single 1
    coeffs = {(0, 0): Fraction(1)}
    for i in range(1, max_s + 1):
        coeffs[(i, 0)] = v ** i / factorial(i)
    for j in range(1, max_t + 1):
        coeffs[(0, j)] = v ** j / factorial(j)
    return BivariateSeries(max_s, max_t, coeffs)


def series_product_egf(values: Sequence, max_s: int = DEFAULT_ORDER[0],
                       max_t: int = DEFAULT_ORDER[1]) -> BivariateSeries:
    """Truncation of ``prod_i (e^{s x_i} + e^{t x_i} - 1)`` at x = values."""
    out = BivariateSeries.one(max_s, max_t)
    for v in values:
        out = out * _egf_factor(Fraction(v), max_s, max_t)
    return out
