"""Dense univariate integer polynomials in ``t``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = ["IntPolynomial", "T", "ONE", "ZERO", "interpolate"]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """``coeffs[k]`` is the coefficient of t^k; no trailing zeros are stored."""
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def linear(cls, root: int) -> IntPolynomial:
        """The polynomial ``t - root``."""
        return cls((-root, 1))

    @classmethod
    def falling(cls, k: int) -> IntPolynomial:
        """``t (t-1) ... (t-k+1)``."""
        out = ONE
        for i in range(k):
            out = out * cls.linear(i)
        return out

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _coerce(self, other) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return IntPolynomial(
            (a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(size))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out, base = ONE, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def evaluate(self, x):
        """Horner evaluation; exact for int and Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = evaluate

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> IntPolynomial:
        return cls(int(c) for c in data)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


ZERO = IntPolynomial(())
ONE = IntPolynomial((1,))
T = IntPolynomial((0, 1))


def interpolate(values: Sequence[int]) -> IntPolynomial:
    """
    The unique polynomial of degree < len(values) with p(k) = values[k].

    Uses Newton forward differences in the binomial basis, so all
    intermediate arithmetic is exact. Raises ValueError if the result does
    not have integer coefficients.
    """
    diffs = list(values)
    newton = []
    while diffs:
        newton.append(diffs[0])
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    # binom(t, k) = falling(k) / k!
    acc = [Fraction(0)] * max(len(newton), 1)
    falling = [Fraction(1)]
    fact = 1
    for k, d in enumerate(newton):
        if k:
            fact *= k
            falling = [Fraction(0)] + falling
            for i in range(len(falling) - 1):
                falling[i] -= (k - 1) * falling[i + 1]
        for i, c in enumerate(falling):
            acc[i] += d * c / fact
    if any(c.denominator != 1 for c in acc):
        raise ValueError("interpolating polynomial has non-integer coefficients")
    return IntPolynomial(int(c) for c in acc)

