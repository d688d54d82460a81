"""
Chromatic polynomials of Ferrers graphs and the excedance set statistic.

Both are sums over R_m, the 2^m vectors (r_0, ..., r_m) with r_0 = 1 and
each step r_{i+1} - r_i in {0, 1}. For a word
``a^{n_0} b a^{n_1} b ... b a^{n_m}``:

    [w]  = sum_r (-1)^{h(r)} prod_i r_i^{n_i + 1}
    chi  = sum_r t (t - r_0)^{n_0} f_1 (t - r_1)^{n_1} ... f_m (t - r_m)^{n_m + 1}

where h(r) counts flat steps and f_i is ``t - r_{i-1}`` on a rising step and
the constant ``r_{i-1}`` on a flat one.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from math import comb

from .algebra.poly import T, ZERO, IntPolynomial
from .core import ABWord
from .errors import DomainError

__all__ = [
    "enumerate_r_vectors", "h_statistic", "excedance_statistic",
    "chromatic_polynomial", "chromatic_complete_bipartite", "stirling2",
    "linear_coefficient_statistic", "chromatic_recursion_check",
    "excedance_recursion_check", "excedance_sum_recursion_check",
]


def _as_word(w) -> ABWord:
    return w if isinstance(w, ABWord) else ABWord(w)


def _r_vector(code: int, m: int) -> tuple[int, ...]:
    # bit m-1-k of code is the increment at step k, so codes count in product() order
    r = [1]
    for k in range(m):
        r.append(r[-1] + ((code >> (m - 1 - k)) & 1))
    return tuple(r)


def enumerate_r_vectors(m: int) -> list[tuple[int, ...]]:
    """All of R_m, ordered as a binary counter on the increments."""
    if m < 0:
        raise DomainError(f"m must be non-negative, got {m}")
    out = []
    for steps in itertools.product((0, 1), repeat=m):
        r = [1]
        for s in steps:
            r.append(r[-1] + s)
        out.append(tuple(r))
    return out


def h_statistic(r) -> int:
    """Number of flat steps r_{i+1} = r_i, for i in 0..m-1."""
    return sum(1 for a, b in zip(r, r[1:]) if a == b)


def excedance_statistic(w) -> int:
    """Number of permutations of S_{|w|+1} whose excedance word is ``w``."""
    runs = _as_word(w).runs
    total = 0
    for r in enumerate_r_vectors(len(runs) - 1):
        term = 1
        for ri, ni in zip(r, runs):
            term *= ri ** (ni + 1)
        total += -term if h_statistic(r) % 2 else term
    return total


def _term(r, runs) -> IntPolynomial:
    m = len(runs) - 1
    poly = T * IntPolynomial.linear(r[0]) ** (runs[0] + (m == 0))
    for i in range(1, m + 1):
        if r[i] - r[i - 1] == 1:
            f = IntPolynomial.linear(r[i - 1])
        else:
            f = IntPolynomial.constant(r[i - 1])
        poly = poly * f * IntPolynomial.linear(r[i]) ** (runs[i] + (i == m))
    return poly


def _chunk_sum(runs: tuple[int, ...], lo: int, hi: int) -> IntPolynomial:
    m = len(runs) - 1
    acc = ZERO
    for code in range(lo, hi):
        acc = acc + _term(_r_vector(code, m), runs)
    return acc


def chromatic_polynomial(w, workers: int | None = None) -> IntPolynomial:
    """
    Chromatic polynomial of the Ferrers graph of ``w``.

    The sum runs over whichever of ``w`` and its transpose has fewer b's;
    both words name isomorphic graphs. With ``workers`` > 1 the 2^m terms
    are split across a process pool.
    """
    return _chromatic_cached(str(_as_word(w)), workers or 1)


@lru_cache(maxsize=4096)
def _chromatic_cached(letters: str, workers: int) -> IntPolynomial:
    w = ABWord(letters)
    if w.n < w.m:
        w = w.conjugate()
    runs = w.runs
    total = 1 << w.m
    if workers <= 1 or total < 2 * workers:
        return _chunk_sum(runs, 0, total)
    step = -(-total // workers)
    bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_chunk_sum, *zip(*[(runs, lo, hi) for lo, hi in bounds]))
        acc = ZERO
        for p in parts:
            acc = acc + p
    return acc


@lru_cache(maxsize=None)
def _stirling_row(m: int) -> tuple[int, ...]:
    if m == 0:
        return (1,)
    prev = _stirling_row(m - 1)
    row = [0] * (m + 1)
    for k in range(1, m + 1):
        row[k] = (k * prev[k] if k < m else 0) + prev[k - 1]
    return tuple(row)


def stirling2(m: int, k: int) -> int:
    """Stirling number of the second kind S(m, k), for 0 <= k <= m."""
    if m < 0 or k < 0 or k > m:
        raise DomainError(f"stirling2 needs 0 <= k <= m, got m={m}, k={k}")
    return _stirling_row(m)[k]


def chromatic_complete_bipartite(n: int, m: int) -> IntPolynomial:
    """Chromatic polynomial of K_{n+1,m+1}, grouped by the number of colors on V."""
    if n < 0 or m < 0:
        raise DomainError(f"n and m must be non-negative, got n={n}, m={m}")
    acc = ZERO
    for k in range(1, m + 2):
        acc = acc + stirling2(m + 1, k) * IntPolynomial.falling(k) \
            * IntPolynomial.linear(k) ** (n + 1)
    return acc


def linear_coefficient_statistic(w) -> int:
    """(-1)^{|w|+1} times the coefficient of t in the chromatic polynomial."""
    w = _as_word(w)
    c = chromatic_polynomial(w).coefficient(1)
    return c if len(w) % 2 else -c


def chromatic_recursion_check(w, k: int) -> bool:
    """chi(w b a^{k-1}) == t chi(w a^{k-1}) + sum_i (-1)^{k-i} C(k,i) chi(w a^i)."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    w = _as_word(w)
    lhs = chromatic_polynomial(w + "b" + "a" * (k - 1))
    rhs = T * chromatic_polynomial(w + "a" * (k - 1))
    for i in range(k):
        sign = -1 if (k - i) % 2 else 1
        rhs = rhs + sign * comb(k, i) * chromatic_polynomial(w + "a" * i)
    return lhs == rhs


def excedance_recursion_check(u, v) -> bool:
    """[u b a v] == [u a b v] + [u a v] + [u b v]."""
    u, v = str(_as_word(u)), str(_as_word(v))
    lhs = excedance_statistic(u + "ba" + v)
    rhs = (excedance_statistic(u + "ab" + v) + excedance_statistic(u + "a" + v)
           + excedance_statistic(u + "b" + v))
    return lhs == rhs


def excedance_sum_recursion_check(w, k: int) -> bool:
    """[w b a^{k-1}] == sum_{i<k} C(k,i) [w a^i]."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    w = str(_as_word(w))
    lhs = excedance_statistic(w + "b" + "a" * (k - 1))
    return lhs == sum(comb(k, i) * excedance_statistic(w + "a" * i) for i in range(k))
