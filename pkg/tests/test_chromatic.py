import pytest

from ferrers.algebra.poly import T, IntPolynomial
from ferrers.chromatic import (
    _chunk_sum, chromatic_complete_bipartite, chromatic_polynomial,
    chromatic_recursion_check, enumerate_r_vectors, excedance_recursion_check,
    excedance_statistic, excedance_sum_recursion_check, h_statistic,
    linear_coefficient_statistic, stirling2,
)
from ferrers.core import ABWord, FerrersGraph, words_up_to
from ferrers.errors import DomainError
from ferrers.oracle import oracle_chromatic_poly, oracle_excedance


def test_r_vectors():
    assert enumerate_r_vectors(0) == [(1,)]
    assert enumerate_r_vectors(1) == [(1, 1), (1, 2)]
    r2 = enumerate_r_vectors(2)
    assert len(r2) == 4 and (1, 2, 3) in r2 and (1, 1, 1) in r2
    for m in range(7):
        vecs = enumerate_r_vectors(m)
        assert len(vecs) == len(set(vecs)) == 2 ** m
        for r in vecs:
            assert r[0] == 1 and all(b - a in (0, 1) for a, b in zip(r, r[1:]))


@pytest.mark.parametrize("r, h", [((1,), 0), ((1, 1), 1), ((1, 2, 2, 3), 1), ((1, 1, 1), 2)])
def test_h_statistic(r, h):
    assert h_statistic(r) == h


@pytest.mark.parametrize("w, value", [("", 1), ("ab", 1), ("ba", 3), ("a", 1), ("b", 1)])
def test_excedance_examples(w, value):
    assert excedance_statistic(w) == value
    assert oracle_excedance(w) == value


def test_excedance_sums_to_factorial():
    from math import factorial
    for k in range(8):
        assert sum(excedance_statistic(w) for w in words_up_to(k) if len(w) == k) == factorial(k + 1)


@pytest.mark.parametrize("w, coeffs", [
    ("", (0, -1, 1)),
    ("a", (0, 1, -2, 1)),
    ("ba", (0, -3, 6, -4, 1)),
])
def test_chromatic_examples(w, coeffs):
    assert chromatic_polynomial(w) == IntPolynomial(coeffs)
    assert oracle_chromatic_poly(FerrersGraph.from_word(w)) == IntPolynomial(coeffs)


def test_chromatic_shape():
    for w in words_up_to(7):
        chi = chromatic_polynomial(w)
        assert chi.degree == len(w) + 2
        assert chi.coefficient(chi.degree) == 1
        assert chi.coefficient(0) == 0


def test_chromatic_leaf_rules():
    for w in words_up_to(8):
        chi = chromatic_polynomial(w)
        assert chromatic_polynomial(ABWord("a") + w) == (T - 1) * chi
        assert chromatic_polynomial(w + "b") == (T - 1) * chi


def test_transposed_sum_agrees_with_direct_sum():
    # the public function sums over whichever orientation has fewer b's
    for w in words_up_to(6):
        direct = _chunk_sum(w.runs, 0, 1 << w.m)
        assert direct == chromatic_polynomial(w) == chromatic_polynomial(w.conjugate())


def test_parallel_equals_sequential():
    w = ABWord("babbbab")
    assert chromatic_polynomial(w, workers=3) == chromatic_polynomial(w)
    assert chromatic_polynomial("bbbbbbba", workers=2) == chromatic_polynomial("bbbbbbba")


@pytest.mark.parametrize("m, k, value", [(2, 1, 1), (3, 2, 3), (4, 2, 7), (0, 0, 1), (5, 3, 25)])
def test_stirling(m, k, value):
    assert stirling2(m, k) == value


def test_stirling_errors():
    for m, k in [(2, 3), (-1, 0), (3, -1)]:
        with pytest.raises(DomainError):
            stirling2(m, k)


def test_complete_bipartite_examples():
    assert chromatic_complete_bipartite(1, 1) == IntPolynomial((0, -3, 6, -4, 1))
    assert chromatic_complete_bipartite(0, 0) == T * T - T
    assert chromatic_complete_bipartite(1, 0) == T * (T - 1) ** 2
    for n in range(5):
        for m in range(5):
            assert chromatic_complete_bipartite(n, m) == chromatic_polynomial("b" * m + "a" * n)


@pytest.mark.parametrize("w, value", [("ba", 3), ("", 1), ("ab", 1)])
def test_linear_coefficient_examples(w, value):
    assert linear_coefficient_statistic(w) == value


def test_chi_ab_is_path():
    assert chromatic_polynomial("ab") == T * (T - 1) * (T - 1) ** 2


@pytest.mark.parametrize("w, k", [("", 1), ("b", 2), ("ab", 3)])
def test_chromatic_recursion_examples(w, k):
    assert chromatic_recursion_check(w, k)


def test_chromatic_recursion_detects_mismatch():
    # a wrong sign on the t term must break the identity
    w = ABWord("ab")
    lhs = chromatic_polynomial(w + "b" + "a")
    assert lhs != -T * chromatic_polynomial(w + "a")


@pytest.mark.parametrize("u, v", [("", ""), ("a", ""), ("", "b")])
def test_excedance_recursion_examples(u, v):
    assert excedance_recursion_check(u, v)


def test_excedance_recursion_base_values():
    assert excedance_statistic("ba") == 3
    assert excedance_statistic("ab") + excedance_statistic("a") + excedance_statistic("b") == 3


def test_excedance_sum_recursion():
    for w in words_up_to(5):
        for k in range(1, 5):
            assert excedance_sum_recursion_check(w, k)
