from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ferrers.algebra import (
    BivariateSeries, FactoredWeightedSum, IntPolynomial, LinearForm,
    MBasisExpansion, PBasisExpansion, T, assignment_from_lists,
    evaluate_factored, interpolate, monomial_symmetric, series_product_egf,
    specialize_m, specialize_p, x, y,
)
from ferrers.errors import DomainError

polys = st.lists(st.integers(-50, 50), max_size=7).map(IntPolynomial)


def test_poly_basics():
    assert (T - 1) * T == IntPolynomial((0, -1, 1))
    p = IntPolynomial((0, -3, 6, -4, 1))
    assert p.coefficient(1) == -3
    assert p.coefficient(9) == 0 and p.coefficient(-1) == 0
    assert (T * T - T)(3) == 6
    assert IntPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPolynomial(()).degree == -1
    assert str(p) == "t^4 - 4*t^3 + 6*t^2 - 3*t"
    assert str(-T + 2) == "-t + 2"


def test_poly_falling_and_power():
    assert IntPolynomial.falling(3) == T * (T - 1) * (T - 2)
    assert (T - 1) ** 3 == (T - 1) * (T - 1) * (T - 1)
    assert (T - 1) ** 0 == IntPolynomial((1,))


@given(polys, polys)
def test_poly_ring_homomorphism(f, g):
    for k in range(-2, 6):
        assert (f * g)(k) == f(k) * g(k)
        assert (f + g)(k) == f(k) + g(k)
        assert (f - g)(k) == f(k) - g(k)


@given(polys)
def test_interpolate_recovers(f):
    size = max(f.degree + 1, 1)
    assert interpolate([f(k) for k in range(size)]) == f


def test_interpolate_rejects_non_integer():
    with pytest.raises(ValueError):
        interpolate([0, 1, 3])  # t(t+1)/2

def test_poly_json_round_trip():
    p = IntPolynomial((0, -3, 6, -4, 10 ** 30))
    assert IntPolynomial.from_json(p.to_json()) == p
    assert p.to_json()[-1] == str(10 ** 30)


def test_linear_form_and_factored_sum():
    single = FactoredWeightedSum.build({x(0): 1, y(0): 1}, [])
    assert evaluate_factored(single, {x(0): 5, y(0): 7}) == 35
    k22 = FactoredWeightedSum.build(
        {x(0): 1, x(1): 1, y(0): 1, y(1): 1},
        [LinearForm.prefix("y", 2), LinearForm.prefix("x", 2)])
    a = assignment_from_lists([1, 2], [1, 3])
    assert k22.evaluate(a) == 72
    # string keys work too
    assert k22.evaluate({"x0": 1, "x1": 2, "y0": 1, "y1": 3}) == 72
    with pytest.raises(DomainError):
        k22.evaluate({x(0): 1})


def test_linear_form_subtraction():
    f = LinearForm.prefix("x", 3)
    assert (f - x(2)) == LinearForm.prefix("x", 2)
    with pytest.raises(ValueError):
        LinearForm.prefix("x", 1) - x(0)


def test_specialize_p_examples():
    edge = PBasisExpansion({(1, 1): 1, (2,): -1})
    assert specialize_p(edge, [1, 1]) == 2
    assert specialize_p(edge, [1, 1, 1]) == 6
    path = PBasisExpansion({(1, 1, 1): 1, (2, 1): -2, (3,): 1})
    assert specialize_p(path, [1, 1]) == 2


def test_specialize_m_examples():
    assert specialize_m(MBasisExpansion({(1, 1): 2}), [1, 1]) == 2
    assert specialize_m(MBasisExpansion({(2, 1): 1}), [1, 1]) == 2
    assert specialize_m(MBasisExpansion({(2, 1): 1}), []) == 0
    assert specialize_m(MBasisExpansion({(): 3}), []) == 3
    assert monomial_symmetric((2, 1), [2, 3]) == 4 * 3 + 2 * 9


def test_expansion_canonical_keys_and_zeros():
    e = PBasisExpansion([((1, 2), 3), ((2, 1), -3), ((3,), 1)])
    assert e.terms == {(3,): 1}
    assert PBasisExpansion.power(1, 2) * PBasisExpansion.power(1) == PBasisExpansion.power(2, 1, 1)
    data = (PBasisExpansion.power(2, 1).scale(10 ** 25)).to_json()
    assert data == [{"partition": [2, 1], "coeff": str(10 ** 25)}]
    assert PBasisExpansion.from_json(data) == PBasisExpansion.power(2, 1).scale(10 ** 25)


small = st.lists(st.integers(-3, 3), max_size=3)
expansions = st.dictionaries(
    st.lists(st.integers(1, 3), min_size=1, max_size=3).map(tuple),
    st.integers(-5, 5), max_size=4).map(PBasisExpansion)


@given(expansions, expansions, small)
def test_specialize_p_linear_and_multiplicative(e, f, vals):
    assert specialize_p(e + f, vals) == specialize_p(e, vals) + specialize_p(f, vals)
    assert specialize_p(e.scale(3), vals) == 3 * specialize_p(e, vals)
    assert specialize_p(e * f, vals) == specialize_p(e, vals) * specialize_p(f, vals)


def test_series_examples():
    one = series_product_egf([1])
    assert one.coefficient(1, 1) == 0
    two = series_product_egf([1, 1])
    assert two.coefficient(1, 1) * 1 * 1 == 2
    empty = series_product_egf([], 3, 3)
    assert empty.coeffs == {(0, 0): Fraction(1)}


def test_series_truncation():
    s = series_product_egf([2], 2, 1)
    assert s.coefficient(2, 0) == 2 and s.coefficient(3, 0) == 0
    assert s.coefficient(0, 1) == 2
    with pytest.raises(ValueError):
        s * BivariateSeries.one(3, 3)
