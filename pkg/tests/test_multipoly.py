from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from coxtrop.laurent import ONE, T, LaurentPoly, RatFunc, residue_at_valuation
from coxtrop.multipoly import (CoxPoly, InhomogeneousError, ResiduePoly, initial_form, is_moneric_poly,
                               is_nagata_invariant, multidegree, nagata_shift)

N = 3
coeffs = st.builds(LaurentPoly, st.dictionaries(st.integers(-3, 5), st.integers(-4, 4), min_size=1, max_size=3)).filter(bool)
monos = st.tuples(*[st.integers(0, 2)] * (2 * N))
polys = st.dictionaries(monos, coeffs, min_size=1, max_size=4).map(lambda d: CoxPoly(N, d)).filter(bool)
lams = st.lists(st.builds(LaurentPoly, st.dictionaries(st.integers(-2, 2), st.integers(-3, 3), max_size=2)),
                min_size=N, max_size=N)


def x(i, n=6):
    return CoxPoly.x(n, i)


def y(i, n=6):
    return CoxPoly.y(n, i)


def test_initial_form_unique_minimum():
    f = x(1).scale(T) + x(2).scale(T * T)
    assert initial_form(f) == ResiduePoly(6, {x(1).monomials()[0]: 1})
    assert is_moneric_poly(f)
    g = x(1).scale(T) - x(2).scale(T)
    assert not is_moneric_poly(g)
    with pytest.raises(ValueError):
        initial_form(CoxPoly(6, {}))


def test_multidegree():
    assert multidegree(x(1) * y(2)) == (1, 1, 0, 0, 0, 0)
    with pytest.raises(InhomogeneousError):
        multidegree(x(1) + x(2))


def test_nagata_examples():
    lam = [T, 0, 0, 0, 0, 0]
    assert nagata_shift(x(1), lam) == x(1)
    assert nagata_shift(y(1), lam) == y(1) + x(1).scale(T)
    with pytest.raises(TypeError):
        nagata_shift(y(1), [RatFunc(ONE, T + ONE)] + [0] * 5)
    # invariance is insensitive to clearing denominators
    assert is_nagata_invariant(x(2), [RatFunc(ONE, T + ONE)] + [0] * 5)


def test_divide_by_monomial_exact():
    f = x(1) * x(2) * y(3)
    assert f.divide_by_monomial(x(2).monomials()[0]) == x(1) * y(3)
    with pytest.raises(ArithmeticError):
        f.divide_by_monomial(x(4).monomials()[0])


def test_json_round_trip():
    f = (x(1) * y(2)).scale(T ** -2) - (x(3) * x(3)).scale(LaurentPoly({0: Fraction(1, 3)}))
    assert CoxPoly.from_json(6, f.to_json()) == f


@given(polys, polys)
def test_initial_form_multiplicative(f, g):
    assert initial_form(f * g) == initial_form(f) * initial_form(g)


@given(polys, coeffs)
def test_initial_form_scalar(f, c):
    assert initial_form(f.scale(c)) == initial_form(f) * residue_at_valuation(c)


@given(st.lists(st.integers(0, 2), min_size=N, max_size=N), st.lists(st.integers(0, 2), min_size=N, max_size=N),
       st.lists(st.integers(0, 2), min_size=N, max_size=N), st.lists(st.integers(0, 2), min_size=N, max_size=N))
def test_multidegree_additive(a, b, c, d):
    # homogeneous binomials of a fixed degree: x^a y^b and x^b y^a
    f = CoxPoly(N, {tuple(a + b): ONE, tuple(b + a): T})
    g = CoxPoly(N, {tuple(c + d): ONE})
    assert multidegree(f * g) == tuple(u + v for u, v in zip(multidegree(f), multidegree(g)))


@given(polys, lams, lams)
def test_nagata_is_additive_action(f, lam, mu):
    both = [a + b for a, b in zip(lam, mu)]
    assert nagata_shift(nagata_shift(f, lam), mu) == nagata_shift(f, both)
