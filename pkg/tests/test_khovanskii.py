import itertools

import pytest
from hypothesis import given, strategies as st

from coxtrop.coxgen import all_generators
from coxtrop.hilbert import (count_saturated, count_semigroup, cox_semigroup, elementary_symmetric_basis,
                             minor_grading, minor_system, total_degree_grading)
from coxtrop.khovanskii import (analyse_degree, exponent_multisets, graded_dimension, in_semigroup,
                                khovanskii_check, reachable_degrees, standard_grading, _product)
from coxtrop.laurent import ONE, T, ZERO, LaurentPoly
from coxtrop.multipoly import CoxPoly, initial_form
from coxtrop.pluecker import MATRIX_G
from coxtrop.tropclass import khovanskii_bounded


@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)).filter(any), min_size=1, max_size=4),
       st.tuples(st.integers(0, 5), st.integers(0, 5)))
def test_exponent_multisets_brute_force(degrees, target):
    got = sorted(exponent_multisets(degrees, target))
    want = sorted(a for a in itertools.product(range(6), repeat=len(degrees))
                  if tuple(sum(k * d[i] for k, d in zip(a, degrees)) for i in range(2)) == target)
    assert got == want


def test_reachable_degrees():
    assert reachable_degrees([(1, 0), (0, 1)], 2) == [(0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(any), min_size=1, max_size=3),
       st.tuples(st.integers(0, 6), st.integers(0, 6)))
def test_in_semigroup_brute_force(gens, v):
    want = any(tuple(sum(k * g[i] for k, g in zip(a, gens)) for i in range(2)) == v
               for a in itertools.product(range(7), repeat=len(gens)))
    assert in_semigroup(v, gens) == want


@pytest.mark.parametrize("m", range(1, 6))
def test_elementary_symmetric_no_obstruction(m):
    gens = [(f"e{k}", f) for k, f in enumerate(elementary_symmetric_basis(m), start=1)]
    v = khovanskii_check(gens, 3, total_degree_grading(m))
    assert v.status == "no_obstruction_up_to_bound"
    assert all(not rep.relations for rep in v.reports)


def test_minor_system_relations():
    v = khovanskii_check(minor_system(4), 2, minor_grading(4))
    assert v.status == "no_obstruction_up_to_bound"
    names = v.names
    rels = v.relations_in_degree((2, 1, 1, 1, 1))
    assert len(rels) == 1
    (rel,) = rels
    text = {v._alpha_text(a): c for a, c in rel.items()}
    c = text["p12*p34"]
    assert text == {"p12*p34": c, "p13*p24": -c, "p14*p23": c}
    # the other relations are the three-term identities x_j p_kl
    others = [r for rep in v.reports if rep.degree != (2, 1, 1, 1, 1) for r in rep.relations]
    assert len(others) == 4
    for r in others:
        assert all(sum(a[names.index(f"x{i}")] for i in range(1, 5)) == 1 for a in r)
    # initial monomials of the relation terms lie in the semigroup
    init = [initial_form(f).leading_monomial() for _, f in minor_system(4)]
    gens = [f for _, f in minor_system(4)]
    for a in rel:
        assert in_semigroup(initial_form(_product(gens, a, {})).leading_monomial(), init)


def test_toy_obstruction_witness():
    f1 = CoxPoly.x(1, 1)
    f2 = CoxPoly.x(1, 1) + CoxPoly.y(1, 1).scale(T)
    v = khovanskii_check([("a", f1), ("b", f2)], 1)
    assert v.status == "obstruction"
    assert v.escaping_monomial == (0, 1)
    js = v.to_json()
    assert js["escaping_monomial"] == "y1"
    assert js["degree"] == [1]


def test_not_moneric_family():
    f = CoxPoly.x(1, 1) + CoxPoly.y(1, 1)
    assert khovanskii_check([("f", f)], 2).status == "not_applicable_not_moneric"


def test_obstruction_on_g_is_a_genuine_witness():
    gens = all_generators(MATRIX_G)
    named = [(str(l), f) for l, f in gens.sorted_items()]
    v = khovanskii_bounded(gens, 2)
    assert v.status == "obstruction"
    polys = [f for _, f in named]
    combo = CoxPoly(6, {})
    for a, c in v.witness_relation.items():
        combo = combo + _product(polys, a, {}).scale(c)
    assert initial_form(combo) == v.witness_initial_form
    assert v.escaping_monomial in v.witness_initial_form.support()
    init = [initial_form(f).leading_monomial() for f in polys]
    assert not in_semigroup(v.escaping_monomial, init)


@pytest.mark.parametrize("D", [(1, 0, 0, 0, 0, 0), (0, 0, 1, 1, 1, 1), (1, 0, 1, 1, 1, 1), (1, 1, 1, 1, 1, 1),
                               (0, 1, 1, 1, 1, 1)])
def test_graded_dimension_agrees_with_lattice_counts(D):
    gens = [f for _, f in all_generators(MATRIX_G).sorted_items()]
    init = [initial_form(f).leading_monomial() for f in gens]
    degrees = [tuple(D_ for D_ in initial_form(f).leading_monomial()[:6]) for f in gens]
    rep, obstruction = analyse_degree(gens, init, [tuple(a + b for a, b in zip(d[:6], d[6:]))
                                                   for d in init], D, {})
    dim = graded_dimension(gens, standard_grading(6), D)
    assert obstruction is None
    assert dim == rep.dimension
    S = cox_semigroup(MATRIX_G)
    semi = count_semigroup(S, D)
    assert semi == len(rep.initial_monomials)
    sat = count_saturated(S, D)
    if sat == semi:
        assert dim == sat


def test_monotone_in_bound():
    a = khovanskii_bounded(MATRIX_G, 1)
    b = khovanskii_bounded(MATRIX_G, 2)
    assert a.status == "no_obstruction_up_to_bound" and b.status == "obstruction"
    # an obstruction found at a smaller bound persists at larger ones
    gens = [(f"e{k}", f) for k, f in enumerate(elementary_symmetric_basis(3), start=1)]
    statuses = [khovanskii_check(gens, b, total_degree_grading(3)).status for b in (1, 2, 3)]
    assert statuses == ["no_obstruction_up_to_bound"] * 3
    toy = [("a", CoxPoly.x(1, 1)), ("b", CoxPoly.x(1, 1) + CoxPoly.y(1, 1).scale(T))]
    assert [khovanskii_check(toy, b).status for b in (1, 2, 3)] == ["obstruction"] * 3
