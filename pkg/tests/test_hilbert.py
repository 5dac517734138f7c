import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from coxtrop.hilbert import (ExponentSemigroup, count_degree5_system, count_saturated, count_semigroup,
                             cox_semigroup, degree5_semigroup, elementary_symmetric_basis,
                             elementary_symmetric_semigroup, graded_dimension_oracle, semigroup_from_initials)
from coxtrop.coxgen import all_generators, conic_generator
from coxtrop.laurent import LaurentPoly, T
from coxtrop.multipoly import CoxPoly, ResiduePoly, initial_form
from coxtrop.pluecker import MATRIX_G, MATRIX_G_PRIME


def partitions_at_most(r, m):
    """Brute force: nonincreasing m-tuples of nonnegative integers summing to r."""
    return sum(1 for a in itertools.product(range(r + 1), repeat=m)
               if sum(a) == r and all(a[i] >= a[i + 1] for i in range(m - 1)))


def degree5_brute(n, r, u):
    count = 0
    ranges = [range(v + 1) for v in u]
    for bottom in itertools.product(*ranges):
        top = [v - b for v, b in zip(u, bottom)]
        if bottom[0] != 0 or sum(bottom) != r:
            continue
        if all(sum(bottom[1:l + 1]) <= sum(top[:l]) for l in range(1, n)):
            count += 1
    return count


def test_semigroup_from_initials_examples():
    S = semigroup_from_initials([f for _, f in all_generators(MATRIX_G).sorted_items()])
    assert len(S.generators) == 27 and S.ambient_dim == 12 and len(S.grading) == 6
    assert elementary_symmetric_semigroup(3).generators == ((1, 0, 0), (1, 1, 0), (1, 1, 1))
    with pytest.raises(ValueError):
        semigroup_from_initials([conic_generator(MATRIX_G_PRIME, 6)])


def test_count_saturated_examples():
    S3, S2 = elementary_symmetric_semigroup(3), elementary_symmetric_semigroup(2)
    assert count_saturated(S3, (0,)) == 1
    assert count_saturated(S3, (4,)) == 4
    assert count_saturated(S2, (4,)) == 3


@pytest.mark.parametrize("m", range(1, 6))
def test_elementary_symmetric_counts_match_partitions(m):
    S = elementary_symmetric_semigroup(m)
    for r in range(0, 9):
        want = partitions_at_most(r, m)
        assert count_saturated(S, (r,)) == want
        assert count_semigroup(S, (r,)) == want


def test_elementary_symmetric_basis():
    e1, e2 = elementary_symmetric_basis(2)
    x1, x2 = CoxPoly.x(2, 1), CoxPoly.x(2, 2)
    assert e1 == x1 + x2.scale(T)
    assert e2 == x1 * x2
    for m in range(1, 5):
        for l, e in enumerate(elementary_symmetric_basis(m), start=1):
            first = tuple([1] * l + [0] * (2 * m - l))
            assert initial_form(e) == ResiduePoly(m, {first: 1})
            # t = 1 gives the elementary symmetric polynomial
            assert {m_ for m_, c in e.items() if c.evaluate(1) == 1} == {
                tuple(int(k in js) for k in range(m)) + (0,) * m for js in itertools.combinations(range(m), l)}
            assert len(e) == len(list(itertools.combinations(range(m), l)))


def test_degree5_frozen_values():
    assert count_degree5_system(3, 0, (2, 1, 3)) == 1
    assert count_degree5_system(3, 1, (1, 1, 1)) == 2
    assert count_degree5_system(2, 1, (2, 1)) == 1
    assert degree5_brute(3, 1, (1, 1, 1)) == 2
    assert degree5_brute(2, 1, (2, 1)) == 1


@pytest.mark.parametrize("seed", range(10))
def test_degree5_system_matches_semigroup_counts(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    u = tuple(rng.randint(0, 3) for _ in range(n))
    r = rng.randint(0, sum(u))
    S = degree5_semigroup(n)
    want = degree5_brute(n, r, u)
    assert count_degree5_system(n, r, u) == want
    assert count_saturated(S, (r,) + u) == want
    assert count_semigroup(S, (r,) + u) == want


def test_invariants_on_cox_semigroup():
    S = cox_semigroup(MATRIX_G)
    assert count_saturated(S, (0,) * 6) == 1
    d1, d2 = (0, 0, 1, 1, 1, 1), (1, 0, 0, 0, 0, 0)
    assert count_semigroup(S, d1) >= 1 and count_semigroup(S, d2) >= 1
    assert count_semigroup(S, tuple(a + b for a, b in zip(d1, d2))) >= 1
    S7 = cox_semigroup(MATRIX_G.scale(7))
    for d in [(1, 1, 0, 0, 0, 0), (1, 1, 1, 1, 1, 1), (1, 1, 1, 1, 1, 2)]:
        assert count_saturated(S, d) == count_saturated(S7, d)


def test_graded_dimension_oracle():
    assert graded_dimension_oracle(MATRIX_G, (1, 0, 0, 0, 0, 0), 2) == 1
    assert graded_dimension_oracle(MATRIX_G, (0, 0, 1, 1, 1, 1), 1) >= 1
    assert graded_dimension_oracle(MATRIX_G, (0, 0, 0, 0, 0, 0), 1) == 1


def test_non_positive_grading_rejected():
    S = ExponentSemigroup(2, ((1, 0), (0, 1)), ((1, -1),))
    with pytest.raises(ValueError):
        count_saturated(S, (0,))


@settings(max_examples=40)
@given(st.integers(1, 4), st.integers(0, 6), st.integers(0, 6))
def test_superadditivity_elementary_symmetric(m, r1, r2):
    S = elementary_symmetric_semigroup(m)
    if count_semigroup(S, (r1,)) and count_semigroup(S, (r2,)):
        assert count_semigroup(S, (r1 + r2,)) >= 1


@settings(max_examples=40)
@given(st.lists(st.integers(0, 3), min_size=2, max_size=4), st.data())
def test_degree5_system_property(u, data):
    n = len(u)
    r = data.draw(st.integers(0, sum(u)))
    assert count_degree5_system(n, r, tuple(u)) == degree5_brute(n, r, u)
