import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from coxtrop.coxgen import GeneratorLabel
from coxtrop.laurent import LaurentPoly, T
from coxtrop.pluecker import (MATRIX_G, MATRIX_G_DOUBLE_PRIME, MATRIX_G_PRIME, DegenerateConfigurationError,
                              PointMatrix, TropicalPoint, subsets, tropical_pluecker)
from coxtrop.tropclass import (equivalence_key, equivalence_verdict, four_point_violations, khovanskii_bounded,
                               lineality_projection, moneric_subspace, naruki_equivalent, naruki_shift, same_key,
                               tgr2_member, torus_shift)

from conftest import random_generic_monomial_matrix

CONIC6 = GeneratorLabel.conic(6)


def test_moneric_verdicts():
    assert moneric_subspace(MATRIX_G).moneric
    rep = moneric_subspace(MATRIX_G_PRIME)
    assert not rep.moneric and CONIC6 in rep.witness_labels()
    rep = moneric_subspace(MATRIX_G_DOUBLE_PRIME)
    assert not rep.moneric and CONIC6 in rep.witness_labels()
    assert rep.to_json()["moneric"] is False


def test_equivalence_keys():
    assert same_key(MATRIX_G, MATRIX_G)
    assert same_key(MATRIX_G, MATRIX_G.scale(7))
    assert not same_key(MATRIX_G, MATRIX_G_PRIME)
    assert equivalence_verdict(MATRIX_G, MATRIX_G) == "equivalent (sufficient condition)"
    assert equivalence_verdict(MATRIX_G, MATRIX_G_PRIME) == "unknown"
    kg, kp = equivalence_key(MATRIX_G), equivalence_key(MATRIX_G_PRIME)
    assert len(kg.supports) == 27
    assert CONIC6 in kg.differing_labels(kp)
    supports = dict(kg.supports), dict(kp.supports)
    assert (len(supports[0][CONIC6]), len(supports[1][CONIC6])) == (1, 3)


def test_scaling_by_rational_constant_changes_nothing():
    B = MATRIX_G.scale(LaurentPoly.const(Fraction(-5, 3)))
    assert moneric_subspace(B).moneric
    assert equivalence_key(B) == equivalence_key(MATRIX_G)


def test_tgr2_examples():
    assert tgr2_member(TropicalPoint((0,) * 10, None, 2))
    hand = TropicalPoint((0, 0, 0, 0, 0, 1), None, 2)
    # sums 1, 0, 0: the maximum is unique, the minimum is not
    assert not tgr2_member(hand, convention="max")
    assert tgr2_member(hand)
    assert not tgr2_member(TropicalPoint((0, 0, 0, 0, 0, -1), None, 2))
    # the min-convention reading is realised by an actual matrix
    M = PointMatrix.from_rows([[1, 0, 1, 1], [0, 1, 1, "1 + t"]])
    assert tropical_pluecker(M).d_values == hand.d_values
    from coxtrop.laurent import INF
    with pytest.raises(DegenerateConfigurationError):
        tgr2_member(TropicalPoint((0, 0, INF, 0, 0, 0), None, 2))
    with pytest.raises(ValueError):
        four_point_violations(tropical_pluecker(MATRIX_G))


def random_2xn(rng, n):
    while True:
        rows = [[LaurentPoly({e: rng.randint(-4, 4) for e in rng.sample(range(-2, 8), rng.randint(1, 3))})
                 for _ in range(n)] for _ in range(2)]
        try:
            M = PointMatrix(tuple(tuple(r) for r in rows))
        except ValueError:
            continue
        if tropical_pluecker(M).is_finite():
            return M


@pytest.mark.parametrize("seed", range(5))
def test_tgr2_accepts_realizable(seed):
    rng = random.Random(seed)
    for _ in range(4):
        assert tgr2_member(tropical_pluecker(random_2xn(rng, 5)))


@given(st.lists(st.integers(-5, 5), min_size=15, max_size=15), st.permutations(range(1, 7)))
def test_tgr2_permutation_invariant(vals, perm):
    d = TropicalPoint(tuple(vals), None, 2)
    dd = d.as_dict()
    relabeled = []
    for S in subsets(6, 2):
        i, j = sorted((perm[S[0] - 1], perm[S[1] - 1]))
        relabeled.append(dd[(i, j)])
    assert tgr2_member(d) == tgr2_member(TropicalPoint(tuple(relabeled), None, 2))


def test_naruki_examples():
    assert naruki_shift(MATRIX_G, MATRIX_G_PRIME) == (0,) * 6
    assert naruki_shift(MATRIX_G, MATRIX_G_DOUBLE_PRIME) == (-4, 0, 0, 0, 0, 0)
    assert naruki_shift(MATRIX_G, MATRIX_G) == (0,) * 6
    B = random_generic_monomial_matrix(random.Random(3))
    assert not naruki_equivalent(MATRIX_G, B)


def test_naruki_rejects_degenerate():
    A = PointMatrix.from_rows([[1, 1, 0, 1, 2, 3], [0, 0, 1, 5, 1, 1], [0, 0, 0, 1, 1, 7]])
    with pytest.raises(DegenerateConfigurationError):
        naruki_equivalent(A, MATRIX_G)


def test_fractional_shift_is_not_equivalence():
    d = tropical_pluecker(MATRIX_G)
    shifted = TropicalPoint(tuple(v + 1 for v in d.d_values), d.conic_val + 4, 3)
    assert lineality_projection(shifted) == lineality_projection(d)
    assert torus_shift(d, shifted) is None


@pytest.mark.parametrize("seed", range(3))
def test_naruki_is_an_equivalence_relation(seed):
    rng = random.Random(seed)
    A = random_generic_monomial_matrix(rng)
    wb = [rng.randint(-3, 3) for _ in range(6)]
    wc = [rng.randint(-3, 3) for _ in range(6)]
    B, C = A, A
    for j in range(6):
        B = B.scale_column(j + 1, T ** wb[j])
        C = C.scale_column(j + 1, T ** wc[j])
    assert naruki_shift(A, B) == tuple(wb)
    assert naruki_shift(B, A) == tuple(-w for w in wb)
    assert naruki_shift(B, C) == tuple(c - b for b, c in zip(wb, wc))
    assert lineality_projection(tropical_pluecker(A)) == lineality_projection(tropical_pluecker(C))


def test_column_scaling_changes_tropical_point_linearly():
    a, b = tropical_pluecker(MATRIX_G), tropical_pluecker(MATRIX_G_DOUBLE_PRIME)
    for S, x, y in zip(subsets(6, 3), a.d_values, b.d_values):
        assert y - x == (-4 if 1 in S else 0)


def test_khovanskii_bounded_on_builtin_matrices():
    assert khovanskii_bounded(MATRIX_G_PRIME, 1).status == "not_applicable_not_moneric"
    assert khovanskii_bounded(MATRIX_G_PRIME, 3).status == "not_applicable_not_moneric"
    assert khovanskii_bounded(MATRIX_G, 1).status == "no_obstruction_up_to_bound"
