"""Hilbert-function values by counting lattice points of initial exponent data.

The count in degree ``d`` is the number of points of ``Gamma ∩ Z(in F)``
of degree ``d``.  Here ``Gamma`` is the cone spanned by the initial exponent
vectors and ``Z(in F)`` is the group they generate.  ``count_semigroup``
counts the semigroup itself, which is a smaller set when the semigroup is
not saturated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .khovanskii import graded_dimension, in_semigroup, standard_grading
from .laurent import LaurentPoly
from .linalg import in_cone, in_lattice, integer_echelon
from .multipoly import CoxPoly, initial_form
from .pluecker import PointMatrix

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class ExponentSemigroup:
    ambient_dim: int
    generators: Tuple[Vector, ...]
    grading: Tuple[Vector, ...]

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.ambient_dim or any(v < 0 for v in g) or not any(g):
                raise ValueError(f"bad semigroup generator {g}")
        for row in self.grading:
            if len(row) != self.ambient_dim:
                raise ValueError("grading row has the wrong length")

    def degree(self, a: Sequence[int]) -> Vector:
        return tuple(sum(w * v for w, v in zip(row, a)) for row in self.grading)

    def weight(self, a: Sequence[int]) -> int:
        """Sum of the grading coordinates; must be positive on every generator."""
        return sum(self.degree(a))


def semigroup_from_initials(F: Sequence[CoxPoly], grading: Optional[Sequence[Sequence[int]]] = None,
                            x_only: bool = False) -> ExponentSemigroup:
    """Initial exponent vectors of a moneric family.

    With ``x_only`` the y-block is dropped (it must be zero throughout) and
    the grading is read on the x-block only.
    """
    if not F:
        raise ValueError("empty family")
    n = F[0].n
    grading = [list(r) for r in (grading or standard_grading(n))]
    vecs = []
    for k, f in enumerate(F):
        inf = initial_form(f)
        if not inf.is_monomial():
            raise ValueError(f"member {k} is not moneric: initial form {inf}")
        vecs.append(inf.leading_monomial())
    if x_only:
        if any(any(v[n:]) for v in vecs):
            raise ValueError("x_only requested but a y exponent is nonzero")
        vecs = [v[:n] for v in vecs]
        if all(len(r) == 2 * n for r in grading):
            grading = [r[:n] for r in grading]
    dim = len(vecs[0])
    return ExponentSemigroup(dim, tuple(vecs), tuple(tuple(r) for r in grading))


def _box(S: ExponentSemigroup, d: Sequence[int]) -> List[int]:
    phi = sum(d)
    bounds = []
    for i in range(S.ambient_dim):
        best = Fraction(0)
        for g in S.generators:
            w = S.weight(g)
            if w <= 0:
                raise ValueError("grading is not positive on the cone: unbounded fiber")
            best = max(best, Fraction(g[i], w))
        bounds.append(int(phi * best))
    return bounds


def fiber_candidates(S: ExponentSemigroup, d: Sequence[int]) -> Iterator[Vector]:
    """Nonnegative integer points of degree ``d`` inside the computed box."""
    d = tuple(d)
    if len(d) != len(S.grading):
        raise ValueError("degree has the wrong length")
    if sum(d) < 0:
        return
    bounds = _box(S, d)
    m = S.ambient_dim
    cols = [tuple(row[i] for row in S.grading) for i in range(m)]
    nonneg = all(v >= 0 for c in cols for v in c)
    a = [0] * m

    def rec(i: int, partial: List[int]):
        if i == m:
            if tuple(partial) == d:
                yield tuple(a)
            return
        c = cols[i]
        for v in range(bounds[i] + 1):
            cur = [p + v * w for p, w in zip(partial, c)]
            if nonneg and any(x > y for x, y in zip(cur, d)):
                break
            a[i] = v
            yield from rec(i + 1, cur)
        a[i] = 0

    yield from rec(0, [0] * len(d))


def count_saturated(S: ExponentSemigroup, d: Sequence[int]) -> int:
    """``#{a in Gamma ∩ Z(in F) : deg a = d}``."""
    echelon = integer_echelon(S.generators)
    gens = [list(g) for g in S.generators]
    return sum(1 for a in fiber_candidates(S, d) if in_lattice(a, echelon) and in_cone(a, gens))


def count_semigroup(S: ExponentSemigroup, d: Sequence[int]) -> int:
    """``#{a in Z_{>=0}(in F) : deg a = d}``."""
    return sum(1 for a in fiber_candidates(S, d) if in_semigroup(a, S.generators))


def counts(S: ExponentSemigroup, d: Sequence[int]) -> Dict[str, object]:
    return {"degree": list(d), "count": count_semigroup(S, d), "saturated_count": count_saturated(S, d)}


# -- worked systems ----------------------------------------------------------

def elementary_symmetric_basis(m: int) -> List[CoxPoly]:
    """``e_l = sum t^{(j1-1)+...+(jl-l)} x_j1...x_jl`` for ``l = 1..m``, as x-only polynomials."""
    if m < 1:
        raise ValueError("m must be positive")
    out = []
    for l in range(1, m + 1):
        terms = {}
        for js in itertools.combinations(range(1, m + 1), l):
            e = sum(j - s for s, j in enumerate(js, start=1))
            mono = [0] * (2 * m)
            for j in js:
                mono[j - 1] = 1
            terms[tuple(mono)] = LaurentPoly.monomial(e)
        out.append(CoxPoly(m, terms))
    return out


def total_degree_grading(m: int) -> List[List[int]]:
    return [[1] * m + [0] * m]


def elementary_symmetric_semigroup(m: int) -> ExponentSemigroup:
    return semigroup_from_initials(elementary_symmetric_basis(m), total_degree_grading(m), x_only=True)


def minor_system(n: int, alphas: Optional[Sequence] = None) -> List[Tuple[str, CoxPoly]]:
    """``p_ij = alpha_i x_i y_j - alpha_j x_j y_i`` and ``x_i``; default ``alpha_i = t^(i-1)``."""
    if alphas is None:
        alphas = [LaurentPoly.monomial(i) for i in range(n)]
    alphas = [LaurentPoly.coerce(a) for a in alphas]
    if len(alphas) != n:
        raise ValueError("need one alpha per column")
    out = []
    for i, j in itertools.combinations(range(1, n + 1), 2):
        xy = CoxPoly.x(n, i) * CoxPoly.y(n, j)
        yx = CoxPoly.x(n, j) * CoxPoly.y(n, i)
        out.append((f"p{i}{j}", xy.scale(alphas[i - 1]) - yx.scale(alphas[j - 1])))
    out += [(f"x{i}", CoxPoly.x(n, i)) for i in range(1, n + 1)]
    return out


def minor_grading(n: int) -> List[List[int]]:
    """``(r, u_1..u_n)``: ``r`` counts y's, ``u_l`` counts ``x_l`` and ``y_l``."""
    rows = [[0] * n + [1] * n]
    for l in range(n):
        rows.append([int(j == l or j == n + l) for j in range(2 * n)])
    return rows


def degree5_semigroup(n: int, alphas: Optional[Sequence] = None) -> ExponentSemigroup:
    return semigroup_from_initials([f for _, f in minor_system(n, alphas)], minor_grading(n))


def count_degree5_system(n: int, r: int, u: Sequence[int]) -> int:
    """Solutions in ``Z_{>=0}^{2n}`` of the inequality system for the 2 x n minors.

    ``a_{2,1} = 0``; ``a_{2,2}+...+a_{2,l+1} <= a_{1,1}+...+a_{1,l}`` for
    ``l < n``; ``a_{1,l}+a_{2,l} = u_l``; ``sum_l a_{2,l} = r``.
    """
    if n < 2 or len(u) != n or any(v < 0 for v in u):
        raise ValueError("need n >= 2 and a nonnegative u of length n")
    u = list(u)
    count = 0

    def rec(l: int, top: int, bottom_next: int, remaining: int):
        # l: 0-based index of the column being chosen; top = a_{1,1}+...+a_{1,l}
        nonlocal count
        if l == n:
            if remaining == 0:
                count += 1
            return
        for b in range(min(u[l], remaining) + 1):
            if l == 0 and b:
                break
            # constraint for index l (1-based l) involves bottoms 2..l+1 <= tops 1..l
            if l >= 1 and bottom_next + b > top:
                break
            rec(l + 1, top + u[l] - b, bottom_next + b, remaining - b)

    rec(0, 0, 0, r)
    return count


def _graded_dim_oracle_gens(A: PointMatrix):
    from .coxgen import all_generators
    return [f for _, f in all_generators(A).sorted_items()]


def graded_dimension_oracle(A: PointMatrix, D: Sequence[int], product_bound: Optional[int] = None) -> int:
    """Exact rank of the span of generator products of multidegree ``D``."""
    return graded_dimension(_graded_dim_oracle_gens(A), standard_grading(6), D, product_bound)


def cox_semigroup(A: PointMatrix) -> ExponentSemigroup:
    return semigroup_from_initials(_graded_dim_oracle_gens(A))
