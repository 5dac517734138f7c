"""Moneric tests, equivalence keys and tropical membership/equivalence checks."""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

from .coxgen import GeneratorLabel, GeneratorSet, all_generators
from .laurent import INF
from .linalg import solve_rational
from .multipoly import Monomial, ResiduePoly, format_monomial, initial_form
from .pluecker import DegenerateConfigurationError, PointMatrix, TropicalPoint, subsets, tropical_pluecker

MatrixOrGens = Union[PointMatrix, GeneratorSet]


def _generators(A: MatrixOrGens) -> GeneratorSet:
    return A if isinstance(A, GeneratorSet) else all_generators(A)


@dataclass(frozen=True)
class MonericReport:
    moneric: bool
    witnesses: Tuple[Tuple[GeneratorLabel, ResiduePoly], ...] = ()

    def witness_labels(self) -> List[GeneratorLabel]:
        return [lab for lab, _ in self.witnesses]

    def to_json(self) -> dict:
        return {"moneric": self.moneric,
                "witnesses": [{"label": str(lab), "initial_form": str(inf)} for lab, inf in self.witnesses]}


def moneric_subspace(A: MatrixOrGens) -> MonericReport:
    gens = _generators(A)
    witnesses = []
    for lab, f in gens.sorted_items():
        inf = initial_form(f)
        if not inf.is_monomial():
            witnesses.append((lab, inf))
    return MonericReport(not witnesses, tuple(witnesses))


@dataclass(frozen=True)
class EquivalenceKey:
    supports: Tuple[Tuple[GeneratorLabel, FrozenSet[Monomial]], ...]

    def digest(self) -> str:
        h = hashlib.sha256()
        for lab, supp in self.supports:
            h.update(str(lab).encode())
            for m in sorted(supp):
                h.update(b"|" + ",".join(map(str, m)).encode())
            h.update(b"\n")
        return h.hexdigest()

    def differing_labels(self, other: "EquivalenceKey") -> List[GeneratorLabel]:
        mine, theirs = dict(self.supports), dict(other.supports)
        return sorted(lab for lab in set(mine) | set(theirs) if mine.get(lab) != theirs.get(lab))


def equivalence_key(A: MatrixOrGens) -> EquivalenceKey:
    gens = _generators(A)
    return EquivalenceKey(tuple((lab, initial_form(f).support()) for lab, f in gens.sorted_items()))


def same_key(A: MatrixOrGens, B: MatrixOrGens) -> bool:
    return equivalence_key(A) == equivalence_key(B)


def equivalence_verdict(A: MatrixOrGens, B: MatrixOrGens) -> str:
    """Equal initial supports only prove equivalence; unequal ones prove nothing."""
    return "equivalent (sufficient condition)" if same_key(A, B) else "unknown"


# -- TGr(2, n) -----------------------------------------------------------------

def _require_finite(values, what: str) -> None:
    if any(v is INF for v in values):
        raise DegenerateConfigurationError(f"{what} has a vanishing coordinate")


def four_point_violations(d: TropicalPoint, convention: str = "min") -> List[Tuple[int, int, int, int]]:
    """4-subsets where the extremum of ``d_ij+d_kl, d_ik+d_jl, d_il+d_jk`` is attained only once.

    ``convention="min"`` reads ``d`` as valuations of minors (this package's
    sign); ``"max"`` reads ``d`` as negated valuations and tests the maximum.
    """
    if d.rank != 2:
        raise ValueError("four-point condition applies to 2-row data")
    if convention not in ("min", "max"):
        raise ValueError("convention must be 'min' or 'max'")
    _require_finite(d.d_values, "tropical point")
    dd = d.as_dict()
    bad = []
    for i, j, k, l in itertools.combinations(range(1, d.n + 1), 4):
        sums = sorted((dd[(i, j)] + dd[(k, l)], dd[(i, k)] + dd[(j, l)], dd[(i, l)] + dd[(j, k)]))
        if convention == "max":
            sums.reverse()
        if sums[0] != sums[1]:
            bad.append((i, j, k, l))
    return bad


def tgr2_member(d: TropicalPoint, convention: str = "min") -> bool:
    return not four_point_violations(d, convention)


# -- Naruki / torus action --------------------------------------------------

def _lineality_rows(n: int = 6) -> List[List[int]]:
    rows = [[int(s in S) for s in range(1, n + 1)] for S in subsets(n, 3)]
    rows.append([2] * n)
    return rows


def torus_shift(dA: TropicalPoint, dB: TropicalPoint) -> Optional[Tuple[int, ...]]:
    """``w`` in Z^6 with ``dB = dA + (lineality action of w)``, if one exists."""
    for d in (dA, dB):
        if d.conic_val is None or len(d.d_values) != 20:
            raise ValueError("Naruki comparison needs 3x6 tropical data including val(C)")
        _require_finite(d.extended(), "tropical point")
    delta = [b - a for a, b in zip(dA.extended(), dB.extended())]
    w = solve_rational(_lineality_rows(), delta)
    if w is None or any(v.denominator != 1 for v in w):
        return None
    return tuple(int(v) for v in w)


def naruki_shift(A: PointMatrix, B: PointMatrix) -> Optional[Tuple[int, ...]]:
    return torus_shift(tropical_pluecker(A), tropical_pluecker(B))


def naruki_equivalent(A: PointMatrix, B: PointMatrix) -> bool:
    return naruki_shift(A, B) is not None


def lineality_projection(d: TropicalPoint) -> Tuple[Fraction, ...]:
    """Orthogonal projection of the 21-vector away from the torus directions.

    Two finite points are related by a rational torus shift exactly when
    their projections agree.
    """
    L = _lineality_rows()
    v = [Fraction(x) for x in d.extended()]
    # solve (L^T L) c = L^T v
    LtL = [[sum(Fraction(L[k][i] * L[k][j]) for k in range(len(L))) for j in range(6)] for i in range(6)]
    Ltv = [sum(L[k][i] * v[k] for k in range(len(L))) for i in range(6)]
    c = solve_rational(LtL, Ltv)
    return tuple(v[k] - sum(L[k][i] * c[i] for i in range(6)) for k in range(len(L)))


# -- bounded Khovanskii check -----------------------------------------------

def khovanskii_bounded(A: MatrixOrGens, degree_bound: int = 2):
    """Subduction check of the 27 generators in all degrees reachable with ``degree_bound`` factors."""
    from .khovanskii import KhovanskiiVerdict, khovanskii_check
    gens = _generators(A)
    if not moneric_subspace(gens).moneric:
        return KhovanskiiVerdict("not_applicable_not_moneric", degree_bound)
    return khovanskii_check([(str(lab), f) for lab, f in gens.sorted_items()], degree_bound)
