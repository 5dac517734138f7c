"""Degree-bounded Khovanskii-basis verification for finite moneric families.

In a fixed degree ``D`` the products of generators of degree ``D`` span the
graded piece ``U_D``, and their initial monomials span a subspace of
``in(U)_D``.  Because ``dim in(U)_D = dim U_D``, the family is Khovanskii in
degree ``D`` exactly when the number of distinct initial monomials equals
``dim U_D``.  When it does not, a basis of ``U_D`` is repaired until its
initial forms are independent, and an initial form leaving the span of the
product monomials is reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .laurent import ZERO, LaurentPoly, format_laurent
from .linalg import fraction_free_rref, laurent_kernel, rational_nullspace
from .multipoly import CoxPoly, Monomial, ResiduePoly, format_monomial, initial_form

Grading = Sequence[Sequence[int]]
Exponents = Tuple[int, ...]


def standard_grading(n: int) -> List[List[int]]:
    """``deg x_i = deg y_i = e_i`` as a ``n x 2n`` matrix."""
    return [[int(j == i or j == n + i) for j in range(2 * n)] for i in range(n)]


def apply_grading(grading: Grading, m: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(g * e for g, e in zip(row, m)) for row in grading)


def graded_degree(f: CoxPoly, grading: Grading) -> Tuple[int, ...]:
    degs = {apply_grading(grading, m) for m in f.monomials()}
    if len(degs) != 1:
        raise ValueError(f"polynomial is not homogeneous for the grading: degrees {sorted(degs)}")
    return degs.pop()


def exponent_multisets(degrees: Sequence[Tuple[int, ...]], target: Tuple[int, ...]) -> Iterator[Exponents]:
    """All ``alpha >= 0`` with ``sum alpha_g degrees[g] == target``.

    Degrees must be nonnegative and nonzero so the search is finite.
    """
    N = len(degrees)
    for d in degrees:
        if any(v < 0 for v in d) or not any(d):
            raise ValueError("generator degrees must be nonnegative and nonzero")
    alpha = [0] * N

    def rec(g: int, remaining: List[int]):
        if not any(remaining):
            yield tuple(alpha)
            return
        if g == N:
            return
        d = degrees[g]
        k = 0
        rem = list(remaining)
        while True:
            alpha[g] = k
            yield from rec(g + 1, rem)
            rem = [a - b for a, b in zip(rem, d)]
            if any(v < 0 for v in rem):
                break
            k += 1
        alpha[g] = 0

    yield from rec(0, list(target))


def reachable_degrees(degrees: Sequence[Tuple[int, ...]], bound: int) -> List[Tuple[int, ...]]:
    """Sums of between 1 and ``bound`` generator degrees (with repetition), sorted."""
    out = set()
    frontier = {tuple(0 for _ in degrees[0])} if degrees else set()
    for _ in range(bound):
        frontier = {tuple(a + b for a, b in zip(s, d)) for s in frontier for d in degrees}
        out |= frontier
    return sorted(out, key=lambda d: (sum(d), d))


def in_semigroup(vec: Sequence[int], generators: Sequence[Sequence[int]]) -> bool:
    """Exhaustive search for a nonnegative integer combination of nonzero, nonnegative generators."""
    gens = [tuple(g) for g in generators if any(g)]
    if any(v < 0 for g in gens for v in g):
        raise ValueError("semigroup generators must be nonnegative")
    memo: Dict[Tuple[Tuple[int, ...], int], bool] = {}

    def rec(v: Tuple[int, ...], start: int) -> bool:
        if not any(v):
            return True
        key = (v, start)
        if key in memo:
            return memo[key]
        ok = False
        for gi in range(start, len(gens)):
            g = gens[gi]
            w = tuple(a - b for a, b in zip(v, g))
            if min(w) >= 0 and rec(w, gi):
                ok = True
                break
        memo[key] = ok
        return ok

    if any(v < 0 for v in vec):
        return False
    return rec(tuple(vec), 0)


@dataclass
class DegreeReport:
    degree: Tuple[int, ...]
    products: List[Exponents]
    initial_monomials: List[Monomial]
    dimension: int
    relations: List[Dict[Exponents, LaurentPoly]] = field(default_factory=list)


@dataclass
class KhovanskiiVerdict:
    status: str
    bound: int
    degree: Optional[Tuple[int, ...]] = None
    witness_relation: Optional[Dict[Exponents, LaurentPoly]] = None
    witness_initial_form: Optional[ResiduePoly] = None
    escaping_monomial: Optional[Monomial] = None
    names: List[str] = field(default_factory=list)
    reports: List[DegreeReport] = field(default_factory=list)

    def relations_in_degree(self, degree: Sequence[int]) -> List[Dict[Exponents, LaurentPoly]]:
        for rep in self.reports:
            if rep.degree == tuple(degree):
                return rep.relations
        return []

    def _alpha_text(self, alpha: Exponents) -> str:
        parts = []
        for name, a in zip(self.names, alpha):
            if a:
                parts.append(name if a == 1 else f"{name}^{a}")
        return "*".join(parts) or "1"

    def to_json(self) -> dict:
        out = {"status": self.status, "bound": self.bound}
        if self.status == "obstruction":
            n = self.witness_initial_form.n
            out.update({
                "degree": list(self.degree),
                "witness_relation": [{"product": self._alpha_text(a), "coeff": format_laurent(c)}
                                     for a, c in sorted(self.witness_relation.items()) if c],
                "witness_initial_form": str(self.witness_initial_form),
                "escaping_monomial": format_monomial(self.escaping_monomial, n),
            })
        return out


def _product(gens: Sequence[CoxPoly], alpha: Exponents, cache: Dict[Exponents, CoxPoly]) -> CoxPoly:
    if alpha in cache:
        return cache[alpha]
    # peel one factor off the last used generator so sub-products are shared
    g = max(i for i, a in enumerate(alpha) if a)
    rest = list(alpha)
    rest[g] -= 1
    rest = tuple(rest)
    if any(rest):
        result = _product(gens, rest, cache) * gens[g]
    else:
        result = gens[g]
    cache[alpha] = result
    return result


def _coefficient_rows(polys: Sequence[CoxPoly]) -> Tuple[List[List[LaurentPoly]], List[Monomial]]:
    monos = sorted({m for f in polys for m in f.monomials()}, reverse=True)
    return [[f.coefficient(m) for m in monos] for f in polys], monos


def _valued_basis(elements: List[Tuple[Dict[Exponents, LaurentPoly], CoxPoly]], max_steps: int = 100000):
    """Repair a Q(t)-independent family until its initial forms are Q-independent."""
    elements = [_normalise(c, f) for c, f in elements]
    for _ in range(max_steps):
        inits = [initial_form(f) for _, f in elements]
        tables = [r.terms for r in inits]
        monos = sorted({m for r in tables for m in r})
        cols = [[r.get(m, Fraction(0)) for r in tables] for m in monos]
        rel = rational_nullspace(cols)
        if not rel:
            return elements, inits
        c = rel[0]
        j = max(i for i, v in enumerate(c) if v)
        combo: Dict[Exponents, LaurentPoly] = {}
        poly = CoxPoly(elements[0][1].n, {})
        for ci, (coeffs, f) in zip(c, elements):
            if not ci:
                continue
            poly = poly + f.scale(LaurentPoly.const(ci))
            for a, v in coeffs.items():
                combo[a] = combo.get(a, ZERO) + v * ci
        elements[j] = _normalise(combo, poly)
    raise RuntimeError("valued basis repair did not terminate")


def _normalise(coeffs: Dict[Exponents, LaurentPoly], f: CoxPoly):
    v = f.min_valuation()
    return ({a: c.shift(-v) for a, c in coeffs.items() if c},
            CoxPoly(f.n, {m: c.shift(-v) for m, c in f.items()}))


def analyse_degree(gens: Sequence[CoxPoly], init_exps: Sequence[Monomial], degrees: Sequence[Tuple[int, ...]],
                   D: Tuple[int, ...], cache: Dict[Exponents, CoxPoly]):
    """``(DegreeReport, obstruction or None)`` for one degree."""
    alphas = sorted(exponent_multisets(degrees, D))
    n_mono = len(init_exps[0])
    inits = [tuple(sum(a * e[k] for a, e in zip(alpha, init_exps)) for k in range(n_mono)) for alpha in alphas]
    distinct = sorted(set(inits), reverse=True)
    if len(distinct) == len(alphas):
        return DegreeReport(D, alphas, distinct, len(alphas)), None
    polys = [_product(gens, a, cache) for a in alphas]
    rows, _ = _coefficient_rows(polys)
    # relations: right kernel of the transpose
    transpose = [list(col) for col in zip(*rows)]
    kernel = laurent_kernel(transpose)
    relations = [{a: c for a, c in zip(alphas, vec) if c} for vec in kernel]
    dim = len(alphas) - len(kernel)
    report = DegreeReport(D, alphas, distinct, dim, relations)
    if dim == len(distinct):
        return report, None
    _, pivots, _ = fraction_free_rref(transpose)
    # pivot columns of the transpose are independent products
    basis = [({alphas[i]: LaurentPoly.const(1)}, polys[i]) for i in pivots]
    elements, init_forms = _valued_basis(basis)
    span = set(distinct)
    for (combo, _), inf in zip(elements, init_forms):
        outside = [m for m, _ in inf.items() if m not in span]
        if outside:
            return report, (combo, inf, outside[0])
    raise AssertionError("dimension mismatch without an escaping initial form")


def khovanskii_check(named_gens: Sequence[Tuple[str, CoxPoly]], bound: int = 2,
                     grading: Optional[Grading] = None, keep_reports: bool = True) -> KhovanskiiVerdict:
    """Check the Khovanskii property in every degree reachable with at most ``bound`` factors."""
    if bound < 1:
        raise ValueError("bound must be positive")
    names = [name for name, _ in named_gens]
    gens = [f for _, f in named_gens]
    n = gens[0].n
    grading = grading or standard_grading(n)
    init_exps = []
    for name, f in named_gens:
        inf = initial_form(f)
        if not inf.is_monomial():
            return KhovanskiiVerdict("not_applicable_not_moneric", bound, names=names)
        init_exps.append(inf.leading_monomial())
    degrees = [graded_degree(f, grading) for f in gens]
    cache: Dict[Exponents, CoxPoly] = {}
    reports = []
    for D in reachable_degrees(degrees, bound):
        report, obstruction = analyse_degree(gens, init_exps, degrees, D, cache)
        if keep_reports:
            reports.append(report)
        if obstruction is not None:
            combo, inf, mono = obstruction
            if in_semigroup(mono, init_exps):
                raise AssertionError("escaping monomial lies in the semigroup")
            return KhovanskiiVerdict("obstruction", bound, D, combo, inf, mono, names, reports)
    return KhovanskiiVerdict("no_obstruction_up_to_bound", bound, names=names, reports=reports)


def graded_dimension(gens: Sequence[CoxPoly], grading: Grading, D: Sequence[int],
                     product_bound: Optional[int] = None) -> int:
    """``dim`` of the span of generator products of degree ``D`` (at most ``product_bound`` factors)."""
    degrees = [graded_degree(f, grading) for f in gens]
    D = tuple(D)
    if not any(D):
        return 1
    alphas = [a for a in exponent_multisets(degrees, D) if product_bound is None or sum(a) <= product_bound]
    if not alphas:
        return 0
    cache: Dict[Exponents, CoxPoly] = {}
    polys = [_product(gens, a, cache) for a in alphas]
    rows, _ = _coefficient_rows(polys)
    return len(fraction_free_rref(rows)[1])
