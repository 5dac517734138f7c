"""The 27 minimal generators of the Cox ring of a cubic surface.

For a ``3 x 6`` matrix ``A`` with columns in general position the Cox ring is
identified with the Nagata-invariant subring of ``k[x1..x6, y1..y6]``.  The
generators are the six ``x_i``, fifteen line sections ``L_ij`` and six conic
sections ``Q_m``.  The conic sections are built geometrically: the plane
conic through the five points other than ``a^(m)`` is pushed through
``g(z) -> g(l1, l2, l3) / prod_{j != m} x_j``.
"""

from __future__ import annotations

import itertools
import re
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .laurent import ONE, ZERO, LaurentPoly, content_gcd
from .linalg import fraction_free_rref, laurent_kernel
from .multipoly import (CoxPoly, initial_form, is_moneric_poly, multidegree, unit_monomial, var_x, var_y)
from .pluecker import (DegenerateConfigurationError, MinorTable, PointMatrix, genericity_report, subsets)

N_POINTS = 6


class GenericityWarning(UserWarning):
    pass


_KIND_ORDER = {"Exceptional": 0, "Line": 1, "Conic": 2}
_LABEL_RE = re.compile(r"^(Exceptional|Line|Conic)\((\d+)(?:,(\d+))?\)$")


@dataclass(frozen=True, order=False)
class GeneratorLabel:
    kind: str
    indices: Tuple[int, ...]
    n: int = N_POINTS

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        need = 2 if self.kind == "Line" else 1
        if len(self.indices) != need:
            raise ValueError(f"{self.kind} label takes {need} indices")
        if any(not 1 <= i <= self.n for i in self.indices):
            raise ValueError(f"indices of {self.kind} must lie in 1..{self.n}")
        if need == 2 and self.indices[0] >= self.indices[1]:
            raise ValueError("Line indices must be strictly increasing")

    @classmethod
    def exceptional(cls, i: int) -> "GeneratorLabel":
        return cls("Exceptional", (i,))

    @classmethod
    def line(cls, i: int, j: int) -> "GeneratorLabel":
        return cls("Line", (i, j))

    @classmethod
    def conic(cls, m: int) -> "GeneratorLabel":
        return cls("Conic", (m,))

    @classmethod
    def parse(cls, text: str) -> "GeneratorLabel":
        match = _LABEL_RE.match(text.replace(" ", ""))
        if not match:
            raise ValueError(f"bad generator label {text!r}")
        kind = match.group(1)
        idx = tuple(int(g) for g in match.groups()[1:] if g is not None)
        return cls(kind, idx)

    @property
    def picard_degree(self) -> Tuple[int, ...]:
        """Degree in the ``Z^n`` grading with ``deg x_i = deg y_i = e_i``."""
        n = self.n
        if self.kind == "Exceptional":
            (i,) = self.indices
            return tuple(int(k == i) for k in range(1, n + 1))
        if self.kind == "Line":
            return tuple(int(k not in self.indices) for k in range(1, n + 1))
        (m,) = self.indices
        return tuple(1 + int(k == m) for k in range(1, n + 1))

    @property
    def divisor_class(self) -> Tuple[int, ...]:
        """Coefficients ``(d_0, d_1, ..., d_n)`` of ``d_0 H + sum d_i E_i``."""
        n = self.n
        if self.kind == "Exceptional":
            (i,) = self.indices
            return (0,) + tuple(int(k == i) for k in range(1, n + 1))
        if self.kind == "Line":
            return (1,) + tuple(-int(k in self.indices) for k in range(1, n + 1))
        (m,) = self.indices
        return (2,) + tuple(-int(k != m) for k in range(1, n + 1))

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.indices)

    def __lt__(self, other: "GeneratorLabel") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return f"{self.kind}({','.join(map(str, self.indices))})"


def all_labels(n: int = N_POINTS) -> List[GeneratorLabel]:
    labels = [GeneratorLabel.exceptional(i) for i in range(1, n + 1)]
    labels += [GeneratorLabel.line(i, j) for i, j in itertools.combinations(range(1, n + 1), 2)]
    labels += [GeneratorLabel.conic(m) for m in range(1, n + 1)]
    return labels


def _x_product(n: int, exclude: Iterable[int] = (), extra: Dict[int, int] = None) -> List[int]:
    ex = set(exclude)
    m = [0] * (2 * n)
    for s in range(1, n + 1):
        if s not in ex:
            m[s - 1] = 1
    for s, e in (extra or {}).items():
        m[s - 1] += e
    return m


def build_l(A: PointMatrix) -> Tuple[CoxPoly, ...]:
    """``l_i = sum_j a_ij y_j prod_{s != j} x_s`` for each row ``i``."""
    n = A.cols
    out = []
    for row in A.entries:
        terms = {}
        for j in range(1, n + 1):
            m = _x_product(n, exclude=(j,))
            m[n + j - 1] = 1
            terms[tuple(m)] = row[j - 1]
        out.append(CoxPoly(n, terms))
    return tuple(out)


def exceptional_generator(A: PointMatrix, i: int) -> CoxPoly:
    if not 1 <= i <= A.cols:
        raise ValueError(f"index {i} out of range")
    return CoxPoly.x(A.cols, i)


def line_generator(A: PointMatrix, i: int, j: int, minors: Optional[MinorTable] = None) -> CoxPoly:
    """``-sum_{k != i,j} p_ijk y_k prod_{s not in {i,j,k}} x_s``."""
    n = A.cols
    if not (1 <= i < j <= n):
        raise ValueError(f"need 1 <= i < j <= {n}, got ({i}, {j})")
    p = minors or MinorTable(A)
    terms = {}
    vanishing = []
    for k in range(1, n + 1):
        if k in (i, j):
            continue
        c = p(i, j, k)
        if not c:
            vanishing.append(k)
        m = _x_product(n, exclude=(i, j, k))
        m[n + k - 1] = 1
        terms[tuple(m)] = -c
    if vanishing:
        warnings.warn(f"points {i}, {j}, {vanishing} are collinear", GenericityWarning, stacklevel=2)
    f = CoxPoly(n, terms)
    if not f:
        raise DegenerateConfigurationError(f"line generator L{i}{j} vanishes")
    return f


# -- conics ------------------------------------------------------------------

# monomials z_u z_v of a ternary quadric, u <= v (0-based)
_QUAD = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))


def conic_through(points: Sequence[Sequence[LaurentPoly]]) -> Dict[Tuple[int, int], LaurentPoly]:
    """Coefficients ``q_uv`` of the conic through five points, Laurent-polynomial scaled."""
    rows = [[pt[u] * pt[v] for u, v in _QUAD] for pt in points]
    _, pivots, _ = fraction_free_rref(rows)
    if len(pivots) < 5:
        raise DegenerateConfigurationError("the five points do not determine a unique conic")
    (q,) = laurent_kernel(rows)
    return dict(zip(_QUAD, q))


def primitive_normalize(f: CoxPoly) -> CoxPoly:
    """Canonical representative of ``f`` up to a nonzero scalar of Q(t).

    Coefficients end up in Z[t] with minimal valuation 0, polynomial content
    1 and integer content 1, and the first term (in the fixed monomial order)
    has positive lowest coefficient.
    """
    if not f:
        return f
    g = content_gcd(c for _, c in f.items())
    if len(g) > 1:
        f = f.exact_div_scalar(g)
    vmin = f.min_valuation()
    coeffs = [c.shift(-vmin) for _, c in f.items()]
    dens = 1
    nums = 0
    for c in coeffs:
        for _, v in c.items():
            v = Fraction(v)
            dens = dens * v.denominator // gcd(dens, v.denominator)
    for c in coeffs:
        for _, v in c.items():
            nums = gcd(nums, int(Fraction(v) * dens))
    scale = Fraction(dens, nums)
    first = coeffs[0]
    if first.residue() < 0:
        scale = -scale
    return CoxPoly(f.n, {m: c * scale for (m, _), c in zip(f.items(), coeffs)})


def conic_generator(A: PointMatrix, m: int, normalize: bool = True) -> CoxPoly:
    """Section of ``2H - sum_{j != m} E_j`` in degree ``e_m + sum_i e_i``."""
    if A.rows != 3:
        raise ValueError("conic generators need a 3-row matrix")
    n = A.cols
    if not 1 <= m <= n:
        raise ValueError(f"index {m} out of range")
    others = [A.column(j) for j in range(1, n + 1) if j != m]
    if len(others) != 5:
        raise ValueError("conic generators are defined for six points")
    q = conic_through(others)
    l = build_l(A)
    g = CoxPoly(n, {})
    for (u, v), c in q.items():
        if c:
            g = g + (l[u] * l[v]).scale(c)
    div = [0] * (2 * n)
    for j in range(1, n + 1):
        if j != m:
            div[j - 1] = 1
    try:
        f = g.divide_by_monomial(tuple(div))
    except ArithmeticError as exc:
        raise AssertionError(f"conic image not divisible by prod x_j: {exc}") from exc
    return primitive_normalize(f) if normalize else f


def g6_explicit(A: PointMatrix) -> CoxPoly:
    """The sixteen-term conic generator ``G_6`` written in minors of ``A``."""
    if (A.rows, A.cols) != (3, 6):
        raise ValueError("G6 formula needs a 3x6 matrix")
    p = MinorTable(A)
    n = 6

    def mono(ys, xs) -> Tuple[int, ...]:
        m = [0] * 12
        for k in xs:
            m[k - 1] += 1
        for k in ys:
            m[6 + k - 1] += 1
        return tuple(m)

    terms = {}

    def add(coeff, ys, xs):
        key = mono(ys, xs)
        terms[key] = terms.get(key, ZERO) + coeff

    add(p(1, 2, 3) * p(1, 2, 4) * p(1, 2, 5) * p(3, 4, 5), (1, 2), (3, 4, 5, 6, 6))
    add(p(1, 2, 3) * p(1, 3, 5) * p(1, 3, 4) * p(2, 4, 5), (1, 3), (2, 4, 5, 6, 6))
    add(p(1, 2, 4) * p(1, 3, 4) * p(1, 4, 5) * p(2, 3, 5), (1, 4), (2, 3, 5, 6, 6))
    add(p(1, 2, 5) * p(1, 3, 5) * p(1, 4, 5) * p(2, 3, 4), (1, 5), (2, 3, 4, 6, 6))
    add(p(1, 2, 3) * p(2, 3, 4) * p(2, 3, 5) * p(1, 4, 5), (2, 3), (1, 4, 5, 6, 6))
    add(p(1, 2, 4) * p(2, 3, 4) * p(2, 4, 5) * p(1, 3, 5), (2, 4), (1, 3, 5, 6, 6))
    add(p(1, 2, 5) * p(2, 3, 5) * p(2, 4, 5) * p(1, 3, 4), (2, 5), (1, 3, 4, 6, 6))
    add(p(1, 3, 4) * p(2, 3, 4) * p(3, 4, 5) * p(1, 2, 5), (3, 4), (1, 2, 5, 6, 6))
    add(p(1, 3, 5) * p(2, 3, 5) * p(3, 4, 5) * p(1, 2, 4), (3, 5), (1, 2, 4, 6, 6))
    add(p(1, 4, 5) * p(2, 4, 5) * p(3, 4, 5) * p(1, 2, 3), (4, 5), (1, 2, 3, 6, 6))
    for ys, xs, c in g6_binomial_coefficients(p):
        add(c, ys, xs)
    return CoxPoly(n, terms)


def g6_binomial_terms(p: MinorTable):
    """The six binomial coefficients of ``G_6`` as ``(ys, xs, (plus, minus))`` monomial pairs."""
    return [
        ((1, 6), (2, 3, 4, 5, 6), (p(1, 2, 4) * p(2, 3, 5) * p(1, 3, 6) * p(1, 4, 5),
                                   -(p(1, 2, 3) * p(2, 4, 5) * p(1, 4, 6) * p(1, 3, 5)))),
        ((2, 6), (1, 3, 4, 5, 6), (p(1, 2, 4) * p(1, 3, 5) * p(2, 3, 6) * p(2, 4, 5),
                                   -(p(1, 2, 3) * p(1, 4, 5) * p(2, 4, 6) * p(2, 3, 5)))),
        ((3, 6), (1, 2, 4, 5, 6), (p(1, 3, 4) * p(1, 2, 5) * p(2, 3, 6) * p(3, 4, 5),
                                   p(1, 2, 3) * p(1, 4, 5) * p(3, 4, 6) * p(2, 3, 5))),
        ((4, 6), (1, 2, 3, 5, 6), (p(1, 2, 4) * p(1, 3, 5) * p(3, 4, 6) * p(2, 4, 5),
                                   -(p(1, 3, 4) * p(1, 2, 5) * p(2, 4, 6) * p(3, 4, 5)))),
        ((5, 6), (1, 2, 3, 4, 6), (p(1, 2, 5) * p(1, 3, 4) * p(3, 5, 6) * p(2, 4, 5),
                                   -(p(1, 3, 5) * p(1, 2, 4) * p(2, 5, 6) * p(3, 4, 5)))),
        ((6, 6), (1, 2, 3, 4, 5), (p(1, 2, 4) * p(1, 3, 5) * p(2, 3, 6) * p(4, 5, 6),
                                   -(p(1, 2, 3) * p(1, 4, 5) * p(2, 4, 6) * p(3, 5, 6)))),
    ]


def g6_binomial_coefficients(p: MinorTable):
    return [(ys, xs, a + b) for ys, xs, (a, b) in g6_binomial_terms(p)]


def g6_y2y6_coefficient(A: PointMatrix) -> Tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    """``(first monomial, second monomial, their difference)`` for the ``y2 y6`` term."""
    _, _, (a, b) = g6_binomial_terms(MinorTable(A))[1]
    return a, -b, a + b


def scalar_ratio(f: CoxPoly, g: CoxPoly) -> Optional[Tuple[LaurentPoly, LaurentPoly]]:
    """``(a, b)`` with ``b * f == a * g`` (so ``f = (a/b) g``), or ``None`` if not proportional."""
    if f.n != g.n or set(f.monomials()) != set(g.monomials()) or not f:
        return None
    m0 = f.monomials()[0]
    a, b = f.coefficient(m0), g.coefficient(m0)
    for m in f.monomials():
        if f.coefficient(m) * b != g.coefficient(m) * a:
            return None
    return a, b


def proportional(f: CoxPoly, g: CoxPoly) -> bool:
    return scalar_ratio(f, g) is not None


@dataclass
class GeneratorSet:
    matrix: PointMatrix
    items: Dict[GeneratorLabel, CoxPoly] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.items)

    def __getitem__(self, label) -> CoxPoly:
        if isinstance(label, str):
            label = GeneratorLabel.parse(label)
        return self.items[label]

    def labels(self) -> List[GeneratorLabel]:
        return sorted(self.items)

    def sorted_items(self) -> List[Tuple[GeneratorLabel, CoxPoly]]:
        return [(lab, self.items[lab]) for lab in self.labels()]

    def to_json(self) -> List[dict]:
        out = []
        for lab, f in self.sorted_items():
            inf = initial_form(f)
            out.append({
                "label": str(lab),
                "picard_degree": list(lab.picard_degree),
                "polynomial": f.to_json(),
                "initial_form": inf.to_json(),
                "moneric": inf.is_monomial(),
            })
        return out


def all_generators(A: PointMatrix) -> GeneratorSet:
    """The 27 labelled generators; warns (does not fail) on non-generic input."""
    if (A.rows, A.cols) != (3, N_POINTS):
        raise ValueError("all_generators needs a 3x6 matrix")
    report = genericity_report(A)
    if not report.all():
        warnings.warn(f"configuration is not in general position: {report}", GenericityWarning, stacklevel=2)
    p = MinorTable(A)
    items: Dict[GeneratorLabel, CoxPoly] = {}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", GenericityWarning)
        for i in range(1, 7):
            items[GeneratorLabel.exceptional(i)] = exceptional_generator(A, i)
        for i, j in itertools.combinations(range(1, 7), 2):
            items[GeneratorLabel.line(i, j)] = line_generator(A, i, j, p)
    for m in range(1, 7):
        items[GeneratorLabel.conic(m)] = conic_generator(A, m)
    gs = GeneratorSet(A, items)
    for lab, f in items.items():
        if multidegree(f) != lab.picard_degree:
            raise AssertionError(f"{lab} has degree {multidegree(f)}, expected {lab.picard_degree}")
    return gs
