"""Point matrices over Q[t, t^-1], their maximal minors and tropical data."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .laurent import INF, ONE, ZERO, LaurentPoly, RatFunc, format_laurent
from .linalg import RankDeficientError, fraction_free_rref, laurent_kernel
from .parse import parse_laurent


class DegenerateConfigurationError(ValueError):
    """The point configuration violates a genericity condition an operation needs."""


@dataclass(frozen=True)
class PointMatrix:
    """An ``r x n`` matrix whose columns are points of projective ``(r-1)``-space."""

    entries: Tuple[Tuple[LaurentPoly, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(LaurentPoly.coerce(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        r = len(rows)
        if r not in (2, 3):
            raise ValueError(f"point matrices have 2 or 3 rows, got {r}")
        n = len(rows[0])
        if any(len(row) != n for row in rows):
            raise ValueError("ragged matrix")
        if n < r:
            raise ValueError(f"need at least {r} columns, got {n}")
        for j in range(n):
            if all(not rows[i][j] for i in range(r)):
                raise ValueError(f"column {j + 1} is zero")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, ij) -> LaurentPoly:
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> Tuple[LaurentPoly, ...]:
        """Column ``j`` (1-based)."""
        return tuple(row[j - 1] for row in self.entries)

    def scale_column(self, j: int, c) -> "PointMatrix":
        c = LaurentPoly.coerce(c)
        return PointMatrix(tuple(tuple(v * c if k == j - 1 else v for k, v in enumerate(row))
                                 for row in self.entries))

    def scale(self, c) -> "PointMatrix":
        c = LaurentPoly.coerce(c)
        return PointMatrix(tuple(tuple(v * c for v in row) for row in self.entries))

    def with_entry(self, i: int, j: int, value) -> "PointMatrix":
        rows = [list(r) for r in self.entries]
        rows[i - 1][j - 1] = LaurentPoly.coerce(value)
        return PointMatrix(tuple(tuple(r) for r in rows))

    def permute_columns(self, perm: Sequence[int]) -> "PointMatrix":
        """New matrix whose column ``k`` is old column ``perm[k-1]``."""
        return PointMatrix(tuple(tuple(row[p - 1] for p in perm) for row in self.entries))

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        lines += [", ".join(format_laurent(v) for v in row) for row in self.entries]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "entries": [[format_laurent(v) for v in row] for row in self.entries]}

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "PointMatrix":
        return cls(tuple(tuple(parse_laurent(v) if isinstance(v, str) else LaurentPoly.coerce(v) for v in row)
                         for row in rows))

    @classmethod
    def from_text(cls, text: str) -> "PointMatrix":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines:
            raise ValueError("empty matrix file")
        header = lines[0].split()
        if len(header) != 2:
            raise ValueError("first line must be 'r n'")
        r, n = int(header[0]), int(header[1])
        body = lines[1:]
        if len(body) != r:
            raise ValueError(f"expected {r} rows, found {len(body)}")
        rows = []
        for k, line in enumerate(body, start=1):
            cells = [c.strip() for c in line.split(",")]
            if len(cells) != n:
                raise ValueError(f"row {k} has {len(cells)} entries, expected {n}")
            rows.append(cells)
        return cls.from_rows(rows)

    @classmethod
    def from_json(cls, data) -> "PointMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        M = cls.from_rows(data["entries"])
        if M.rows != data["rows"] or M.cols != data["cols"]:
            raise ValueError("declared shape does not match entries")
        return M

    @classmethod
    def parse(cls, text: str) -> "PointMatrix":
        """Either the text format or the JSON format, detected by the first character."""
        if text.lstrip().startswith("{"):
            return cls.from_json(text)
        return cls.from_text(text)

    def __str__(self) -> str:
        return self.to_text()


def _monomial_matrix(expo, signs=None) -> PointMatrix:
    rows = []
    for i, row in enumerate(expo):
        rows.append(tuple(LaurentPoly.monomial(e, -1 if signs and (i + 1, j + 1) in signs else 1)
                          for j, e in enumerate(row)))
    return PointMatrix(tuple(rows))


G_EXPONENTS = ((4, 1, 8, 3, 9, 0),
               (11, 7, 1, 7, 6, 0),
               (9, 0, 5, 9, 11, 6))

MATRIX_G = _monomial_matrix(G_EXPONENTS)
# sign of entry (1,4) flipped
MATRIX_G_PRIME = _monomial_matrix(G_EXPONENTS, {(1, 4)})
# first column of G multiplied by t^-4
MATRIX_G_DOUBLE_PRIME = _monomial_matrix(((0, 1, 8, 3, 9, 0),
                                          (7, 7, 1, 7, 6, 0),
                                          (5, 0, 5, 9, 11, 6)))

BUILTINS: Dict[str, PointMatrix] = {
    "G": MATRIX_G,
    "G'": MATRIX_G_PRIME,
    "Gp": MATRIX_G_PRIME,
    "G''": MATRIX_G_DOUBLE_PRIME,
    "Gpp": MATRIX_G_DOUBLE_PRIME,
}


def veronese_matrix(a: Sequence) -> PointMatrix:
    """Points ``(1, a_i, a_i^2)`` on the conic ``xz = y^2``."""
    a = [LaurentPoly.coerce(v) for v in a]
    return PointMatrix((tuple(ONE for _ in a), tuple(a), tuple(v * v for v in a)))


# -- minors --------------------------------------------------------------

def subsets(n: int, r: int) -> List[Tuple[int, ...]]:
    """All ``r``-subsets of ``1..n`` in lexicographic order."""
    return list(itertools.combinations(range(1, n + 1), r))


def _det2(a, b, c, d):
    return a * d - b * c


def _det_cols(M: PointMatrix, cols: Sequence[int]) -> LaurentPoly:
    E = M.entries
    if M.rows == 2:
        i, j = cols
        return _det2(E[0][i - 1], E[0][j - 1], E[1][i - 1], E[1][j - 1])
    i, j, k = (c - 1 for c in cols)
    a, b, c = E
    return (a[i] * (b[j] * c[k] - b[k] * c[j])
            - a[j] * (b[i] * c[k] - b[k] * c[i])
            + a[k] * (b[i] * c[j] - b[j] * c[i]))


def minor(M: PointMatrix, S: Sequence[int]) -> LaurentPoly:
    """Determinant of the columns ``S`` (sorted, 1-based)."""
    S = tuple(S)
    if len(S) != M.rows or any(not 1 <= s <= M.cols for s in S) or any(a >= b for a, b in zip(S, S[1:])):
        raise ValueError(f"bad column subset {S} for a {M.rows}x{M.cols} matrix")
    return _det_cols(M, S)


def permutation_sign(seq: Sequence[int]) -> int:
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


class MinorTable:
    """Cached maximal minors with the unsorted-index sign convention.

    ``p(i, j, k)`` for unsorted distinct indices is the sign of the sorting
    permutation times the sorted minor; repeated indices give zero.
    """

    def __init__(self, M: PointMatrix):
        self.matrix = M
        self._cache: Dict[Tuple[int, ...], LaurentPoly] = {}

    def sorted_minor(self, S: Tuple[int, ...]) -> LaurentPoly:
        v = self._cache.get(S)
        if v is None:
            v = minor(self.matrix, S)
            self._cache[S] = v
        return v

    def __call__(self, *idx: int) -> LaurentPoly:
        if len(set(idx)) != len(idx):
            return ZERO
        S = tuple(sorted(idx))
        v = self.sorted_minor(S)
        return v if permutation_sign(idx) > 0 else -v


@dataclass(frozen=True)
class PlueckerVector:
    index_order: Tuple[Tuple[int, ...], ...]
    values: Tuple[LaurentPoly, ...]

    def __getitem__(self, S) -> LaurentPoly:
        return self.values[self.index_order.index(tuple(S))]

    def as_dict(self) -> Dict[Tuple[int, ...], LaurentPoly]:
        return dict(zip(self.index_order, self.values))


@dataclass(frozen=True)
class TropicalPoint:
    """Valuations of the maximal minors (``+val`` convention), lexicographic order."""

    d_values: Tuple
    conic_val: Optional[object] = None
    rank: int = 3

    @property
    def n(self) -> int:
        from math import comb
        k = len(self.d_values)
        n = self.rank
        while comb(n, self.rank) < k:
            n += 1
        if comb(n, self.rank) != k:
            raise ValueError(f"{k} coordinates is not a binomial coefficient C(n,{self.rank})")
        return n

    def index_order(self) -> List[Tuple[int, ...]]:
        return subsets(self.n, self.rank)

    def as_dict(self) -> Dict[Tuple[int, ...], object]:
        return dict(zip(self.index_order(), self.d_values))

    def is_finite(self) -> bool:
        return all(v is not INF for v in self.d_values) and self.conic_val is not INF

    def extended(self) -> Tuple:
        """The minor valuations followed by ``val(C)`` when present."""
        return tuple(self.d_values) + (() if self.conic_val is None else (self.conic_val,))

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.d_values) + ")"


def pluecker_vector(M: PointMatrix) -> PlueckerVector:
    order = tuple(subsets(M.cols, M.rows))
    return PlueckerVector(order, tuple(minor(M, S) for S in order))


def conic_binomial(M: PointMatrix) -> LaurentPoly:
    """``p134 p156 p235 p246 - p135 p146 p234 p256``."""
    if M.rows != 3 or M.cols != 6:
        raise ValueError("the conic binomial is defined for 3x6 matrices")
    p = MinorTable(M)
    return (p(1, 3, 4) * p(1, 5, 6) * p(2, 3, 5) * p(2, 4, 6)
            - p(1, 3, 5) * p(1, 4, 6) * p(2, 3, 4) * p(2, 5, 6))


def tropical_pluecker(M: PointMatrix) -> TropicalPoint:
    pv = pluecker_vector(M)
    cv = conic_binomial(M).valuation() if (M.rows, M.cols) == (3, 6) else None
    return TropicalPoint(tuple(v.valuation() for v in pv.values), cv, M.rows)


@dataclass(frozen=True)
class GenericityReport:
    pairwise_independent: bool
    no_three_collinear: bool
    off_conic: bool

    def all(self) -> bool:
        return self.pairwise_independent and self.no_three_collinear and self.off_conic


def genericity_report(M: PointMatrix) -> GenericityReport:
    if M.rows != 3:
        raise ValueError("genericity report needs a 3-row matrix")
    n = M.cols
    pairwise = True
    for i, j in itertools.combinations(range(1, n + 1), 2):
        a, b = M.column(i), M.column(j)
        cross = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
        if not any(cross):
            pairwise = False
            break
    p = MinorTable(M)
    collinear_free = all(p.sorted_minor(S) for S in subsets(n, 3))
    off_conic = True
    for six in itertools.combinations(range(1, n + 1), 6):
        if not conic_binomial(M.permute_columns(six)):
            off_conic = False
            break
    return GenericityReport(pairwise, collinear_free, off_conic)


def kernel_basis(M: PointMatrix) -> List[List[RatFunc]]:
    """``n - r`` vectors spanning the kernel of ``M`` over Q(t).

    Computed fraction-free, so every entry is in fact a Laurent polynomial.
    """
    rank = len(fraction_free_rref(M.entries)[1])
    if rank < M.rows:
        raise RankDeficientError(f"matrix has rank {rank} < {M.rows}")
    return [[RatFunc(v) for v in vec] for vec in laurent_kernel(M.entries)]


def laurent_kernel_basis(M: PointMatrix) -> List[List[LaurentPoly]]:
    return [[v.num for v in vec] for vec in kernel_basis(M)]


def mat_vec(M: PointMatrix, v: Sequence) -> List[RatFunc]:
    return [sum((RatFunc.coerce(a) * RatFunc.coerce(b) for a, b in zip(row, v)), RatFunc(ZERO))
            for row in M.entries]
