"""Exact linear algebra over Q[t, t^-1], Q(t), Q and Z.

Matrices are lists of rows.  Nothing here uses floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .laurent import INF, ONE, ZERO, LaurentPoly, RatFunc


class RankDeficientError(ValueError):
    pass


def _laurent_matrix(M) -> List[List[LaurentPoly]]:
    return [[LaurentPoly.coerce(v) for v in row] for row in M]


def _pick_pivot(A, rows, c):
    best, best_val = None, INF
    for i in rows:
        v = A[i][c].valuation()
        if v < best_val:
            best, best_val = i, v
    return best


def fraction_free_rref(M) -> Tuple[List[List[LaurentPoly]], List[int], LaurentPoly]:
    """Fraction-free Gauss-Jordan elimination.

    Returns ``(R, pivots, d)`` where row ``k`` of ``R`` has ``d`` at column
    ``pivots[k]`` and zeros at the other pivot columns; rows past
    ``len(pivots)`` are zero.  Every division performed is exact.  Pivots are
    chosen by minimal valuation within the current column.
    """
    A = _laurent_matrix(M)
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    prev = ONE
    r = 0
    pivots: List[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        p = _pick_pivot(A, range(r, nrows), c)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        prow = A[r]
        for i in range(nrows):
            if i == r:
                continue
            row = A[i]
            f = row[c]
            new = []
            for j in range(ncols):
                if not row[j] and (not f or not prow[j]):
                    new.append(ZERO)
                    continue
                val = piv * row[j]
                if f:
                    val = val - f * prow[j]
                new.append(val.exact_div(prev) if prev != ONE else val)
            A[i] = new
        prev = piv
        pivots.append(c)
        r += 1
    return A, pivots, prev


def laurent_rank(M) -> int:
    return len(fraction_free_rref(M)[1])


def laurent_det(M) -> LaurentPoly:
    """Determinant by fraction-free Bareiss elimination."""
    A = _laurent_matrix(M)
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        p = _pick_pivot(A, range(k, n), k)
        if p is None:
            return ZERO
        if p != k:
            A[k], A[p] = A[p], A[k]
            sign = -sign
        piv = A[k][k]
        for i in range(k + 1, n):
            f = A[i][k]
            for j in range(k + 1, n):
                A[i][j] = (piv * A[i][j] - f * A[k][j]).exact_div(prev)
            A[i][k] = ZERO
        prev = piv
    return A[n - 1][n - 1] * sign


def laurent_kernel(M) -> List[List[LaurentPoly]]:
    """Basis of the right kernel of ``M`` with Laurent polynomial entries."""
    A = _laurent_matrix(M)
    ncols = len(A[0]) if A else 0
    R, pivots, d = fraction_free_rref(A)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = [ZERO] * ncols
        v[f] = d
        for k, pc in enumerate(pivots):
            v[pc] = -R[k][f]
        basis.append(_primitive_vector(v))
    return basis


def _primitive_vector(v: List[LaurentPoly]) -> List[LaurentPoly]:
    from .laurent import content_gcd
    g = content_gcd(v)
    nz = [x for x in v if x]
    vmin = min(x.valuation() for x in nz)
    if len(g) > 1:
        v = [x.exact_div(g) for x in v]
        vmin = min(x.valuation() for x in v if x)
    return [x.shift(-vmin) for x in v]


def ratfunc_rref(M) -> Tuple[List[List[RatFunc]], List[int]]:
    """Reduced row echelon form over Q(t)."""
    A = [[RatFunc.coerce(v) for v in row] for row in M]
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    r = 0
    pivots = []
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = A[r][c].inverse()
        A[r] = [v * inv for v in A[r]]
        for i in range(nrows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return A, pivots


# -- rational linear algebra -------------------------------------------------

def rational_rref(M) -> Tuple[List[List[Fraction]], List[int]]:
    A = [[Fraction(v) for v in row] for row in M]
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [v * inv for v in A[r]]
        for i in range(nrows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


def rational_nullspace(M) -> List[List[Fraction]]:
    R, pivots = rational_rref(M)
    ncols = len(M[0]) if M else 0
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for k, pc in enumerate(pivots):
            v[pc] = -R[k][f]
        basis.append(v)
    return basis


def rational_rank(M) -> int:
    return len(rational_rref(M)[1]) if M else 0


def solve_rational(A, b) -> Optional[List[Fraction]]:
    """A solution of ``A x = b`` if the columns of ``A`` are independent and one exists."""
    aug = [list(row) + [bv] for row, bv in zip(A, b)]
    R, pivots = rational_rref(aug)
    ncols = len(A[0])
    if ncols in pivots:
        return None
    if len(pivots) < ncols:
        raise RankDeficientError("solution is not unique")
    x = [Fraction(0)] * ncols
    for k, pc in enumerate(pivots):
        x[pc] = R[k][ncols]
    return x


# -- integer lattices --------------------------------------------------------

def integer_echelon(rows: Sequence[Sequence[int]]) -> List[List[int]]:
    """Row echelon basis of the Z-span of ``rows`` (Hermite-style, no reduction above pivots)."""
    A = [list(map(int, r)) for r in rows if any(r)]
    if not A:
        return []
    ncols = len(A[0])
    out: List[List[int]] = []
    for c in range(ncols):
        while True:
            nz = [r for r in A if r[c]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[c]))
            base = nz[0]
            for r in nz[1:]:
                q = r[c] // base[c]
                for j in range(ncols):
                    r[j] -= q * base[j]
            A = [r for r in A if any(r)]
        nz = [r for r in A if r[c]]
        if nz:
            piv = nz[0]
            if piv[c] < 0:
                piv = [-v for v in piv]
            out.append(piv)
            A = [r for r in A if r is not nz[0]]
    return out


def in_lattice(vec: Sequence[int], echelon: Sequence[Sequence[int]]) -> bool:
    v = list(vec)
    for row in echelon:
        c = next(j for j, x in enumerate(row) if x)
        if any(v[:c]):
            return False
        q, r = divmod(v[c], row[c])
        if r:
            return False
        v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


# -- cone membership ---------------------------------------------------------

def in_cone(vec: Sequence, generators: Sequence[Sequence]) -> bool:
    """Whether ``vec`` is a nonnegative rational combination of ``generators``.

    Phase-one simplex in exact arithmetic with Bland's rule.
    """
    m = len(vec)
    N = len(generators)
    if not any(vec):
        return True
    if N == 0:
        return False
    # rows: constraints sum_g lam_g g_i = vec_i, made nonnegative on the right
    rows = []
    for i in range(m):
        coeffs = [Fraction(g[i]) for g in generators]
        rhs = Fraction(vec[i])
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
        rows.append(coeffs + [Fraction(0)] * m + [rhs])
        rows[-1][N + i] = Fraction(1)
    nvar = N + m
    basis = [N + i for i in range(m)]
    # objective: minimize sum of artificials == maximize -sum
    obj = [Fraction(0)] * (nvar + 1)
    for row in rows:
        for j in range(nvar + 1):
            obj[j] -= row[j]
    for j in range(N, N + m):
        obj[j] = Fraction(0)
    while True:
        enter = next((j for j in range(nvar) if obj[j] < 0), None)
        if enter is None:
            break
        best, best_ratio = None, None
        for i, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best_ratio or (ratio == best_ratio and basis[i] < basis[best]):
                    best, best_ratio = i, ratio
        if best is None:
            break
        prow = rows[best]
        inv = 1 / prow[enter]
        prow = [v * inv for v in prow]
        rows[best] = prow
        for i, row in enumerate(rows):
            if i != best and row[enter]:
                f = row[enter]
                rows[i] = [a - f * b for a, b in zip(row, prow)]
        if obj[enter]:
            f = obj[enter]
            obj = [a - f * b for a, b in zip(obj, prow)]
        basis[best] = enter
    return obj[-1] == 0
