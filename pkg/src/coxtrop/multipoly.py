"""Sparse polynomials in ``x1..xn, y1..yn`` with Laurent coefficients.

A monomial is a plain tuple of ``2n`` nonnegative exponents, x-block first:
``(a_1, ..., a_n, b_1, ..., b_n)`` stands for ``x^a y^b``.  The multigrading
puts ``deg(x_i) = deg(y_i) = e_i``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .laurent import INF, ONE, ZERO, LaurentPoly, RatFunc, Rational, format_laurent, poly_gcd
from .parse import parse_laurent

Monomial = Tuple[int, ...]


class InhomogeneousError(ValueError):
    def __init__(self, first, second):
        self.terms = (first, second)
        super().__init__(f"inhomogeneous polynomial: terms {first} and {second} have different degrees")


def unit_monomial(n: int) -> Monomial:
    return (0,) * (2 * n)


def var_x(n: int, i: int) -> Monomial:
    """Monomial ``x_i`` (1-based)."""
    m = [0] * (2 * n)
    m[i - 1] = 1
    return tuple(m)


def var_y(n: int, i: int) -> Monomial:
    m = [0] * (2 * n)
    m[n + i - 1] = 1
    return tuple(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(p + q for p, q in zip(a, b))


def mono_degree(m: Monomial, n: int) -> Tuple[int, ...]:
    return tuple(m[i] + m[n + i] for i in range(n))


def format_monomial(m: Monomial, n: int) -> str:
    parts = []
    for i, e in enumerate(m):
        if e:
            name = f"x{i + 1}" if i < n else f"y{i - n + 1}"
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def _sorted_terms(terms: Mapping[Monomial, object]) -> List[Tuple[Monomial, object]]:
    return sorted(terms.items(), key=lambda kv: kv[0], reverse=True)


class CoxPoly:
    """Immutable polynomial with :class:`LaurentPoly` coefficients."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Optional[Mapping[Monomial, object]] = None):
        self.n = n
        d: Dict[Monomial, LaurentPoly] = {}
        if terms:
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != 2 * n or any(e < 0 for e in m):
                    raise ValueError(f"bad monomial {m} for n={n}")
                c = LaurentPoly.coerce(c)
                if c:
                    s = d.get(m, ZERO) + c
                    if s:
                        d[m] = s
                    else:
                        d.pop(m, None)
        self._terms = d
        self._hash = None

    @classmethod
    def _raw(cls, n: int, d: Dict[Monomial, LaurentPoly]) -> "CoxPoly":
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = d
        obj._hash = None
        return obj

    @classmethod
    def x(cls, n: int, i: int) -> "CoxPoly":
        return cls._raw(n, {var_x(n, i): ONE})

    @classmethod
    def y(cls, n: int, i: int) -> "CoxPoly":
        return cls._raw(n, {var_y(n, i): ONE})

    @classmethod
    def constant(cls, n: int, c) -> "CoxPoly":
        return cls(n, {unit_monomial(n): c})

    @classmethod
    def monomial(cls, n: int, m: Monomial, c=ONE) -> "CoxPoly":
        return cls(n, {m: c})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, LaurentPoly]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Monomial, LaurentPoly]]:
        return _sorted_terms(self._terms)

    def monomials(self) -> List[Monomial]:
        return [m for m, _ in self.items()]

    def coefficient(self, m: Monomial) -> LaurentPoly:
        return self._terms.get(tuple(m), ZERO)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_valuation(self):
        if not self._terms:
            return INF
        return min(c.valuation() for c in self._terms.values())

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "CoxPoly") -> None:
        if other.n != self.n:
            raise ValueError(f"ambient mismatch: n={self.n} vs n={other.n}")

    def __neg__(self) -> "CoxPoly":
        return CoxPoly._raw(self.n, {m: -c for m, c in self._terms.items()})

    def __add__(self, other) -> "CoxPoly":
        if not isinstance(other, CoxPoly):
            other = CoxPoly.constant(self.n, other)
        self._check(other)
        d = dict(self._terms)
        for m, c in other._terms.items():
            s = d.get(m, ZERO) + c
            if s:
                d[m] = s
            else:
                d.pop(m, None)
        return CoxPoly._raw(self.n, d)

    __radd__ = __add__

    def __sub__(self, other) -> "CoxPoly":
        if not isinstance(other, CoxPoly):
            other = CoxPoly.constant(self.n, other)
        return self + (-other)

    def __mul__(self, other) -> "CoxPoly":
        if not isinstance(other, CoxPoly):
            return self.scale(other)
        self._check(other)
        d: Dict[Monomial, LaurentPoly] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = mono_mul(ma, mb)
                prev = d.get(m)
                d[m] = ca * cb if prev is None else prev + ca * cb
        return CoxPoly._raw(self.n, {m: c for m, c in d.items() if c})

    def __rmul__(self, other) -> "CoxPoly":
        return self.scale(other)

    def scale(self, c) -> "CoxPoly":
        c = LaurentPoly.coerce(c)
        if not c:
            return CoxPoly._raw(self.n, {})
        return CoxPoly._raw(self.n, {m: v * c for m, v in self._terms.items()})

    def __pow__(self, k: int) -> "CoxPoly":
        if k < 0:
            raise ValueError("negative power")
        result = CoxPoly.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def map_coefficients(self, fn) -> "CoxPoly":
        return CoxPoly(self.n, {m: fn(c) for m, c in self._terms.items()})

    def divide_by_monomial(self, m: Monomial) -> "CoxPoly":
        """Exact division by a monomial; raises ``ArithmeticError`` if some term is not divisible."""
        m = tuple(m)
        d = {}
        for mono, c in self._terms.items():
            q = tuple(a - b for a, b in zip(mono, m))
            if any(e < 0 for e in q):
                raise ArithmeticError(f"term {format_monomial(mono, self.n)} not divisible by {format_monomial(m, self.n)}")
            d[q] = c
        return CoxPoly._raw(self.n, d)

    def exact_div_scalar(self, c: LaurentPoly) -> "CoxPoly":
        return CoxPoly._raw(self.n, {m: v.exact_div(c) for m, v in self._terms.items()})

    def content(self) -> LaurentPoly:
        """gcd of the coefficients in ``Q[t]``, times the common power of ``t``, made monic."""
        from .laurent import content_gcd
        g = content_gcd(self._terms.values())
        if not self._terms:
            return ZERO
        v = min(c.valuation() for c in self._terms.values())
        return g.shift(v - g.valuation())

    # -- comparison / display -------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoxPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"CoxPoly(n={self.n}, {format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def to_json(self) -> List[dict]:
        n = self.n
        return [{"x": list(m[:n]), "y": list(m[n:]), "coeff": format_laurent(c)} for m, c in self.items()]

    @classmethod
    def from_json(cls, n: int, data: Sequence[Mapping]) -> "CoxPoly":
        terms: Dict[Monomial, LaurentPoly] = {}
        for entry in data:
            m = tuple(entry["x"]) + tuple(entry["y"])
            terms[m] = terms.get(m, ZERO) + parse_laurent(entry["coeff"])
        return cls(n, terms)


def format_poly(f: CoxPoly) -> str:
    if not f._terms:
        return "0"
    out = []
    for m, c in f.items():
        mono = format_monomial(m, f.n)
        if len(c) == 1:
            cs = format_laurent(c)
            if mono == "1":
                out.append(cs)
            elif cs == "1":
                out.append(mono)
            elif cs == "-1":
                out.append("-" + mono)
            else:
                out.append(f"{cs}*{mono}")
        else:
            out.append(f"({format_laurent(c)})" + ("" if mono == "1" else f"*{mono}"))
    text = out[0]
    for piece in out[1:]:
        text += " - " + piece[1:] if piece.startswith("-") else " + " + piece
    return text


class ResiduePoly:
    """Polynomial over Q: what survives of a :class:`CoxPoly` at ``t = 0``."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Optional[Mapping[Monomial, Rational]] = None):
        self.n = n
        d: Dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                d[tuple(m)] = d.get(tuple(m), Fraction(0)) + c
        self._terms = {m: c for m, c in d.items() if c}

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Monomial, Fraction]]:
        return _sorted_terms(self._terms)

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def leading_monomial(self) -> Monomial:
        return self.items()[0][0]

    def __mul__(self, other) -> "ResiduePoly":
        if not isinstance(other, ResiduePoly):
            c = Fraction(other)
            return ResiduePoly(self.n, {m: v * c for m, v in self._terms.items()})
        d: Dict[Monomial, Fraction] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = mono_mul(ma, mb)
                d[m] = d.get(m, Fraction(0)) + ca * cb
        return ResiduePoly(self.n, d)

    __rmul__ = __mul__

    def __add__(self, other: "ResiduePoly") -> "ResiduePoly":
        d = dict(self._terms)
        for m, c in other._terms.items():
            d[m] = d.get(m, Fraction(0)) + c
        return ResiduePoly(self.n, d)

    def __neg__(self) -> "ResiduePoly":
        return ResiduePoly(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "ResiduePoly") -> "ResiduePoly":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ResiduePoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def scalar_ratio(self, other: "ResiduePoly") -> Optional[Fraction]:
        """``c`` with ``self == c * other``, or ``None`` if there is none."""
        if set(self._terms) != set(other._terms) or not self._terms:
            return None
        m0 = next(iter(self._terms))
        c = self._terms[m0] / other._terms[m0]
        if all(self._terms[m] == c * other._terms[m] for m in self._terms):
            return c
        return None

    def equal_up_to_scalar(self, other: "ResiduePoly") -> bool:
        return self.scalar_ratio(other) is not None

    def __repr__(self) -> str:
        return f"ResiduePoly(n={self.n}, {str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for m, c in self.items():
            mono = format_monomial(m, self.n)
            neg = c < 0
            a = -c if neg else c
            cs = str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
            body = mono if (a == 1 and mono != "1") else (cs if mono == "1" else f"{cs}*{mono}")
            if not out:
                out.append("-" + body if neg else body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def to_json(self) -> List[dict]:
        n = self.n
        return [{"x": list(m[:n]), "y": list(m[n:]),
                 "coeff": str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"}
                for m, c in self.items()]


def initial_form(f: CoxPoly) -> ResiduePoly:
    """Residues of the coefficients of minimal valuation, at their monomials."""
    if not f._terms:
        raise ValueError("initial form of the zero polynomial")
    w = f.min_valuation()
    return ResiduePoly(f.n, {m: c.residue() for m, c in f._terms.items() if c.valuation() == w})


def is_moneric_poly(f: CoxPoly) -> bool:
    return initial_form(f).is_monomial()


def multidegree(f: CoxPoly) -> Tuple[int, ...]:
    if not f._terms:
        raise ValueError("multidegree of the zero polynomial")
    items = f.items()
    first, _ = items[0]
    deg = mono_degree(first, f.n)
    for m, _ in items[1:]:
        if mono_degree(m, f.n) != deg:
            raise InhomogeneousError(format_monomial(first, f.n), format_monomial(m, f.n))
    return deg


def _as_laurent_vector(lam: Sequence, n: int) -> List[LaurentPoly]:
    if len(lam) != n:
        raise ValueError(f"shift vector has length {len(lam)}, expected {n}")
    out = []
    for v in lam:
        if isinstance(v, RatFunc):
            if not v.is_laurent():
                raise TypeError("nagata_shift needs Laurent entries; use is_nagata_invariant for fractions")
            v = v.num
        out.append(LaurentPoly.coerce(v))
    return out


def nagata_shift(f: CoxPoly, lam: Sequence) -> CoxPoly:
    """Substitute ``y_i -> y_i + lam_i x_i`` (``x`` fixed)."""
    n = f.n
    lam = _as_laurent_vector(lam, n)
    # expansion of (y_i + lam_i x_i)^b for each needed (i, b), cached
    cache: Dict[Tuple[int, int], List[Tuple[int, LaurentPoly]]] = {}

    def binom_row(i: int, b: int) -> List[Tuple[int, LaurentPoly]]:
        key = (i, b)
        if key not in cache:
            # sum_k C(b,k) lam^k x^k y^(b-k): list of (k, coeff)
            row = []
            c = 1
            p = ONE
            for k in range(b + 1):
                if k == 0 or lam[i]:
                    row.append((k, p * c))
                c = c * (b - k) // (k + 1)
                p = p * lam[i]
            cache[key] = row
        return cache[key]

    out: Dict[Monomial, LaurentPoly] = {}
    for m, coeff in f._terms.items():
        partial: List[Tuple[List[int], LaurentPoly]] = [(list(m), coeff)]
        for i in range(n):
            b = m[n + i]
            if not b or not lam[i]:
                continue
            nxt = []
            for mono, c in partial:
                for k, ck in binom_row(i, b):
                    mm = list(mono)
                    mm[i] += k
                    mm[n + i] -= k
                    nxt.append((mm, c * ck))
            partial = nxt
        for mono, c in partial:
            key = tuple(mono)
            out[key] = out.get(key, ZERO) + c
    return CoxPoly._raw(n, {m: c for m, c in out.items() if c})


def is_nagata_invariant(f: CoxPoly, lam: Sequence) -> bool:
    """Whether ``f`` is fixed by the shift ``lam``; entries may be fractions.

    Invariance under ``lam`` is equivalent to invariance under any nonzero
    multiple of ``lam``, so fractional entries are cleared by their common
    denominator before substituting.
    """
    rf = [RatFunc.coerce(v) for v in lam]
    den = ONE
    for v in rf:
        if not v.is_laurent():
            den = den * v.den.exact_div(poly_gcd(den, v.den))
    cleared = [(v * den).to_laurent() for v in rf]
    return nagata_shift(f, cleared) == f
