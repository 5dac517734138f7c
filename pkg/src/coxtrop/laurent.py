"""Exact Laurent polynomials in ``t`` over the rationals, and their fractions.

Coefficients are kept as Python ``int`` whenever they are integral and as
:class:`fractions.Fraction` otherwise; both are exact, compare equal across
types and hash identically, so mixing them is harmless and keeps the common
integer case fast.

The valuation of a nonzero Laurent polynomial is its lowest exponent; the
zero polynomial has valuation :data:`INF`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from numbers import Rational as _RationalABC
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

Rational = Union[int, Fraction]


@total_ordering
class _PlusInfinity:
    """Valuation of zero; compares greater than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("coxtrop.INF")

    def __lt__(self, other) -> bool:
        return False

    def __gt__(self, other) -> bool:
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __reduce__(self):
        return (_PlusInfinity, ())


INF = _PlusInfinity()


def is_inf(v) -> bool:
    return v is INF


def _normalize_scalar(c) -> Rational:
    if isinstance(c, int) and not isinstance(c, bool):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, _RationalABC):
        return _normalize_scalar(Fraction(c.numerator, c.denominator))
    raise TypeError(f"not an exact rational: {c!r}")


def _div_scalar(a: Rational, b: Rational) -> Rational:
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    return _normalize_scalar(Fraction(a) / Fraction(b))


class LaurentPoly:
    """Immutable finite sum ``sum c_e t^e`` with nonzero rational ``c_e``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, Rational], Iterable[Tuple[int, Rational]], None] = None):
        d: Dict[int, Rational] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                c = _normalize_scalar(c)
                if c:
                    e = int(e)
                    s = d.get(e, 0) + c
                    if s:
                        d[e] = s
                    else:
                        d.pop(e, None)
        self._terms = d
        self._hash = None

    @classmethod
    def _raw(cls, d: Dict[int, Rational]) -> "LaurentPoly":
        # d must already be zero-free
        obj = cls.__new__(cls)
        obj._terms = d
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Rational) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coeff: Rational = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def coerce(cls, value) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        return cls.const(value)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Dict[int, Rational]:
        return dict(self._terms)

    def items(self) -> List[Tuple[int, Rational]]:
        return sorted(self._terms.items())

    def exponents(self) -> List[int]:
        return sorted(self._terms)

    def coefficient(self, e: int) -> Rational:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def valuation(self):
        if not self._terms:
            return INF
        return min(self._terms)

    def degree(self):
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(self._terms)

    def residue(self) -> Fraction:
        """Coefficient of ``t^valuation``."""
        if not self._terms:
            raise ValueError("residue of the zero polynomial")
        return Fraction(self._terms[min(self._terms)])

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __add__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.const(other)
            except TypeError:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        d = dict(self._terms)
        for e, c in other._terms.items():
            s = d.get(e, 0) + c
            if s:
                d[e] = s
            else:
                del d[e]
        return LaurentPoly._raw(d)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.const(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            try:
                c = _normalize_scalar(other)
            except TypeError:
                return NotImplemented
            if not c:
                return ZERO
            return LaurentPoly._raw({e: v * c for e, v in self._terms.items()})
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        d: Dict[int, Rational] = {}
        get = d.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = ea + eb
                d[e] = get(e, 0) + ca * cb
        return LaurentPoly._raw({e: c for e, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if self.is_monomial():
                (e, c), = self._terms.items()
                return LaurentPoly._raw({e * k: _normalize_scalar(Fraction(c) ** k)})
            raise ValueError("negative power of a non-monomial Laurent polynomial")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t^k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def scale(self, c: Rational) -> "LaurentPoly":
        return self * c

    def div_scalar(self, c: Rational) -> "LaurentPoly":
        if not c:
            raise ZeroDivisionError("division by zero scalar")
        return LaurentPoly._raw({e: _div_scalar(v, c) for e, v in self._terms.items()})

    def divmod(self, other: "LaurentPoly") -> Tuple["LaurentPoly", "LaurentPoly"]:
        """Division with remainder after shifting both arguments into Q[t].

        The quotient ``q`` and remainder ``r`` satisfy ``self = q*other + r``
        where ``r`` (shifted by ``t^-val(self)``) has degree below that of
        ``other`` shifted by ``t^-val(other)``.
        """
        if not other._terms:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self._terms:
            return ZERO, ZERO
        va, vb = min(self._terms), min(other._terms)
        a = _dense(self._terms, va)
        b = _dense(other._terms, vb)
        q, r = _dense_divmod(a, b)
        quot = _from_dense(q, va - vb)
        rem = _from_dense(r, va)
        return quot, rem

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient ``self / other``, which must be a Laurent polynomial."""
        if not other._terms:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if len(other._terms) == 1:
            (eb, cb), = other._terms.items()
            return LaurentPoly._raw({e - eb: _div_scalar(c, cb) for e, c in self._terms.items()})
        q, r = self.divmod(other)
        if r._terms:
            raise ArithmeticError("inexact Laurent polynomial division")
        return q

    def divides(self, other: "LaurentPoly") -> bool:
        if not self._terms:
            return not other._terms
        return not other.divmod(self)[1]._terms

    def __truediv__(self, other):
        if isinstance(other, LaurentPoly):
            return RatFunc(self, other)
        return self.div_scalar(_normalize_scalar(other))

    def __rtruediv__(self, other):
        return RatFunc(LaurentPoly.coerce(other), self)

    def evaluate(self, value: Rational) -> Rational:
        value = Fraction(value)
        if not value and self._terms and min(self._terms) < 0:
            raise ZeroDivisionError("negative power of t evaluated at 0")
        return _normalize_scalar(sum((Fraction(c) * value ** e for e, c in self._terms.items()), Fraction(0)))

    def monic(self) -> "LaurentPoly":
        """Rescale so that ``valuation == 0`` and the lowest coefficient is 1."""
        if not self._terms:
            return self
        v = min(self._terms)
        return self.shift(-v).div_scalar(self._terms[v])

    # -- comparison / display -------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        try:
            return self._terms == LaurentPoly.const(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __iter__(self) -> Iterator[Tuple[int, Rational]]:
        return iter(self.items())

    def __repr__(self) -> str:
        return f"LaurentPoly({format_laurent(self)!r})"

    def __str__(self) -> str:
        return format_laurent(self)


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
T = LaurentPoly({1: 1})


def _dense(terms: Mapping[int, Rational], v: int) -> List[Rational]:
    top = max(terms)
    out: List[Rational] = [0] * (top - v + 1)
    for e, c in terms.items():
        out[e - v] = c
    return out


def _from_dense(coeffs: List[Rational], shift: int) -> LaurentPoly:
    return LaurentPoly._raw({i + shift: c for i, c in enumerate(coeffs) if c})


def _trim(a: List[Rational]) -> List[Rational]:
    while a and not a[-1]:
        a.pop()
    return a


def _dense_divmod(a: List[Rational], b: List[Rational]) -> Tuple[List[Rational], List[Rational]]:
    a = _trim(list(a))
    b = _trim(list(b))
    lead = b[-1]
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    q: List[Rational] = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if not c:
            continue
        f = _div_scalar(c, lead)
        q[i - db] = f
        off = i - db
        for j in range(db + 1):
            if b[j]:
                a[off + j] -= f * b[j]
    return q, _trim(a[:db])


def _dense_gcd(a: List[Rational], b: List[Rational]) -> List[Rational]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _dense_divmod(a, b)
        a, b = b, _monic_dense(r) if r else r
    return _monic_dense(a) if a else a


def _monic_dense(a: List[Rational]) -> List[Rational]:
    lead = a[-1]
    return [_div_scalar(c, lead) for c in a]


def poly_gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor in the Laurent ring, normalized by :meth:`LaurentPoly.monic`.

    Units of ``Q[t, t^-1]`` are ``c * t^k``; the returned representative has
    valuation 0 and lowest coefficient 1.  ``gcd(0, 0) = 0``.
    """
    if not f._terms:
        return g.monic()
    if not g._terms:
        return f.monic()
    if len(f._terms) == 1 or len(g._terms) == 1:
        return ONE
    a = _dense(f._terms, min(f._terms))
    b = _dense(g._terms, min(g._terms))
    if len(a) < len(b):
        a, b = b, a
    return _from_dense(_dense_gcd(a, b), 0).monic()


def content_gcd(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    """Running gcd of a family; stops early once the gcd becomes a unit."""
    g = ZERO
    for p in polys:
        if not p:
            continue
        g = poly_gcd(g, p) if g else p.monic()
        if len(g) == 1:
            return ONE
    return g


class RatFunc:
    """Element of Q(t) in lowest terms with a normalized denominator.

    The denominator is kept with valuation 0 and lowest-order coefficient 1,
    so equal fractions have identical representations.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = LaurentPoly.coerce(num)
        den = ONE if den is None else LaurentPoly.coerce(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = ZERO, ONE
            return
        if len(den) > 1:
            g = poly_gcd(num, den)
            if len(g) > 1:
                num = num.exact_div(g)
                den = den.exact_div(g)
        v = min(den._terms)
        c = den._terms[v]
        self.num = num.shift(-v).div_scalar(c)
        self.den = den.shift(-v).div_scalar(c)

    @classmethod
    def coerce(cls, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        return cls(LaurentPoly.coerce(value))

    def is_laurent(self) -> bool:
        return self.den == ONE

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def valuation(self):
        if not self.num:
            return INF
        return self.num.valuation() - self.den.valuation()

    def residue(self) -> Fraction:
        return self.num.residue() / self.den.residue()

    def __neg__(self) -> "RatFunc":
        out = RatFunc.__new__(RatFunc)
        out.num, out.den = -self.num, self.den
        return out

    def __add__(self, other) -> "RatFunc":
        other = RatFunc.coerce(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other) -> "RatFunc":
        return RatFunc.coerce(other) - self

    def __mul__(self, other) -> "RatFunc":
        other = RatFunc.coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other) -> "RatFunc":
        return self * RatFunc.coerce(other).inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return RatFunc.coerce(other) * self.inverse()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc({str(self)!r})"

    def __str__(self) -> str:
        if self.is_laurent():
            return format_laurent(self.num)
        return f"({format_laurent(self.num)})/({format_laurent(self.den)})"


def valuation(f) -> Union[int, _PlusInfinity]:
    """``min`` exponent of ``f`` with nonzero coefficient, or :data:`INF` for zero."""
    return LaurentPoly.coerce(f).valuation() if not isinstance(f, RatFunc) else f.valuation()


def residue_at_valuation(f) -> Fraction:
    """Coefficient of ``t^val(f)``; ``f`` must be nonzero."""
    if isinstance(f, RatFunc):
        if not f:
            raise ValueError("residue of zero")
        return f.residue()
    return LaurentPoly.coerce(f).residue()


def _format_rational(c: Rational) -> str:
    c = _normalize_scalar(c)
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


def format_laurent(f: LaurentPoly) -> str:
    """Canonical text in the input grammar, ascending exponents."""
    if not f._terms:
        return "0"
    parts: List[str] = []
    for i, (e, c) in enumerate(sorted(f._terms.items())):
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            body = _format_rational(a)
        else:
            var = "t" if e == 1 else f"t^{e}"
            body = var if a == 1 else f"{_format_rational(a)}*{var}"
        if i == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)
