"""Exact rational scalars, polynomials, rational functions, and power series.

Everything this package computes is a rational number or a polynomial with
rational coefficients, so the core algebra runs on `fractions.Fraction` and
every identity can be checked with exact equality.  Floating point appears
only in the numerical harness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

__all__ = [
    "ExactRational",
    "InvariantError",
    "PowerSeries",
    "RatFunction",
    "RatPoly",
    "Rational",
    "ValidationError",
    "as_poly",
    "cauchy_root_bound",
    "exact_div",
    "poly_definite_integral",
    "poly_eval",
    "poly_gcd",
    "poly_sliding_average",
    "series_divide",
    "sturm_real_root_count",
]

#: The universal scalar.  `fractions.Fraction` keeps itself in canonical form
#: (reduced, positive denominator, zero as 0/1), and its `str()` is exactly
#: the "p/q" (or bare "p") text encoding used by the JSON and CSV exports.
ExactRational = Fraction

#: Accepted wherever a rational scalar is expected.  Floats are rejected on
#: purpose: admitting them would silently break exactness.
Rational = Union[int, Fraction]


class ValidationError(ValueError):
    """A documented precondition on caller-supplied input was violated."""


class InvariantError(RuntimeError):
    """An internal cross-check that must hold by construction failed."""


def _rat(x: Rational) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise ValidationError(f"expected an exact rational, got {type(x).__name__}")


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RatPoly:
    """Univariate polynomial with rational coefficients, ascending degree.

    Trailing zero coefficients are stripped on construction, so the
    representation is canonical, ``==`` is mathematical equality, and the
    zero polynomial is the empty tuple.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        cs = tuple(_rat(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def of(cls, coeffs: Iterable[Rational]) -> "RatPoly":
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: Rational) -> "RatPoly":
        return cls((_rat(c),))

    @classmethod
    def monomial(cls, degree: int, coeff: Rational = 1) -> "RatPoly":
        if degree < 0:
            raise ValidationError("monomial degree must be nonnegative")
        return cls((Fraction(0),) * degree + (_rat(coeff),))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Canonical degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValidationError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, m: int) -> Fraction:
        """Coefficient of degree m, zero beyond the stored degree."""
        if 0 <= m < len(self.coeffs):
            return self.coeffs[m]
        return Fraction(0)

    def __call__(self, x: Rational) -> Fraction:
        return poly_eval(self, x)

    def __add__(self, other: "RatPoly") -> "RatPoly":
        if not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RatPoly(tuple(c + b[m] if m < len(b) else c for m, c in enumerate(a)))

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "Union[RatPoly, Rational]") -> "RatPoly":
        if isinstance(other, RatPoly):
            if self.is_zero or other.is_zero:
                return RatPoly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return RatPoly(tuple(out))
        scalar = _rat(other)
        return RatPoly(tuple(c * scalar for c in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RatPoly":
        if not isinstance(n, int) or n < 0:
            raise ValidationError("polynomial powers must be nonnegative integers")
        result = RatPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "RatPoly") -> "tuple[RatPoly, RatPoly]":
        if not isinstance(other, RatPoly):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = RatPoly()
        r = self
        d, lc = other.degree, other.leading
        while not r.is_zero and r.degree >= d:
            t = RatPoly.monomial(r.degree - d, r.leading / lc)
            q = q + t
            r = r - t * other
        return q, r

    def derivative(self) -> "RatPoly":
        return RatPoly(tuple(m * self.coeffs[m] for m in range(1, len(self.coeffs))))

    def antiderivative(self) -> "RatPoly":
        """The primitive with zero constant term."""
        return RatPoly((Fraction(0),) + tuple(c / (m + 1) for m, c in enumerate(self.coeffs)))

    def taylor_shift(self, c: Rational) -> "RatPoly":
        """p(x + c), expanded by Horner's rule in (x + c)."""
        shift = RatPoly((_rat(c), Fraction(1)))
        result = RatPoly()
        for coeff in reversed(self.coeffs):
            result = result * shift + RatPoly.constant(coeff)
        return result

    def monic(self) -> "RatPoly":
        if self.is_zero:
            return self
        lead = self.leading
        return RatPoly(tuple(c / lead for c in self.coeffs))

    def to_strings(self) -> list[str]:
        """Ascending-degree "p/q" strings; round-trips bit-exactly."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> "RatPoly":
        try:
            return cls(tuple(Fraction(s) for s in items))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"bad rational literal: {exc}") from exc


def as_poly(p: Union[RatPoly, Sequence[Rational]]) -> RatPoly:
    """Coerce a coefficient sequence (ascending degree) to RatPoly."""
    if isinstance(p, RatPoly):
        return p
    if isinstance(p, (list, tuple)):
        return RatPoly.of(p)
    raise ValidationError(f"expected a polynomial or coefficient sequence, got {type(p).__name__}")


def poly_eval(p: Union[RatPoly, Sequence[Rational]], x: Rational) -> Fraction:
    """Horner evaluation at a rational point, exact."""
    p = as_poly(p)
    x = _rat(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_definite_integral(
    p: Union[RatPoly, Sequence[Rational]], a: Rational, b: Rational
) -> Fraction:
    """Exact signed integral of p over [a, b]."""
    prim = as_poly(p).antiderivative()
    return poly_eval(prim, b) - poly_eval(prim, a)


def poly_sliding_average(p: Union[RatPoly, Sequence[Rational]]) -> RatPoly:
    """The unit-width sliding average q(x) = integral of p over [x-1/2, x+1/2].

    Degree and leading coefficient are preserved for every nonzero p.
    """
    prim = as_poly(p).antiderivative()
    half = Fraction(1, 2)
    return prim.taylor_shift(half) - prim.taylor_shift(-half)


def exact_div(p: RatPoly, d: RatPoly) -> RatPoly:
    """Quotient of an exact polynomial division; the remainder must vanish."""
    q, r = divmod(p, d)
    if not r.is_zero:
        raise InvariantError("polynomial division left a remainder")
    return q


# ---------------------------------------------------------------------------
# gcd via the integer subresultant remainder sequence
# ---------------------------------------------------------------------------


def _int_coeffs(p: RatPoly) -> list[int]:
    """Primitive integer coefficients of a positive rational multiple of p."""
    den = lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    return _primitive_ints(ints)


def _primitive_ints(ints: list[int]) -> list[int]:
    content = gcd(*ints)
    sign = -1 if ints[-1] < 0 else 1
    return [i // (sign * content) for i in ints]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced modulo b."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    e = (len(a) - 1) - db + 1
    while r and len(r) - 1 >= db:
        lead = r[-1]
        k = len(r) - 1 - db
        r = [lb * c for c in r]
        for j in range(db + 1):
            r[k + j] -= lead * b[j]
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if e > 0 and r:
        scale = lb**e
        r = [scale * c for c in r]
    return r


def _exact_int_div(c: int, d: int) -> int:
    q, rem = divmod(c, d)
    if rem:
        raise InvariantError("subresultant division was not exact")
    return q


def _int_poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """Subresultant polynomial remainder sequence over the integers.

    The divisor choices keep intermediate coefficients polynomially bounded,
    which is what makes weight-function reduction tractable for wide stencils.
    """
    if len(a) < len(b):
        a, b = b, a
    a = _primitive_ints(a)
    b = _primitive_ints(b)
    g = h = 1
    while True:
        delta = (len(a) - 1) - (len(b) - 1)
        r = _prem(a, b)
        if not r:
            return _primitive_ints(b)
        if len(r) == 1:
            return [1]
        div = g * h**delta
        a, b = b, [_exact_int_div(c, div) for c in r]
        g = a[-1]
        if delta:
            h = _exact_int_div(g**delta, h ** (delta - 1))


def poly_gcd(
    p: Union[RatPoly, Sequence[Rational]], q: Union[RatPoly, Sequence[Rational]]
) -> RatPoly:
    """Monic gcd over the rationals."""
    p, q = as_poly(p), as_poly(q)
    if p.is_zero and q.is_zero:
        return RatPoly()
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    if p.degree == 0 or q.degree == 0:
        return RatPoly.constant(1)
    return RatPoly.of(_int_poly_gcd(_int_coeffs(p), _int_coeffs(q))).monic()


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RatFunction:
    """Reduced quotient of two polynomials with a monic denominator.

    The canonical form (coprime numerator and denominator, monic denominator)
    makes ``==`` mathematical equality of rational functions.
    """

    num: RatPoly
    den: RatPoly = RatPoly((Fraction(1),))

    def __post_init__(self) -> None:
        num, den = as_poly(self.num), as_poly(self.den)
        if den.is_zero:
            raise ValidationError("rational function with zero denominator")
        if num.is_zero:
            num, den = RatPoly(), RatPoly.constant(1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = exact_div(num, g)
                den = exact_div(den, g)
            lead = den.leading
            if lead != 1:
                num = num * (1 / lead)
                den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def constant(cls, c: Rational) -> "RatFunction":
        return cls(RatPoly.constant(c))

    @classmethod
    def from_poly(cls, p: Union[RatPoly, Sequence[Rational]]) -> "RatFunction":
        return cls(as_poly(p))

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __call__(self, x: Rational) -> Fraction:
        d = poly_eval(self.den, x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return poly_eval(self.num, x) / d

    def __add__(self, other: "Union[RatFunction, Rational]") -> "RatFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        g = poly_gcd(self.den, other.den)
        da = exact_div(self.den, g) if g.degree > 0 else self.den
        db = exact_div(other.den, g) if g.degree > 0 else other.den
        return RatFunction(self.num * db + other.num * da, da * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunction":
        return RatFunction(-self.num, self.den)

    def __sub__(self, other: "Union[RatFunction, Rational]") -> "RatFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "Union[RatFunction, Rational]") -> "RatFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # cross-reduce first to keep the final gcd cheap
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1 = exact_div(self.num, g1) if g1.degree > 0 else self.num
        d2 = exact_div(other.den, g1) if g1.degree > 0 else other.den
        n2 = exact_div(other.num, g2) if g2.degree > 0 else other.num
        d1 = exact_div(self.den, g2) if g2.degree > 0 else self.den
        return RatFunction(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, RatFunction):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RatFunction.constant(other)
        return NotImplemented


# ---------------------------------------------------------------------------
# truncated power series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PowerSeries:
    """Taylor jet: coefficients of x^0 .. x^order, trailing zeros kept.

    The truncation order is part of the value; sums and products truncate to
    the shorter operand, so arithmetic never silently extends a result past
    coefficients that are actually known.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValidationError("a power series stores at least its constant term")
        object.__setattr__(self, "coeffs", tuple(_rat(c) for c in self.coeffs))

    @classmethod
    def of(cls, coeffs: Iterable[Rational], order: "int | None" = None) -> "PowerSeries":
        cs = [_rat(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValidationError("truncation order must be nonnegative")
            cs = cs[: order + 1]
            cs += [Fraction(0)] * (order + 1 - len(cs))
        return cls(tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise ValidationError(f"coefficient {k} is beyond the truncation order {self.order}")
        return self.coeffs[k]

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return PowerSeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1)))

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return PowerSeries(tuple(out))


def series_divide(a: PowerSeries, b: PowerSeries, order: int) -> PowerSeries:
    """Quotient jet of a/b through the stated order, exact.

    Operands are read as polynomials: coefficients above an operand's stored
    order are exact zeros.  When an operand is itself a truncation of a longer
    series, supply it zero-padded to the working order.
    """
    if order < 0:
        raise ValidationError("truncation order must be nonnegative")
    if b.coeffs[0] == 0:
        raise ValidationError("division by a power series with zero constant term")

    def at(series: PowerSeries, k: int) -> Fraction:
        return series.coeffs[k] if k <= series.order else Fraction(0)

    inv0 = b.coeffs[0]
    q: list[Fraction] = []
    for n in range(order + 1):
        acc = at(a, n)
        for k in range(1, n + 1):
            bk = at(b, k)
            if bk:
                acc -= bk * q[n - k]
        q.append(acc / inv0)
    return PowerSeries(tuple(q))


# ---------------------------------------------------------------------------
# Sturm root counting
# ---------------------------------------------------------------------------


def cauchy_root_bound(p: Union[RatPoly, Sequence[Rational]]) -> Fraction:
    """A rational B with every real root of p inside (-B, B]."""
    p = as_poly(p)
    if p.is_zero:
        raise ValidationError("the zero polynomial has no root bound")
    if p.degree == 0:
        return Fraction(1)
    top = max(abs(c) for c in p.coeffs[:-1])
    return 1 + top / abs(p.leading)


def _primitive_scaled(p: RatPoly) -> RatPoly:
    # positive rescaling only: Sturm sign variations must survive
    den = lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    content = gcd(*ints)
    return RatPoly.of([Fraction(i, content) for i in ints])


def _sturm_chain(p: RatPoly) -> list[RatPoly]:
    chain = [p, p.derivative()]
    while True:
        _, r = divmod(chain[-2], chain[-1])
        if r.is_zero:
            return chain
        chain.append(_primitive_scaled(-r))


def _sign_variations(chain: list[RatPoly], x: Fraction) -> int:
    signs = []
    for s in chain:
        v = poly_eval(s, x)
        if v != 0:
            signs.append(v > 0)
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def square_free_part(p: Union[RatPoly, Sequence[Rational]]) -> RatPoly:
    """The monic polynomial with the same distinct roots as p, each simple."""
    p = as_poly(p)
    if p.is_zero:
        raise ValidationError("the zero polynomial has no square-free part")
    if p.degree == 0:
        return RatPoly.constant(1)
    g = poly_gcd(p, p.derivative())
    return (exact_div(p, g) if g.degree > 0 else p).monic()


def sturm_real_root_count(
    p: Union[RatPoly, Sequence[Rational]], a: Rational, b: Rational
) -> int:
    """Exact number of distinct real roots of p in the half-open interval (a, b].

    Endpoints are allowed to be roots: a root at b is counted, a root at a is
    not.  Internally such endpoint roots are divided out of the square-free
    part before the Sturm chain is evaluated, which is the exact limit of
    nudging the endpoint by an infinitesimal.
    """
    p = as_poly(p)
    if p.is_zero:
        raise ValidationError("the zero polynomial has no root count")
    a, b = _rat(a), _rat(b)
    if not a < b:
        raise ValidationError("root counting needs a < b")
    if p.degree == 0:
        return 0

    sf = square_free_part(p)
    count = 0
    if poly_eval(sf, b) == 0:
        count += 1
        sf = exact_div(sf, RatPoly((-b, Fraction(1))))
    if poly_eval(sf, a) == 0:
        sf = exact_div(sf, RatPoly((-a, Fraction(1))))
    if sf.degree <= 0:
        return count
    chain = _sturm_chain(sf)
    return count + _sign_variations(chain, a) - _sign_variations(chain, b)
