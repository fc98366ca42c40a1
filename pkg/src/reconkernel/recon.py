"""Polynomial reconstruction pairs and the reconstructing basis on a stencil.

A polynomial f of degree M has a unique polynomial h of the same degree whose
unit-width sliding average is f.  The coefficient maps between the two are
sparse triangular sums (`pair_f_from_h`, `pair_h_from_f`); the same maps in
matrix form are upper unitriangular, giving an independent inversion route.

On a stencil, interpolating the cell averages f_{i+l} and deconvolving yields
the reconstructing polynomial.  Both polynomials are expressed in a cardinal
basis: p_f = sum alpha_f,l(xi) f_{i+l} interpolates, p_h = sum alpha_h,l(xi)
f_{i+l} reconstructs, with xi the offset from the pivot in cell widths.
Evaluating alpha_h at xi = 1/2 gives the face-value coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial
from typing import Sequence, Union

from .deconv import deconv_forward_coeff, tau
from .exact import (
    InvariantError,
    RatPoly,
    Rational,
    ValidationError,
    _rat,
    poly_eval,
)
from .vandermonde import CoeffTable, Stencil, comb0, inv_vandermonde

__all__ = [
    "PairCoeffs",
    "ReconstructionBasis",
    "basis",
    "deconv_matrix",
    "deconv_matrix_inverse",
    "face_coeffs",
    "face_coeffs_shu_oracle",
    "pair_f_from_h",
    "pair_h_from_f",
    "unitriangular_inverse",
]

CoeffList = Union[Sequence[Rational], "tuple[Fraction, ...]"]


def _coeff_tuple(c: CoeffList) -> tuple[Fraction, ...]:
    if isinstance(c, RatPoly):
        raise ValidationError(
            "pair maps act on raw coefficient lists; pass poly.coeffs "
            "(trailing zeros are significant for the list length)"
        )
    return tuple(_rat(x) for x in c)


def pair_f_from_h(c_h: CoeffList) -> list[Fraction]:
    """Coefficients of the sliding average of a polynomial, term by term.

    c_f[m] = sum_k c_h[m+2k] * C(m+2k, 2k) / ((2k+1) 2^(2k)); the output has
    the same length as the input.
    """
    ch = _coeff_tuple(c_h)
    n = len(ch)
    out = []
    for m in range(n):
        acc = Fraction(0)
        for k in range((n - 1 - m) // 2 + 1):
            acc += ch[m + 2 * k] * Fraction(comb0(m + 2 * k, 2 * k), (2 * k + 1) * 4**k)
        out.append(acc)
    return out


def pair_h_from_f(c_f: CoeffList) -> list[Fraction]:
    """Inverse of `pair_f_from_h`: deconvolve a polynomial's coefficients.

    c_h[m] = (1/m!) sum_k tau_{2k} c_f[m+2k] (m+2k)!.
    """
    cf = _coeff_tuple(c_f)
    n = len(cf)
    out = []
    for m in range(n):
        acc = Fraction(0)
        for k in range((n - 1 - m) // 2 + 1):
            acc += tau(2 * k) * cf[m + 2 * k] * factorial(m + 2 * k)
        out.append(acc / factorial(m))
    return out


@dataclass(frozen=True)
class PairCoeffs:
    """A polynomial reconstruction pair, as two coefficient lists.

    Construct with `from_f` or `from_h`; direct construction revalidates the
    round trip.
    """

    c_f: tuple[Fraction, ...]
    c_h: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        cf = _coeff_tuple(self.c_f)
        ch = _coeff_tuple(self.c_h)
        if len(cf) != len(ch):
            raise ValidationError("pair coefficient lists must have equal length")
        if tuple(pair_h_from_f(cf)) != ch:
            raise ValidationError("coefficient lists are not a reconstruction pair")
        object.__setattr__(self, "c_f", cf)
        object.__setattr__(self, "c_h", ch)

    @classmethod
    def from_f(cls, c_f: CoeffList) -> "PairCoeffs":
        cf = _coeff_tuple(c_f)
        return cls(cf, tuple(pair_h_from_f(cf)))

    @classmethod
    def from_h(cls, c_h: CoeffList) -> "PairCoeffs":
        ch = _coeff_tuple(c_h)
        return cls(tuple(pair_f_from_h(ch)), ch)


def unitriangular_inverse(u: CoeffTable) -> CoeffTable:
    """Exact inverse of an upper unitriangular matrix.

    Uses the backward recurrence inv[r][r+s] = -sum_{l=1}^{s} u[r][r+l] *
    inv[r+l][r+s]; the inverse is again upper unitriangular.
    """
    n = u.rows
    if u.cols != n:
        raise ValidationError("matrix must be square")
    for i in range(n):
        if u[i, i] != 1:
            raise ValidationError("matrix must have a unit diagonal")
        for j in range(i):
            if u[i, j] != 0:
                raise ValidationError("matrix must be upper triangular")
    inv = [[Fraction(0)] * n for _ in range(n)]
    for r in range(n - 1, -1, -1):
        inv[r][r] = Fraction(1)
        for sdx in range(1, n - r):
            inv[r][r + sdx] = -sum(
                (u[r, r + l] * inv[r + l][r + sdx] for l in range(1, sdx + 1)), Fraction(0)
            )
    return CoeffTable.of(inv)


def deconv_matrix(m: int) -> CoeffTable:
    """Unitriangular matrix of the parity-respecting deconvolution map.

    For a degree-m polynomial, the coefficients of indices m, m-2, m-4, ...
    form a chain; with N = floor(m/2), row r of this (N+1)x(N+1) matrix maps
    the h-chain to the f-chain: entry (N-l, N-l+k) = C(m-2l+2k, 2k) /
    ((2k+1) 2^(2k)).
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise ValidationError("degree must be a nonnegative integer")
    n = m // 2
    rows = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for l in range(n + 1):
        r = n - l
        for k in range(l + 1):
            rows[r][r + k] = Fraction(comb0(m - 2 * l + 2 * k, 2 * k), (2 * k + 1) * 4**k)
    return CoeffTable.of(rows)


def deconv_matrix_inverse(m: int) -> CoeffTable:
    """Closed form for the inverse of `deconv_matrix`.

    Entry (N-l, N-l+k) = tau_{2k} (m-2l+2k)! / (m-2l)!.
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise ValidationError("degree must be a nonnegative integer")
    n = m // 2
    rows = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for l in range(n + 1):
        r = n - l
        for k in range(l + 1):
            rows[r][r + k] = tau(2 * k) * Fraction(
                factorial(m - 2 * l + 2 * k), factorial(m - 2 * l)
            )
    return CoeffTable.of(rows)


@dataclass(frozen=True)
class ReconstructionBasis:
    """Cardinal bases of the interpolating and reconstructing polynomials.

    Position p in either tuple corresponds to the node offset p - m_minus.
    """

    stencil: Stencil
    alpha_f: tuple[RatPoly, ...]
    alpha_h: tuple[RatPoly, ...]

    def alpha_f_at(self, ell: int) -> RatPoly:
        return self.alpha_f[ell + self.stencil.m_minus]

    def alpha_h_at(self, ell: int) -> RatPoly:
        return self.alpha_h[ell + self.stencil.m_minus]


@cache
def basis(s: Stencil) -> ReconstructionBasis:
    """The alpha_f / alpha_h basis polynomials of a stencil, built once.

    alpha_f,l collects column l of the inverse Vandermonde matrix; alpha_h,l
    applies the deconvolution weights tau_{2k} (m+2k)!/m! down each column.
    Construction cross-checks that every member has degree exactly M and that
    each family sums to the constant 1.
    """
    vinv = inv_vandermonde(s)
    m_total = s.m
    alpha_f = []
    alpha_h = []
    for pos in range(m_total + 1):
        f_coeffs = [vinv[m, pos] for m in range(m_total + 1)]
        h_coeffs = []
        for m in range(m_total + 1):
            acc = Fraction(0)
            for k in range((m_total - m) // 2 + 1):
                acc += tau(2 * k) * Fraction(factorial(m + 2 * k), factorial(m)) * vinv[m + 2 * k, pos]
            h_coeffs.append(acc)
        alpha_f.append(RatPoly.of(f_coeffs))
        alpha_h.append(RatPoly.of(h_coeffs))

    one = RatPoly.constant(1)
    for family in (alpha_f, alpha_h):
        if any(p.degree != m_total for p in family):
            raise InvariantError(f"basis member of stencil {s} has wrong degree")
        total = RatPoly()
        for p in family:
            total = total + p
        if total != one:
            raise InvariantError(f"basis of stencil {s} does not sum to 1")
    return ReconstructionBasis(s, tuple(alpha_f), tuple(alpha_h))


@cache
def face_coeffs(s: Stencil) -> tuple[Fraction, ...]:
    """Reconstruction coefficients at the right cell face, xi = 1/2.

    The dot product of these with the cell averages f_{i+l} approximates
    h_{i+1/2} to order M+1; they always sum to 1.
    """
    half = Fraction(1, 2)
    return tuple(poly_eval(p, half) for p in basis(s).alpha_h)


def face_coeffs_shu_oracle(s: Stencil) -> tuple[Fraction, ...]:
    """Face coefficients by the classical product/sum formula.

    Independent derivation path: no Vandermonde inversion and no tau numbers,
    only integer products over the primitive-function interpolation nodes.
    """
    m_total, mm = s.m, s.m_minus
    out = []
    for ell in s.offsets():
        total = Fraction(0)
        for m in range(ell + mm + 1, m_total + 2):
            num = 0
            for p in range(m_total + 2):
                if p == m:
                    continue
                prod = 1
                for q in range(m_total + 2):
                    if q == m or q == p:
                        continue
                    prod *= mm - q + 1
                num += prod
            den = 1
            for p in range(m_total + 2):
                if p != m:
                    den *= m - p
            total += Fraction(num, den)
        out.append(total)
    return tuple(out)
