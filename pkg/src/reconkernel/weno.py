"""Truncation-error polynomials, substencil weight-functions, and smoothness forms.

The reconstruction and interpolation errors of a stencil admit exact
expansions in powers of the cell width: mu polynomials weight derivatives at
the pivot, lambda polynomials weight derivatives at the evaluation point, and
the constants Lambda = lambda_h(1/2) govern the face-value error.

A stencil of M+1 cells splits into K+1 overlapping substencils of M-K+1
cells each.  The rational weight-functions sigma combine the substencil
reconstructing polynomials exactly into the big-stencil one; their values at
xi = 1/2 are the classical linear weights of weighted essentially
non-oscillatory schemes.  Sturm counting certifies that every weight
denominator has only real roots, and the Jiang-Shu smoothness indicator is
assembled as an exact quadratic form in the cell values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial
from typing import Union

from .deconv import tau
from .exact import (
    InvariantError,
    RatFunction,
    RatPoly,
    Rational,
    ValidationError,
    _rat,
    cauchy_root_bound,
    poly_definite_integral,
    poly_eval,
    sturm_real_root_count,
)
from .recon import basis, face_coeffs
from .vandermonde import CoeffTable, Stencil, nu

__all__ = [
    "ErrorExpansion",
    "Lambda",
    "PoleReport",
    "PositivityRow",
    "SmoothnessForm",
    "WeightFamily",
    "beta_form",
    "error_expansion",
    "lambda_f",
    "lambda_h",
    "mu_f",
    "mu_h",
    "positivity_scan",
    "sigma_pole_analysis",
    "sigma_values_at_half",
    "sigma_weights",
    "substencil",
]

#: Orders kept in an expansion when no cutoff is given: M+1 .. M+DEFAULT_MARGIN.
DEFAULT_MARGIN = 5


def _require_expansion_order(s: Stencil, order: int) -> None:
    if isinstance(order, bool) or not isinstance(order, int):
        raise ValidationError("expansion order must be an integer")
    if order <= s.m:
        raise ValidationError(
            f"error terms of stencil {s} vanish identically below order {s.m + 1}"
        )


def _mu_f_any(s: Stencil, order: int) -> RatPoly:
    # no floor check: below M+1 this assembles to the zero polynomial,
    # which is exactly the property the tests pin down
    m_total = s.m
    coeffs = [Fraction(0)] * (max(order, m_total) + 1)
    coeffs[order] -= 1
    for m in range(m_total + 1):
        coeffs[m] += nu(s, m, order)
    return RatPoly.of(coeffs) * Fraction(1, factorial(order))


def _mu_h_any(s: Stencil, order: int) -> RatPoly:
    m_total = s.m
    coeffs = [Fraction(0)] * (max(order, m_total) + 1)
    for k in range(order // 2 + 1):
        coeffs[order - 2 * k] -= tau(2 * k) / factorial(order - 2 * k)
    for m in range(m_total + 1):
        acc = Fraction(0)
        for k in range((m_total - m) // 2 + 1):
            acc += (
                tau(2 * k)
                * nu(s, m + 2 * k, order)
                * Fraction(factorial(m + 2 * k), factorial(order) * factorial(m))
            )
        coeffs[m] += acc
    return RatPoly.of(coeffs)


@cache
def mu_f(s: Stencil, order: int) -> RatPoly:
    """Pivot-derivative error polynomial of the interpolant.

    The interpolation error on the stencil is sum_{n > M} mu_f(s, n)(xi)
    dx^n f^(n) at the pivot;  mu_f(s, n) = (1/n!)(-xi^n + sum_m nu_{m,n} xi^m)
    has degree exactly n.
    """
    _require_expansion_order(s, order)
    return _mu_f_any(s, order)


@cache
def mu_h(s: Stencil, order: int) -> RatPoly:
    """Pivot-derivative error polynomial of the reconstruction.

    Combines the tau tail of the shifted deconvolution jet with the nu
    corrections of the stencil; degree exactly `order`.
    """
    _require_expansion_order(s, order)
    return _mu_h_any(s, order)


@cache
def lambda_h(s: Stencil, order: int) -> RatPoly:
    """Local-derivative error polynomial of the reconstruction.

    Re-centers the mu_h expansion on the evaluation point and trades the
    pivot derivatives of the averaged field for derivatives of the
    reconstructed function itself:

        lambda_h(s, n) = sum_{l=0}^{n-M-1} mu_h(s, n-l) *
            ((-1)^(l+1)/(l+1)!) * ((xi-1/2)^(l+1) - (xi+1/2)^(l+1)).

    The l = 0 factor is 1, so the leading term equals mu_h(s, M+1).
    """
    _require_expansion_order(s, order)
    half = Fraction(1, 2)
    ximinus = RatPoly((-half, Fraction(1)))
    xiplus = RatPoly((half, Fraction(1)))
    total = RatPoly()
    for l in range(order - s.m):
        bracket = ximinus ** (l + 1) - xiplus ** (l + 1)
        factor = Fraction((-1) ** (l + 1), factorial(l + 1))
        total = total + mu_h(s, order - l) * bracket * factor
    return total


@cache
def lambda_f(s: Stencil, order: int) -> RatPoly:
    """Local-derivative error polynomial of the interpolant.

    lambda_f(s, n) = sum_{l=0}^{n-M-1} ((-xi)^l / l!) * mu_f(s, n-l).
    """
    _require_expansion_order(s, order)
    total = RatPoly()
    for l in range(order - s.m):
        total = total + RatPoly.monomial(l, Fraction((-1) ** l, factorial(l))) * mu_f(s, order - l)
    return total


def Lambda(s: Stencil, order: int) -> Fraction:
    """Face-error constant: lambda_h evaluated exactly at xi = 1/2.

    The reconstructed face value satisfies
    h_{i+1/2} approx = h(x_{i+1/2}) + sum_{n > M} Lambda(s, n) dx^n h^(n),
    with the h-derivatives taken at the face.
    """
    return poly_eval(lambda_h(s, order), Fraction(1, 2))


@dataclass(frozen=True)
class ErrorExpansion:
    """Error polynomials of one stencil, keyed by order M+1 .. n_max.

    kind is "f" or "h" for the pivot-derivative expansions and "lambda-f" or
    "lambda-h" for the local-derivative ones.
    """

    stencil: Stencil
    kind: str
    terms: tuple[tuple[int, RatPoly], ...]

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(n for n, _ in self.terms)

    def term(self, order: int) -> RatPoly:
        for n, p in self.terms:
            if n == order:
                return p
        raise ValidationError(f"order {order} not stored (have {self.orders})")


_EXPANSION_BUILDERS = {
    "f": mu_f,
    "h": mu_h,
    "lambda-f": lambda_f,
    "lambda-h": lambda_h,
}


def error_expansion(s: Stencil, kind: str, n_max: "int | None" = None) -> ErrorExpansion:
    """All error polynomials of one kind through order n_max (default M+5)."""
    if kind not in _EXPANSION_BUILDERS:
        raise ValidationError(f"kind must be one of {sorted(_EXPANSION_BUILDERS)}")
    if n_max is None:
        n_max = s.m + DEFAULT_MARGIN
    _require_expansion_order(s, n_max)
    build = _EXPANSION_BUILDERS[kind]
    return ErrorExpansion(
        s, kind, tuple((n, build(s, n)) for n in range(s.m + 1, n_max + 1))
    )


# ---------------------------------------------------------------------------
# substencil weight-functions
# ---------------------------------------------------------------------------


def substencil(s: Stencil, levels: int, k: int) -> Stencil:
    """Substencil k of the K-fold subdivision; k = 0 is the leftmost."""
    if not 0 <= k <= levels:
        raise ValidationError(f"substencil index {k} outside 0..{levels}")
    return Stencil(s.m_minus - k, s.m_plus - levels + k)


def _check_subdivision(s: Stencil, levels: int) -> None:
    if isinstance(levels, bool) or not isinstance(levels, int):
        raise ValidationError("subdivision level must be an integer")
    if s.m < 2:
        raise ValidationError("subdivision needs a stencil of at least three cells")
    if not 1 <= levels <= s.m - 1:
        raise ValidationError(
            f"subdivision level {levels} outside 1..{s.m - 1} for stencil {s}"
        )


@dataclass(frozen=True)
class WeightFamily:
    """The K+1 rational weight-functions of a K-fold stencil subdivision.

    weights[k] belongs to substencil(stencil, levels, k); the family sums to
    the constant 1 identically, which is verified on construction.
    """

    stencil: Stencil
    levels: int
    weights: tuple[RatFunction, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != self.levels + 1:
            raise ValidationError("weight family must hold levels + 1 members")
        total = RatFunction.constant(0)
        for w in self.weights:
            total = total + w
        if total != RatFunction.constant(1):
            raise InvariantError(f"weights of {self.stencil} at {self.levels} levels do not sum to 1")

    def values_at(self, xi: Rational) -> tuple[Fraction, ...]:
        return tuple(w(xi) for w in self.weights)


@cache
def _sigma_level1(s: Stencil) -> tuple[RatFunction, RatFunction]:
    # one subdivision level: each weight is a ratio of an outer-node basis
    # polynomial of the big stencil to the matching one of its substencil
    big = basis(s)
    left = basis(substencil(s, 1, 0))
    right = basis(substencil(s, 1, 1))
    return (
        RatFunction(big.alpha_h[0], left.alpha_h[0]),
        RatFunction(big.alpha_h[-1], right.alpha_h[-1]),
    )


@cache
def _sigma_family(s: Stencil, levels: int) -> tuple[RatFunction, ...]:
    if levels == 1:
        return _sigma_level1(s)
    prev = _sigma_family(s, levels - 1)
    out = []
    for k in range(levels + 1):
        acc = RatFunction.constant(0)
        for l in range(max(0, k - 1), min(levels - 1, k) + 1):
            acc = acc + prev[l] * _sigma_level1(substencil(s, levels - 1, l))[k - l]
        out.append(acc)
    return tuple(out)


def sigma_weights(s: Stencil, levels: int) -> WeightFamily:
    """Weight-functions sigma of the K-fold subdivision, fully reduced.

    Built by the convolution recurrence: a K-fold family is the (K-1)-fold
    family composed with one-fold splits of its substencils.  Valid for
    stencils with M >= 2 and 1 <= levels <= M-1.
    """
    _check_subdivision(s, levels)
    return WeightFamily(s, levels, _sigma_family(s, levels))


@cache
def sigma_values_at_half(s: Stencil, levels: int) -> tuple[Fraction, ...]:
    """The linear weights: sigma evaluated at xi = 1/2 without symbolic algebra.

    Runs the same recurrence as `sigma_weights` on face values only, so wide
    positivity scans stay cheap.  The results are cross-checked to sum to 1.
    """
    _check_subdivision(s, levels)
    vals = _sigma_half(s, levels)
    if sum(vals) != 1:
        raise InvariantError(f"face weights of {s} at {levels} levels do not sum to 1")
    return vals


@cache
def _sigma_half(s: Stencil, levels: int) -> tuple[Fraction, ...]:
    if levels == 1:
        num = face_coeffs(s)
        den_left = face_coeffs(substencil(s, 1, 0))
        den_right = face_coeffs(substencil(s, 1, 1))
        if den_left[0] == 0 or den_right[-1] == 0:
            raise InvariantError(f"face coefficient of a substencil of {s} vanished")
        return (num[0] / den_left[0], num[-1] / den_right[-1])
    prev = _sigma_half(s, levels - 1)
    out = []
    for k in range(levels + 1):
        acc = Fraction(0)
        for l in range(max(0, k - 1), min(levels - 1, k) + 1):
            acc += prev[l] * _sigma_half(substencil(s, levels - 1, l), 1)[k - l]
        out.append(acc)
    return tuple(out)


# ---------------------------------------------------------------------------
# pole analysis and positivity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PoleReport:
    """Real-root census of one weight-function denominator."""

    k_s: int
    denominator: RatPoly
    real_root_count: int
    isolating_intervals: tuple[tuple[Fraction, Fraction], ...]


def _isolate(p: RatPoly, lo: Fraction, hi: Fraction, count: int) -> list[tuple[Fraction, Fraction]]:
    if count == 0:
        return []
    if count == 1:
        return [(lo, hi)]
    mid = (lo + hi) / 2
    left = sturm_real_root_count(p, lo, mid)
    return _isolate(p, lo, mid, left) + _isolate(p, mid, hi, count - left)


def sigma_pole_analysis(family: WeightFamily) -> tuple[PoleReport, ...]:
    """Certify that every weight denominator has only real roots.

    For each weight: Sturm-count the distinct real roots over a Cauchy bound
    interval, require the count to equal the denominator degree (all roots
    real and simple), and bisect down to isolating intervals (lo, hi], one
    root each.  Denominators are also checked to be nonzero at every cell
    interface xi = n + 1/2 in the window |n| <= M + 2; a fully cancelled
    polynomial weight is reported with zero poles.
    """
    reports = []
    m_total = family.stencil.m
    for k, w in enumerate(family.weights):
        den = w.den
        for n in range(-m_total - 2, m_total + 3):
            if poly_eval(den, Fraction(2 * n + 1, 2)) == 0:
                raise InvariantError(
                    f"weight {k} of {family.stencil} has a pole at the cell interface {n}+1/2"
                )
        if den.degree == 0:
            reports.append(PoleReport(k, den, 0, ()))
            continue
        bound = cauchy_root_bound(den)
        count = sturm_real_root_count(den, -bound, bound)
        if count != den.degree:
            raise InvariantError(
                f"weight {k} of {family.stencil}: {count} real roots for degree {den.degree}"
            )
        reports.append(PoleReport(k, den, count, tuple(_isolate(den, -bound, bound, count))))
    return tuple(reports)


@dataclass(frozen=True)
class PositivityRow:
    """One scanned configuration and whether all its linear weights are positive."""

    stencil: Stencil
    levels: int
    in_condition: bool
    all_positive: bool


def positivity_scan(max_extent: int) -> tuple[PositivityRow, ...]:
    """Evaluate every subdivision's linear weights exactly and flag positivity.

    Covers all stencils with |m_minus|, |m_plus| <= max_extent and every
    subdivision level.  in_condition marks the sufficient condition
    m_minus >= 0, m_plus >= 1, levels <= min(m_minus + 1, m_plus), under
    which all weights are expected positive; configurations outside it are
    reported without any claim.  Extents above 9 are not covered by the
    positivity result and are rejected.
    """
    if isinstance(max_extent, bool) or not isinstance(max_extent, int) or not 0 <= max_extent <= 9:
        raise ValidationError("positivity scans cover extents 0..9 only")
    rows = []
    for mm in range(-max_extent, max_extent + 1):
        for mp in range(-max_extent, max_extent + 1):
            if mm + mp < 2:
                continue
            st = Stencil(mm, mp)
            for levels in range(1, st.m):
                vals = sigma_values_at_half(st, levels)
                in_cond = mm >= 0 and mp >= 1 and levels <= min(mm + 1, mp)
                rows.append(PositivityRow(st, levels, in_cond, all(v > 0 for v in vals)))
    return tuple(rows)


# ---------------------------------------------------------------------------
# smoothness indicator
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmoothnessForm:
    """Jiang-Shu smoothness indicator as an exact quadratic form.

    beta = c^T B c where c holds the cell values on the stencil and B sums
    the integrals of squared reconstructing-polynomial derivatives.  B is
    symmetric, positive semidefinite, and annihilates constant fields.
    """

    stencil: Stencil
    matrix: CoeffTable
    face_centered: bool = False

    def __post_init__(self) -> None:
        n = self.stencil.m + 1
        if self.matrix.rows != n or self.matrix.cols != n:
            raise ValidationError("smoothness matrix shape must match the stencil")
        if not self.matrix.is_symmetric:
            raise InvariantError(f"smoothness form of {self.stencil} is not symmetric")
        for i in range(n):
            if sum(self.matrix.row(i), Fraction(0)) != 0:
                raise InvariantError(f"smoothness form of {self.stencil} does not annihilate constants")

    def value(self, cells: "tuple[Rational, ...] | list[Rational]") -> Fraction:
        vals = [_rat(c) for c in cells]
        n = self.stencil.m + 1
        if len(vals) != n:
            raise ValidationError(f"expected {n} cell values, got {len(vals)}")
        acc = Fraction(0)
        for i in range(n):
            for j in range(n):
                acc += vals[i] * self.matrix[i, j] * vals[j]
        return acc


def beta_form(s: Stencil, face_centered: bool = False) -> SmoothnessForm:
    """The smoothness-indicator matrix of a stencil.

    B[l][l'] = sum_{k=1}^{M} integral of alpha_h,l^(k) * alpha_h,l'^(k) over
    one cell.  The integration interval is the pivot cell xi in [-1/2, 1/2];
    pass face_centered=True for the variant over xi in [0, 1].
    """
    if s.m < 1:
        raise ValidationError("smoothness forms need at least two cells")
    lo, hi = (Fraction(0), Fraction(1)) if face_centered else (Fraction(-1, 2), Fraction(1, 2))
    alpha = basis(s).alpha_h
    derivatives = []
    for p in alpha:
        ladder = []
        q = p
        for _ in range(s.m):
            q = q.derivative()
            ladder.append(q)
        derivatives.append(ladder)
    n = s.m + 1
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = Fraction(0)
            for k in range(s.m):
                acc += poly_definite_integral(derivatives[i][k] * derivatives[j][k], lo, hi)
            row.append(acc)
        rows.append(row)
    return SmoothnessForm(s, CoeffTable.of(rows), face_centered)
