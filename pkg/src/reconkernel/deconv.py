"""Deconvolution coefficients relating a function to its sliding cell average.

If f is the unit-width sliding average of h (a reconstruction pair with
spacing folded into the variable), the Taylor jets of the two functions are
related by sparse triangular maps whose entries are the rationals computed
here.  The forward direction (h to f) uses 1/(2^(2l) (2l+1)!); the inverse
direction is governed by the tau numbers, the Taylor coefficients of

    g(x) = (x/2) / sinh(x/2).

A two-fold average (average of the average) has its own coefficient pair,
used for exact second-derivative flux differences.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import comb, factorial

from .exact import PowerSeries, RatPoly, ValidationError, series_divide

__all__ = [
    "deconv_forward_coeff",
    "deconv_inverse_coeff",
    "double_forward_coeff",
    "double_inverse_coeff",
    "shifted_taylor_poly",
    "tau",
    "tau_gf_oracle",
]


def _index(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValidationError("index must be a nonnegative integer")
    return n


@cache
def tau(n: int) -> Fraction:
    """The n-th tau number.

    tau_0 = 1, every odd entry vanishes, and the even entries satisfy

        tau_{2k} = - sum_{s=1}^{k} tau_{2k-2s} / (2^(2s) (2s+1)!),

    which is the convolution identity forcing the forward and inverse
    deconvolution maps to be mutual inverses.  Successful values are memoized,
    and the memo behaves as an idempotent cache: the recurrence is
    deterministic, so concurrent fills of the same index agree.
    """
    _index(n)
    if n == 0:
        return Fraction(1)
    if n % 2:
        return Fraction(0)
    k = n // 2
    return -sum(tau(2 * k - 2 * s) / (4**s * factorial(2 * s + 1)) for s in range(1, k + 1))


def tau_gf_oracle(n: int) -> Fraction:
    """n-th Taylor coefficient of (x/2)/sinh(x/2), by exact series division.

    Independent derivation path for `tau`: expand sinh(x/2)/(x/2) directly
    and divide 1 by it.  The jet is carried two orders past n to guard the
    last coefficient.
    """
    _index(n)
    order = n + 2
    cs = []
    for k in range(order + 1):
        if k % 2:
            cs.append(Fraction(0))
        else:
            m = k // 2
            cs.append(Fraction(1, 4**m * factorial(2 * m + 1)))
    one = PowerSeries.of([1], order=order)
    return series_divide(one, PowerSeries(tuple(cs)), order).coeff(n)


def deconv_forward_coeff(l: int) -> Fraction:
    """Weight of h^(n+2l) in the expansion of f^(n): 1/(2^(2l) (2l+1)!)."""
    _index(l)
    return Fraction(1, 4**l * factorial(2 * l + 1))


def deconv_inverse_coeff(l: int) -> Fraction:
    """Weight of f^(n+2l) in the expansion of h^(n): tau_{2l}."""
    _index(l)
    return tau(2 * l)


def shifted_taylor_poly(s: int) -> RatPoly:
    """Coefficient polynomial of f^(s) in the jet of h at a shifted point.

    Expanding h(x + xi*dx) in powers of dx with f-derivatives at x as the
    basis gives, at order s, the degree-s polynomial

        sum_{l=0}^{floor(s/2)} tau_{2l} xi^(s-2l) / (s-2l)!.
    """
    _index(s)
    coeffs = [Fraction(0)] * (s + 1)
    for l in range(s // 2 + 1):
        coeffs[s - 2 * l] = tau(2 * l) / factorial(s - 2 * l)
    return RatPoly.of(coeffs)


def double_forward_coeff(l: int) -> Fraction:
    """Weight of the two-fold average's derivatives in the expansion of f^(n)."""
    _index(l)
    num = sum(comb(2 * l + 2, 2 * s + 1) for s in range(l + 1))
    return Fraction(num, 4**l * factorial(2 * l + 2))


def double_inverse_coeff(l: int) -> Fraction:
    """Inverse weights of the two-fold average: sum_{s} tau_{2s} tau_{2l-2s}.

    The Cauchy square of the tau sequence, so the duality
    sum_s double_inverse_coeff(s) * double_forward_coeff(k-s) = delta_{k0}
    holds term by term.
    """
    _index(l)
    return sum((tau(2 * s) * tau(2 * l - 2 * s) for s in range(l + 1)), Fraction(0))
