"""Floating-point validation harness for the exact stencil coefficients.

The exponential is the canonical test field because its sliding-average
pair is known in closed form: when the sampled field is f = exp on a grid
of width dx, the underlying point-value field is g_tau(dx) * exp with
g_tau(x) = (x/2)/sinh(x/2).  That gives machine-accurate reference values
for both reconstruction targets without quadrature, so measured errors are
pure truncation error down to the roundoff floor.

Grid widths are negative powers of two throughout; they are exact floats,
so grid generation adds no noise of its own.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from fractions import Fraction
from math import exp, fsum, isfinite, log, sinh

from .deconv import tau
from .exact import ValidationError, poly_eval
from .recon import basis, face_coeffs
from .vandermonde import Stencil

__all__ = [
    "ConvergenceReport",
    "G_TAU_SERIES_CUTOFF",
    "SampleSet",
    "convergence_study",
    "derivative_coeffs",
    "exp_cell_average",
    "exp_pair_reference",
    "g_tau_float",
    "halving_slope",
    "non_interpolation_check",
    "reconstruct_face",
]

#: Below this width the closed form of g_tau is replaced by its Taylor jet.
G_TAU_SERIES_CUTOFF = 2.0**-10

#: Unit roundoff of binary64: half the spacing between 1.0 and its successor.
_UNIT_ROUNDOFF = sys.float_info.epsilon / 2

#: Errors smaller than this multiple of the unit roundoff times the reference
#: magnitude are treated as roundoff and excluded from order fits.
ROUNDOFF_FLOOR_FACTOR = 1.0e3


def g_tau_float(x: float) -> float:
    """The attenuation factor (x/2)/sinh(x/2) with a series branch near 0.

    The removable singularity at 0 evaluates to 1.  Inside the cutoff the
    quotient is replaced by the jet 1 - x^2/24 + 7x^4/5760, whose next term
    is far below double precision there; the coefficients are the tau
    numbers themselves.
    """
    if abs(x) < G_TAU_SERIES_CUTOFF:
        x2 = x * x
        return 1.0 + x2 * (float(tau(2)) + x2 * float(tau(4)))
    half = 0.5 * x
    return half / sinh(half)


def exp_pair_reference(x: float, delta_x: float) -> float:
    """Point value at x of the field whose width-delta_x averages are exp.

    Returns g_tau(delta_x) * e^x: the exact reconstruction of the
    exponential, hence the truth value every stencil is measured against.
    """
    if not (isfinite(delta_x) and delta_x > 0):
        raise ValidationError("delta_x must be positive and finite")
    return g_tau_float(delta_x) * exp(x)


def exp_cell_average(x: float, delta_x: float) -> float:
    """Width-delta_x sliding average of exp at x, in cancellation-free form.

    Equal to (e^{x+dx/2} - e^{x-dx/2})/dx but evaluated as e^x / g_tau(dx),
    which stays fully accurate for small widths.
    """
    if not (isfinite(delta_x) and delta_x > 0):
        raise ValidationError("delta_x must be positive and finite")
    return exp(x) / g_tau_float(delta_x)


@dataclass(frozen=True)
class SampleSet:
    """Grid samples of the averaged field on one stencil.

    values[j] is the sample at pivot + offset*delta_x for the j-th offset of
    the stencil, left to right.
    """

    stencil: Stencil
    pivot: float
    delta_x: float
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        if not (isfinite(self.pivot) and isfinite(self.delta_x) and self.delta_x > 0):
            raise ValidationError("pivot must be finite and delta_x positive")
        if len(self.values) != self.stencil.m + 1:
            raise ValidationError(
                f"stencil {self.stencil} needs {self.stencil.m + 1} samples, got {len(self.values)}"
            )
        if not all(isfinite(v) for v in self.values):
            raise ValidationError("samples must be finite")

    @classmethod
    def from_function(cls, s: Stencil, fn, pivot: float, delta_x: float) -> "SampleSet":
        return cls(s, pivot, delta_x, tuple(fn(pivot + l * delta_x) for l in s.offsets()))


def reconstruct_face(samples: SampleSet) -> float:
    """Reconstructed point value at the right face of the pivot cell."""
    coeffs = face_coeffs(samples.stencil)
    return fsum(float(a) * v for a, v in zip(coeffs, samples.values))


def derivative_coeffs(s: Stencil) -> tuple[tuple[int, Fraction], ...]:
    """Exact weights of the flux difference (h at +1/2 minus h at -1/2).

    Returns (offset, weight) pairs over offsets -m_minus-1 .. m_plus; the
    dot product with samples, divided by delta_x, approximates the
    derivative of the averaged field at the pivot.  Weights sum to zero.
    """
    a = face_coeffs(s)
    lo, hi = -s.m_minus, s.m_plus
    out = []
    for j in range(lo - 1, hi + 1):
        w = Fraction(0)
        if j >= lo:
            w += a[j - lo]
        if j + 1 <= hi:
            w -= a[j + 1 - lo]
        out.append((j, w))
    return tuple(out)


@dataclass(frozen=True)
class ConvergenceReport:
    """Measured errors of one stencil and target over a dyadic grid sweep.

    fit_indices marks the entries the least-squares order fit used: the
    smallest widths whose error sits above the roundoff floor.
    """

    stencil: Stencil
    target: str
    grid_sizes: tuple[float, ...]
    errors: tuple[float, ...]
    fitted_order: float
    fit_indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.grid_sizes) != len(self.errors):
            raise ValidationError("one error per grid size required")
        if any(a <= b for a, b in zip(self.grid_sizes, self.grid_sizes[1:])):
            raise ValidationError("grid sizes must decrease strictly")


_TARGETS = ("face", "derivative")


def _fit_slope(xs: list[float], ys: list[float]) -> float:
    n = len(xs)
    xbar = fsum(xs) / n
    ybar = fsum(ys) / n
    num = fsum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
    den = fsum((x - xbar) ** 2 for x in xs)
    return num / den


def convergence_study(
    s: Stencil,
    target: str,
    grid_levels: int = 7,
    fit_window: int = 4,
) -> ConvergenceReport:
    """Measure the observed order of one reconstruction target on exp data.

    Sweeps dx = 2^-4 .. 2^-(3+grid_levels) with f = exp sampled at the
    stencil nodes.  The face target compares against g_tau(dx) e^{dx/2};
    the derivative target divides the flux difference by dx and compares
    against f'(0) = 1.  The stencil weights are applied to the float
    samples in exact rational arithmetic, so the measured errors carry no
    accumulation noise and stay truncation-dominated; what remains below
    ROUNDOFF_FLOOR_FACTOR * unit-roundoff * |truth| is the rounding of the
    samples themselves (amplified by 1/dx on the derivative target) and is
    excluded from the fit.  The order is the log-log slope over the
    fit_window smallest usable widths; fewer than three usable points leave
    the fit degenerate, which is reported as an error.
    """
    if target not in _TARGETS:
        raise ValidationError(f"target must be one of {_TARGETS}")
    if isinstance(grid_levels, bool) or not isinstance(grid_levels, int) or grid_levels < 3:
        raise ValidationError("at least 3 grid levels required")
    if isinstance(fit_window, bool) or not isinstance(fit_window, int) or fit_window < 3:
        raise ValidationError("fit window must span at least 3 points")

    face = face_coeffs(s)
    deriv = derivative_coeffs(s)
    grid_sizes = []
    errors = []
    usable = []
    for level in range(4, 4 + grid_levels):
        dx = 2.0**-level
        if target == "face":
            samples = SampleSet.from_function(s, exp, 0.0, dx)
            value = sum(c * Fraction(v) for c, v in zip(face, samples.values))
            truth = exp_pair_reference(0.5 * dx, dx)
        else:
            value = sum(w * Fraction(exp(j * dx)) for j, w in deriv) / Fraction(dx)
            truth = 1.0
        err = float(abs(value - Fraction(truth)))
        grid_sizes.append(dx)
        errors.append(err)
        if err >= ROUNDOFF_FLOOR_FACTOR * _UNIT_ROUNDOFF * abs(truth):
            usable.append(len(errors) - 1)

    if len(usable) < 3:
        raise ValidationError(
            f"degenerate fit: only {len(usable)} usable points above the roundoff floor"
        )
    window = usable[-min(fit_window, len(usable)):]
    slope = _fit_slope([log(grid_sizes[i]) for i in window], [log(errors[i]) for i in window])
    return ConvergenceReport(s, target, tuple(grid_sizes), tuple(errors), slope, tuple(window))


def non_interpolation_check(s: Stencil, delta_x: float) -> float:
    """Largest nodal gap between the reconstruction and the true point values.

    Samples f = exp at the stencil nodes, evaluates the reconstructing
    polynomial at those same nodes, and compares against the exact point
    field g_tau(dx) e^x.  The reconstruction matches the averages, not the
    point values, so the gap is strictly positive and of order dx^{M+1}.
    """
    if not (isfinite(delta_x) and delta_x > 0):
        raise ValidationError("delta_x must be positive and finite")
    alpha_h = basis(s).alpha_h
    offsets = list(s.offsets())
    samples = [exp(l * delta_x) for l in offsets]
    worst = 0.0
    for node in offsets:
        weights = [float(poly_eval(p, node)) for p in alpha_h]
        value = fsum(w * v for w, v in zip(weights, samples))
        truth = exp_pair_reference(node * delta_x, delta_x)
        worst = max(worst, abs(value - truth))
    return worst


def halving_slope(s: Stencil, delta_x: float, halvings: int = 2) -> float:
    """Log-log slope of the nodal mismatch under successive width halvings."""
    if isinstance(halvings, bool) or not isinstance(halvings, int) or halvings < 1:
        raise ValidationError("at least one halving required")
    widths = [delta_x / 2**j for j in range(halvings + 1)]
    gaps = [non_interpolation_check(s, w) for w in widths]
    if any(g <= 0.0 for g in gaps):
        raise ValidationError("mismatch vanished; slope undefined")
    return _fit_slope([log(w) for w in widths], [log(g) for g in gaps])
