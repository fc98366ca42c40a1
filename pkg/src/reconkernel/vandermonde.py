"""Stencils, Stirling numbers, and exact inverse Vandermonde matrices.

A stencil (m_minus, m_plus) is the contiguous cell-index window
{-m_minus, ..., m_plus} around a pivot cell.  The Vandermonde matrix of its
node offsets is inverted in closed form: the inverse on the left-aligned
window {0, ..., M} has entries built from unsigned Stirling numbers of the
first kind, and a binomial shift transports that inverse to any window.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import comb, factorial
from typing import Iterable, Sequence

from .exact import Rational, ValidationError, _rat

__all__ = [
    "CoeffTable",
    "Stencil",
    "comb0",
    "inv_vandermonde",
    "inv_vandermonde_left_aligned",
    "nu",
    "stirling1_unsigned",
    "vandermonde",
]


@dataclass(frozen=True, order=True)
class Stencil:
    """Cell window {-m_minus, ..., m_plus} around pivot cell 0.

    Either bound may be negative (the window need not contain the pivot);
    only the total width M = m_minus + m_plus must be nonnegative.
    """

    m_minus: int
    m_plus: int

    def __post_init__(self) -> None:
        for v in (self.m_minus, self.m_plus):
            if isinstance(v, bool) or not isinstance(v, int):
                raise ValidationError("stencil bounds must be integers")
        if self.m_minus + self.m_plus < 0:
            raise ValidationError("stencil width m_minus + m_plus must be nonnegative")

    @property
    def m(self) -> int:
        """Number of intervals spanned; the window holds m + 1 cells."""
        return self.m_minus + self.m_plus

    def offsets(self) -> range:
        return range(-self.m_minus, self.m_plus + 1)

    def __str__(self) -> str:
        return f"({self.m_minus},{self.m_plus})"


@dataclass(frozen=True)
class CoeffTable:
    """Immutable dense matrix of exact rationals."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise ValidationError("coefficient tables must be nonempty")
        width = len(self.entries[0])
        rows = []
        for row in self.entries:
            if len(row) != width:
                raise ValidationError("coefficient tables must be rectangular")
            rows.append(tuple(_rat(c) for c in row))
        object.__setattr__(self, "entries", tuple(rows))

    @classmethod
    def of(cls, rows: Iterable[Sequence[Rational]]) -> "CoeffTable":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "CoeffTable":
        if n < 1:
            raise ValidationError("identity size must be positive")
        return cls.of([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def matmul(self, other: "CoeffTable") -> "CoeffTable":
        if self.cols != other.rows:
            raise ValidationError("matrix shapes do not compose")
        out = []
        for i in range(self.rows):
            out.append(
                [
                    sum((self.entries[i][k] * other.entries[k][j] for k in range(self.cols)), Fraction(0))
                    for j in range(other.cols)
                ]
            )
        return CoeffTable.of(out)

    @property
    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def to_strings(self) -> list[list[str]]:
        return [[str(c) for c in row] for row in self.entries]


def comb0(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever the pair is out of range."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


@cache
def stirling1_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind.

    Recurrence [n+1, k] = n*[n, k] + [n, k-1] with [n, 0] = delta_{n0};
    counts permutations of n elements with k cycles.  Out-of-range k gives 0.
    """
    if isinstance(n, bool) or isinstance(k, bool) or not isinstance(n, int) or not isinstance(k, int):
        raise ValidationError("Stirling indices must be integers")
    if n < 0 or k < 0:
        raise ValidationError("Stirling indices must be nonnegative")
    if k > n:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    return (n - 1) * stirling1_unsigned(n - 1, k) + stirling1_unsigned(n - 1, k - 1)


@cache
def vandermonde(s: Stencil) -> CoeffTable:
    """Vandermonde matrix of the stencil's node offsets: row l holds l^j."""
    m = s.m
    return CoeffTable.of([[Fraction(ell**j) for j in range(m + 1)] for ell in s.offsets()])


@cache
def inv_vandermonde_left_aligned(m: int) -> CoeffTable:
    """Closed-form inverse of the Vandermonde matrix on the window {0, ..., m}.

    Zero-based entry (i, j) is
        (-1)^(i+j) * sum_{k=0}^{m} C(k, j) * [k, i] / k!
    with [k, i] the unsigned Stirling numbers.
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise ValidationError("window size must be a nonnegative integer")
    rows = []
    for i in range(m + 1):
        row = []
        for j in range(m + 1):
            total = sum(
                (
                    Fraction(comb0(k, j) * stirling1_unsigned(k, i), factorial(k))
                    for k in range(m + 1)
                ),
                Fraction(0),
            )
            row.append(total if (i + j) % 2 == 0 else -total)
        rows.append(row)
    return CoeffTable.of(rows)


@cache
def inv_vandermonde(s: Stencil) -> CoeffTable:
    """Exact inverse Vandermonde matrix on an arbitrary stencil.

    Transports the left-aligned inverse by the binomial shift: zero-based

        entry(i, j) = sum_{n=0}^{m-i} m_minus^n * C(n+i, n) * L[i+n][j],

    where L is the left-aligned inverse and m_minus^n is the literal signed
    power, so windows right of the pivot (negative m_minus) work unchanged.
    """
    m = s.m
    left = inv_vandermonde_left_aligned(m)
    rows = []
    for i in range(m + 1):
        row = []
        for j in range(m + 1):
            total = sum(
                (
                    Fraction(s.m_minus**n * comb0(n + i, n)) * left[i + n, j]
                    for n in range(m - i + 1)
                ),
                Fraction(0),
            )
            row.append(total)
        rows.append(row)
    return CoeffTable.of(rows)


def nu(s: Stencil, m: int, k: int) -> Fraction:
    """Moment of inverse-Vandermonde row m against the k-th powers of the nodes.

    For 0 <= m, k <= M this is delta_{mk} (exact polynomial reproduction);
    for k > M the values are the generators of the truncation-error
    expansions.
    """
    if not 0 <= m <= s.m:
        raise ValidationError(f"row index {m} outside 0..{s.m}")
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise ValidationError("power must be a nonnegative integer")
    vinv = inv_vandermonde(s)
    return sum(
        (vinv[m, pos] * Fraction(ell**k) for pos, ell in enumerate(s.offsets())),
        Fraction(0),
    )
