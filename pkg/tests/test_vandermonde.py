"""Stencil node-power matrices, their exact inverses, and the nu coefficients."""

from fractions import Fraction as F

import pytest

from reconkernel.exact import ValidationError
from reconkernel.vandermonde import (
    CoeffTable,
    Stencil,
    comb0,
    inv_vandermonde,
    inv_vandermonde_left_aligned,
    nu,
    stirling1_unsigned,
    vandermonde,
)


def gauss_inverse(t: CoeffTable) -> CoeffTable:
    """Independent inverse via Gauss-Jordan elimination with partial pivoting."""
    n = t.rows
    aug = [
        [t[i, j] for j in range(n)] + [F(1) if i == j else F(0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        scale = 1 / aug[col][col]
        aug[col] = [x * scale for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return CoeffTable.of([row[n:] for row in aug])


def all_stencils(max_extent, max_m=None):
    for mm in range(-max_extent, max_extent + 1):
        for mp in range(-max_extent, max_extent + 1):
            if mm + mp >= 0 and (max_m is None or mm + mp <= max_m):
                yield Stencil(mm, mp)


class TestStencil:
    def test_properties(self):
        s = Stencil(1, 2)
        assert s.m == 3
        assert list(s.offsets()) == [-1, 0, 1, 2]
        assert str(s) == "(1,2)"

    def test_negative_side_allowed(self):
        s = Stencil(-1, 4)
        assert list(s.offsets()) == [1, 2, 3, 4]

    def test_negative_width_rejected(self):
        with pytest.raises(ValidationError):
            Stencil(1, -2)

    def test_non_integer_rejected(self):
        with pytest.raises(ValidationError):
            Stencil(F(1, 2), 1)
        with pytest.raises(ValidationError):
            Stencil(True, 1)

    def test_ordering_is_total(self):
        assert sorted([Stencil(2, 0), Stencil(0, 2), Stencil(1, 1)]) == [
            Stencil(0, 2),
            Stencil(1, 1),
            Stencil(2, 0),
        ]


class TestCoeffTable:
    def test_requires_rectangular(self):
        with pytest.raises(ValidationError):
            CoeffTable.of([[1, 2], [3]])
        with pytest.raises(ValidationError):
            CoeffTable.of([])

    def test_matmul_identity(self):
        t = CoeffTable.of([[1, 2], [3, 4]])
        assert t.matmul(CoeffTable.identity(2)) == t

    def test_matmul_shape_check(self):
        t = CoeffTable.of([[1, 2]])
        with pytest.raises(ValidationError):
            t.matmul(t)

    def test_symmetry_predicate(self):
        assert CoeffTable.of([[1, 5], [5, 2]]).is_symmetric
        assert not CoeffTable.of([[1, 5], [4, 2]]).is_symmetric


class TestHelpers:
    def test_comb0_in_range(self):
        assert comb0(5, 2) == 10
        assert comb0(0, 0) == 1

    def test_comb0_out_of_range_is_zero(self):
        assert comb0(2, 5) == 0
        assert comb0(-1, 0) == 0
        assert comb0(3, -1) == 0

    def test_stirling_triangle(self):
        # unsigned first kind: rows n = 0..4
        assert [stirling1_unsigned(4, k) for k in range(5)] == [0, 6, 11, 6, 1]
        assert [stirling1_unsigned(3, k) for k in range(4)] == [0, 2, 3, 1]
        assert stirling1_unsigned(0, 0) == 1
        assert stirling1_unsigned(5, 7) == 0

    @pytest.mark.parametrize("n", range(13))
    def test_stirling_generates_rising_factorial(self, n):
        # x(x+1)...(x+n-1) = sum_k stirling1(n,k) x^k, checked coefficientwise
        from reconkernel.exact import RatPoly

        rising = RatPoly.of([1])
        for i in range(n):
            rising = rising * RatPoly.of([i, 1])
        expected = RatPoly.of([stirling1_unsigned(n, k) for k in range(n + 1)])
        assert rising == expected

    def test_stirling_rejects_negative(self):
        with pytest.raises(ValidationError):
            stirling1_unsigned(-1, 0)


class TestVandermondeMatrices:
    def test_matrix_entries(self):
        v = vandermonde(Stencil(1, 1))
        assert v == CoeffTable.of([[1, -1, 1], [1, 0, 0], [1, 1, 1]])

    def test_left_aligned_small_cases(self):
        assert inv_vandermonde_left_aligned(1) == CoeffTable.of([[1, 0], [-1, 1]])
        assert inv_vandermonde_left_aligned(2) == CoeffTable.of(
            [[1, 0, 0], [F(-3, 2), 2, F(-1, 2)], [F(1, 2), -1, F(1, 2)]]
        )

    def test_left_aligned_is_left_aligned_stencil(self):
        for m in range(7):
            assert inv_vandermonde_left_aligned(m) == inv_vandermonde(Stencil(0, m))

    @pytest.mark.parametrize("s", list(all_stencils(4, max_m=8)), ids=str)
    def test_inverse_matches_gaussian_elimination(self, s):
        assert inv_vandermonde(s) == gauss_inverse(vandermonde(s))

    def test_negative_side_stencil_inverse(self):
        s = Stencil(-1, 4)
        assert inv_vandermonde(s).matmul(vandermonde(s)) == CoeffTable.identity(4)


class TestNu:
    @pytest.mark.parametrize("s", [Stencil(1, 1), Stencil(0, 3), Stencil(2, 2), Stencil(-1, 4)], ids=str)
    def test_kronecker_within_range(self, s):
        for m in range(s.m + 1):
            for k in range(s.m + 1):
                assert nu(s, m, k) == (1 if m == k else 0)

    @pytest.mark.parametrize("s", [Stencil(1, 1), Stencil(2, 1), Stencil(0, 4), Stencil(-2, 5)], ids=str)
    def test_power_reproduction_at_nodes(self, s):
        # sum_m nu(s,m,k) l^m recovers l^k at every node, also beyond k = M
        for k in range(s.m + 5):
            for l in s.offsets():
                acc = sum(nu(s, m, k) * F(l) ** m for m in range(s.m + 1))
                assert acc == F(l) ** k

    def test_validates_row_index(self):
        with pytest.raises(ValidationError):
            nu(Stencil(1, 1), 3, 0)
        with pytest.raises(ValidationError):
            nu(Stencil(1, 1), -1, 0)
        with pytest.raises(ValidationError):
            nu(Stencil(1, 1), 0, -1)
