from fractions import Fraction

import pytest

from treespectra import (
    IntPolynomial,
    LambdaParam,
    char_poly,
    cyclotomic,
    from_edge_list,
    free_trees,
    laplacian,
    minimal_poly_lambda,
    multiplicity_exact,
    rational_nullity,
    root_multiplicity,
)
from treespectra.errors import ZeroPolynomial
from treespectra.exact import poly_divmod, poly_mul


def path(n):
    return from_edge_list([(i, i + 1) for i in range(1, n)])


def star(k):
    return from_edge_list([(1, i) for i in range(2, k + 2)])


class TestLambdaParam:
    def test_reduced_ratio_and_value(self):
        p = LambdaParam(4, 1)  # 3/9 reduces to 1/3
        assert p.ratio == Fraction(1, 3)
        assert p == LambdaParam(1, 0)
        assert abs(p.value - 1.0) < 1e-12

    def test_ratio_terms_both_odd(self):
        for q in range(1, 8):
            for b in range(q):
                r = LambdaParam(q, b).ratio
                assert r.numerator % 2 == 1 and r.denominator % 2 == 1
                assert 0 < r < 1

    def test_validation(self):
        with pytest.raises(ValueError):
            LambdaParam(0, 0)
        with pytest.raises(ValueError):
            LambdaParam(2, 2)


class TestLaplacian:
    def test_star(self):
        assert laplacian(star(3)) == (
            (3, -1, -1, -1),
            (-1, 1, 0, 0),
            (-1, 0, 1, 0),
            (-1, 0, 0, 1),
        )

    def test_signless(self):
        L = laplacian(path(3), signless=True)
        assert L == ((1, 1, 0), (1, 2, 1), (0, 1, 1))


class TestRationalNullity:
    def test_star_at_one(self):
        assert rational_nullity(laplacian(star(3)), 1) == 2

    def test_p3_at_one(self):
        assert rational_nullity(laplacian(path(3)), 1) == 1

    def test_p4_at_one(self):
        assert rational_nullity(laplacian(path(4)), 0) == 1
        assert rational_nullity(laplacian(path(4)), 1) == 0

    def test_fractional_shift(self):
        # 2 - sqrt(2) is irrational, so any rational shift misses it
        assert rational_nullity(laplacian(path(4)), Fraction(3, 2)) == 0

    def test_kernel_is_always_one_dimensional(self):
        for n in range(2, 9):
            for tree in free_trees(n):
                assert rational_nullity(laplacian(tree), 0) == 1


class TestCharPoly:
    def test_p2(self):
        assert char_poly(laplacian(path(2))).coeffs == (0, -2, 1)

    def test_star(self):
        assert char_poly(laplacian(star(3))).coeffs == (0, -4, 9, -6, 1)

    def test_one_by_one(self):
        assert char_poly(((0,),)).coeffs == (0, 1)

    def test_linear_coefficient_counts_spanning_trees(self):
        # for a tree: coefficient of x is (-1)^(n-1) * n, constant term 0
        for n in range(2, 9):
            for tree in free_trees(n):
                coeffs = char_poly(laplacian(tree)).coeffs
                assert coeffs[0] == 0
                assert coeffs[1] == (-1) ** (n - 1) * n

    def test_matches_root_sum(self):
        # trace = sum of eigenvalues = -coefficient of x^(n-1)
        t = from_edge_list([(1, 2), (2, 3), (2, 4), (4, 5)])
        coeffs = char_poly(laplacian(t)).coeffs
        assert coeffs[-2] == -sum(len(a) for a in t.adjacency)


class TestCyclotomic:
    def test_first(self):
        assert cyclotomic(1).coeffs == (-1, 1)

    def test_prime(self):
        assert cyclotomic(5).coeffs == (1, 1, 1, 1, 1)

    def test_composite(self):
        assert cyclotomic(6).coeffs == (1, -1, 1)
        assert cyclotomic(10).coeffs == (1, -1, 1, -1, 1)
        assert cyclotomic(12).coeffs == (1, 0, -1, 0, 1)

    def test_degrees_sum_to_m(self):
        for m in range(1, 40):
            total = sum(cyclotomic(d).degree for d in range(1, m + 1) if m % d == 0)
            assert total == m


class TestMinimalPoly:
    def test_ratio_one_third_gives_one(self):
        mu = minimal_poly_lambda(LambdaParam(1, 0))
        assert mu.coeffs == (-1, 1)

    def test_ratio_one_fifth(self):
        mu = minimal_poly_lambda(LambdaParam(2, 0))
        assert mu.coeffs == (1, -3, 1)

    def test_conjugate_ratio_shares_minimal_poly(self):
        assert minimal_poly_lambda(LambdaParam(2, 1)).coeffs == (1, -3, 1)

    def test_vanishes_at_the_eigenvalue(self):
        for q in range(1, 7):
            for b in range(q):
                param = LambdaParam(q, b)
                mu = minimal_poly_lambda(param)
                assert mu.coeffs[-1] == 1
                assert abs(mu(param.value)) < 1e-8


class TestRootMultiplicity:
    def test_basic(self):
        p = poly_mul(
            poly_mul(IntPolynomial((-1, 1)), IntPolynomial((-1, 1))),
            IntPolynomial((2, 1)),
        )
        assert root_multiplicity(p, IntPolynomial((-1, 1))) == 2
        assert root_multiplicity(p, IntPolynomial((2, 1))) == 1
        assert root_multiplicity(p, IntPolynomial((5, 1))) == 0

    def test_zero_polynomial(self):
        with pytest.raises(ZeroPolynomial):
            root_multiplicity(IntPolynomial(()), IntPolynomial((-1, 1)))


class TestPolyHelpers:
    def test_divmod_exact(self):
        q, r = poly_divmod(IntPolynomial((0, -2, 1)), IntPolynomial((0, 1)))
        assert q.coeffs == (-2, 1) and r.degree < 0

    def test_divmod_remainder(self):
        q, r = poly_divmod(IntPolynomial((1, 0, 1)), IntPolynomial((1, 1)))
        assert r.coeffs == (2,)

    def test_content(self):
        assert IntPolynomial((4, -6, 2)).content == 2
        assert IntPolynomial(()).content == 0


class TestMultiplicityExact:
    def test_star_at_unit(self):
        assert multiplicity_exact(star(3), LambdaParam(1, 0)) == 2

    def test_spider222(self):
        t = from_edge_list([(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)])
        assert multiplicity_exact(t, LambdaParam(2, 0)) == 2
        assert multiplicity_exact(t, LambdaParam(2, 1)) == 2

    def test_p4_misses_unit(self):
        assert multiplicity_exact(path(4), LambdaParam(1, 0)) == 0

    def test_agrees_with_rational_nullity_at_one(self):
        # ratio 1/3 means eigenvalue exactly 1, where nullity is computable
        for n in range(2, 10):
            for tree in free_trees(n):
                exact = rational_nullity(laplacian(tree), 1)
                assert multiplicity_exact(tree, LambdaParam(1, 0)) == exact


class TestIntegerEigenvalues:
    def test_large_integer_eigenvalues_simple_and_divide_n(self):
        # known structural fact checked exhaustively for small orders
        for n in range(2, 11):
            for tree in free_trees(n):
                cp = char_poly(laplacian(tree))
                for lam in range(2, n + 1):
                    mult = root_multiplicity(cp, IntPolynomial((-lam, 1)))
                    if mult:
                        assert mult == 1
                        assert n % lam == 0
