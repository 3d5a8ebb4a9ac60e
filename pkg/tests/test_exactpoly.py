import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbitseries.exactpoly import (Cyclo, LinExp, Literal, NotDivisibleError,
                                   ProductExpr, QLaurent, ZeroExponentError,
                                   cyclo_factor, exact_div, poly_gcd,
                                   product_expr, random_qlaurent, reduce_pair)


def qpoly(terms):
    return QLaurent.from_q_terms({F(k): F(v) for k, v in terms.items()})


coeffs = st.dictionaries(st.integers(-10, 10),
                         st.fractions(min_value=-5, max_value=5), max_size=5)


class TestLinExp:
    def test_eval_is_exact(self):
        e = LinExp(F(2), F(3, 2))
        assert e(2) == 5
        assert e(F(1, 3)) == F(5, 2)

    def test_arithmetic(self):
        e = LinExp(1, F(1, 2)) + LinExp(2, F(1, 2))
        assert e == LinExp(3, 1)
        assert (8 - e) == LinExp(5, -1)
        assert -e == LinExp(-3, -1)
        assert e * 2 == LinExp(6, 2)

    def test_quarter_lattice(self):
        # every exponent evaluated at a in {2,4,8} lands on quarter-integers
        for e in (LinExp(2, F(5, 4)), LinExp(-2, F(5, 4)), LinExp(0, F(1, 4))):
            for a in (1, 2, 4, 8):
                assert (4 * e(a)).denominator == 1


class TestQLaurentRing:
    @given(coeffs, coeffs)
    @settings(max_examples=60, deadline=None)
    def test_addition_commutes(self, c1, c2):
        p, r = QLaurent(c1), QLaurent(c2)
        assert p + r == r + p

    @given(coeffs, coeffs)
    @settings(max_examples=60, deadline=None)
    def test_multiplication_commutes(self, c1, c2):
        p, r = QLaurent(c1), QLaurent(c2)
        assert p * r == r * p

    @given(coeffs, coeffs, coeffs)
    @settings(max_examples=40, deadline=None)
    def test_associative_distributive(self, c1, c2, c3):
        p, r, s = QLaurent(c1), QLaurent(c2), QLaurent(c3)
        assert (p * r) * s == p * (r * s)
        assert p * (r + s) == p * r + p * s

    def test_no_zero_coefficients_stored(self):
        p = QLaurent({3: F(1), 4: F(0)}) + QLaurent({3: F(-1)})
        assert p.is_zero()
        assert p.coeffs == {}

    def test_power(self):
        p = qpoly({1: 1, 0: -1})
        assert p ** 3 == qpoly({3: 1, 2: -3, 1: 3, 0: -1})


class TestExactDiv:
    def test_quartic_by_quadratic(self):
        assert exact_div(qpoly({4: 1, 0: -1}), qpoly({2: 1, 0: -1})) == \
            qpoly({2: 1, 0: 1})

    def test_long_division_oracle_value(self):
        # frozen from independent polynomial long division over Q
        num = qpoly({8: 1, 0: -1}) * qpoly({12: 1, 0: -1})
        got = exact_div(num, qpoly({4: 1, 0: -1}))
        assert got == qpoly({16: 1, 12: 1, 4: -1, 0: -1})

    def test_not_divisible_carries_remainder(self):
        with pytest.raises(NotDivisibleError) as err:
            exact_div(qpoly({3: 1, 0: -1}), qpoly({2: 1, 0: -1}))
        assert not err.value.remainder.is_zero()

    @given(coeffs, coeffs)
    @settings(max_examples=40, deadline=None)
    def test_product_division_roundtrip(self, c1, c2):
        p, r = QLaurent(c1), QLaurent(c2)
        if p.is_zero() or r.is_zero():
            return
        assert exact_div(p * r, r) == p

    def test_laurent_units_divide(self):
        p = QLaurent({-3: F(1), 1: F(2)})
        u = QLaurent({-2: F(1, 2)})
        assert exact_div(p * u, u) == p

    def test_gcd_reduction_coprime(self):
        rng = random.Random(7)
        for _ in range(25):
            a = random_qlaurent(rng)
            b = random_qlaurent(rng)
            g = random_qlaurent(rng)
            if b.is_zero() or g.is_zero():
                continue
            num, den = reduce_pair(a * g, b * g)
            common = poly_gcd(num, den)
            assert common == QLaurent.one()
            if not a.is_zero():
                # the reduced pair represents the same rational function
                assert num * b == den * a or num * b == -(den * a) or \
                    exact_div(num * b, den * a) is not None


class TestEval:
    def test_polynomial_value(self):
        assert qpoly({2: 1, 0: 1}).eval_at(2) == 5

    def test_fourth_power_point(self):
        # t^2 - 1 at q = 16 means t = 2
        p = QLaurent({2: F(1), 0: F(-1)})
        assert p.eval_at(16) == 3

    def test_fractional_power_error(self):
        p = QLaurent({2: F(1), 0: F(-1)})
        from orbitseries.exactpoly import FractionalPowerError
        with pytest.raises(FractionalPowerError):
            p.eval_at(2)

    def test_triples_round_trip(self):
        p = QLaurent({-2: F(3, 4), 5: F(-1)})
        assert QLaurent.from_triples(p.to_triples()) == p
        assert p.to_triples() == [(-2, 3, 4), (5, -1, 1)]


class TestProductExpr:
    def test_single_factor(self):
        e = product_expr(1, 0, plus=[LinExp(0, 1)])
        num, den = e.expand(2)
        assert num == qpoly({2: 1, 0: -1})
        assert den == QLaurent.one()

    def test_constant_and_inverse_factor(self):
        e = product_expr(F(1, 2), 0, plus=[2], minus=[1])
        num, den = e.expand(3)
        assert num == qpoly({2: F(1, 2), 0: F(-1, 2)})
        assert den == qpoly({1: 1, 0: -1})

    def test_zero_exponent_error(self):
        e = product_expr(1, 0, plus=[LinExp(-2, 1)])
        with pytest.raises(ZeroExponentError):
            e.expand(2)
        # q^0 + 1 = 2 does not degenerate
        e = product_expr(1, 0, plus=[(LinExp(-2, 1), -1)])
        num, den = e.expand(2)
        assert num == QLaurent.constant(2)

    def test_is_polynomial_examples(self):
        assert qpoly({2: 1, 0: 1}).is_q_polynomial()
        assert not QLaurent({2: F(1), 0: F(-1)}).is_q_polynomial()  # q^(1/2)-1

    def test_expand_multiplicative(self):
        e1 = product_expr(2, LinExp(1, 1), plus=[LinExp(0, 1)], minus=[2])
        e2 = product_expr(F(1, 3), 1, plus=[3, (1, -1)])
        n1, d1 = e1.expand(4)
        n2, d2 = e2.expand(4)
        n, d = (e1 * e2).expand(4)
        assert n == n1 * n2 and d == d1 * d2

    def test_degree_matches_exponent_sum(self):
        rng = random.Random(3)
        for _ in range(20):
            plus = [LinExp(rng.randint(1, 5), F(rng.randint(1, 4), 2))
                    for _ in range(rng.randint(1, 4))]
            minus = [LinExp(rng.randint(1, 3), F(rng.randint(0, 2), 2))
                     for _ in range(rng.randint(0, 2))]
            pref = LinExp(rng.randint(0, 5), rng.randint(0, 3))
            e = product_expr(1, pref, plus=plus, minus=minus)
            for a in (1, 2, 4, 8):
                num, den = e.reduced(a)
                want = pref(a) + sum(x(a) for x in plus) - sum(x(a) for x in minus)
                assert num.degree_in_q() - den.degree_in_q() == want

    def test_literal_factor(self):
        phi6 = QLaurent.from_q_terms({2: 1, 1: -1, 0: 1})
        e = ProductExpr(F(1), LinExp(0), ((Literal(phi6), 1),))
        num, den = e.expand(1)
        assert num == phi6


class TestCyclo:
    def test_signs(self):
        assert cyclo_factor(3, 1) == qpoly({3: 1, 0: -1})
        assert cyclo_factor(3, -1) == qpoly({3: 1, 0: 1})

    def test_cyclo_str(self):
        assert "+" in str(Cyclo(LinExp(3), -1))
