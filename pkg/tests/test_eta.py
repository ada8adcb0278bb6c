"""Euler products, quotients, and the classical cube/dissection identities."""

import pytest

from q3series.eta import (EtaQuotientSpec, eta_quotient, euler_series,
                          jacobi_cube, p_cap_series)
from q3series.series import TruncatedSeries


def naive_euler_product(r, order):
    """Direct finite product of (1 - q^{rm}); the oracle for the sparse build."""
    acc = TruncatedSeries.one(order)
    m = 1
    while r * m < order:
        acc = acc.mul(TruncatedSeries.from_terms([(0, 1), (r * m, -1)], order))
        m += 1
    return acc


class TestEulerSeries:
    def test_first_terms(self):
        assert euler_series(1, 8).terms() == [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1)]

    def test_scaled(self):
        assert euler_series(3, 4).terms() == [(0, 1), (3, -1)]

    def test_constant_term(self):
        for r in (1, 2, 5):
            assert euler_series(r, 30).coeff(0) == 1

    @pytest.mark.parametrize("r", [1, 2, 3, 9])
    def test_matches_naive_product(self, r):
        order = 120
        assert euler_series(r, order).agrees_with(naive_euler_product(r, order))


class TestEtaQuotient:
    def test_regular_triple_counts(self):
        spec = EtaQuotientSpec(0, ((3, 3), (1, -3)))
        s = eta_quotient(spec, 4)
        assert [s.coeff(k) for k in range(4)] == [1, 3, 9, 19]

    def test_leading_negative_power(self):
        # E(q)^3 / (q E(q^9)^3) starts at q^{-1}
        spec = EtaQuotientSpec(-1, ((1, 3), (9, -3)))
        s = eta_quotient(spec, 5)
        assert s.offset == -1 and s.coeff(-1) == 1

    def test_empty_product(self):
        assert eta_quotient(EtaQuotientSpec(), 6).terms() == [(0, 1)]

    def test_merges_duplicate_scales(self):
        spec = EtaQuotientSpec(0, ((3, 2), (3, 1), (1, -3)))
        assert spec.factors == ((1, -3), (3, 3))

    def test_quotient_times_denominator_restores_numerator(self):
        order = 80
        quot = eta_quotient(EtaQuotientSpec(0, ((3, 9), (1, -12))), order)
        num = eta_quotient(EtaQuotientSpec(0, ((3, 9),)), order)
        den = eta_quotient(EtaQuotientSpec(0, ((1, 12),)), order)
        assert quot.mul(den).agrees_with(num, upto=order)


class TestGrammar:
    def test_parse_roundtrip(self):
        spec = EtaQuotientSpec.parse("q^-1 * E(1)^3 * E(9)^-3")
        assert spec.power_of_q == -1
        assert spec.factors == ((1, 3), (9, -3))
        assert EtaQuotientSpec.parse(str(spec)) == spec

    def test_default_exponent(self):
        assert EtaQuotientSpec.parse("E(2)").factors == ((2, 1),)

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            EtaQuotientSpec.parse("E(0)^2 + q")


class TestJacobiCube:
    def test_first_terms(self):
        assert jacobi_cube(7).terms() == [(0, 1), (1, -3), (3, 5), (6, -7)]

    def test_non_triangular_vanishes(self):
        assert jacobi_cube(7).coeff(2) == 0

    def test_equals_cube_of_euler(self):
        order = 500
        cube = euler_series(1, order).pow(3)
        assert jacobi_cube(order).agrees_with(cube)


class TestLevelThreeSum:
    def test_first_terms(self):
        # oracle: enumerate n in [-10, 10] and collect (-1)^n (6n+1) q^{n(3n+1)/2}
        collected = {}
        for n in range(-10, 11):
            e = n * (3 * n + 1) // 2
            if e < 3:
                collected[e] = collected.get(e, 0) + (-1) ** (n % 2) * (6 * n + 1)
        s = p_cap_series(3)
        assert {e: c for e, c in s.terms()} == {e: c for e, c in collected.items() if c}
        assert s.coeff(0) == 1

    def test_cube_dissection(self):
        # E(q)^3 = P(q^3) - 3 q E(q^9)^3 coefficientwise
        order = 200
        lhs = jacobi_cube(order)
        rhs = p_cap_series(order // 3 + 2).substitute_power(3).add(
            eta_quotient(EtaQuotientSpec(1, ((9, 3),)), order).scale(-3))
        assert rhs.order >= order
        assert lhs.agrees_with(rhs, upto=order)


def test_ninth_power_quotient_congruences():
    # E(q^3)^9/E(q)^9 is congruent to E(q)^18 mod 27 and to E(q^3)^6 mod 9
    order = 200
    quot = eta_quotient(EtaQuotientSpec(0, ((3, 9), (1, -9))), order)
    e18 = euler_series(1, order).pow(18)
    e36 = euler_series(3, order).pow(6)
    for e in range(order):
        assert (quot.coeff(e) - e18.coeff(e)) % 27 == 0
        assert (quot.coeff(e) - e36.coeff(e)) % 9 == 0
