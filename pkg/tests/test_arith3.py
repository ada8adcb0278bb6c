"""Valuations, the Legendre symbol, and quadratic-form representability."""

import pytest
from hypothesis import given, settings, strategies as st

from q3series.arith3 import (INFINITE, Valuation3, is_prime, is_sum_of_two_squares,
                             is_sum_of_two_squares_search, is_x2_plus_3y2, legendre,
                             pi3, series_min_valuation3)
from q3series.series import TruncatedSeries


class TestPi3:
    def test_basic(self):
        assert pi3(9) == 2
        assert pi3(8748) == 7  # 4 * 3^7
        assert pi3(1) == 0
        assert pi3(-27) == 3

    def test_zero_is_infinite(self):
        assert pi3(0).is_infinite
        assert pi3(0) == INFINITE
        assert pi3(0) > 10**9

    def test_ordering(self):
        assert Valuation3(2) < Valuation3(3) < INFINITE
        assert Valuation3(5) >= 5
        assert not (INFINITE < INFINITE)


class TestSeriesMinValuation:
    def test_simple(self):
        s = TruncatedSeries.from_terms([(0, 9), (1, 27)], 3)
        assert series_min_valuation3(s, 3) == 2

    def test_zero_series(self):
        assert series_min_valuation3(TruncatedSeries.zero(5), 5).is_infinite

    def test_extracted_progression(self):
        # the three-color counts on 3n+2 are all divisible by 9, not 27
        from q3series.counts import CountingFunction, Kind, count_series

        p3 = count_series(CountingFunction(Kind.P3), 61)
        sub = p3.extract_progression(3, 2, rescale=True)
        assert series_min_valuation3(sub, 20) == 2

    def test_beyond_order_rejected(self):
        with pytest.raises(ValueError):
            series_min_valuation3(TruncatedSeries.zero(5), 6)


class TestLegendre:
    def test_minus_three(self):
        assert legendre(-3, 5) == -1  # squares mod 5 are 1, 4
        assert legendre(-3, 7) == 1   # -3 is 4 = 2^2 mod 7
        assert legendre(10, 5) == 0

    def test_rejects_non_prime(self):
        with pytest.raises(ValueError):
            legendre(2, 9)
        with pytest.raises(ValueError):
            legendre(2, 2)

    @settings(max_examples=100)
    @given(st.integers(-50, 50), st.integers(-50, 50),
           st.sampled_from([3, 5, 7, 11, 13, 17, 19, 23]))
    def test_multiplicative(self, a, b, p):
        assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


class TestTwoSquares:
    def test_examples(self):
        assert is_sum_of_two_squares(2)       # 1 + 1
        assert not is_sum_of_two_squares(3)
        assert is_sum_of_two_squares(0)

    def test_odd_power_obstruction(self):
        # 2 * p^(2k+1) * (4m + p) with p | the last factor an odd power of p
        assert not is_sum_of_two_squares(2 * 7 * (4 * 1 + 7))

    def test_criterion_equals_search_up_to_10000(self):
        for n in range(10_001):
            assert is_sum_of_two_squares(n) == is_sum_of_two_squares_search(n), n


class TestX2Plus3Y2:
    def test_examples(self):
        assert is_x2_plus_3y2(4)   # 1 + 3
        assert not is_x2_plus_3y2(2)
        assert is_x2_plus_3y2(0)

    def test_prime_power_obstruction(self):
        # 8 p^{2k+1} n + 4 p^{2k+2} at p=5, k=0, n=1
        assert not is_x2_plus_3y2(8 * 5 + 4 * 25)


def test_is_prime_small():
    primes = [p for p in range(60) if is_prime(p)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


@settings(max_examples=100)
@given(st.integers(-10**6, 10**6).filter(lambda x: x != 0),
       st.integers(-10**6, 10**6).filter(lambda x: x != 0))
def test_pi3_additive_on_products(a, b):
    assert pi3(a * b) == pi3(a) + pi3(b)
