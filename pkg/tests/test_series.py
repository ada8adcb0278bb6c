"""Truncated-series arithmetic: frozen examples plus randomized ring laws."""

import pytest
from hypothesis import given, settings, strategies as st

from q3series.series import TruncatedSeries, mul_sparse, solve_monic_sparse


def geometric(order):
    return TruncatedSeries(0, [1] * order, order)


class TestFromTerms:
    def test_constant(self):
        s = TruncatedSeries.from_terms([(0, 1)], 5)
        assert s.offset == 0 and s.order == 5
        assert s.terms() == [(0, 1)]

    def test_negative_exponent_placement(self):
        s = TruncatedSeries.from_terms([(-1, 1), (2, -3)], 4)
        assert s.offset == -1
        assert s.terms() == [(-1, 1), (2, -3)]

    def test_square_truncates(self):
        # (1 - q + O(q^2))^2 = 1 - 2q + O(q^2), the q^2 term is garbage and dropped
        s = TruncatedSeries.from_terms([(0, 1), (1, -1)], 2)
        sq = s.mul(s)
        assert sq.order == 2
        assert [sq.coeff(e) for e in range(2)] == [1, -2]

    def test_exponent_outside_window_rejected(self):
        with pytest.raises(ValueError):
            TruncatedSeries.from_terms([(5, 1)], 5)


class TestAdd:
    def test_cancellation(self):
        a = TruncatedSeries.from_terms([(0, 1), (1, 1)], 4)
        b = TruncatedSeries.from_terms([(0, 1), (1, -1)], 4)
        assert a.add(b).terms() == [(0, 2)]

    def test_offset_merge(self):
        a = TruncatedSeries.from_terms([(-1, 1)], 4)
        b = TruncatedSeries.from_terms([(1, 1)], 4)
        assert a.add(b).terms() == [(-1, 1), (1, 1)]

    def test_order_is_min(self):
        a = TruncatedSeries.from_terms([(0, 1)], 10)
        b = TruncatedSeries.from_terms([(0, 1)], 7)
        assert a.add(b).order == 7


class TestMul:
    def test_geometric_telescopes(self):
        n = 12
        a = TruncatedSeries.from_terms([(0, 1), (1, -1)], n)
        prod = a.mul(geometric(n))
        assert prod.terms() == [(0, 1)]  # the -q^n term is beyond the window

    def test_offsets_sum(self):
        a = TruncatedSeries.from_terms([(-1, 1)], 3)
        b = TruncatedSeries.from_terms([(1, 1)], 5)
        assert a.mul(b).terms() == [(0, 1)]

    def test_mul_inverse_roundtrip_window(self):
        # 1/E(q) to 50 terms times E(q) gives 1 on the window
        from q3series.eta import euler_series

        e = euler_series(1, 50)
        assert e.mul(e.inverse()).terms() == [(0, 1)]


class TestInverse:
    def test_geometric(self):
        a = TruncatedSeries.from_terms([(0, 1), (1, -1)], 5)
        assert [a.inverse().coeff(k) for k in range(5)] == [1, 1, 1, 1, 1]

    def test_partition_numbers(self):
        # 1/E(q): partition numbers, against the direct part-by-part oracle
        from q3series.eta import euler_series

        def partitions_upto(order):
            ways = [1] + [0] * (order - 1)
            for part in range(1, order):
                for total in range(part, order):
                    ways[total] += ways[total - part]
            return ways

        inv = euler_series(1, 6).inverse()
        assert [inv.coeff(k) for k in range(6)] == partitions_upto(6)

    def test_valuation_shift(self):
        a = TruncatedSeries.from_terms([(1, 1), (2, -1)], 6)  # q(1-q)
        inv = a.inverse()
        assert inv.offset == -1
        assert inv.coeff(-1) == 1 and inv.coeff(0) == 1

    def test_nonunit_lead_rejected(self):
        a = TruncatedSeries.from_terms([(0, 2)], 4)
        with pytest.raises(ValueError):
            a.inverse()

    def test_zero_rejected(self):
        with pytest.raises(ZeroDivisionError):
            TruncatedSeries.zero(4).inverse()


class TestPow:
    def test_binomial_square(self):
        a = TruncatedSeries.from_terms([(0, 1), (1, 1)], 3)
        assert a.pow(2).terms() == [(0, 1), (1, 2), (2, 1)]

    def test_cube_of_euler(self):
        from q3series.eta import euler_series, jacobi_cube

        assert euler_series(1, 10).pow(3).agrees_with(jacobi_cube(10))

    def test_negative_exponent(self):
        # 1/E(q)^3 starts with the three-color counts
        from q3series.eta import euler_series

        s = euler_series(1, 4).pow(-3)
        assert [s.coeff(k) for k in range(4)] == [1, 3, 9, 22]


class TestSubstitute:
    def test_linear(self):
        a = TruncatedSeries.from_terms([(0, 1), (1, -1)], 2)
        assert a.substitute_power(3).terms() == [(0, 1), (3, -1)]

    def test_euler_scale_crosscheck(self):
        from q3series.eta import euler_series

        n = 40
        assert euler_series(1, n).substitute_power(9).agrees_with(euler_series(9, n), upto=n)

    def test_negative_offset(self):
        a = TruncatedSeries.from_terms([(-1, 1)], 2)
        assert a.substitute_power(3).terms() == [(-3, 1)]


class TestExtract:
    def test_multiples_kept_in_place(self):
        a = geometric(4)
        kept = a.extract_progression(3, 0, rescale=False)
        assert kept.terms() == [(0, 1), (3, 1)]

    def test_rescale_three_color(self):
        from q3series.counts import CountingFunction, Kind, count_series

        p3 = count_series(CountingFunction(Kind.P3), 31)
        sub = p3.extract_progression(3, 2, rescale=True)
        assert sub.coeff(0) == 9  # three-color count at 2

    def test_unit_step_is_identity(self):
        a = TruncatedSeries.from_terms([(0, 2), (3, -1)], 5)
        assert a.extract_progression(1, 0, rescale=True).agrees_with(a)


# -- randomized properties ------------------------------------------------

small_series = st.builds(
    lambda coeffs, offset: TruncatedSeries(offset, coeffs, offset + len(coeffs)),
    st.lists(st.integers(-9, 9), min_size=1, max_size=8),
    st.integers(-3, 3),
)

unimodular = st.builds(
    lambda lead, coeffs: TruncatedSeries(0, [lead] + coeffs, 1 + len(coeffs)),
    st.sampled_from([1, -1]),
    st.lists(st.integers(-9, 9), min_size=1, max_size=8),
)


@settings(max_examples=100)
@given(small_series, small_series, small_series)
def test_ring_axioms_on_common_window(a, b, c):
    assert a.add(b).add(c).agrees_with(a.add(b.add(c)))
    assert a.mul(b).agrees_with(b.mul(a))
    lhs = a.mul(b.add(c))
    rhs = a.mul(b).add(a.mul(c))
    assert lhs.agrees_with(rhs, upto=min(lhs.order, rhs.order))


@settings(max_examples=100)
@given(unimodular)
def test_inverse_roundtrip(a):
    prod = a.mul(a.inverse())
    assert prod.terms() == [(0, 1)]


@settings(max_examples=100)
@given(small_series, st.integers(1, 5))
def test_extraction_partition_of_unity(a, r):
    total = a.extract_progression(r, 0, rescale=False)
    for s in range(1, r):
        total = total.add(a.extract_progression(r, s, rescale=False))
    assert total.agrees_with(a)


@settings(max_examples=100)
@given(small_series)
def test_rescale_then_substitute_matches_in_place_extraction(a):
    rescaled = a.extract_progression(3, 0, rescale=True)
    in_place = a.extract_progression(3, 0, rescale=False)
    assert rescaled.substitute_power(3).agrees_with(in_place, upto=in_place.order)


def test_sparse_kernels_match_dense_ops():
    from q3series.eta import euler_terms

    n = 60
    terms = euler_terms(1, n)
    dense = list(range(1, n + 1))
    by_kernel = mul_sparse(dense, terms, n)
    e = TruncatedSeries.from_terms(terms, n)
    d = TruncatedSeries(0, dense, n)
    assert by_kernel == list(e.mul(d).coeffs)
    solved = solve_monic_sparse(terms, dense, n)
    assert mul_sparse(solved, terms, n) == dense
