"""
Tests for the quadratic Goettsche series and its specializations
"""

from math import comb

import pytest

from gwpower.exceptions import FieldMismatch, InvalidArgument
from gwpower.gw.element import GwElement
from gwpower.gw.equality import gw_equal
from gwpower.gw.invariants import signature
from gwpower.hilbert.goettsche import (
    SeriesRequest,
    classical_series,
    goettsche_series,
    punctual_series,
    real_goettsche,
    real_macdonald,
)

PARTITIONS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


class TestPunctualSeries:
    def test_partition_ranks(self):
        series = punctual_series(10)
        assert [series[n].rank for n in range(11)] == PARTITIONS

    def test_third_coefficient(self, Q):
        assert gw_equal(punctual_series(3)[3], GwElement.from_terms(Q, [(1, 2), (-1, 1)]))

    def test_low_coefficients(self, Q):
        series = punctual_series(2)
        assert series[0] == GwElement.one(Q)
        assert series[1] == GwElement.one(Q)


class TestGoettscheSeries:
    def test_zero_chi(self, Q):
        series = goettsche_series(SeriesRequest(chi=GwElement.zero(Q), order=5, field=Q))
        assert series[0] == GwElement.one(Q)
        assert all(series[n].is_zero() for n in range(1, 6))

    def test_point_gives_punctual_series(self, Q):
        series = goettsche_series(SeriesRequest(chi=GwElement.one(Q), order=6, field=Q))
        punctual = punctual_series(6)
        assert all(gw_equal(series[n], punctual[n]) for n in range(7))

    @pytest.mark.parametrize(
        "chi_terms, rank", [([(1, 2), (-1, 1)], 3), ([(1, 5), (-1, 4)], 9), ([(1, 12), (-1, 12)], 24)]
    )
    def test_rank_specialization(self, Q, chi_terms, rank):
        chi = GwElement.from_terms(Q, chi_terms)
        assert chi.rank == rank
        series = goettsche_series(SeriesRequest(chi=chi, order=6, field=Q))
        assert [series[n].rank for n in range(7)] == classical_series(rank, 6)

    @pytest.mark.parametrize("chi_terms", [[(1, 2), (-1, 1)], [(1, 1), (-1, 2)], [(1, 3)]])
    def test_signature_specialization(self, R, chi_terms):
        chi = GwElement.from_terms(R, chi_terms)
        series = goettsche_series(SeriesRequest(chi=chi, order=5, field=R))
        expected = real_goettsche(chi.rank, signature(chi), 5)
        assert [signature(series[n]) for n in range(6)] == expected

    def test_request_validation(self, Q, R):
        with pytest.raises(InvalidArgument):
            SeriesRequest(chi=GwElement.one(Q), order=-1, field=Q)
        with pytest.raises(FieldMismatch):
            SeriesRequest(chi=GwElement.one(Q), order=2, field=R)


class TestIntegerSpecializations:
    def test_k3(self):
        assert classical_series(24, 3) == [1, 24, 324, 3200]

    def test_zero(self):
        assert classical_series(0, 4) == [1, 0, 0, 0, 0]

    def test_partitions(self):
        assert classical_series(1, 10) == PARTITIONS

    def test_real_macdonald_even_part(self):
        assert real_macdonald(2, 0, 6) == [1, 0, 1, 0, 1, 0, 1]

    @pytest.mark.parametrize("s", [1, 2, 3])
    def test_real_macdonald_split(self, s):
        assert real_macdonald(s, s, 5) == [comb(n + s - 1, n) for n in range(6)]

    def test_real_macdonald_parity(self):
        with pytest.raises(InvalidArgument):
            real_macdonald(3, 0, 4)
