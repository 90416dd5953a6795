"""
Tests for truncated series, Euler factorization, power structures, lambda conversion and the Witt product
"""

import pytest
from sympy import Rational

from gwpower.exceptions import FieldMismatch, InternalError, InvalidArgument, NotInvertible
from gwpower.gw.element import GwElement
from gwpower.gw.equality import gw_equal
from gwpower.gw.fields import BaseField
from gwpower.series import witt
from gwpower.series.lambda_ops import convert_lambda_power, lambda_series, opposite_lambda
from gwpower.series.power import euler_factorize, expand_power, power_pow, reconstruct
from gwpower.series.ring import GwRing, IntegerRing
from gwpower.series.series import GwSeries, series_arith
from gwpower.series.witt import witt_product
from gwpower.utils.sampling import case_rng


def ints(values, order=None):
    return GwSeries.from_integers(IntegerRing(), values, order)


class TestSeriesArithmetic:
    def test_product(self):
        assert (ints([1, 1, 0, 0]) * ints([1, -1, 0, 0])).coefficients == (1, 0, -1, 0)

    def test_geometric_inverse(self):
        assert ints([1, -1, 0, 0, 0]).invert().coefficients == (1, 1, 1, 1, 1)

    def test_inverse_contract(self):
        f = ints([1, 1, 0, 0, 0])
        assert (f.invert() * f).equals(GwSeries.one(IntegerRing(), 4))

    def test_non_unital_inverse(self):
        with pytest.raises(NotInvertible):
            ints([2, 1, 0]).invert()

    def test_mixed_orders_truncate(self):
        product = ints([1, 1, 1, 1, 1]) * ints([1, 1])
        assert product.order == 1
        assert product.coefficients == (1, 2)

    def test_negative_order(self):
        with pytest.raises(InvalidArgument):
            GwSeries.from_coefficients(IntegerRing(), [1], order=-1)

    def test_dispatch(self):
        f, g = ints([1, 2, 0]), ints([1, -1, 0])
        assert series_arith(f, g, "add").coefficients == (2, 1, 0)
        assert series_arith(f, g, "mul").coefficients == (1, 1, -2)
        assert series_arith(g, None, "invert").coefficients == (1, 1, 1)
        with pytest.raises(InvalidArgument):
            series_arith(f, g, "div")

    def test_substitute_power(self):
        assert ints([1, 1, 1, 1]).substitute_power(2).coefficients == (1, 0, 1, 0)
        assert ints([1, 2]).substitute_power(3, order=4).coefficients == (1, 0, 0, 2, 0)

    def test_powers(self):
        f = ints([1, 1, 0, 0])
        assert (f**3).coefficients == (1, 3, 3, 1)
        assert (f**-1).coefficients == (1, -1, 1, -1)

    def test_mixed_rings(self, Q):
        with pytest.raises(FieldMismatch):
            ints([1, 1]) + GwSeries.one(GwRing(Q), 1)

    def test_render(self, gw_ring_q, Q):
        series = GwSeries.from_coefficients(gw_ring_q, [GwElement.one(Q), GwElement.hyperbolic(Q)])
        assert series.render() == "1 + (<1> + <-1>)*t"
        assert ints([1, 0, 1]).render() == "1 + t^2"
        assert series.to_json()["order"] == 1

    def test_equality_is_ring_equality(self, gw_ring_q, Q):
        f = GwSeries.from_coefficients(gw_ring_q, [GwElement.one(Q), GwElement.from_terms(Q, [(2, 1), (-1, 1)])])
        g = GwSeries.from_coefficients(gw_ring_q, [GwElement.one(Q), GwElement.from_terms(Q, [(1, 1), (-2, 1)])])
        assert f.coefficients != g.coefficients
        assert f.equals(g)


class TestEulerFactorization:
    def test_one_plus_t(self, binomial):
        assert euler_factorize(ints([1, 1, 0, 0, 0]), binomial) == [1, -1, 0, 0]

    def test_geometric(self, binomial):
        assert euler_factorize(ints([1, 1, 1, 1, 1]), binomial) == [1, 0, 0, 0]

    def test_one(self, binomial):
        assert euler_factorize(GwSeries.one(IntegerRing(), 5), binomial) == [0] * 5

    @pytest.mark.parametrize("values", [[1, 3, -2, 7, 0, 1], [1, 0, 5, 0, -4, 2], [1, -1, -1, -1, -1, -1]])
    def test_reconstruction(self, binomial, values):
        f = ints(values)
        assert reconstruct(euler_factorize(f, binomial), binomial, f.order).equals(f)

    def test_reconstruction_over_gw(self, a_star_q, gw_ring_q):
        for case in range(10):
            rng = case_rng(11, case)
            coeffs = [gw_ring_q.one()] + [gw_ring_q.random_element(rng) for _ in range(4)]
            f = GwSeries.from_coefficients(gw_ring_q, coeffs)
            assert reconstruct(euler_factorize(f, a_star_q), a_star_q, 4).equals(f)

    def test_ring_mismatch(self, a_star_q):
        with pytest.raises(FieldMismatch):
            euler_factorize(ints([1, 1]), a_star_q)


class TestPowerStructure:
    def test_binomial_values(self, binomial):
        assert expand_power(3, binomial, 5).coefficients == (1, 3, 6, 10, 15, 21)
        assert expand_power(-1, binomial, 5).coefficients == (1, -1, 0, 0, 0, 0)
        assert expand_power(0, binomial, 3).coefficients == (1, 0, 0, 0)

    def test_b_accessor(self, binomial):
        assert binomial.b(4, 2) == 5

    def test_power_pow(self, binomial):
        f = ints([1, 1, 0, 0, 0])
        assert power_pow(f, 2, binomial).coefficients == (1, 2, 1, 0, 0)
        assert power_pow(f, -1, binomial).coefficients == (1, -1, 1, -1, 1)
        assert power_pow(f, 0, binomial).coefficients == (1, 0, 0, 0, 0)

    def test_geometric_to_rank_one_form(self, a_star_q, gw_ring_q, Q):
        base = GwSeries.from_integers(gw_ring_q, [1] * 5)
        alpha = GwElement.of(Q, 5)
        powered = power_pow(base, alpha, a_star_q)
        assert powered.equals(a_star_q.generator_series(5, 4))
        assert powered[1] == alpha


class TestLambdaConversion:
    def test_b_to_lambda(self, Z):
        assert convert_lambda_power([1, 1, 1, 1], "b->lambda", Z) == [1, 1, 0, 0]

    def test_lambda_to_b(self, Z):
        assert convert_lambda_power([1, 2, 1, 0, 0], "lambda->b", Z) == [1, 2, 3, 4, 5]

    def test_round_trip_over_gw(self, gw_ring_q):
        for case in range(10):
            rng = case_rng(3, case)
            data = [gw_ring_q.one()] + [gw_ring_q.random_element(rng) for _ in range(4)]
            back = convert_lambda_power(convert_lambda_power(data, "b->lambda", gw_ring_q), "lambda->b", gw_ring_q)
            assert all(gw_equal(x, y) for x, y in zip(back, data))

    def test_unknown_direction(self, Z):
        with pytest.raises(InvalidArgument):
            convert_lambda_power([1, 1], "sideways", Z)

    @pytest.mark.parametrize("r", [-2, -1, 0, 1, 2, 3])
    def test_constructions_agree_on_integers(self, binomial, r):
        assert lambda_series(r, binomial, 5).equals(opposite_lambda(r, binomial, 5))

    def test_opposite_lambda_of_two(self, binomial):
        assert opposite_lambda(2, binomial, 4).coefficients == (1, 2, 1, 0, 0)


class TestWittProduct:
    def test_geometric_square(self):
        geometric = ints([1, 1, 1, 1])
        assert witt_product(geometric, geometric).coefficients == (1, 1, 0, 0)

    @pytest.mark.parametrize("a, b", [(2, 3), (-1, 4), (0, 5)])
    def test_linear_factors(self, a, b):
        assert witt_product(ints([1, a, 0, 0]), ints([1, b, 0, 0])).coefficients == (1, a * b, 0, 0)

    def test_unit(self):
        f = ints([1, 3, -2, 5, 1])
        assert witt_product(ints([1, 1, 0, 0, 0]), f).equals(f)

    def test_methods_agree_over_integers(self, Z):
        for case in range(20):
            rng = case_rng(5, case)
            f = ints([1] + [Z.random_element(rng) for _ in range(5)])
            g = ints([1] + [Z.random_element(rng) for _ in range(5)])
            assert witt_product(f, g, "ghost").equals(witt_product(f, g, "universal"))

    def test_methods_agree_over_gw(self, gw_ring_q):
        def sample(rng):
            coeffs = [gw_ring_q.one()] + [gw_ring_q.random_element(rng) for _ in range(3)]
            return GwSeries.from_coefficients(gw_ring_q, coeffs)

        for case in range(5):
            rng = case_rng(9, case)
            f, g = sample(rng), sample(rng)
            assert witt_product(f, g, "ghost").equals(witt_product(f, g, "universal"))

    def test_commutative_and_distributive(self, Z):
        rng = case_rng(13, 0)
        f, g, h = (ints([1] + [Z.random_element(rng) for _ in range(4)]) for _ in range(3))
        assert witt_product(f, g).equals(witt_product(g, f))
        assert witt_product(f, g * h).equals(witt_product(f, g) * witt_product(f, h))

    @pytest.mark.parametrize("label", ["Q", "Fp:3"])
    def test_ring_laws_over_gw(self, label):
        ring = GwRing(BaseField.parse(label))
        unit = GwSeries.from_integers(ring, [1, 1, 0, 0])

        def sample(rng):
            return GwSeries.from_coefficients(ring, [ring.one()] + [ring.random_element(rng) for _ in range(3)])

        for case in range(10):
            rng = case_rng(21, case)
            f, g, h = sample(rng), sample(rng), sample(rng)
            assert witt_product(f, g).equals(witt_product(g, f))
            assert witt_product(witt_product(f, g), h).equals(witt_product(f, witt_product(g, h)))
            assert witt_product(f, unit).equals(f)
            assert witt_product(f, g * h).equals(witt_product(f, g) * witt_product(f, h))

    def test_non_integral_table_is_internal_error(self, monkeypatch):
        monkeypatch.setattr(witt, "Rational", lambda p, q: Rational(p, 2 * q))
        witt.universal_polynomials.cache_clear()
        try:
            with pytest.raises(InternalError, match="non-integral"):
                witt.universal_polynomials(2)
        finally:
            monkeypatch.undo()
            witt.universal_polynomials.cache_clear()

    def test_rejects(self):
        with pytest.raises(NotInvertible):
            witt_product(ints([2, 1]), ints([1, 1]))
        with pytest.raises(InvalidArgument):
            witt_product(ints([1, 1]), ints([1, 1]), "other")
