"""
Tests for a_*, McGarraghy symmetric powers, morphism checks, the disc probe and the special-lambda exploration
"""

from math import comb

import pytest

from gwpower.exceptions import InvalidArgument, NotEffective, Unsupported
from gwpower.gw.element import GwElement
from gwpower.gw.equality import gw_equal, is_zero
from gwpower.gw.fields import BaseField
from gwpower.gw.invariants import signature
from gwpower.series.ring import GwRing
from gwpower.series.structure import BinomialStructure
from gwpower.structures.a_star import a_generator, a_n, cup_product_vanishes, get_a_structure, torsion_term
from gwpower.structures.disc_probe import probe_discriminant_exponent
from gwpower.structures.mcgarraghy import get_nonfactorial_structure, mcgarraghy_sym
from gwpower.structures.morphisms import named_map, respects_check
from gwpower.structures.special_lambda import explore
from gwpower.utils.sampling import case_rng


class TestGenerator:
    @pytest.mark.parametrize("alpha", [-1, 2, 3, 5, -2])
    def test_second_power_display(self, Q, alpha):
        expected = GwElement.from_terms(Q, [(1, 1), (2, 1), (alpha, 1), (1, -1), (2 * alpha, -1)])
        assert a_generator(alpha, 2, Q) == expected

    @pytest.mark.parametrize("n", range(6))
    def test_unit_class(self, Q, n):
        assert a_generator(1, n, Q) == GwElement.one(Q)

    def test_low_powers(self, Q):
        assert a_generator(7, 0, Q) == GwElement.one(Q)
        assert a_generator(7, 1, Q) == GwElement.of(Q, 7)

    def test_torsion_vanishes_for_two(self, Q):
        assert gw_equal(a_generator(2, 3, Q), GwElement.of(Q, 2))

    def test_negative_power(self, Q):
        with pytest.raises(InvalidArgument):
            a_generator(3, -1, Q)


class TestTorsionTerm:
    @pytest.mark.parametrize("alpha", [-1, 2, 3, 5, 7, -6])
    def test_two_torsion(self, Q, alpha):
        assert is_zero(torsion_term(alpha, Q) * 2)

    def test_rational_examples(self, Q):
        assert not is_zero(torsion_term(5, Q))
        assert is_zero(torsion_term(2, Q))

    @pytest.mark.parametrize("label", ["R", "C", "Fp:3", "Fp:7"])
    @pytest.mark.parametrize("alpha", [-1, 2, 5])
    def test_vanishes_off_the_rationals(self, label, alpha):
        field = BaseField.parse(label)
        assert is_zero(torsion_term(alpha, field))

    @pytest.mark.parametrize("alpha, vanishes", [(2, True), (-1, True), (7, True), (3, False), (5, False)])
    def test_cup_product_criterion(self, Q, alpha, vanishes):
        assert cup_product_vanishes(alpha, Q) is vanishes
        assert is_zero(torsion_term(alpha, Q)) is vanishes

    def test_cup_product_off_the_rationals(self, R):
        assert cup_product_vanishes(5, R)


class TestAn:
    def test_hyperbolic(self, Q):
        assert gw_equal(a_n(GwElement.hyperbolic(Q), 2), GwElement.from_terms(Q, [(1, 2), (-1, 1)]))

    def test_odd_power_of_quadratic_trace(self, Q):
        c = GwElement.from_terms(Q, [(2, 1), (10, 1)])
        assert gw_equal(a_n(c, 3), c * 2)

    def test_zero_and_unit(self, Q):
        for n in range(1, 5):
            assert a_n(GwElement.zero(Q), n).is_zero()
            assert a_n(GwElement.one(Q), n) == GwElement.one(Q)

    def test_low_coefficients(self, gw_ring_q):
        for case in range(10):
            q = gw_ring_q.random_element(case_rng(17, case))
            assert a_n(q, 0) == GwElement.one(q.field)
            assert gw_equal(a_n(q, 1), q)

    def test_virtual_rank_law(self, gw_ring_q):
        for case in range(20):
            q = gw_ring_q.random_element(case_rng(19, case))
            for n in range(6):
                assert a_n(q, n).rank == BinomialStructure().b(n, q.rank)

    def test_negative_n(self, Q):
        with pytest.raises(InvalidArgument):
            a_n(GwElement.one(Q), -1)

    def test_shared_structure(self, Q):
        assert get_a_structure(Q) is get_a_structure(BaseField.rationals())


class TestMcGarraghy:
    def test_factorial_two_entries(self, Q):
        q = GwElement.from_terms(Q, [(3, 1), (5, 1)])
        assert mcgarraghy_sym(q, 2) == GwElement.from_terms(Q, [(2, 2), (15, 1)])

    @pytest.mark.parametrize("n", range(5))
    def test_factorial_rank(self, Q, n):
        q = GwElement.from_terms(Q, [(1, 1), (3, 1), (-2, 1)])
        assert mcgarraghy_sym(q, n).rank == comb(n + 2, n)

    @pytest.mark.parametrize("n", range(6))
    def test_nonfactorial_rank_one(self, Q, n):
        assert mcgarraghy_sym(GwElement.of(Q, 5), n, "nonfactorial") == GwElement.of(Q, 5 ** (n % 2))

    def test_factorial_needs_effective(self, Q):
        with pytest.raises(NotEffective):
            mcgarraghy_sym(GwElement.from_terms(Q, [(2, -1)]), 2)

    @pytest.mark.parametrize("label, n", [("Fp:3", 3), ("Fp:3", 1), ("Fp:5", 2), ("Fp:7", 0)])
    def test_factorial_needs_characteristic_zero(self, label, n):
        field = BaseField.parse(label)
        with pytest.raises(Unsupported, match="characteristic 0"):
            mcgarraghy_sym(GwElement.from_int(field, 2), n)

    def test_nonfactorial_over_finite_fields(self, F3):
        assert mcgarraghy_sym(GwElement.of(F3, 2), 3, variant="nonfactorial") == GwElement.of(F3, 2)

    def test_unknown_variant(self, Q):
        with pytest.raises(InvalidArgument):
            mcgarraghy_sym(GwElement.one(Q), 2, "other")

    @pytest.mark.parametrize("label", ["R", "C", "Fp:5"])
    def test_nonfactorial_agrees_with_a_star(self, label):
        field = BaseField.parse(label)
        ring = GwRing(field)
        for case in range(15):
            q = ring.random_element(case_rng(23, case))
            for n in range(5):
                assert gw_equal(mcgarraghy_sym(q, n, "nonfactorial"), a_n(q, n))

    def test_nonfactorial_agrees_over_q_when_cup_product_vanishes(self, Q):
        q = GwElement.from_terms(Q, [(2, 2), (-1, -1), (7, 1)])
        for n in range(5):
            assert gw_equal(get_nonfactorial_structure(Q).b(n, q), a_n(q, n))

    def test_nonfactorial_differs_over_q_otherwise(self, Q):
        assert not gw_equal(mcgarraghy_sym(GwElement.of(Q, 5), 2, "nonfactorial"), a_n(GwElement.of(Q, 5), 2))


class TestRespects:
    def test_rank(self, a_star_q, binomial, seed):
        report = respects_check("rank", a_star_q, binomial, seed=seed, cases=25, order=5)
        assert report.passed

    @pytest.mark.parametrize(
        "name, target", [("base-change:R", BaseField.reals()), ("base-change:C", BaseField.quadratically_closed())]
    )
    def test_base_change(self, a_star_q, seed, name, target):
        report = respects_check(name, a_star_q, get_a_structure(target), seed=seed, cases=25, order=5)
        assert report.passed

    def test_fault_injected_target(self, a_star_q, faulty_binomial, seed):
        report = respects_check("rank", a_star_q, faulty_binomial, seed=seed, cases=5, order=4)
        assert not report.passed
        assert "t^2" in report.failures[0].witness

    def test_explicit_low_order_is_kept(self, a_star_q, faulty_binomial, seed):
        assert respects_check("rank", a_star_q, faulty_binomial, seed=seed, cases=3, order=0).passed
        assert respects_check("rank", a_star_q, faulty_binomial, seed=seed, cases=3, order=1).passed
        assert not respects_check("rank", a_star_q, faulty_binomial, seed=seed, cases=3).passed

    def test_unknown_map(self, Q):
        with pytest.raises(InvalidArgument):
            named_map("signature", Q)

    def test_base_change_needs_rationals(self, R):
        with pytest.raises(InvalidArgument):
            named_map("base-change:C", R)

    def test_target_ring_mismatch(self, a_star_q, seed):
        with pytest.raises(InvalidArgument):
            respects_check("rank", a_star_q, get_a_structure(BaseField.reals()), seed=seed, cases=1)


class TestRealSignatures:
    def test_signature_of_hyperbolic_powers(self, R):
        # signatures of chi_c(P^n) alternate 1, 0, 1, 0, ...
        coeffs = get_a_structure(R).b_series(GwElement.hyperbolic(R), 6)
        assert [signature(c) for c in coeffs] == [1, 0, 1, 0, 1, 0, 1]


class TestDiscriminantProbe:
    def test_plain_convention_fits_candidate(self, seed):
        report = probe_discriminant_exponent(BaseField.rationals(), seed=seed, max_rank=3, max_n=4, samples=4)
        plain = next(s for s in report.summaries if s.convention == "plain")
        assert plain.consistent
        assert plain.matches_candidate
        assert not plain.matches_stated
        assert "plain" in report.fitted_conventions()
        assert len(report.cells) == 2 * 3 * 4

    def test_finite_field(self, seed):
        report = probe_discriminant_exponent(BaseField.finite(5), seed=seed, max_rank=2, max_n=3, samples=3)
        assert "plain" in report.fitted_conventions()


class TestSpecialLambda:
    def test_binomial_opposite_construction_is_special(self, binomial, seed):
        report = explore(binomial, seed=seed, cases=15)
        assert "lambda(xy) = lambda(x) (.) lambda(y) [opposite]" not in report.failed_checks()
        assert len(report.checks) == 2

    def test_a_star_is_reported(self, a_star_q, seed):
        report = explore(a_star_q, seed=seed, cases=3, order=3)
        assert report.name == "special-lambda:a_*"
        assert report.cases == 3
