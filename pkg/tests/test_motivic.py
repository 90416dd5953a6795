"""
Tests for the motivic fragment: classes, chi_c, etale orbits, symmetric powers and verification
"""

from math import comb

import pytest

from gwpower.exceptions import FieldMismatch, NotIndependent, Unsupported
from gwpower.gw.element import GwElement
from gwpower.gw.equality import gw_equal
from gwpower.gw.fields import BaseField
from gwpower.gw.invariants import signature
from gwpower.motivic.atoms import AbelianVariety, Curve, EtaleAtom, SymCurve
from gwpower.motivic.chi import chi_c, curve_sym_chi
from gwpower.motivic.classes import VarietyClass
from gwpower.motivic.etale import etale_product, etale_sym
from gwpower.motivic.symmetric import sym_chi, sym_chi_series, sym_class, zeta_series
from gwpower.motivic.uniqueness import matches_a_star, quadratic_sym_series, reconstruct_two
from gwpower.motivic.verify import PREDICTION_ONLY, method_tag, verify_conjecture


def etale(field, *gens):
    return VarietyClass.etale(field, list(gens))


class TestVarietyClass:
    def test_projective_space_expands(self, Q):
        p2 = VarietyClass.projective(Q, 2)
        assert p2 == VarietyClass.point(Q) + VarietyClass.affine(Q, 1) + VarietyClass.affine(Q, 2)

    def test_torus(self, Q):
        assert VarietyClass.torus(Q) == VarietyClass.affine(Q, 1) - 1

    def test_trivial_etale_atom_is_point(self, Q):
        assert EtaleAtom.from_generators(Q, [4]).is_point()
        assert EtaleAtom.from_generators(Q, [9, 2]) == EtaleAtom.from_generators(Q, [2])

    def test_square_generator_splits(self, Q):
        assert etale(Q, 4) == VarietyClass.point(Q) * 2
        assert etale(Q, 1, 9) == VarietyClass.point(Q) * 4
        assert etale(Q, 2, 4) == etale(Q, 2) * 2

    @pytest.mark.parametrize("label", ["R", "C"])
    def test_split_over_larger_fields(self, label):
        field = BaseField.parse(label)
        assert etale(field, 2) == VarietyClass.point(field) * 2
        assert etale(field, 2, 3) == VarietyClass.point(field) * 4
        assert gw_equal(chi_c(etale(field, 2)), GwElement.from_int(field, 2))

    def test_dependent_generators_split(self, Q):
        assert etale(Q, 2, 3, 6) == etale(Q, 2, 3) * 2
        assert etale(BaseField.finite(5), 2, 3) == etale(BaseField.finite(5), 2) * 2

    def test_dependent_atom_generators(self, Q):
        with pytest.raises(NotIndependent):
            EtaleAtom.from_generators(Q, [2, 8])

    def test_split_class_has_symmetric_powers(self, R):
        assert etale_sym(etale(R, 2), 2) == VarietyClass.point(R) * 3

    def test_etale_span_is_canonical(self, Q):
        assert etale(Q, 2, 3) == etale(Q, 6, 2)
        assert EtaleAtom.from_generators(Q, [2, 3]).degree == 4

    def test_products(self, Q):
        assert VarietyClass.affine(Q, 1) * VarietyClass.affine(Q, 2) == VarietyClass.affine(Q, 3)
        assert VarietyClass.point(Q) * etale(Q, 5) == etale(Q, 5)

    def test_fragment_membership(self, Q):
        assert (etale(Q, 2) * VarietyClass.affine(Q, 1)).in_fragment()
        assert not VarietyClass.opaque(Q, Curve(2)).in_fragment()

    def test_field_mismatch(self, Q, R):
        with pytest.raises(FieldMismatch):
            VarietyClass.point(Q) + VarietyClass.point(R)


class TestChi:
    def test_projective_spaces(self, Q):
        assert chi_c(VarietyClass.projective(Q, 3)) == GwElement.hyperbolic(Q) * 2
        assert chi_c(VarietyClass.projective(Q, 2)) == GwElement.from_terms(Q, [(1, 2), (-1, 1)])

    def test_torus(self, Q):
        assert chi_c(VarietyClass.torus(Q)) == GwElement.from_terms(Q, [(-1, 1), (1, -1)])

    def test_curves(self, Q):
        assert chi_c(VarietyClass.opaque(Q, Curve(3))) == GwElement.hyperbolic(Q) * -2
        assert chi_c(VarietyClass.opaque(Q, Curve(1))).is_zero()

    def test_abelian_varieties_vanish(self, Q):
        assert chi_c(VarietyClass.opaque(Q, AbelianVariety(2))).is_zero()

    def test_quadratic_etale(self, Q):
        assert chi_c(etale(Q, 2)) == GwElement.from_terms(Q, [(1, 1), (2, 1)])

    def test_ring_homomorphism(self, Q):
        x = etale(Q, 3) + VarietyClass.affine(Q, 1)
        y = etale(Q, 5) * 2 - VarietyClass.projective(Q, 1)
        assert gw_equal(chi_c(x * y), chi_c(x) * chi_c(y))
        assert gw_equal(chi_c(x + y), chi_c(x) + chi_c(y))

    @pytest.mark.parametrize("genus", range(4))
    def test_curve_symmetric_power_ranks(self, Q, genus):
        # rank of chi_c(Sym^n C) is the coefficient of t^n in (1 - t)^(2g - 2)
        for n in range(7):
            expected = (-1) ** n * comb(2 * genus - 2, n) if 2 * genus - 2 >= 0 else comb(n + 1, n)
            assert curve_sym_chi(genus, n, Q).rank == expected

    def test_rational_curve_gives_projective_spaces(self, Q):
        for n in range(6):
            assert gw_equal(curve_sym_chi(0, n, Q), chi_c(VarietyClass.projective(Q, n)))


class TestEtaleSym:
    @pytest.mark.parametrize("alpha", [2, -1, 5])
    def test_quadratic(self, Q, alpha):
        assert etale_sym(EtaleAtom.from_generators(Q, [alpha]), 2) == etale(Q, alpha) + VarietyClass.point(Q)
        assert etale_sym(EtaleAtom.from_generators(Q, [alpha]), 3) == etale(Q, alpha) * 2

    def test_biquadratic_square(self, Q):
        sym2 = etale_sym(EtaleAtom.from_generators(Q, [2, 3]), 2)
        assert sym2 == etale(Q, 2, 3) + etale(Q, 2) + etale(Q, 3) + etale(Q, 6)
        assert chi_c(sym2).rank == comb(5, 2)

    @pytest.mark.parametrize("n", range(5))
    def test_degree_is_binomial(self, Q, n):
        atom = EtaleAtom.from_generators(Q, [-1, 2, 3])
        assert chi_c(etale_sym(atom, n)).rank == comb(8 + n - 1, n)

    def test_products(self, Q):
        a2, a3 = EtaleAtom.from_generators(Q, [2]), EtaleAtom.from_generators(Q, [3])
        assert etale_product(a2, a2) == etale(Q, 2) * 2
        assert etale_product(a2, a3) == etale(Q, 2, 3)

    def test_split_algebra(self, Q):
        split = VarietyClass.point(Q) * 2
        assert etale_sym(split, 2) == VarietyClass.point(Q) * 3


class TestSymmetricPowers:
    def test_affine(self, Q):
        assert sym_class(VarietyClass.affine(Q, 2), 3) == VarietyClass.affine(Q, 6)

    def test_projective_line(self, Q):
        assert sym_class(VarietyClass.projective(Q, 1), 2) == VarietyClass.projective(Q, 2)

    @pytest.mark.parametrize("n", range(5))
    def test_point(self, Q, n):
        assert sym_class(VarietyClass.point(Q), n) == VarietyClass.point(Q)

    def test_curves_are_not_geometric(self, Q):
        with pytest.raises(Unsupported):
            sym_class(VarietyClass.opaque(Q, Curve(2)), 2)

    def test_zeta_of_point(self, Q):
        zeta = zeta_series(VarietyClass.point(Q), 4)
        assert all(zeta[n] == VarietyClass.point(Q) for n in range(5))

    def test_curve_chi(self, Q):
        assert gw_equal(sym_chi(VarietyClass.opaque(Q, Curve(2)), 3), GwElement.zero(Q))
        for n in range(1, 5):
            assert sym_chi(VarietyClass.opaque(Q, Curve(1)), n).is_zero()
        assert gw_equal(sym_chi(VarietyClass.opaque(Q, Curve(0)), 2), GwElement.from_terms(Q, [(1, 2), (-1, 1)]))

    def test_chi_series_of_fragment_class_agrees_with_zeta(self, Q):
        c = etale(Q, 3) + VarietyClass.affine(Q, 1)
        zeta = zeta_series(c, 4)
        chi_series = sym_chi_series(c, 4)
        for n in range(5):
            assert gw_equal(chi_series[n], chi_c(zeta[n]))

    def test_real_signatures_of_projective_line(self, R):
        values = sym_chi_series(VarietyClass.projective(R, 1), 5)
        assert [signature(values[n]) for n in range(6)] == [1, 0, 1, 0, 1, 0]


class TestVerify:
    def test_genus_two_curve(self, Q):
        report = verify_conjecture(VarietyClass.opaque(Q, Curve(2)), 6)
        assert report.passed
        assert len(report.rows) == 7
        assert {row.method for row in report.rows} == {"closed-form"}
        assert "verified over Q only" in report.notes

    def test_quadratic_etale(self, Q):
        report = verify_conjecture(etale(Q, 5), 8)
        assert report.passed
        assert report.rows[0].method == "orbit"

    def test_projective_plane(self, Q):
        report = verify_conjecture(VarietyClass.projective(Q, 2), 4)
        assert report.passed
        assert report.rows[0].method == "module-structure"

    def test_abelian_variety_is_prediction_only(self, Q):
        c = VarietyClass.opaque(Q, AbelianVariety(2))
        assert method_tag(c) == PREDICTION_ONLY
        report = verify_conjecture(c, 3)
        assert all(row.equal is None and row.lhs is None for row in report.rows)
        assert report.passed

    @pytest.mark.parametrize("atom", [Curve(1), AbelianVariety(2)])
    def test_zero_values_render_as_zero(self, Q, atom):
        report = verify_conjecture(VarietyClass.opaque(Q, atom), 5)
        assert report.rows[0].rhs == "<1>"
        assert [row.rhs for row in report.rows[1:]] == ["0"] * 5

    def test_sym_curve_atom(self, Q):
        assert method_tag(VarietyClass.opaque(Q, SymCurve(2, 2))) == "closed-form"

    def test_label(self, Q):
        report = verify_conjecture(VarietyClass.point(Q), 2, label="Pt")
        assert report.inputs == {"class": "Pt", "max_n": 2}
        assert report.notes[0].startswith("chi_c = ")


class TestUniqueness:
    def test_two(self, Q):
        series = reconstruct_two(Q, 5)
        assert all(gw_equal(series[n], GwElement.of(Q, 2 ** (n % 2))) for n in range(6))

    def test_quadratic_series_starts_with_chi(self, Q):
        series = quadratic_sym_series(3, Q, 3)
        assert series[0] == GwElement.one(Q)
        assert gw_equal(series[1], chi_c(etale(Q, 3)))

    @pytest.mark.parametrize("alpha", [2, 3, 5, -1, -2])
    def test_matches_a_star(self, Q, alpha):
        assert matches_a_star(alpha, Q, 6)
