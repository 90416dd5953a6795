"""
Tests for the seeded power-structure axiom runner
"""

import pytest

from gwpower.gw.fields import BaseField
from gwpower.series.axioms import AXIOMS, axiom_check
from gwpower.structures.a_star import get_a_structure


class TestAxiomCheck:
    def test_binomial_structure_passes(self, binomial, seed):
        report = axiom_check(binomial, seed=seed, cases=50)
        assert report.passed
        assert report.checks == list(AXIOMS)
        assert report.name == "axioms:binomial"
        assert report.field == "Z"

    @pytest.mark.parametrize("label", ["Q", "R", "C", "Fp:3", "Fp:5"])
    def test_a_star_passes(self, label, seed):
        report = axiom_check(get_a_structure(BaseField.parse(label)), seed=seed, cases=20)
        assert report.passed, report.failures[:3]
        assert report.field == label

    def test_fault_is_detected(self, faulty_binomial, seed):
        report = axiom_check(faulty_binomial, seed=seed, cases=20)
        assert not report.passed
        assert "f^(r+s) = f^r f^s" in report.failed_checks()
        assert "b_n(r+s) = sum b_i(r) b_(n-i)(s)" in report.failed_checks()
        witness = next(f for f in report.failures if f.check == "f^(r+s) = f^r f^s").witness
        assert "lhs=" in witness and "rhs=" in witness

    def test_deterministic(self, a_star_q, seed):
        first = axiom_check(a_star_q, seed=seed, cases=5)
        second = axiom_check(a_star_q, seed=seed, cases=5)
        assert first.model_dump() == second.model_dump()

    def test_order_from_config(self, binomial, seed):
        report = axiom_check(binomial, seed=seed, cases=1)
        assert report.cases == 1

    def test_serializes_pass_alias(self, binomial, seed):
        data = axiom_check(binomial, seed=seed, cases=2).model_dump(by_alias=True)
        assert data["pass"] is True
