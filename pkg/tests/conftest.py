"""
Shared fixtures: fields, rings, power structures and a fault-injected structure
"""

import numpy as np
import pytest

from gwpower.gw.fields import BaseField
from gwpower.series.ring import GwRing, IntegerRing
from gwpower.series.series import GwSeries
from gwpower.series.structure import BinomialStructure
from gwpower.structures.a_star import get_a_structure

SEED = 20240601


class FaultyBinomialStructure(BinomialStructure):
    """Binomial structure with b_2 shifted by one"""

    name = "faulty-binomial"

    def b_series(self, r, order: int) -> GwSeries:
        series = super().b_series(r, order)
        if order < 2:
            return series
        coeffs = list(series.coefficients)
        coeffs[2] = self.ring.add(coeffs[2], self.ring.one())
        return GwSeries(self.ring, tuple(coeffs))


@pytest.fixture
def Q():
    return BaseField.rationals()


@pytest.fixture
def R():
    return BaseField.reals()


@pytest.fixture
def C():
    return BaseField.quadratically_closed()


@pytest.fixture
def F3():
    return BaseField.finite(3)


@pytest.fixture
def F5():
    return BaseField.finite(5)


@pytest.fixture
def Z():
    return IntegerRing()


@pytest.fixture
def gw_ring_q(Q):
    return GwRing(Q)


@pytest.fixture
def binomial():
    return BinomialStructure()


@pytest.fixture
def faulty_binomial():
    return FaultyBinomialStructure()


@pytest.fixture
def a_star_q(Q):
    return get_a_structure(Q)


@pytest.fixture
def a_star_r(R):
    return get_a_structure(R)


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture
def seed():
    return SEED
