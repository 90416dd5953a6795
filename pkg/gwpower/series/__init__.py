"""
Truncated power series, power structures, lambda conversion and the Witt product
"""

from gwpower.series.axioms import axiom_check
from gwpower.series.lambda_ops import convert_lambda_power, lambda_series, opposite_lambda
from gwpower.series.power import euler_factorize, expand_power, power_pow, reconstruct
from gwpower.series.ring import GwRing, IntegerRing, RingDescriptor
from gwpower.series.series import GwSeries, series_arith
from gwpower.series.structure import BinomialStructure, PowerStructure
from gwpower.series.witt import witt_product

__all__ = [
    "RingDescriptor",
    "IntegerRing",
    "GwRing",
    "GwSeries",
    "series_arith",
    "PowerStructure",
    "BinomialStructure",
    "expand_power",
    "euler_factorize",
    "reconstruct",
    "power_pow",
    "convert_lambda_power",
    "lambda_series",
    "opposite_lambda",
    "witt_product",
    "axiom_check",
]
