"""
Conversion between power structures and pre-lambda structures
"""

from typing import Any, List, Sequence

from gwpower.exceptions import InvalidArgument
from gwpower.series.power import power_pow
from gwpower.series.ring import RingDescriptor
from gwpower.series.series import GwSeries
from gwpower.series.structure import PowerStructure

DIRECTIONS = ("lambda->b", "b->lambda")


def _alternate(ring: RingDescriptor, data: Sequence[Any]) -> List[Any]:
    """c_n -> (-1)^n c_n, i.e. t -> -t"""
    return [ring.neg(c) if n % 2 else c for n, c in enumerate(data)]


def convert_lambda_power(data: Sequence[Any], direction: str, ring: RingDescriptor) -> List[Any]:
    """
    sum b_n t^n = (sum lambda_n (-t)^n)^(-1), applied in either direction

    Args:
        data: Values at a fixed r, index 0 first, truncated at N
        direction: "lambda->b" or "b->lambda"
        ring: Coefficient ring

    Returns:
        Converted sequence of the same length
    """
    if direction not in DIRECTIONS:
        raise InvalidArgument(f"direction must be one of {DIRECTIONS}, got '{direction}'", context="series.lambda")
    series = GwSeries.from_coefficients(ring, data)
    if direction == "lambda->b":
        return list(GwSeries(ring, tuple(_alternate(ring, series.coefficients))).invert().coefficients)
    return _alternate(ring, series.invert().coefficients)


def lambda_series(r, ps: PowerStructure, order: int) -> GwSeries:
    """lambda_t(r) obtained from b_n(r) through the inversion identity"""
    values = convert_lambda_power(ps.b_series(r, order).coefficients, "b->lambda", ps.ring)
    return GwSeries(ps.ring, tuple(values))


def opposite_lambda(r, ps: PowerStructure, order: int) -> GwSeries:
    """The opposite pre-lambda structure: lambda_n(r) = coefficient of t^n in (1 + t)^r"""
    base = GwSeries.monomial(ps.ring, ps.ring.one(), 1, order)
    return power_pow(base, r, ps)


__all__ = ["DIRECTIONS", "convert_lambda_power", "lambda_series", "opposite_lambda"]
