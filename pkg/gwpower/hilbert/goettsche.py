"""
Quadratic Goettsche series, the punctual series and their integer specializations
"""

from dataclasses import dataclass
from typing import List

from loguru import logger

from gwpower.exceptions import FieldMismatch, InvalidArgument
from gwpower.gw.element import GwElement
from gwpower.gw.fields import BaseField
from gwpower.series.power import power_pow
from gwpower.series.ring import GwRing
from gwpower.series.series import GwSeries
from gwpower.structures.a_star import get_a_structure
from gwpower.utils.combinatorics import generalized_binomial


@dataclass(frozen=True)
class SeriesRequest:
    """chi plays chi_c(X) of a smooth projective surface"""

    chi: GwElement
    order: int
    field: BaseField

    def __post_init__(self):
        if self.order < 0:
            raise InvalidArgument(f"series order must be >= 0, got {self.order}", context="hilbert")
        if self.chi.field != self.field:
            raise FieldMismatch(f"chi over {self.chi.field}, request over {self.field}", context="hilbert")


def _twist(field: BaseField, n: int) -> GwElement:
    """<-1>^(n-1)"""
    return GwElement.of(field, (-1) ** (n - 1))


def punctual_series(order: int, field: BaseField = BaseField.rationals()) -> GwSeries:
    """prod_{n>=1} (1 - <-1>^(n-1) t^n)^(-1) by plain series inversion"""
    ring = GwRing(field)
    result = GwSeries.one(ring, order)
    for n in range(1, order + 1):
        factor = GwSeries.monomial(ring, -_twist(field, n), n, order)
        result = result * factor.invert()
    return result


def goettsche_series(request: SeriesRequest) -> GwSeries:
    """
    prod_{n>=1} (1 - <-1>^(n-1) t^n)^(-chi) under a_*

    Each factor is (1 - u s)^(-chi) computed to order N // n and substituted s = t^n; factors with
    n > N are the identity mod t^(N+1).
    """
    field, order, chi = request.field, request.order, request.chi
    ps = get_a_structure(field)
    ring = GwRing(field)
    result = GwSeries.one(ring, order)
    exponent = -chi
    for n in range(1, order + 1):
        base = GwSeries.monomial(ring, -_twist(field, n), 1, order // n)
        factor = power_pow(base, exponent, ps).substitute_power(n, order)
        result = result * factor
    logger.debug(f"Goettsche series for chi={chi.render()} over {field.label} to order {order}")
    return result


def _binomial_series(e: int, step: int, order: int) -> List[int]:
    """(1 - t^step)^(-e) as integers"""
    out = [0] * (order + 1)
    for k in range(order // step + 1):
        out[k * step] = generalized_binomial(e + k - 1, k)
    return out


def _convolve(a: List[int], b: List[int]) -> List[int]:
    order = min(len(a), len(b)) - 1
    out = [0] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j in range(order + 1 - i):
                out[i + j] += x * b[j]
    return out


def classical_series(e: int, order: int) -> List[int]:
    """prod_{m>=1} (1 - t^m)^(-e), integer-only"""
    result = [1] + [0] * order
    for m in range(1, order + 1):
        result = _convolve(result, _binomial_series(e, m, order))
    return result


def real_macdonald(r: int, s: int, order: int) -> List[int]:
    """(1 - t)^(-s) (1 - t^2)^(-(r-s)/2) with r the complex and s the real Euler characteristic"""
    if (r - s) % 2:
        raise InvalidArgument(f"rank {r} and signature {s} must have the same parity", context="hilbert")
    return _convolve(_binomial_series(s, 1, order), _binomial_series((r - s) // 2, 2, order))


def real_goettsche(r: int, s: int, order: int) -> List[int]:
    """prod_n real_macdonald(r, (-1)^(n-1) s)(t^n): signatures predicted for the Goettsche series over R"""
    result = [1] + [0] * order
    for n in range(1, order + 1):
        factor = real_macdonald(r, (-1) ** (n - 1) * s, order // n)
        substituted = [0] * (order + 1)
        for k, value in enumerate(factor):
            substituted[k * n] = value
        result = _convolve(result, substituted)
    return result


__all__ = [
    "SeriesRequest",
    "punctual_series",
    "goettsche_series",
    "classical_series",
    "real_macdonald",
    "real_goettsche",
]
