"""
Euler factorization and exponentiation f(t)^r through a power structure
"""

from typing import Any, List, Sequence

from gwpower.exceptions import FieldMismatch, NotInvertible
from gwpower.series.series import GwSeries
from gwpower.series.structure import PowerStructure


def _check_ring(f: GwSeries, ps: PowerStructure):
    if f.ring != ps.ring:
        raise FieldMismatch(f"series over {f.ring.name}, power structure over {ps.ring.name}", context="series.power")
    if not f.is_unital():
        raise NotInvertible("power series must start with 1", context="series.power")


def expand_power(r, ps: PowerStructure, order: int) -> GwSeries:
    """(1 - t)^(-r) = 1 + sum b_n(r) t^n"""
    return ps.b_series(r, order)


def euler_factorize(f: GwSeries, ps: PowerStructure) -> List[Any]:
    """
    Exponents c_1..c_N with f = prod (1 - t^i)^(-c_i) mod t^(N+1)

    Extracted degree by degree: after dividing out the factors below i, the remainder is
    1 + c_i t^i + O(t^(i+1)).
    """
    _check_ring(f, ps)
    ring = f.ring
    order = f.order
    remainder = f
    exponents = []
    for i in range(1, order + 1):
        c = remainder[i]
        exponents.append(c)
        if ring.is_zero(c):
            continue
        factor = expand_power(c, ps, order // i).substitute_power(i, order)
        remainder = remainder * factor.invert()
    return exponents


def reconstruct(exponents: Sequence[Any], ps: PowerStructure, order: int) -> GwSeries:
    """prod (1 - t^i)^(-c_i) mod t^(order+1)"""
    ring = ps.ring
    result = GwSeries.one(ring, order)
    for i, c in enumerate(exponents[:order], start=1):
        if ring.is_zero(c):
            continue
        result = result * expand_power(c, ps, order // i).substitute_power(i, order)
    return result


def power_pow(f: GwSeries, r, ps: PowerStructure) -> GwSeries:
    """f(t)^r = prod (1 - t^i)^(-c_i r)"""
    ring = ps.ring
    exponents = euler_factorize(f, ps)
    return reconstruct([ring.mul(c, r) for c in exponents], ps, f.order)


__all__ = ["expand_power", "euler_factorize", "reconstruct", "power_pow"]
