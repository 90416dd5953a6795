"""
Symmetric powers: geometric classes on the fragment and chi_c-level values with curves
"""

from functools import lru_cache
from typing import Hashable, List, Tuple

from loguru import logger

from gwpower.exceptions import InvalidArgument, Unsupported
from gwpower.gw.element import GwElement
from gwpower.gw.fields import BaseField
from gwpower.motivic.atoms import Curve, Monomial
from gwpower.motivic.chi import chi_c, curve_sym_chi
from gwpower.motivic.classes import VarietyClass, VarietyRing, require_fragment
from gwpower.motivic.etale import etale_sym
from gwpower.series.ring import GwRing
from gwpower.series.series import GwSeries
from gwpower.series.structure import PowerStructure


class SymmetricPowerStructure(PowerStructure):
    """
    1 + sum [Sym^n x] t^n on the etale x affine fragment

    On a monomial E * A^d the values are Sym^n(E) * A^(dn); sums and differences follow from the
    convolution and inversion rules of every power structure.
    """

    name = "sym"

    def __init__(self, field: BaseField):
        super().__init__(VarietyRing(field))
        self.field = field

    def decompose(self, c: VarietyClass) -> List[Tuple[Hashable, int]]:
        require_fragment(c, "Sym^n")
        return list(c.terms)

    def generator_values(self, monomial: Monomial, order: int) -> List[VarietyClass]:
        if not monomial.in_fragment():
            raise Unsupported(f"Sym^n is not available for {monomial.render()}", context="motivic.symmetric")
        base = VarietyClass.from_monomials(self.field, [(Monomial(monomial.etale), 1)])
        return [etale_sym(base, k) * VarietyClass.affine(self.field, monomial.affine * k) for k in range(order + 1)]


@lru_cache(maxsize=None)
def get_sym_structure(field: BaseField) -> SymmetricPowerStructure:
    return SymmetricPowerStructure(field)


def sym_class(c: VarietyClass, n: int) -> VarietyClass:
    """Geometric class [Sym^n c] of a fragment class"""
    if n < 0:
        raise InvalidArgument(f"symmetric power needs n >= 0, got {n}", context="motivic.symmetric")
    return get_sym_structure(c.field).b(n, c)


def zeta_series(c: VarietyClass, order: int) -> GwSeries:
    """Motivic zeta series 1 + sum [Sym^n c] t^n"""
    return get_sym_structure(c.field).b_series(c, order)


def _monomial_chi_series(monomial: Monomial, field: BaseField, order: int) -> GwSeries:
    ring = GwRing(field)
    if monomial.in_fragment():
        values = [chi_c(v) for v in get_sym_structure(field).generator_values(monomial, order)]
        return GwSeries.from_coefficients(ring, values, order)
    if monomial.etale is None and len(monomial.opaque) == 1 and isinstance(monomial.opaque[0], Curve):
        genus = monomial.opaque[0].genus
        values = []
        for k in range(order + 1):
            value = curve_sym_chi(genus, k, field)
            if (monomial.affine * k) % 2:
                value = value * GwElement.of(field, -1)
            values.append(value)
        return GwSeries.from_coefficients(ring, values, order)
    raise Unsupported(f"chi_c(Sym^n) is not known for {monomial.render()}", context="motivic.symmetric")


def sym_chi_series(c: VarietyClass, order: int) -> GwSeries:
    """1 + sum chi_c(Sym^n c) t^n, by closed forms on monomials, convolution and inversion"""
    result = GwSeries.one(GwRing(c.field), order)
    for monomial, coeff in c.terms:
        result = result * (_monomial_chi_series(monomial, c.field, order) ** coeff)
    logger.debug(f"chi_c(Sym^n) series of {c.render()} to order {order}")
    return result


def sym_chi(c: VarietyClass, n: int) -> GwElement:
    """chi_c(Sym^n c) for fragment classes, curves and their combinations"""
    if n < 0:
        raise InvalidArgument(f"symmetric power needs n >= 0, got {n}", context="motivic.symmetric")
    return sym_chi_series(c, n)[n]


__all__ = ["SymmetricPowerStructure", "get_sym_structure", "sym_class", "zeta_series", "sym_chi_series", "sym_chi"]
