"""
McGarraghy's factorial and non-factorial symmetric powers of forms
"""

from functools import lru_cache
from math import factorial
from typing import Hashable, List, Tuple

from gwpower.exceptions import InvalidArgument, NotEffective, Unsupported
from gwpower.gw.element import GwElement
from gwpower.gw.fields import BaseField, FieldKind
from gwpower.series.ring import GwRing
from gwpower.series.series import GwSeries
from gwpower.series.structure import PowerStructure

VARIANTS = ("factorial", "nonfactorial")


class NonFactorialStructure(PowerStructure):
    """S^n(<alpha>) = <alpha^n>, extended like a_*"""

    name = "nonfactorial"

    def __init__(self, field: BaseField):
        super().__init__(GwRing(field))
        self.field = field

    def decompose(self, q: GwElement) -> List[Tuple[Hashable, int]]:
        return list(q.terms)

    def generator_values(self, alpha: int, order: int) -> List[GwElement]:
        return [GwElement.of(self.field, self.field.class_power(alpha, n)) for n in range(order + 1)]


@lru_cache(maxsize=None)
def get_nonfactorial_structure(field: BaseField) -> NonFactorialStructure:
    return NonFactorialStructure(field)


def _factorial_series(alpha: int, n: int, field: BaseField) -> GwSeries:
    """sum_k <k! alpha^k> t^k for one diagonal entry"""
    coeffs = [GwElement.of(field, factorial(k) * alpha**k) for k in range(n + 1)]
    return GwSeries.from_coefficients(GwRing(field), coeffs, n)


def mcgarraghy_sym(q: GwElement, n: int, variant: str = "factorial") -> GwElement:
    """
    Class of the n-th symmetric power of a form

    Args:
        q: Form; must be effective for the factorial variant
        n: Power, n >= 0
        variant: "factorial" sums prod <n_j! a_j^n_j> over weak compositions of n,
            "nonfactorial" uses S^n(<alpha>) = <alpha^n>

    Returns:
        GwElement
    """
    if variant not in VARIANTS:
        raise InvalidArgument(f"variant must be one of {VARIANTS}, got '{variant}'", context="mcgarraghy")
    if n < 0:
        raise InvalidArgument(f"symmetric power needs n >= 0, got {n}", context="mcgarraghy")
    if variant == "nonfactorial":
        return get_nonfactorial_structure(q.field).b(n, q)
    if q.field.kind is FieldKind.FINITE:
        raise Unsupported(
            f"factorial symmetric powers need characteristic 0, got {q.field.label}", context="mcgarraghy"
        )
    if not q.is_effective():
        raise NotEffective(f"factorial symmetric powers need an honest form, got {q.render()}", context="mcgarraghy")
    result = GwSeries.one(GwRing(q.field), n)
    for alpha, multiplicity in q.terms:
        result = result * (_factorial_series(alpha, n, q.field) ** multiplicity)
    return result[n]


__all__ = ["VARIANTS", "NonFactorialStructure", "get_nonfactorial_structure", "mcgarraghy_sym"]
