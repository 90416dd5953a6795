"""
Rebuild b_n(<alpha>) from symmetric powers of quadratic extensions

chi_c(Spec k(sqrt beta)) = <2> + <2 beta>, so the zeta coherence of Sym^n forces
b(<2>)(t) * b(<2 beta>)(t) = sum chi_c(Sym^n Spec k(sqrt beta)) t^n. Taking beta = 2 isolates
b(<2>) since b(<1>) = 1/(1 - t); any other alpha is reached with beta = 2 alpha.
"""

from gwpower.exceptions import InvalidArgument
from gwpower.gw.fields import BaseField, Scalar
from gwpower.motivic.chi import chi_c
from gwpower.motivic.classes import VarietyClass
from gwpower.motivic.etale import etale_sym
from gwpower.series.ring import GwRing
from gwpower.series.series import GwSeries
from gwpower.structures.a_star import get_a_structure


def quadratic_sym_series(beta: Scalar, field: BaseField, order: int) -> GwSeries:
    """sum chi_c(Sym^n Spec k(sqrt beta)) t^n via orbit enumeration"""
    algebra = VarietyClass.etale(field, [beta])
    values = [chi_c(etale_sym(algebra, n)) for n in range(order + 1)]
    return GwSeries.from_coefficients(GwRing(field), values, order)


def _geometric(field: BaseField, order: int) -> GwSeries:
    return GwSeries.from_integers(GwRing(field), [1] * (order + 1))


def reconstruct_two(field: BaseField, order: int) -> GwSeries:
    """b(<2>)(t)"""
    if field.square_class(2) == 1:
        return _geometric(field, order)
    return quadratic_sym_series(2, field, order) * _geometric(field, order).invert()


def reconstruct_from_quadratic(alpha: Scalar, field: BaseField, order: int) -> GwSeries:
    """
    b(<alpha>)(t) rebuilt from orbit-computed symmetric powers

    Args:
        alpha: Nonzero scalar
        field: Base field
        order: Truncation order

    Returns:
        The series, to be compared with the a_* generator series
    """
    if order < 0:
        raise InvalidArgument(f"truncation order must be >= 0, got {order}", context="uniqueness")
    a = field.square_class(alpha)
    two = field.square_class(2)
    if a == 1:
        return _geometric(field, order)
    b_two = reconstruct_two(field, order)
    if a == two:
        return b_two
    beta = field.class_product(two, a)
    return quadratic_sym_series(beta, field, order) * b_two.invert()


def matches_a_star(alpha: Scalar, field: BaseField, order: int) -> bool:
    """Whether the rebuilt series equals the a_* generator series coefficientwise in GW(k)"""
    expected = get_a_structure(field).generator_series(field.square_class(alpha), order)
    return reconstruct_from_quadratic(alpha, field, order).equals(expected)


__all__ = ["quadratic_sym_series", "reconstruct_two", "reconstruct_from_quadratic", "matches_a_star"]
