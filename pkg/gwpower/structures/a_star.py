"""
The power structure a_* on GW(k)
"""

from functools import lru_cache
from math import comb
from typing import Hashable, List, Tuple

from gwpower.exceptions import InvalidArgument
from gwpower.gw.element import GwElement
from gwpower.gw.fields import BaseField, FieldKind, Scalar
from gwpower.gw.hilbert import hilbert_symbol, relevant_places
from gwpower.series.ring import GwRing
from gwpower.series.structure import PowerStructure


def torsion_term(alpha: Scalar, field: BaseField) -> GwElement:
    """t_alpha = <2> + <alpha> - <1> - <2 alpha>, a 2-torsion element of GW(k)"""
    a = field.square_class(alpha)
    two = field.square_class(2)
    return GwElement.from_terms(field, [(two, 1), (a, 1), (1, -1), (field.class_product(two, a), -1)])


def cup_product_vanishes(alpha: Scalar, field: BaseField) -> bool:
    """[2] u [alpha] = 0; over Q this is (2, alpha)_v = 1 at every place"""
    if field.kind is not FieldKind.RATIONALS:
        return True
    a = field.square_class(alpha)
    return all(hilbert_symbol(2, a, v) == 1 for v in relevant_places([2, a]))


def a_generator(alpha: Scalar, n: int, field: BaseField) -> GwElement:
    """a_n(<alpha>) = <alpha^n> + n(n-1)/2 * t_alpha"""
    if n < 0:
        raise InvalidArgument(f"a_n needs n >= 0, got {n}", context="a_structure")
    if n == 0:
        return GwElement.one(field)
    a = field.square_class(alpha)
    head = GwElement.of(field, field.class_power(a, n))
    return head + torsion_term(a, field) * comb(n, 2)


class AStructure(PowerStructure):
    """a_* on GW(k): the values above on rank-one generators, extended by convolution and inversion"""

    name = "a_*"

    def __init__(self, field: BaseField):
        super().__init__(GwRing(field))
        self.field = field

    def decompose(self, q: GwElement) -> List[Tuple[Hashable, int]]:
        return list(q.terms)

    def generator_values(self, alpha: int, order: int) -> List[GwElement]:
        return [a_generator(alpha, n, self.field) for n in range(order + 1)]


@lru_cache(maxsize=None)
def get_a_structure(field: BaseField) -> AStructure:
    """Shared a_* per field, so generator series are cached across calls"""
    return AStructure(field)


def a_n(q: GwElement, n: int) -> GwElement:
    """a_n(q) for an arbitrary virtual form q"""
    if n < 0:
        raise InvalidArgument(f"a_n needs n >= 0, got {n}", context="a_structure")
    return get_a_structure(q.field).b(n, q)


__all__ = ["torsion_term", "cup_product_vanishes", "a_generator", "AStructure", "get_a_structure", "a_n"]
