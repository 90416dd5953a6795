"""
Trace forms of multiquadratic extensions k(sqrt c_1, ..., sqrt c_s)
"""

from fractions import Fraction
from itertools import product
from typing import List, Sequence, Tuple

from gwpower.exceptions import NotIndependent
from gwpower.gw.element import GwElement
from gwpower.gw.fields import BaseField, Scalar, SquareClass
from gwpower.gw.gram import diagonalize_gram


def canonical_generators(gens: Sequence[Scalar], field: BaseField) -> List[SquareClass]:
    """Reduce generators to square classes and check multiplicative independence mod squares"""
    classes = [field.square_class(g) for g in gens]
    span = {1}
    for i, c in enumerate(classes):
        if c in span:
            raise NotIndependent(
                f"generator {gens[i]} lies in the span of {list(gens[:i])} over {field.label}", context="gw.trace"
            )
        span |= {field.class_product(c, s) for s in span}
    return classes


def split_generators(gens: Sequence[Scalar], field: BaseField) -> Tuple[List[SquareClass], int]:
    """
    Basis of the span of the generators and the number of generators that depend on earlier ones

    k[x_1..x_s]/(x_i^2 - c_i) is 2^split copies of k(sqrt V), V the span; squares count as dependent.
    """
    basis: List[SquareClass] = []
    span = {1}
    for g in gens:
        c = field.square_class(g)
        if c in span:
            continue
        basis.append(c)
        span |= {field.class_product(c, s) for s in span}
    return basis, len(gens) - len(basis)


def _subsets(s: int) -> List[Tuple[int, ...]]:
    return list(product((0, 1), repeat=s))


def trace_gram(gens: Sequence[Scalar], field: BaseField) -> List[List[Fraction]]:
    """
    Gram matrix of (x, y) -> Tr(xy) on the monomial basis prod sqrt(c_i)^e_i

    sqrt(c)^S * sqrt(c)^T = prod_{S & T} c_i * sqrt(c)^(S ^ T), whose trace is 2^s times the
    coefficient when S ^ T is empty and zero otherwise.
    """
    values = [Fraction(g) for g in gens]
    s = len(values)
    basis = _subsets(s)
    degree = 2**s
    gram = []
    for left in basis:
        row = []
        for right in basis:
            if left != right:
                row.append(Fraction(0))
                continue
            entry = Fraction(degree)
            for bit, c in zip(left, values):
                if bit:
                    entry *= c
            row.append(entry)
        gram.append(row)
    return gram


def trace_form(gens: Sequence[Scalar], field: BaseField, method: str = "closed") -> GwElement:
    """
    Class of the trace form of k(sqrt c_1, ..., sqrt c_s) in GW(k)

    Args:
        gens: Multiplicatively independent square classes (empty for k itself)
        field: Base field
        method: "closed" for the sum over e in {0,1}^s of <2^s prod c_i^e_i>, "gram" to
            diagonalize the trace pairing

    Returns:
        GwElement of rank 2^s
    """
    classes = canonical_generators(gens, field)
    if method == "gram":
        return diagonalize_gram(trace_gram(classes, field), field)
    s = len(classes)
    terms = []
    for bits in _subsets(s):
        value = 2**s
        for bit, c in zip(bits, classes):
            if bit:
                value *= c
        terms.append((value, 1))
    return GwElement.from_terms(field, terms)


__all__ = ["canonical_generators", "split_generators", "trace_gram", "trace_form"]
