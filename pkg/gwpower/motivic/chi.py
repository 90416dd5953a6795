"""
Compactly supported A^1-Euler characteristic chi_c on the fragment
"""

from typing import Union

from gwpower.exceptions import InternalError, InvalidArgument, Unsupported
from gwpower.gw.element import GwElement
from gwpower.gw.fields import BaseField
from gwpower.gw.trace import trace_form
from gwpower.motivic.atoms import AbelianVariety, Curve, Monomial, SymCurve
from gwpower.motivic.classes import VarietyClass
from gwpower.utils.combinatorics import generalized_binomial


def _half(value: int, what: str) -> int:
    if value % 2:
        raise InternalError(f"{what} has odd numerator {value}", context="motivic.chi")
    return value // 2


def curve_sym_chi(genus: int, n: int, field: BaseField) -> GwElement:
    """
    chi_c(Sym^n C) for a smooth projective curve of genus g

    n = 2m:   sum_{i<=m} C(g,i) <-1>^i + 1/2 (C(2g-2, n) - sum_{i<=m} C(g,i)) H
    n odd:    -1/2 C(2g-2, n) H
    Binomials with negative upper argument are generalized, so g = 0 gives the projective spaces.
    """
    if n < 0:
        raise InvalidArgument(f"symmetric power needs n >= 0, got {n}", context="motivic.chi")
    hyperbolic = GwElement.hyperbolic(field)
    top = generalized_binomial(2 * genus - 2, n)
    if n % 2:
        return hyperbolic * -_half(top, f"chi_c(Sym^{n} Curve(g={genus}))")
    m = n // 2
    binomials = [generalized_binomial(genus, i) for i in range(m + 1)]
    head = GwElement.from_terms(field, [((-1) ** i, b) for i, b in enumerate(binomials)])
    return head + hyperbolic * _half(top - sum(binomials), f"chi_c(Sym^{n} Curve(g={genus}))")


def _opaque_chi(atom: Union[Curve, SymCurve, AbelianVariety], field: BaseField) -> GwElement:
    if isinstance(atom, Curve):
        return GwElement.hyperbolic(field) * (1 - atom.genus)
    if isinstance(atom, SymCurve):
        return curve_sym_chi(atom.genus, atom.n, field)
    if isinstance(atom, AbelianVariety):
        return GwElement.zero(field)
    raise Unsupported(f"no chi_c value for {atom!r}", context="motivic.chi")


def monomial_chi(monomial: Monomial, field: BaseField) -> GwElement:
    """chi_c(K_V * A^d * opaque) = trace form of K_V * <(-1)^d> * prod chi_c(opaque)"""
    gens = monomial.etale.generators if monomial.etale is not None else ()
    value = trace_form(gens, field)
    if monomial.affine % 2:
        value = value * GwElement.of(field, -1)
    for atom in monomial.opaque:
        value = value * _opaque_chi(atom, field)
    return value


def chi_c(c: VarietyClass) -> GwElement:
    """Ring homomorphism from the fragment to GW(k)"""
    result = GwElement.zero(c.field)
    for monomial, coeff in c.terms:
        result = result + monomial_chi(monomial, c.field) * coeff
    return result


__all__ = ["curve_sym_chi", "monomial_chi", "chi_c"]
