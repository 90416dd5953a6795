"""
Symmetric powers and products of multiquadratic etale algebras
"""

from typing import List, Optional, Union

from gwpower.exceptions import InvalidArgument, Unsupported
from gwpower.motivic.atoms import EtaleAtom, Monomial
from gwpower.motivic.classes import VarietyClass
from gwpower.motivic.galois import OrbitDecomposition, product_orbits, symmetric_orbits


def _from_orbits(field, orbits: OrbitDecomposition) -> VarietyClass:
    return VarietyClass.from_monomials(field, [(Monomial(atom), count) for atom, count in orbits])


def _components(algebra: VarietyClass) -> List[Optional[EtaleAtom]]:
    """Atoms of an honest etale algebra, repeated according to multiplicity"""
    atoms: List[Optional[EtaleAtom]] = []
    for monomial, coeff in algebra.terms:
        if monomial.affine or monomial.opaque:
            raise Unsupported(f"{monomial.render()} is not an etale algebra", context="motivic.etale")
        if coeff < 0:
            raise Unsupported(f"virtual etale class {algebra.render()} has no Galois set", context="motivic.etale")
        atoms.extend([monomial.etale] * coeff)
    return atoms


def etale_sym(algebra: Union[EtaleAtom, VarietyClass], n: int) -> VarietyClass:
    """
    [Sym^n Spec E] for a multiquadratic etale algebra E

    Args:
        algebra: An etale atom or an honest sum of them (a disjoint union)
        n: Power, n >= 0

    Returns:
        Sum over the orbits of size-n multisets of geometric points of the fixed-field atoms
    """
    if n < 0:
        raise InvalidArgument(f"symmetric power needs n >= 0, got {n}", context="motivic.etale")
    if isinstance(algebra, EtaleAtom):
        algebra = VarietyClass.from_atom(algebra.field, algebra)
    atoms = _components(algebra)
    return _from_orbits(algebra.field, symmetric_orbits(algebra.field, tuple(atoms), n))


def etale_product(a: EtaleAtom, b: EtaleAtom) -> VarietyClass:
    """Spec(L (x) M) decomposed into transitive orbits of the product Galois set"""
    field = a.field
    left = None if a.is_point() else a
    right = None if b.is_point() else b
    return _from_orbits(field, product_orbits(field, left, right))


__all__ = ["etale_sym", "etale_product"]
