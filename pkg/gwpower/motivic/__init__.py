"""
Symbolic fragment of K0(Var_k), chi_c and symmetric powers
"""

from gwpower.motivic.atoms import AbelianVariety, Curve, EtaleAtom, Monomial, SymCurve
from gwpower.motivic.chi import chi_c, curve_sym_chi
from gwpower.motivic.classes import VarietyClass, VarietyRing
from gwpower.motivic.etale import etale_product, etale_sym
from gwpower.motivic.symmetric import sym_chi, sym_class, zeta_series
from gwpower.motivic.verify import verify_conjecture

__all__ = [
    "AbelianVariety",
    "Curve",
    "EtaleAtom",
    "Monomial",
    "SymCurve",
    "chi_c",
    "curve_sym_chi",
    "VarietyClass",
    "VarietyRing",
    "etale_product",
    "etale_sym",
    "sym_chi",
    "sym_class",
    "zeta_series",
    "verify_conjecture",
]
