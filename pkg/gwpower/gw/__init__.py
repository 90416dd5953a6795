"""
Grothendieck-Witt ring arithmetic over Q, R, finite fields and quadratically closed fields
"""

from gwpower.gw.element import GwElement
from gwpower.gw.equality import effective_representative, gw_equal
from gwpower.gw.fields import BaseField, FieldKind, SquareClass
from gwpower.gw.gram import diagonalize_gram
from gwpower.gw.hilbert import INFINITY, hilbert_symbol
from gwpower.gw.invariants import InvariantProfile, discriminant, invariants, signature
from gwpower.gw.trace import trace_form

__all__ = [
    "BaseField",
    "FieldKind",
    "SquareClass",
    "GwElement",
    "gw_equal",
    "effective_representative",
    "diagonalize_gram",
    "INFINITY",
    "hilbert_symbol",
    "InvariantProfile",
    "discriminant",
    "invariants",
    "signature",
    "trace_form",
]
