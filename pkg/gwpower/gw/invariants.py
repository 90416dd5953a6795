"""
Rank, signature, discriminant and Hasse invariants of virtual forms
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Optional, Tuple

from gwpower.exceptions import InvalidArgument, Unsupported
from gwpower.gw.element import GwElement
from gwpower.gw.fields import FieldKind, SquareClass
from gwpower.gw.hilbert import Place, hilbert_symbol, relevant_places

DISCRIMINANT_CONVENTIONS = ("plain", "signed")


@dataclass(frozen=True)
class InvariantProfile:
    rank: int
    signature: Optional[int]
    discriminant: SquareClass
    # place -> (Hasse invariant of the positive part, of the negative part); rationals only
    hasse: Dict[Place, Tuple[int, int]] = field(default_factory=dict)


def rank(q: GwElement) -> int:
    return q.rank


def signature(q: GwElement) -> int:
    if not q.field.real_embeddable:
        raise Unsupported(f"signature is not defined over {q.field.label}", context="gw.invariants")
    return sum(c * q.field.sign(a) for a, c in q.terms)


def discriminant(q: GwElement, convention: str = "plain") -> SquareClass:
    """
    Discriminant as a square class

    Args:
        q: Virtual form
        convention: "plain" for the product of entries with multiplicity, "signed" to also
            multiply by (-1)^(r(r-1)/2) with r the rank

    Returns:
        Canonical representative
    """
    if convention not in DISCRIMINANT_CONVENTIONS:
        raise InvalidArgument(f"unknown discriminant convention '{convention}'", context="gw.invariants")
    k = q.field
    disc = 1
    for a, c in q.terms:
        if c % 2:
            disc = k.class_product(disc, a)
    if convention == "signed":
        r = q.rank
        if (r * (r - 1) // 2) % 2:
            disc = k.class_product(disc, k.square_class(-1))
    return disc


def hasse_invariant(q: GwElement, place: Place) -> int:
    """Product over i < j of (a_i, a_j)_v for the diagonal entries of an effective form over Q"""
    if q.field.kind is not FieldKind.RATIONALS:
        raise Unsupported("Hasse invariants are computed over Q only", context="gw.invariants")
    if not q.is_effective():
        raise InvalidArgument(f"Hasse invariant needs an effective form, got {q.render()}", context="gw.invariants")
    result = 1
    for a, m in q.terms:
        if (m * (m - 1) // 2) % 2 and hilbert_symbol(a, a, place) == -1:
            result = -result
    for (a, m), (b, n) in combinations(q.terms, 2):
        if (m * n) % 2 and hilbert_symbol(a, b, place) == -1:
            result = -result
    return result


def invariants(q: GwElement) -> InvariantProfile:
    """Complete invariant data for the field of q"""
    sig = signature(q) if q.field.real_embeddable else None
    hasse: Dict[Place, Tuple[int, int]] = {}
    if q.field.kind is FieldKind.RATIONALS:
        pos, neg = q.positive_part(), q.negative_part()
        for place in relevant_places(q.classes()):
            hasse[place] = (hasse_invariant(pos, place), hasse_invariant(neg, place))
    return InvariantProfile(rank=q.rank, signature=sig, discriminant=discriminant(q), hasse=hasse)


__all__ = [
    "DISCRIMINANT_CONVENTIONS",
    "InvariantProfile",
    "rank",
    "signature",
    "discriminant",
    "hasse_invariant",
    "invariants",
]
