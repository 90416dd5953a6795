"""
Decidable equality in GW(k) and effective representatives
"""

from itertools import combinations_with_replacement
from typing import List, Optional

from gwpower.exceptions import FieldMismatch
from gwpower.gw.element import GwElement
from gwpower.gw.fields import FieldKind, SquareClass
from gwpower.gw.hilbert import relevant_places
from gwpower.gw.invariants import discriminant, hasse_invariant, signature


def gw_equal(x: GwElement, y: GwElement) -> bool:
    """
    Whether x = y in GW(k), decided by complete invariants of x - y = P - N

    Quadratically closed: rank. Reals: rank and signature. Finite fields: rank and
    discriminant. Rationals: rank, signature, discriminant and the Hasse invariants of P and N
    at every place where they can differ (P and N are then isometric by Hasse-Minkowski).
    """
    if x.field != y.field:
        raise FieldMismatch(f"cannot compare GW({x.field}) with GW({y.field})", context="gw.equality")
    d = x - y
    if d.is_zero():
        return True
    if d.rank != 0:
        return False
    kind = d.field.kind
    if kind is FieldKind.QUADRATICALLY_CLOSED:
        return True
    if kind is FieldKind.REALS:
        return signature(d) == 0
    if discriminant(d) != 1:
        return False
    if kind is FieldKind.FINITE:
        return True
    if signature(d) != 0:
        return False
    pos, neg = d.positive_part(), d.negative_part()
    return all(hasse_invariant(pos, v) == hasse_invariant(neg, v) for v in relevant_places(d.classes()))


def is_zero(q: GwElement) -> bool:
    return gw_equal(q, GwElement.zero(q.field))


def _span(q: GwElement) -> List[SquareClass]:
    k = q.field
    span = {1, k.square_class(-1)}
    for a in q.classes():
        span |= {k.class_product(a, s) for s in span}
    return sorted(span, key=lambda a: (abs(a), a < 0))


def effective_representative(q: GwElement, max_search_rank: int = 4) -> Optional[GwElement]:
    """
    An honest form equal to q in GW(k), or None when none exists (or none is found over Q)

    Over Q the search runs over forms of rank <= max_search_rank whose entries lie in the
    subgroup generated by -1 and the classes of q.
    """
    k = q.field
    r = q.rank
    if r < 0:
        return None
    if q.is_effective():
        return q
    if k.kind is FieldKind.QUADRATICALLY_CLOSED:
        return GwElement.from_int(k, r)
    if k.kind is FieldKind.REALS:
        s = signature(q)
        plus, minus = (r + s) // 2, (r - s) // 2
        if minus < 0 or plus < 0:
            return None
        return GwElement.from_terms(k, [(1, plus), (-1, minus)])
    if k.kind is FieldKind.FINITE:
        disc = discriminant(q)
        if r == 0:
            return GwElement.zero(k) if disc == 1 else None
        return GwElement.from_terms(k, [(1, r - 1), (disc, 1)])
    if r > max_search_rank:
        return None
    for entries in combinations_with_replacement(_span(q), r):
        candidate = GwElement.from_terms(k, [(a, 1) for a in entries])
        if gw_equal(candidate, q):
            return candidate
    return None


# Largest search span for the rational case of reduced_form
_REDUCE_MAX_SPAN = 16


def reduced_form(q: GwElement) -> GwElement:
    """
    A short representative of q for display: 0, an honest form, or an honest form of rank <= 4
    plus a multiple of H. Falls back to q when no representative is found.
    """
    if is_zero(q):
        return GwElement.zero(q.field)
    representative = effective_representative(q)
    if representative is not None:
        return representative
    if q.field.kind is FieldKind.RATIONALS and len(_span(q)) > _REDUCE_MAX_SPAN:
        return q
    hyperbolic = GwElement.hyperbolic(q.field)
    for rank in range(q.rank % 2, 5, 2):
        h = (q.rank - rank) // 2
        representative = effective_representative(q - hyperbolic * h)
        if representative is not None:
            return representative + hyperbolic * h
    return q


__all__ = ["gw_equal", "is_zero", "effective_representative", "reduced_form"]
