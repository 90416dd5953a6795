"""
Orbit machinery for multiquadratic etale algebras

With U a finite subgroup of k*/k*^2 chosen with basis u_1..u_r, the Galois group of k(sqrt U)
is G = Hom(U, F_2) = F_2^r, encoded as r-bit masks. The geometric points of k(sqrt V), V in U,
are the characters of V (bit tuples over a basis of V), and g in G acts by adding g restricted
to V. An orbit with stabilizer S is Spec of the fixed field k(sqrt S^perp).
"""

from collections import Counter
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from loguru import logger

from gwpower.exceptions import FieldMismatch
from gwpower.gw.fields import BaseField, SquareClass
from gwpower.motivic.atoms import EtaleAtom

# (fixed-field atom or None for the point, number of orbits)
OrbitDecomposition = Tuple[Tuple[Optional[EtaleAtom], int], ...]


class ClassSpan:
    """Finite subgroup U of k*/k*^2 with F_2-coordinates over a chosen basis"""

    def __init__(self, field: BaseField, generators: Iterable[SquareClass]):
        self.field = field
        self.basis: List[SquareClass] = []
        self.coords: Dict[SquareClass, int] = {1: 0}
        for c in generators:
            if c in self.coords:
                continue
            bit = 1 << len(self.basis)
            self.basis.append(c)
            self.coords.update({field.class_product(c, u): mask | bit for u, mask in list(self.coords.items())})

    @property
    def group_size(self) -> int:
        return 1 << len(self.basis)

    def pairing(self, u: SquareClass, g: int) -> int:
        return bin(self.coords[u] & g).count("1") & 1

    def annihilator(self, subgroup: Sequence[int]) -> List[SquareClass]:
        """S^perp = {u in U : g(u) = 0 for every g in S}"""
        return [u for u in self.coords if all(self.pairing(u, g) == 0 for g in subgroup)]

    def shift(self, atom: Optional[EtaleAtom], g: int) -> int:
        """g restricted to V, as a bit mask over the basis of V"""
        if atom is None:
            return 0
        mask = 0
        for j, v in enumerate(atom.generators):
            if self.pairing(v, g):
                mask |= 1 << j
        return mask


def _ambient(atoms: Sequence[Optional[EtaleAtom]], field: BaseField) -> ClassSpan:
    gens: List[SquareClass] = []
    for atom in atoms:
        if atom is None:
            continue
        if atom.field != field:
            raise FieldMismatch(f"etale atoms over {atom.field} and {field}", context="motivic.galois")
        gens.extend(atom.generators)
    return ClassSpan(field, gens)


def _fixed_atom(span: ClassSpan, stabilizer: Sequence[int]) -> Optional[EtaleAtom]:
    fixed = span.annihilator(stabilizer)
    if len(fixed) == 1:
        return None
    return EtaleAtom.from_span(span.field, fixed)


def _points(span: ClassSpan, atoms: Sequence[Optional[EtaleAtom]]) -> List[Tuple[int, int]]:
    """(atom index, character bits) for every geometric point of the disjoint union"""
    points = []
    for index, atom in enumerate(atoms):
        size = 1 if atom is None else atom.degree
        points.extend((index, bits) for bits in range(size))
    return points


@lru_cache(maxsize=4096)
def symmetric_orbits(field: BaseField, atoms: Tuple[Optional[EtaleAtom], ...], n: int) -> OrbitDecomposition:
    """
    Orbit decomposition of the size-n multisets of geometric points of a disjoint union of atoms

    Args:
        field: Base field
        atoms: Components of the etale algebra, repeated according to multiplicity
        n: Multiset size

    Returns:
        Fixed-field atoms with their orbit counts
    """
    span = _ambient(atoms, field)
    points = _points(span, atoms)
    index_of = {p: i for i, p in enumerate(points)}
    actions = []
    for g in range(span.group_size):
        shifts = [span.shift(atom, g) for atom in atoms]
        actions.append([index_of[(a, bits ^ shifts[a])] for a, bits in points])

    seen = set()
    counts: Counter = Counter()
    for multiset in combinations_with_replacement(range(len(points)), n):
        if multiset in seen:
            continue
        images = [tuple(sorted(action[i] for i in multiset)) for action in actions]
        seen.update(images)
        stabilizer = [g for g, image in enumerate(images) if image == multiset]
        counts[_fixed_atom(span, stabilizer)] += 1
    logger.debug(f"Sym^{n} over {len(points)} points: {sum(counts.values())} orbits")
    return _ordered(counts)


@lru_cache(maxsize=4096)
def product_orbits(field: BaseField, a: Optional[EtaleAtom], b: Optional[EtaleAtom]) -> OrbitDecomposition:
    """Orbit decomposition of the product Galois set of two atoms"""
    span = _ambient((a, b), field)
    size_a = 1 if a is None else a.degree
    size_b = 1 if b is None else b.degree
    seen = set()
    counts: Counter = Counter()
    for x in range(size_a):
        for y in range(size_b):
            if (x, y) in seen:
                continue
            images = [(x ^ span.shift(a, g), y ^ span.shift(b, g)) for g in range(span.group_size)]
            seen.update(images)
            stabilizer = [g for g, image in enumerate(images) if image == (x, y)]
            counts[_fixed_atom(span, stabilizer)] += 1
    return _ordered(counts)


def _ordered(counts: Counter) -> OrbitDecomposition:
    return tuple(sorted(counts.items(), key=lambda item: item[0].sort_key() if item[0] else (1, ())))


__all__ = ["ClassSpan", "OrbitDecomposition", "symmetric_orbits", "product_orbits"]
