"""
Integer combinations of monomials in the symbolic fragment of K0(Var_k)
"""

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple, Union

import numpy as np

from gwpower.exceptions import FieldMismatch, InternalError, Unsupported
from gwpower.gw.fields import BaseField, FieldKind, Scalar
from gwpower.gw.trace import split_generators
from gwpower.motivic.atoms import (
    AbelianVariety,
    Affine,
    Curve,
    EtaleAtom,
    Monomial,
    Point,
    Projective,
    SymCurve,
    Torus,
    VarietyAtom,
    span_of,
)
from gwpower.motivic.galois import product_orbits
from gwpower.series.ring import RingDescriptor
from gwpower.utils.sampling import pick, sampling_config, small_nonzero


def monomial_product(field: BaseField, x: Monomial, y: Monomial) -> List[Tuple[Monomial, int]]:
    """x * y with A^a A^b = A^(a+b) and etale factors merged into orbits"""
    opaque = tuple(sorted(x.opaque + y.opaque, key=lambda atom: atom.sort_key()))
    affine = x.affine + y.affine
    if x.etale is None or y.etale is None:
        return [(Monomial(x.etale or y.etale, affine, opaque), 1)]
    return [(Monomial(atom, affine, opaque), count) for atom, count in product_orbits(field, x.etale, y.etale)]


@dataclass(frozen=True)
class VarietyClass:
    """
    Element of the fragment: sum of integer multiples of monomials K_V * A^d * (opaque atoms)

    Projective spaces and tori are rewritten on construction, so equal classes built from
    those atoms have equal terms.
    """

    field: BaseField
    terms: Tuple[Tuple[Monomial, int], ...] = ()

    # Constructors
    @classmethod
    def from_monomials(cls, field: BaseField, pairs: Iterable[Tuple[Monomial, int]]) -> "VarietyClass":
        acc: Dict[Monomial, int] = defaultdict(int)
        for monomial, coeff in pairs:
            if coeff:
                acc[monomial] += coeff
        items = sorted(((m, c) for m, c in acc.items() if c), key=lambda item: item[0].sort_key())
        return cls(field, tuple(items))

    @classmethod
    def zero(cls, field: BaseField) -> "VarietyClass":
        return cls(field, ())

    @classmethod
    def point(cls, field: BaseField) -> "VarietyClass":
        return cls(field, ((Monomial(), 1),))

    @classmethod
    def from_int(cls, field: BaseField, n: int) -> "VarietyClass":
        return cls(field, ((Monomial(), n),)) if n else cls(field, ())

    @classmethod
    def affine(cls, field: BaseField, n: int) -> "VarietyClass":
        return cls(field, ((Monomial(affine=n), 1),))

    @classmethod
    def projective(cls, field: BaseField, n: int) -> "VarietyClass":
        return cls.from_monomials(field, [(Monomial(affine=i), 1) for i in range(n + 1)])

    @classmethod
    def torus(cls, field: BaseField) -> "VarietyClass":
        return cls.from_monomials(field, [(Monomial(affine=1), 1), (Monomial(), -1)])

    @classmethod
    def etale(cls, field: BaseField, gens: Sequence[Scalar]) -> "VarietyClass":
        """Spec k[x_1..x_s]/(x_i^2 - c_i); each dependent or square c_i doubles the class"""
        classes, split = split_generators(gens, field)
        atom = EtaleAtom.from_span(field, span_of(field, classes))
        return cls(field, ((Monomial(None if atom.is_point() else atom), 2**split),))

    @classmethod
    def opaque(cls, field: BaseField, atom: Union[Curve, SymCurve, AbelianVariety]) -> "VarietyClass":
        return cls(field, ((Monomial(opaque=(atom,)), 1),))

    @classmethod
    def from_atom(cls, field: BaseField, atom: VarietyAtom) -> "VarietyClass":
        if isinstance(atom, Point):
            return cls.point(field)
        if isinstance(atom, Affine):
            return cls.affine(field, atom.n)
        if isinstance(atom, Projective):
            return cls.projective(field, atom.n)
        if isinstance(atom, Torus):
            return cls.torus(field)
        if isinstance(atom, EtaleAtom):
            return cls(field, ((Monomial(None if atom.is_point() else atom), 1),))
        if isinstance(atom, (Curve, SymCurve, AbelianVariety)):
            return cls.opaque(field, atom)
        raise InternalError(f"unknown atom {atom!r}", context="motivic.classes")

    # Accessors
    def monomials(self) -> List[Monomial]:
        return [m for m, _ in self.terms]

    def is_zero(self) -> bool:
        return not self.terms

    def is_effective(self) -> bool:
        return all(c > 0 for _, c in self.terms)

    def in_fragment(self) -> bool:
        return all(m.in_fragment() for m, _ in self.terms)

    def opaque_atoms(self) -> List[Union[Curve, SymCurve, AbelianVariety]]:
        return [atom for m, _ in self.terms for atom in m.opaque]

    # Arithmetic
    def _coerce(self, other) -> "VarietyClass":
        if isinstance(other, VarietyClass):
            if other.field != self.field:
                raise FieldMismatch(f"classes over {self.field} and {other.field}", context="motivic.classes")
            return other
        if isinstance(other, int):
            return VarietyClass.from_int(self.field, other)
        return NotImplemented

    def __add__(self, other) -> "VarietyClass":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return VarietyClass.from_monomials(self.field, self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> "VarietyClass":
        return VarietyClass(self.field, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other) -> "VarietyClass":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "VarietyClass":
        return (-self) + other

    def __mul__(self, other) -> "VarietyClass":
        if isinstance(other, int):
            if other == 0:
                return VarietyClass.zero(self.field)
            return VarietyClass(self.field, tuple((m, c * other) for m, c in self.terms))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        pairs = []
        for x, c in self.terms:
            for y, d in other.terms:
                pairs.extend((m, c * d * k) for m, k in monomial_product(self.field, x, y))
        return VarietyClass.from_monomials(self.field, pairs)

    __rmul__ = __mul__

    def divide_exact(self, n: int) -> "VarietyClass":
        if any(c % n for _, c in self.terms):
            raise InternalError(f"{self.render()} is not divisible by {n}", context="motivic.classes")
        return VarietyClass(self.field, tuple((m, c // n) for m, c in self.terms))

    # Rendering
    def render(self) -> str:
        """Text form in the variety grammar, e.g. `Pt + A^1 - 2*Et(2)`"""
        if not self.terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.terms):
            magnitude = abs(c)
            body = m.render() if magnitude == 1 else f"{magnitude}*{m.render()}"
            if i == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class VarietyRing(RingDescriptor):
    """The fragment as a coefficient ring; equality is equality of canonical terms"""

    field: BaseField
    exact_division: bool = True
    torsion_free: bool = True

    @property
    def name(self) -> str:
        return f"K0(Var_{self.field.label})"

    def zero(self) -> VarietyClass:
        return VarietyClass.zero(self.field)

    def one(self) -> VarietyClass:
        return VarietyClass.point(self.field)

    def from_int(self, n: int) -> VarietyClass:
        return VarietyClass.from_int(self.field, n)

    def equal(self, x: VarietyClass, y: VarietyClass) -> bool:
        return x == y

    def is_zero(self, x: VarietyClass) -> bool:
        return x.is_zero()

    def divide_exact(self, x: VarietyClass, n: int) -> VarietyClass:
        return x.divide_exact(n)

    def render(self, x: VarietyClass) -> str:
        return x.render()

    def random_element(self, rng: np.random.Generator) -> VarietyClass:
        """Small combinations of Pt, A^1 and quadratic etale atoms"""
        config = sampling_config()
        key = "Fp" if self.field.kind is FieldKind.FINITE else self.field.kind.value
        pool = [a for a in config["class_pools"][key] if self.field.kind is not FieldKind.FINITE or a % self.field.p]
        result = self.zero()
        for _ in range(int(rng.integers(1, config["max_terms"] + 1))):
            choice = int(rng.integers(3))
            if choice == 0:
                base = self.one()
            elif choice == 1:
                base = VarietyClass.affine(self.field, 1)
            else:
                alpha = self.field.square_class(pick(rng, pool))
                if alpha == 1:
                    base = self.one()
                else:
                    base = VarietyClass.etale(self.field, [alpha])
            result = result + base * small_nonzero(rng, config["max_coefficient"])
        return result


def require_fragment(c: VarietyClass, operation: str):
    """Raise Unsupported naming the first atom outside the etale x affine fragment"""
    for atom in c.opaque_atoms():
        raise Unsupported(f"{operation} is not available for {atom.render()}", context="motivic")


__all__ = ["monomial_product", "VarietyClass", "VarietyRing", "require_fragment"]
