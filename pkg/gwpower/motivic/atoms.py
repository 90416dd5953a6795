"""
Symbolic atoms of the Grothendieck ring fragment
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple, Union

from gwpower.exceptions import InvalidArgument
from gwpower.gw.element import class_sort_key
from gwpower.gw.fields import BaseField, Scalar, SquareClass
from gwpower.gw.trace import canonical_generators


def span_of(field: BaseField, classes: Iterable[SquareClass]) -> set:
    span = {1}
    for c in classes:
        span |= {field.class_product(c, s) for s in span}
    return span


@dataclass(frozen=True)
class EtaleAtom:
    """
    Spec k(sqrt V) for a finite subgroup V of k*/k*^2

    Identified by the full subgroup V, so two generating sets of the same field give equal atoms.
    The trivial subgroup is the point.
    """

    field: BaseField
    span: Tuple[SquareClass, ...]

    @classmethod
    def from_generators(cls, field: BaseField, gens: Sequence[Scalar]) -> "EtaleAtom":
        """The field k(sqrt c_1, ..., sqrt c_s); squares are dropped, other dependent generators raise"""
        classes = canonical_generators([g for g in gens if field.square_class(g) != 1], field)
        return cls.from_span(field, span_of(field, classes))

    @classmethod
    def from_span(cls, field: BaseField, span: Iterable[SquareClass]) -> "EtaleAtom":
        return cls(field, tuple(sorted(set(span), key=class_sort_key)))

    @property
    def degree(self) -> int:
        return len(self.span)

    @property
    def generators(self) -> Tuple[SquareClass, ...]:
        """Greedy basis of V in class order"""
        basis = []
        current = {1}
        for c in self.span:
            if c not in current:
                basis.append(c)
                current = span_of(self.field, basis)
        return tuple(basis)

    def is_point(self) -> bool:
        return self.span == (1,)

    def sort_key(self) -> tuple:
        return self.degree, tuple(class_sort_key(c) for c in self.span)

    def render(self) -> str:
        if self.is_point():
            return "Pt"
        return f"Et({','.join(str(c) for c in self.generators)})"


@dataclass(frozen=True)
class Curve:
    """Smooth projective curve of genus g"""

    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise InvalidArgument(f"genus must be >= 0, got {self.genus}", context="motivic.atoms")

    def sort_key(self) -> tuple:
        return 0, self.genus, 0

    def render(self) -> str:
        return f"Curve(g={self.genus})"


@dataclass(frozen=True)
class SymCurve:
    """Opaque geometric class [Sym^n C] of a genus-g curve"""

    genus: int
    n: int

    def __post_init__(self):
        if self.genus < 0 or self.n < 0:
            raise InvalidArgument(f"SymCurve needs g, n >= 0, got ({self.genus}, {self.n})", context="motivic.atoms")

    def sort_key(self) -> tuple:
        return 1, self.genus, self.n

    def render(self) -> str:
        return f"Sym^{self.n}(Curve(g={self.genus}))"


@dataclass(frozen=True)
class AbelianVariety:
    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise InvalidArgument(f"abelian variety needs dimension >= 1, got {self.dim}", context="motivic.atoms")

    def sort_key(self) -> tuple:
        return 2, self.dim, 0

    def render(self) -> str:
        return f"Ab({self.dim})"


OpaqueAtom = Union[Curve, SymCurve, AbelianVariety]


# Atoms rewritten away on construction
@dataclass(frozen=True)
class Point:
    pass


@dataclass(frozen=True)
class Affine:
    n: int


@dataclass(frozen=True)
class Projective:
    n: int


@dataclass(frozen=True)
class Torus:
    pass


VarietyAtom = Union[Point, EtaleAtom, Affine, Projective, Torus, Curve, SymCurve, AbelianVariety]


@dataclass(frozen=True)
class Monomial:
    """Formal product K_V * A^affine * (opaque atoms); `etale` is None for the point"""

    etale: Union[EtaleAtom, None] = None
    affine: int = 0
    opaque: Tuple[OpaqueAtom, ...] = ()

    def in_fragment(self) -> bool:
        return not self.opaque

    def sort_key(self) -> tuple:
        etale_key = self.etale.sort_key() if self.etale else (1, ())
        return len(self.opaque), tuple(a.sort_key() for a in self.opaque), etale_key, self.affine

    def render(self) -> str:
        parts = []
        if self.etale is not None:
            parts.append(self.etale.render())
        if self.affine:
            parts.append(f"A^{self.affine}")
        parts.extend(a.render() for a in self.opaque)
        return "*".join(parts) if parts else "Pt"


__all__ = [
    "span_of",
    "EtaleAtom",
    "Curve",
    "SymCurve",
    "AbelianVariety",
    "OpaqueAtom",
    "Point",
    "Affine",
    "Projective",
    "Torus",
    "VarietyAtom",
    "Monomial",
]
