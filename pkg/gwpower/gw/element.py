"""
Virtual quadratic forms as integer combinations of square classes
"""

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from gwpower.exceptions import FieldMismatch, InternalError
from gwpower.gw.fields import BaseField, Scalar, SquareClass


def class_sort_key(a: SquareClass) -> Tuple[int, int]:
    """Order classes as 1, -1, 2, -2, 3, ..."""
    return abs(a), 0 if a > 0 else 1


@dataclass(frozen=True)
class GwElement:
    """
    Element of GW(k) stored on the group ring Z[k*/k*^2]

    Stored terms are canonical: representatives reduced for `field`, no zero coefficients,
    sorted by class. Two elements may be equal in GW(k) without having equal terms;
    use `gw.equality.gw_equal` for the ring equality.
    """

    field: BaseField
    terms: Tuple[Tuple[SquareClass, int], ...] = ()

    # Constructors
    @classmethod
    def from_terms(cls, field: BaseField, terms: Union[Mapping[Scalar, int], Iterable[Tuple[Scalar, int]]]):
        """Build from (scalar, coefficient) pairs, reducing every scalar to its square class"""
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[SquareClass, int] = defaultdict(int)
        for value, coeff in pairs:
            if coeff:
                acc[field.square_class(value)] += int(coeff)
        return cls._from_canonical(field, acc)

    @classmethod
    def _from_canonical(cls, field: BaseField, acc: Mapping[SquareClass, int]) -> "GwElement":
        items = sorted(((a, c) for a, c in acc.items() if c), key=lambda item: class_sort_key(item[0]))
        return cls(field, tuple(items))

    @classmethod
    def zero(cls, field: BaseField) -> "GwElement":
        return cls(field, ())

    @classmethod
    def one(cls, field: BaseField) -> "GwElement":
        return cls(field, ((1, 1),))

    @classmethod
    def of(cls, field: BaseField, value: Scalar) -> "GwElement":
        """The rank-one form <value>"""
        return cls(field, ((field.square_class(value), 1),))

    @classmethod
    def hyperbolic(cls, field: BaseField) -> "GwElement":
        return cls.from_terms(field, [(1, 1), (-1, 1)])

    @classmethod
    def from_int(cls, field: BaseField, n: int) -> "GwElement":
        return cls(field, ((1, n),)) if n else cls(field, ())

    # Accessors
    @property
    def coefficients(self) -> Dict[SquareClass, int]:
        return dict(self.terms)

    def classes(self) -> List[SquareClass]:
        return [a for a, _ in self.terms]

    def coefficient(self, a: SquareClass) -> int:
        return self.coefficients.get(a, 0)

    @property
    def rank(self) -> int:
        return sum(c for _, c in self.terms)

    def is_zero(self) -> bool:
        """Syntactic zero; see gw_equal for the ring test"""
        return not self.terms

    def is_effective(self) -> bool:
        return all(c > 0 for _, c in self.terms)

    def positive_part(self) -> "GwElement":
        return GwElement(self.field, tuple((a, c) for a, c in self.terms if c > 0))

    def negative_part(self) -> "GwElement":
        """The effective form N with self = P - N"""
        return GwElement(self.field, tuple((a, -c) for a, c in self.terms if c < 0))

    # Arithmetic
    def _check(self, other: "GwElement"):
        if self.field != other.field:
            raise FieldMismatch(f"cannot combine GW({self.field}) with GW({other.field})", context="gw.element")

    def _coerce(self, other) -> "GwElement":
        if isinstance(other, GwElement):
            self._check(other)
            return other
        if isinstance(other, int):
            return GwElement.from_int(self.field, other)
        return NotImplemented

    def __add__(self, other) -> "GwElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = defaultdict(int, self.terms)
        for a, c in other.terms:
            acc[a] += c
        return GwElement._from_canonical(self.field, acc)

    __radd__ = __add__

    def __neg__(self) -> "GwElement":
        return GwElement(self.field, tuple((a, -c) for a, c in self.terms))

    def __sub__(self, other) -> "GwElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "GwElement":
        return (-self) + other

    def __mul__(self, other) -> "GwElement":
        if isinstance(other, int):
            if other == 0:
                return GwElement.zero(self.field)
            return GwElement(self.field, tuple((a, c * other) for a, c in self.terms))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: Dict[SquareClass, int] = defaultdict(int)
        product = self.field.class_product
        for a, c in self.terms:
            for b, d in other.terms:
                acc[product(a, b)] += c * d
        return GwElement._from_canonical(self.field, acc)

    __rmul__ = __mul__

    def divide_exact(self, n: int) -> "GwElement":
        """Divide every stored coefficient by n; the formal representation must be divisible"""
        if any(c % n for _, c in self.terms):
            raise InternalError(f"{self.render()} is not divisible by {n}", context="gw.element")
        return GwElement(self.field, tuple((a, c // n) for a, c in self.terms))

    def map_classes(self, target: BaseField) -> "GwElement":
        """Push forward along a field extension by re-reducing every representative"""
        return GwElement.from_terms(target, self.terms)

    # Rendering
    def render(self) -> str:
        """Text form in the expression grammar, e.g. `2*<1> - <-2>`"""
        if not self.terms:
            return "0"
        parts = []
        for i, (a, c) in enumerate(self.terms):
            magnitude = abs(c)
            body = f"<{a}>" if magnitude == 1 else f"{magnitude}*<{a}>"
            if i == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json(self) -> List[dict]:
        return [{"class": str(a), "coeff": c} for a, c in self.terms]

    @classmethod
    def from_json(cls, field: BaseField, data: List[dict]) -> "GwElement":
        return cls.from_terms(field, [(int(item["class"]), int(item["coeff"])) for item in data])

    def __str__(self) -> str:
        return self.render()


__all__ = ["GwElement", "class_sort_key"]
