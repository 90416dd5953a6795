"""
Base fields and canonical square classes
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd
from typing import List, Optional, Union

from sympy import isprime, legendre_symbol
from sympy.ntheory.factor_ import core
from sympy.polys.domains import GF, QQ

from gwpower.exceptions import InvalidArgument, Unsupported

# A square class is stored as its canonical integer representative for the active field
SquareClass = int
Scalar = Union[int, Fraction, str]


class FieldKind(str, Enum):
    RATIONALS = "Q"
    REALS = "R"
    QUADRATICALLY_CLOSED = "C"
    FINITE = "Fp"


@lru_cache(maxsize=4096)
def squarefree_part(n: int) -> int:
    """Signed squarefree part of a nonzero integer"""
    sign = -1 if n < 0 else 1
    return sign * int(core(abs(n), 2))


def to_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


@dataclass(frozen=True)
class BaseField:
    """A base field of characteristic different from 2"""

    kind: FieldKind
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind is FieldKind.FINITE:
            if self.p is None or self.p == 2 or not isprime(self.p):
                raise InvalidArgument(f"finite field needs an odd prime, got {self.p}", context="gw.fields")
        elif self.p is not None:
            raise InvalidArgument(f"field {self.kind.value} takes no characteristic", context="gw.fields")

    @classmethod
    def rationals(cls) -> "BaseField":
        return cls(FieldKind.RATIONALS)

    @classmethod
    def reals(cls) -> "BaseField":
        return cls(FieldKind.REALS)

    @classmethod
    def quadratically_closed(cls) -> "BaseField":
        return cls(FieldKind.QUADRATICALLY_CLOSED)

    @classmethod
    def finite(cls, p: int) -> "BaseField":
        return cls(FieldKind.FINITE, p)

    @classmethod
    def parse(cls, text: str) -> "BaseField":
        """Parse a field label: Q, R, C or Fp:<p>"""
        label = text.strip()
        if label in ("Q", "R", "C"):
            return cls(FieldKind(label))
        if label.startswith("Fp:"):
            try:
                return cls.finite(int(label[3:]))
            except ValueError:
                pass
        raise InvalidArgument(f"unknown field '{text}' (expected Q, R, C or Fp:<p>)", context="gw.fields")

    @property
    def label(self) -> str:
        if self.kind is FieldKind.FINITE:
            return f"Fp:{self.p}"
        return self.kind.value

    def __str__(self) -> str:
        return self.label

    @property
    def real_embeddable(self) -> bool:
        return self.kind in (FieldKind.RATIONALS, FieldKind.REALS)

    @property
    def characteristic(self) -> int:
        return self.p if self.kind is FieldKind.FINITE else 0

    @cached_property
    def nonresidue(self) -> int:
        """Least quadratic nonresidue mod p"""
        if self.kind is not FieldKind.FINITE:
            raise Unsupported(f"no nonresidue representative over {self.label}", context="gw.fields")
        return next(a for a in range(2, self.p) if legendre_symbol(a, self.p) == -1)

    @cached_property
    def domain(self):
        """sympy domain used for exact linear algebra over this field"""
        return GF(self.p) if self.kind is FieldKind.FINITE else QQ

    def element(self, value: Scalar):
        """Coerce a rational scalar into `domain`"""
        x = to_fraction(value)
        if self.kind is FieldKind.FINITE:
            if x.denominator % self.p == 0:
                raise InvalidArgument(f"{value} is not defined mod {self.p}", context="gw.fields")
            return self.domain(x.numerator) / self.domain(x.denominator)
        return QQ(x.numerator, x.denominator)

    def from_domain(self, value) -> Fraction:
        converted = self.domain.to_sympy(value)
        return Fraction(int(converted.p), int(converted.q))

    def is_unit(self, value: Scalar) -> bool:
        """Nonzero in k; over F_p the numerator and denominator must be prime to p"""
        x = to_fraction(value)
        if x == 0:
            return False
        return self.kind is not FieldKind.FINITE or (x.numerator * x.denominator) % self.p != 0

    def square_class(self, value: Scalar) -> SquareClass:
        """Canonical representative of the square class of a nonzero scalar"""
        x = to_fraction(value)
        if x == 0:
            raise InvalidArgument("zero has no square class", context="gw.fields")
        if self.kind is FieldKind.RATIONALS:
            return squarefree_part(x.numerator * x.denominator)
        if self.kind is FieldKind.REALS:
            return 1 if x > 0 else -1
        if self.kind is FieldKind.QUADRATICALLY_CLOSED:
            return 1
        residue = (x.numerator * x.denominator) % self.p
        if residue == 0:
            raise InvalidArgument(f"{value} is not a unit mod {self.p}", context="gw.fields")
        return 1 if legendre_symbol(residue, self.p) == 1 else self.nonresidue

    def class_product(self, a: SquareClass, b: SquareClass) -> SquareClass:
        """Product of two canonical representatives, again canonical"""
        if self.kind is FieldKind.RATIONALS:
            g = gcd(a, b)
            return (a // g) * (b // g)
        if self.kind is FieldKind.REALS:
            return a * b
        if self.kind is FieldKind.QUADRATICALLY_CLOSED:
            return 1
        return 1 if a == b else self.nonresidue

    def class_power(self, a: SquareClass, n: int) -> SquareClass:
        return a if n % 2 else 1

    def is_canonical(self, a: SquareClass) -> bool:
        try:
            return a != 0 and self.square_class(a) == a
        except InvalidArgument:
            return False

    def sign(self, a: SquareClass) -> int:
        if not self.real_embeddable:
            raise Unsupported(f"signature is not defined over {self.label}", context="gw.invariants")
        return 1 if a > 0 else -1

    def all_classes(self) -> List[SquareClass]:
        """Every square class, for fields with finitely many"""
        if self.kind is FieldKind.RATIONALS:
            raise Unsupported("Q has infinitely many square classes", context="gw.fields")
        if self.kind is FieldKind.REALS:
            return [1, -1]
        if self.kind is FieldKind.QUADRATICALLY_CLOSED:
            return [1]
        return [1, self.nonresidue]


__all__ = ["BaseField", "FieldKind", "SquareClass", "Scalar", "squarefree_part", "to_fraction"]
