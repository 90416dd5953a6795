"""
Truncated power series over a coefficient ring
"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from gwpower.exceptions import FieldMismatch, InvalidArgument, NotInvertible
from gwpower.series.ring import RingDescriptor


@dataclass(frozen=True)
class GwSeries:
    """
    c_0 + c_1 t + ... + c_N t^N mod t^(N+1)

    Operations between series of different orders truncate to the smaller order and never
    read past it.
    """

    ring: RingDescriptor
    coefficients: Tuple[Any, ...]

    # Constructors
    @classmethod
    def from_coefficients(cls, ring: RingDescriptor, coefficients: Iterable, order: Optional[int] = None):
        coeffs = list(coefficients)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise InvalidArgument(f"truncation order must be >= 0, got {order}", context="series")
        coeffs = coeffs[: order + 1] + [ring.zero()] * (order + 1 - len(coeffs))
        return cls(ring, tuple(coeffs))

    @classmethod
    def from_integers(cls, ring: RingDescriptor, values: Iterable[int], order: Optional[int] = None):
        return cls.from_coefficients(ring, [ring.from_int(v) for v in values], order)

    @classmethod
    def one(cls, ring: RingDescriptor, order: int) -> "GwSeries":
        return cls.from_coefficients(ring, [ring.one()], order)

    @classmethod
    def monomial(cls, ring: RingDescriptor, coeff, degree: int, order: int) -> "GwSeries":
        """1 + coeff * t^degree"""
        coeffs = [ring.one()] + [ring.zero()] * order
        if 0 < degree <= order:
            coeffs[degree] = ring.add(coeffs[degree], coeff)
        return cls(ring, tuple(coeffs))

    # Accessors
    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int):
        return self.coefficients[i]

    def __len__(self) -> int:
        return len(self.coefficients)

    def is_unital(self) -> bool:
        return self.ring.equal(self.coefficients[0], self.ring.one())

    # Arithmetic
    def _check(self, other: "GwSeries"):
        if self.ring != other.ring:
            raise FieldMismatch(f"series over {self.ring.name} and {other.ring.name}", context="series")

    def truncate(self, order: int) -> "GwSeries":
        return GwSeries.from_coefficients(self.ring, self.coefficients, order)

    def __add__(self, other: "GwSeries") -> "GwSeries":
        self._check(other)
        n = min(self.order, other.order)
        return GwSeries(self.ring, tuple(self.ring.add(a, b) for a, b in zip(self[: n + 1], other[: n + 1])))

    def __neg__(self) -> "GwSeries":
        return GwSeries(self.ring, tuple(self.ring.neg(a) for a in self.coefficients))

    def __sub__(self, other: "GwSeries") -> "GwSeries":
        return self + (-other)

    def __mul__(self, other: "GwSeries") -> "GwSeries":
        if not isinstance(other, GwSeries):
            return self.scale(other)
        self._check(other)
        ring = self.ring
        n = min(self.order, other.order)
        out = [ring.zero()] * (n + 1)
        for i in range(n + 1):
            a = self.coefficients[i]
            if ring.is_zero(a):
                continue
            for j in range(n + 1 - i):
                b = other.coefficients[j]
                if not ring.is_zero(b):
                    out[i + j] = ring.add(out[i + j], ring.mul(a, b))
        return GwSeries(ring, tuple(out))

    def scale(self, x) -> "GwSeries":
        return GwSeries(self.ring, tuple(self.ring.mul(x, a) for a in self.coefficients))

    def invert(self) -> "GwSeries":
        """Inverse in 1 + tR[[t]]"""
        ring = self.ring
        if not self.is_unital():
            raise NotInvertible(
                f"constant term {ring.render(self.coefficients[0])} is not 1", context="series.invert"
            )
        out = [ring.one()]
        for n in range(1, self.order + 1):
            acc = ring.zero()
            for k in range(1, n + 1):
                c = self.coefficients[k]
                if not ring.is_zero(c):
                    acc = ring.add(acc, ring.mul(c, out[n - k]))
            out.append(ring.neg(acc))
        return GwSeries(ring, tuple(out))

    def __pow__(self, m: int) -> "GwSeries":
        """Integer power by repeated squaring; negative powers invert first"""
        base = self.invert() if m < 0 else self
        m = abs(m)
        result = GwSeries.one(self.ring, self.order)
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def substitute_power(self, n: int, order: Optional[int] = None) -> "GwSeries":
        """f(t^n) truncated to `order` (default: the order of f)"""
        if n < 1:
            raise InvalidArgument(f"substitution t -> t^{n} needs n >= 1", context="series")
        order = self.order if order is None else order
        out = [self.ring.zero()] * (order + 1)
        for i, c in enumerate(self.coefficients):
            if i * n > order:
                break
            out[i * n] = c
        return GwSeries(self.ring, tuple(out))

    def map(self, func: Callable, ring: RingDescriptor) -> "GwSeries":
        """Apply a ring map coefficientwise"""
        return GwSeries(ring, tuple(func(c) for c in self.coefficients))

    # Comparison
    def equals(self, other: "GwSeries") -> bool:
        """Coefficientwise ring equality up to the common order"""
        self._check(other)
        return self.first_difference(other) is None

    def first_difference(self, other: "GwSeries") -> Optional[int]:
        n = min(self.order, other.order)
        for i in range(n + 1):
            a, b = self.coefficients[i], other.coefficients[i]
            if a != b and not self.ring.equal(a, b):
                return i
        return None

    # Rendering
    def render(self, var: str = "t") -> str:
        """Text form `1 + c1*t + c2*t^2 + ...`"""
        ring = self.ring
        parts: List[str] = []
        for i, c in enumerate(self.coefficients):
            if ring.is_zero(c):
                continue
            monomial = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            text = ring.render(c)
            if c == ring.one():
                body = "1" if i == 0 else monomial
            else:
                if " " in text:
                    text = f"({text})"
                body = text if i == 0 else f"{text}*{monomial}"
            parts.append(body)
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> Dict[str, Any]:
        return {"order": self.order, "coefficients": [self.ring.to_json(c) for c in self.coefficients]}


def series_arith(f: GwSeries, g: Optional[GwSeries], op: str) -> GwSeries:
    """Dispatch add / mul / invert on truncated series"""
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "invert":
        return f.invert()
    raise InvalidArgument(f"unknown series operation '{op}'", context="series")


__all__ = ["GwSeries", "series_arith"]
