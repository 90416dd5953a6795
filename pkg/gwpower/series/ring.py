"""
Coefficient ring descriptors for truncated series
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any

import numpy as np

from gwpower.exceptions import InternalError, Unsupported
from gwpower.gw.element import GwElement
from gwpower.gw.equality import gw_equal
from gwpower.gw.fields import BaseField, FieldKind
from gwpower.utils.sampling import pick, sampling_config, small_nonzero


class RingDescriptor(ABC):
    """
    Ring operations and decidable equality for series coefficients

    Elements must support +, -, * among themselves and * with int. `exact_division` marks rings
    whose stored representation is a free Z-module, so integer division can be carried out
    exactly on the representation (ghost coordinates).
    """

    name: str = "ring"
    exact_division: bool = False
    torsion_free: bool = False

    @abstractmethod
    def zero(self) -> Any: ...

    @abstractmethod
    def one(self) -> Any: ...

    @abstractmethod
    def from_int(self, n: int) -> Any: ...

    @abstractmethod
    def equal(self, x, y) -> bool: ...

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def is_zero(self, x) -> bool:
        """Syntactic zero test used to skip work; never used for deciding properties"""
        return x == self.zero()

    def divide_exact(self, x, n: int):
        raise Unsupported(f"{self.name} has no exact integer division", context="series.ring")

    def render(self, x) -> str:
        return str(x)

    def to_json(self, x) -> Any:
        return self.render(x)

    def random_element(self, rng: np.random.Generator):
        raise Unsupported(f"{self.name} has no sampler", context="series.ring")


@dataclass(frozen=True)
class IntegerRing(RingDescriptor):
    name: str = "Z"
    exact_division: bool = True
    torsion_free: bool = True

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        return n

    def equal(self, x: int, y: int) -> bool:
        return x == y

    def divide_exact(self, x: int, n: int) -> int:
        if x % n:
            raise InternalError(f"{x} is not divisible by {n}", context="series.ring")
        return x // n

    def to_json(self, x: int) -> int:
        return x

    def random_element(self, rng: np.random.Generator) -> int:
        bound = sampling_config()["max_integer"]
        return int(rng.integers(-bound, bound + 1))


@dataclass(frozen=True)
class GwRing(RingDescriptor):
    """GW(k) with equality decided by gw_equal"""

    field: BaseField
    exact_division: bool = True

    @property
    def name(self) -> str:
        return f"GW({self.field.label})"

    @property
    def torsion_free(self) -> bool:
        return self.field.kind in (FieldKind.REALS, FieldKind.QUADRATICALLY_CLOSED)

    def zero(self) -> GwElement:
        return GwElement.zero(self.field)

    def one(self) -> GwElement:
        return GwElement.one(self.field)

    def from_int(self, n: int) -> GwElement:
        return GwElement.from_int(self.field, n)

    def equal(self, x: GwElement, y: GwElement) -> bool:
        return gw_equal(x, y)

    def is_zero(self, x: GwElement) -> bool:
        return x.is_zero()

    def divide_exact(self, x: GwElement, n: int) -> GwElement:
        return x.divide_exact(n)

    def render(self, x: GwElement) -> str:
        return x.render()

    def to_json(self, x: GwElement) -> list:
        return x.to_json()

    def class_pool(self) -> list:
        pools = sampling_config()["class_pools"]
        key = "Fp" if self.field.kind is FieldKind.FINITE else self.field.kind.value
        pool = pools[key]
        if self.field.kind is FieldKind.FINITE:
            pool = [a for a in pool if a % self.field.p]
        return pool

    def random_element(self, rng: np.random.Generator) -> GwElement:
        config = sampling_config()
        pool = self.class_pool()
        count = int(rng.integers(1, config["max_terms"] + 1))
        terms = [(pick(rng, pool), small_nonzero(rng, config["max_coefficient"])) for _ in range(count)]
        return GwElement.from_terms(self.field, terms)

    def random_effective(self, rng: np.random.Generator, rank: int) -> GwElement:
        pool = self.class_pool()
        return GwElement.from_terms(self.field, [(pick(rng, pool), 1) for _ in range(rank)])


__all__ = ["RingDescriptor", "IntegerRing", "GwRing"]
