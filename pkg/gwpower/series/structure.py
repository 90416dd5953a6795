"""
Power structures determined by their b_n on free generators
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, Hashable, List, Optional, Tuple

from loguru import logger

from gwpower.series.ring import IntegerRing, RingDescriptor
from gwpower.series.series import GwSeries

_CACHE_LIMIT = 50_000


class PowerStructure(ABC):
    """
    b_n with (1 - t)^(-r) = sum b_n(r) t^n

    Subclasses decompose ring elements into integer combinations of generators and give the
    values b_0..b_N on one generator. Sums are combined by b_n(r+s) = sum b_i(r) b_(n-i)(s) and
    negative multiplicities by series inversion, the extension forced by f^(r+s) = f^r f^s.
    """

    name: str = "power-structure"

    def __init__(self, ring: RingDescriptor):
        self.ring = ring
        self._generator_cache: Dict[Tuple[Hashable, int], GwSeries] = {}
        self._b_cache: Dict[Tuple[Any, int], GwSeries] = {}

    @abstractmethod
    def decompose(self, r) -> List[Tuple[Hashable, int]]:
        """Generators and integer multiplicities with r = sum m_i g_i"""

    @abstractmethod
    def generator_values(self, generator: Hashable, order: int) -> List[Any]:
        """b_0, ..., b_order evaluated on one generator"""

    def generator_series(self, generator: Hashable, order: int) -> GwSeries:
        key = (generator, order)
        if key not in self._generator_cache:
            logger.debug(f"{self.name}: generator series for {generator} to order {order}")
            self._generator_cache[key] = GwSeries.from_coefficients(
                self.ring, self.generator_values(generator, order), order
            )
        return self._generator_cache[key]

    def b_series(self, r, order: int) -> GwSeries:
        """(1 - t)^(-r) to the given order"""
        key = (r, order)
        cached = self._b_cache.get(key)
        if cached is not None:
            return cached
        result = GwSeries.one(self.ring, order)
        for generator, multiplicity in self.decompose(r):
            result = result * (self.generator_series(generator, order) ** multiplicity)
        if len(self._b_cache) > _CACHE_LIMIT:
            self._b_cache.clear()
        self._b_cache[key] = result
        return result

    def b(self, n: int, r):
        return self.b_series(r, n)[n]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.ring.name})"


class BinomialStructure(PowerStructure):
    """Z with b_n(m) = C(m + n - 1, n)"""

    name = "binomial"

    def __init__(self, ring: Optional[RingDescriptor] = None):
        super().__init__(ring or IntegerRing())

    def decompose(self, r: int) -> List[Tuple[Hashable, int]]:
        return [(1, r)] if r else []

    def generator_values(self, generator: Hashable, order: int) -> List[int]:
        return [1] * (order + 1)


__all__ = ["PowerStructure", "BinomialStructure"]
