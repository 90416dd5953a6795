"""
Hilbert symbols over Q at the real place and at primes
"""

from typing import Iterable, List, Set, Union

from sympy import isprime, legendre_symbol, multiplicity, primefactors

from gwpower.exceptions import InvalidArgument
from gwpower.gw.fields import Scalar, to_fraction

INFINITY = "inf"
Place = Union[int, str]


def _as_integer(value: Scalar) -> int:
    """An integer in the same square class: n/d ~ n*d"""
    x = to_fraction(value)
    if x == 0:
        raise InvalidArgument("Hilbert symbol of zero", context="gw.hilbert")
    return x.numerator * x.denominator


def _split(n: int, p: int):
    k = multiplicity(p, abs(n))
    return int(k), n // p**k


def _epsilon(u: int) -> int:
    return ((u - 1) // 2) % 2


def _omega(u: int) -> int:
    return ((u * u - 1) // 8) % 2


def hilbert_symbol(a: Scalar, b: Scalar, place: Place) -> int:
    """
    (a, b)_v: 1 if z^2 = a x^2 + b y^2 has a nontrivial solution over Q_v, else -1

    Args:
        a, b: Nonzero rationals
        place: INFINITY or a prime p

    Returns:
        +1 or -1
    """
    a, b = _as_integer(a), _as_integer(b)
    if place == INFINITY:
        return -1 if a < 0 and b < 0 else 1
    p = int(place)
    if not isprime(p):
        raise InvalidArgument(f"place must be 'inf' or a prime, got {place}", context="gw.hilbert")

    alpha, u = _split(a, p)
    beta, v = _split(b, p)
    if p == 2:
        exponent = _epsilon(u) * _epsilon(v) + alpha * _omega(v) + beta * _omega(u)
        return -1 if exponent % 2 else 1

    result = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        result *= legendre_symbol(u % p, p)
    if alpha % 2:
        result *= legendre_symbol(v % p, p)
    return result


def relevant_places(values: Iterable[Scalar]) -> List[Place]:
    """Places where a symbol of the given rationals can be nontrivial: inf, 2 and primes dividing them"""
    primes: Set[int] = {2}
    for value in values:
        x = to_fraction(value)
        primes.update(primefactors(x.numerator))
        primes.update(primefactors(x.denominator))
    return [INFINITY] + sorted(primes)


def product_formula(a: Scalar, b: Scalar) -> int:
    """Product of (a, b)_v over all places; equals 1 for every a, b"""
    result = 1
    for place in relevant_places([a, b]):
        result *= hilbert_symbol(a, b, place)
    return result


__all__ = ["INFINITY", "Place", "hilbert_symbol", "relevant_places", "product_formula"]
