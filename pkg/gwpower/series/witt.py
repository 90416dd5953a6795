"""
Big Witt product on 1 + tR[[t]]: prod(1 + r_i t) (.) prod(1 + s_j t) = prod(1 + r_i s_j t)
"""

from functools import lru_cache
from typing import Any, Callable, Dict, List, Sequence, Tuple

from loguru import logger
from sympy import Poly, Rational, expand, symbols

from gwpower.exceptions import FieldMismatch, InternalError, InvalidArgument, NotInvertible, Unsupported
from gwpower.series.ring import RingDescriptor
from gwpower.series.series import GwSeries

UNIVERSAL_MAX_ORDER = 8
METHODS = ("auto", "ghost", "universal")

# (coefficient, exponents of e_1..e_n, exponents of f_1..f_n)
UniversalTerm = Tuple[int, Tuple[int, ...], Tuple[int, ...]]


def power_sums(e: Sequence[Any], zero: Any) -> List[Any]:
    """
    Newton: p_k = (-1)^(k-1) (k e_k - sum_{i<k} (-1)^(i-1) e_(k-i) p_i), with e[0] = 1

    Returns p[0..N] with p[0] unused (zero).
    """
    order = len(e) - 1
    p = [zero]
    for k in range(1, order + 1):
        acc = k * e[k]
        for i in range(1, k):
            term = e[k - i] * p[i]
            acc = acc - term if i % 2 else acc + term
        p.append(acc if k % 2 else -acc)
    return p


def elementary_from_power_sums(p: Sequence[Any], one: Any, zero: Any, divide: Callable[[Any, int], Any]) -> List[Any]:
    """Inverse Newton: e_k = (1/k) sum_{i=1..k} (-1)^(i-1) e_(k-i) p_i"""
    order = len(p) - 1
    e = [one]
    for k in range(1, order + 1):
        acc = zero
        for i in range(1, k + 1):
            term = e[k - i] * p[i]
            acc = acc + term if i % 2 else acc - term
        e.append(divide(acc, k))
    return e


def _ghost_product(f: GwSeries, g: GwSeries, order: int) -> GwSeries:
    ring = f.ring
    zero = ring.zero()
    pf = power_sums(f.coefficients[: order + 1], zero)
    pg = power_sums(g.coefficients[: order + 1], zero)
    product = [zero] + [pf[k] * pg[k] for k in range(1, order + 1)]
    e = elementary_from_power_sums(product, ring.one(), zero, ring.divide_exact)
    return GwSeries(ring, tuple(e))


@lru_cache(maxsize=None)
def universal_polynomials(order: int) -> Tuple[Tuple[UniversalTerm, ...], ...]:
    """
    Integer polynomials P_n(e_1..e_n; f_1..f_n) giving the coefficients of the product, n <= order

    Computed once with sympy from the ghost identities over Q; integrality is asserted.
    """
    if order > UNIVERSAL_MAX_ORDER:
        raise Unsupported(f"universal polynomials are tabulated up to order {UNIVERSAL_MAX_ORDER}", context="witt")
    logger.debug(f"Expanding universal product polynomials to order {order}")
    es = list(symbols(f"e1:{order + 1}")) if order else []
    fs = list(symbols(f"f1:{order + 1}")) if order else []
    pe = power_sums([1] + es, 0)
    pf = power_sums([1] + fs, 0)
    product = [0] + [expand(pe[k] * pf[k]) for k in range(1, order + 1)]
    elementary = elementary_from_power_sums(product, 1, 0, lambda x, k: expand(x * Rational(1, k)))
    tables = []
    for n in range(order + 1):
        if n == 0:
            tables.append(((1, (0,) * order, (0,) * order),))
            continue
        poly = Poly(elementary[n], *es, *fs)
        terms = []
        for monom, coeff in poly.terms():
            if not coeff.is_integer:
                raise InternalError(f"non-integral universal coefficient {coeff}", context="witt")
            terms.append((int(coeff), tuple(monom[:order]), tuple(monom[order:])))
        tables.append(tuple(terms))
    return tuple(tables)


def _monomial(values: Sequence[Any], exponents: Sequence[int], one: Any, powers: Dict[Tuple[int, int], Any]) -> Any:
    acc = one
    for i, k in enumerate(exponents):
        if k:
            key = (i, k)
            if key not in powers:
                value = one
                for _ in range(k):
                    value = value * values[i]
                powers[key] = value
            acc = acc * powers[key]
    return acc


def _universal_product(f: GwSeries, g: GwSeries, order: int) -> GwSeries:
    ring = f.ring
    tables = universal_polynomials(order)
    one, zero = ring.one(), ring.zero()
    ef, eg = f.coefficients[1 : order + 1], g.coefficients[1 : order + 1]
    powers_f: Dict[Tuple[int, int], Any] = {}
    powers_g: Dict[Tuple[int, int], Any] = {}
    out = [one]
    for n in range(1, order + 1):
        acc = zero
        for coeff, a, b in tables[n]:
            term = _monomial(ef, a, one, powers_f) * _monomial(eg, b, one, powers_g)
            acc = acc + coeff * term
        out.append(acc)
    return GwSeries(ring, tuple(out))


def witt_product(f: GwSeries, g: GwSeries, method: str = "auto") -> GwSeries:
    """
    The (.) product of two series in 1 + tR[[t]]

    Args:
        f, g: Unital series over the same ring
        method: "ghost" (power-sum coordinates with exact division on the representation),
            "universal" (tabulated integer polynomials, order <= 8) or "auto"

    Returns:
        Series truncated at the smaller order
    """
    if method not in METHODS:
        raise InvalidArgument(f"method must be one of {METHODS}, got '{method}'", context="witt")
    if f.ring != g.ring:
        raise FieldMismatch(f"series over {f.ring.name} and {g.ring.name}", context="witt")
    if not (f.is_unital() and g.is_unital()):
        raise NotInvertible("witt_product needs series starting with 1", context="witt")
    ring: RingDescriptor = f.ring
    order = min(f.order, g.order)
    if method == "auto":
        if ring.exact_division:
            method = "ghost"
        elif order <= UNIVERSAL_MAX_ORDER:
            method = "universal"
        else:
            raise Unsupported(f"{ring.name} has torsion and order {order} exceeds the universal table", context="witt")
    if method == "ghost":
        if not ring.exact_division:
            raise Unsupported(f"ghost coordinates need exact division, unavailable on {ring.name}", context="witt")
        return _ghost_product(f, g, order)
    return _universal_product(f, g, order)


__all__ = ["UNIVERSAL_MAX_ORDER", "power_sums", "elementary_from_power_sums", "universal_polynomials", "witt_product"]
