"""
Integer combinatorics shared by the series and closed-form code
"""

from sympy import binomial


def generalized_binomial(n: int, k: int) -> int:
    """C(n, k) for any integer n and k >= 0, e.g. C(-2, 2) = 3; zero for k < 0"""
    if k < 0:
        return 0
    return int(binomial(n, k))


def multiset_count(size: int, n: int) -> int:
    """Number of size-n multisets from `size` objects, C(size + n - 1, n), generalized for negative size"""
    return generalized_binomial(size + n - 1, n)


__all__ = ["generalized_binomial", "multiset_count"]
