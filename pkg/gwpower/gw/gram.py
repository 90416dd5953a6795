"""
Congruence diagonalization of symmetric Gram matrices
"""

from collections import Counter
from typing import List, Sequence

from loguru import logger

from gwpower.exceptions import Degenerate, InvalidArgument
from gwpower.gw.element import GwElement
from gwpower.gw.fields import BaseField, Scalar


def _to_matrix(gram: Sequence[Sequence[Scalar]], field: BaseField) -> List[list]:
    n = len(gram)
    if any(len(row) != n for row in gram):
        raise InvalidArgument("Gram matrix must be square", context="gw.gram")
    matrix = [[field.element(x) for x in row] for row in gram]
    for i in range(n):
        for j in range(i + 1, n):
            if matrix[i][j] != matrix[j][i]:
                raise InvalidArgument(f"Gram matrix is not symmetric at ({i}, {j})", context="gw.gram")
    return matrix


def _add_basis_vector(m: List[list], i: int, j: int):
    """e_i <- e_i + e_j applied to rows and columns"""
    m[i] = [a + b for a, b in zip(m[i], m[j])]
    for row in m:
        row[i] = row[i] + row[j]


def _swap(m: List[list], i: int, j: int):
    m[i], m[j] = m[j], m[i]
    for row in m:
        row[i], row[j] = row[j], row[i]


def diagonal_entries(gram: Sequence[Sequence[Scalar]], field: BaseField) -> list:
    """Diagonal of a congruent diagonal matrix P^T G P, as field scalars (Fractions)"""
    m = _to_matrix(gram, field)
    n = len(m)
    diagonal = []
    for i in range(n):
        if m[i][i] == 0:
            j = next((j for j in range(i + 1, n) if m[j][j] != 0), None)
            if j is not None:
                _swap(m, i, j)
            else:
                j = next((j for j in range(i + 1, n) if m[i][j] != 0), None)
                if j is None:
                    raise Degenerate(f"Gram matrix is singular (row {i} vanishes)", context="gw.gram")
                # new pivot is 2 * m[i][j], nonzero in characteristic != 2
                _add_basis_vector(m, i, j)
        pivot = m[i][i]
        for j in range(i + 1, n):
            if m[j][i] != 0:
                factor = m[j][i] / pivot
                m[j] = [a - factor * b for a, b in zip(m[j], m[i])]
                for row in m:
                    row[j] = row[j] - factor * row[i]
        diagonal.append(field.from_domain(pivot))
    logger.debug(f"Diagonalized {n}x{n} Gram matrix over {field.label}")
    return diagonal


def diagonalize_gram(gram: Sequence[Sequence[Scalar]], field: BaseField) -> GwElement:
    """
    Class in GW(k) of a nondegenerate symmetric bilinear form

    Args:
        gram: Symmetric matrix of integers, Fractions or rational strings
        field: Base field the entries live in

    Returns:
        Sum of <d_i> over a congruent diagonalization
    """
    return GwElement.from_terms(field, Counter(diagonal_entries(gram, field)))


__all__ = ["diagonal_entries", "diagonalize_gram"]
