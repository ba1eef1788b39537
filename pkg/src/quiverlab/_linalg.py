"""
Exact linear algebra on lists of row vectors.

All computations are delegated to ``sympy``'s ``DomainMatrix`` so that ranks
and echelon forms are exact over the rationals and over prime fields.
"""

from collections.abc import Sequence
from typing import Any

from beartype import beartype
from sympy.polys.domains.domain import Domain
from sympy.polys.matrices import DomainMatrix

Vector = list[Any]


@beartype
def to_matrix(
    *,
    rows: Sequence[Sequence[Any]],
    ncols: int,
    domain: Domain,
) -> DomainMatrix:
    """
    Build a ``DomainMatrix`` from row vectors.
    """
    return DomainMatrix(
        [list(row) for row in rows],
        (len(rows), ncols),
        domain,
    )


@beartype
def to_rows(matrix: DomainMatrix) -> list[Vector]:
    """
    The rows of a matrix as lists of domain elements.
    """
    nrows, ncols = matrix.shape
    if nrows == 0:
        return []
    if ncols == 0:
        return [[] for _ in range(nrows)]
    return [list(row) for row in matrix.to_list()]


@beartype
def row_reduce(
    *,
    rows: Sequence[Sequence[Any]],
    ncols: int,
    domain: Domain,
) -> tuple[list[Vector], tuple[int, ...]]:
    """
    The nonzero rows of the reduced row echelon form, with pivot columns.
    """
    if not rows or ncols == 0:
        return [], ()
    matrix = to_matrix(rows=rows, ncols=ncols, domain=domain)
    echelon, pivots = matrix.rref()
    echelon_rows = to_rows(matrix=echelon)
    return echelon_rows[: len(pivots)], tuple(pivots)


@beartype
def rank(
    *,
    rows: Sequence[Sequence[Any]],
    ncols: int,
    domain: Domain,
) -> int:
    """
    The dimension of the span of the rows.
    """
    if not rows or ncols == 0:
        return 0
    return int(to_matrix(rows=rows, ncols=ncols, domain=domain).rank())


@beartype
def nullspace(
    *,
    rows: Sequence[Sequence[Any]],
    ncols: int,
    domain: Domain,
) -> list[Vector]:
    """
    A basis of the vectors ``x`` with ``A x = 0`` where ``A`` has the given
    rows.
    """
    if ncols == 0:
        return []
    if not rows:
        return [
            [domain.one if i == j else domain.zero for j in range(ncols)]
            for i in range(ncols)
        ]
    matrix = to_matrix(rows=rows, ncols=ncols, domain=domain)
    return to_rows(matrix=matrix.nullspace())


@beartype
def reduce_against(
    *,
    vector: Sequence[Any],
    echelon: Sequence[Sequence[Any]],
    pivots: Sequence[int],
) -> Vector:
    """
    Subtract multiples of reduced echelon rows so that ``vector`` vanishes in
    every pivot column.
    """
    result = list(vector)
    for row, pivot in zip(echelon, pivots, strict=True):
        coefficient = result[pivot]
        if coefficient:
            result = [
                entry - coefficient * row_entry
                for entry, row_entry in zip(result, row, strict=True)
            ]
    return result


@beartype
def is_zero_vector(vector: Sequence[Any]) -> bool:
    """
    Whether every entry vanishes.
    """
    return not any(vector)
