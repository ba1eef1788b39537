"""
Representations of bound quivers by matrices over the base field.

The map of an arrow ``s -> t`` is a ``d(t) x d(s)`` matrix, so paths act by
matrix products right to left, like the paths themselves.
"""

import itertools
import random
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from enum import Enum, unique
from fractions import Fraction
from typing import Any

from beartype import beartype
from sympy.polys.matrices import DomainMatrix

from ._algebra import AlgebraBasis
from ._errors import RepresentationError
from ._linalg import (
    Vector,
    is_zero_vector,
    nullspace,
    rank,
    reduce_against,
    row_reduce,
    to_matrix,
    to_rows,
)
from ._quiver import BoundQuiver, Path

ISOMORPHISM_SEARCH_LIMIT = 10**6
RANDOM_ISOMORPHISM_TRIALS = 2_000
RANDOM_SEED = 0


@unique
class Ternary(Enum):
    """
    An answer which may be undecided.
    """

    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"


@beartype
@dataclass(frozen=True)
class Representation:
    """
    A vector space per vertex and a matrix per arrow, satisfying the
    relations.

    ``labels`` optionally names the basis vectors of each vertex space by
    paths, as for projective modules.
    """

    bound_quiver: BoundQuiver
    dimensions: Mapping[str, int]
    maps: Mapping[str, DomainMatrix]
    labels: Mapping[str, tuple[Path, ...]] | None = None

    def __post_init__(self) -> None:
        """
        Check the shapes of the matrices and the relations.
        """
        quiver = self.bound_quiver.quiver
        if set(self.dimensions) != set(quiver.vertices):
            message = "Every vertex needs a dimension."
            raise RepresentationError(message)
        if set(self.maps) != {arrow.name for arrow in quiver.arrows}:
            message = "Every arrow needs a matrix."
            raise RepresentationError(message)
        for arrow in quiver.arrows:
            expected = (
                self.dimensions[arrow.target],
                self.dimensions[arrow.source],
            )
            if self.maps[arrow.name].shape != expected:
                message = (
                    f"The matrix of '{arrow.name}' has shape "
                    f"{self.maps[arrow.name].shape}, not {expected}."
                )
                raise RepresentationError(message)
        for relation in self.bound_quiver.relations:
            total = DomainMatrix.zeros(
                (
                    self.dimensions[relation.target],
                    self.dimensions[relation.source],
                ),
                self.domain,
            )
            for coefficient, path in relation.terms:
                scalar = self.bound_quiver.field.scalar(value=coefficient)
                total += self.path_matrix(path=path) * scalar
            if not total.is_zero_matrix:
                message = f"The relation '{relation}' does not vanish."
                raise RepresentationError(message)

    @property
    def domain(self) -> Any:
        """
        The sympy domain of the matrix entries.
        """
        return self.bound_quiver.field.domain

    @property
    def total_dimension(self) -> int:
        """
        The sum of the vertex dimensions.
        """
        return sum(self.dimensions.values())

    def dimension_vector(self) -> tuple[int, ...]:
        """
        The dimensions in vertex order.
        """
        return tuple(
            self.dimensions[vertex] for vertex in self.bound_quiver.vertices
        )

    def path_matrix(self, path: Path) -> DomainMatrix:
        """
        The matrix by which a path acts.
        """
        shape = (self.dimensions[path.target], self.dimensions[path.source])
        quiver = self.bound_quiver.quiver
        stops = [path.source] + [
            quiver.arrow(name=name).target for name in reversed(path.arrows)
        ]
        if any(self.dimensions[stop] == 0 for stop in stops):
            return DomainMatrix.zeros(shape, self.domain)
        result = DomainMatrix.eye(self.dimensions[path.source], self.domain)
        for name in reversed(path.arrows):
            result = self.maps[name] * result
        return result

    def entries(self, arrow: str) -> list[Vector]:
        """
        The rows of the matrix of an arrow.
        """
        return to_rows(matrix=self.maps[arrow])


@beartype
def representation(
    bound_quiver: BoundQuiver,
    dimensions: Mapping[str, int],
    maps: Mapping[str, Sequence[Sequence[Any]]],
    labels: Mapping[str, tuple[Path, ...]] | None = None,
) -> Representation:
    """
    A representation from nested lists of integers, fractions or field
    elements; arrows without a matrix get the zero map.
    """
    base_field = bound_quiver.field
    matrices: dict[str, DomainMatrix] = {}
    for arrow in bound_quiver.quiver.arrows:
        rows = [
            [
                base_field.scalar(value=entry)
                if isinstance(entry, int | Fraction)
                else entry
                for entry in row
            ]
            for row in maps.get(arrow.name, ())
        ]
        shape = (dimensions[arrow.target], dimensions[arrow.source])
        if not rows:
            rows = [[base_field.zero] * shape[1] for _ in range(shape[0])]
        matrices[arrow.name] = to_matrix(
            rows=rows,
            ncols=shape[1],
            domain=base_field.domain,
        )
    return Representation(
        bound_quiver=bound_quiver,
        dimensions=dict(dimensions),
        maps=matrices,
        labels=labels,
    )


@beartype
def simple(bound_quiver: BoundQuiver, vertex: str) -> Representation:
    """
    The simple representation ``S_x``.
    """
    return representation(
        bound_quiver=bound_quiver,
        dimensions={
            other: int(other == vertex) for other in bound_quiver.vertices
        },
        maps={},
    )


@beartype
def direct_sum(
    first: Representation,
    second: Representation,
) -> Representation:
    """
    The direct sum, with the basis of ``first`` before that of ``second``.
    """
    if first.bound_quiver != second.bound_quiver:
        message = "Representations of different bound quivers."
        raise RepresentationError(message)
    dimensions = {
        vertex: first.dimensions[vertex] + second.dimensions[vertex]
        for vertex in first.bound_quiver.vertices
    }
    zero = first.bound_quiver.field.zero
    maps: dict[str, list[Vector]] = {}
    for arrow in first.bound_quiver.quiver.arrows:
        upper = first.entries(arrow=arrow.name)
        lower = second.entries(arrow=arrow.name)
        left_width = first.dimensions[arrow.source]
        right_width = second.dimensions[arrow.source]
        maps[arrow.name] = [
            *(list(row) + [zero] * right_width for row in upper),
            *([zero] * left_width + list(row) for row in lower),
        ]
    return representation(
        bound_quiver=first.bound_quiver,
        dimensions=dimensions,
        maps=maps,
    )


@beartype
def projective(algebra: AlgebraBasis, vertex: str) -> Representation:
    """
    The projective ``P_x = Λ e_x``, with the reduced paths from ``x`` as
    basis and arrows acting by composition.
    """
    bound_quiver = algebra.bound_quiver
    labels = {
        target: algebra.basis(source=vertex, target=target)
        for target in bound_quiver.vertices
    }
    one = algebra.field.one
    maps: dict[str, list[Vector]] = {}
    for arrow in bound_quiver.quiver.arrows:
        step = {
            Path(
                arrows=(arrow.name,),
                source=arrow.source,
                target=arrow.target,
            ): one,
        }
        columns = [
            algebra.coordinates(
                element=algebra.multiply(left=step, right={path: one}),
                source=vertex,
                target=arrow.target,
            )
            for path in labels[arrow.source]
        ]
        maps[arrow.name] = [
            [column[row] for column in columns]
            for row in range(len(labels[arrow.target]))
        ]
    return representation(
        bound_quiver=bound_quiver,
        dimensions={target: len(paths) for target, paths in labels.items()},
        maps=maps,
        labels=labels,
    )


@beartype
def path_vector(
    module: Representation,
    element: Mapping[Path, Any],
) -> dict[str, Vector]:
    """
    The vector of a combination of basis paths of a labelled
    representation.

    Raises:
        RepresentationError: The representation has no labels or a path is
            not a basis label.
    """
    if module.labels is None:
        message = "The representation has no path basis."
        raise RepresentationError(message)
    field = module.bound_quiver.field
    vector = {
        vertex: [field.zero] * module.dimensions[vertex]
        for vertex in module.bound_quiver.vertices
    }
    for path, value in element.items():
        paths = module.labels[path.target]
        if path not in paths:
            message = f"'{path}' is not a basis path."
            raise RepresentationError(message)
        scalar = (
            field.scalar(value=value)
            if isinstance(value, int | Fraction)
            else value
        )
        vector[path.target][paths.index(path)] += scalar
    return vector


@beartype
def _apply(matrix: DomainMatrix, vector: Vector) -> Vector:
    """
    ``matrix . vector``.
    """
    return [
        sum(
            (entry * value for entry, value in zip(row, vector, strict=True)),
            start=matrix.domain.zero,
        )
        for row in to_rows(matrix=matrix)
    ]


@beartype
def submodule_closure(
    module: Representation,
    generators: Mapping[str, Iterable[Vector]],
) -> dict[str, tuple[list[Vector], tuple[int, ...]]]:
    """
    Echelon bases, per vertex, of the submodule generated by some vectors.
    """
    domain = module.domain
    spans: dict[str, tuple[list[Vector], tuple[int, ...]]] = {
        vertex: ([], ()) for vertex in module.bound_quiver.vertices
    }
    queue: list[tuple[str, Vector]] = [
        (vertex, list(vector))
        for vertex, vectors in generators.items()
        for vector in vectors
    ]
    while queue:
        vertex, vector = queue.pop()
        echelon, pivots = spans[vertex]
        residue = reduce_against(vector=vector, echelon=echelon, pivots=pivots)
        if is_zero_vector(vector=residue):
            continue
        spans[vertex] = row_reduce(
            rows=[*echelon, residue],
            ncols=module.dimensions[vertex],
            domain=domain,
        )
        for arrow in module.bound_quiver.quiver.outgoing(vertex=vertex):
            queue.append(
                (
                    arrow.target,
                    _apply(matrix=module.maps[arrow.name], vector=residue),
                ),
            )
    return spans


@beartype
def cyclic_quotient(
    module: Representation,
    generator: Mapping[str, Vector],
) -> Representation:
    """
    The quotient by the submodule generated by one vector, given by its
    component at each vertex.

    The basis vectors of the quotient are the images of the non-pivot basis
    vectors of the submodule's echelon form.
    """
    spans = submodule_closure(
        module=module,
        generators={
            vertex: [vector] for vertex, vector in generator.items()
        },
    )
    kept = {
        vertex: [
            position
            for position in range(module.dimensions[vertex])
            if position not in spans[vertex][1]
        ]
        for vertex in module.bound_quiver.vertices
    }
    domain = module.domain
    maps: dict[str, list[Vector]] = {}
    for arrow in module.bound_quiver.quiver.arrows:
        echelon, pivots = spans[arrow.target]
        columns = []
        for position in kept[arrow.source]:
            unit = [domain.zero] * module.dimensions[arrow.source]
            unit[position] = domain.one
            image = reduce_against(
                vector=_apply(matrix=module.maps[arrow.name], vector=unit),
                echelon=echelon,
                pivots=pivots,
            )
            columns.append([image[index] for index in kept[arrow.target]])
        maps[arrow.name] = [
            [column[row] for column in columns]
            for row in range(len(kept[arrow.target]))
        ]
    labels = None
    if module.labels is not None:
        labels = {
            vertex: tuple(module.labels[vertex][index] for index in positions)
            for vertex, positions in kept.items()
        }
    return representation(
        bound_quiver=module.bound_quiver,
        dimensions={
            vertex: len(positions) for vertex, positions in kept.items()
        },
        maps=maps,
        labels=labels,
    )


@beartype
def _hom_system(
    first: Representation,
    second: Representation,
) -> tuple[list[Vector], dict[str, int], int]:
    """
    The equations ``f_t M(a) - N(a) f_s = 0`` in the entries of the
    ``f_x``, stored row by row after each other.
    """
    if first.bound_quiver != second.bound_quiver:
        message = "Representations of different bound quivers."
        raise RepresentationError(message)
    domain = first.domain
    offsets: dict[str, int] = {}
    size = 0
    for vertex in first.bound_quiver.vertices:
        offsets[vertex] = size
        size += second.dimensions[vertex] * first.dimensions[vertex]

    def variable(vertex: str, row: int, column: int) -> int:
        return offsets[vertex] + row * first.dimensions[vertex] + column

    equations: list[Vector] = []
    for arrow in first.bound_quiver.quiver.arrows:
        source, target = arrow.source, arrow.target
        left = first.entries(arrow=arrow.name)
        right = second.entries(arrow=arrow.name)
        for row in range(second.dimensions[target]):
            for column in range(first.dimensions[source]):
                equation = [domain.zero] * size
                for middle in range(first.dimensions[target]):
                    equation[variable(target, row, middle)] += left[middle][
                        column
                    ]
                for middle in range(second.dimensions[source]):
                    equation[variable(source, middle, column)] -= right[row][
                        middle
                    ]
                equations.append(equation)
    return equations, offsets, size


@beartype
def hom_space(
    first: Representation,
    second: Representation,
) -> list[dict[str, list[Vector]]]:
    """
    A basis of ``Hom(first, second)``, each element a matrix per vertex.
    """
    equations, offsets, size = _hom_system(first=first, second=second)
    kernel = nullspace(rows=equations, ncols=size, domain=first.domain)
    basis = []
    for vector in kernel:
        morphism = {}
        for vertex, offset in offsets.items():
            rows, columns = second.dimensions[vertex], first.dimensions[vertex]
            morphism[vertex] = [
                list(
                    vector[
                        offset + row * columns : offset + (row + 1) * columns
                    ],
                )
                for row in range(rows)
            ]
        basis.append(morphism)
    return basis


@beartype
def hom_dim(first: Representation, second: Representation) -> int:
    """
    ``dim Hom(first, second)``.
    """
    equations, _, size = _hom_system(first=first, second=second)
    return size - rank(rows=equations, ncols=size, domain=first.domain)


@beartype
def is_brick(module: Representation) -> bool:
    """
    Whether the endomorphism algebra is the base field.

    Raises:
        RepresentationError: The representation is zero.
    """
    if module.total_dimension == 0:
        message = "The zero representation is not a brick."
        raise RepresentationError(message)
    return hom_dim(first=module, second=module) == 1


@beartype
def _is_invertible(
    module: Representation,
    morphism: Mapping[str, list[Vector]],
) -> bool:
    """
    Whether every component of a morphism between equal dimensions is
    invertible.
    """
    return all(
        rank(
            rows=morphism[vertex],
            ncols=dimension,
            domain=module.domain,
        )
        == dimension
        for vertex, dimension in module.dimensions.items()
    )


@beartype
def _combine(
    *,
    basis: list[dict[str, list[Vector]]],
    coefficients: Sequence[Any],
    zero: Any,
) -> dict[str, list[Vector]]:
    """
    A linear combination of morphisms.
    """
    combined: dict[str, list[Vector]] = {}
    for vertex, matrix in basis[0].items():
        combined[vertex] = [
            [
                sum(
                    (
                        coefficient * element[vertex][row][column]
                        for coefficient, element in zip(
                            coefficients,
                            basis,
                            strict=True,
                        )
                    ),
                    start=zero,
                )
                for column in range(len(matrix[row]))
            ]
            for row in range(len(matrix))
        ]
    return combined


@beartype
def is_isomorphic(first: Representation, second: Representation) -> Ternary:
    """
    Whether two representations are isomorphic.

    The answer is ``UNKNOWN`` only when the space of homomorphisms is too
    large to search exhaustively and random combinations found no
    isomorphism.
    """
    if first.dimensions != second.dimensions:
        return Ternary.FALSE
    if first.total_dimension == 0:
        return Ternary.TRUE
    basis = hom_space(first=first, second=second)
    if not basis or len(basis) != hom_dim(first=second, second=first):
        return Ternary.FALSE
    if any(
        _is_invertible(module=first, morphism=element) for element in basis
    ):
        return Ternary.TRUE

    base_field = first.bound_quiver.field
    zero = base_field.zero
    if (
        base_field.is_finite
        and base_field.characteristic ** len(basis) <= ISOMORPHISM_SEARCH_LIMIT
    ):
        elements = list(base_field.elements())
        for coefficients in itertools.product(elements, repeat=len(basis)):
            morphism = _combine(
                basis=basis,
                coefficients=coefficients,
                zero=zero,
            )
            if _is_invertible(module=first, morphism=morphism):
                return Ternary.TRUE
        return Ternary.FALSE

    generator = random.Random(x=RANDOM_SEED)  # noqa: S311
    spread = base_field.characteristic or 1_000
    for _ in range(RANDOM_ISOMORPHISM_TRIALS):
        coefficients = [
            base_field.scalar(value=generator.randrange(spread))
            for _ in basis
        ]
        morphism = _combine(basis=basis, coefficients=coefficients, zero=zero)
        if _is_invertible(module=first, morphism=morphism):
            return Ternary.TRUE
    return Ternary.UNKNOWN


@beartype
def vanishing_arrows(module: Representation, vertex: str) -> tuple[str, ...]:
    """
    The arrows into or out of a vertex on which the representation is zero.
    """
    quiver = module.bound_quiver.quiver
    return tuple(
        arrow.name
        for arrow in quiver.arrows
        if vertex in {arrow.source, arrow.target}
        and module.maps[arrow.name].is_zero_matrix
    )
