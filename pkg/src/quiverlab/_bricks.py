"""
Families of bricks and the brick census over finite fields.
"""

import itertools
from collections.abc import Callable, Iterator, Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from beartype import beartype

from ._algebra import (
    AlgebraBasis,
    Element,
    build_algebra,
    radical_layers,
)
from ._errors import (
    BudgetExceededError,
    PreconditionError,
    RepresentationError,
    VerificationError,
)
from ._fields import Field
from ._linalg import Vector, is_zero_vector, reduce_against, row_reduce
from ._quiver import BoundQuiver, Path, Relation
from ._representations import (
    Representation,
    Ternary,
    cyclic_quotient,
    is_brick,
    is_isomorphic,
    path_vector,
    projective,
    representation,
)

DEFAULT_CENSUS_BUDGET = 10**7
CENSUS_BLOCKS_PER_WORKER = 4

Letter = tuple[str, int]


@beartype
@dataclass(frozen=True)
class BrickFamily:
    """
    Bricks ``M_λ``, one per parameter, sharing a dimension vector.

    ``construction`` is ``bongartz`` or ``band`` and ``details`` records how
    the family was built. Each member has been checked to be a brick;
    ``pairwise_non_isomorphic`` is ``TRUE`` when every pair was shown to be
    non-isomorphic and ``UNKNOWN`` when some pair could not be decided.
    """

    bound_quiver: BoundQuiver
    construction: str
    details: Mapping[str, str]
    parameters: tuple[Any, ...]
    members: tuple[Representation, ...]
    pairwise_non_isomorphic: Ternary

    @property
    def dimension_vector(self) -> tuple[int, ...]:
        """
        The dimension vector shared by the members, in vertex order.
        """
        return self.members[0].dimension_vector() if self.members else ()


@beartype
def _format(element: Mapping[Path, Any], algebra: AlgebraBasis) -> str:
    """
    A normal form written like the right-hand side of a relation.
    """
    parts: list[str] = []
    for path in sorted(element, key=lambda path: path.sort_key):
        coefficient = algebra.field.to_fraction(element=element[path])
        magnitude = abs(coefficient)
        written = str(path) if magnitude == 1 else f"{magnitude}*{path}"
        sign = "-" if coefficient < 0 else "+"
        if parts:
            parts.append(f"{sign} {written}")
        else:
            parts.append(f"-{written}" if coefficient < 0 else written)
    return " ".join(parts) or "0"


@beartype
def _scalars(
    *,
    base_field: Field,
    parameters: Sequence[Any],
) -> tuple[Any, ...]:
    """
    Parameters as field elements.
    """
    return tuple(
        base_field.scalar(value=value)
        if isinstance(value, int | Fraction)
        else value
        for value in parameters
    )


@beartype
def _verify(
    *,
    members: Sequence[Representation],
) -> Ternary:
    """
    Check that the members are bricks of one dimension vector and compare
    them pairwise.

    Raises:
        VerificationError: A member is not a brick, the dimension vectors
            differ or two members are isomorphic.
    """
    for index, member in enumerate(members):
        if not is_brick(module=member):
            message = f"Member {index} of the family is not a brick."
            raise VerificationError(message)
    if len({member.dimension_vector() for member in members}) > 1:
        message = "The members of the family have different dimensions."
        raise VerificationError(message)
    verdict = Ternary.TRUE
    for (first_index, first), (second_index, second) in itertools.combinations(
        enumerate(members),
        2,
    ):
        answer = is_isomorphic(first=first, second=second)
        if answer is Ternary.TRUE:
            message = (
                f"Members {first_index} and {second_index} of the family are "
                "isomorphic."
            )
            raise VerificationError(message)
        if answer is Ternary.UNKNOWN:
            verdict = Ternary.UNKNOWN
    return verdict


@beartype
def _independent_pair(
    *,
    layer: list[Vector],
    deeper: list[Vector],
    algebra: AlgebraBasis,
    size: int,
) -> tuple[Vector, Vector]:
    """
    The first two echelon rows of a layer whose classes modulo the next
    layer are independent.
    """
    echelon, pivots = row_reduce(
        rows=deeper,
        ncols=size,
        domain=algebra.field.domain,
    )
    chosen: list[Vector] = []
    for row in layer:
        residue = reduce_against(vector=row, echelon=echelon, pivots=pivots)
        if is_zero_vector(vector=residue):
            continue
        chosen.append(row)
        echelon, pivots = row_reduce(
            rows=[*echelon, residue],
            ncols=size,
            domain=algebra.field.domain,
        )
        if len(chosen) == 2:  # noqa: PLR2004
            return chosen[0], chosen[1]
    message = "The layer has no two independent elements."
    raise PreconditionError(message)


@beartype
def _as_relation(element: Element, algebra: AlgebraBasis) -> Relation | None:
    """
    A nonzero normal form as a relation, ``None`` for zero.
    """
    if not element:
        return None
    return Relation(
        terms=tuple(
            (algebra.field.to_fraction(element=value), path)
            for path, value in element.items()
        ),
    )


@beartype
def bongartz_family(
    bound_quiver: BoundQuiver,
    algebra: AlgebraBasis,
    vertex: str,
    target: str,
    parameters: Sequence[Any],
    *,
    layer: int | None = None,
) -> BrickFamily:
    """
    The bricks ``Λ'e / <u - λv>`` from a layer of ``e_f Λ e_e`` of
    dimension at least two.

    ``u`` and ``v`` are the first two echelon basis elements of the layer
    which stay independent modulo the next layer. ``Λ'`` is the quotient
    by the next layer and by ``Nu``, ``uN``, ``Nv`` and ``vN``, where ``N``
    is the radical.

    Raises:
        PreconditionError: ``e Λ e`` is not the base field or no layer has
            dimension at least two.
        VerificationError: The construction did not give pairwise
            non-isomorphic bricks.
    """
    e, f = vertex, target
    local = algebra.pair_dimension(source=e, target=e)
    if local != 1:
        message = f"e_{e} Λ e_{e} has dimension {local}, not 1."
        raise PreconditionError(message)
    layers = radical_layers(algebra=algebra, f=f, e=e)
    dimensions = [
        len(upper) - len(lower)
        for upper, lower in zip(layers, layers[1:], strict=False)
    ]
    if layer is None:
        layer = next(
            (index for index, size in enumerate(dimensions) if size > 1),
            None,
        )
    if (
        layer is None
        or layer >= len(dimensions)
        or dimensions[layer] < 2  # noqa: PLR2004
    ):
        message = (
            f"No layer of e_{f} Λ e_{e} has dimension at least two "
            f"(layers {dimensions})."
        )
        raise PreconditionError(message)

    size = algebra.pair_dimension(source=e, target=f)
    u_vector, v_vector = _independent_pair(
        layer=layers[layer],
        deeper=layers[layer + 1],
        algebra=algebra,
        size=size,
    )
    u = algebra.element(vector=u_vector, source=e, target=f)
    v = algebra.element(vector=v_vector, source=e, target=f)

    quiver = bound_quiver.quiver
    one = algebra.field.one
    extra: list[Element] = [
        algebra.element(vector=row, source=e, target=f)
        for row in layers[layer + 1]
    ]
    for generator in (u, v):
        for arrow in quiver.outgoing(vertex=f):
            step = {quiver.path(arrows=[arrow.name]): one}
            extra.append(algebra.multiply(left=step, right=generator))
        for arrow in quiver.incoming(vertex=e):
            step = {quiver.path(arrows=[arrow.name]): one}
            extra.append(algebra.multiply(left=generator, right=step))
    quotient = BoundQuiver(
        quiver=quiver,
        relations=(
            *bound_quiver.relations,
            *(
                relation
                for element in extra
                if (relation := _as_relation(element=element, algebra=algebra))
                is not None
            ),
        ),
        field=bound_quiver.field,
    )
    quotient_algebra = build_algebra(
        bound_quiver=quotient,
        max_bound=max(algebra.nilpotency_bound, 1),
    )
    module = projective(algebra=quotient_algebra, vertex=e)
    u_prime = path_vector(
        module=module,
        element=quotient_algebra.reduce(element=u),
    )[f]
    v_prime = path_vector(
        module=module,
        element=quotient_algebra.reduce(element=v),
    )[f]

    members = []
    for scalar in _scalars(base_field=algebra.field, parameters=parameters):
        quotient_module = cyclic_quotient(
            module=module,
            generator={
                f: [
                    first - scalar * second
                    for first, second in zip(u_prime, v_prime, strict=True)
                ],
            },
        )
        members.append(
            representation(
                bound_quiver=bound_quiver,
                dimensions=quotient_module.dimensions,
                maps={
                    name: quotient_module.entries(arrow=name)
                    for name in quotient_module.maps
                },
            ),
        )
    verdict = _verify(members=members)
    return BrickFamily(
        bound_quiver=bound_quiver,
        construction="bongartz",
        details={
            "vertex": e,
            "target": f,
            "layer": str(layer),
            "u": _format(element=u, algebra=algebra),
            "v": _format(element=v, algebra=algebra),
        },
        parameters=_scalars(base_field=algebra.field, parameters=parameters),
        members=tuple(members),
        pairwise_non_isomorphic=verdict,
    )


@beartype
def _walk_vertices(
    bound_quiver: BoundQuiver,
    walk: Sequence[Letter],
) -> list[str]:
    """
    The vertices visited by a closed walk, one per letter.

    Raises:
        PreconditionError: The letters do not form a closed walk.
    """
    quiver = bound_quiver.quiver
    if not walk:
        message = "A band needs at least one letter."
        raise PreconditionError(message)
    stops: list[str] = []
    position: str | None = None
    for name, direction in walk:
        arrow = quiver.arrow(name=name)
        start, end = (
            (arrow.source, arrow.target)
            if direction > 0
            else (arrow.target, arrow.source)
        )
        if position is not None and start != position:
            message = f"The letter '{name}' does not continue the walk."
            raise PreconditionError(message)
        stops.append(start)
        position = end
    if position != stops[0]:
        message = "The walk is not closed."
        raise PreconditionError(message)
    return stops


@beartype
def band_family(
    bound_quiver: BoundQuiver,
    walk: Sequence[Letter],
    parameters: Sequence[Any],
) -> BrickFamily:
    """
    Band representations of a closed walk, one basis vector per position,
    with the last letter scaled by a nonzero parameter.

    A letter ``(arrow, 1)`` follows the arrow and ``(arrow, -1)`` goes
    against it.

    Raises:
        PreconditionError: The walk is not closed, a parameter is zero or
            the walk does not give representations.
        VerificationError: The members are not pairwise non-isomorphic
            bricks.
    """
    base_field = bound_quiver.field
    stops = _walk_vertices(bound_quiver=bound_quiver, walk=walk)
    counts = dict.fromkeys(bound_quiver.vertices, 0)
    positions: list[int] = []
    for stop in stops:
        positions.append(counts[stop])
        counts[stop] += 1

    scalars = _scalars(base_field=base_field, parameters=parameters)
    members = []
    for scalar in scalars:
        if not scalar:
            message = "Band parameters must be nonzero."
            raise PreconditionError(message)
        maps: dict[str, list[Vector]] = {
            arrow.name: [
                [base_field.zero] * counts[arrow.source]
                for _ in range(counts[arrow.target])
            ]
            for arrow in bound_quiver.quiver.arrows
        }
        for index, (name, direction) in enumerate(walk):
            following = (index + 1) % len(walk)
            weight = scalar if index == len(walk) - 1 else base_field.one
            if direction > 0:
                maps[name][positions[following]][positions[index]] += weight
            else:
                maps[name][positions[index]][positions[following]] += weight
        try:
            members.append(
                representation(
                    bound_quiver=bound_quiver,
                    dimensions=counts,
                    maps=maps,
                ),
            )
        except RepresentationError as exc:
            message = f"The walk does not give a representation: {exc}"
            raise PreconditionError(message) from exc
    verdict = _verify(members=members)
    return BrickFamily(
        bound_quiver=bound_quiver,
        construction="band",
        details={
            "walk": " ".join(
                name if direction > 0 else f"{name}^-1"
                for name, direction in walk
            ),
        },
        parameters=scalars,
        members=tuple(members),
        pairwise_non_isomorphic=verdict,
    )


@beartype
def _shapes(
    *,
    bound_quiver: BoundQuiver,
    dimensions: Mapping[str, int],
) -> list[tuple[str, int, int]]:
    """
    The name, rows and columns of each matrix, arrows in id order.
    """
    arrows = sorted(bound_quiver.quiver.arrows, key=lambda arrow: arrow.name)
    return [
        (arrow.name, dimensions[arrow.target], dimensions[arrow.source])
        for arrow in arrows
    ]


@beartype
def _maps(
    *,
    shapes: Sequence[tuple[str, int, int]],
    entries: Sequence[Any],
) -> dict[str, list[Vector]]:
    """
    Cut a flat tuple of entries into matrices, row by row.
    """
    maps: dict[str, list[Vector]] = {}
    offset = 0
    for name, rows, columns in shapes:
        maps[name] = [
            list(entries[offset + row * columns :][:columns])
            for row in range(rows)
        ]
        offset += rows * columns
    return maps


@beartype
def _candidates(
    *,
    bound_quiver: BoundQuiver,
    dimensions: Mapping[str, int],
    start: int = 0,
    stop: int | None = None,
) -> Iterator[dict[str, list[Vector]]]:
    """
    Every choice of matrices, arrows in id order and entries row by row, in
    lexicographic order of the entries, from position ``start`` up to
    ``stop``.
    """
    shapes = _shapes(bound_quiver=bound_quiver, dimensions=dimensions)
    entry_count = sum(rows * columns for _, rows, columns in shapes)
    elements = list(bound_quiver.field.elements())
    for entries in itertools.islice(
        itertools.product(elements, repeat=entry_count),
        start,
        stop,
    ):
        yield _maps(shapes=shapes, entries=entries)


@beartype
def _candidate_at(
    *,
    bound_quiver: BoundQuiver,
    dimensions: Mapping[str, int],
    index: int,
) -> dict[str, list[Vector]]:
    """
    The candidate at a position of the lexicographic order.
    """
    shapes = _shapes(bound_quiver=bound_quiver, dimensions=dimensions)
    entry_count = sum(rows * columns for _, rows, columns in shapes)
    elements = list(bound_quiver.field.elements())
    digits: list[Any] = []
    for _ in range(entry_count):
        index, digit = divmod(index, len(elements))
        digits.append(elements[digit])
    return _maps(shapes=shapes, entries=digits[::-1])


@beartype
def census_size(
    bound_quiver: BoundQuiver,
    dimensions: Mapping[str, int],
) -> int:
    """
    The number of matrix tuples the census examines.
    """
    entries = sum(
        dimensions[arrow.target] * dimensions[arrow.source]
        for arrow in bound_quiver.quiver.arrows
    )
    return bound_quiver.field.characteristic**entries


@beartype
def census_blocks(size: int, blocks: int) -> list[tuple[int, int]]:
    """
    Split positions ``0, ..., size - 1`` into at most ``blocks`` disjoint
    consecutive ranges ``(start, stop)`` of nearly equal length.

    Raises:
        ValueError: ``blocks`` is not positive.
    """
    if blocks < 1:
        message = "The number of blocks must be positive."
        raise ValueError(message)
    count = min(blocks, size)
    return [
        (size * block // count, size * (block + 1) // count)
        for block in range(count)
    ]


@beartype
def _keep_if_new(
    *,
    module: Representation,
    known: list[Representation],
) -> bool:
    """
    Append ``module`` to ``known`` when it is a brick isomorphic to none of
    them.
    """
    if not is_brick(module=module):
        return False
    if any(
        is_isomorphic(first=module, second=other) is Ternary.TRUE
        for other in known
    ):
        return False
    known.append(module)
    return True


@beartype
def _block_bricks(
    *,
    bound_quiver: BoundQuiver,
    dimensions: Mapping[str, int],
    start: int,
    stop: int,
) -> list[int]:
    """
    The positions in ``start, ..., stop - 1`` of the first brick of each
    isomorphism class met in that range.
    """
    known: list[Representation] = []
    positions: list[int] = []
    for position, maps in enumerate(
        _candidates(
            bound_quiver=bound_quiver,
            dimensions=dimensions,
            start=start,
            stop=stop,
        ),
        start=start,
    ):
        try:
            module = representation(
                bound_quiver=bound_quiver,
                dimensions=dimensions,
                maps=maps,
            )
        except RepresentationError:
            continue
        if _keep_if_new(module=module, known=known):
            positions.append(position)
    return positions


@beartype
def enumerate_bricks(
    bound_quiver: BoundQuiver,
    dimensions: Mapping[str, int],
    budget: int = DEFAULT_CENSUS_BUDGET,
    *,
    blocks: int = 1,
    workers: int | None = None,
    on_block: Callable[[int, int], None] | None = None,
) -> list[Representation]:
    """
    One brick per isomorphism class of the given dimension vector, the
    first found in lexicographic order of the matrix entries.

    The candidates are split into ``blocks`` consecutive ranges. With
    ``workers``, the ranges are searched in that many processes. Blocks are
    merged in order, so the result does not depend on either number.
    ``on_block`` is called with each range as it is merged.

    Raises:
        PreconditionError: The field is not finite.
        BudgetExceededError: More than ``budget`` matrix tuples would be
            examined.
    """
    if not bound_quiver.field.is_finite:
        message = "The census needs a finite field."
        raise PreconditionError(message)
    size = census_size(bound_quiver=bound_quiver, dimensions=dimensions)
    if size > budget:
        message = (
            f"The census would examine {size} matrix tuples, more than the "
            f"budget of {budget}."
        )
        raise BudgetExceededError(message)
    if sum(dimensions.values()) == 0:
        return []
    ranges = census_blocks(size=size, blocks=blocks)
    dimensions = dict(dimensions)
    if workers is None:
        found = [
            _block_bricks(
                bound_quiver=bound_quiver,
                dimensions=dimensions,
                start=start,
                stop=stop,
            )
            for start, stop in ranges
        ]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [
                executor.submit(
                    _block_bricks,
                    bound_quiver=bound_quiver,
                    dimensions=dimensions,
                    start=start,
                    stop=stop,
                )
                for start, stop in ranges
            ]
            found = [future.result() for future in futures]

    bricks: list[Representation] = []
    for (start, stop), positions in zip(ranges, found, strict=True):
        for position in positions:
            module = representation(
                bound_quiver=bound_quiver,
                dimensions=dimensions,
                maps=_candidate_at(
                    bound_quiver=bound_quiver,
                    dimensions=dimensions,
                    index=position,
                ),
            )
            _keep_if_new(module=module, known=bricks)
        if on_block is not None:
            on_block(start, stop)
    return bricks


@beartype
def dimension_vectors(
    bound_quiver: BoundQuiver,
    max_total: int,
) -> list[tuple[int, ...]]:
    """
    The nonzero dimension vectors, in vertex order, of total at most
    ``max_total``, by total and then lexicographically.
    """
    count = len(bound_quiver.vertices)
    vectors = [
        vector
        for vector in itertools.product(range(max_total + 1), repeat=count)
        if 0 < sum(vector) <= max_total
    ]
    return sorted(vectors, key=lambda vector: (sum(vector), vector))


@beartype
def census_up_to(
    bound_quiver: BoundQuiver,
    max_total: int,
    budget: int = DEFAULT_CENSUS_BUDGET,
    on_vector: Callable[[tuple[int, ...]], None] | None = None,
    *,
    blocks: int = 1,
    workers: int | None = None,
    on_block: Callable[[int, int], None] | None = None,
) -> dict[tuple[int, ...], list[Representation]]:
    """
    The census for every dimension vector of total at most ``max_total``
    which has a brick, each vector within its own budget.

    ``blocks``, ``workers`` and ``on_block`` are passed on to
    ``enumerate_bricks``.
    """
    result: dict[tuple[int, ...], list[Representation]] = {}
    for vector in dimension_vectors(
        bound_quiver=bound_quiver,
        max_total=max_total,
    ):
        if on_vector is not None:
            on_vector(vector)
        bricks = enumerate_bricks(
            bound_quiver=bound_quiver,
            dimensions=dict(zip(bound_quiver.vertices, vector, strict=True)),
            budget=budget,
            blocks=blocks,
            workers=workers,
            on_block=on_block,
        )
        if bricks:
            result[vector] = bricks
    return result
