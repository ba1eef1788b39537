"""
Isomorphisms of bound quivers.
"""

import itertools
from collections import Counter, defaultdict
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import networkx as nx
from beartype import beartype

from ._algebra import DEFAULT_MAX_BOUND, AlgebraBasis, build_algebra
from ._errors import NotAdmissibleError
from ._linalg import nullspace
from ._quiver import Arrow, BoundQuiver, Path, Relation


@beartype
@dataclass(frozen=True)
class BoundQuiverIsomorphism:
    """
    Where each vertex and each arrow goes.
    """

    vertices: Mapping[str, str]
    arrows: Mapping[str, str]


@beartype
def _arrow_maps(
    *,
    bound_quiver: BoundQuiver,
    other: BoundQuiver,
    vertices: Mapping[str, str],
) -> Iterator[dict[str, str]]:
    """
    Every bijection of arrows compatible with a vertex bijection.
    """
    groups: dict[tuple[str, str], list[Arrow]] = defaultdict(list)
    for arrow in bound_quiver.quiver.arrows:
        groups[(arrow.source, arrow.target)].append(arrow)
    targets: dict[tuple[str, str], list[Arrow]] = defaultdict(list)
    for arrow in other.quiver.arrows:
        targets[(arrow.source, arrow.target)].append(arrow)
    keys = sorted(groups)
    choices = [
        itertools.permutations(
            targets[(vertices[source], vertices[target])],
        )
        for source, target in keys
    ]
    for selection in itertools.product(*choices):
        yield {
            arrow.name: image.name
            for key, images in zip(keys, selection, strict=True)
            for arrow, image in zip(groups[key], images, strict=True)
        }


@beartype
def _transport(
    *,
    relation: Relation,
    other: BoundQuiver,
    arrows: Mapping[str, str],
) -> list[tuple[Fraction, Path]]:
    """
    The terms of a relation carried along an arrow map.
    """
    return [
        (
            coefficient,
            other.quiver.path(arrows=[arrows[name] for name in path.arrows]),
        )
        for coefficient, path in relation.terms
    ]


@beartype
def _power(*, value: Any, exponent: int, one: Any) -> Any:
    """
    ``value ** exponent`` in a field, for any integer exponent.
    """
    result = one
    for _ in range(abs(exponent)):
        result *= value
    if exponent < 0:
        return one / result
    return result


@beartype
def _ratio_equations(
    *,
    relation: Relation,
    terms: list[tuple[Fraction, Path]],
    algebra: AlgebraBasis,
) -> list[tuple[dict[str, int], Any]] | None:
    """
    Equations ``prod t_a ** e_a = value`` on scalars ``t_a``, one per arrow
    of the relation's quiver, under which the relation with each arrow
    ``a`` scaled by ``t_a`` is carried into the ideal.

    ``None`` means that no scaling is found.
    """
    if all(not algebra.reduce_path(path=path) for _, path in terms):
        return []
    source, target = terms[0][1].source, terms[0][1].target
    columns = [
        algebra.coordinates(
            element=algebra.reduce_path(path=path),
            source=source,
            target=target,
        )
        for _, path in terms
    ]
    rows = [list(row) for row in zip(*columns, strict=True)]
    kernel = nullspace(
        rows=rows,
        ncols=len(terms),
        domain=algebra.field.domain,
    )
    if len(kernel) != 1 or not all(kernel[0]):
        return None
    (vector,) = kernel
    base_field = algebra.field
    coefficients = [
        base_field.scalar(value=coefficient)
        for coefficient, _ in relation.terms
    ]
    first = Counter(relation.terms[0][1].arrows)
    equations: list[tuple[dict[str, int], Any]] = []
    for index in range(1, len(terms)):
        counts = Counter(relation.terms[index][1].arrows)
        exponents = {
            name: counts[name] - first[name]
            for name in sorted(set(counts) | set(first))
            if counts[name] != first[name]
        }
        value = (vector[index] * coefficients[0]) / (
            vector[0] * coefficients[index]
        )
        equations.append((exponents, value))
    return equations


@beartype
def _solve_scalars(
    *,
    equations: list[tuple[dict[str, int], Any]],
    one: Any,
) -> dict[str, Any] | None:
    """
    Arrow scalars satisfying monomial equations, found by elimination on
    arrows with exponent one or minus one.

    Arrows left free are set to one. ``None`` means that the equations are
    inconsistent or need a root which is not attempted.
    """
    scalars: dict[str, Any] = {}
    pending = list(equations)
    while pending:
        progress = False
        for equation in tuple(pending):
            exponents, value = equation
            remaining = value
            unknown: dict[str, int] = {}
            for name, exponent in exponents.items():
                if name in scalars:
                    remaining /= _power(
                        value=scalars[name],
                        exponent=exponent,
                        one=one,
                    )
                else:
                    unknown[name] = exponent
            if len(unknown) > 1:
                continue
            pending.remove(equation)
            progress = True
            if not unknown:
                if remaining != one:
                    return None
                continue
            ((name, exponent),) = unknown.items()
            if exponent == 1:
                scalars[name] = remaining
            elif exponent == -1:
                scalars[name] = one / remaining
            elif remaining == one:
                scalars[name] = one
            else:
                return None
        if pending and not progress:
            exponents, _ = pending[0]
            unknown_names = [name for name in exponents if name not in scalars]
            kept = next(
                (name for name in unknown_names if abs(exponents[name]) == 1),
                unknown_names[-1],
            )
            for name in unknown_names:
                if name != kept:
                    scalars[name] = one
    return scalars


@beartype
def _accepts(
    *,
    bound_quiver: BoundQuiver,
    other: BoundQuiver,
    arrows: Mapping[str, str],
    up_to_scalars: bool,
    other_algebra: AlgebraBasis,
) -> bool:
    """
    Whether an arrow map, with arrows rescaled when ``up_to_scalars``,
    carries every relation of ``bound_quiver`` into the ideal of ``other``.

    When both algebras have the same dimension, the two ideals then agree.
    """
    base_field = other.field
    transported = [
        _transport(relation=relation, other=other, arrows=arrows)
        for relation in bound_quiver.relations
    ]
    scalars: dict[str, Any] = {}
    if up_to_scalars:
        equations: list[tuple[dict[str, int], Any]] = []
        for relation, terms in zip(
            bound_quiver.relations,
            transported,
            strict=True,
        ):
            found = _ratio_equations(
                relation=relation,
                terms=terms,
                algebra=other_algebra,
            )
            if found is None:
                return False
            equations.extend(found)
        solved = _solve_scalars(equations=equations, one=base_field.one)
        if solved is None:
            return False
        scalars = solved
    for relation, terms in zip(
        bound_quiver.relations,
        transported,
        strict=True,
    ):
        element: dict[Path, Any] = {}
        for (coefficient, path), (_, original) in zip(
            terms,
            relation.terms,
            strict=True,
        ):
            weight = base_field.scalar(value=coefficient)
            for name in original.arrows:
                weight *= scalars.get(name, base_field.one)
            element[path] = weight
        if other_algebra.reduce(element=element):
            return False
    return True


@beartype
def find_isomorphism(
    bound_quiver: BoundQuiver,
    other: BoundQuiver,
    *,
    up_to_scalars: bool = False,
    max_bound: int = DEFAULT_MAX_BOUND,
) -> BoundQuiverIsomorphism | None:
    """
    A map of vertices and arrows carrying the ideal of ``bound_quiver`` onto
    the ideal of ``other``, if one exists.

    With ``up_to_scalars``, each arrow may also be scaled by a nonzero
    scalar. The algebras must have the same dimension.
    """
    if (
        bound_quiver.field != other.field
        or len(bound_quiver.vertices) != len(other.vertices)
        or len(bound_quiver.quiver.arrows) != len(other.quiver.arrows)
    ):
        return None
    matcher = nx.algorithms.isomorphism.MultiDiGraphMatcher(
        bound_quiver.quiver.multigraph(),
        other.quiver.multigraph(),
        edge_match=lambda first, second: len(first) == len(second),
    )
    mappings = matcher.isomorphisms_iter()
    first_mapping = next(mappings, None)
    if first_mapping is None:
        return None
    other_algebra = build_algebra(bound_quiver=other, max_bound=max_bound)
    try:
        algebra = build_algebra(bound_quiver=bound_quiver, max_bound=max_bound)
    except NotAdmissibleError:
        return None
    if algebra.dimension != other_algebra.dimension:
        return None
    for mapping in itertools.chain([first_mapping], mappings):
        vertices = dict(sorted(mapping.items()))
        for arrows in _arrow_maps(
            bound_quiver=bound_quiver,
            other=other,
            vertices=vertices,
        ):
            if _accepts(
                bound_quiver=bound_quiver,
                other=other,
                arrows=arrows,
                up_to_scalars=up_to_scalars,
                other_algebra=other_algebra,
            ):
                return BoundQuiverIsomorphism(
                    vertices=vertices,
                    arrows=dict(sorted(arrows.items())),
                )
    return None
