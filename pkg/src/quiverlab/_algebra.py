"""
The finite dimensional algebra ``kQ/I`` of a bound quiver.

Normal forms come from a reduced row echelon form of the consequences
``p.r.q`` of the relations in a truncation ``kQ/J^L`` of the path algebra,
with columns in decreasing path order. Pivot paths are rewritten in terms of
the smaller paths which survive.
"""

from collections import defaultdict
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from beartype import beartype

from ._errors import NonParallelError, NotAdmissibleError
from ._fields import Field
from ._linalg import Vector, rank, reduce_against, row_reduce
from ._quiver import BoundQuiver, Path, Relation, all_paths, is_triangular

DEFAULT_MAX_BOUND = 64
MAX_TRUNCATED_PATHS = 200_000

Element = dict[Path, Any]
Pair = tuple[str, str]


@beartype
@dataclass(frozen=True)
class LayerProfile:
    """
    The dimensions ``d_i`` of the layers ``R^i / R^(i+1)`` of the bimodule
    radical filtration of ``e_f Λ e_e``.
    """

    target: str
    source: str
    layers: tuple[int, ...]

    @property
    def dimension(self) -> int:
        """
        The dimension of ``e_f Λ e_e``.
        """
        return sum(self.layers)


@beartype
@dataclass(frozen=True)
class AlgebraBasis:
    """
    A basis of ``Λ = kQ/I`` by reduced paths with a normal-form reducer.

    ``bases`` maps a pair ``(source, target)`` to the reduced paths from
    ``source`` to ``target``. ``reductions`` maps every other path shorter
    than ``nilpotency_bound`` to its normal form. Longer paths vanish.
    """

    bound_quiver: BoundQuiver
    nilpotency_bound: int
    bases: Mapping[Pair, tuple[Path, ...]]
    reductions: Mapping[Path, tuple[tuple[Path, Any], ...]]

    @property
    def field(self) -> Field:
        """
        The base field.
        """
        return self.bound_quiver.field

    @property
    def vertices(self) -> tuple[str, ...]:
        """
        The sorted vertex ids.
        """
        return self.bound_quiver.vertices

    @property
    def dimension(self) -> int:
        """
        ``dim Λ``, the number of reduced paths.
        """
        return sum(len(paths) for paths in self.bases.values())

    def basis(self, source: str, target: str) -> tuple[Path, ...]:
        """
        The reduced paths spanning ``e_target Λ e_source``.
        """
        return self.bases.get((source, target), ())

    def pair_dimension(self, source: str, target: str) -> int:
        """
        ``dim e_target Λ e_source``.
        """
        return len(self.basis(source=source, target=target))

    def paths_from(self, source: str) -> tuple[Path, ...]:
        """
        The reduced paths starting at a vertex, in path order.
        """
        return tuple(
            sorted(
                (
                    path
                    for target in self.vertices
                    for path in self.basis(source=source, target=target)
                ),
                key=lambda path: path.sort_key,
            ),
        )

    def radical_basis(self, vertex: str) -> tuple[Path, ...]:
        """
        The nontrivial reduced cycles at a vertex, spanning
        ``rad e_x Λ e_x``.
        """
        return tuple(
            path
            for path in self.basis(source=vertex, target=vertex)
            if path.length
        )

    def scalar(self, value: Any) -> Any:
        """
        Convert integers and fractions to field elements.
        """
        if isinstance(value, int | Fraction):
            return self.field.scalar(value=value)
        return value

    def reduce_path(self, path: Path) -> Element:
        """
        The normal form of a single path.
        """
        if path.length >= self.nilpotency_bound:
            return {}
        if path in self.reductions:
            return dict(self.reductions[path])
        return {path: self.field.one}

    def reduce(self, element: Mapping[Path, Any]) -> Element:
        """
        The normal form of a combination of parallel paths.

        The result is zero exactly when the element lies in ``I``.

        Raises:
            NonParallelError: The paths do not share endpoints.
        """
        if len({(path.source, path.target) for path in element}) > 1:
            message = "Only combinations of parallel paths can be reduced."
            raise NonParallelError(message)
        result: Element = defaultdict(lambda: self.field.zero)
        for path, coefficient in element.items():
            value = self.scalar(value=coefficient)
            for reduced, weight in self.reduce_path(path=path).items():
                result[reduced] += value * weight
        return {path: value for path, value in result.items() if value}

    def relation_element(self, relation: Relation) -> Element:
        """
        A relation as a combination with field coefficients.
        """
        return {
            path: self.field.scalar(value=coefficient)
            for coefficient, path in relation.terms
        }

    def multiply(
        self,
        left: Mapping[Path, Any],
        right: Mapping[Path, Any],
    ) -> Element:
        """
        The normal form of ``left . right``: first ``right``, then ``left``.

        Pairs of paths which do not compose contribute nothing.
        """
        result: Element = defaultdict(lambda: self.field.zero)
        for left_path, left_value in left.items():
            for right_path, right_value in right.items():
                if right_path.target != left_path.source:
                    continue
                product = self.scalar(value=left_value) * self.scalar(
                    value=right_value,
                )
                reduced = self.reduce_path(
                    path=left_path.after(other=right_path),
                )
                for path, weight in reduced.items():
                    result[path] += product * weight
        return {path: value for path, value in result.items() if value}

    def coordinates(
        self,
        element: Mapping[Path, Any],
        source: str,
        target: str,
    ) -> Vector:
        """
        The coordinates of a normal form in ``basis(source, target)``.
        """
        zero = self.field.zero
        return [
            element.get(path, zero)
            for path in self.basis(source=source, target=target)
        ]

    def element(self, vector: Vector, source: str, target: str) -> Element:
        """
        The combination with the given coordinates.
        """
        return {
            path: value
            for path, value in zip(
                self.basis(source=source, target=target),
                vector,
                strict=True,
            )
            if value
        }


@beartype
def _consequences(
    *,
    bound_quiver: BoundQuiver,
    paths_by_target: Mapping[str, list[Path]],
    paths_by_source: Mapping[str, list[Path]],
    truncation: int,
    exact: bool = False,
) -> dict[Pair, list[dict[Path, Fraction]]]:
    """
    The elements ``p.r.q`` with paths of length ``truncation`` or more
    dropped, grouped by endpoints.

    With ``exact``, elements with such a path are left out instead. The
    path lists are in increasing length.
    """
    grouped: dict[Pair, list[dict[Path, Fraction]]] = defaultdict(list)
    for relation in bound_quiver.relations:
        shortest = min(path.length for path in relation.paths)
        longest = max(path.length for path in relation.paths)
        for right in paths_by_target[relation.source]:
            if shortest + right.length >= truncation:
                break
            for left in paths_by_source[relation.target]:
                if shortest + right.length + left.length >= truncation:
                    break
                if exact and longest + right.length + left.length >= (
                    truncation
                ):
                    continue
                combination = {
                    left.after(other=path.after(other=right)): coefficient
                    for coefficient, path in relation.terms
                    if path.length + right.length + left.length < truncation
                }
                grouped[(right.source, left.target)].append(combination)
    return grouped


@beartype
def _paths_below(
    *,
    bound_quiver: BoundQuiver,
    truncation: int,
) -> tuple[list[Path], dict[str, list[Path]], dict[str, list[Path]]]:
    """
    The paths of length below ``truncation``, also grouped by target and by
    source.

    Raises:
        NotAdmissibleError: There are too many of them.
    """
    try:
        paths = all_paths(
            quiver=bound_quiver.quiver,
            max_len=truncation - 1,
            limit=MAX_TRUNCATED_PATHS,
        )
    except OverflowError as exc:
        message = (
            f"More than {MAX_TRUNCATED_PATHS} paths of length below "
            f"{truncation}; the ideal is not admissible within reach."
        )
        raise NotAdmissibleError(message) from exc
    paths_by_target: dict[str, list[Path]] = defaultdict(list)
    paths_by_source: dict[str, list[Path]] = defaultdict(list)
    for path in paths:
        paths_by_target[path.target].append(path)
        paths_by_source[path.source].append(path)
    return paths, paths_by_target, paths_by_source


@beartype
def _is_graded(bound_quiver: BoundQuiver) -> bool:
    """
    Whether truncating the path algebra loses nothing: the quiver has no
    oriented cycles or every relation is homogeneous in path length.
    """
    return is_triangular(quiver=bound_quiver.quiver) or all(
        len({path.length for path in relation.paths}) == 1
        for relation in bound_quiver.relations
    )


@beartype
def _certify_bound(
    *,
    bound_quiver: BoundQuiver,
    bound: int,
    max_bound: int,
) -> None:
    """
    Check that every path of length ``bound`` is a combination of elements
    ``p.r.q`` of the ideal itself, nothing dropped.

    Raises:
        NotAdmissibleError: No such combination uses paths shorter than
            ``max_bound`` plus the longest relation term.
    """
    base_field = bound_quiver.field
    domain = base_field.domain
    longest = max(
        path.length
        for relation in bound_quiver.relations
        for path in relation.paths
    )
    cap = max(max_bound, bound) + longest
    depth = bound + longest
    while True:
        paths, paths_by_target, paths_by_source = _paths_below(
            bound_quiver=bound_quiver,
            truncation=depth,
        )
        consequences = _consequences(
            bound_quiver=bound_quiver,
            paths_by_target=paths_by_target,
            paths_by_source=paths_by_source,
            truncation=depth,
            exact=True,
        )
        columns: dict[Pair, list[Path]] = defaultdict(list)
        for path in paths:
            columns[(path.source, path.target)].append(path)
        certified = True
        for pair, pair_paths in columns.items():
            targets = [path for path in pair_paths if path.length == bound]
            if not targets:
                continue
            index = {
                path: position for position, path in enumerate(pair_paths)
            }
            rows = []
            for combination in consequences.get(pair, []):
                row = [domain.zero] * len(pair_paths)
                for path, coefficient in combination.items():
                    row[index[path]] += base_field.scalar(value=coefficient)
                rows.append(row)
            echelon, pivots = row_reduce(
                rows=rows,
                ncols=len(pair_paths),
                domain=domain,
            )
            for path in targets:
                vector = [domain.zero] * len(pair_paths)
                vector[index[path]] = domain.one
                remainder = reduce_against(
                    vector=vector,
                    echelon=echelon,
                    pivots=pivots,
                )
                if any(remainder):
                    certified = False
                    break
            if not certified:
                break
        if certified:
            return
        if depth >= cap:
            message = (
                f"The paths of length {bound} vanish only after truncating; "
                "no power of the arrow ideal lies in the ideal."
            )
            raise NotAdmissibleError(message)
        depth = min(2 * depth, cap)


@beartype
def build_algebra(
    bound_quiver: BoundQuiver,
    max_bound: int = DEFAULT_MAX_BOUND,
) -> AlgebraBasis:
    """
    Compute the nilpotency bound, reduced paths and normal forms of a bound
    quiver.

    Raises:
        NotAdmissibleError: No power ``J^N`` with ``N <= max_bound`` lies in
            the ideal.
        ValueError: ``max_bound`` is not positive.
    """
    if max_bound < 1:
        message = "The bound must be positive."
        raise ValueError(message)
    base_field = bound_quiver.field
    domain = base_field.domain
    longest = max(
        (
            path.length
            for relation in bound_quiver.relations
            for path in relation.paths
        ),
        default=1,
    )
    truncation = min(longest + 2, max_bound + 1)

    while True:
        paths, paths_by_target, paths_by_source = _paths_below(
            bound_quiver=bound_quiver,
            truncation=truncation,
        )
        columns: dict[Pair, list[Path]] = defaultdict(list)
        for path in paths:
            columns[(path.source, path.target)].append(path)
        for pair_paths in columns.values():
            pair_paths.reverse()

        consequences = _consequences(
            bound_quiver=bound_quiver,
            paths_by_target=paths_by_target,
            paths_by_source=paths_by_source,
            truncation=truncation,
        )
        echelons: dict[Pair, tuple[list[Vector], tuple[int, ...]]] = {}
        in_ideal: set[Path] = set()
        for pair, pair_paths in columns.items():
            index = {
                path: position for position, path in enumerate(pair_paths)
            }
            rows = []
            for combination in consequences.get(pair, []):
                row = [domain.zero] * len(pair_paths)
                for path, coefficient in combination.items():
                    row[index[path]] += base_field.scalar(value=coefficient)
                rows.append(row)
            echelon, pivots = row_reduce(
                rows=rows,
                ncols=len(pair_paths),
                domain=domain,
            )
            echelons[pair] = (echelon, pivots)
            for row, pivot in zip(echelon, pivots, strict=True):
                if sum(1 for entry in row if entry) == 1:
                    in_ideal.add(pair_paths[pivot])

        bound = next(
            (
                length
                for length in range(truncation)
                if all(
                    path in in_ideal
                    for path in paths
                    if path.length >= length
                )
            ),
            None,
        )
        if bound is not None:
            break
        if truncation >= max_bound + 1:
            message = (
                f"No power of the arrow ideal up to J^{max_bound} lies in "
                "the ideal."
            )
            raise NotAdmissibleError(message)
        truncation = min(2 * truncation, max_bound + 1)

    if not _is_graded(bound_quiver=bound_quiver):
        _certify_bound(
            bound_quiver=bound_quiver,
            bound=bound,
            max_bound=max_bound,
        )

    bases: dict[Pair, tuple[Path, ...]] = {}
    reductions: dict[Path, tuple[tuple[Path, Any], ...]] = {}
    for pair, pair_paths in columns.items():
        echelon, pivots = echelons[pair]
        pivot_set = set(pivots)
        survivors = tuple(
            sorted(
                (
                    path
                    for position, path in enumerate(pair_paths)
                    if position not in pivot_set and path.length < bound
                ),
                key=lambda path: path.sort_key,
            ),
        )
        if survivors:
            bases[pair] = survivors
        for row, pivot in zip(echelon, pivots, strict=True):
            path = pair_paths[pivot]
            if path.length >= bound:
                continue
            reductions[path] = tuple(
                (pair_paths[position], -entry)
                for position, entry in enumerate(row)
                if entry and position != pivot
            )

    return AlgebraBasis(
        bound_quiver=bound_quiver,
        nilpotency_bound=bound,
        bases=bases,
        reductions=reductions,
    )


@beartype
def _span(
    *,
    algebra: AlgebraBasis,
    elements: Iterable[Mapping[Path, Any]],
    source: str,
    target: str,
) -> list[Vector]:
    """
    Echelon rows spanning some elements of ``e_target Λ e_source``.
    """
    rows = [
        algebra.coordinates(element=element, source=source, target=target)
        for element in elements
    ]
    echelon, _ = row_reduce(
        rows=rows,
        ncols=algebra.pair_dimension(source=source, target=target),
        domain=algebra.field.domain,
    )
    return echelon


@beartype
def _radical_products(
    *,
    algebra: AlgebraBasis,
    rows: list[Vector],
    source: str,
    target: str,
    left: bool = True,
    right: bool = True,
) -> list[Vector]:
    """
    Echelon rows spanning ``rad(fΛf).R + R.rad(eΛe)`` for ``R`` spanned by
    ``rows``.
    """
    one = algebra.field.one
    products: list[Element] = []
    for row in rows:
        element = algebra.element(vector=row, source=source, target=target)
        if left:
            products.extend(
                algebra.multiply(left={cycle: one}, right=element)
                for cycle in algebra.radical_basis(vertex=target)
            )
        if right:
            products.extend(
                algebra.multiply(left=element, right={cycle: one})
                for cycle in algebra.radical_basis(vertex=source)
            )
    return _span(
        algebra=algebra,
        elements=products,
        source=source,
        target=target,
    )


@beartype
def _identity_rows(
    algebra: AlgebraBasis,
    source: str,
    target: str,
) -> list[Vector]:
    """
    The unit vectors of ``basis(source, target)``.
    """
    size = algebra.pair_dimension(source=source, target=target)
    domain = algebra.field.domain
    return [
        [
            domain.one if column == row else domain.zero
            for column in range(size)
        ]
        for row in range(size)
    ]


@beartype
def radical_layers(
    algebra: AlgebraBasis,
    f: str,
    e: str,
) -> list[list[Vector]]:
    """
    Echelon bases of ``R^0 = e_f Λ e_e, R^1, R^2, ...`` down to zero.
    """
    current = _identity_rows(algebra=algebra, source=e, target=f)
    layers = [current]
    while current:
        following = _radical_products(
            algebra=algebra,
            rows=current,
            source=e,
            target=f,
        )
        if len(following) >= len(current):
            message = "The radical filtration does not descend."
            raise AssertionError(message)
        layers.append(following)
        current = following
    return layers


@beartype
def layer_profile(algebra: AlgebraBasis, f: str, e: str) -> LayerProfile:
    """
    The layer dimensions of the bimodule radical filtration of
    ``e_f Λ e_e``.
    """
    layers = radical_layers(algebra=algebra, f=f, e=e)
    return LayerProfile(
        target=f,
        source=e,
        layers=tuple(
            len(upper) - len(lower)
            for upper, lower in zip(layers, layers[1:], strict=False)
        ),
    )


@beartype
def is_distributive(
    algebra: AlgebraBasis,
) -> tuple[bool, tuple[str, str, int] | None]:
    """
    Whether every ``e_f Λ e_e`` is a uniserial bimodule.

    Otherwise the witness ``(f, e, l)`` names the first pair, in order of
    source and then target, with a layer ``l`` of dimension above one.
    """
    for e in algebra.vertices:
        for f in algebra.vertices:
            profile = layer_profile(algebra=algebra, f=f, e=e)
            for layer, dimension in enumerate(profile.layers):
                if dimension > 1:
                    return False, (f, e, layer)
    return True, None


@beartype
def distributivity_cross_check(algebra: AlgebraBasis) -> tuple[bool, bool]:
    """
    Two consequences of distributivity.

    The first flag says every ``e_x Λ e_x`` has layers ``1, 1, ..., 1``.
    The second says every ``e_y Λ e_x`` is generated by one element over
    ``e_y Λ e_y`` or over ``e_x Λ e_x``.
    """
    local_uniserial = all(
        all(
            dimension == 1
            for dimension in layer_profile(
                algebra=algebra,
                f=vertex,
                e=vertex,
            ).layers
        )
        for vertex in algebra.vertices
    )
    one_sided_cyclic = True
    for source in algebra.vertices:
        for target in algebra.vertices:
            rows = _identity_rows(
                algebra=algebra,
                source=source,
                target=target,
            )
            if not rows:
                continue
            left = _radical_products(
                algebra=algebra,
                rows=rows,
                source=source,
                target=target,
                right=False,
            )
            right = _radical_products(
                algebra=algebra,
                rows=rows,
                source=source,
                target=target,
                left=False,
            )
            if min(len(rows) - len(left), len(rows) - len(right)) > 1:
                one_sided_cyclic = False
    return local_uniserial, one_sided_cyclic


@beartype
def _ideal_generators(algebra: AlgebraBasis) -> dict[Pair, list[Element]]:
    """
    A basis of ``I`` modulo ``J^(N+1)``: ``p - nf(p)`` for every rewritten
    path ``p`` together with the paths of length ``N``.
    """
    one = algebra.field.one
    generators: dict[Pair, list[Element]] = defaultdict(list)
    for path in sorted(algebra.reductions, key=lambda path: path.sort_key):
        element: Element = {path: one}
        for reduced, weight in algebra.reductions[path]:
            element[reduced] = -weight
        generators[(path.source, path.target)].append(element)
    for path in all_paths(
        quiver=algebra.bound_quiver.quiver,
        max_len=algebra.nilpotency_bound,
    ):
        if path.length == algebra.nilpotency_bound:
            generators[(path.source, path.target)].append({path: one})
    return generators


@beartype
def _decomposable_part(
    *,
    algebra: AlgebraBasis,
    generators: Mapping[Pair, list[Element]],
) -> dict[Pair, list[Element]]:
    """
    Elements spanning ``JI + IJ`` modulo ``J^(N+1)``.
    """
    quiver = algebra.bound_quiver.quiver
    bound = algebra.nilpotency_bound
    products: dict[Pair, list[Element]] = defaultdict(list)
    for (source, target), elements in generators.items():
        for element in elements:
            for arrow in quiver.outgoing(vertex=target):
                step = Path(
                    arrows=(arrow.name,),
                    source=arrow.source,
                    target=arrow.target,
                )
                products[(source, arrow.target)].append(
                    {
                        step.after(other=path): value
                        for path, value in element.items()
                        if path.length < bound
                    },
                )
            for arrow in quiver.incoming(vertex=source):
                step = Path(
                    arrows=(arrow.name,),
                    source=arrow.source,
                    target=arrow.target,
                )
                products[(arrow.source, target)].append(
                    {
                        path.after(other=step): value
                        for path, value in element.items()
                        if path.length < bound
                    },
                )
    return products


@beartype
def _truncated_columns(algebra: AlgebraBasis) -> dict[Pair, list[Path]]:
    """
    All paths of length at most ``N``, grouped by endpoints.
    """
    columns: dict[Pair, list[Path]] = defaultdict(list)
    for path in all_paths(
        quiver=algebra.bound_quiver.quiver,
        max_len=algebra.nilpotency_bound,
    ):
        columns[(path.source, path.target)].append(path)
    return columns


@beartype
def _as_rows(
    *,
    elements: Iterable[Mapping[Path, Any]],
    columns: list[Path],
    algebra: AlgebraBasis,
) -> list[Vector]:
    """
    Elements of the truncated path algebra as coordinate rows.
    """
    index = {path: position for position, path in enumerate(columns)}
    rows = []
    for element in elements:
        row = [algebra.field.zero] * len(columns)
        for path, value in element.items():
            row[index[path]] += value
        rows.append(row)
    return rows


@beartype
def minimal_relation_count(
    algebra: AlgebraBasis,
) -> tuple[dict[Pair, int], int]:
    """
    The number ``r(x, y)`` of relations from ``x`` to ``y`` in a minimal
    generating set of ``I``, and their total.

    ``r(x, y)`` is the dimension of ``e_y I e_x / e_y (JI + IJ) e_x``.
    """
    generators = _ideal_generators(algebra=algebra)
    products = _decomposable_part(algebra=algebra, generators=generators)
    columns = _truncated_columns(algebra=algebra)
    domain = algebra.field.domain
    counts: dict[Pair, int] = {}
    for pair in sorted(generators):
        ideal_dimension = rank(
            rows=_as_rows(
                elements=generators[pair],
                columns=columns[pair],
                algebra=algebra,
            ),
            ncols=len(columns[pair]),
            domain=domain,
        )
        decomposable_dimension = rank(
            rows=_as_rows(
                elements=products.get(pair, []),
                columns=columns[pair],
                algebra=algebra,
            ),
            ncols=len(columns[pair]),
            domain=domain,
        )
        if ideal_dimension > decomposable_dimension:
            counts[pair] = ideal_dimension - decomposable_dimension
    return counts, sum(counts.values())


@beartype
def minimal_generator_monomials(algebra: AlgebraBasis) -> list[Path]:
    """
    The paths in ``I`` whose proper subpaths are not, and which are not in
    ``JI + IJ``.

    These are the monomials of every minimal generating set of ``I``.
    """
    quiver = algebra.bound_quiver.quiver
    generators = _ideal_generators(algebra=algebra)
    products = _decomposable_part(algebra=algebra, generators=generators)
    columns = _truncated_columns(algebra=algebra)
    domain = algebra.field.domain
    echelons: dict[Pair, tuple[list[Vector], tuple[int, ...]]] = {}
    monomials: list[Path] = []
    for path in all_paths(quiver=quiver, max_len=algebra.nilpotency_bound):
        if path.length < 2 or algebra.reduce_path(path=path):  # noqa: PLR2004
            continue
        if any(
            not algebra.reduce_path(path=subpath)
            for subpath in quiver.subpaths(path=path)
        ):
            continue
        pair = (path.source, path.target)
        if pair not in echelons:
            echelons[pair] = row_reduce(
                rows=_as_rows(
                    elements=products.get(pair, []),
                    columns=columns[pair],
                    algebra=algebra,
                ),
                ncols=len(columns[pair]),
                domain=domain,
            )
        echelon, pivots = echelons[pair]
        vector = [
            domain.one if column == path else domain.zero
            for column in columns[pair]
        ]
        if any(reduce_against(vector=vector, echelon=echelon, pivots=pivots)):
            monomials.append(path)
    return monomials
