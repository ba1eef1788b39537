"""
Recognising the families whose algebras are minimal non-distributive, their
glued versions and two special biserial shapes, with tau-tilting verdicts.
"""

import itertools
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum

from beartype import beartype

from ._algebra import (
    DEFAULT_MAX_BOUND,
    AlgebraBasis,
    build_algebra,
    is_distributive,
    layer_profile,
    minimal_generator_monomials,
    minimal_relation_count,
)
from ._bricks import BrickFamily, Letter, band_family, bongartz_family
from ._errors import (
    NotAdmissibleError,
    NotSpecialBiserialError,
    PreconditionError,
)
from ._families import (
    acyclic_extended_a,
    b_parameters_allowed,
    barbell,
    family_a,
    family_b,
    family_c,
    family_d,
    family_e,
)
from ._fields import Field
from ._isomorphism import BoundQuiverIsomorphism, find_isomorphism
from ._quiver import (
    BoundQuiver,
    Quiver,
    delete_arrows,
    is_triangular,
    over_field,
    sources_and_sinks,
    weak_components,
)
from ._representations import Ternary
from ._structure import ResolutionStep, find_nodes, resolve_all

DEFAULT_PROBE_BUDGET = 0

CYCLE_LENGTH_NOTE = (
    "The cycle of C(p) and D(p, q) is read as having exactly p arrows."
)
MONOMIAL_CAVEAT = (
    "Evaluated on the minimal generators computed for this presentation."
)


class FamilyKind(Enum):
    """
    The shapes the classifier recognises.
    """

    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    GLUED = "GluedOf"
    ACYCLIC_EXTENDED_A = "AcyclicAtilde"
    BARBELL = "Barbell"
    UNRECOGNIZED = "Unrecognized"


TAU_INFINITE_FAMILIES = frozenset(
    {
        FamilyKind.A,
        FamilyKind.B,
        FamilyKind.C,
        FamilyKind.D,
        FamilyKind.ACYCLIC_EXTENDED_A,
        FamilyKind.BARBELL,
    },
)


class TauVerdict(Enum):
    """
    Whether an algebra has finitely many bricks up to isomorphism.
    """

    FINITE = "finite"
    INFINITE = "infinite"
    UNKNOWN = "unknown"


@beartype
@dataclass(frozen=True)
class FamilyTag:
    """
    A recognised family with its parameters.

    Glued algebras list the families of the components left after every
    node is resolved, and the resolutions that led there. Band shapes carry
    the closed walk used for their brick families.
    """

    kind: FamilyKind
    parameters: tuple[int, ...] = ()
    orientation: str = ""
    components: tuple["FamilyTag", ...] = ()
    resolutions: tuple[ResolutionStep, ...] = ()
    isomorphism: BoundQuiverIsomorphism | None = None
    walk: tuple[Letter, ...] = ()

    def __str__(self) -> str:
        """
        The family written like ``A(1,1)`` or ``GluedOf(C(2))``.
        """
        if self.kind is FamilyKind.UNRECOGNIZED:
            return self.kind.value
        if self.kind is FamilyKind.GLUED:
            inner = ", ".join(str(component) for component in self.components)
            return f"{self.kind.value}({inner})"
        arguments = [str(parameter) for parameter in self.parameters]
        if self.orientation:
            arguments.append(self.orientation)
        return f"{self.kind.value}({','.join(arguments)})"


@beartype
@dataclass(frozen=True)
class Certificate:
    """
    A checked statement supporting a verdict.
    """

    name: str
    holds: bool
    detail: str
    caveat: str = ""


@beartype
@dataclass(frozen=True)
class ClassificationResult:
    """
    What the classifier found out about a bound quiver.
    """

    family: FamilyTag
    tau_verdict: TauVerdict = TauVerdict.UNKNOWN
    certificates: tuple[Certificate, ...] = ()
    preprojective_component: Ternary = Ternary.UNKNOWN
    witness: BrickFamily | None = None
    notes: tuple[str, ...] = ()

    @property
    def recognized(self) -> bool:
        """
        Whether the family is one the classifier knows.
        """
        return self.family.kind is not FamilyKind.UNRECOGNIZED


@beartype
@dataclass(frozen=True)
class ProbeWitness:
    """
    Arrows whose quotient has a component in a tau-tilting infinite family.
    """

    arrows: tuple[str, ...]
    component: BoundQuiver
    family: FamilyTag


UNRECOGNIZED = FamilyTag(kind=FamilyKind.UNRECOGNIZED)


@beartype
def _candidates(
    *,
    vertex_count: int,
    arrow_count: int,
    base_field: Field,
) -> Iterator[tuple[FamilyKind, tuple[int, ...], BoundQuiver]]:
    """
    The family models with the given numbers of vertices and arrows.
    """
    n = vertex_count
    if arrow_count == n:
        for p in range(1, n // 2 + 1):
            yield FamilyKind.A, (p, n - p), family_a(
                p=p,
                q=n - p,
                base_field=base_field,
            )
        if n >= 3:  # noqa: PLR2004
            yield FamilyKind.C, (n - 2,), family_c(
                p=n - 2,
                base_field=base_field,
            )
    if arrow_count == n + 1:
        for q in (2, 3):
            p = n - 1 - q
            if b_parameters_allowed(p=p, q=q):
                yield FamilyKind.B, (p, q), family_b(
                    p=p,
                    q=q,
                    base_field=base_field,
                )
        for p in range(1, n - 2):
            q = n - 2 - p
            yield FamilyKind.D, (p, q), family_d(
                p=p,
                q=q,
                base_field=base_field,
            )
        for r in range(1, n):
            for p in range(1, n + 1 - r):
                q = n + 1 - p - r
                if q >= 1:
                    yield FamilyKind.E, (p, q, r), family_e(
                        p=p,
                        q=q,
                        r=r,
                        base_field=base_field,
                    )


@beartype
def _recognize(bound_quiver: BoundQuiver, *, max_bound: int) -> FamilyTag:
    """
    Match a bound quiver without nodes against the family models.
    """
    for kind, parameters, model in _candidates(
        vertex_count=len(bound_quiver.vertices),
        arrow_count=len(bound_quiver.quiver.arrows),
        base_field=bound_quiver.field,
    ):
        isomorphism = find_isomorphism(
            bound_quiver=bound_quiver,
            other=model,
            up_to_scalars=True,
            max_bound=max_bound,
        )
        if isomorphism is not None:
            return FamilyTag(
                kind=kind,
                parameters=parameters,
                isomorphism=isomorphism,
            )
    return UNRECOGNIZED


@beartype
def _notes(family: FamilyTag) -> tuple[str, ...]:
    """
    Reading conventions which the family depends on.
    """
    kinds = {family.kind} | {
        component.kind for component in family.components
    }
    if kinds & {FamilyKind.C, FamilyKind.D}:
        return (CYCLE_LENGTH_NOTE,)
    return ()


@beartype
def match_family(
    bound_quiver: BoundQuiver,
    *,
    max_bound: int = DEFAULT_MAX_BOUND,
) -> ClassificationResult:
    """
    Resolve every node, then match what is left against the family models
    up to isomorphism, allowing arrows to be rescaled.

    An algebra with nodes is reported as glued only when its resolution is
    a single recognized component. Resolutions which fall apart are
    unrecognized.
    """
    resolved, log = resolve_all(
        bound_quiver=bound_quiver,
        max_bound=max_bound,
    )
    components = weak_components(bound_quiver=resolved)
    family = UNRECOGNIZED
    if len(components) == 1:
        tag = _recognize(bound_quiver=components[0], max_bound=max_bound)
        if tag.kind is FamilyKind.UNRECOGNIZED or not log:
            family = tag
        else:
            family = FamilyTag(
                kind=FamilyKind.GLUED,
                components=(tag,),
                resolutions=log,
            )
    return ClassificationResult(family=family, notes=_notes(family=family))


@beartype
def special_biserial_violation(
    bound_quiver: BoundQuiver,
    algebra: AlgebraBasis,
) -> str | None:
    """
    Why a bound quiver is not special biserial, or ``None`` if it is.

    At most two arrows may start and end at each vertex, and each arrow may
    be followed by at most one arrow and preceded by at most one arrow
    without the composite lying in the ideal.
    """
    quiver = bound_quiver.quiver
    for vertex in quiver.vertices:
        if len(quiver.incoming(vertex=vertex)) > 2:  # noqa: PLR2004
            return f"More than two arrows end at '{vertex}'."
        if len(quiver.outgoing(vertex=vertex)) > 2:  # noqa: PLR2004
            return f"More than two arrows start at '{vertex}'."
    for arrow in quiver.arrows:
        following = [
            after.name
            for after in quiver.outgoing(vertex=arrow.target)
            if algebra.reduce_path(
                path=quiver.path(arrows=(after.name, arrow.name)),
            )
        ]
        if len(following) > 1:
            return (
                f"More than one arrow follows '{arrow.name}' outside the "
                f"ideal: {', '.join(following)}."
            )
        preceding = [
            before.name
            for before in quiver.incoming(vertex=arrow.source)
            if algebra.reduce_path(
                path=quiver.path(arrows=(arrow.name, before.name)),
            )
        ]
        if len(preceding) > 1:
            return (
                f"More than one arrow precedes '{arrow.name}' outside the "
                f"ideal: {', '.join(preceding)}."
            )
    return None


@beartype
def is_gentle(bound_quiver: BoundQuiver, algebra: AlgebraBasis) -> bool:
    """
    Whether a bound quiver is gentle: special biserial with the ideal
    generated by paths of length two, each arrow being followed by at most
    one arrow and preceded by at most one arrow inside the ideal.
    """
    violation = special_biserial_violation(
        bound_quiver=bound_quiver,
        algebra=algebra,
    )
    if violation is not None:
        return False
    if not all(
        relation.is_monomial and relation.paths[0].length == 2  # noqa: PLR2004
        for relation in bound_quiver.relations
    ):
        return False
    zero = {relation.paths[0].arrows for relation in bound_quiver.relations}
    quiver = bound_quiver.quiver
    for arrow in quiver.arrows:
        following = [
            after
            for after in quiver.outgoing(vertex=arrow.target)
            if (after.name, arrow.name) in zero
        ]
        preceding = [
            before
            for before in quiver.incoming(vertex=arrow.source)
            if (arrow.name, before.name) in zero
        ]
        if len(following) > 1 or len(preceding) > 1:
            return False
    return True


@beartype
def _cycle_walk(quiver: Quiver) -> tuple[Letter, ...]:
    """
    The closed walk once around a quiver whose underlying graph is a cycle,
    starting at the smallest vertex.
    """
    start = quiver.vertices[0]
    position = start
    used: set[str] = set()
    walk: list[Letter] = []
    while len(used) < len(quiver.arrows):
        arrow = min(
            (
                arrow
                for arrow in (
                    *quiver.outgoing(vertex=position),
                    *quiver.incoming(vertex=position),
                )
                if arrow.name not in used
            ),
            key=lambda arrow: arrow.name,
        )
        used.add(arrow.name)
        if arrow.source == position:
            walk.append((arrow.name, 1))
            position = arrow.target
        else:
            walk.append((arrow.name, -1))
            position = arrow.source
    return tuple(walk)


@beartype
def _is_cycle_shaped(quiver: Quiver) -> bool:
    """
    Whether the underlying graph is a single cycle through every vertex.
    """
    graph = quiver.multigraph().to_undirected()
    return (
        len(quiver.arrows) == len(quiver.vertices) >= 2  # noqa: PLR2004
        and quiver.is_connected
        and all(degree == 2 for _, degree in graph.degree())  # noqa: PLR2004
    )


@beartype
def _barbell_shapes(
    *,
    vertex_count: int,
    arrow_count: int,
) -> Iterator[tuple[int, int, str]]:
    """
    Cycle lengths and bar orientations of barbells of the given size.

    Bars have at least two arrows and are not oriented in one direction.
    """
    if arrow_count != vertex_count + 1:
        return
    for bar_length in range(2, vertex_count):
        rest = vertex_count + 1 - bar_length
        for left in range(1, rest):
            for letters in itertools.product("fb", repeat=bar_length):
                if len(set(letters)) > 1:
                    yield left, rest - left, "".join(letters)


@beartype
def _barbell_walk(
    *,
    left: int,
    right: int,
    bar: str,
) -> tuple[Letter, ...]:
    """
    Left cycle, bar, right cycle, bar back, in the arrow names of the
    barbell model.
    """
    left_cycle = (
        [("alpha", 1)]
        if left == 1
        else [
            ("beta", 1),
            *((f"kappa{index}", 1) for index in range(1, left - 1)),
            ("alpha", 1),
        ]
    )
    right_cycle = (
        [("delta", 1)]
        if right == 1
        else [
            ("delta", 1),
            *((f"mu{index}", 1) for index in range(1, right - 1)),
            ("gamma", 1),
        ]
    )
    across = [
        (f"theta{index}", 1 if letter == "f" else -1)
        for index, letter in enumerate(bar, start=1)
    ]
    back = [(name, -direction) for name, direction in reversed(across)]
    return (*left_cycle, *across, *right_cycle, *back)


@beartype
def _biserial_shape(
    bound_quiver: BoundQuiver,
    *,
    max_bound: int,
) -> FamilyTag:
    """
    Acyclic extended A quivers without relations and barbells.
    """
    quiver = bound_quiver.quiver
    if (
        not bound_quiver.relations
        and _is_cycle_shaped(quiver=quiver)
        and is_triangular(quiver=quiver)
    ):
        walk = _cycle_walk(quiver=quiver)
        orientation = "".join("f" if step > 0 else "b" for _, step in walk)
        return FamilyTag(
            kind=FamilyKind.ACYCLIC_EXTENDED_A,
            parameters=(len(quiver.vertices) - 1,),
            orientation=orientation,
            isomorphism=find_isomorphism(
                bound_quiver=bound_quiver,
                other=acyclic_extended_a(
                    orientation=orientation,
                    base_field=bound_quiver.field,
                ),
                max_bound=max_bound,
            ),
            walk=walk,
        )
    for left, right, bar in _barbell_shapes(
        vertex_count=len(quiver.vertices),
        arrow_count=len(quiver.arrows),
    ):
        isomorphism = find_isomorphism(
            bound_quiver=bound_quiver,
            other=barbell(
                left=left,
                right=right,
                bar=bar,
                base_field=bound_quiver.field,
            ),
            max_bound=max_bound,
        )
        if isomorphism is None:
            continue
        names = {model: own for own, model in isomorphism.arrows.items()}
        return FamilyTag(
            kind=FamilyKind.BARBELL,
            parameters=(left, right),
            orientation=bar,
            isomorphism=isomorphism,
            walk=tuple(
                (names[name], direction)
                for name, direction in _barbell_walk(
                    left=left,
                    right=right,
                    bar=bar,
                )
            ),
        )
    return UNRECOGNIZED


@beartype
def classify_biserial(
    bound_quiver: BoundQuiver,
    *,
    max_bound: int = DEFAULT_MAX_BOUND,
) -> ClassificationResult:
    """
    Recognise the tau-tilting infinite special biserial shapes: acyclic
    extended A quivers without relations, and barbells.

    The gentle flag and whether at most two relations are needed are
    reported as certificates.

    Raises:
        NotSpecialBiserialError: The bound quiver is not special biserial.
    """
    algebra = build_algebra(bound_quiver=bound_quiver, max_bound=max_bound)
    violation = special_biserial_violation(
        bound_quiver=bound_quiver,
        algebra=algebra,
    )
    if violation is not None:
        raise NotSpecialBiserialError(violation)
    _, total = minimal_relation_count(algebra=algebra)
    family = _biserial_shape(bound_quiver=bound_quiver, max_bound=max_bound)
    verdict = (
        TauVerdict.INFINITE
        if family.kind is not FamilyKind.UNRECOGNIZED
        else TauVerdict.UNKNOWN
    )
    return ClassificationResult(
        family=family,
        tau_verdict=verdict,
        certificates=(
            Certificate(
                name="gentle",
                holds=is_gentle(bound_quiver=bound_quiver, algebra=algebra),
                detail="Special biserial with quadratic monomial relations.",
            ),
            Certificate(
                name="at-most-two-relations",
                holds=total <= 2,  # noqa: PLR2004
                detail=f"|R| = {total}",
            ),
        ),
    )


@beartype
def preprojective_flag(result: ClassificationResult) -> Ternary:
    """
    Whether the algebra has a preprojective component: exactly for the
    hereditary families and ``B(p, q)``.
    """
    kind = result.family.kind
    if kind in {FamilyKind.A, FamilyKind.B, FamilyKind.ACYCLIC_EXTENDED_A}:
        return Ternary.TRUE
    if kind is FamilyKind.UNRECOGNIZED:
        return Ternary.UNKNOWN
    return Ternary.FALSE


@beartype
def _tau_infinite_family(
    bound_quiver: BoundQuiver,
    *,
    max_bound: int,
) -> FamilyTag | None:
    """
    The family of a bound quiver when it is one of the tau-tilting infinite
    ones.
    """
    match = match_family(bound_quiver=bound_quiver, max_bound=max_bound)
    family = match.family
    if family.kind in TAU_INFINITE_FAMILIES:
        return family
    algebra = build_algebra(bound_quiver=bound_quiver, max_bound=max_bound)
    violation = special_biserial_violation(
        bound_quiver=bound_quiver,
        algebra=algebra,
    )
    if violation is not None:
        return None
    family = _biserial_shape(bound_quiver=bound_quiver, max_bound=max_bound)
    if family.kind in TAU_INFINITE_FAMILIES:
        return family
    return None


@beartype
def _quotient_witness(
    *,
    bound_quiver: BoundQuiver,
    subset: tuple[str, ...],
    max_bound: int,
) -> ProbeWitness | None:
    """
    A component of the quotient by ``subset`` in a tau-tilting infinite
    family.
    """
    quotient = delete_arrows(bound_quiver=bound_quiver, arrows=subset)
    for component in weak_components(bound_quiver=quotient):
        if len(component.vertices) < 2:  # noqa: PLR2004
            continue
        try:
            family = _tau_infinite_family(
                bound_quiver=component,
                max_bound=max_bound,
            )
        except NotAdmissibleError:
            continue
        if family is not None:
            return ProbeWitness(
                arrows=subset,
                component=component,
                family=family,
            )
    return None


@beartype
def sufficient_tau_infinite_probe(
    bound_quiver: BoundQuiver,
    budget: int = DEFAULT_PROBE_BUDGET,
    *,
    max_bound: int = DEFAULT_MAX_BOUND,
    on_subset: Callable[[tuple[str, ...]], None] | None = None,
    workers: int | None = None,
) -> ProbeWitness | None:
    """
    Look for arrows, at most ``budget`` of them, whose quotient has a
    component in a tau-tilting infinite family.

    Subsets are tried by size and then lexicographically. With ``workers``,
    the subsets of each size are tried in that many processes and the
    first witness in that order is kept, so the result is the same.
    Finding none is not a verdict.
    """
    names = sorted(arrow.name for arrow in bound_quiver.quiver.arrows)
    sizes = range(min(budget, len(names)) + 1)
    if workers is None:
        for size in sizes:
            for subset in itertools.combinations(names, size):
                if on_subset is not None:
                    on_subset(subset)
                witness = _quotient_witness(
                    bound_quiver=bound_quiver,
                    subset=subset,
                    max_bound=max_bound,
                )
                if witness is not None:
                    return witness
        return None
    with ProcessPoolExecutor(max_workers=workers) as executor:
        for size in sizes:
            subsets = list(itertools.combinations(names, size))
            futures = [
                executor.submit(
                    _quotient_witness,
                    bound_quiver=bound_quiver,
                    subset=subset,
                    max_bound=max_bound,
                )
                for subset in subsets
            ]
            for subset, future in zip(subsets, futures, strict=True):
                if on_subset is not None:
                    on_subset(subset)
                witness = future.result()
                if witness is not None:
                    for pending in futures:
                        pending.cancel()
                    return witness
    return None


@beartype
def bongartz_pair(algebra: AlgebraBasis) -> tuple[str, str]:
    """
    Vertices ``e`` and ``f`` with ``e Λ e`` the base field and a layer of
    ``e_f Λ e_e`` of dimension at least two.

    The pair found by the distributivity check is preferred.
    """
    _, found = is_distributive(algebra=algebra)
    if found is not None:
        f, e, _ = found
        if algebra.pair_dimension(source=e, target=e) == 1:
            return e, f
    for e in algebra.vertices:
        if algebra.pair_dimension(source=e, target=e) != 1:
            continue
        for f in algebra.vertices:
            profile = layer_profile(algebra=algebra, f=f, e=e)
            if any(dimension > 1 for dimension in profile.layers):
                return e, f
    message = "No pair of vertices carries a Bongartz family."
    raise PreconditionError(message)


@beartype
def tau_infinite_witness(
    bound_quiver: BoundQuiver,
    family: FamilyTag,
    witness_field: Field,
    *,
    max_bound: int = DEFAULT_MAX_BOUND,
) -> BrickFamily:
    """
    A one-parameter family of bricks over a prime field showing that a
    recognised algebra is tau-tilting infinite.

    Band shapes use band modules with every nonzero parameter; the other
    families use a Bongartz family with every parameter.

    Raises:
        PreconditionError: The field is not finite or the family is not
            tau-tilting infinite.
    """
    if not witness_field.is_finite:
        message = "Brick family witnesses need a finite field."
        raise PreconditionError(message)
    if family.kind not in TAU_INFINITE_FAMILIES:
        message = f"{family} is not a tau-tilting infinite family."
        raise PreconditionError(message)
    base = over_field(bound_quiver=bound_quiver, base_field=witness_field)
    order = witness_field.characteristic
    if family.walk:
        return band_family(
            bound_quiver=base,
            walk=family.walk,
            parameters=list(range(1, order)),
        )
    algebra = build_algebra(bound_quiver=base, max_bound=max_bound)
    e, f = bongartz_pair(algebra=algebra)
    return bongartz_family(
        bound_quiver=base,
        algebra=algebra,
        vertex=e,
        target=f,
        parameters=list(range(order)),
    )


@beartype
def _certificates(
    bound_quiver: BoundQuiver,
    algebra: AlgebraBasis,
) -> tuple[Certificate, ...]:
    """
    The three cross-checkable certificates and the node-free flag.
    """
    sources, sinks = sources_and_sinks(bound_quiver=bound_quiver)
    nodes = find_nodes(bound_quiver=bound_quiver, algebra=algebra).nodes
    _, total = minimal_relation_count(algebra=algebra)
    long_monomials = [
        str(path)
        for path in minimal_generator_monomials(algebra=algebra)
        if path.length > 2  # noqa: PLR2004
    ]
    listed_nodes = ", ".join(nodes) or "none"
    return (
        Certificate(
            name="sink-or-source",
            holds=bool(sources or sinks),
            detail=(
                f"sources: {', '.join(sorted(sources)) or 'none'}; "
                f"sinks: {', '.join(sorted(sinks)) or 'none'}"
            ),
        ),
        Certificate(
            name="node-or-three-relations",
            holds=bool(nodes) or total == 3,  # noqa: PLR2004
            detail=f"nodes: {listed_nodes}; |R| = {total}",
        ),
        Certificate(
            name="node-or-non-quadratic-monomial",
            holds=bool(nodes or long_monomials),
            detail=(
                f"nodes: {listed_nodes}; non-quadratic monomial relations: "
                f"{', '.join(long_monomials) or 'none'}"
            ),
            caveat=MONOMIAL_CAVEAT,
        ),
        Certificate(
            name="node-free",
            holds=not nodes,
            detail=f"nodes: {listed_nodes}",
        ),
    )


@beartype
def _family_certificate(witness: BrickFamily) -> Certificate:
    """
    The brick family behind a tau-tilting infinite verdict.
    """
    details = "; ".join(
        f"{key}: {value}" for key, value in sorted(witness.details.items())
    )
    return Certificate(
        name="brick-family",
        holds=witness.pairwise_non_isomorphic is Ternary.TRUE,
        detail=(
            f"{witness.construction} family of {len(witness.members)} bricks "
            f"with dimension vector {witness.dimension_vector}; {details}"
        ),
    )


@beartype
def decide_tau(
    bound_quiver: BoundQuiver,
    match: ClassificationResult | None = None,
    *,
    max_bound: int = DEFAULT_MAX_BOUND,
    witness_field: Field | None = None,
    probe_budget: int | None = None,
    on_subset: Callable[[tuple[str, ...]], None] | None = None,
    workers: int | None = None,
) -> ClassificationResult:
    """
    Add the tau-tilting verdict, certificates and preprojective flag to a
    match.

    ``A``, ``B``, ``C`` and ``D`` and the band shapes are tau-tilting
    infinite. ``E`` and algebras glued from a single family are
    tau-tilting finite. Anything else is unknown unless the quotient
    probe, run when ``probe_budget`` is given, finds a witness. With
    ``witness_field``, infinite verdicts get a verified brick family over
    that field. ``workers`` is passed on to the probe.
    """
    if match is None:
        match = match_family(bound_quiver=bound_quiver, max_bound=max_bound)
    algebra = build_algebra(bound_quiver=bound_quiver, max_bound=max_bound)
    certificates = [
        *match.certificates,
        *_certificates(bound_quiver=bound_quiver, algebra=algebra),
    ]
    kind = match.family.kind
    witness_source: tuple[BoundQuiver, FamilyTag] | None = None
    if kind in TAU_INFINITE_FAMILIES:
        verdict = TauVerdict.INFINITE
        witness_source = (bound_quiver, match.family)
    elif kind in {FamilyKind.E, FamilyKind.GLUED}:
        verdict = TauVerdict.FINITE
    else:
        verdict = TauVerdict.UNKNOWN
        if probe_budget is not None:
            probe = sufficient_tau_infinite_probe(
                bound_quiver=bound_quiver,
                budget=probe_budget,
                max_bound=max_bound,
                on_subset=on_subset,
                workers=workers,
            )
            if probe is not None:
                verdict = TauVerdict.INFINITE
                witness_source = (probe.component, probe.family)
                certificates.append(
                    Certificate(
                        name="quotient",
                        holds=True,
                        detail=(
                            "arrows killed: "
                            f"{', '.join(probe.arrows) or 'none'}; "
                            f"component {', '.join(probe.component.vertices)} "
                            f"is {probe.family}"
                        ),
                    ),
                )
    witness = None
    if witness_field is not None and witness_source is not None:
        component, family = witness_source
        witness = tau_infinite_witness(
            bound_quiver=component,
            family=family,
            witness_field=witness_field,
            max_bound=max_bound,
        )
        certificates.append(_family_certificate(witness=witness))
    result = replace(
        match,
        tau_verdict=verdict,
        certificates=tuple(certificates),
        witness=witness,
    )
    return replace(
        result,
        preprojective_component=preprojective_flag(result=result),
    )


@beartype
def classify(
    bound_quiver: BoundQuiver,
    *,
    max_bound: int = DEFAULT_MAX_BOUND,
    witness_field: Field | None = None,
    probe_budget: int | None = None,
    on_subset: Callable[[tuple[str, ...]], None] | None = None,
    workers: int | None = None,
) -> ClassificationResult:
    """
    Match the families, try the special biserial shapes when that fails,
    and decide tau-tilting finiteness.
    """
    match = match_family(bound_quiver=bound_quiver, max_bound=max_bound)
    algebra = build_algebra(bound_quiver=bound_quiver, max_bound=max_bound)
    violation = special_biserial_violation(
        bound_quiver=bound_quiver,
        algebra=algebra,
    )
    if violation is None:
        biserial = classify_biserial(
            bound_quiver=bound_quiver,
            max_bound=max_bound,
        )
        if not match.recognized and biserial.recognized:
            match = replace(biserial, tau_verdict=TauVerdict.UNKNOWN)
        else:
            match = replace(
                match,
                certificates=(*match.certificates, *biserial.certificates),
            )
    return decide_tau(
        bound_quiver=bound_quiver,
        match=match,
        max_bound=max_bound,
        witness_field=witness_field,
        probe_budget=probe_budget,
        on_subset=on_subset,
        workers=workers,
    )
