"""
Nodes: finding them, resolving them and gluing a source with a sink.
"""

from collections.abc import Mapping
from dataclasses import dataclass

from beartype import beartype

from ._algebra import DEFAULT_MAX_BOUND, AlgebraBasis, build_algebra
from ._errors import GluingError, NotANodeError
from ._quiver import (
    Arrow,
    BoundQuiver,
    Path,
    Quiver,
    Relation,
    monomial,
    sources_and_sinks,
    weak_components,
)


@beartype
@dataclass(frozen=True)
class NodeReport:
    """
    The nodes of a bound quiver, each with the paths ``beta.alpha`` through
    it, all of which lie in the ideal.
    """

    nodes: tuple[str, ...]
    witnesses: Mapping[str, tuple[Path, ...]]


@beartype
@dataclass(frozen=True)
class ResolutionStep:
    """
    One resolution: ``node`` was split into ``positive`` (a source) and
    ``negative`` (a sink).
    """

    node: str
    positive: str
    negative: str


@beartype
def _through(*, incoming: Arrow, outgoing: Arrow) -> Path:
    """
    The path ``outgoing.incoming``.
    """
    return Path(
        arrows=(outgoing.name, incoming.name),
        source=incoming.source,
        target=outgoing.target,
    )


@beartype
def find_nodes(bound_quiver: BoundQuiver, algebra: AlgebraBasis) -> NodeReport:
    """
    The vertices which are neither sources nor sinks and through which every
    path of length two lies in the ideal.
    """
    quiver = bound_quiver.quiver
    sources, sinks = sources_and_sinks(bound_quiver=bound_quiver)
    nodes: list[str] = []
    witnesses: dict[str, tuple[Path, ...]] = {}
    for vertex in quiver.vertices:
        if vertex in sources or vertex in sinks:
            continue
        paths = tuple(
            _through(incoming=incoming, outgoing=outgoing)
            for incoming in quiver.incoming(vertex=vertex)
            for outgoing in quiver.outgoing(vertex=vertex)
        )
        if all(not algebra.reduce_path(path=path) for path in paths):
            nodes.append(vertex)
            witnesses[vertex] = tuple(
                sorted(paths, key=lambda path: path.sort_key),
            )
    return NodeReport(nodes=tuple(nodes), witnesses=witnesses)


@beartype
def _rebuilt_relation(
    *,
    relation: Relation,
    quiver: Quiver,
    old_quiver: Quiver | None = None,
    node: str | None = None,
) -> Relation | None:
    """
    A relation rewritten over a new quiver with the same arrow ids.

    Terms through ``node`` in ``old_quiver`` are dropped; ``None`` is
    returned when nothing is left.
    """
    terms = tuple(
        (coefficient, quiver.path(arrows=path.arrows))
        for coefficient, path in relation.terms
        if node is None
        or old_quiver is None
        or not path.passes_through(vertex=node, quiver=old_quiver)
    )
    if not terms:
        return None
    return Relation(terms=terms)


@beartype
def resolve_node(
    bound_quiver: BoundQuiver,
    node: str,
    *,
    max_bound: int = DEFAULT_MAX_BOUND,
) -> BoundQuiver:
    """
    Split a node ``x`` into a sink ``x-`` receiving the arrows into ``x`` and
    a source ``x+`` emitting the arrows out of ``x``.

    Relation terms through ``x`` are dropped, which removes the quadratic
    relations ``beta.alpha`` through ``x``. The result may be disconnected.

    Raises:
        NotANodeError: ``node`` is not a node.
        GluingError: ``x+`` or ``x-`` is already a vertex.
    """
    algebra = build_algebra(bound_quiver=bound_quiver, max_bound=max_bound)
    report = find_nodes(bound_quiver=bound_quiver, algebra=algebra)
    if node not in report.nodes:
        message = f"'{node}' is not a node."
        raise NotANodeError(message)

    positive, negative = f"{node}+", f"{node}-"
    old_quiver = bound_quiver.quiver
    for name in (positive, negative):
        if name in old_quiver.vertices:
            message = f"The vertex '{name}' already exists."
            raise GluingError(message)
    quiver = Quiver(
        vertices=(
            *(vertex for vertex in old_quiver.vertices if vertex != node),
            positive,
            negative,
        ),
        arrows=tuple(
            Arrow(
                name=arrow.name,
                source=positive if arrow.source == node else arrow.source,
                target=negative if arrow.target == node else arrow.target,
            )
            for arrow in old_quiver.arrows
        ),
    )
    relations = tuple(
        rebuilt
        for relation in bound_quiver.relations
        if (
            rebuilt := _rebuilt_relation(
                relation=relation,
                quiver=quiver,
                old_quiver=old_quiver,
                node=node,
            )
        )
        is not None
    )
    resolved = BoundQuiver(
        quiver=quiver,
        relations=relations,
        field=bound_quiver.field,
    )
    build_algebra(bound_quiver=resolved, max_bound=max_bound)
    return resolved


@beartype
def is_cross_component_gluing(
    bound_quiver: BoundQuiver,
    source: str,
    sink: str,
) -> bool:
    """
    Whether the source and the sink lie in different connected components.
    """
    for component in weak_components(bound_quiver=bound_quiver):
        members = set(component.vertices)
        if source in members:
            return sink not in members
    message = f"Unknown vertex '{source}'."
    raise GluingError(message)


@beartype
def glue(
    bound_quiver: BoundQuiver,
    source: str,
    sink: str,
    *,
    name: str | None = None,
) -> BoundQuiver:
    """
    Identify a source with a sink and add every path ``beta.alpha`` through
    the new vertex as a relation.

    The new vertex is called ``name``, by default the source id followed by
    the sink id.

    Raises:
        GluingError: ``source`` is not a source, ``sink`` is not a sink, they
            coincide, or ``name`` is already taken.
    """
    old_quiver = bound_quiver.quiver
    sources, sinks = sources_and_sinks(bound_quiver=bound_quiver)
    if source == sink:
        message = "A vertex cannot be glued to itself."
        raise GluingError(message)
    if source not in sources:
        message = f"'{source}' is not a source."
        raise GluingError(message)
    if sink not in sinks:
        message = f"'{sink}' is not a sink."
        raise GluingError(message)
    merged = f"{source}{sink}" if name is None else name
    if merged in old_quiver.vertices and merged not in {source, sink}:
        message = f"The vertex '{merged}' already exists."
        raise GluingError(message)

    def rename(vertex: str) -> str:
        return merged if vertex in {source, sink} else vertex

    quiver = Quiver(
        vertices=tuple(
            {rename(vertex=vertex) for vertex in old_quiver.vertices},
        ),
        arrows=tuple(
            Arrow(
                name=arrow.name,
                source=rename(vertex=arrow.source),
                target=rename(vertex=arrow.target),
            )
            for arrow in old_quiver.arrows
        ),
    )
    relations: list[Relation] = []
    for relation in bound_quiver.relations:
        rebuilt = _rebuilt_relation(relation=relation, quiver=quiver)
        if rebuilt is not None:
            relations.append(rebuilt)
    relations.extend(
        monomial(
            path=quiver.path(arrows=(outgoing.name, incoming.name)),
        )
        for incoming in old_quiver.incoming(vertex=sink)
        for outgoing in old_quiver.outgoing(vertex=source)
    )
    return BoundQuiver(
        quiver=quiver,
        relations=tuple(relations),
        field=bound_quiver.field,
    )


@beartype
def resolve_all(
    bound_quiver: BoundQuiver,
    *,
    max_bound: int = DEFAULT_MAX_BOUND,
) -> tuple[BoundQuiver, tuple[ResolutionStep, ...]]:
    """
    Resolve nodes, smallest id first, until none is left.
    """
    current = bound_quiver
    log: list[ResolutionStep] = []
    while True:
        algebra = build_algebra(bound_quiver=current, max_bound=max_bound)
        report = find_nodes(bound_quiver=current, algebra=algebra)
        if not report.nodes:
            return current, tuple(log)
        node = min(report.nodes)
        current = resolve_node(
            bound_quiver=current,
            node=node,
            max_bound=max_bound,
        )
        log.append(
            ResolutionStep(
                node=node,
                positive=f"{node}+",
                negative=f"{node}-",
            ),
        )
