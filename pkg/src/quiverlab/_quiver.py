"""
Quivers, paths, relations and the ``.bq`` text format.

Paths compose right to left: the path ``b.a`` first follows ``a`` and then
``b``.
"""

import re
from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NoReturn

import networkx as nx
from beartype import beartype

from ._errors import (
    BoundQuiverSyntaxError,
    DisconnectedQuiverError,
    InvalidQuiverError,
    NonUniformRelationError,
    ShortPathError,
    UnknownIdentifierError,
)
from ._fields import RATIONALS, Field, parse_field

ARROW_ID_PATTERN = r"[A-Za-z_][A-Za-z0-9_']*"
VERTEX_ID_PATTERN = r"[A-Za-z0-9_][A-Za-z0-9_'+\-]*"

_ARROW_ID = re.compile(pattern=rf"^{ARROW_ID_PATTERN}$")
_VERTEX_ID = re.compile(pattern=rf"^{VERTEX_ID_PATTERN}$")
_ARROW_LINE = re.compile(
    pattern=(
        r"^arrow\s+(?P<name>\S+?)\s*:\s*"
        r"(?P<source>[^\s:]+?)\s*->\s*(?P<target>\S+)\s*$"
    ),
)
_TOKEN = re.compile(
    pattern=(
        r"\s*(?:(?P<number>[0-9]+(?:/[0-9]+)?)"
        rf"|(?P<arrow>{ARROW_ID_PATTERN})"
        r"|(?P<operator>[-+*.]))"
    ),
)


@beartype
@dataclass(frozen=True)
class Arrow:
    """
    An arrow ``name: source -> target``.
    """

    name: str
    source: str
    target: str


@beartype
@dataclass(frozen=True)
class Path:
    """
    A path in a quiver.

    ``arrows`` is written right to left, so ``("b", "a")`` is ``b.a``: first
    ``a``, then ``b``. The trivial path at a vertex has no arrows.
    """

    arrows: tuple[str, ...]
    source: str
    target: str

    def __post_init__(self) -> None:
        """
        Check that a trivial path starts where it ends.
        """
        if not self.arrows and self.source != self.target:
            message = "A trivial path must start where it ends."
            raise ValueError(message)

    @classmethod
    def trivial(cls, vertex: str) -> "Path":
        """
        The trivial path ``e_x`` at a vertex.
        """
        return cls(arrows=(), source=vertex, target=vertex)

    @property
    def length(self) -> int:
        """
        The number of arrows.
        """
        return len(self.arrows)

    @property
    def sort_key(self) -> tuple[int, tuple[str, ...], str, str]:
        """
        Length first, then lexicographic on arrow ids.
        """
        return (self.length, self.arrows, self.source, self.target)

    def after(self, other: "Path") -> "Path":
        """
        The composite ``self . other``: first ``other``, then ``self``.

        Raises:
            ValueError: ``other`` does not end where ``self`` starts.
        """
        if other.target != self.source:
            message = f"{self} cannot follow {other}."
            raise ValueError(message)
        return Path(
            arrows=self.arrows + other.arrows,
            source=other.source,
            target=self.target,
        )

    def passes_through(self, vertex: str, quiver: "Quiver") -> bool:
        """
        Whether the path visits the vertex strictly between its ends.
        """
        return any(
            quiver.arrow(name=name).target == vertex
            for name in self.arrows[1:]
        )

    def __str__(self) -> str:
        """
        ``b.a`` for paths of positive length, ``e_x`` for trivial paths.
        """
        if not self.arrows:
            return f"e_{self.source}"
        return ".".join(self.arrows)


@beartype
@dataclass(frozen=True)
class Quiver:
    """
    A finite quiver.

    Vertices are kept sorted; arrows keep their declaration order.
    """

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    _arrows_by_name: Mapping[str, Arrow] = field(
        init=False,
        repr=False,
        compare=False,
    )

    def __post_init__(self) -> None:
        """
        Check identifiers and arrow endpoints.
        """
        if len(set(self.vertices)) != len(self.vertices):
            message = "Vertex ids must be unique."
            raise InvalidQuiverError(message)
        if tuple(sorted(self.vertices)) != self.vertices:
            object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        arrows_by_name: dict[str, Arrow] = {}
        declared = set(self.vertices)
        for arrow in self.arrows:
            if arrow.name in arrows_by_name:
                message = f"Arrow id '{arrow.name}' is used twice."
                raise InvalidQuiverError(message)
            for endpoint in (arrow.source, arrow.target):
                if endpoint not in declared:
                    message = (
                        f"Arrow '{arrow.name}' uses the undeclared vertex "
                        f"'{endpoint}'."
                    )
                    raise UnknownIdentifierError(message)
            arrows_by_name[arrow.name] = arrow
        object.__setattr__(self, "_arrows_by_name", arrows_by_name)

    def arrow(self, name: str) -> Arrow:
        """
        The arrow with the given id.

        Raises:
            UnknownIdentifierError: There is no such arrow.
        """
        try:
            return self._arrows_by_name[name]
        except KeyError:
            message = f"Unknown arrow '{name}'."
            raise UnknownIdentifierError(message) from None

    def has_arrow(self, name: str) -> bool:
        """
        Whether an arrow with the given id exists.
        """
        return name in self._arrows_by_name

    def incoming(self, vertex: str) -> tuple[Arrow, ...]:
        """
        The arrows ending at a vertex, loops included.
        """
        return tuple(arrow for arrow in self.arrows if arrow.target == vertex)

    def outgoing(self, vertex: str) -> tuple[Arrow, ...]:
        """
        The arrows starting at a vertex, loops included.
        """
        return tuple(arrow for arrow in self.arrows if arrow.source == vertex)

    def path(self, arrows: Sequence[str]) -> Path:
        """
        The path through the given arrows, written right to left.

        Raises:
            ValueError: The arrows do not compose or the sequence is empty.
        """
        if not arrows:
            message = "Use Path.trivial for trivial paths."
            raise ValueError(message)
        resolved = [self.arrow(name=name) for name in arrows]
        for later, earlier in zip(resolved, resolved[1:], strict=False):
            if earlier.target != later.source:
                message = f"'{later.name}' cannot follow '{earlier.name}'."
                raise ValueError(message)
        return Path(
            arrows=tuple(arrows),
            source=resolved[-1].source,
            target=resolved[0].target,
        )

    def subpaths(self, path: Path) -> tuple[Path, ...]:
        """
        The sub-paths obtained by dropping the first or the last arrow.
        """
        if path.length == 0:
            return ()
        if path.length == 1:
            return (
                Path.trivial(vertex=path.source),
                Path.trivial(vertex=path.target),
            )
        return (
            self.path(arrows=path.arrows[:-1]),
            self.path(arrows=path.arrows[1:]),
        )

    def multigraph(self) -> nx.MultiDiGraph:
        """
        The quiver as a ``networkx`` multigraph keyed by arrow id.
        """
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for arrow in self.arrows:
            graph.add_edge(arrow.source, arrow.target, key=arrow.name)
        return graph

    @property
    def is_connected(self) -> bool:
        """
        Whether the underlying undirected graph is connected.
        """
        return nx.is_weakly_connected(self.multigraph())

    def restrict(self, vertices: Iterable[str]) -> "Quiver":
        """
        The full subquiver on the given vertices.
        """
        kept = set(vertices)
        return Quiver(
            vertices=tuple(sorted(kept)),
            arrows=tuple(
                arrow
                for arrow in self.arrows
                if arrow.source in kept and arrow.target in kept
            ),
        )


Term = tuple[Fraction, Path]


@beartype
@dataclass(frozen=True)
class Relation:
    """
    A uniform relation: a nonzero combination of distinct parallel paths of
    length at least two.

    Terms are kept in path order.
    """

    terms: tuple[Term, ...]

    def __post_init__(self) -> None:
        """
        Check uniformity, path lengths and coefficients.
        """
        if not self.terms:
            message = "A relation needs at least one term."
            raise ValueError(message)
        endpoints = {(path.source, path.target) for _, path in self.terms}
        if len(endpoints) != 1:
            message = "The paths of a relation must be parallel."
            raise NonUniformRelationError(message)
        for coefficient, path in self.terms:
            if path.length < 2:  # noqa: PLR2004
                message = (
                    f"The path '{path}' of a relation has length less than "
                    "two."
                )
                raise ShortPathError(message)
            if coefficient == 0:
                message = "Relation coefficients must be nonzero."
                raise ValueError(message)
        paths = [path for _, path in self.terms]
        if len(set(paths)) != len(paths):
            message = "The paths of a relation must be distinct."
            raise ValueError(message)
        ordered = tuple(sorted(self.terms, key=lambda term: term[1].sort_key))
        object.__setattr__(self, "terms", ordered)

    @property
    def source(self) -> str:
        """
        The common source of the paths.
        """
        return self.terms[0][1].source

    @property
    def target(self) -> str:
        """
        The common target of the paths.
        """
        return self.terms[0][1].target

    @property
    def paths(self) -> tuple[Path, ...]:
        """
        The paths of the terms.
        """
        return tuple(path for _, path in self.terms)

    @property
    def is_monomial(self) -> bool:
        """
        Whether the relation is a single path.
        """
        return len(self.terms) == 1

    def __str__(self) -> str:
        """
        The relation as written in ``.bq`` documents.
        """
        parts: list[str] = []
        for index, (coefficient, path) in enumerate(self.terms):
            magnitude = abs(coefficient)
            written = str(path) if magnitude == 1 else f"{magnitude}*{path}"
            if index == 0:
                parts.append(f"-{written}" if coefficient < 0 else written)
            else:
                sign = "-" if coefficient < 0 else "+"
                parts.append(f"{sign} {written}")
        return " ".join(parts)


@beartype
def monomial(path: Path) -> Relation:
    """
    The relation given by a single path.
    """
    return Relation(terms=((Fraction(1), path),))


@beartype
@dataclass(frozen=True)
class BoundQuiver:
    """
    A quiver with generating relations of an ideal, over a base field.
    """

    quiver: Quiver
    relations: tuple[Relation, ...]
    field: Field = RATIONALS

    def __post_init__(self) -> None:
        """
        Check that every relation is made of paths of the quiver.
        """
        for relation in self.relations:
            for path in relation.paths:
                rebuilt = self.quiver.path(arrows=path.arrows)
                if rebuilt != path:
                    message = f"'{path}' has wrong endpoints."
                    raise InvalidQuiverError(message)

    @property
    def vertices(self) -> tuple[str, ...]:
        """
        The sorted vertex ids.
        """
        return self.quiver.vertices


@beartype
def _syntax_error(*, message: str, line: int, column: int) -> NoReturn:
    """
    Raise a syntax error at a position.
    """
    raise BoundQuiverSyntaxError(message=message, line=line, column=column)


@beartype
def _tokenize(
    *,
    expression: str,
    line: int,
    offset: int,
) -> list[tuple[str, str, int]]:
    """
    Split a relation expression into (kind, text, column) tokens.
    """
    tokens: list[tuple[str, str, int]] = []
    position = 0
    stripped = expression.rstrip()
    while position < len(stripped):
        match = _TOKEN.match(string=stripped, pos=position)
        if match is None or match.end() == position:
            column = offset + position + 1
            while column - offset - 1 < len(stripped) and stripped[
                column - offset - 1
            ].isspace():
                column += 1
            _syntax_error(
                message="Unexpected character.",
                line=line,
                column=column,
            )
        kind, text = next(
            (name, value)
            for name, value in match.groupdict().items()
            if value is not None
        )
        tokens.append((kind, text, offset + match.start(kind) + 1))
        position = match.end()
    return tokens


@beartype
def _parse_relation(
    *,
    expression: str,
    line: int,
    offset: int,
    quiver: Quiver,
    base_field: Field,
) -> Relation:
    """
    Parse ``2*g3.g2.g1 - beta.alpha`` into a relation.
    """
    tokens = _tokenize(expression=expression, line=line, offset=offset)
    end_column = offset + len(expression.rstrip()) + 1
    index = 0
    coefficients: dict[Path, Fraction] = defaultdict(Fraction)
    term_columns: dict[Path, int] = {}

    def peek() -> tuple[str, str, int] | None:
        return tokens[index] if index < len(tokens) else None

    if not tokens:
        _syntax_error(
            message="Empty relation.",
            line=line,
            column=end_column,
        )

    first = True
    while index < len(tokens):
        sign = Fraction(1)
        token: tuple[str, str, int] | None = tokens[index]
        if token[0] == "operator" and token[1] in "+-":
            sign = Fraction(-1) if token[1] == "-" else Fraction(1)
            index += 1
        elif not first:
            _syntax_error(
                message="Expected '+' or '-'.",
                line=line,
                column=token[2],
            )
        first = False
        token = peek()
        if token is None:
            _syntax_error(
                message="Expected a term.",
                line=line,
                column=end_column,
            )
        term_column = token[2]
        coefficient = Fraction(1)
        if token[0] == "number":
            numerator, _, denominator = token[1].partition("/")
            if denominator and int(denominator) == 0:
                _syntax_error(
                    message="Zero denominator.",
                    line=line,
                    column=token[2],
                )
            coefficient = Fraction(int(numerator), int(denominator or "1"))
            index += 1
            star = peek()
            if star is None or star[1] != "*":
                _syntax_error(
                    message="Expected '*' after a coefficient.",
                    line=line,
                    column=end_column if star is None else star[2],
                )
            index += 1
        names: list[str] = []
        while True:
            token = peek()
            if token is None or token[0] != "arrow":
                _syntax_error(
                    message="Expected an arrow id.",
                    line=line,
                    column=end_column if token is None else token[2],
                )
            if not quiver.has_arrow(name=token[1]):
                message = (
                    f"line {line}, column {token[2]}: unknown arrow "
                    f"'{token[1]}'."
                )
                raise UnknownIdentifierError(message)
            names.append(token[1])
            index += 1
            dot = peek()
            if dot is None or dot[1] != ".":
                break
            index += 1
        try:
            path = quiver.path(arrows=names)
        except ValueError as exc:
            _syntax_error(message=str(exc), line=line, column=term_column)
        coefficients[path] += sign * coefficient
        term_columns.setdefault(path, term_column)

    endpoints = {(path.source, path.target) for path in coefficients}
    if len(endpoints) > 1:
        message = (
            f"line {line}: the paths of the relation do not share a source "
            "and a target."
        )
        raise NonUniformRelationError(message)
    for path, column in term_columns.items():
        if path.length < 2:  # noqa: PLR2004
            message = (
                f"line {line}, column {column}: the path '{path}' has length "
                "less than two."
            )
            raise ShortPathError(message)

    terms: list[Term] = []
    for path, coefficient in coefficients.items():
        try:
            normalized = base_field.to_fraction(
                element=base_field.scalar(value=coefficient),
            )
        except ZeroDivisionError as exc:
            _syntax_error(
                message=str(exc),
                line=line,
                column=term_columns[path],
            )
        if normalized != 0:
            terms.append((normalized, path))
    if not terms:
        _syntax_error(
            message="The relation vanishes.",
            line=line,
            column=offset + 1,
        )
    return Relation(terms=tuple(terms))


@beartype
def parse_bound_quiver(
    text: str,
    *,
    allow_disconnected: bool = False,
) -> BoundQuiver:
    """
    Parse a ``.bq`` document.

    Declarations may come in any order; ``#`` starts a comment.

    Raises:
        BoundQuiverSyntaxError: A line cannot be read.
        UnknownIdentifierError: An undeclared vertex or arrow is used.
        InvalidQuiverError: An identifier is declared twice.
        NonUniformRelationError: A relation mixes endpoints.
        ShortPathError: A relation has a path of length less than two.
        DisconnectedQuiverError: The quiver is disconnected and
            ``allow_disconnected`` is not set.
    """
    vertices: dict[str, int] = {}
    arrows: list[Arrow] = []
    relation_lines: list[tuple[int, int, str]] = []
    endpoint_positions: list[tuple[str, int, int]] = []
    base_field: Field | None = None

    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split(sep="#", maxsplit=1)[0].rstrip()
        content = line.lstrip()
        if not content:
            continue
        indent = len(line) - len(content)
        keyword = content.split(maxsplit=1)[0]
        rest_offset = indent + len(keyword)
        rest = content[len(keyword) :]
        if keyword == "vertex":
            for match in re.finditer(pattern=r"\S+", string=rest):
                vertex = match.group()
                column = rest_offset + match.start() + 1
                if not _VERTEX_ID.match(string=vertex):
                    _syntax_error(
                        message=f"'{vertex}' is not a vertex id.",
                        line=line_number,
                        column=column,
                    )
                if vertex in vertices:
                    message = (
                        f"line {line_number}, column {column}: vertex "
                        f"'{vertex}' is declared twice."
                    )
                    raise InvalidQuiverError(message)
                vertices[vertex] = line_number
        elif keyword == "arrow":
            match = _ARROW_LINE.match(string=content)
            if match is None:
                _syntax_error(
                    message="Expected 'arrow <id> : <source> -> <target>'.",
                    line=line_number,
                    column=indent + 1,
                )
            if not _ARROW_ID.match(string=match.group("name")):
                _syntax_error(
                    message=f"'{match.group('name')}' is not an arrow id.",
                    line=line_number,
                    column=indent + match.start("name") + 1,
                )
            arrows.append(
                Arrow(
                    name=match.group("name"),
                    source=match.group("source"),
                    target=match.group("target"),
                ),
            )
            endpoint_positions.extend(
                (match.group(group), line_number, indent + match.start(group))
                for group in ("source", "target")
            )
        elif keyword == "rel":
            relation_lines.append((line_number, rest_offset, rest))
        elif keyword == "field":
            if base_field is not None:
                _syntax_error(
                    message="The field is declared twice.",
                    line=line_number,
                    column=indent + 1,
                )
            try:
                base_field = parse_field(text=rest)
            except ValueError as exc:
                _syntax_error(
                    message=str(exc),
                    line=line_number,
                    column=rest_offset + 2,
                )
        else:
            _syntax_error(
                message=f"Unknown declaration '{keyword}'.",
                line=line_number,
                column=indent + 1,
            )

    if not vertices:
        message = "A bound quiver needs at least one vertex."
        raise InvalidQuiverError(message)
    for vertex, line_number, column in endpoint_positions:
        if vertex not in vertices:
            message = (
                f"line {line_number}, column {column + 1}: unknown vertex "
                f"'{vertex}'."
            )
            raise UnknownIdentifierError(message)

    quiver = Quiver(vertices=tuple(vertices), arrows=tuple(arrows))
    base_field = base_field or RATIONALS
    relations = tuple(
        _parse_relation(
            expression=expression,
            line=line_number,
            offset=offset,
            quiver=quiver,
            base_field=base_field,
        )
        for line_number, offset, expression in relation_lines
    )
    if not allow_disconnected and not quiver.is_connected:
        message = "The quiver is not connected."
        raise DisconnectedQuiverError(message)
    return BoundQuiver(quiver=quiver, relations=relations, field=base_field)


@beartype
def serialize_bound_quiver(bound_quiver: BoundQuiver) -> str:
    """
    Write a bound quiver as a ``.bq`` document.
    """
    lines = [
        f"field {bound_quiver.field.name}",
        "vertex " + " ".join(bound_quiver.vertices),
    ]
    lines.extend(
        f"arrow {arrow.name} : {arrow.source} -> {arrow.target}"
        for arrow in bound_quiver.quiver.arrows
    )
    lines.extend(f"rel {relation}" for relation in bound_quiver.relations)
    return "\n".join(lines) + "\n"


@beartype
def enumerate_paths(
    quiver: Quiver,
    source: str,
    target: str,
    max_len: int,
) -> list[Path]:
    """
    All paths from ``source`` to ``target`` of length at most ``max_len``, in
    length-then-lexicographic order.
    """
    return [
        path
        for path in all_paths(quiver=quiver, max_len=max_len, source=source)
        if path.target == target
    ]


@beartype
def all_paths(
    *,
    quiver: Quiver,
    max_len: int,
    source: str | None = None,
    limit: int | None = None,
) -> list[Path]:
    """
    All paths of length at most ``max_len`` (from ``source`` if given), in
    length-then-lexicographic order.

    Raises:
        OverflowError: More than ``limit`` paths exist.
    """
    starts = quiver.vertices if source is None else (source,)
    layer = [Path.trivial(vertex=vertex) for vertex in starts]
    paths = list(layer)
    outgoing = {vertex: quiver.outgoing(vertex=vertex) for vertex in starts}
    for vertex in quiver.vertices:
        outgoing.setdefault(vertex, quiver.outgoing(vertex=vertex))
    for _ in range(max_len):
        layer = [
            Path(
                arrows=(arrow.name, *path.arrows),
                source=path.source,
                target=arrow.target,
            )
            for path in layer
            for arrow in outgoing[path.target]
        ]
        if not layer:
            break
        paths.extend(layer)
        if limit is not None and len(paths) > limit:
            message = f"More than {limit} paths."
            raise OverflowError(message)
    return sorted(paths, key=lambda path: path.sort_key)


@beartype
def sources_and_sinks(
    bound_quiver: BoundQuiver,
) -> tuple[frozenset[str], frozenset[str]]:
    """
    The vertices without incoming arrows and those without outgoing arrows.
    """
    quiver = bound_quiver.quiver
    sources = frozenset(
        vertex
        for vertex in quiver.vertices
        if not quiver.incoming(vertex=vertex)
    )
    sinks = frozenset(
        vertex
        for vertex in quiver.vertices
        if not quiver.outgoing(vertex=vertex)
    )
    return sources, sinks


@beartype
def is_triangular(quiver: Quiver) -> bool:
    """
    Whether the quiver has no oriented cycles, loops included.
    """
    return nx.is_directed_acyclic_graph(quiver.multigraph())


@beartype
def weak_components(bound_quiver: BoundQuiver) -> tuple[BoundQuiver, ...]:
    """
    The connected components, each with the relations living on it.
    """
    graph = bound_quiver.quiver.multigraph()
    components = sorted(
        (
            sorted(component)
            for component in nx.weakly_connected_components(graph)
        ),
        key=lambda component: component[0],
    )
    result: list[BoundQuiver] = []
    for component in components:
        members = set(component)
        result.append(
            BoundQuiver(
                quiver=bound_quiver.quiver.restrict(vertices=members),
                relations=tuple(
                    relation
                    for relation in bound_quiver.relations
                    if relation.source in members
                ),
                field=bound_quiver.field,
            ),
        )
    return tuple(result)


@beartype
def delete_arrows(
    bound_quiver: BoundQuiver,
    arrows: Iterable[str],
) -> BoundQuiver:
    """
    The quotient by the ideal generated by some arrows.

    The arrows are removed, relation terms through them are dropped and
    relations left without terms are dropped.
    """
    removed = set(arrows)
    for name in removed:
        bound_quiver.quiver.arrow(name=name)
    quiver = Quiver(
        vertices=bound_quiver.vertices,
        arrows=tuple(
            arrow
            for arrow in bound_quiver.quiver.arrows
            if arrow.name not in removed
        ),
    )
    relations: list[Relation] = []
    for relation in bound_quiver.relations:
        terms = tuple(
            (coefficient, path)
            for coefficient, path in relation.terms
            if not removed.intersection(path.arrows)
        )
        if terms:
            relations.append(Relation(terms=terms))
    return BoundQuiver(
        quiver=quiver,
        relations=tuple(relations),
        field=bound_quiver.field,
    )


@beartype
def relabel(
    bound_quiver: BoundQuiver,
    *,
    vertices: Mapping[str, str],
    arrows: Mapping[str, str],
) -> BoundQuiver:
    """
    Rename vertices and arrows; ids missing from a mapping are kept.
    """
    quiver = Quiver(
        vertices=tuple(
            vertices.get(vertex, vertex) for vertex in bound_quiver.vertices
        ),
        arrows=tuple(
            Arrow(
                name=arrows.get(arrow.name, arrow.name),
                source=vertices.get(arrow.source, arrow.source),
                target=vertices.get(arrow.target, arrow.target),
            )
            for arrow in bound_quiver.quiver.arrows
        ),
    )
    relations = tuple(
        Relation(
            terms=tuple(
                (
                    coefficient,
                    quiver.path(
                        arrows=[
                            arrows.get(name, name) for name in path.arrows
                        ],
                    ),
                )
                for coefficient, path in relation.terms
            ),
        )
        for relation in bound_quiver.relations
    )
    return BoundQuiver(
        quiver=quiver,
        relations=relations,
        field=bound_quiver.field,
    )


@beartype
def over_field(bound_quiver: BoundQuiver, base_field: Field) -> BoundQuiver:
    """
    The same quiver and relations over another field.

    Terms whose coefficient vanishes in the new field are dropped, and so
    are relations left without terms.

    Raises:
        ZeroDivisionError: A coefficient has no image in the new field.
    """
    relations: list[Relation] = []
    for relation in bound_quiver.relations:
        terms = tuple(
            (coefficient, path)
            for coefficient, path in relation.terms
            if base_field.scalar(value=coefficient)
        )
        if terms:
            relations.append(Relation(terms=terms))
    return BoundQuiver(
        quiver=bound_quiver.quiver,
        relations=tuple(relations),
        field=base_field,
    )
