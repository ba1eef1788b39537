"""
Tests for quivers, paths and the ``.bq`` format.
"""

import textwrap
from fractions import Fraction

import pytest

from quiverlab import (
    RATIONALS,
    Arrow,
    BoundQuiver,
    BoundQuiverSyntaxError,
    DisconnectedQuiverError,
    Field,
    InvalidQuiverError,
    NonUniformRelationError,
    Quiver,
    QuiverPath,
    ShortPathError,
    UnknownIdentifierError,
    all_paths,
    delete_arrows,
    enumerate_paths,
    family_a,
    family_c,
    is_triangular,
    over_field,
    parse_bound_quiver,
    relabel,
    serialize_bound_quiver,
    sources_and_sinks,
    weak_components,
)

KRONECKER = """\
vertex a z
arrow alpha : a -> z
arrow beta : a -> z
"""

C1 = """\
vertex a m z
arrow alpha : a -> m
arrow rho : m -> m
arrow beta : m -> z
rel rho.rho
"""


def test_single_vertex() -> None:
    """
    A single vertex is a valid bound quiver.
    """
    bound_quiver = parse_bound_quiver(text="vertex x\n")
    assert bound_quiver.vertices == ("x",)
    assert bound_quiver.quiver.arrows == ()
    assert bound_quiver.relations == ()
    assert bound_quiver.field == RATIONALS


def test_kronecker() -> None:
    """
    Declarations are read into vertices and arrows.
    """
    bound_quiver = parse_bound_quiver(text=KRONECKER)
    assert bound_quiver.vertices == ("a", "z")
    assert bound_quiver.quiver.arrows == (
        Arrow(name="alpha", source="a", target="z"),
        Arrow(name="beta", source="a", target="z"),
    )


def test_comments_and_order() -> None:
    """
    Comments and blank lines are ignored and declarations may come in any
    order.
    """
    text = textwrap.dedent(
        text="""\
        # A relation before the arrows it uses.
        rel rho.rho  # squares to zero

        arrow rho : m -> m
        vertex m
        """,
    )
    bound_quiver = parse_bound_quiver(text=text)
    assert [str(relation) for relation in bound_quiver.relations] == [
        "rho.rho",
    ]


def test_vertices_sorted() -> None:
    """
    Vertex ids are kept in sorted order.
    """
    bound_quiver = parse_bound_quiver(
        text="vertex z m a\narrow x : a -> m\narrow y : m -> z\n",
    )
    assert bound_quiver.vertices == ("a", "m", "z")


def test_coefficients_normalized() -> None:
    """
    Coefficients are reduced into the declared field.
    """
    text = textwrap.dedent(
        text="""\
        field F3
        vertex a m z
        arrow alpha : a -> m
        arrow beta : m -> z
        arrow gamma : a -> m
        arrow delta : m -> z
        rel 4*delta.gamma - beta.alpha
        """,
    )
    bound_quiver = parse_bound_quiver(text=text)
    assert bound_quiver.field == Field(characteristic=3)
    (relation,) = bound_quiver.relations
    assert [
        (coefficient, str(path)) for coefficient, path in relation.terms
    ] == [(Fraction(2), "beta.alpha"), (Fraction(1), "delta.gamma")]


def test_fraction_coefficients() -> None:
    """
    Coefficients may be fractions over the rationals.
    """
    text = textwrap.dedent(
        text="""\
        vertex a m z
        arrow alpha : a -> m
        arrow beta : m -> z
        arrow gamma : a -> m
        arrow delta : m -> z
        rel 1/2*delta.gamma + 3*beta.alpha
        """,
    )
    (relation,) = parse_bound_quiver(text=text).relations
    assert str(relation) == "3*beta.alpha + 1/2*delta.gamma"


def test_relation_vanishes() -> None:
    """
    A relation whose coefficients all vanish in the field is an error.
    """
    text = KRONECKER.replace("vertex a z", "field F3\nvertex a m z")
    text += "arrow gamma : z -> m\nrel 3*gamma.alpha\n"
    with pytest.raises(
        expected_exception=BoundQuiverSyntaxError,
        match="The relation vanishes",
    ):
        parse_bound_quiver(text=text)


def test_non_uniform_relation() -> None:
    """
    The paths of a relation must share their endpoints.
    """
    text = C1 + "rel beta.alpha + rho.alpha\n"
    with pytest.raises(expected_exception=NonUniformRelationError):
        parse_bound_quiver(text=text)


def test_short_path() -> None:
    """
    Relations may not contain arrows on their own.
    """
    with pytest.raises(expected_exception=ShortPathError):
        parse_bound_quiver(text=KRONECKER + "rel alpha\n")


def test_unknown_arrow() -> None:
    """
    Relations may only use declared arrows.
    """
    with pytest.raises(
        expected_exception=UnknownIdentifierError,
        match="line 4, column 5: unknown arrow 'gamma'",
    ):
        parse_bound_quiver(text=KRONECKER + "rel gamma.alpha\n")


def test_unknown_vertex() -> None:
    """
    Arrows may only use declared vertices.
    """
    with pytest.raises(
        expected_exception=UnknownIdentifierError,
        match="unknown vertex 'q'",
    ):
        parse_bound_quiver(text=KRONECKER + "arrow gamma : z -> q\n")


def test_duplicate_vertex() -> None:
    """
    A vertex may only be declared once.
    """
    with pytest.raises(expected_exception=InvalidQuiverError):
        parse_bound_quiver(text="vertex a a\n")


def test_duplicate_arrow() -> None:
    """
    An arrow id may only be used once.
    """
    with pytest.raises(expected_exception=InvalidQuiverError):
        parse_bound_quiver(text=KRONECKER + "arrow alpha : a -> z\n")


def test_syntax_error_position() -> None:
    """
    Syntax errors name the line and column.
    """
    with pytest.raises(expected_exception=BoundQuiverSyntaxError) as exc:
        parse_bound_quiver(text=KRONECKER + "edge a\n")
    assert exc.value.line == 4
    assert exc.value.column == 1


def test_composable_relation_paths() -> None:
    """
    The arrows of a relation path must compose.
    """
    with pytest.raises(expected_exception=BoundQuiverSyntaxError):
        parse_bound_quiver(text=KRONECKER + "rel beta.alpha\n")


def test_disconnected() -> None:
    """
    Disconnected quivers are rejected unless explicitly allowed.
    """
    text = "vertex a b\n"
    with pytest.raises(expected_exception=DisconnectedQuiverError):
        parse_bound_quiver(text=text)
    bound_quiver = parse_bound_quiver(text=text, allow_disconnected=True)
    assert not bound_quiver.quiver.is_connected


def test_serialize_parses_back() -> None:
    """
    A serialized bound quiver parses to an equal one.
    """
    bound_quiver = family_c(p=2, base_field=Field(characteristic=5))
    text = serialize_bound_quiver(bound_quiver=bound_quiver)
    assert text.startswith("field F5\nvertex a c1 m z\n")
    assert parse_bound_quiver(text=text) == bound_quiver


def test_path_composition() -> None:
    """
    Paths are written right to left.
    """
    quiver = parse_bound_quiver(text=C1).quiver
    path = quiver.path(arrows=("beta", "rho", "alpha"))
    assert (path.source, path.target, path.length) == ("a", "z", 3)
    assert str(path) == "beta.rho.alpha"
    assert str(QuiverPath.trivial(vertex="m")) == "e_m"
    with pytest.raises(expected_exception=ValueError):
        quiver.path(arrows=("alpha", "beta"))


@pytest.mark.parametrize(
    argnames=("text", "source", "target", "expected"),
    argvalues=[
        (KRONECKER, "a", "z", ["alpha", "beta"]),
        (
            "vertex x\narrow rho : x -> x\n",
            "x",
            "x",
            ["e_x", "rho", "rho.rho"],
        ),
        (C1, "a", "z", ["beta.alpha", "beta.rho.alpha"]),
    ],
)
def test_enumerate_paths(
    text: str,
    source: str,
    target: str,
    expected: list[str],
) -> None:
    """
    Paths are listed by length and then lexicographically.
    """
    quiver = parse_bound_quiver(text=text).quiver
    paths = enumerate_paths(
        quiver=quiver,
        source=source,
        target=target,
        max_len=3 if source != target else 2,
    )
    assert [str(path) for path in paths] == expected


def test_all_paths_limit() -> None:
    """
    Too many paths are reported as an overflow.
    """
    quiver = parse_bound_quiver(text="vertex x\narrow rho : x -> x\n").quiver
    with pytest.raises(expected_exception=OverflowError):
        all_paths(quiver=quiver, max_len=10, limit=5)


@pytest.mark.parametrize(
    argnames=("text", "expected_sources", "expected_sinks"),
    argvalues=[
        (KRONECKER, {"a"}, {"z"}),
        (
            "vertex x\narrow rho : x -> x\narrow sigma : x -> x\n",
            set(),
            set(),
        ),
        ("vertex x\n", {"x"}, {"x"}),
    ],
)
def test_sources_and_sinks(
    text: str,
    expected_sources: set[str],
    expected_sinks: set[str],
) -> None:
    """
    Sources have no incoming arrows and sinks no outgoing arrows.
    """
    sources, sinks = sources_and_sinks(
        bound_quiver=parse_bound_quiver(text=text),
    )
    assert sources == expected_sources
    assert sinks == expected_sinks


def test_triangular() -> None:
    """
    Quivers with loops or oriented cycles are not triangular.
    """
    assert is_triangular(quiver=family_a(p=2, q=3).quiver)
    assert not is_triangular(quiver=family_c(p=1).quiver)


def test_weak_components() -> None:
    """
    Each component keeps the relations living on it.
    """
    text = textwrap.dedent(
        text="""\
        vertex a b x
        arrow alpha : a -> b
        arrow rho : x -> x
        rel rho.rho
        """,
    )
    bound_quiver = parse_bound_quiver(text=text, allow_disconnected=True)
    first, second = weak_components(bound_quiver=bound_quiver)
    assert first.vertices == ("a", "b")
    assert first.relations == ()
    assert second.vertices == ("x",)
    assert [str(relation) for relation in second.relations] == ["rho.rho"]


def test_delete_arrows() -> None:
    """
    Deleting an arrow drops the relation terms through it.
    """
    bound_quiver = family_c(p=1)
    quotient = delete_arrows(bound_quiver=bound_quiver, arrows=["rho1"])
    assert {arrow.name for arrow in quotient.quiver.arrows} == {
        "alpha",
        "beta",
    }
    assert quotient.relations == ()


def test_delete_unknown_arrow() -> None:
    """
    Only existing arrows can be deleted.
    """
    with pytest.raises(expected_exception=UnknownIdentifierError):
        delete_arrows(bound_quiver=family_c(p=1), arrows=["missing"])


def test_relabel() -> None:
    """
    Relabelling renames vertices and arrows in relations too.
    """
    bound_quiver = relabel(
        bound_quiver=family_c(p=1),
        vertices={"m": "hub"},
        arrows={"rho1": "loop"},
    )
    assert bound_quiver.vertices == ("a", "hub", "z")
    assert [str(relation) for relation in bound_quiver.relations] == [
        "loop.loop",
    ]


def test_over_field() -> None:
    """
    Changing the field keeps the quiver and the relations.
    """
    bound_quiver = family_c(p=1)
    changed = over_field(
        bound_quiver=bound_quiver,
        base_field=Field(characteristic=2),
    )
    assert changed.quiver == bound_quiver.quiver
    assert changed.relations == bound_quiver.relations
    assert changed.field.name == "F2"


def _coefficients(bound_quiver: BoundQuiver) -> list[dict[str, Fraction]]:
    """
    The coefficient of each path, relation by relation.
    """
    return [
        {str(object=path): coefficient for coefficient, path in relation.terms}
        for relation in bound_quiver.relations
    ]


def test_over_field_drops_vanishing_terms() -> None:
    """
    Coefficients which vanish in the new field take their terms with them,
    and relations left empty are dropped.
    """
    bound_quiver = parse_bound_quiver(
        text=(
            "vertex a m z\n"
            "arrow alpha : a -> m\n"
            "arrow beta : m -> z\n"
            "arrow rho : m -> m\n"
            "rel 2*rho.rho\n"
            "rel beta.rho.alpha - 3*beta.alpha\n"
        ),
    )
    over_two = over_field(
        bound_quiver=bound_quiver,
        base_field=Field(characteristic=2),
    )
    assert _coefficients(bound_quiver=over_two) == [
        {"beta.alpha": -3, "beta.rho.alpha": 1},
    ]
    over_three = over_field(
        bound_quiver=bound_quiver,
        base_field=Field(characteristic=3),
    )
    assert _coefficients(bound_quiver=over_three) == [
        {"rho.rho": 2},
        {"beta.rho.alpha": 1},
    ]


def test_quiver_restrict() -> None:
    """
    Restricting keeps the arrows between kept vertices.
    """
    quiver = Quiver(
        vertices=("a", "b", "c"),
        arrows=(
            Arrow(name="x", source="a", target="b"),
            Arrow(name="y", source="b", target="c"),
        ),
    )
    restricted = quiver.restrict(vertices=["a", "b"])
    assert [arrow.name for arrow in restricted.arrows] == ["x"]
