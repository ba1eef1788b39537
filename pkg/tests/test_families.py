"""
Tests for the canonical family models.
"""

import pytest

from quiverlab import (
    BoundQuiver,
    Field,
    acyclic_extended_a,
    b_parameters_allowed,
    barbell,
    family_a,
    family_b,
    family_c,
    family_d,
    family_e,
    linear_quiver,
)


@pytest.mark.parametrize(
    argnames=("bound_quiver", "vertex_count", "arrow_count", "relation_count"),
    argvalues=[
        (family_a(p=2, q=3), 5, 5, 0),
        (family_b(p=2, q=2), 5, 6, 1),
        (family_c(p=3), 5, 5, 1),
        (family_d(p=1, q=2), 5, 6, 2),
        (family_e(p=2, q=1, r=2), 4, 5, 3),
        (family_e(p=1, q=1, r=1), 2, 3, 3),
        (linear_quiver(n=4), 4, 3, 0),
    ],
    ids=["A(2,3)", "B(2,2)", "C(3)", "D(1,2)", "E(2,1,2)", "E(1,1,1)", "A4"],
)
def test_sizes(
    bound_quiver: BoundQuiver,
    vertex_count: int,
    arrow_count: int,
    relation_count: int,
) -> None:
    """
    Each model has the expected number of vertices, arrows and relations.
    """
    assert len(bound_quiver.vertices) == vertex_count
    assert len(bound_quiver.quiver.arrows) == arrow_count
    assert len(bound_quiver.relations) == relation_count


@pytest.mark.parametrize(
    argnames=("p", "q", "expected"),
    argvalues=[
        (2, 2, True),
        (7, 2, True),
        (5, 3, True),
        (6, 3, False),
        (4, 4, False),
        (1, 2, False),
    ],
)
def test_b_parameters_allowed(p: int, q: int, *, expected: bool) -> None:
    """
    ``B(p, q)`` is only a family model for a few parameters.
    """
    assert b_parameters_allowed(p=p, q=q) is expected


def test_family_b_sum_relation() -> None:
    """
    The three arms of ``B`` sum to zero.
    """
    (relation,) = family_b(p=2, q=2).relations
    assert str(relation) == "alpha2.alpha1 + beta2.beta1 + gamma2.gamma1"


def test_family_c_relation() -> None:
    """
    Going once round the cycle of ``C`` is zero.
    """
    (relation,) = family_c(p=3).relations
    assert str(relation) == "rho1.rho3"


def test_family_field() -> None:
    """
    Models may be built over a prime field.
    """
    base_field = Field(characteristic=3)
    assert family_d(p=1, q=1, base_field=base_field).field == base_field


def test_extended_a() -> None:
    """
    ``Ã_m`` has ``m + 1`` vertices and arrows.
    """
    bound_quiver = acyclic_extended_a(orientation="ffbb")
    assert bound_quiver.vertices == ("c0", "c1", "c2", "c3")
    assert len(bound_quiver.quiver.arrows) == 4
    assert bound_quiver.relations == ()


@pytest.mark.parametrize(argnames="orientation", argvalues=["fff", "f", "fx"])
def test_extended_a_invalid(orientation: str) -> None:
    """
    Cyclic orientations, short cycles and unknown letters are rejected.
    """
    with pytest.raises(expected_exception=ValueError):
        acyclic_extended_a(orientation=orientation)


def test_barbell_loops() -> None:
    """
    Cycles of length one are loops squaring to zero.
    """
    bound_quiver = barbell(left=1, right=1, bar="bf")
    assert bound_quiver.vertices == ("b1", "x", "y")
    assert sorted(str(relation) for relation in bound_quiver.relations) == [
        "alpha.alpha",
        "delta.delta",
    ]


def test_barbell_cycles() -> None:
    """
    Longer cycles have one relation at their hub.
    """
    bound_quiver = barbell(left=2, right=3, bar="f")
    assert bound_quiver.vertices == ("l1", "r1", "r2", "x", "y")
    assert sorted(str(relation) for relation in bound_quiver.relations) == [
        "beta.alpha",
        "delta.gamma",
    ]
