"""
Tests for family recognition and the tau-tilting verdicts.
"""

import pytest

from quiverlab import (
    RATIONALS,
    BoundQuiver,
    ClassificationResult,
    Field,
    NotSpecialBiserialError,
    PreconditionError,
    TauVerdict,
    Ternary,
    acyclic_extended_a,
    barbell,
    bongartz_pair,
    build_algebra,
    classify,
    classify_biserial,
    family_a,
    family_b,
    family_c,
    family_d,
    family_e,
    glue,
    linear_quiver,
    match_family,
    parse_bound_quiver,
    relabel,
    sufficient_tau_infinite_probe,
    tau_infinite_witness,
)

TWO_LOOPS = """\
vertex x
arrow alpha : x -> x
arrow beta : x -> x
rel alpha.alpha
rel alpha.beta
rel beta.alpha
rel beta.beta
"""

KRONECKER_WITH_TAIL = """\
vertex a w z
arrow alpha : a -> z
arrow beta : a -> z
arrow gamma : z -> w
"""


def _holds(result: ClassificationResult) -> dict[str, bool]:
    """
    Whether each certificate holds, by name.
    """
    return {
        certificate.name: certificate.holds
        for certificate in result.certificates
    }


@pytest.mark.parametrize(
    argnames=("bound_quiver", "expected_family", "expected_verdict"),
    argvalues=[
        (family_a(p=1, q=1), "A(1,1)", TauVerdict.INFINITE),
        (family_a(p=2, q=3), "A(2,3)", TauVerdict.INFINITE),
        (family_b(p=2, q=2), "B(2,2)", TauVerdict.INFINITE),
        (family_c(p=2), "C(2)", TauVerdict.INFINITE),
        (family_d(p=1, q=1), "D(1,1)", TauVerdict.INFINITE),
        (family_e(p=1, q=1, r=1), "E(1,1,1)", TauVerdict.FINITE),
        (family_b(p=4, q=4), "Unrecognized", TauVerdict.UNKNOWN),
        (linear_quiver(n=3), "Unrecognized", TauVerdict.UNKNOWN),
    ],
    ids=[
        "A(1,1)",
        "A(2,3)",
        "B(2,2)",
        "C(2)",
        "D(1,1)",
        "E(1,1,1)",
        "B(4,4)",
        "A3",
    ],
)
def test_classify_models(
    bound_quiver: BoundQuiver,
    expected_family: str,
    expected_verdict: TauVerdict,
) -> None:
    """
    Each model is recognised with its verdict.
    """
    result = classify(bound_quiver=bound_quiver)
    assert str(result.family) == expected_family
    assert result.tau_verdict is expected_verdict


def test_glued_loops() -> None:
    """
    Two loops with every product zero are the glued Kronecker quiver.
    """
    result = classify(bound_quiver=parse_bound_quiver(text=TWO_LOOPS))
    assert str(result.family) == "GluedOf(A(1,1))"
    assert [step.node for step in result.family.resolutions] == ["x"]
    assert result.tau_verdict is TauVerdict.FINITE
    assert result.preprojective_component is Ternary.FALSE
    holds = _holds(result=result)
    assert holds["node-or-three-relations"]
    assert holds["node-or-non-quadratic-monomial"]
    assert not holds["node-free"]
    assert not holds["sink-or-source"]


def test_loop_family_certificates() -> None:
    """
    ``C(2)`` has a source and no node.
    """
    result = classify(bound_quiver=family_c(p=2))
    holds = _holds(result=result)
    assert holds["sink-or-source"]
    assert holds["node-free"]
    assert not holds["node-or-three-relations"]
    assert result.witness is None
    assert result.notes


def test_loop_family_witness() -> None:
    """
    With a finite field, an infinite verdict comes with a verified brick
    family.
    """
    result = classify(
        bound_quiver=family_c(p=2),
        witness_field=Field(characteristic=3),
    )
    assert result.witness is not None
    assert len(result.witness.members) == 3
    assert result.witness.pairwise_non_isomorphic is Ternary.TRUE
    assert _holds(result=result)["brick-family"]


def test_three_relations() -> None:
    """
    ``E(1,1,1)`` needs three relations.
    """
    result = classify(bound_quiver=family_e(p=1, q=1, r=1))
    holds = _holds(result=result)
    assert holds["node-or-three-relations"]
    assert holds["node-or-non-quadratic-monomial"]


@pytest.mark.parametrize(
    argnames=("bound_quiver", "expected"),
    argvalues=[
        (family_a(p=2, q=3), Ternary.TRUE),
        (family_b(p=2, q=2), Ternary.TRUE),
        (family_c(p=1), Ternary.FALSE),
        (family_e(p=1, q=1, r=1), Ternary.FALSE),
        (linear_quiver(n=3), Ternary.UNKNOWN),
    ],
    ids=["A(2,3)", "B(2,2)", "C(1)", "E(1,1,1)", "A3"],
)
def test_preprojective(bound_quiver: BoundQuiver, expected: Ternary) -> None:
    """
    Only the hereditary families and ``B`` have a preprojective component.
    """
    result = classify(bound_quiver=bound_quiver)
    assert result.preprojective_component is expected


def test_extended_a() -> None:
    """
    An acyclic extended A quiver is recognised with its orientation.
    """
    bound_quiver = acyclic_extended_a(orientation="fbfb")
    biserial = classify_biserial(bound_quiver=bound_quiver)
    assert str(biserial.family) == "AcyclicAtilde(3,fbfb)"
    assert biserial.tau_verdict is TauVerdict.INFINITE
    result = classify(
        bound_quiver=bound_quiver,
        witness_field=Field(characteristic=3),
    )
    assert str(result.family) == "AcyclicAtilde(3,fbfb)"
    assert result.tau_verdict is TauVerdict.INFINITE
    assert result.preprojective_component is Ternary.TRUE
    assert result.witness is not None
    assert result.witness.construction == "band"
    assert result.witness.dimension_vector == (1, 1, 1, 1)


def test_barbell() -> None:
    """
    A barbell with a bar of two arrows is recognised.
    """
    bound_quiver = barbell(left=1, right=1, bar="bf")
    result = classify_biserial(bound_quiver=bound_quiver)
    assert str(result.family) == "Barbell(1,1,bf)"
    assert result.tau_verdict is TauVerdict.INFINITE
    holds = _holds(result=result)
    assert holds["at-most-two-relations"]
    assert holds["gentle"]


def test_not_special_biserial() -> None:
    """
    Three arrows leaving a vertex are too many.
    """
    with pytest.raises(expected_exception=NotSpecialBiserialError):
        classify_biserial(bound_quiver=family_b(p=2, q=2))


def test_probe_finds_quotient() -> None:
    """
    Killing the tail of a Kronecker quiver leaves ``A(1,1)``.
    """
    bound_quiver = parse_bound_quiver(text=KRONECKER_WITH_TAIL)
    visited: list[tuple[str, ...]] = []
    witness = sufficient_tau_infinite_probe(
        bound_quiver=bound_quiver,
        budget=1,
        on_subset=visited.append,
    )
    assert witness is not None
    assert witness.arrows == ("gamma",)
    assert witness.component.vertices == ("a", "z")
    assert str(witness.family) == "A(1,1)"
    assert visited == [(), ("alpha",), ("beta",), ("gamma",)]


def test_probe_verdict() -> None:
    """
    A probe witness makes the verdict infinite.
    """
    bound_quiver = parse_bound_quiver(text=KRONECKER_WITH_TAIL)
    assert classify(bound_quiver=bound_quiver).tau_verdict is (
        TauVerdict.UNKNOWN
    )
    result = classify(bound_quiver=bound_quiver, probe_budget=1)
    assert str(result.family) == "Unrecognized"
    assert result.tau_verdict is TauVerdict.INFINITE
    assert _holds(result=result)["quotient"]


def test_probe_without_witness() -> None:
    """
    Finding nothing is not a verdict.
    """
    assert (
        sufficient_tau_infinite_probe(
            bound_quiver=family_e(p=1, q=1, r=1),
            budget=2,
        )
        is None
    )


def test_probe_budget_zero() -> None:
    """
    With no budget only the input itself is tried.
    """
    witness = sufficient_tau_infinite_probe(
        bound_quiver=family_a(p=1, q=1),
        budget=0,
    )
    assert witness is not None
    assert witness.arrows == ()


def test_relabel_invariance() -> None:
    """
    Renaming vertices and arrows does not change the family.
    """
    bound_quiver = relabel(
        bound_quiver=family_d(p=1, q=1),
        vertices={"a": "s", "z": "t", "m": "c"},
        arrows={"alpha": "x", "beta": "y", "rho1": "r"},
    )
    result = match_family(bound_quiver=bound_quiver)
    assert str(result.family) == "D(1,1)"
    assert result.family.isomorphism is not None
    assert result.family.isomorphism.vertices["s"] == "a"


def test_bongartz_pair() -> None:
    """
    The pair comes from the distributivity witness when possible.
    """
    algebra = build_algebra(bound_quiver=family_c(p=1))
    assert bongartz_pair(algebra=algebra) == ("a", "z")
    with pytest.raises(expected_exception=PreconditionError):
        bongartz_pair(algebra=build_algebra(bound_quiver=linear_quiver(n=2)))


def test_witness_needs_finite_field() -> None:
    """
    Brick family witnesses are built over prime fields.
    """
    bound_quiver = family_a(p=1, q=1)
    result = match_family(bound_quiver=bound_quiver)
    with pytest.raises(expected_exception=PreconditionError):
        tau_infinite_witness(
            bound_quiver=bound_quiver,
            family=result.family,
            witness_field=RATIONALS,
        )


TWO_KRONECKERS = """\
vertex a1 z1 a2 z2
arrow alpha1 : a1 -> z1
arrow beta1 : a1 -> z1
arrow alpha2 : a2 -> z2
arrow beta2 : a2 -> z2
"""


def test_glued_from_two_families() -> None:
    """
    Gluing two Kronecker quivers is not a glued algebra of one family, and
    the quotient search finds a Kronecker quotient.
    """
    bound_quiver = glue(
        bound_quiver=parse_bound_quiver(
            text=TWO_KRONECKERS,
            allow_disconnected=True,
        ),
        source="a1",
        sink="z2",
    )
    result = classify(bound_quiver=bound_quiver)
    assert str(result.family) == "Unrecognized"
    assert result.tau_verdict is TauVerdict.UNKNOWN
    searched = classify(bound_quiver=bound_quiver, probe_budget=2)
    assert searched.tau_verdict is TauVerdict.INFINITE
    assert _holds(result=searched)["quotient"]


def test_two_combinations_not_b() -> None:
    """
    Two independent combinations of the arms of ``B(2,2)`` are not
    ``B(2,2)``.
    """
    bound_quiver = parse_bound_quiver(
        text="""\
vertex a u1 v1 w1 z
arrow alpha1 : a -> u1
arrow alpha2 : u1 -> z
arrow beta1 : a -> v1
arrow beta2 : v1 -> z
arrow gamma1 : a -> w1
arrow gamma2 : w1 -> z
rel alpha2.alpha1 + beta2.beta1 + gamma2.gamma1
rel alpha2.alpha1 + 2*beta2.beta1 + 3*gamma2.gamma1
""",
    )
    result = classify(bound_quiver=bound_quiver)
    assert str(result.family) == "Unrecognized"
    assert result.tau_verdict is TauVerdict.UNKNOWN


def _glued(bound_quiver: BoundQuiver) -> BoundQuiver:
    """
    The source ``a`` glued to the sink ``z``.
    """
    return glue(bound_quiver=bound_quiver, source="a", sink="z")


@pytest.mark.parametrize(
    argnames="bound_quiver",
    argvalues=[
        family_a(p=1, q=1),
        family_a(p=1, q=2),
        family_a(p=2, q=2),
        family_a(p=2, q=3),
        family_b(p=2, q=2),
        family_b(p=3, q=2),
        family_b(p=3, q=3),
        family_c(p=1),
        family_c(p=2),
        family_c(p=3),
        family_d(p=1, q=1),
        family_d(p=1, q=2),
        family_d(p=2, q=1),
        family_e(p=1, q=1, r=1),
        family_e(p=2, q=1, r=1),
        family_e(p=1, q=1, r=2),
        _glued(bound_quiver=family_a(p=1, q=1)),
        _glued(bound_quiver=family_a(p=2, q=3)),
        _glued(bound_quiver=family_b(p=2, q=2)),
        _glued(bound_quiver=family_c(p=1)),
        _glued(bound_quiver=family_c(p=2)),
        _glued(bound_quiver=family_d(p=1, q=1)),
    ],
    ids=[
        "A(1,1)",
        "A(1,2)",
        "A(2,2)",
        "A(2,3)",
        "B(2,2)",
        "B(3,2)",
        "B(3,3)",
        "C(1)",
        "C(2)",
        "C(3)",
        "D(1,1)",
        "D(1,2)",
        "D(2,1)",
        "E(1,1,1)",
        "E(2,1,1)",
        "E(1,1,2)",
        "glued-A(1,1)",
        "glued-A(2,3)",
        "glued-B(2,2)",
        "glued-C(1)",
        "glued-C(2)",
        "glued-D(1,1)",
    ],
)
def test_certificates_agree(bound_quiver: BoundQuiver) -> None:
    """
    On every recognised algebra, having a sink or a source, being
    tau-tilting infinite, having neither a node nor three relations and
    having neither a node nor a non-quadratic monomial relation all agree.
    """
    result = classify(bound_quiver=bound_quiver)
    assert result.recognized
    assert result.tau_verdict is not TauVerdict.UNKNOWN
    holds = _holds(result=result)
    infinite = result.tau_verdict is TauVerdict.INFINITE
    assert holds["sink-or-source"] is infinite
    assert holds["node-or-three-relations"] is not infinite
    assert holds["node-or-non-quadratic-monomial"] is not infinite


def test_quotient_search_in_processes() -> None:
    """
    Trying subsets in worker processes finds the same first witness.
    """
    bound_quiver = parse_bound_quiver(text=KRONECKER_WITH_TAIL)
    visited: list[tuple[str, ...]] = []
    witness = sufficient_tau_infinite_probe(
        bound_quiver=bound_quiver,
        budget=2,
        on_subset=visited.append,
        workers=2,
    )
    assert witness is not None
    assert witness.arrows == ("gamma",)
    assert str(witness.family) == "A(1,1)"
    assert visited == [(), ("alpha",), ("beta",), ("gamma",)]
