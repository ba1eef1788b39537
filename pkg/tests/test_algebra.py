"""
Tests for the algebra basis and the radical layers.
"""

import pytest

from quiverlab import (
    BoundQuiver,
    NonParallelError,
    NotAdmissibleError,
    all_paths,
    build_algebra,
    distributivity_cross_check,
    family_a,
    family_b,
    family_c,
    family_d,
    family_e,
    find_nodes,
    glue,
    is_distributive,
    layer_profile,
    linear_quiver,
    minimal_generator_monomials,
    minimal_relation_count,
    parse_bound_quiver,
)

KRONECKER = """\
vertex a z
arrow alpha : a -> z
arrow beta : a -> z
"""


def test_kronecker() -> None:
    """
    Without paths of length two the bound is two.
    """
    algebra = build_algebra(bound_quiver=parse_bound_quiver(text=KRONECKER))
    assert algebra.nilpotency_bound == 2
    assert algebra.dimension == 4
    assert algebra.pair_dimension(source="a", target="z") == 2
    assert algebra.pair_dimension(source="a", target="a") == 1
    assert algebra.pair_dimension(source="z", target="a") == 0


def test_loop_squaring_to_zero() -> None:
    """
    ``C(1)`` has ten reduced paths, the longest ``beta.rho1.alpha``.
    """
    algebra = build_algebra(bound_quiver=family_c(p=1))
    assert algebra.nilpotency_bound == 4
    assert algebra.dimension == 10
    assert [
        str(path) for path in algebra.basis(source="a", target="z")
    ] == ["beta.alpha", "beta.rho1.alpha"]
    assert [str(path) for path in algebra.radical_basis(vertex="m")] == [
        "rho1",
    ]


@pytest.mark.parametrize(
    argnames="bound_quiver",
    argvalues=[
        family_a(p=2, q=3),
        family_b(p=2, q=2),
        family_c(p=2),
        family_d(p=1, q=1),
        family_e(p=1, q=1, r=1),
    ],
    ids=["A(2,3)", "B(2,2)", "C(2)", "D(1,1)", "E(1,1,1)"],
)
def test_dimension_counts_reduced_paths(bound_quiver: BoundQuiver) -> None:
    """
    The dimension is the number of reduced paths, and every path up to the
    bound reduces into their span.
    """
    algebra = build_algebra(bound_quiver=bound_quiver)
    reduced = [path for paths in algebra.bases.values() for path in paths]
    assert algebra.dimension == len(reduced) == len(set(reduced))
    for path in all_paths(
        quiver=bound_quiver.quiver,
        max_len=algebra.nilpotency_bound,
    ):
        for term in algebra.reduce_path(path=path):
            assert term in reduced


def test_not_admissible() -> None:
    """
    A loop without relations gives an infinite dimensional algebra.
    """
    bound_quiver = parse_bound_quiver(text="vertex x\narrow rho : x -> x\n")
    with pytest.raises(expected_exception=NotAdmissibleError):
        build_algebra(bound_quiver=bound_quiver, max_bound=8)


def test_truncation_does_not_hide_infinite_dimension() -> None:
    """
    A loop with ``rho.rho = rho.rho.rho`` vanishes in every truncation but
    no power of the loop lies in the ideal.
    """
    bound_quiver = parse_bound_quiver(
        text="vertex x\narrow rho : x -> x\nrel rho.rho - rho.rho.rho\n",
    )
    with pytest.raises(expected_exception=NotAdmissibleError):
        build_algebra(bound_quiver=bound_quiver, max_bound=8)


def test_mixed_lengths_on_a_loop() -> None:
    """
    Relations of mixed lengths on a loop are accepted once every long
    path is a combination of them.
    """
    bound_quiver = parse_bound_quiver(
        text=(
            "vertex x\narrow rho : x -> x\n"
            "rel rho.rho - rho.rho.rho\nrel rho.rho.rho\n"
        ),
    )
    algebra = build_algebra(bound_quiver=bound_quiver, max_bound=8)
    assert algebra.nilpotency_bound == 2
    assert algebra.dimension == 2


def test_bound_must_be_positive() -> None:
    """
    The bound to search up to is positive.
    """
    with pytest.raises(expected_exception=ValueError):
        build_algebra(bound_quiver=linear_quiver(n=2), max_bound=0)


def test_commutativity_relation() -> None:
    """
    Both sides of a commutativity relation have the same normal form.
    """
    bound_quiver = family_d(p=1, q=1)
    algebra = build_algebra(bound_quiver=bound_quiver)
    quiver = bound_quiver.quiver
    arm = quiver.path(arrows=("gamma2", "gamma1"))
    square = quiver.path(arrows=("beta", "alpha"))
    assert algebra.reduce(element={arm: 1, square: -1}) == {}
    assert algebra.reduce(element={arm: 1}) == algebra.reduce(
        element={square: 1},
    )
    alpha = quiver.path(arrows=("alpha",))
    beta = quiver.path(arrows=("beta",))
    assert algebra.multiply(
        left={beta: 1},
        right={alpha: 1},
    ) == algebra.reduce(element={square: 1})


def test_reduce_non_parallel() -> None:
    """
    Only combinations of parallel paths can be reduced.
    """
    bound_quiver = family_c(p=1)
    algebra = build_algebra(bound_quiver=bound_quiver)
    quiver = bound_quiver.quiver
    with pytest.raises(expected_exception=NonParallelError):
        algebra.reduce(
            element={
                quiver.path(arrows=("alpha",)): 1,
                quiver.path(arrows=("beta",)): 1,
            },
        )


def test_layer_profiles() -> None:
    """
    Layer dimensions add up to the dimension of the bimodule.
    """
    kronecker = build_algebra(
        bound_quiver=parse_bound_quiver(text=KRONECKER),
    )
    assert layer_profile(algebra=kronecker, f="z", e="a").layers == (2,)
    c1 = build_algebra(bound_quiver=family_c(p=1))
    assert layer_profile(algebra=c1, f="z", e="a").layers == (2,)
    local = layer_profile(algebra=c1, f="m", e="m")
    assert local.layers == (1, 1)
    assert local.dimension == 2
    assert layer_profile(algebra=c1, f="a", e="z").layers == ()


@pytest.mark.parametrize(argnames="n", argvalues=[1, 2, 3, 4, 5])
def test_linear_quiver_is_distributive(n: int) -> None:
    """
    A linearly oriented quiver without relations is distributive.
    """
    algebra = build_algebra(bound_quiver=linear_quiver(n=n))
    assert is_distributive(algebra=algebra) == (True, None)
    assert distributivity_cross_check(algebra=algebra) == (True, True)


def test_kronecker_witness() -> None:
    """
    The Kronecker algebra has a layer of dimension two at layer zero.
    """
    algebra = build_algebra(bound_quiver=parse_bound_quiver(text=KRONECKER))
    assert is_distributive(algebra=algebra) == (False, ("z", "a", 0))


@pytest.mark.parametrize(
    argnames="bound_quiver",
    argvalues=[
        family_a(p=1, q=1),
        family_a(p=2, q=3),
        family_b(p=2, q=2),
        family_b(p=3, q=4),
        family_c(p=1),
        family_c(p=3),
        family_d(p=1, q=1),
        family_d(p=2, q=2),
        family_e(p=1, q=1, r=1),
        family_e(p=2, q=1, r=3),
    ],
    ids=[
        "A(1,1)",
        "A(2,3)",
        "B(2,2)",
        "B(3,4)",
        "C(1)",
        "C(3)",
        "D(1,1)",
        "D(2,2)",
        "E(1,1,1)",
        "E(2,1,3)",
    ],
)
def test_families_are_not_distributive(bound_quiver: BoundQuiver) -> None:
    """
    Every family model is non-distributive.
    """
    algebra = build_algebra(bound_quiver=bound_quiver)
    distributive, witness = is_distributive(algebra=algebra)
    assert not distributive
    assert witness is not None
    assert distributivity_cross_check(algebra=algebra) != (True, True)


@pytest.mark.parametrize(
    argnames=("bound_quiver", "expected_total"),
    argvalues=[
        (family_a(p=1, q=1), 0),
        (family_a(p=2, q=3), 0),
        (family_b(p=2, q=2), 1),
        (family_c(p=1), 1),
        (family_c(p=3), 1),
        (family_d(p=1, q=1), 2),
        (family_d(p=2, q=2), 2),
    ],
    ids=["A(1,1)", "A(2,3)", "B(2,2)", "C(1)", "C(3)", "D(1,1)", "D(2,2)"],
)
def test_glued_recomputed(
    bound_quiver: BoundQuiver,
    expected_total: int,
) -> None:
    """
    Gluing the source to the sink keeps the algebra non-distributive, makes
    the glued vertex the only node and adds one relation per path through
    it.
    """
    quiver = bound_quiver.quiver
    through = len(quiver.incoming(vertex="z")) * len(
        quiver.outgoing(vertex="a"),
    )
    glued = glue(bound_quiver=bound_quiver, source="a", sink="z")
    algebra = build_algebra(bound_quiver=glued)
    distributive, witness = is_distributive(algebra=algebra)
    assert not distributive
    assert witness is not None
    assert find_nodes(bound_quiver=glued, algebra=algebra).nodes == ("az",)
    _, total = minimal_relation_count(algebra=algebra)
    assert total == expected_total + through


@pytest.mark.parametrize(
    argnames=("bound_quiver", "expected_total"),
    argvalues=[
        (family_a(p=2, q=3), 0),
        (family_b(p=2, q=2), 1),
        (family_c(p=1), 1),
        (family_d(p=1, q=1), 2),
        (family_e(p=1, q=1, r=1), 3),
    ],
    ids=["A(2,3)", "B(2,2)", "C(1)", "D(1,1)", "E(1,1,1)"],
)
def test_minimal_relation_count(
    bound_quiver: BoundQuiver,
    expected_total: int,
) -> None:
    """
    The minimal number of relations matches the generators of each model.
    """
    algebra = build_algebra(bound_quiver=bound_quiver)
    counts, total = minimal_relation_count(algebra=algebra)
    assert total == expected_total
    assert sum(counts.values()) == total


def test_redundant_relation_not_counted() -> None:
    """
    A relation implied by the others is not part of a minimal set.
    """
    text = """\
vertex a b c d
arrow x : a -> b
arrow y : b -> c
arrow w : c -> d
rel y.x
rel w.y.x
"""
    algebra = build_algebra(bound_quiver=parse_bound_quiver(text=text))
    counts, total = minimal_relation_count(algebra=algebra)
    assert counts == {("a", "c"): 1}
    assert total == 1


def test_minimal_generator_monomials() -> None:
    """
    Monomial generators are found whatever the presentation.
    """
    e111 = build_algebra(bound_quiver=family_e(p=1, q=1, r=1))
    assert [
        str(path) for path in minimal_generator_monomials(algebra=e111)
    ] == ["alpha1.alpha1", "gamma1.gamma1", "gamma1.theta1.alpha1"]
    d11 = build_algebra(bound_quiver=family_d(p=1, q=1))
    assert [
        str(path) for path in minimal_generator_monomials(algebra=d11)
    ] == ["rho1.rho1"]
