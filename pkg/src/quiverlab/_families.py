"""
Canonical bound quivers of the families the classifier recognises.

Arms and cycles are named by their arrows: the arm ``alpha1, ..., alphap``
runs ``a -> u1 -> ... -> z`` so that ``alphap...alpha1`` is the full arm.
"""

from collections.abc import Sequence

from beartype import beartype

from ._fields import RATIONALS, Field
from ._quiver import Arrow, BoundQuiver, Quiver, Relation

_FORWARD = "f"
_BACKWARD = "b"


@beartype
def _chain(
    *,
    arrow_prefix: str,
    vertex_prefix: str,
    start: str,
    end: str,
    length: int,
) -> tuple[list[str], list[Arrow]]:
    """
    A directed chain of ``length`` arrows from ``start`` to ``end``.

    Arrows are ``<arrow_prefix>1, ...`` and new vertices
    ``<vertex_prefix>1, ...``.
    """
    if length < 1:
        message = "A chain needs at least one arrow."
        raise ValueError(message)
    interior = [f"{vertex_prefix}{index}" for index in range(1, length)]
    stops = [start, *interior, end]
    arrows = [
        Arrow(
            name=f"{arrow_prefix}{index}",
            source=stops[index - 1],
            target=stops[index],
        )
        for index in range(1, length + 1)
    ]
    return interior, arrows


@beartype
def _chain_path(arrow_prefix: str, length: int) -> tuple[str, ...]:
    """
    The arrows of a chain written right to left.
    """
    return tuple(
        f"{arrow_prefix}{index}" for index in range(length, 0, -1)
    )


@beartype
def _bound_quiver(
    *,
    vertices: Sequence[str],
    arrows: Sequence[Arrow],
    relations: Sequence[Sequence[tuple[int, Sequence[str]]]],
    base_field: Field,
) -> BoundQuiver:
    """
    Assemble a bound quiver from arrows and relations given by arrow ids.
    """
    quiver = Quiver(vertices=tuple(vertices), arrows=tuple(arrows))
    return BoundQuiver(
        quiver=quiver,
        relations=tuple(
            Relation(
                terms=tuple(
                    (
                        base_field.to_fraction(
                            element=base_field.scalar(value=coefficient),
                        ),
                        quiver.path(arrows=path),
                    )
                    for coefficient, path in relation
                ),
            )
            for relation in relations
        ),
        field=base_field,
    )


@beartype
def family_a(p: int, q: int, base_field: Field = RATIONALS) -> BoundQuiver:
    """
    ``A(p, q)``: two arms of lengths ``p`` and ``q`` from ``a`` to ``z``,
    no relations.
    """
    left, alphas = _chain(
        arrow_prefix="alpha",
        vertex_prefix="u",
        start="a",
        end="z",
        length=p,
    )
    right, betas = _chain(
        arrow_prefix="beta",
        vertex_prefix="v",
        start="a",
        end="z",
        length=q,
    )
    return _bound_quiver(
        vertices=["a", "z", *left, *right],
        arrows=[*alphas, *betas],
        relations=[],
        base_field=base_field,
    )


@beartype
def b_parameters_allowed(p: int, q: int) -> bool:
    """
    Whether ``B(p, q)`` is one of the minimal representation-infinite
    algebras: ``2 = q <= p`` or ``3 = q <= p <= 5``.
    """
    return (q == 2 and q <= p) or (q == 3 and q <= p <= 5)  # noqa: PLR2004


@beartype
def family_b(p: int, q: int, base_field: Field = RATIONALS) -> BoundQuiver:
    """
    ``B(p, q)``: arms of lengths ``p``, ``q`` and ``2`` from ``a`` to ``z``
    whose sum vanishes.

    The parameter constraint is not enforced here; see
    ``b_parameters_allowed``.
    """
    left, alphas = _chain(
        arrow_prefix="alpha",
        vertex_prefix="u",
        start="a",
        end="z",
        length=p,
    )
    middle, betas = _chain(
        arrow_prefix="beta",
        vertex_prefix="v",
        start="a",
        end="z",
        length=q,
    )
    apex, gammas = _chain(
        arrow_prefix="gamma",
        vertex_prefix="w",
        start="a",
        end="z",
        length=2,
    )
    return _bound_quiver(
        vertices=["a", "z", *apex, *left, *middle],
        arrows=[*alphas, *betas, *gammas],
        relations=[
            [
                (1, _chain_path(arrow_prefix="gamma", length=2)),
                (1, _chain_path(arrow_prefix="beta", length=q)),
                (1, _chain_path(arrow_prefix="alpha", length=p)),
            ],
        ],
        base_field=base_field,
    )


@beartype
def _cycle(
    *,
    hub: str,
    arrow_prefix: str,
    vertex_prefix: str,
    length: int,
) -> tuple[list[str], list[Arrow]]:
    """
    A directed cycle ``hub -> 1 -> ... -> hub`` whose first arrow leaves the
    hub and whose last arrow returns to it.
    """
    return _chain(
        arrow_prefix=arrow_prefix,
        vertex_prefix=vertex_prefix,
        start=hub,
        end=hub,
        length=length,
    )


@beartype
def family_c(p: int, base_field: Field = RATIONALS) -> BoundQuiver:
    """
    ``C(p)``: a cycle ``rho1, ..., rhop`` at ``m`` with ``rho1.rhop = 0``,
    entered by ``alpha: a -> m`` and left by ``beta: m -> z``.
    """
    cycle, rhos = _cycle(
        hub="m",
        arrow_prefix="rho",
        vertex_prefix="c",
        length=p,
    )
    return _bound_quiver(
        vertices=["a", "m", "z", *cycle],
        arrows=[
            Arrow(name="alpha", source="a", target="m"),
            Arrow(name="beta", source="m", target="z"),
            *rhos,
        ],
        relations=[[(1, ("rho1", f"rho{p}"))]],
        base_field=base_field,
    )


@beartype
def family_d(p: int, q: int, base_field: Field = RATIONALS) -> BoundQuiver:
    """
    ``D(p, q)``: ``C(p)`` with an arm ``gamma1, ..., gamma(q+1)`` from ``a``
    to ``z`` which equals ``beta.alpha``.
    """
    cycle, rhos = _cycle(
        hub="m",
        arrow_prefix="rho",
        vertex_prefix="c",
        length=p,
    )
    arm, gammas = _chain(
        arrow_prefix="gamma",
        vertex_prefix="g",
        start="a",
        end="z",
        length=q + 1,
    )
    return _bound_quiver(
        vertices=["a", "m", "z", *cycle, *arm],
        arrows=[
            Arrow(name="alpha", source="a", target="m"),
            Arrow(name="beta", source="m", target="z"),
            *rhos,
            *gammas,
        ],
        relations=[
            [(1, ("rho1", f"rho{p}"))],
            [
                (1, _chain_path(arrow_prefix="gamma", length=q + 1)),
                (-1, ("beta", "alpha")),
            ],
        ],
        base_field=base_field,
    )


@beartype
def family_e(
    p: int,
    q: int,
    r: int,
    base_field: Field = RATIONALS,
) -> BoundQuiver:
    """
    ``E(p, q, r)``: cycles ``alpha`` at ``u`` and ``gamma`` at ``w`` joined
    by a bar ``theta1, ..., thetar`` from ``u`` to ``w``.

    The relations are ``alpha1.alphap``, ``gamma1.gammaq`` and
    ``gamma1.thetar...theta1.alphap``.
    """
    left, alphas = _cycle(
        hub="u",
        arrow_prefix="alpha",
        vertex_prefix="l",
        length=p,
    )
    right, gammas = _cycle(
        hub="w",
        arrow_prefix="gamma",
        vertex_prefix="r",
        length=q,
    )
    bar, thetas = _chain(
        arrow_prefix="theta",
        vertex_prefix="b",
        start="u",
        end="w",
        length=r,
    )
    return _bound_quiver(
        vertices=["u", "w", *left, *right, *bar],
        arrows=[*alphas, *thetas, *gammas],
        relations=[
            [(1, ("alpha1", f"alpha{p}"))],
            [(1, ("gamma1", f"gamma{q}"))],
            [
                (
                    1,
                    (
                        "gamma1",
                        *_chain_path(arrow_prefix="theta", length=r),
                        f"alpha{p}",
                    ),
                ),
            ],
        ],
        base_field=base_field,
    )


@beartype
def linear_quiver(n: int, base_field: Field = RATIONALS) -> BoundQuiver:
    """
    The linearly oriented ``A_n``: ``x1 -> x2 -> ... -> xn``.
    """
    if n < 1:
        message = "A linear quiver needs at least one vertex."
        raise ValueError(message)
    vertices = [f"x{index}" for index in range(1, n + 1)]
    return _bound_quiver(
        vertices=vertices,
        arrows=[
            Arrow(
                name=f"a{index}",
                source=vertices[index - 1],
                target=vertices[index],
            )
            for index in range(1, n)
        ],
        relations=[],
        base_field=base_field,
    )


@beartype
def _oriented_path(
    *,
    stops: Sequence[str],
    orientation: str,
    arrow_prefix: str,
) -> list[Arrow]:
    """
    Arrows between consecutive stops, ``f`` pointing along the sequence and
    ``b`` against it.
    """
    if len(orientation) != len(stops) - 1:
        message = "One orientation letter is needed per arrow."
        raise ValueError(message)
    arrows: list[Arrow] = []
    for index, letter in enumerate(orientation, start=1):
        first, second = stops[index - 1], stops[index]
        if letter == _FORWARD:
            source, target = first, second
        elif letter == _BACKWARD:
            source, target = second, first
        else:
            message = f"Orientation letters are 'f' or 'b', not '{letter}'."
            raise ValueError(message)
        arrows.append(
            Arrow(name=f"{arrow_prefix}{index}", source=source, target=target),
        )
    return arrows


@beartype
def acyclic_extended_a(
    orientation: str,
    base_field: Field = RATIONALS,
) -> BoundQuiver:
    """
    ``Ã_m`` on the cycle ``c0, ..., cm`` with ``m + 1 = len(orientation)``
    arrows ``eta1, ...``; letter ``i`` orients the arrow between
    ``c(i-1)`` and ``ci`` (indices modulo ``m + 1``).

    Raises:
        ValueError: The orientation is cyclic or the cycle is too short.
    """
    if len(orientation) < 2:  # noqa: PLR2004
        message = "An extended A quiver needs at least two arrows."
        raise ValueError(message)
    if len(set(orientation)) == 1:
        message = "A cyclic orientation gives an infinite dimensional algebra."
        raise ValueError(message)
    vertices = [f"c{index}" for index in range(len(orientation))]
    return _bound_quiver(
        vertices=vertices,
        arrows=_oriented_path(
            stops=[*vertices, vertices[0]],
            orientation=orientation,
            arrow_prefix="eta",
        ),
        relations=[],
        base_field=base_field,
    )


@beartype
def barbell(
    *,
    left: int,
    right: int,
    bar: str,
    base_field: Field = RATIONALS,
) -> BoundQuiver:
    """
    A barbell: a directed cycle of length ``left`` at ``x`` and one of
    length ``right`` at ``y`` joined by a bar oriented by ``bar``.

    At ``x`` the cycle arrow ``alpha`` comes in and ``beta`` goes out, at
    ``y`` ``gamma`` comes in and ``delta`` goes out, with relations
    ``beta.alpha`` and ``delta.gamma``. A cycle of length one is a loop
    (``alpha`` at ``x``, ``delta`` at ``y``) squaring to zero.
    """
    vertices = ["x", "y"]
    arrows: list[Arrow] = []
    relations: list[list[tuple[int, tuple[str, ...]]]] = []
    for hub, length, prefix, into, out_of, names in (
        ("x", left, "l", "alpha", "beta", "kappa"),
        ("y", right, "r", "gamma", "delta", "mu"),
    ):
        if length == 1:
            loop = into if hub == "x" else out_of
            arrows.append(Arrow(name=loop, source=hub, target=hub))
            relations.append([(1, (loop, loop))])
            continue
        interior = [f"{prefix}{index}" for index in range(1, length)]
        stops = [hub, *interior, hub]
        arrows.append(Arrow(name=out_of, source=hub, target=stops[1]))
        arrows.extend(
            Arrow(
                name=f"{names}{index}",
                source=stops[index],
                target=stops[index + 1],
            )
            for index in range(1, length - 1)
        )
        arrows.append(Arrow(name=into, source=stops[-2], target=hub))
        vertices.extend(interior)
        relations.append([(1, (out_of, into))])
    stops = ["x", *(f"b{index}" for index in range(1, len(bar))), "y"]
    vertices.extend(stops[1:-1])
    arrows.extend(
        _oriented_path(stops=stops, orientation=bar, arrow_prefix="theta"),
    )
    return _bound_quiver(
        vertices=vertices,
        arrows=arrows,
        relations=relations,
        base_field=base_field,
    )
