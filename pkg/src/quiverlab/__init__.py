"""
Decide structural and tau-tilting properties of bound quiver algebras.
"""

import sys
from collections.abc import Callable
from enum import Enum, IntEnum, unique
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Any, NoReturn, TypeVar

import click
from beartype import beartype

from ._algebra import (
    DEFAULT_MAX_BOUND,
    AlgebraBasis,
    LayerProfile,
    build_algebra,
    distributivity_cross_check,
    is_distributive,
    layer_profile,
    minimal_generator_monomials,
    minimal_relation_count,
)
from ._bricks import (
    CENSUS_BLOCKS_PER_WORKER,
    DEFAULT_CENSUS_BUDGET,
    BrickFamily,
    band_family,
    bongartz_family,
    census_blocks,
    census_size,
    census_up_to,
    dimension_vectors,
    enumerate_bricks,
)
from ._classifier import (
    DEFAULT_PROBE_BUDGET,
    Certificate,
    ClassificationResult,
    FamilyKind,
    FamilyTag,
    ProbeWitness,
    TauVerdict,
    bongartz_pair,
    classify,
    classify_biserial,
    decide_tau,
    is_gentle,
    match_family,
    preprojective_flag,
    special_biserial_violation,
    sufficient_tau_infinite_probe,
    tau_infinite_witness,
)
from ._errors import (
    BoundQuiverSyntaxError,
    BudgetExceededError,
    DisconnectedQuiverError,
    GluingError,
    InvalidQuiverError,
    NonParallelError,
    NonUniformRelationError,
    NotAdmissibleError,
    NotANodeError,
    NotSpecialBiserialError,
    ParseError,
    PreconditionError,
    QuiverlabError,
    ReportSchemaError,
    RepresentationError,
    ShortPathError,
    UnknownIdentifierError,
    VerificationError,
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
    linear_quiver,
)
from ._fields import RATIONALS, Field, parse_field
from ._isomorphism import BoundQuiverIsomorphism, find_isomorphism
from ._quiver import (
    Arrow,
    BoundQuiver,
    Path as QuiverPath,
    Quiver,
    Relation,
    all_paths,
    delete_arrows,
    enumerate_paths,
    is_triangular,
    over_field,
    parse_bound_quiver,
    relabel,
    serialize_bound_quiver,
    sources_and_sinks,
    weak_components,
)
from ._report import (
    Report,
    analysis_section,
    brick_family_section,
    census_section,
    classification_section,
    digest,
)
from ._representations import (
    Representation,
    Ternary,
    cyclic_quotient,
    direct_sum,
    hom_dim,
    hom_space,
    is_brick,
    is_isomorphic,
    path_vector,
    projective,
    representation,
    simple,
    vanishing_arrows,
)
from ._structure import (
    NodeReport,
    ResolutionStep,
    find_nodes,
    glue,
    is_cross_component_gluing,
    resolve_all,
    resolve_node,
)

try:
    __version__ = version(distribution_name=__name__)
except PackageNotFoundError:  # pragma: no cover
    # Without installed metadata, use the file setuptools-scm writes.
    from ._setuptools_scm_version import __version__

__all__ = [
    "CENSUS_BLOCKS_PER_WORKER",
    "DEFAULT_CENSUS_BUDGET",
    "DEFAULT_MAX_BOUND",
    "DEFAULT_PROBE_BUDGET",
    "RATIONALS",
    "AlgebraBasis",
    "Arrow",
    "BoundQuiver",
    "BoundQuiverIsomorphism",
    "BoundQuiverSyntaxError",
    "BrickFamily",
    "BudgetExceededError",
    "Certificate",
    "ClassificationResult",
    "DisconnectedQuiverError",
    "FamilyKind",
    "FamilyTag",
    "Field",
    "GluingError",
    "InvalidQuiverError",
    "LayerProfile",
    "NodeReport",
    "NonParallelError",
    "NonUniformRelationError",
    "NotANodeError",
    "NotAdmissibleError",
    "NotSpecialBiserialError",
    "ParseError",
    "PreconditionError",
    "ProbeWitness",
    "Quiver",
    "QuiverPath",
    "QuiverlabError",
    "Relation",
    "Report",
    "ReportSchemaError",
    "Representation",
    "RepresentationError",
    "ResolutionStep",
    "ShortPathError",
    "TauVerdict",
    "Ternary",
    "UnknownIdentifierError",
    "VerificationError",
    "acyclic_extended_a",
    "all_paths",
    "analysis_section",
    "b_parameters_allowed",
    "band_family",
    "barbell",
    "bongartz_family",
    "bongartz_pair",
    "brick_family_section",
    "build_algebra",
    "census_section",
    "census_blocks",
    "census_size",
    "census_up_to",
    "classification_section",
    "classify",
    "classify_biserial",
    "cyclic_quotient",
    "decide_tau",
    "delete_arrows",
    "digest",
    "dimension_vectors",
    "direct_sum",
    "distributivity_cross_check",
    "enumerate_bricks",
    "enumerate_paths",
    "family_a",
    "family_b",
    "family_c",
    "family_d",
    "family_e",
    "find_isomorphism",
    "find_nodes",
    "glue",
    "hom_dim",
    "hom_space",
    "is_brick",
    "is_cross_component_gluing",
    "is_distributive",
    "is_gentle",
    "is_isomorphic",
    "is_triangular",
    "layer_profile",
    "linear_quiver",
    "main",
    "match_family",
    "minimal_generator_monomials",
    "minimal_relation_count",
    "over_field",
    "parse_bound_quiver",
    "parse_field",
    "path_vector",
    "preprojective_flag",
    "projective",
    "relabel",
    "representation",
    "resolve_all",
    "resolve_node",
    "serialize_bound_quiver",
    "simple",
    "sources_and_sinks",
    "special_biserial_violation",
    "sufficient_tau_infinite_probe",
    "tau_infinite_witness",
    "vanishing_arrows",
    "weak_components",
]

T = TypeVar("T")


@unique
class _ExitCode(IntEnum):
    """
    Exit statuses.

    Parse errors, option misuse, failed preconditions and failed
    verifications all exit with ``FAILURE``.
    """

    FAILURE = 1
    NOT_ADMISSIBLE = 2
    BUDGET_EXCEEDED = 3


class _Group(click.Group):
    """
    A command group whose usage errors exit with the failure status.
    """

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx=ctx)
        except click.UsageError as exc:
            exc.exit_code = _ExitCode.FAILURE
            raise


@unique
class _OutputFormat(Enum):
    """
    Ways to print a report.
    """

    TEXT = "text"
    JSON = "json"


@beartype
def _log_info(message: str) -> None:
    """
    Log an info message.
    """
    styled_message = click.style(text=message, fg="green")
    click.echo(message=styled_message, err=True)


@beartype
def _log_warning(message: str) -> None:
    """
    Log a warning message.
    """
    styled_message = click.style(text=message, fg="yellow")
    click.echo(message=styled_message, err=True)


@beartype
def _log_error(message: str) -> None:
    """
    Log an error message.
    """
    styled_message = click.style(text=message, fg="red")
    click.echo(message=styled_message, err=True)


@beartype
def _fail(message: str, exit_code: _ExitCode) -> NoReturn:
    """
    Log an error and exit with the given status.
    """
    _log_error(message=message)
    sys.exit(exit_code)


@beartype
def _to_output_format(
    ctx: click.Context,
    param: click.Parameter,
    value: str,
) -> _OutputFormat:
    """
    Turn the chosen format name into an ``_OutputFormat``.
    """
    # We "use" the parameters to avoid vulture complaining.
    del ctx
    del param

    return _OutputFormat(value)


@beartype
def _validate_field(
    ctx: click.Context,
    param: click.Parameter,
    value: str | None,
) -> Field | None:
    """
    Parse a field name given as ``Q`` or ``F<p>`` with ``p`` prime.
    """
    if value is None:
        return value

    try:
        return parse_field(text=value)
    except ValueError as exc:
        raise click.BadParameter(
            message=str(object=exc),
            ctx=ctx,
            param=param,
        ) from exc


@beartype
def _validate_dimension_vector(
    ctx: click.Context,
    param: click.Parameter,
    value: str | None,
) -> tuple[int, ...] | None:
    """
    Parse comma separated non-negative integers.
    """
    if value is None:
        return value

    try:
        dimensions = tuple(int(part) for part in value.split(sep=","))
    except ValueError:
        dimensions = (-1,)
    if any(dimension < 0 for dimension in dimensions):
        message = f"'{value}' is not a comma separated list of dimensions."
        raise click.BadParameter(message=message, ctx=ctx, param=param)
    return dimensions


@beartype
def _with_options(
    *decorators: Callable[[Any], Any],
) -> Callable[[Callable[..., T]], Callable[..., T]]:
    """
    Apply several click decorators at once.
    """

    def apply(function: Callable[..., T]) -> Callable[..., T]:
        for decorator in reversed(decorators):
            function = decorator(function)
        return function

    return apply


_path_argument = click.argument(
    "path",
    type=click.Path(exists=True, path_type=Path, dir_okay=False),
)

_format_option = click.option(
    "output_format",
    "--format",
    type=click.Choice(choices=[item.value for item in _OutputFormat]),
    default=_OutputFormat.TEXT.value,
    show_default=True,
    help="How to print the report.",
    callback=_to_output_format,
)

_workers_option = click.option(
    "--workers",
    type=click.IntRange(min=1),
    default=None,
    help=(
        "Search in this many processes. By default the search runs in "
        "this process."
    ),
)

_max_bound_option = click.option(
    "--max-bound",
    type=click.IntRange(min=1),
    default=DEFAULT_MAX_BOUND,
    show_default=True,
    help=(
        "The largest nilpotency bound N, with every path of length N in the "
        "ideal, to look for before giving up on admissibility."
    ),
)

_allow_disconnected_option = click.option(
    "--allow-disconnected",
    is_flag=True,
    default=False,
    help="Accept a quiver whose underlying graph is not connected.",
)

_verbose_option = click.option(
    "--verbose",
    "-v",
    is_flag=True,
    default=False,
    help="Enable verbose output.",
)

_common_options = _with_options(
    _path_argument,
    _max_bound_option,
    _allow_disconnected_option,
    _verbose_option,
)


@beartype
def _load(
    *,
    path: Path,
    allow_disconnected: bool,
) -> tuple[bytes, BoundQuiver]:
    """
    Read a ``.bq`` document, exiting with a parse error status when it is
    not valid.
    """
    content = path.read_bytes()
    try:
        text = content.decode(encoding="utf-8")
    except UnicodeError:
        _fail(
            message=f"'{path}' is not UTF-8 encoded.",
            exit_code=_ExitCode.FAILURE,
        )
    try:
        bound_quiver = parse_bound_quiver(
            text=text,
            allow_disconnected=allow_disconnected,
        )
    except ParseError as exc:
        _fail(
            message=f"Error parsing '{path}': {exc}",
            exit_code=_ExitCode.FAILURE,
        )
    return content, bound_quiver


@beartype
def _build(
    *,
    bound_quiver: BoundQuiver,
    max_bound: int,
    verbose: bool,
) -> AlgebraBasis:
    """
    Build the algebra, exiting with the not admissible status when there is
    no nilpotency bound.
    """
    try:
        algebra = build_algebra(bound_quiver=bound_quiver, max_bound=max_bound)
    except NotAdmissibleError as exc:
        _fail(message=str(object=exc), exit_code=_ExitCode.NOT_ADMISSIBLE)
    if verbose:
        _log_info(
            message=(
                f"Every path of length {algebra.nilpotency_bound} lies in "
                f"the ideal; dim = {algebra.dimension}."
            ),
        )
    return algebra


@beartype
def _emit(*, report: Report, output_format: _OutputFormat) -> None:
    """
    Print a report to standard output.
    """
    text = (
        report.to_json()
        if output_format is _OutputFormat.JSON
        else report.to_text()
    )
    click.echo(message=text, nl=False)


@beartype
def _emit_bound_quiver(*, bound_quiver: BoundQuiver) -> None:
    """
    Print a ``.bq`` document, warning when it is disconnected.
    """
    if not bound_quiver.quiver.is_connected:
        _log_warning(
            message=(
                "The result is disconnected; read it back with "
                "--allow-disconnected."
            ),
        )
    click.echo(
        message=serialize_bound_quiver(bound_quiver=bound_quiver),
        nl=False,
    )


@click.group(name="quiverlab", cls=_Group)
@click.version_option(version=__version__)
def main() -> None:
    """Analyze bound quiver algebras.

    Inputs are ``.bq`` documents declaring vertices, arrows, relations and
    optionally a field.
    """


@main.command(name="analyze")
@_common_options
@_format_option
@beartype
def analyze(
    *,
    path: Path,
    max_bound: int,
    allow_disconnected: bool,
    verbose: bool,
    output_format: _OutputFormat,
) -> None:
    """Report nodes, distributivity and minimal relation counts."""
    content, bound_quiver = _load(
        path=path,
        allow_disconnected=allow_disconnected,
    )
    algebra = _build(
        bound_quiver=bound_quiver,
        max_bound=max_bound,
        verbose=verbose,
    )
    report = Report(
        digest=digest(content=content),
        analysis=analysis_section(bound_quiver=bound_quiver, algebra=algebra),
    )
    _emit(report=report, output_format=output_format)


@main.command(name="classify")
@_common_options
@_format_option
@click.option(
    "--probe",
    "probe_budget",
    type=click.IntRange(min=0),
    default=None,
    help=(
        "For unrecognized inputs, look for quotients by at most this many "
        "arrows with a component in a tau-tilting infinite family. "
        f"{DEFAULT_PROBE_BUDGET} checks the input itself. "
        "By default no quotient is probed."
    ),
)
@_workers_option
@click.option(
    "--witness",
    is_flag=True,
    default=False,
    help=(
        "Attach a verified one-parameter family of bricks to tau-tilting "
        "infinite verdicts. Requires --field."
    ),
)
@click.option(
    "--field",
    "witness_field",
    type=str,
    default=None,
    help="The prime field F<p> to build the brick family over.",
    callback=_validate_field,
)
@beartype
def classify_command(
    *,
    path: Path,
    max_bound: int,
    allow_disconnected: bool,
    verbose: bool,
    output_format: _OutputFormat,
    probe_budget: int | None,
    workers: int | None,
    witness: bool,
    witness_field: Field | None,
) -> None:
    """Recognize the family and decide tau-tilting finiteness."""
    if witness and witness_field is None:
        message = "--witness requires --field."
        raise click.UsageError(message=message)
    if witness_field is not None and not witness_field.is_finite:
        message = "--field must be a prime field F<p> for brick families."
        raise click.UsageError(message=message)
    content, bound_quiver = _load(
        path=path,
        allow_disconnected=allow_disconnected,
    )
    algebra = _build(
        bound_quiver=bound_quiver,
        max_bound=max_bound,
        verbose=verbose,
    )

    def log_subset(subset: tuple[str, ...]) -> None:
        _log_info(
            message=f"Probing the quotient by {{{', '.join(subset)}}}.",
        )

    try:
        result = classify(
            bound_quiver=bound_quiver,
            max_bound=max_bound,
            witness_field=witness_field if witness else None,
            probe_budget=probe_budget,
            on_subset=log_subset if verbose else None,
            workers=workers,
        )
    except PreconditionError as exc:
        raise click.UsageError(message=str(object=exc)) from exc
    except VerificationError as exc:
        _fail(message=str(object=exc), exit_code=_ExitCode.FAILURE)
    if verbose:
        for step in result.family.resolutions:
            _log_info(
                message=(
                    f"Resolved node '{step.node}' into '{step.positive}' "
                    f"and '{step.negative}'."
                ),
            )
    report = Report(
        digest=digest(content=content),
        analysis=analysis_section(bound_quiver=bound_quiver, algebra=algebra),
        classification=classification_section(result=result),
        brick_family=(
            None
            if result.witness is None
            else brick_family_section(family=result.witness)
        ),
    )
    _emit(report=report, output_format=output_format)


@main.command(name="resolve")
@_common_options
@click.option(
    "--node",
    type=str,
    default=None,
    help="The node to resolve. By default every node is resolved.",
)
@beartype
def resolve_command(
    *,
    path: Path,
    max_bound: int,
    allow_disconnected: bool,
    verbose: bool,
    node: str | None,
) -> None:
    """Split nodes into a sink and a source and print the result."""
    _, bound_quiver = _load(path=path, allow_disconnected=allow_disconnected)
    _build(bound_quiver=bound_quiver, max_bound=max_bound, verbose=verbose)
    try:
        if node is None:
            resolved, steps = resolve_all(
                bound_quiver=bound_quiver,
                max_bound=max_bound,
            )
        else:
            resolved = resolve_node(
                bound_quiver=bound_quiver,
                node=node,
                max_bound=max_bound,
            )
    except NotANodeError as exc:
        raise click.BadParameter(
            message=str(object=exc),
            param_hint="'--node'",
        ) from exc
    except GluingError as exc:
        raise click.UsageError(message=str(object=exc)) from exc
    if node is not None:
        steps = (
            ResolutionStep(
                node=node,
                positive=f"{node}+",
                negative=f"{node}-",
            ),
        )
    if verbose:
        for step in steps:
            _log_info(
                message=(
                    f"Resolved node '{step.node}' into '{step.positive}' "
                    f"and '{step.negative}'."
                ),
            )
    _emit_bound_quiver(bound_quiver=resolved)


@main.command(name="glue")
@_common_options
@click.option("--source", type=str, required=True, help="A source vertex.")
@click.option("--sink", type=str, required=True, help="A sink vertex.")
@click.option(
    "--name",
    type=str,
    default=None,
    help=(
        "The id of the glued vertex. By default the source id followed by "
        "the sink id."
    ),
)
@beartype
def glue_command(
    *,
    path: Path,
    max_bound: int,
    allow_disconnected: bool,
    verbose: bool,
    source: str,
    sink: str,
    name: str | None,
) -> None:
    """Identify a source with a sink and print the result."""
    _, bound_quiver = _load(path=path, allow_disconnected=allow_disconnected)
    _build(bound_quiver=bound_quiver, max_bound=max_bound, verbose=verbose)
    try:
        cross_component = is_cross_component_gluing(
            bound_quiver=bound_quiver,
            source=source,
            sink=sink,
        )
        glued = glue(
            bound_quiver=bound_quiver,
            source=source,
            sink=sink,
            name=name,
        )
    except GluingError as exc:
        raise click.UsageError(message=str(object=exc)) from exc
    if cross_component:
        _log_warning(
            message=(
                f"'{source}' and '{sink}' lie in different components; the "
                "glued algebra is not of the kind the classifier recognizes "
                "as glued from one family."
            ),
        )
    _build(bound_quiver=glued, max_bound=max_bound, verbose=verbose)
    _emit_bound_quiver(bound_quiver=glued)


@main.command(name="family")
@_common_options
@_format_option
@click.option(
    "--vertex",
    type=str,
    default=None,
    help=(
        "The vertex e with e Λ e the base field. "
        "By default the first suitable pair of vertices is used."
    ),
)
@click.option(
    "--target",
    type=str,
    default=None,
    help="The vertex f such that e_f Λ e_e has a layer of dimension two.",
)
@click.option(
    "--field",
    "base_field",
    type=str,
    required=True,
    help="The prime field F<p> to build the bricks over.",
    callback=_validate_field,
)
@click.option(
    "--count",
    type=click.IntRange(min=1),
    default=None,
    show_default="the field order",
    help="How many parameters 0, 1, ... to build bricks for.",
)
@click.option(
    "--layer",
    type=click.IntRange(min=0),
    default=None,
    help="The layer to take u and v from. By default the first wide one.",
)
@beartype
def family_command(
    *,
    path: Path,
    max_bound: int,
    allow_disconnected: bool,
    verbose: bool,
    output_format: _OutputFormat,
    vertex: str | None,
    target: str | None,
    base_field: Field,
    count: int | None,
    layer: int | None,
) -> None:
    """Build and verify a one-parameter family of bricks."""
    if not base_field.is_finite:
        message = "--field must be a prime field F<p>."
        raise click.BadParameter(message=message, param_hint="'--field'")
    order = base_field.characteristic
    count = order if count is None else count
    if count > order:
        message = (
            f"{base_field.name} has {order} elements, fewer than the "
            f"{count} parameters requested."
        )
        raise click.BadParameter(message=message, param_hint="'--count'")
    if (vertex is None) != (target is None):
        message = "Give both --vertex and --target, or neither."
        raise click.UsageError(message=message)
    content, parsed = _load(path=path, allow_disconnected=allow_disconnected)
    bound_quiver = over_field(bound_quiver=parsed, base_field=base_field)
    algebra = _build(
        bound_quiver=bound_quiver,
        max_bound=max_bound,
        verbose=verbose,
    )
    try:
        if vertex is None or target is None:
            vertex, target = bongartz_pair(algebra=algebra)
        for name in (vertex, target):
            if name not in bound_quiver.vertices:
                message = f"Unknown vertex '{name}'."
                raise click.UsageError(message=message)
        family = bongartz_family(
            bound_quiver=bound_quiver,
            algebra=algebra,
            vertex=vertex,
            target=target,
            parameters=list(range(count)),
            layer=layer,
        )
    except PreconditionError as exc:
        raise click.UsageError(message=str(object=exc)) from exc
    except VerificationError as exc:
        _fail(message=str(object=exc), exit_code=_ExitCode.FAILURE)
    if verbose:
        _log_info(
            message=(
                f"Built {len(family.members)} bricks from e = {vertex}, "
                f"f = {target}."
            ),
        )
    report = Report(
        digest=digest(content=content),
        brick_family=brick_family_section(family=family),
    )
    _emit(report=report, output_format=output_format)


@main.command(name="bricks")
@_common_options
@_format_option
@click.option(
    "--dim",
    "dimension_vector",
    type=str,
    default=None,
    help=(
        "A dimension vector such as 1,2,1, in the sorted order of the "
        "vertex ids."
    ),
    callback=_validate_dimension_vector,
)
@click.option(
    "--max-total",
    type=click.IntRange(min=1),
    default=None,
    help="Enumerate every dimension vector of at most this total dimension.",
)
@click.option(
    "--field",
    "base_field",
    type=str,
    required=True,
    help="The prime field F<p> to enumerate over.",
    callback=_validate_field,
)
@click.option(
    "--budget",
    type=click.IntRange(min=1),
    default=DEFAULT_CENSUS_BUDGET,
    show_default=True,
    help="The most matrix tuples to examine per dimension vector.",
)
@_workers_option
@beartype
def bricks_command(
    *,
    path: Path,
    max_bound: int,
    allow_disconnected: bool,
    verbose: bool,
    output_format: _OutputFormat,
    dimension_vector: tuple[int, ...] | None,
    max_total: int | None,
    base_field: Field,
    budget: int,
    workers: int | None,
) -> None:
    """Count bricks up to isomorphism by exhaustive enumeration."""
    if (dimension_vector is None) == (max_total is None):
        message = "Give exactly one of --dim and --max-total."
        raise click.UsageError(message=message)
    if not base_field.is_finite:
        message = "--field must be a prime field F<p>."
        raise click.BadParameter(message=message, param_hint="'--field'")
    content, parsed = _load(path=path, allow_disconnected=allow_disconnected)
    bound_quiver = over_field(bound_quiver=parsed, base_field=base_field)
    _build(bound_quiver=bound_quiver, max_bound=max_bound, verbose=verbose)
    vertices = bound_quiver.vertices
    if dimension_vector is not None and len(dimension_vector) != len(
        vertices,
    ):
        message = (
            f"Expected {len(vertices)} dimensions, one for each of "
            f"{', '.join(vertices)}."
        )
        raise click.BadParameter(message=message, param_hint="'--dim'")

    def log_vector(vector: tuple[int, ...]) -> None:
        dimensions = dict(zip(vertices, vector, strict=True))
        size = census_size(bound_quiver=bound_quiver, dimensions=dimensions)
        _log_info(
            message=(
                f"Enumerating dimension vector {vector}: {size} matrix "
                "tuples."
            ),
        )

    def log_block(start: int, stop: int) -> None:
        _log_info(message=f"Merged candidates {start} to {stop - 1}.")

    blocks = CENSUS_BLOCKS_PER_WORKER * workers if workers is not None else 1

    classes: dict[tuple[int, ...], list[Representation]] = {}
    try:
        if max_total is not None:
            classes = census_up_to(
                bound_quiver=bound_quiver,
                max_total=max_total,
                budget=budget,
                on_vector=log_vector if verbose else None,
                blocks=blocks,
                workers=workers,
                on_block=log_block if verbose else None,
            )
        elif dimension_vector is not None:
            if verbose:
                log_vector(vector=dimension_vector)
            classes[dimension_vector] = enumerate_bricks(
                bound_quiver=bound_quiver,
                dimensions=dict(zip(vertices, dimension_vector, strict=True)),
                budget=budget,
                blocks=blocks,
                workers=workers,
                on_block=log_block if verbose else None,
            )
    except BudgetExceededError as exc:
        _fail(message=str(object=exc), exit_code=_ExitCode.BUDGET_EXCEEDED)
    report = Report(
        digest=digest(content=content),
        census=census_section(bound_quiver=bound_quiver, classes=classes),
    )
    _emit(report=report, output_format=output_format)
