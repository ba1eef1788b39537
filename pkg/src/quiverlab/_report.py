"""
Reports: the JSON and text output of the command line tool.
"""

import hashlib
import json
from collections.abc import Mapping, Sequence
from dataclasses import asdict, dataclass
from typing import Any

from beartype import beartype

from ._algebra import (
    AlgebraBasis,
    distributivity_cross_check,
    is_distributive,
    minimal_relation_count,
)
from ._bricks import BrickFamily
from ._classifier import ClassificationResult, FamilyTag
from ._errors import ReportSchemaError
from ._quiver import BoundQuiver, is_triangular, sources_and_sinks
from ._representations import Representation
from ._structure import find_nodes

SCHEMA_VERSION = 1


@beartype
def digest(content: bytes) -> str:
    """
    The SHA-256 hex digest of an input document.
    """
    return hashlib.sha256(content).hexdigest()


@beartype
@dataclass(frozen=True)
class Report:
    """
    The sections produced by one command, made of JSON values only.
    """

    digest: str
    analysis: dict[str, Any] | None = None
    classification: dict[str, Any] | None = None
    brick_family: dict[str, Any] | None = None
    census: dict[str, Any] | None = None
    schema: int = SCHEMA_VERSION

    def to_json(self) -> str:
        """
        The report as JSON with sorted keys and two-space indentation.
        """
        return json.dumps(asdict(self), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        """
        Read a report written by ``to_json``.

        Raises:
            ReportSchemaError: The document has another schema version or
                unknown keys.
        """
        data = json.loads(text)
        if not isinstance(data, dict) or data.get("schema") != SCHEMA_VERSION:
            message = f"Expected a report with schema {SCHEMA_VERSION}."
            raise ReportSchemaError(message)
        try:
            return cls(**data)
        except TypeError as exc:
            raise ReportSchemaError(str(exc)) from exc

    def to_text(self) -> str:
        """
        The report as indented ``key: value`` lines.
        """
        lines = [f"digest: {self.digest}"]
        for title, section in (
            ("analysis", self.analysis),
            ("classification", self.classification),
            ("brick family", self.brick_family),
            ("census", self.census),
        ):
            if section is not None:
                lines.append(f"{title}:")
                lines.extend(_text_lines(value=section, indent=1))
        return "\n".join(lines) + "\n"


@beartype
def _text_lines(value: Any, indent: int) -> list[str]:
    """
    Nested mappings and lists as indented lines.
    """
    prefix = "  " * indent
    lines: list[str] = []
    if isinstance(value, Mapping):
        for key in sorted(value):
            item = value[key]
            if isinstance(item, Mapping | list) and item:
                lines.append(f"{prefix}{key}:")
                lines.extend(_text_lines(value=item, indent=indent + 1))
            else:
                lines.append(f"{prefix}{key}: {_scalar_text(value=item)}")
    else:
        for item in value:
            if isinstance(item, Mapping | list) and item:
                lines.append(f"{prefix}-")
                lines.extend(_text_lines(value=item, indent=indent + 1))
            else:
                lines.append(f"{prefix}- {_scalar_text(value=item)}")
    return lines


@beartype
def _scalar_text(value: Any) -> str:
    """
    A leaf value as text.
    """
    if value is None:
        return "none"
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, Mapping | list):
        return "[]" if isinstance(value, list) else "{}"
    return str(value)


@beartype
def analysis_section(
    bound_quiver: BoundQuiver,
    algebra: AlgebraBasis,
) -> dict[str, Any]:
    """
    Sources, sinks, nodes, the algebra dimension, distributivity and the
    minimal relation counts.
    """
    sources, sinks = sources_and_sinks(bound_quiver=bound_quiver)
    nodes = find_nodes(bound_quiver=bound_quiver, algebra=algebra)
    distributive, witness = is_distributive(algebra=algebra)
    local_uniserial, one_sided_cyclic = distributivity_cross_check(
        algebra=algebra,
    )
    counts, total = minimal_relation_count(algebra=algebra)
    return {
        "vertices": list(bound_quiver.vertices),
        "sources": sorted(sources),
        "sinks": sorted(sinks),
        "nodes": list(nodes.nodes),
        "node_paths": {
            node: [str(path) for path in paths]
            for node, paths in nodes.witnesses.items()
        },
        "connected": bound_quiver.quiver.is_connected,
        "triangular": is_triangular(quiver=bound_quiver.quiver),
        "field": bound_quiver.field.name,
        "nilpotency_bound": algebra.nilpotency_bound,
        "dimension": algebra.dimension,
        "distributive": distributive,
        "distributivity_witness": (
            None
            if witness is None
            else {
                "target": witness[0],
                "source": witness[1],
                "layer": witness[2],
            }
        ),
        "local_uniserial": local_uniserial,
        "one_sided_cyclic": one_sided_cyclic,
        "relation_counts": [
            {"source": source, "target": target, "count": count}
            for (source, target), count in sorted(counts.items())
            if count
        ],
        "relation_total": total,
    }


@beartype
def _family_tag(family: FamilyTag) -> dict[str, Any]:
    """
    A family tag as JSON values.
    """
    return {
        "name": str(family),
        "kind": family.kind.value,
        "parameters": list(family.parameters),
        "orientation": family.orientation,
        "components": [
            _family_tag(family=component) for component in family.components
        ],
        "resolutions": [
            {
                "node": step.node,
                "positive": step.positive,
                "negative": step.negative,
            }
            for step in family.resolutions
        ],
        "isomorphism": (
            None
            if family.isomorphism is None
            else {
                "vertices": dict(family.isomorphism.vertices),
                "arrows": dict(family.isomorphism.arrows),
            }
        ),
        "walk": [
            {"arrow": name, "direction": direction}
            for name, direction in family.walk
        ],
    }


@beartype
def classification_section(result: ClassificationResult) -> dict[str, Any]:
    """
    The family, verdict, certificates and preprojective flag.
    """
    return {
        "family": _family_tag(family=result.family),
        "tau_verdict": result.tau_verdict.value,
        "certificates": [
            {
                "name": certificate.name,
                "holds": certificate.holds,
                "detail": certificate.detail,
                "caveat": certificate.caveat,
            }
            for certificate in result.certificates
        ],
        "preprojective_component": result.preprojective_component.value,
        "notes": list(result.notes),
    }


@beartype
def module_section(module: Representation) -> dict[str, Any]:
    """
    A representation as its dimension vector and matrices, with entries
    written as exact rationals.
    """
    base_field = module.bound_quiver.field
    return {
        "dimensions": dict(module.dimensions),
        "maps": {
            name: [
                [str(base_field.to_fraction(element=entry)) for entry in row]
                for row in module.entries(arrow=name)
            ]
            for name in sorted(module.maps)
        },
    }


@beartype
def brick_family_section(family: BrickFamily) -> dict[str, Any]:
    """
    How a brick family was built, its members and their verification.
    """
    base_field = family.bound_quiver.field
    return {
        "construction": family.construction,
        "details": dict(family.details),
        "field": base_field.name,
        "parameters": [
            str(base_field.to_fraction(element=value))
            for value in family.parameters
        ],
        "vertex_order": list(family.bound_quiver.vertices),
        "dimension_vector": list(family.dimension_vector),
        "bricks_verified": True,
        "pairwise_non_isomorphic": family.pairwise_non_isomorphic.value,
        "members": [
            module_section(module=member) for member in family.members
        ],
    }


@beartype
def census_section(
    bound_quiver: BoundQuiver,
    classes: Mapping[tuple[int, ...], Sequence[Representation]],
) -> dict[str, Any]:
    """
    Brick counts and representatives per dimension vector.
    """
    return {
        "field": bound_quiver.field.name,
        "vertex_order": list(bound_quiver.vertices),
        "total": sum(len(bricks) for bricks in classes.values()),
        "classes": [
            {
                "dimension_vector": list(vector),
                "count": len(bricks),
                "representatives": [
                    module_section(module=brick) for brick in bricks
                ],
            }
            for vector, bricks in classes.items()
        ],
    }
